//! Local Erasure Repair
//!
//! This example demonstrates:
//! - Encoding a message and erasing symbols of the codeword
//! - Group-local repair that reads only the group's survivors
//! - The delta - 1 budget and the global fallback beyond it
//! - Repair plans and how many symbols each step touches
//!
//! Run with: cargo run --example local_repair

use cyclic_lrc::construct::{construct_lrc, ConstructOptions, Family, LrcParams};
use cyclic_lrc::field::FieldCtx;
use cyclic_lrc::repair::{
    global_erasure_decode, local_repair, local_repair_coord, repair_cost, repair_plan, RepairStep,
    Word,
};
use cyclic_lrc::Error;

fn main() {
    println!("=== Local Erasure Repair ===\n");

    single_symbol();
    several_per_group();
    the_budget();
    a_mixed_plan();
}

/// The showcase code: [65, 12] over GF(64), 13 groups, delta = 4.
fn showcase() -> (std::sync::Arc<FieldCtx>, cyclic_lrc::construct::LrcCode) {
    let base = FieldCtx::shared_for(64).unwrap();
    let params = LrcParams {
        q: 64,
        n: 65,
        k: 12,
        r: 2,
        delta: 4,
        b: 1,
        family: Family::QPlus1Delta,
    };
    let lrc = construct_lrc(&base, &params, &ConstructOptions::default()).unwrap();
    (base, lrc)
}

fn single_symbol() {
    println!("--- Losing one symbol ---\n");

    let (base, lrc) = showcase();
    let message: Vec<u32> = (0..12).map(|i| (i * 5 + 1) % 64).collect();
    let codeword = lrc.code().systematic_encode(&message);

    let mut word = Word::from_codeword(base.id(), &codeword);
    word.erase(&[30]);
    println!("erased coordinate 30 (group {})", lrc.repair_groups().group_of(30));
    println!("cost: read {} in-group symbols", repair_cost(&lrc, &word, lrc.repair_groups().group_of(30)));

    let value = local_repair_coord(&lrc, &mut word, 30).unwrap();
    println!("restored value {:x}, correct: {}\n", value, value == codeword[30]);
}

fn several_per_group() {
    println!("--- Up to delta - 1 erasures in one group ---\n");

    let (base, lrc) = showcase();
    let message: Vec<u32> = (0..12).map(|i| (7 * i + 3) % 64).collect();
    let codeword = lrc.code().systematic_encode(&message);

    // group 2 holds coordinates {2, 15, 28, 41, 54}; erase three of them
    let coords = lrc.repair_groups().group_coords(2).to_vec();
    println!("group 2 coordinates: {coords:?}");
    let mut word = Word::from_codeword(base.id(), &codeword);
    word.erase(&coords[..3]);
    println!("erased {:?}", &coords[..3]);

    let repaired = local_repair(&lrc, &mut word, 2).unwrap();
    println!("locally repaired {repaired:?}");
    println!("word restored exactly: {}\n", word.to_codeword().unwrap() == codeword);
}

fn the_budget() {
    println!("--- One erasure past the local budget ---\n");

    let (base, lrc) = showcase();
    let message = vec![1; 12];
    let codeword = lrc.code().systematic_encode(&message);

    let coords = lrc.repair_groups().group_coords(0).to_vec();
    let mut word = Word::from_codeword(base.id(), &codeword);
    word.erase(&coords[..4]);

    match local_repair(&lrc, &mut word, 0) {
        Err(Error::TooManyLocalErasures { group, count, max }) => {
            println!("group {group}: {count} erasures exceed the local budget {max}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // the global decoder still recovers them, reading the whole word
    let repaired = global_erasure_decode(lrc.code(), &mut word).unwrap();
    println!("global decode repaired {repaired:?}");
    println!("word restored exactly: {}\n", word.to_codeword().unwrap() == codeword);
}

fn a_mixed_plan() {
    println!("--- A mixed repair plan ---\n");

    let (base, lrc) = showcase();
    let message: Vec<u32> = (0..12).map(|i| (11 * i + 2) % 64).collect();
    let codeword = lrc.code().systematic_encode(&message);

    // group 1 loses two symbols (local), group 3 loses four (global)
    let g1 = lrc.repair_groups().group_coords(1).to_vec();
    let g3 = lrc.repair_groups().group_coords(3).to_vec();
    let mut word = Word::from_codeword(base.id(), &codeword);
    word.erase(&g1[..2]);
    word.erase(&g3[..4]);
    println!("erased {:?} and {:?}", &g1[..2], &g3[..4]);

    for step in repair_plan(&lrc, &mut word).unwrap() {
        match step {
            RepairStep::Local {
                group,
                repaired,
                symbols_read,
            } => println!("local step: group {group} repaired {repaired:?} reading {symbols_read} symbols"),
            RepairStep::Global {
                repaired,
                symbols_read,
            } => println!("global step: repaired {repaired:?} reading {symbols_read} symbols"),
        }
    }
    println!("word restored exactly: {}", word.to_codeword().unwrap() == codeword);
}
