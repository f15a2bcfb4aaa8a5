//! Cyclic MDS Codes for Lengths Dividing q + 1
//!
//! This example demonstrates:
//! - Symmetric windows as defining sets: centered at 0 or at n/2
//! - Checking d = n - k + 1 by the bound sandwich and by enumeration
//! - The parity obstruction: odd q, even n, even k admits no such code
//! - Enumerating every (n, k) pair a field supports
//!
//! Run with: cargo run --example mds_family

use cyclic_lrc::construct::{check_mds, construct_mds_q_plus_1, feasible_mds, DVariant, ExhaustivePolicy};
use cyclic_lrc::cyclic::DEFAULT_ENUM_CAP;
use cyclic_lrc::field::FieldCtx;
use cyclic_lrc::Error;

fn main() {
    println!("=== Cyclic MDS Codes ===\n");

    windows();
    both_layouts();
    the_obstruction();
    whole_family();
}

fn windows() {
    println!("--- Symmetric windows over GF(8), n = 9 ---\n");

    let base = FieldCtx::shared_for(8).unwrap();
    for k in [2, 3, 4, 5] {
        let (code, rule) = construct_mds_q_plus_1(&base, 9, k, DVariant::ZeroCentered).unwrap();
        let check = check_mds(&code, k, ExhaustivePolicy::Require, DEFAULT_ENUM_CAP).unwrap();
        println!(
            "[9, {k}] rule {rule:<12} Z (signed) = {:?}, d = {} = n - k + 1: {}",
            code.zeros().signed_reps(),
            check.d_exhaustive.unwrap(),
            check.verdict
        );
    }
    println!();
}

fn both_layouts() {
    println!("--- Odd k over an even length: two valid windows ---\n");

    // 12 | 11 + 1; with k odd both the 0-centered and n/2-centered windows
    // are symmetric, and both reach the same distance
    let base = FieldCtx::shared_for(11).unwrap();
    for variant in [DVariant::ZeroCentered, DVariant::HalfCentered] {
        let (code, rule) = construct_mds_q_plus_1(&base, 12, 3, variant).unwrap();
        let check = check_mds(&code, 3, ExhaustivePolicy::Require, DEFAULT_ENUM_CAP).unwrap();
        println!(
            "[12, 3] rule {rule:<12} Z (signed) = {:?}, d = {}",
            code.zeros().signed_reps(),
            check.d_exhaustive.unwrap()
        );
    }
    println!();
}

fn the_obstruction() {
    println!("--- The parity obstruction ---\n");

    // over odd q and even n, an even k would need a symmetric window of even
    // size, which cannot exist; the constructor reports it as nonexistent
    let base = FieldCtx::shared_for(27).unwrap();
    match construct_mds_q_plus_1(&base, 28, 4, DVariant::ZeroCentered) {
        Err(Error::NonexistentMDS { q, n, k }) => {
            println!("q = {q}, n = {n}, k = {k}: no cyclic MDS code exists");
        }
        other => println!("unexpected: {other:?}"),
    }

    // flip any one parity and the construction goes through
    let (_, rule) = construct_mds_q_plus_1(&base, 28, 5, DVariant::ZeroCentered).unwrap();
    println!("q = 27, n = 28, k = 5 works via rule {rule}");
    let base16 = FieldCtx::shared_for(16).unwrap();
    let (_, rule) = construct_mds_q_plus_1(&base16, 17, 4, DVariant::ZeroCentered).unwrap();
    println!("q = 16, n = 17, k = 4 works via rule {rule}\n");
}

fn whole_family() {
    println!("--- Everything GF(9) supports up to n = 10 ---\n");

    for inst in feasible_mds(9, 10).unwrap() {
        println!("  [{}, {}] via {}", inst.n, inst.k, inst.rule);
    }
}
