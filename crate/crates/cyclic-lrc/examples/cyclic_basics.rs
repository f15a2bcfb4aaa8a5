//! Cyclic Code Basics
//!
//! This example demonstrates:
//! - Defining sets, conjugacy closure, and the symmetric-set criterion
//! - The spaced-run distance bound and how spacing changes it
//! - Building a cyclic code and inspecting its generator polynomial
//! - Dual codes and full distance enumeration
//!
//! Run with: cargo run --example cyclic_basics

use cyclic_lrc::cyclic::{CyclicCode, DefiningSet, DEFAULT_ENUM_CAP};
use cyclic_lrc::field::FieldCtx;

fn main() {
    println!("=== Cyclic Code Basics ===\n");

    defining_sets();
    run_bound();
    a_full_code();
    splitting_through_the_extension();
}

fn defining_sets() {
    println!("--- Defining sets and conjugacy closure ---\n");

    // exponents live mod n; negative inputs are reduced
    let z = DefiningSet::new(9, [0, 1, -1]);
    println!("Z = {:?} over n = 9", z.to_vec());
    println!("signed form: {:?}", z.signed_reps());

    // a GF(8) code needs Z stable under i -> 8i = -i (mod 9)
    println!("closed under *8 mod 9: {}", z.is_conjugacy_closed(8));
    let open = DefiningSet::new(9, [1, 2]);
    println!(
        "{{1, 2}} closed: {} (closure = {:?})",
        open.is_conjugacy_closed(8),
        open.conjugacy_closure(8).to_vec()
    );

    // over a length dividing q + 1, closure is exactly mirror symmetry
    println!("{{0, 1, 8}} symmetric: {}\n", z.is_symmetric());
}

fn run_bound() {
    println!("--- The spaced-run distance bound ---\n");

    // a run of length L, at any spacing coprime to n, forces d >= L + 1
    let plain = DefiningSet::new(9, [0, 1, 2, 3]);
    println!("{{0..3}} at spacing 1: bound {}", plain.bch_lower_bound());

    // the same exponents spread with spacing 2 still form one run
    let spaced = DefiningSet::new(9, [0, 2, 4, 6]);
    println!("{{0, 2, 4, 6}} at spacing 2: bound {}", spaced.bch_lower_bound());

    // gaps break the run
    let gappy = DefiningSet::new(9, [0, 1, 3, 4]);
    println!("{{0, 1, 3, 4}}: bound {}\n", gappy.bch_lower_bound());
}

fn a_full_code() {
    println!("--- A [9, 4] code over GF(8) ---\n");

    // {0, 3, 4, 5, 6} is closed under *8 = -1 mod 9: 3 <-> 6 and 4 <-> 5
    let base = FieldCtx::shared_for(8).unwrap();
    let zeros = DefiningSet::new(9, [0, 3, 4, 5, 6]);
    let code = CyclicCode::from_defining_set(&base, 9, zeros).unwrap();

    println!("n = {}, k = {}", code.n(), code.k());
    println!("generator polynomial coefficients (low first): {:?}", code.generator_poly().coeffs());
    println!("run bound: d >= {}", code.bch_lower_bound());
    let d = code.min_distance_exhaustive(DEFAULT_ENUM_CAP).unwrap();
    println!("enumerated distance: d = {d}");

    // the dual of a cyclic code is cyclic with the mirrored complement set
    let dual = code.dual_code();
    println!(
        "dual: [{}, {}] with Z = {:?}",
        dual.n(),
        dual.k(),
        dual.zeros().to_vec()
    );
    let dd = dual.min_distance_exhaustive(DEFAULT_ENUM_CAP).unwrap();
    println!("dual distance: {dd}\n");
}

fn splitting_through_the_extension() {
    println!("--- Lengths dividing q + 1 split over GF(q^2) ---\n");

    // 10 does not divide 9 - 1, but divides 9 + 1: the roots live in GF(81)
    let base = FieldCtx::shared_for(9).unwrap();
    let zeros = DefiningSet::new(10, [0, 1, 9]);
    let code = CyclicCode::from_defining_set(&base, 10, zeros).unwrap();

    println!(
        "[{}, {}] over {}, splitting order {}",
        code.n(),
        code.k(),
        code.base_field().id(),
        code.splitting_order()
    );
    println!("root field: {}", code.splitting_field().id());
    // the generator still lands in the base field because Z is symmetric
    println!(
        "generator coefficients stay in GF(9): {:?}",
        code.generator_poly().coeffs()
    );
    println!("d >= {}", code.bch_lower_bound());
}
