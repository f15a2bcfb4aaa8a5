//! Finite Field Tour
//!
//! This example demonstrates:
//! - Building prime and prime-power fields from a single size argument
//! - Arithmetic, inverses, and the declared multiplicative generator
//! - Digit vectors over the prime subfield
//! - Roots of unity and the cached quadratic extension
//!
//! Run with: cargo run --example field_tour

use cyclic_lrc::field::FieldCtx;

fn main() {
    println!("=== Finite Field Tour ===\n");

    prime_field();
    extension_field();
    roots_of_unity();
}

fn prime_field() {
    println!("--- GF(13): a prime field ---\n");

    let ctx = FieldCtx::shared_for(13).unwrap();
    println!("field: {}, modulus {:?}", ctx.id(), ctx.modulus());
    println!("declared generator: {}", ctx.generator());

    let a = ctx.elem(7);
    let b = ctx.elem(9);
    println!("7 + 9 = {}", ctx.add(a, b));
    println!("7 * 9 = {}", ctx.mul(a, b));
    println!("7^-1  = {}", ctx.inv(a));
    println!("7^5   = {}", ctx.pow(a, 5));

    // the generator really has full order: its powers hit every nonzero code
    let g = ctx.generator();
    let mut seen = vec![false; 13];
    let mut x = ctx.one();
    for _ in 0..12 {
        seen[x.code() as usize] = true;
        x = ctx.mul(x, g);
    }
    let nonzero = seen.iter().filter(|&&s| s).count();
    println!("distinct powers of {}: {nonzero} (expected 12)\n", g);
}

fn extension_field() {
    println!("--- GF(64) = GF(2^6): an extension field ---\n");

    let ctx = FieldCtx::shared_for(64).unwrap();
    println!("field: {}", ctx.id());
    println!("modulus (low degree first): {:?}", ctx.modulus());

    // element codes are just digit vectors over GF(2) read as base-2 numbers
    let x = ctx.elem(0b000010); // the class of x itself
    println!("x       = code {}", x.code());
    println!("x^6     = code {} (reduced by the modulus)", ctx.pow(x, 6).code());
    let digits = ctx.digits(ctx.pow(x, 6).code());
    println!("x^6 digits over GF(2): {digits:?}");

    let e = ctx.elem_from_digits(&digits).unwrap();
    println!("digits round-trip back to code {}\n", e.code());
}

fn roots_of_unity() {
    println!("--- Roots of unity and the quadratic extension ---\n");

    // 9 | 64 - 1, so GF(64) holds a primitive 9th root of unity directly
    let ctx = FieldCtx::shared_for(64).unwrap();
    let w = ctx.nth_root_of_unity(9).unwrap();
    println!("9th root of unity in GF(64): code {}", w.code());
    println!("w^9 = {} (expected the one element)", ctx.pow(w, 9));

    // 65 | 64 + 1 instead, so a 65th root needs the quadratic extension
    let ext = ctx.quadratic_extension().unwrap();
    println!("quadratic extension: {}", ext.id());
    let alpha = ext.nth_root_of_unity(65).unwrap();
    println!("65th root of unity in {}: code {}", ext.id(), alpha.code());
    println!("alpha^65 = {}", ext.pow(alpha, 65));

    // elements of the prime-order subfield split back into base coordinates
    let (lo, hi) = ext.split_over_base(ext.pow(alpha, 65)).unwrap();
    println!("alpha^65 over the base: ({}, {})", lo, hi);
}
