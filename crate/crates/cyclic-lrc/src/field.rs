//! Finite field contexts GF(p^m).
//!
//! A `FieldCtx` owns one field: the canonical modulus (lexicographically least
//! monic irreducible of degree m over GF(p)), the canonical generator (least
//! primitive element), and exp/log tables when the field is small enough.
//! Elements are packed codes: the coefficient vector (c_0..c_{m-1}) read as an
//! integer base p. The same (p, m) always yields the same context, so codes
//! are portable across runs and serializations.
//!
//! Quadratic extensions GF(q^2) are built over GF(p) with degree 2m and carry
//! a link back to their declared base field: an embedding table computed once
//! from the least root of the base modulus, the reverse projection, and the
//! two-coordinate decomposition over the base used for parity-check rows.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::{Error, Result};

/// Largest supported field size p^m.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Fields up to this size get full exp/log tables; larger ones fall back to
/// schoolbook polynomial arithmetic.
pub const TABLE_LIMIT: u64 = 1 << 16;

/// Odd-characteristic extension fields up to this size also get a full q x q
/// addition table; digit-wise carries cover the rest. Characteristic 2 adds
/// with xor and prime fields with one compare, so neither needs a table.
pub const ADD_TABLE_LIMIT: u64 = 1 << 10;

/// Identifies a field context. Two contexts with the same id are the same
/// field with the same canonical modulus, generator, and element encoding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldId {
    p: u64,
    m: u32,
}

impl FieldId {
    pub fn p(self) -> u64 {
        self.p
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// p^m, the number of elements.
    pub fn order(self) -> u64 {
        self.p.pow(self.m)
    }
}

impl std::fmt::Display for FieldId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

/// One element of one field: the owning context's id plus the packed code.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElement {
    field: FieldId,
    code: u32,
}

impl FieldElement {
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn field(self) -> FieldId {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.code)
    }
}

/// Link from an extension field back to its declared base subfield.
pub(crate) struct BaseLink {
    base_id: FieldId,
    base_q: u64,
    /// Least root of the base modulus inside the extension.
    root: u32,
    /// base code -> extension code, a field homomorphism.
    embed: Vec<u32>,
    /// extension code -> base code, defined exactly on the subfield image.
    project: HashMap<u32, u32>,
    /// Inverse of the F_p change-of-basis matrix for writing an extension
    /// element as a + b*X with a, b in the embedded base (X = class of the
    /// indeterminate). Row-major, dimension (2m) x (2m).
    split_matrix: Vec<u64>,
}

pub struct FieldCtx {
    id: FieldId,
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus, low degree first, length m+1, modulus[m] == 1.
    modulus: Vec<u64>,
    generator_code: u32,
    exp: Option<Vec<u32>>,
    log: Option<Vec<u32>>,
    add_table: Option<Vec<u32>>,
    neg_table: Option<Vec<u32>>,
    base: Option<BaseLink>,
    quad_ext: OnceLock<Arc<FieldCtx>>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("id", &self.id)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator_code)
            .finish_non_exhaustive()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits q = p^m into (p, m) with p prime, or rejects non-prime-powers.
pub fn prime_power_parts(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::ParamDomain {
            reason: format!("{q} is not a prime power"),
        });
    }
    let p = *prime_factors(q)
        .first()
        .expect("q >= 2 has a prime factor");
    let mut m = 0u32;
    let mut t = q;
    while t % p == 0 {
        t /= p;
        m += 1;
    }
    if t != 1 {
        return Err(Error::ParamDomain {
            reason: format!("{q} is not a prime power"),
        });
    }
    Ok((p, m))
}

/// Least s >= 1 with q^s = 1 (mod n); requires gcd(q, n) = 1.
pub fn splitting_order(q: u64, n: usize) -> Result<u32> {
    if n <= 1 {
        return Ok(1);
    }
    let nn = n as u64;
    if gcd(q, nn) != 1 {
        return Err(Error::NotCoprime { a: q, b: nn });
    }
    let mut acc = q % nn;
    let mut s = 1;
    while acc != 1 {
        acc = acc * (q % nn) % nn;
        s += 1;
        debug_assert!(s <= n as u32);
    }
    Ok(s)
}

// Dense polynomials over GF(p) as u64 coefficient vectors, low degree first.
// Used only during context construction (modulus search), so clarity over speed.
mod zp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mulmod(p: u64, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &u) in a.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        rem(p, &mut prod, f);
        prod
    }

    /// Reduce `a` modulo the monic polynomial `f` in place.
    pub fn rem(p: u64, a: &mut Vec<u64>, f: &[u64]) {
        let df = f.len() - 1;
        trim(a);
        while a.len() > df {
            let d = a.len() - 1;
            let c = a[d];
            if c != 0 {
                for (i, &fc) in f.iter().enumerate() {
                    let idx = d - df + i;
                    a[idx] = (a[idx] + (p - fc % p) % p * c) % p;
                }
            }
            a.pop();
            trim(a);
        }
    }

    pub fn powmod(p: u64, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(p, &acc, &b, f);
            }
            b = mulmod(p, &b, &b, f);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // a mod b, with b made monic on the fly
            let lead_inv = inv_mod(p, *b.last().unwrap());
            let bm: Vec<u64> = b.iter().map(|&c| c * lead_inv % p).collect();
            rem(p, &mut a, &bm);
            std::mem::swap(&mut a, &mut b);
        }
        a
    }

    pub fn inv_mod(p: u64, a: u64) -> u64 {
        // Fermat; p is prime and a != 0.
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    /// Rabin irreducibility test for a monic polynomial of degree m.
    pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
        let m = f.len() - 1;
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let checkpoints: Vec<usize> = super::prime_factors(m as u64)
            .iter()
            .map(|&t| m / t as usize)
            .collect();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        for i in 1..=m {
            h = powmod(p, &h, p, f);
            if checkpoints.contains(&i) {
                // gcd(x^{p^i} - x, f) must be constant
                let mut diff = h.clone();
                while diff.len() < 2 {
                    diff.push(0);
                }
                diff[1] = (diff[1] + p - 1) % p;
                trim(&mut diff);
                let g = gcd(p, &diff, f);
                if g.len() > 1 {
                    return false;
                }
            }
        }
        h == x
    }
}

/// Lexicographically least monic irreducible of degree m over GF(p), scanning
/// candidates by the integer value of (c_{m-1}, ..., c_0) read base p.
fn canonical_modulus(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let total = p.checked_pow(m as u32).expect("cap already checked");
    for v in 0..total {
        let mut f = vec![0u64; m + 1];
        f[m] = 1;
        let mut t = v;
        for c in f.iter_mut().take(m) {
            *c = t % p;
            t /= p;
        }
        if zp::is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}

impl FieldCtx {
    /// Build the canonical GF(p^m).
    pub fn new(p: u64, m: u32) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        if m == 0 {
            return Err(Error::ParamDomain {
                reason: "extension degree m must be at least 1".into(),
            });
        }
        let q = (0..m).try_fold(1u64, |acc, _| {
            let next = acc.checked_mul(p)?;
            (next <= MAX_FIELD_SIZE).then_some(next)
        });
        let q = q.ok_or(Error::SizeCapExceeded {
            size: p.saturating_pow(m),
            cap: MAX_FIELD_SIZE,
        })?;

        let modulus = canonical_modulus(p, m);
        let mut ctx = FieldCtx {
            id: FieldId { p, m },
            p,
            m,
            q,
            modulus,
            generator_code: 0,
            exp: None,
            log: None,
            add_table: None,
            neg_table: None,
            base: None,
            quad_ext: OnceLock::new(),
        };
        ctx.generator_code = ctx.find_generator();
        if q <= TABLE_LIMIT {
            ctx.build_tables();
        }
        if p != 2 && m > 1 && q <= ADD_TABLE_LIMIT {
            ctx.build_add_tables();
        }
        Ok(ctx)
    }

    /// Convenience: canonical GF(p^m) behind an Arc.
    pub fn shared(p: u64, m: u32) -> Result<Arc<FieldCtx>> {
        Ok(Arc::new(FieldCtx::new(p, m)?))
    }

    /// Convenience: splits q = p^m and returns the shared context.
    pub fn shared_for(q: u64) -> Result<Arc<FieldCtx>> {
        let (p, m) = prime_power_parts(q)?;
        FieldCtx::shared(p, m)
    }

    fn find_generator(&self) -> u32 {
        if self.q == 2 {
            return 1;
        }
        let factors = prime_factors(self.q - 1);
        'cand: for c in 2..self.q {
            let c = c as u32;
            for &t in &factors {
                if self.raw_powc(c, (self.q - 1) / t) == 1 {
                    continue 'cand;
                }
            }
            return c;
        }
        unreachable!("every finite field has a primitive element");
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; self.q as usize];
        let mut c = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = c;
            log[c as usize] = i as u32;
            c = self.raw_mulc(c, self.generator_code);
        }
        debug_assert_eq!(c, 1, "generator order mismatch");
        self.exp = Some(exp);
        self.log = Some(log);
    }

    /// Both lookups fall through to the digit loops while the tables are
    /// still None, so the build order does not matter.
    fn build_add_tables(&mut self) {
        let q = self.q as usize;
        let mut neg = vec![0u32; q];
        for a in 0..q {
            neg[a] = self.negc(a as u32);
        }
        let mut add = vec![0u32; q * q];
        for a in 0..q {
            for b in a..q {
                let s = self.addc(a as u32, b as u32);
                add[a * q + b] = s;
                add[b * q + a] = s;
            }
        }
        self.neg_table = Some(neg);
        self.add_table = Some(add);
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, low degree first, length m+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.make(self.generator_code)
    }

    pub fn zero(&self) -> FieldElement {
        self.make(0)
    }

    pub fn one(&self) -> FieldElement {
        self.make(1)
    }

    pub fn elem(&self, code: u64) -> FieldElement {
        assert!(code < self.q, "code {} out of range for {}", code, self.id);
        self.make(code as u32)
    }

    fn make(&self, code: u32) -> FieldElement {
        FieldElement {
            field: self.id,
            code,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|c| self.make(c as u32))
    }

    /// Coefficient digits (c_0..c_{m-1}) of an element code.
    pub fn digits(&self, code: u32) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut t = code as u64;
        for _ in 0..self.m {
            out.push(t % self.p);
            t /= self.p;
        }
        out
    }

    /// Element from coefficient digits, low degree first.
    pub fn elem_from_digits(&self, digits: &[u64]) -> Result<FieldElement> {
        if digits.len() > self.m as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::ParamDomain {
                reason: format!("invalid digit vector for {}", self.id),
            });
        }
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            v = v * self.p + d;
        }
        Ok(self.make(v as u32))
    }

    #[inline]
    fn check(&self, x: FieldElement) -> u32 {
        assert_eq!(
            x.field, self.id,
            "element of {} used with context {}",
            x.field, self.id
        );
        x.code
    }

    // Code-level arithmetic. These are the hot paths; the element-level API
    // below wraps them with context checks.

    #[inline]
    pub(crate) fn addc(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a as u64 + b as u64;
            return if s >= self.p { (s - self.p) as u32 } else { s as u32 };
        }
        if let Some(t) = &self.add_table {
            return t[a as usize * self.q as usize + b as usize];
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn negc(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { (self.p - a as u64) as u32 };
        }
        if let Some(t) = &self.neg_table {
            return t[a as usize];
        }
        let mut a = a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * place;
            place *= self.p;
            a /= self.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn subc(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.addc(a, self.negc(b))
    }

    fn raw_mulc(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.m as usize;
        let p = self.p;
        let mut da = vec![0u64; m];
        let mut db = vec![0u64; m];
        let (mut ta, mut tb) = (a as u64, b as u64);
        for i in 0..m {
            da[i] = ta % p;
            db[i] = tb % p;
            ta /= p;
            tb /= p;
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c != 0 {
                prod[d] = 0;
                for i in 0..m {
                    let neg = (p - self.modulus[i] % p) % p;
                    prod[d - m + i] = (prod[d - m + i] + neg * c) % p;
                }
            }
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    #[inline]
    pub(crate) fn mulc(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match (&self.exp, &self.log) {
            (Some(exp), Some(log)) => {
                let n = self.q - 1;
                let i = (log[a as usize] as u64 + log[b as usize] as u64) % n;
                exp[i as usize]
            }
            _ => self.raw_mulc(a, b),
        }
    }

    fn raw_powc(&self, a: u32, mut e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mulc(acc, b);
            }
            b = self.raw_mulc(b, b);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub(crate) fn powc(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        match (&self.exp, &self.log) {
            (Some(exp), Some(log)) => {
                let n = self.q - 1;
                let i = log[a as usize] as u64 * (e % n) % n;
                exp[i as usize]
            }
            _ => self.raw_powc(a, e),
        }
    }

    /// a^e with a possibly negative exponent (a must be nonzero if e < 0).
    pub(crate) fn powc_signed(&self, a: u32, e: i64) -> u32 {
        let n = (self.q - 1) as i64;
        let e = e.rem_euclid(n) as u64;
        self.powc(a, e)
    }

    #[inline]
    pub(crate) fn invc(&self, a: u32) -> u32 {
        assert_ne!(a, 0, "inverse of zero in {}", self.id);
        match (&self.exp, &self.log) {
            (Some(exp), Some(log)) => {
                let n = self.q - 1;
                exp[((n - log[a as usize] as u64) % n) as usize]
            }
            _ => self.raw_powc(a, self.q - 2),
        }
    }

    // Element-level arithmetic.

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.make(self.addc(self.check(a), self.check(b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.make(self.subc(self.check(a), self.check(b)))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.make(self.negc(self.check(a)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.make(self.mulc(self.check(a), self.check(b)))
    }

    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.make(self.invc(self.check(a)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> FieldElement {
        self.make(self.powc_signed(self.check(a), e))
    }

    /// Primitive n-th root of unity; requires n | q-1.
    pub fn nth_root_of_unity(&self, n: usize) -> Result<FieldElement> {
        if n == 0 || (self.q - 1) % n as u64 != 0 {
            return Err(Error::LengthNotDividing {
                n,
                order: self.q - 1,
            });
        }
        Ok(self.make(self.powc(self.generator_code, (self.q - 1) / n as u64)))
    }

    /// The canonical quadratic extension GF(q^2) with this field declared as
    /// its base. Built once per context and cached.
    pub fn quadratic_extension(self: &Arc<Self>) -> Result<Arc<FieldCtx>> {
        if let Some(e) = self.quad_ext.get() {
            return Ok(Arc::clone(e));
        }
        let mut ext = FieldCtx::new(self.p, self.m * 2)?;
        ext.base = Some(self.build_link(&ext));
        let arc = Arc::new(ext);
        let _ = self.quad_ext.set(Arc::clone(&arc));
        Ok(Arc::clone(self.quad_ext.get().expect("just set")))
    }

    fn build_link(&self, ext: &FieldCtx) -> BaseLink {
        let q = self.q;
        // The subfield of order q is {0} plus the unique multiplicative
        // subgroup of order q-1, generated by g^(q+1).
        let step = ext.powc(ext.generator_code, q + 1);
        let mut subfield = Vec::with_capacity(q as usize);
        subfield.push(0u32);
        let mut c = 1u32;
        for _ in 0..q - 1 {
            subfield.push(c);
            c = ext.mulc(c, step);
        }
        debug_assert_eq!(c, 1);

        // Roots of the base modulus all lie in that subfield; take the least.
        let mut roots: Vec<u32> = subfield
            .iter()
            .copied()
            .filter(|&y| {
                let mut acc = 0u32;
                for &co in self.modulus.iter().rev() {
                    acc = ext.addc(ext.mulc(acc, y), co as u32);
                }
                acc == 0
            })
            .collect();
        roots.sort_unstable();
        assert_eq!(
            roots.len(),
            self.m as usize,
            "base modulus must split in the quadratic extension"
        );
        let root = roots[0];

        // Embedding: (c_0..c_{m-1}) -> sum c_i * root^i, a field homomorphism.
        let mut root_pows = Vec::with_capacity(self.m as usize);
        let mut rp = 1u32;
        for _ in 0..self.m {
            root_pows.push(rp);
            rp = ext.mulc(rp, root);
        }
        let mut embed = Vec::with_capacity(q as usize);
        let mut project = HashMap::with_capacity(q as usize);
        for code in 0..q as u32 {
            let mut acc = 0u32;
            let mut t = code as u64;
            for &pw in &root_pows {
                let d = (t % self.p) as u32;
                if d != 0 {
                    acc = ext.addc(acc, ext.mulc(d, pw));
                }
                t /= self.p;
            }
            embed.push(acc);
            project.insert(acc, code);
        }
        assert_eq!(project.len(), q as usize, "embedding must be injective");

        // Change of basis for y = a + b*X over the embedded base, X = class of
        // the indeterminate (code p). Columns: root^i, then X * root^i.
        let dim = 2 * self.m as usize;
        let x_code = self.p as u32;
        let mut mat = vec![0u64; dim * dim];
        for (j, &pw) in root_pows.iter().enumerate() {
            let col_a = ext.digits(pw);
            let col_b = ext.digits(ext.mulc(x_code, pw));
            for i in 0..dim {
                mat[i * dim + j] = col_a[i];
                mat[i * dim + (self.m as usize + j)] = col_b[i];
            }
        }
        let split_matrix = invert_fp(self.p, dim, &mat)
            .expect("{1, X} is always a basis of the extension over the base");

        BaseLink {
            base_id: self.id,
            base_q: q,
            root,
            embed,
            project,
            split_matrix,
        }
    }

    /// Does this context declare a base subfield?
    pub fn has_declared_base(&self) -> bool {
        self.base.is_some()
    }

    pub fn declared_base_id(&self) -> Result<FieldId> {
        Ok(self.link()?.base_id)
    }

    /// The chosen root of the base modulus inside this extension.
    pub fn base_root(&self) -> Result<FieldElement> {
        Ok(self.make(self.link()?.root))
    }

    fn link(&self) -> Result<&BaseLink> {
        self.base.as_ref().ok_or(Error::NoDeclaredBase)
    }

    /// Embed a base-field element into this extension.
    pub fn embed_base(&self, x: FieldElement) -> Result<FieldElement> {
        let link = self.link()?;
        if x.field != link.base_id {
            return Err(Error::MixedContexts);
        }
        Ok(self.make(link.embed[x.code as usize]))
    }

    /// Project an element of this extension back to the base subfield, if it
    /// lies there.
    pub fn project_base(&self, x: FieldElement) -> Result<Option<FieldElement>> {
        let link = self.link()?;
        let code = self.check(x);
        Ok(link.project.get(&code).map(|&c| FieldElement {
            field: link.base_id,
            code: c,
        }))
    }

    /// Is x inside the declared base subfield?
    pub fn in_base_subfield(&self, x: FieldElement) -> Result<bool> {
        Ok(self.project_base(x)?.is_some())
    }

    /// Write x = a + b*X with a, b in the declared base (X = class of the
    /// indeterminate). Returns (a, b) as base-field elements.
    pub fn split_over_base(&self, x: FieldElement) -> Result<(FieldElement, FieldElement)> {
        let link = self.link()?;
        let code = self.check(x);
        let dim = 2 * link_base_m(link) as usize;
        let digs = self.digits(code);
        let m = dim / 2;
        let mut a = 0u64;
        let mut b = 0u64;
        let mut place = 1u64;
        let p = self.p;
        for i in 0..m {
            let mut va = 0u64;
            let mut vb = 0u64;
            for j in 0..dim {
                va = (va + link.split_matrix[i * dim + j] * digs[j]) % p;
                vb = (vb + link.split_matrix[(m + i) * dim + j] * digs[j]) % p;
            }
            a += va * place;
            b += vb * place;
            place *= p;
        }
        let base = link.base_id;
        debug_assert!(a < link.base_q && b < link.base_q);
        Ok((
            FieldElement {
                field: base,
                code: a as u32,
            },
            FieldElement {
                field: base,
                code: b as u32,
            },
        ))
    }
}

fn link_base_m(link: &BaseLink) -> u32 {
    link.base_id.m
}

/// Rebuild an element from a (field, code) pair that was validated earlier,
/// e.g. a coefficient stored inside a `Poly` tagged with the same field.
pub(crate) fn element_unchecked(field: FieldId, code: u32) -> FieldElement {
    FieldElement { field, code }
}

/// Invert a dim x dim matrix over the prime field F_p; None if singular.
fn invert_fp(p: u64, dim: usize, mat: &[u64]) -> Option<Vec<u64>> {
    let mut a = mat.to_vec();
    let mut inv = vec![0u64; dim * dim];
    for i in 0..dim {
        inv[i * dim + i] = 1;
    }
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| a[r * dim + col] != 0)?;
        if pivot != col {
            for j in 0..dim {
                a.swap(col * dim + j, pivot * dim + j);
                inv.swap(col * dim + j, pivot * dim + j);
            }
        }
        let pi = zp::inv_mod(p, a[col * dim + col]);
        for j in 0..dim {
            a[col * dim + j] = a[col * dim + j] * pi % p;
            inv[col * dim + j] = inv[col * dim + j] * pi % p;
        }
        for r in 0..dim {
            if r != col && a[r * dim + col] != 0 {
                let f = a[r * dim + col];
                for j in 0..dim {
                    a[r * dim + j] = (a[r * dim + j] + (p - f) * a[col * dim + j]) % p;
                    inv[r * dim + j] = (inv[r * dim + j] + (p - f) * inv[col * dim + j]) % p;
                }
            }
        }
    }
    Some(inv)
}
