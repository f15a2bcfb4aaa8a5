//! Cyclic codes from zero sets: defining-set algebra, the BCH lower bound,
//! generator and parity-check matrices, exhaustive distance oracles, and duals.
//!
//! A cyclic code of length n over GF(q) (gcd(n, q) = 1) is determined by its
//! complete defining set Z, the exponents i for which alpha^i is a zero of the
//! generator polynomial, where alpha is a fixed primitive n-th root of unity in
//! the splitting field GF(q^s). Z must be closed under i -> q*i mod n for the
//! generator to land in GF(q)[x]; for n | q+1 that closure is exactly the
//! symmetry Z = -Z mod n.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::field::{self, FieldCtx, FieldElement};
use crate::linalg::{self, Matrix, ScanOutcome};
use crate::poly::Poly;
use crate::{Error, Result};

/// Default cap on the number of enumerated codewords (q^k) in exhaustive scans.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Set of exponents mod n marking the zeros alpha^i of a generator polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DefiningSet {
    n: usize,
    exps: BTreeSet<usize>,
}

impl DefiningSet {
    /// Normalizes arbitrary (possibly negative) exponents mod n.
    pub fn new(n: usize, exps: impl IntoIterator<Item = i64>) -> DefiningSet {
        assert!(n >= 1, "length must be positive");
        let exps = exps
            .into_iter()
            .map(|e| e.rem_euclid(n as i64) as usize)
            .collect();
        DefiningSet { n, exps }
    }

    pub fn empty(n: usize) -> DefiningSet {
        DefiningSet::new(n, [])
    }

    /// The full set [0, n), the defining set of the zero code.
    pub fn full(n: usize) -> DefiningSet {
        DefiningSet::new(n, 0..n as i64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn contains(&self, e: i64) -> bool {
        self.exps.contains(&(e.rem_euclid(self.n as i64) as usize))
    }

    /// Exponents in increasing canonical order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.exps.iter().copied().collect()
    }

    /// Signed representatives: i for 2i <= n, i - n otherwise, ascending.
    pub fn signed_reps(&self) -> Vec<i64> {
        let n = self.n as i64;
        let mut out: Vec<i64> = self
            .exps
            .iter()
            .map(|&i| {
                let i = i as i64;
                if 2 * i <= n {
                    i
                } else {
                    i - n
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        assert_eq!(self.n, other.n, "defining sets must share one length");
        let exps = self.exps.union(&other.exps).copied().collect();
        DefiningSet { n: self.n, exps }
    }

    pub fn complement(&self) -> DefiningSet {
        let exps = (0..self.n).filter(|e| !self.exps.contains(e)).collect();
        DefiningSet { n: self.n, exps }
    }

    /// The set {-i mod n : i in Z}.
    pub fn negate(&self) -> DefiningSet {
        let exps = self.exps.iter().map(|&e| (self.n - e) % self.n).collect();
        DefiningSet { n: self.n, exps }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.negate()
    }

    /// Smallest superset closed under i -> q*i mod n.
    pub fn conjugacy_closure(&self, q: u64) -> DefiningSet {
        let n = self.n as u64;
        let q = q % n;
        let mut exps = BTreeSet::new();
        for &e in &self.exps {
            let mut cur = e as u64;
            // Walk the orbit until we land on an exponent whose forward orbit
            // is already recorded.
            while exps.insert(cur as usize) {
                cur = cur * q % n;
            }
        }
        DefiningSet { n: self.n, exps }
    }

    pub fn is_conjugacy_closed(&self, q: u64) -> bool {
        self.check_conjugacy_closed(q).is_ok()
    }

    /// Errors with the first exponent whose image q*i mod n is missing.
    pub fn check_conjugacy_closed(&self, q: u64) -> Result<()> {
        let n = self.n as u64;
        for &e in &self.exps {
            let image = (e as u64 * (q % n) % n) as usize;
            if !self.exps.contains(&image) {
                return Err(Error::NotConjugacyClosed { exponent: e, image });
            }
        }
        Ok(())
    }

    /// Best BCH bound: 1 + the longest run {u, u+b, ..., u+(L-1)b} mod n inside
    /// the set, maximized over all steps b coprime to n.
    pub fn bch_lower_bound(&self) -> usize {
        let n = self.n;
        if self.exps.is_empty() {
            return 1;
        }
        if self.exps.len() == n {
            // Zero code: distance is conventionally n + 1.
            return n + 1;
        }
        let mut member = vec![false; n];
        for &e in &self.exps {
            member[e] = true;
        }
        let mut best = 0;
        for b in 1..n {
            if field::gcd(b as u64, n as u64) != 1 {
                continue;
            }
            // gcd(b, n) = 1 makes 0, b, 2b, ... a single cycle through [0, n);
            // walking it twice captures runs that wrap around.
            let mut run = 0;
            let mut pos = 0;
            for _ in 0..2 * n {
                if member[pos] {
                    run += 1;
                    best = best.max(run);
                } else {
                    run = 0;
                }
                pos += b;
                if pos >= n {
                    pos -= n;
                }
            }
        }
        best + 1
    }
}

/// A q-ary cyclic code built from a conjugacy-closed defining set.
#[derive(Debug)]
pub struct CyclicCode {
    base: Arc<FieldCtx>,
    ext: Arc<FieldCtx>,
    s: u32,
    n: usize,
    k: usize,
    alpha: FieldElement,
    zeros: DefiningSet,
    generator: Poly,
    gmat: Matrix,
    hmat: Matrix,
    info: OnceLock<(Vec<usize>, Matrix)>,
}

impl CyclicCode {
    /// Builds the code and eagerly verifies every structural invariant:
    /// conjugacy closure, g | x^n - 1, deg g = n - k, and G Ht = 0.
    pub fn from_defining_set(
        base: &Arc<FieldCtx>,
        n: usize,
        zeros: DefiningSet,
    ) -> Result<CyclicCode> {
        assert_eq!(zeros.n(), n, "defining set length mismatch");
        let q = base.q();
        if field::gcd(n as u64, q) != 1 {
            return Err(Error::LengthNotCoprime { n, q });
        }
        zeros.check_conjugacy_closed(q)?;
        let s = field::splitting_order(q, n)?;
        let ext = match s {
            1 => Arc::clone(base),
            2 => base.quadratic_extension()?,
            _ => {
                return Err(Error::ParamDomain {
                    reason: format!(
                        "length {n} over GF({q}) needs splitting order {s}; \
                         only n | q-1 and n | q+1 are supported"
                    ),
                })
            }
        };
        let alpha = ext.nth_root_of_unity(n)?;
        let roots: Vec<FieldElement> = zeros.iter().map(|i| ext.pow(alpha, i as i64)).collect();
        let g_ext = Poly::from_roots(&ext, &roots);
        // Coefficients of a conjugacy-closed product lie in the base field.
        let generator = if s == 2 {
            g_ext.project_to_base(&ext)?
        } else {
            g_ext
        };
        let k = n - zeros.len();
        assert_eq!(generator.degree(), Some(n - k), "deg g must equal |Z|");

        let xn1 = Poly::monomial(base, n).sub(&Poly::one(base), base);
        let (h, rem) = xn1.divrem(&generator, base)?;
        assert!(rem.is_zero(), "generator must divide x^n - 1");

        // Shift-register bases: G rows are x^i g(x), H rows shift reversed h.
        let gmat = shift_matrix(base, n, k, generator.coeffs());
        let hrev: Vec<u32> = h.coeffs().iter().rev().copied().collect();
        let hmat = shift_matrix(base, n, n - k, &hrev);
        let prod = gmat.mat_mul(base, &hmat.transpose());
        assert_eq!(prod, Matrix::zeros(base, k, n - k), "G Ht must vanish");

        Ok(CyclicCode {
            base: Arc::clone(base),
            ext,
            s,
            n,
            k,
            alpha,
            zeros,
            generator,
            gmat,
            hmat,
            info: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Splitting order s: 1 when n | q-1, 2 when n | q+1 (and n > 2).
    pub fn splitting_order(&self) -> u32 {
        self.s
    }

    pub fn base_field(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    /// GF(q^s); the base field itself when s = 1.
    pub fn splitting_field(&self) -> &Arc<FieldCtx> {
        &self.ext
    }

    /// The fixed primitive n-th root of unity in the splitting field.
    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn zeros(&self) -> &DefiningSet {
        &self.zeros
    }

    pub fn generator_poly(&self) -> &Poly {
        &self.generator
    }

    /// k x n shift-register basis of g(x).
    pub fn generator_matrix(&self) -> &Matrix {
        &self.gmat
    }

    /// (n-k) x n shift-register basis of the reversed check polynomial.
    pub fn parity_check_matrix(&self) -> &Matrix {
        &self.hmat
    }

    pub fn bch_lower_bound(&self) -> usize {
        self.zeros.bch_lower_bound()
    }

    /// Minimum weight over all q^k - 1 nonzero codewords ([n,0] returns n+1).
    pub fn min_distance_exhaustive(&self, cap: u64) -> Result<usize> {
        if self.k == 0 {
            return Ok(self.n + 1);
        }
        Ok(linalg::min_weight_scan(&self.base, &self.gmat, cap, false)?.min_weight)
    }

    /// Full scan that also tallies counts[w] = number of codewords of weight w.
    pub fn distance_scan(&self, cap: u64) -> Result<ScanOutcome> {
        if self.k == 0 {
            let mut counts = vec![0u64; self.n + 1];
            counts[0] = 1;
            return Ok(ScanOutcome {
                min_weight: self.n + 1,
                distribution: Some(counts),
            });
        }
        linalg::min_weight_scan(&self.base, &self.gmat, cap, true)
    }

    /// The cyclic dual; its defining set is the negated complement of Z.
    pub fn dual_code(&self) -> CyclicCode {
        let zdual = self.zeros.complement().negate();
        CyclicCode::from_defining_set(&self.base, self.n, zdual)
            .expect("dual of a closed defining set is closed")
    }

    /// All q^k codewords in canonical message order.
    pub fn enumerate_codewords(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        linalg::codewords(&self.base, &self.gmat)
    }

    /// Word times the transposed parity-check matrix.
    pub fn syndrome(&self, word: &[u32]) -> Vec<u32> {
        assert_eq!(word.len(), self.n, "word length mismatch");
        self.hmat.mat_vec(&self.base, word)
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.syndrome(word).iter().all(|&c| c == 0)
    }

    fn info_encoder(&self) -> &(Vec<usize>, Matrix) {
        self.info.get_or_init(|| {
            if self.k == 0 {
                return (Vec::new(), Matrix::zeros(&self.base, 0, self.n));
            }
            // The rref pivots are the lexicographically first independent
            // column set, hence the canonical information set.
            let (_, pivots) = self.gmat.rref(&self.base);
            let block = self.gmat.select_columns(&pivots);
            let inv = block
                .invert(&self.base)
                .expect("pivot columns form an invertible block");
            let enc = inv.mat_mul(&self.base, &self.gmat);
            (pivots, enc)
        })
    }

    /// Lexicographically first k coordinates carrying the message verbatim.
    pub fn information_set(&self) -> &[usize] {
        &self.info_encoder().0
    }

    /// Systematic encoding: the message appears at the information set.
    pub fn systematic_encode(&self, message: &[u32]) -> Vec<u32> {
        assert_eq!(message.len(), self.k, "message length mismatch");
        let (_, enc) = self.info_encoder();
        if self.k == 0 {
            return vec![0; self.n];
        }
        enc.vec_mul(&self.base, message)
    }
}

/// rows x n matrix whose i-th row places `coeffs` starting at column i.
fn shift_matrix(ctx: &FieldCtx, n: usize, rows: usize, coeffs: &[u32]) -> Matrix {
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = vec![0u32; n];
        for (j, &c) in coeffs.iter().enumerate() {
            row[i + j] = c;
        }
        out.push(row);
    }
    Matrix::from_code_rows(ctx.id(), n, out)
}
