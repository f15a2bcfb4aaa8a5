//! Optimal (r, delta) locally repairable cyclic codes over GF(q), for lengths
//! dividing q - 1 or q + 1, plus the companion MDS family for n | q + 1.
//!
//! Every construction chooses a defining set Z = L u D inside [0, n): L is a
//! union of delta - 1 arithmetic cosets mod r + delta - 1, which forces
//! (r, delta)-locality and with it the Singleton-type upper bound on the
//! distance; D is a b-spaced run of consecutive exponents, which forces the
//! matching BCH lower bound. Whenever |Z| = n - k the two bounds meet and the
//! code is distance-optimal for its locality. Lengths dividing q + 1 need Z
//! closed under negation, so D must be a symmetric run and the coset offsets
//! come in +- pairs; the case split on the parities of n, b, ceil(k/r) and
//! the group count selects which symmetric layout exists.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclic::{CyclicCode, DefiningSet};
use crate::field::{self, FieldCtx};
use crate::linalg;
use crate::locality::{self, LocalityCertificate, RepairGroupPartition};
use crate::{Error, Result};

/// The four construction families, keyed by which order the length divides.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Family {
    /// n | q - 1: cosets plus a plain run, any delta >= 2, any k.
    #[serde(rename = "qminus1")]
    QMinus1,
    /// n | q + 1 with delta = 2: classical r-locality from the zero coset.
    #[serde(rename = "qplus1-rlocal")]
    QPlus1Local,
    /// n | q + 1 with delta >= 3: symmetric coset pairs.
    #[serde(rename = "qplus1-rdelta")]
    QPlus1Delta,
    /// n | q + 1 MDS codes from symmetric runs; no locality structure.
    #[serde(rename = "mds")]
    Mds,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::QMinus1 => "qminus1",
            Family::QPlus1Local => "qplus1-rlocal",
            Family::QPlus1Delta => "qplus1-rdelta",
            Family::Mds => "mds",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "qminus1" => Ok(Family::QMinus1),
            "qplus1-rlocal" => Ok(Family::QPlus1Local),
            "qplus1-rdelta" => Ok(Family::QPlus1Delta),
            "mds" => Ok(Family::Mds),
            other => Err(Error::ParamDomain {
                reason: format!(
                    "unknown family {other:?}; expected qminus1, qplus1-rlocal, \
                     qplus1-rdelta or mds"
                ),
            }),
        }
    }
}

/// Which symmetric layout to use when the length is even and both exist: the
/// run (or MDS window) centered at exponent 0, or the one centered at n/2.
/// Ignored wherever only one layout is possible.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DVariant {
    #[default]
    ZeroCentered,
    HalfCentered,
}

impl FromStr for DVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<DVariant> {
        match s {
            "zero" | "zero-centered" | "centered" => Ok(DVariant::ZeroCentered),
            "half" | "half-centered" | "shifted" => Ok(DVariant::HalfCentered),
            other => Err(Error::ParamDomain {
                reason: format!("unknown variant {other:?}; expected zero or half"),
            }),
        }
    }
}

/// Parameters of one locally repairable code instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LrcParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub delta: usize,
    /// Spacing of the distance run; must be coprime to n.
    pub b: usize,
    pub family: Family,
}

impl LrcParams {
    /// ceil(k / r), how many repair groups the information spreads over.
    pub fn mu(&self) -> usize {
        self.k.div_ceil(self.r)
    }

    /// r + delta - 1, the size of one repair group.
    pub fn group_size(&self) -> usize {
        self.r + self.delta - 1
    }

    /// n / (r + delta - 1), the number of repair groups.
    pub fn group_count(&self) -> usize {
        self.n / self.group_size()
    }
}

/// n - k - ceil(k/r) + 2, the delta = 2 specialization of the bound below.
pub fn singleton_bound_r_local(n: usize, k: usize, r: usize) -> usize {
    singleton_bound_r_delta(n, k, r, 2)
}

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1), the largest distance an [n, k]
/// code with (r, delta)-locality can reach.
pub fn singleton_bound_r_delta(n: usize, k: usize, r: usize, delta: usize) -> usize {
    assert!(r >= 1 && delta >= 2 && k >= 1 && k < n, "bound needs 1 <= k < n, r >= 1, delta >= 2");
    (n - k + 1)
        .checked_sub((k.div_ceil(r) - 1) * (delta - 1))
        .expect("locality parameters exceed the Singleton range")
}

/// The b-spaced run of cnt exponents equal to its own negation mod n.
///
/// For odd n the run is unique: its start solves 2a = -(cnt - 1) b. For even
/// n a symmetric run must have odd length and there are two, centered at
/// exponent 0 and at n/2; `variant` picks one.
pub fn symmetric_run(n: usize, b: usize, cnt: usize, variant: DVariant) -> Result<DefiningSet> {
    assert!(n >= 1 && b >= 1, "need n >= 1 and b >= 1");
    assert_eq!(field::gcd(b as u64, n as u64), 1, "b must be coprime to n");
    assert!(cnt <= n, "a run cannot exceed the length");
    if cnt == 0 {
        return Ok(DefiningSet::empty(n));
    }
    let nn = n as i64;
    let bb = b as i64;
    let start = if n % 2 == 1 {
        // Halving is invertible mod odd n: inv2 = (n + 1) / 2.
        let inv2 = (nn + 1) / 2;
        -(cnt as i64 - 1) % nn * bb % nn * inv2 % nn
    } else {
        if cnt % 2 == 0 {
            return Err(Error::ParamDomain {
                reason: format!(
                    "no {cnt}-term b-spaced set mod {n} equals its own negation: \
                     an even-length run needs an odd modulus"
                ),
            });
        }
        let half = (cnt as i64 - 1) / 2;
        match variant {
            DVariant::ZeroCentered => -half * bb,
            DVariant::HalfCentered => nn / 2 - half * bb,
        }
    };
    let run = DefiningSet::new(n, (0..cnt as i64).map(|t| start + t * bb));
    debug_assert_eq!(run.len(), cnt, "run must not wrap into itself");
    debug_assert!(run.is_symmetric(), "run must equal its own negation");
    Ok(run)
}

/// L_m = {i in [0, n) : i = m (mod g)}, one locality layer of a defining set.
pub fn coset(n: usize, g: usize, m: i64) -> DefiningSet {
    assert!(g >= 1 && n % g == 0, "g must divide n");
    let m = m.rem_euclid(g as i64);
    DefiningSet::new(n, (0..(n / g) as i64).map(|t| m + t * g as i64))
}

/// A constructed optimal LRC: the cyclic code together with the structure
/// that witnesses its optimality.
#[derive(Debug)]
pub struct LrcCode {
    code: CyclicCode,
    params: LrcParams,
    rule: &'static str,
    l_offsets: Vec<i64>,
    l_sets: Vec<DefiningSet>,
    d_set: DefiningSet,
    groups: RepairGroupPartition,
    target_d: usize,
}

impl LrcCode {
    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    pub fn params(&self) -> &LrcParams {
        &self.params
    }

    /// Which construction case produced the defining set.
    pub fn rule(&self) -> &'static str {
        self.rule
    }

    /// The delta - 1 coset offsets m whose L_m lie in the defining set.
    pub fn locality_offsets(&self) -> &[i64] {
        &self.l_offsets
    }

    pub fn locality_cosets(&self) -> &[DefiningSet] {
        &self.l_sets
    }

    /// The b-spaced run driving the BCH bound.
    pub fn run_set(&self) -> &DefiningSet {
        &self.d_set
    }

    pub fn repair_groups(&self) -> &RepairGroupPartition {
        &self.groups
    }

    /// The Singleton-type bound the construction meets exactly.
    pub fn target_distance(&self) -> usize {
        self.target_d
    }
}

fn check_divides(n: usize, order: u64) -> Result<()> {
    if n == 0 || order % n as u64 != 0 {
        return Err(Error::LengthNotDividing { n, order });
    }
    Ok(())
}

fn common_checks(base: &FieldCtx, p: &LrcParams) -> Result<()> {
    if p.q != base.q() {
        return Err(Error::ParamDomain {
            reason: format!(
                "field mismatch: parameters say q = {}, context is {}",
                p.q,
                base.id()
            ),
        });
    }
    if p.r < 1 {
        return Err(Error::ParamDomain {
            reason: "r must be at least 1".into(),
        });
    }
    if p.delta < 2 {
        return Err(Error::ParamDomain {
            reason: format!("delta = {} must be at least 2", p.delta),
        });
    }
    let g = p.group_size();
    if p.n % g != 0 {
        return Err(Error::GroupSizeNotDividing { group: g, n: p.n });
    }
    if p.k < 1 || p.k >= p.n {
        return Err(Error::ParamDomain {
            reason: format!("dimension k = {} must satisfy 1 <= k < n = {}", p.k, p.n),
        });
    }
    if p.b < 1 || field::gcd(p.b as u64, p.n as u64) != 1 {
        return Err(Error::ParamDomain {
            reason: format!("run spacing b = {} must be coprime to n = {}", p.b, p.n),
        });
    }
    if p.k > p.r * p.group_count() {
        return Err(Error::ParamDomain {
            reason: format!(
                "k = {} exceeds r * (n / (r + delta - 1)) = {}; the repair groups \
                 cannot carry that much information",
                p.k,
                p.r * p.group_count()
            ),
        });
    }
    Ok(())
}

/// When r does not divide k, the coset/run counting only closes under extra
/// parity conditions on k, mu = ceil(k/r) and the group count.
fn fractional_dimension_ok(q_odd_n_even: bool, k: usize, mu: usize, groups: usize) -> bool {
    let k_even = k % 2 == 0;
    let mu_even = mu % 2 == 0;
    let groups_even = groups % 2 == 0;
    if !q_odd_n_even {
        k_even && (!mu_even || mu >= 4)
    } else {
        match (mu_even, groups_even) {
            (false, false) => !k_even,
            (true, _) => k_even && mu >= 4,
            (false, true) => false,
        }
    }
}

fn fractional_gate(base: &FieldCtx, p: &LrcParams) -> Result<()> {
    if p.k % p.r == 0 {
        return Ok(());
    }
    let q_odd_n_even = base.q() % 2 == 1 && p.n % 2 == 0;
    if fractional_dimension_ok(q_odd_n_even, p.k, p.mu(), p.group_count()) {
        Ok(())
    } else {
        Err(Error::ParamDomain {
            reason: format!(
                "r = {} does not divide k = {} and no fractional-dimension case \
                 applies (mu = {}, groups = {})",
                p.r,
                p.k,
                p.mu(),
                p.group_count()
            ),
        })
    }
}

fn assemble(
    base: &Arc<FieldCtx>,
    params: &LrcParams,
    rule: &'static str,
    l_offsets: Vec<i64>,
    l_sets: Vec<DefiningSet>,
    d_set: DefiningSet,
) -> Result<LrcCode> {
    let mut zeros = d_set.clone();
    for l in &l_sets {
        zeros = zeros.union(l);
    }
    if zeros.len() != params.n - params.k {
        return Err(Error::NoMatchingCase {
            q: params.q,
            n: params.n,
            k: params.k,
            r: params.r,
            delta: params.delta,
            b: params.b,
            reason: format!(
                "cosets and run overlap to {} exponents, expected n - k = {}",
                zeros.len(),
                params.n - params.k
            ),
        });
    }
    let code = CyclicCode::from_defining_set(base, params.n, zeros)?;
    let groups = locality::repair_groups(params.n, params.r, params.delta)?;
    Ok(LrcCode {
        code,
        params: *params,
        rule,
        l_offsets,
        l_sets,
        d_set,
        groups,
        target_d: singleton_bound_r_delta(params.n, params.k, params.r, params.delta),
    })
}

/// Length n | q - 1: defining set L_{i_1} u ... u L_{i_{delta-1}} u D, where
/// the coset offsets form a b-spaced progression (0, b, .., (delta-2) b by
/// default) and D continues that progression from i_1 for
/// n - k - (ceil(k/r) - 1)(delta - 1) terms.
pub fn construct_q_minus_1(
    base: &Arc<FieldCtx>,
    params: &LrcParams,
    i_list: Option<&[usize]>,
) -> Result<LrcCode> {
    check_divides(params.n, base.q().saturating_sub(1))?;
    common_checks(base, params)?;
    let (n, k, delta, b) = (params.n, params.k, params.delta, params.b);
    let g = params.group_size();

    let offsets: Vec<usize> = match i_list {
        Some(list) => list.to_vec(),
        None => (0..delta - 1).map(|t| t * b).collect(),
    };
    if offsets.len() != delta - 1 {
        return Err(Error::ParamDomain {
            reason: format!(
                "need exactly delta - 1 = {} coset offsets, got {}",
                delta - 1,
                offsets.len()
            ),
        });
    }
    if offsets
        .windows(2)
        .any(|w| w[1] <= w[0] || w[1] - w[0] != b)
    {
        return Err(Error::ParamDomain {
            reason: format!(
                "coset offsets {offsets:?} must be an increasing progression with step b = {b}"
            ),
        });
    }
    if offsets.iter().any(|&m| m > g - 1) {
        return Err(Error::ProgressionOutOfRange {
            list: offsets,
            max: g - 1,
        });
    }

    let cnt = n - k - (params.mu() - 1) * (delta - 1);
    let start = offsets[0] as i64;
    let d_set = DefiningSet::new(n, (0..cnt as i64).map(|s| start + s * b as i64));
    debug_assert_eq!(d_set.len(), cnt);
    let l_sets: Vec<DefiningSet> = offsets.iter().map(|&m| coset(n, g, m as i64)).collect();
    let l_offsets = offsets.iter().map(|&m| m as i64).collect();
    assemble(base, params, "qm1", l_offsets, l_sets, d_set)
}

/// Length n | q + 1 with delta = 2: defining set L_0 u D with D the symmetric
/// b-spaced run of n - k - ceil(k/r) + 1 exponents.
pub fn construct_r_local_q_plus_1(
    base: &Arc<FieldCtx>,
    params: &LrcParams,
    variant: DVariant,
) -> Result<LrcCode> {
    check_divides(params.n, base.q() + 1)?;
    if params.delta != 2 {
        return Err(Error::ParamDomain {
            reason: format!(
                "the qplus1-rlocal family fixes delta = 2, got {}",
                params.delta
            ),
        });
    }
    common_checks(base, params)?;
    fractional_gate(base, params)?;
    let (n, k, b) = (params.n, params.k, params.b);
    let mu = params.mu();
    let groups = params.group_count();
    let cnt = n - k - mu + 1;

    let (rule, anchor) = if n % 2 == 1 {
        let rule = match (b % 2 == 0, mu % 2 == 0) {
            (false, true) => "qp1-bodd-mueven",
            (false, false) => "qp1-bodd-muodd",
            (true, true) => "qp1-beven-mueven",
            (true, false) => "qp1-beven-muodd",
        };
        (rule, DVariant::ZeroCentered)
    } else {
        match (mu % 2 == 0, groups % 2 == 0) {
            (false, false) => ("qp1-neven-muodd-nuodd", DVariant::ZeroCentered),
            (true, false) => ("qp1-neven-mueven-nuodd", DVariant::HalfCentered),
            (true, true) => match variant {
                DVariant::ZeroCentered => ("qp1-neven-mueven-nueven", DVariant::ZeroCentered),
                DVariant::HalfCentered => ("qp1-neven-mueven-nueven-half", DVariant::HalfCentered),
            },
            (false, true) => {
                return Err(Error::NoMatchingCase {
                    q: params.q,
                    n,
                    k,
                    r: params.r,
                    delta: 2,
                    b,
                    reason: "no symmetric run exists for odd ceil(k/r) with an even \
                             group count"
                        .into(),
                })
            }
        }
    };
    let d_set = symmetric_run(n, b, cnt, anchor)?;
    let l_set = coset(n, params.group_size(), 0);
    assemble(base, params, rule, vec![0], vec![l_set], d_set)
}

/// Length n | q + 1 with delta >= 3: defining set from delta - 1 symmetric
/// coset offsets (0, +-b, .. for even delta; +-b/2, +-3b/2, .. with b even
/// for odd delta) plus the symmetric b-spaced run D of
/// n - k - (ceil(k/r) - 1)(delta - 1) exponents.
pub fn construct_r_delta_q_plus_1(
    base: &Arc<FieldCtx>,
    params: &LrcParams,
    variant: DVariant,
) -> Result<LrcCode> {
    check_divides(params.n, base.q() + 1)?;
    let delta = params.delta;
    if delta < 3 {
        return Err(Error::ParamDomain {
            reason: format!(
                "the qplus1-rdelta family needs delta >= 3, got {delta}; \
                 use qplus1-rlocal for delta = 2"
            ),
        });
    }
    let (n, k) = (params.n, params.k);
    if delta % 2 == 1 && n % 2 == 0 {
        return Err(Error::NoMatchingCase {
            q: params.q,
            n,
            k,
            r: params.r,
            delta,
            b: params.b,
            reason: "odd delta needs an even run spacing, which cannot be coprime to \
                     an even length"
                .into(),
        });
    }
    if delta % 2 == 1 && params.b % 2 == 1 {
        return Err(Error::ParamDomain {
            reason: format!(
                "odd delta = {delta} pairs the cosets around half-integers and needs \
                 an even run spacing, got b = {}",
                params.b
            ),
        });
    }
    common_checks(base, params)?;
    fractional_gate(base, params)?;
    let b = params.b;
    let g = params.group_size();
    let mu = params.mu();
    let groups = params.group_count();

    let mut offsets: Vec<i64> = Vec::with_capacity(delta - 1);
    if delta % 2 == 0 {
        offsets.push(0);
        for t in 1..=(delta as i64 - 2) / 2 {
            offsets.push(t * b as i64);
            offsets.push(-t * b as i64);
        }
    } else {
        for t in 0..(delta as i64 - 1) / 2 {
            let m = b as i64 / 2 + t * b as i64;
            offsets.push(m);
            offsets.push(-m);
        }
    }
    offsets.sort_unstable();
    if offsets.iter().any(|&m| m.unsigned_abs() as usize > g - 1) {
        let mut mags: Vec<usize> = offsets.iter().map(|&m| m.unsigned_abs() as usize).collect();
        mags.sort_unstable();
        mags.dedup();
        return Err(Error::ProgressionOutOfRange {
            list: mags,
            max: g - 1,
        });
    }
    let residues: BTreeSet<i64> = offsets.iter().map(|&m| m.rem_euclid(g as i64)).collect();
    if residues.len() != delta - 1 {
        return Err(Error::ParamDomain {
            reason: format!("coset offsets {offsets:?} collide modulo r + delta - 1 = {g}"),
        });
    }

    let cnt = n - k - (mu - 1) * (delta - 1);
    let (rule, anchor) = if n % 2 == 1 {
        let rule = if delta % 2 == 1 {
            if mu % 2 == 0 {
                "qp1d-deltaodd-mueven"
            } else {
                "qp1d-deltaodd-muodd"
            }
        } else {
            match (b % 2 == 0, mu % 2 == 0) {
                (false, true) => "qp1d-bodd-mueven",
                (false, false) => "qp1d-bodd-muodd",
                (true, true) => "qp1d-beven-mueven",
                (true, false) => "qp1d-beven-muodd",
            }
        };
        (rule, DVariant::ZeroCentered)
    } else {
        match (mu % 2 == 0, groups % 2 == 0) {
            (false, false) => ("qp1d-neven-muodd-nuodd", DVariant::ZeroCentered),
            (true, false) => ("qp1d-neven-mueven-nuodd", DVariant::HalfCentered),
            (true, true) => match variant {
                DVariant::ZeroCentered => ("qp1d-neven-mueven-nueven", DVariant::ZeroCentered),
                DVariant::HalfCentered => ("qp1d-neven-mueven-nueven-half", DVariant::HalfCentered),
            },
            (false, true) => {
                return Err(Error::NoMatchingCase {
                    q: params.q,
                    n,
                    k,
                    r: params.r,
                    delta,
                    b,
                    reason: "no symmetric run exists for odd ceil(k/r) with an even \
                             group count"
                        .into(),
                })
            }
        }
    };
    let d_set = symmetric_run(n, b, cnt, anchor)?;
    let l_sets: Vec<DefiningSet> = offsets.iter().map(|&m| coset(n, g, m)).collect();
    assemble(base, params, rule, offsets, l_sets, d_set)
}

/// Length n | q + 1 MDS codes from symmetric consecutive windows: centered at
/// exponent 0 for even k, at n/2 for odd k over an odd length; over an even
/// length an odd k admits both (chosen by `variant`) and an even k admits
/// neither, because no window of even size is symmetric mod an even n.
pub fn construct_mds_q_plus_1(
    base: &Arc<FieldCtx>,
    n: usize,
    k: usize,
    variant: DVariant,
) -> Result<(CyclicCode, &'static str)> {
    let q = base.q();
    check_divides(n, q + 1)?;
    if k <= 1 || k >= n {
        return Err(Error::ParamDomain {
            reason: format!("dimension k = {k} must satisfy 1 < k < n = {n}"),
        });
    }
    let n_even = n % 2 == 0;
    let k_even = k % 2 == 0;
    if q % 2 == 1 && n_even && k_even {
        return Err(Error::NonexistentMDS { q, n, k });
    }
    let centered = k_even || (n_even && variant == DVariant::ZeroCentered);
    let (zeros, rule) = if centered {
        let e = (n - 1 - k) as i64 / 2;
        (DefiningSet::new(n, -e..=e), "mds-centered")
    } else {
        let lo = (k as i64 + 1) / 2;
        let hi = (2 * n as i64 - 1 - k as i64) / 2;
        (DefiningSet::new(n, lo..=hi), "mds-shifted")
    };
    debug_assert_eq!(zeros.len(), n - k);
    debug_assert!(zeros.is_symmetric());
    let code = CyclicCode::from_defining_set(base, n, zeros)?;
    Ok((code, rule))
}

/// Options shared by the family dispatcher.
#[derive(Clone, Debug, Default)]
pub struct ConstructOptions {
    /// Explicit coset offsets for the qminus1 family.
    pub i_list: Option<Vec<usize>>,
    /// Symmetric-layout choice where two runs exist.
    pub variant: DVariant,
}

/// Routes to the family-specific constructor.
pub fn construct_lrc(
    base: &Arc<FieldCtx>,
    params: &LrcParams,
    opts: &ConstructOptions,
) -> Result<LrcCode> {
    match params.family {
        Family::QMinus1 => construct_q_minus_1(base, params, opts.i_list.as_deref()),
        Family::QPlus1Local => construct_r_local_q_plus_1(base, params, opts.variant),
        Family::QPlus1Delta => construct_r_delta_q_plus_1(base, params, opts.variant),
        Family::Mds => Err(Error::ParamDomain {
            reason: "the mds family carries no locality structure; use construct_mds_q_plus_1"
                .into(),
        }),
    }
}

/// The default run spacing: 2 where an odd delta >= 3 forces it even, else 1.
pub fn default_step(family: Family, delta: usize) -> usize {
    match family {
        Family::QPlus1Delta if delta % 2 == 1 => 2,
        _ => 1,
    }
}

/// Whether to confirm distances by full codeword enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExhaustivePolicy {
    /// Bounds only.
    Skip,
    /// Enumerate when q^k fits under the cap.
    #[default]
    IfFits,
    /// Enumerate, or fail when the space exceeds the cap.
    Require,
}

/// The full optimality audit of a constructed code.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OptimalityCertificate {
    /// k and |Z| match the requested dimension.
    pub dims_ok: bool,
    /// Run-driven lower bound on the distance.
    pub bch_bound: usize,
    /// Locality-aware Singleton upper bound.
    pub singleton_bound: usize,
    /// The two bounds meet, pinning the distance exactly.
    pub d_exact_by_sandwich: bool,
    /// Enumerated distance, when the policy asked for one that fits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_exhaustive: Option<usize>,
    pub locality: LocalityCertificate,
    /// Everything above checks out.
    pub verdict: bool,
}

/// Audits a constructed code: dimensions, the bound sandwich, per-group
/// locality, and (per policy) the enumerated distance.
pub fn certify(lrc: &LrcCode, policy: ExhaustivePolicy, cap: u64) -> Result<OptimalityCertificate> {
    let code = lrc.code();
    let p = lrc.params();
    let dims_ok = code.k() == p.k && code.zeros().len() == p.n - p.k;
    let bch_bound = code.bch_lower_bound();
    let singleton_bound = singleton_bound_r_delta(p.n, p.k, p.r, p.delta);
    let d_exact_by_sandwich = bch_bound == singleton_bound;
    let d_exhaustive = exhaustive_distance(code, policy, cap)?;
    let locality = locality::verify_r_delta_locality(code, p.r, p.delta, cap)?;
    let verdict = dims_ok
        && d_exact_by_sandwich
        && locality.verdict
        && d_exhaustive.is_none_or(|d| d == singleton_bound);
    Ok(OptimalityCertificate {
        dims_ok,
        bch_bound,
        singleton_bound,
        d_exact_by_sandwich,
        d_exhaustive,
        locality,
        verdict,
    })
}

/// The MDS audit: the window meets the plain Singleton bound n - k + 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MdsCheck {
    pub dims_ok: bool,
    pub bch_bound: usize,
    pub singleton_bound: usize,
    pub d_exact_by_sandwich: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_exhaustive: Option<usize>,
    pub verdict: bool,
}

pub fn check_mds(
    code: &CyclicCode,
    expected_k: usize,
    policy: ExhaustivePolicy,
    cap: u64,
) -> Result<MdsCheck> {
    let dims_ok = code.k() == expected_k;
    let bch_bound = code.bch_lower_bound();
    let singleton_bound = code.n() - code.k() + 1;
    let d_exact_by_sandwich = bch_bound == singleton_bound;
    let d_exhaustive = exhaustive_distance(code, policy, cap)?;
    let verdict = dims_ok
        && d_exact_by_sandwich
        && d_exhaustive.is_none_or(|d| d == singleton_bound);
    Ok(MdsCheck {
        dims_ok,
        bch_bound,
        singleton_bound,
        d_exact_by_sandwich,
        d_exhaustive,
        verdict,
    })
}

fn exhaustive_distance(
    code: &CyclicCode,
    policy: ExhaustivePolicy,
    cap: u64,
) -> Result<Option<usize>> {
    match policy {
        ExhaustivePolicy::Skip => Ok(None),
        ExhaustivePolicy::IfFits => {
            if linalg::pow_fits(code.base_field().q(), code.k(), cap) {
                Ok(Some(code.min_distance_exhaustive(cap)?))
            } else {
                Ok(None)
            }
        }
        ExhaustivePolicy::Require => Ok(Some(code.min_distance_exhaustive(cap)?)),
    }
}

/// One constructible tuple discovered by a parameter sweep.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibleTuple {
    pub params: LrcParams,
    pub rule: &'static str,
}

/// One constructible MDS instance discovered by a parameter sweep.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FeasibleMds {
    pub n: usize,
    pub k: usize,
    pub rule: &'static str,
}

/// Every (n, k, r, delta, b) with n <= max_n that one of the three locality
/// families constructs over GF(q), in a fixed deterministic order (family,
/// then n, group size, delta, b, k ascending). Tuples whose per-group
/// certification cost fits neither under q^dim <= cap nor under the support
/// enumeration limit are left out, so everything emitted certifies cheaply.
pub fn feasible_parameters(q: u64, max_n: usize, cap: u64) -> Result<Vec<FeasibleTuple>> {
    let (p, m) = field::prime_power_parts(q)?;
    let base = FieldCtx::shared(p, m)?;
    let mut out = Vec::new();
    for family in [Family::QMinus1, Family::QPlus1Local, Family::QPlus1Delta] {
        let order = match family {
            Family::QMinus1 => q - 1,
            _ => q + 1,
        };
        for n in 2..=max_n {
            if order % n as u64 != 0 {
                continue;
            }
            for g in (2..=n).filter(|g| n % g == 0) {
                let deltas: Vec<usize> = match family {
                    Family::QMinus1 => (2..=g).collect(),
                    Family::QPlus1Local => vec![2],
                    Family::QPlus1Delta => (3..=g).collect(),
                    Family::Mds => unreachable!(),
                };
                for delta in deltas {
                    let r = g + 1 - delta;
                    for b in [1usize, 2] {
                        if field::gcd(b as u64, n as u64) != 1 {
                            continue;
                        }
                        for k in 1..=(n - 1).min(r * (n / g)) {
                            let params = LrcParams {
                                q,
                                n,
                                k,
                                r,
                                delta,
                                b,
                                family,
                            };
                            let Ok(lrc) = construct_lrc(&base, &params, &ConstructOptions::default())
                            else {
                                continue;
                            };
                            if locality_cost_fits(&lrc, cap) {
                                out.push(FeasibleTuple {
                                    params,
                                    rule: lrc.rule(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every MDS-constructible (n, k) with n <= max_n over GF(q), default layout.
pub fn feasible_mds(q: u64, max_n: usize) -> Result<Vec<FeasibleMds>> {
    let (p, m) = field::prime_power_parts(q)?;
    let base = FieldCtx::shared(p, m)?;
    let mut out = Vec::new();
    for n in 2..=max_n {
        if (q + 1) % n as u64 != 0 {
            continue;
        }
        for k in 2..n {
            if let Ok((code, rule)) = construct_mds_q_plus_1(&base, n, k, DVariant::ZeroCentered) {
                debug_assert_eq!(code.k(), k);
                out.push(FeasibleMds { n, k, rule });
            }
        }
    }
    Ok(out)
}

/// True when every repair group's distance is certifiable within the caps
/// (either a scan under q^dim <= cap or a small support enumeration).
fn locality_cost_fits(lrc: &LrcCode, cap: u64) -> bool {
    let code = lrc.code();
    let q = code.base_field().q();
    // all groups are shift-equivalent, so the first one decides
    let coords = lrc.repair_groups().group_coords(0);
    let dim = locality::restricted_code(code, coords).rows();
    dim == 0
        || linalg::pow_fits(q, dim, cap)
        || linalg::subset_work(coords.len(), coords.len() - dim + 1)
            <= locality::MAX_SUPPORT_WORK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u64) -> Arc<FieldCtx> {
        let (p, m) = field::prime_power_parts(q).unwrap();
        FieldCtx::shared(p, m).unwrap()
    }

    fn params(q: u64, n: usize, k: usize, r: usize, delta: usize, b: usize, family: Family) -> LrcParams {
        LrcParams {
            q,
            n,
            k,
            r,
            delta,
            b,
            family,
        }
    }

    fn expect_set(n: usize, exps: impl IntoIterator<Item = i64>) -> Vec<usize> {
        DefiningSet::new(n, exps).to_vec()
    }

    fn pm(vals: impl IntoIterator<Item = i64>) -> Vec<i64> {
        vals.into_iter().flat_map(|v| [v, -v]).collect()
    }

    #[test]
    fn singleton_bounds_match_known_values() {
        assert_eq!(singleton_bound_r_local(12, 4, 2), 8);
        assert_eq!(singleton_bound_r_local(9, 4, 2), 5);
        assert_eq!(singleton_bound_r_delta(65, 12, 2, 4), 39);
        assert_eq!(singleton_bound_r_delta(50, 15, 5, 6), 26);
        assert_eq!(
            singleton_bound_r_delta(12, 4, 2, 2),
            singleton_bound_r_local(12, 4, 2)
        );
        // a single full group degenerates to plain Singleton
        assert_eq!(singleton_bound_r_delta(14, 4, 4, 4), 11);
    }

    #[test]
    fn symmetric_runs_odd_length() {
        let d = symmetric_run(65, 1, 38, DVariant::ZeroCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(65, 14..=51));
        let d = symmetric_run(65, 1, 33, DVariant::ZeroCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(65, -16..=16));
        let d = symmetric_run(65, 2, 28, DVariant::ZeroCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(65, pm((0..14).map(|t| 2 * t + 1))));
        let d = symmetric_run(65, 2, 23, DVariant::ZeroCentered).unwrap();
        let mut want = pm((1..=11).map(|t| 2 * t));
        want.push(0);
        assert_eq!(d.to_vec(), expect_set(65, want));
        // the variant flag has no effect on odd lengths
        assert_eq!(
            symmetric_run(65, 2, 23, DVariant::HalfCentered).unwrap(),
            d
        );
    }

    #[test]
    fn symmetric_runs_even_length() {
        let d = symmetric_run(50, 1, 25, DVariant::ZeroCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(50, -12..=12));
        let d = symmetric_run(50, 1, 13, DVariant::HalfCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(50, 19..=31));
        let d = symmetric_run(28, 1, 17, DVariant::ZeroCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(28, -8..=8));
        let d = symmetric_run(28, 1, 17, DVariant::HalfCentered).unwrap();
        assert_eq!(d.to_vec(), expect_set(28, 6..=22));
        assert!(matches!(
            symmetric_run(50, 1, 24, DVariant::ZeroCentered),
            Err(Error::ParamDomain { .. })
        ));
    }

    #[test]
    fn symmetric_runs_are_symmetric_everywhere() {
        for n in [9usize, 10, 15, 28, 50, 65] {
            for b in 1..6usize {
                if field::gcd(b as u64, n as u64) != 1 {
                    continue;
                }
                for cnt in 0..=n {
                    for variant in [DVariant::ZeroCentered, DVariant::HalfCentered] {
                        match symmetric_run(n, b, cnt, variant) {
                            Ok(run) => {
                                assert_eq!(run.len(), cnt);
                                assert!(run.is_symmetric(), "n={n} b={b} cnt={cnt}");
                            }
                            Err(_) => assert!(n % 2 == 0 && cnt % 2 == 0 && cnt > 0),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_minus_1_matches_oracle_codes() {
        let f13 = ctx(13);
        let lrc =
            construct_q_minus_1(&f13, &params(13, 12, 4, 2, 2, 1, Family::QMinus1), None).unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 2, 3, 4, 5, 6, 9]);
        assert_eq!(lrc.rule(), "qm1");
        assert_eq!(lrc.target_distance(), 8);
        assert_eq!(lrc.code().bch_lower_bound(), 8);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 8);

        let lrc =
            construct_q_minus_1(&f13, &params(13, 12, 4, 2, 3, 1, Family::QMinus1), None).unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 2, 3, 4, 5, 8, 9]);
        assert_eq!(lrc.locality_offsets(), &[0, 1]);
        assert_eq!(lrc.target_distance(), 7);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 7);

        let lrc =
            construct_q_minus_1(&f13, &params(13, 12, 2, 1, 4, 1, Family::QMinus1), None).unwrap();
        assert_eq!(
            lrc.code().zeros().to_vec(),
            vec![0, 1, 2, 3, 4, 5, 6, 8, 9, 10]
        );
        assert_eq!(lrc.target_distance(), 8);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 8);

        let f9 = ctx(9);
        let lrc =
            construct_q_minus_1(&f9, &params(9, 8, 4, 2, 3, 1, Family::QMinus1), None).unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 4, 5]);
        assert_eq!(lrc.target_distance(), 3);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 3);

        let f16 = ctx(16);
        let lrc =
            construct_q_minus_1(&f16, &params(16, 15, 4, 2, 2, 1, Family::QMinus1), None).unwrap();
        assert_eq!(
            lrc.code().zeros().to_vec(),
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12]
        );
        assert_eq!(lrc.target_distance(), 11);
        assert_eq!(lrc.code().bch_lower_bound(), 11);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 11);
    }

    #[test]
    fn q_minus_1_coset_run_intersections() {
        let f13 = ctx(13);
        for (k, r, delta) in [(4, 2, 2), (4, 2, 3), (2, 1, 4), (6, 3, 2), (8, 2, 2), (3, 3, 2)] {
            let p = params(13, 12, k, r, delta, 1, Family::QMinus1);
            let lrc = construct_q_minus_1(&f13, &p, None).unwrap();
            if k % r != 0 {
                continue;
            }
            let expect = p.group_count() - p.mu() + 1;
            for l in lrc.locality_cosets() {
                let inter = l
                    .iter()
                    .filter(|&i| lrc.run_set().contains(i as i64))
                    .count();
                assert_eq!(inter, expect, "k={k} r={r} delta={delta}");
            }
        }
    }

    #[test]
    fn q_minus_1_custom_offsets() {
        let f13 = ctx(13);
        let p = params(13, 12, 4, 2, 3, 1, Family::QMinus1);
        let lrc = construct_q_minus_1(&f13, &p, Some(&[1, 2])).unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![1, 2, 3, 4, 5, 6, 9, 10]);
        let cert = certify(&lrc, ExhaustivePolicy::IfFits, 1 << 21).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.d_exhaustive, Some(7));

        assert!(matches!(
            construct_q_minus_1(&f13, &p, Some(&[0, 2])),
            Err(Error::ParamDomain { .. })
        ));
        assert!(matches!(
            construct_q_minus_1(&f13, &p, Some(&[3, 4])),
            Err(Error::ProgressionOutOfRange { .. })
        ));
        assert!(matches!(
            construct_q_minus_1(&f13, &p, Some(&[0])),
            Err(Error::ParamDomain { .. })
        ));
    }

    #[test]
    fn r_local_q_plus_1_small_codes() {
        let f8 = ctx(8);
        let lrc = construct_r_local_q_plus_1(
            &f8,
            &params(8, 9, 4, 2, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 3, 4, 5, 6]);
        assert_eq!(lrc.rule(), "qp1-bodd-mueven");
        assert_eq!(lrc.run_set().to_vec(), vec![3, 4, 5, 6]);
        assert_eq!(lrc.target_distance(), 5);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 5);

        let lrc = construct_r_local_q_plus_1(
            &f8,
            &params(8, 9, 2, 2, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 2, 3, 6, 7, 8]);
        assert_eq!(lrc.rule(), "qp1-bodd-muodd");
        assert_eq!(lrc.target_distance(), 8);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 8);

        let lrc = construct_r_local_q_plus_1(
            &f8,
            &params(8, 9, 4, 2, 2, 2, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 3, 6, 8]);
        assert_eq!(lrc.rule(), "qp1-beven-mueven");
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 5);

        let lrc = construct_r_local_q_plus_1(
            &f8,
            &params(8, 9, 2, 2, 2, 2, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 2, 3, 4, 5, 6, 7]);
        assert_eq!(lrc.rule(), "qp1-beven-muodd");
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 8);
    }

    #[test]
    fn r_local_q_plus_1_even_lengths() {
        let f9 = ctx(9);
        let lrc = construct_r_local_q_plus_1(
            &f9,
            &params(9, 10, 3, 1, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1-neven-muodd-nuodd");
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 1, 2, 4, 6, 8, 9]);
        assert_eq!(lrc.target_distance(), 6);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 6);

        let lrc = construct_r_local_q_plus_1(
            &f9,
            &params(9, 10, 4, 1, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1-neven-mueven-nuodd");
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 2, 4, 5, 6, 8]);
        assert_eq!(lrc.target_distance(), 4);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 4);

        let f7 = ctx(7);
        assert!(matches!(
            construct_r_local_q_plus_1(
                &f7,
                &params(7, 8, 3, 1, 2, 1, Family::QPlus1Local),
                DVariant::ZeroCentered,
            ),
            Err(Error::NoMatchingCase { .. })
        ));

        let z = construct_r_local_q_plus_1(
            &f7,
            &params(7, 8, 2, 1, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(z.rule(), "qp1-neven-mueven-nueven");
        assert_eq!(z.code().zeros().to_vec(), vec![0, 1, 2, 4, 6, 7]);
        let h = construct_r_local_q_plus_1(
            &f7,
            &params(7, 8, 2, 1, 2, 1, Family::QPlus1Local),
            DVariant::HalfCentered,
        )
        .unwrap();
        assert_eq!(h.rule(), "qp1-neven-mueven-nueven-half");
        assert_eq!(h.code().zeros().to_vec(), vec![0, 2, 3, 4, 5, 6]);
        for lrc in [&z, &h] {
            assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 6);
            assert!(certify(lrc, ExhaustivePolicy::IfFits, 1 << 20).unwrap().verdict);
        }

        // the run collapses to {0} and the defining set is the pure coset
        let lrc = construct_r_local_q_plus_1(
            &f7,
            &params(7, 8, 4, 1, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(lrc.target_distance(), 2);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 2);

        let f5 = ctx(5);
        let lrc = construct_r_local_q_plus_1(
            &f5,
            &params(5, 6, 2, 1, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(lrc.code().min_distance_exhaustive(1 << 20).unwrap(), 4);
    }

    #[test]
    fn r_delta_q_plus_1_reference_sets() {
        let f64 = ctx(64);
        let cases: [(usize, usize, usize, usize, &str, Vec<i64>); 6] = [
            (12, 2, 4, 1, "qp1d-bodd-mueven", (14..=51).collect()),
            (14, 2, 4, 1, "qp1d-bodd-muodd", (-16..=16).collect()),
            (16, 2, 4, 2, "qp1d-beven-mueven", pm((0..14).map(|t| 2 * t + 1))),
            (18, 2, 4, 2, "qp1d-beven-muodd", {
                let mut v = pm((1..=11).map(|t| 2 * t));
                v.push(0);
                v
            }),
            (21, 3, 3, 2, "qp1d-deltaodd-muodd", pm((0..16).map(|t| 2 * t + 1))),
            (24, 3, 3, 2, "qp1d-deltaodd-mueven", {
                let mut v = pm((1..=13).map(|t| 2 * t));
                v.push(0);
                v
            }),
        ];
        for (k, r, delta, b, rule, d_exps) in cases {
            let p = params(64, 65, k, r, delta, b, Family::QPlus1Delta);
            let lrc = construct_r_delta_q_plus_1(&f64, &p, DVariant::ZeroCentered).unwrap();
            assert_eq!(lrc.rule(), rule, "k={k}");
            assert_eq!(lrc.run_set().to_vec(), expect_set(65, d_exps), "k={k}");
            assert_eq!(lrc.code().zeros().len(), 65 - k, "k={k}");
            assert_eq!(lrc.code().k(), k);
            assert_eq!(
                lrc.code().bch_lower_bound(),
                lrc.target_distance(),
                "k={k}"
            );
            let cert = certify(&lrc, ExhaustivePolicy::IfFits, 1 << 20).unwrap();
            assert!(cert.verdict, "k={k}");
            assert_eq!(cert.d_exhaustive, None);
        }

        // spot-check one full defining set: run u cosets {0, +-1 mod 5}
        let p = params(64, 65, 12, 2, 4, 1, Family::QPlus1Delta);
        let lrc = construct_r_delta_q_plus_1(&f64, &p, DVariant::ZeroCentered).unwrap();
        let want: Vec<usize> = (0..65)
            .filter(|&i| [0, 1, 4].contains(&(i % 5)) || (14..=51).contains(&i))
            .collect();
        assert_eq!(lrc.code().zeros().to_vec(), want);
        assert_eq!(lrc.target_distance(), 39);
    }

    #[test]
    fn r_delta_q_plus_1_even_lengths() {
        let f49 = ctx(49);
        let lrc = construct_r_delta_q_plus_1(
            &f49,
            &params(49, 50, 15, 5, 6, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1d-neven-muodd-nuodd");
        assert_eq!(lrc.run_set().to_vec(), expect_set(50, -12..=12));
        assert_eq!(lrc.locality_offsets(), &[-2, -1, 0, 1, 2]);
        assert_eq!(lrc.code().zeros().len(), 35);
        assert_eq!(lrc.code().bch_lower_bound(), 26);
        assert_eq!(lrc.target_distance(), 26);
        assert!(certify(&lrc, ExhaustivePolicy::Skip, 1 << 20).unwrap().verdict);

        let lrc = construct_r_delta_q_plus_1(
            &f49,
            &params(49, 50, 28, 7, 4, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1d-neven-mueven-nuodd");
        assert_eq!(lrc.run_set().to_vec(), expect_set(50, 19..=31));
        assert_eq!(lrc.code().zeros().len(), 22);
        assert_eq!(lrc.code().bch_lower_bound(), 14);
        assert_eq!(lrc.target_distance(), 14);

        let f27 = ctx(27);
        let z = construct_r_delta_q_plus_1(
            &f27,
            &params(27, 28, 8, 4, 4, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(z.rule(), "qp1d-neven-mueven-nueven");
        assert_eq!(z.run_set().to_vec(), expect_set(28, -8..=8));
        let h = construct_r_delta_q_plus_1(
            &f27,
            &params(27, 28, 8, 4, 4, 1, Family::QPlus1Delta),
            DVariant::HalfCentered,
        )
        .unwrap();
        assert_eq!(h.rule(), "qp1d-neven-mueven-nueven-half");
        assert_eq!(h.run_set().to_vec(), expect_set(28, 6..=22));
        for lrc in [&z, &h] {
            assert_eq!(lrc.code().zeros().len(), 20);
            assert_eq!(lrc.code().bch_lower_bound(), 18);
            assert_eq!(lrc.target_distance(), 18);
            assert!(certify(lrc, ExhaustivePolicy::Skip, 1 << 20).unwrap().verdict);
        }

        // odd delta cannot live on an even length
        assert!(matches!(
            construct_r_delta_q_plus_1(
                &f49,
                &params(49, 50, 10, 3, 3, 2, Family::QPlus1Delta),
                DVariant::ZeroCentered,
            ),
            Err(Error::NoMatchingCase { .. })
        ));
        // odd mu with an even group count has no symmetric layout
        assert!(matches!(
            construct_r_delta_q_plus_1(
                &f49,
                &params(49, 50, 6, 2, 4, 1, Family::QPlus1Delta),
                DVariant::ZeroCentered,
            ),
            Err(Error::NoMatchingCase { .. })
        ));
    }

    #[test]
    fn r_delta_q_plus_1_through_the_quadratic_extension() {
        let f13 = ctx(13);
        let z = construct_r_delta_q_plus_1(
            &f13,
            &params(13, 14, 8, 4, 4, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(z.rule(), "qp1d-neven-mueven-nueven");
        assert_eq!(z.code().zeros().to_vec(), vec![0, 1, 6, 7, 8, 13]);
        assert_eq!(z.target_distance(), 4);
        assert_eq!(z.code().bch_lower_bound(), 4);
        assert!(certify(&z, ExhaustivePolicy::Skip, 1 << 20).unwrap().verdict);

        // the half-centered run lands inside the cosets: same code, other run
        let h = construct_r_delta_q_plus_1(
            &f13,
            &params(13, 14, 8, 4, 4, 1, Family::QPlus1Delta),
            DVariant::HalfCentered,
        )
        .unwrap();
        assert_eq!(h.rule(), "qp1d-neven-mueven-nueven-half");
        assert_eq!(h.code().zeros().to_vec(), z.code().zeros().to_vec());
        assert_eq!(h.run_set().to_vec(), vec![6, 7, 8]);
        assert_ne!(h.run_set(), z.run_set());
    }

    #[test]
    fn fractional_dimension_gating() {
        let f64 = ctx(64);
        let lrc = construct_r_local_q_plus_1(
            &f64,
            &params(64, 65, 10, 12, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1-bodd-muodd");
        assert_eq!(lrc.code().zeros().len(), 55);
        assert_eq!(lrc.code().bch_lower_bound(), lrc.target_distance());

        // odd k is never admitted when r does not divide it
        assert!(matches!(
            construct_r_local_q_plus_1(
                &f64,
                &params(64, 65, 3, 4, 2, 1, Family::QPlus1Local),
                DVariant::ZeroCentered,
            ),
            Err(Error::ParamDomain { .. })
        ));
        // an even mu needs mu >= 4
        assert!(matches!(
            construct_r_local_q_plus_1(
                &f64,
                &params(64, 65, 6, 4, 2, 1, Family::QPlus1Local),
                DVariant::ZeroCentered,
            ),
            Err(Error::ParamDomain { .. })
        ));
        let lrc = construct_r_local_q_plus_1(
            &f64,
            &params(64, 65, 14, 4, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().len(), 51);
        assert_eq!(lrc.code().bch_lower_bound(), 49);

        // q odd over an even length: odd k rides the all-odd case
        let f49 = ctx(49);
        let lrc = construct_r_local_q_plus_1(
            &f49,
            &params(49, 50, 9, 9, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1-neven-muodd-nuodd");
        assert_eq!(lrc.code().zeros().len(), 41);
        assert_eq!(lrc.code().bch_lower_bound(), 42);
        assert_eq!(lrc.target_distance(), 42);

        let lrc = construct_r_local_q_plus_1(
            &f49,
            &params(49, 50, 32, 9, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.rule(), "qp1-neven-mueven-nuodd");
        assert_eq!(lrc.code().zeros().len(), 18);
        assert_eq!(lrc.code().bch_lower_bound(), 16);
        assert_eq!(lrc.target_distance(), 16);

        // and the same gate guards the delta >= 3 family
        let lrc = construct_r_delta_q_plus_1(
            &f64,
            &params(64, 65, 10, 2, 4, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert_eq!(lrc.code().zeros().len(), 55);
        assert_eq!(lrc.code().bch_lower_bound(), 44);
        assert_eq!(lrc.target_distance(), 44);
    }

    #[test]
    fn mds_codes_match_oracle() {
        let f8 = ctx(8);
        let (c, rule) = construct_mds_q_plus_1(&f8, 9, 4, DVariant::ZeroCentered).unwrap();
        assert_eq!(rule, "mds-centered");
        assert_eq!(c.zeros().to_vec(), vec![0, 1, 2, 7, 8]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 6);
        let chk = check_mds(&c, 4, ExhaustivePolicy::IfFits, 1 << 20).unwrap();
        assert!(chk.verdict);
        assert_eq!(chk.d_exhaustive, Some(6));

        let (c, rule) = construct_mds_q_plus_1(&f8, 9, 5, DVariant::ZeroCentered).unwrap();
        assert_eq!(rule, "mds-shifted");
        assert_eq!(c.zeros().to_vec(), vec![3, 4, 5, 6]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 5);

        let f9 = ctx(9);
        let (c, rule) = construct_mds_q_plus_1(&f9, 10, 3, DVariant::ZeroCentered).unwrap();
        assert_eq!(rule, "mds-centered");
        assert_eq!(c.zeros().to_vec(), vec![0, 1, 2, 3, 7, 8, 9]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 8);
        let (c, rule) = construct_mds_q_plus_1(&f9, 10, 3, DVariant::HalfCentered).unwrap();
        assert_eq!(rule, "mds-shifted");
        assert_eq!(c.zeros().to_vec(), vec![2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 8);
        assert!(matches!(
            construct_mds_q_plus_1(&f9, 10, 4, DVariant::ZeroCentered),
            Err(Error::NonexistentMDS { .. })
        ));

        let f13 = ctx(13);
        let (c, rule) = construct_mds_q_plus_1(&f13, 14, 3, DVariant::ZeroCentered).unwrap();
        assert_eq!(rule, "mds-centered");
        assert_eq!(c.zeros().to_vec(), expect_set(14, -5..=5));
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 12);

        let f4 = ctx(4);
        let (c, _) = construct_mds_q_plus_1(&f4, 5, 2, DVariant::ZeroCentered).unwrap();
        assert_eq!(c.zeros().to_vec(), vec![0, 1, 4]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 4);
        let (c, _) = construct_mds_q_plus_1(&f4, 5, 3, DVariant::ZeroCentered).unwrap();
        assert_eq!(c.zeros().to_vec(), vec![2, 3]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 3);

        let f11 = ctx(11);
        let (c, _) = construct_mds_q_plus_1(&f11, 6, 3, DVariant::ZeroCentered).unwrap();
        assert_eq!(c.zeros().to_vec(), vec![0, 1, 5]);
        assert_eq!(c.min_distance_exhaustive(1 << 20).unwrap(), 4);
        let (c, _) = construct_mds_q_plus_1(&f11, 12, 3, DVariant::ZeroCentered).unwrap();
        assert_eq!(c.zeros().to_vec(), expect_set(12, -4..=4));
        assert_eq!(c.min_distance_exhaustive(1 << 24).unwrap(), 10);
        let (c, rule) = construct_mds_q_plus_1(&f11, 12, 3, DVariant::HalfCentered).unwrap();
        assert_eq!(rule, "mds-shifted");
        assert_eq!(c.zeros().to_vec(), expect_set(12, 2..=10));
        assert_eq!(c.min_distance_exhaustive(1 << 24).unwrap(), 10);

        assert!(matches!(
            construct_mds_q_plus_1(&f8, 9, 1, DVariant::ZeroCentered),
            Err(Error::ParamDomain { .. })
        ));
        assert!(matches!(
            construct_mds_q_plus_1(&f8, 9, 9, DVariant::ZeroCentered),
            Err(Error::ParamDomain { .. })
        ));
        assert!(matches!(
            construct_mds_q_plus_1(&f8, 10, 3, DVariant::ZeroCentered),
            Err(Error::LengthNotDividing { .. })
        ));
    }

    #[test]
    fn certify_flags_broken_codes() {
        let f8 = ctx(8);
        let good = construct_r_local_q_plus_1(
            &f8,
            &params(8, 9, 4, 2, 2, 1, Family::QPlus1Local),
            DVariant::ZeroCentered,
        )
        .unwrap();
        let cert = certify(&good, ExhaustivePolicy::IfFits, 1 << 20).unwrap();
        assert!(cert.verdict && cert.d_exact_by_sandwich);
        assert_eq!(cert.bch_bound, 5);
        assert_eq!(cert.singleton_bound, 5);
        assert_eq!(cert.d_exhaustive, Some(5));
        assert!(cert.locality.verdict);

        // hand-build a code whose defining set lost the coset {3, 6}
        let code = CyclicCode::from_defining_set(&f8, 9, DefiningSet::new(9, [0i64, 4, 5])).unwrap();
        let broken = LrcCode {
            code,
            params: params(8, 9, 6, 2, 2, 1, Family::QPlus1Local),
            rule: "qp1-bodd-mueven",
            l_offsets: vec![0],
            l_sets: vec![coset(9, 3, 0)],
            d_set: DefiningSet::new(9, 4..=5),
            groups: locality::repair_groups(9, 2, 2).unwrap(),
            target_d: singleton_bound_r_local(9, 6, 2),
        };
        let cert = certify(&broken, ExhaustivePolicy::IfFits, 1 << 20).unwrap();
        assert!(!cert.verdict);
        assert!(!cert.d_exact_by_sandwich || !cert.locality.verdict);

        // a required enumeration that cannot fit is an error, not a silent skip
        let big = construct_r_delta_q_plus_1(
            &ctx(64),
            &params(64, 65, 12, 2, 4, 1, Family::QPlus1Delta),
            DVariant::ZeroCentered,
        )
        .unwrap();
        assert!(matches!(
            certify(&big, ExhaustivePolicy::Require, 1 << 20),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn family_tags_round_trip() {
        for f in [
            Family::QMinus1,
            Family::QPlus1Local,
            Family::QPlus1Delta,
            Family::Mds,
        ] {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
            let json = serde_json::to_string(&f).unwrap();
            assert_eq!(json, format!("\"{}\"", f.tag()));
            assert_eq!(serde_json::from_str::<Family>(&json).unwrap(), f);
        }
        assert!("qplus1".parse::<Family>().is_err());
        assert_eq!("centered".parse::<DVariant>().unwrap(), DVariant::ZeroCentered);
        assert_eq!("half".parse::<DVariant>().unwrap(), DVariant::HalfCentered);
        assert!("middle".parse::<DVariant>().is_err());

        assert!(matches!(
            construct_lrc(
                &ctx(8),
                &params(8, 9, 4, 2, 2, 1, Family::Mds),
                &ConstructOptions::default(),
            ),
            Err(Error::ParamDomain { .. })
        ));
        assert!(matches!(
            construct_r_delta_q_plus_1(
                &ctx(8),
                &params(8, 9, 4, 2, 2, 1, Family::QPlus1Delta),
                DVariant::ZeroCentered,
            ),
            Err(Error::ParamDomain { .. })
        ));

        assert_eq!(default_step(Family::QPlus1Delta, 3), 2);
        assert_eq!(default_step(Family::QPlus1Delta, 4), 1);
        assert_eq!(default_step(Family::QMinus1, 3), 1);
    }

    #[test]
    fn feasible_sweep_is_deterministic_and_round_trips() {
        let tuples = feasible_parameters(8, 9, 1 << 20).unwrap();
        assert_eq!(tuples, feasible_parameters(8, 9, 1 << 20).unwrap());
        assert!(!tuples.is_empty());
        let base = ctx(8);
        for t in &tuples {
            let lrc = construct_lrc(&base, &t.params, &ConstructOptions::default()).unwrap();
            assert_eq!(lrc.rule(), t.rule);
            let cert = certify(&lrc, ExhaustivePolicy::Skip, 1 << 20).unwrap();
            assert!(cert.verdict, "{:?}", t.params);
        }
        assert!(tuples.iter().any(|t| t.params.n == 9
            && t.params.k == 4
            && t.params.b == 1
            && t.params.family == Family::QPlus1Local));
        assert!(tuples
            .iter()
            .any(|t| t.params.n == 9 && t.params.k == 4 && t.params.b == 2));
        assert!(tuples
            .iter()
            .any(|t| t.params.n == 7 && t.params.family == Family::QMinus1));
    }

    #[test]
    fn feasible_sweep_covers_the_reference_instances() {
        let tuples = feasible_parameters(64, 65, 1 << 20).unwrap();
        for (k, r, delta, b) in [
            (12, 2, 4, 1),
            (14, 2, 4, 1),
            (16, 2, 4, 2),
            (18, 2, 4, 2),
            (21, 3, 3, 2),
            (24, 3, 3, 2),
        ] {
            let want = params(64, 65, k, r, delta, b, Family::QPlus1Delta);
            assert!(
                tuples.iter().any(|t| t.params == want),
                "missing ({k}, {r}, {delta}, {b})"
            );
        }
    }

    #[test]
    fn feasible_mds_enumeration() {
        let rows = feasible_mds(9, 10).unwrap();
        assert!(rows.iter().all(|t| [2, 5, 10].contains(&t.n)));
        assert!(!rows.iter().any(|t| t.n == 10 && t.k % 2 == 0));
        assert!(rows
            .iter()
            .any(|t| t.n == 10 && t.k == 3 && t.rule == "mds-centered"));
        let n5: Vec<usize> = rows.iter().filter(|t| t.n == 5).map(|t| t.k).collect();
        assert_eq!(n5, vec![2, 3, 4]);
    }
}
