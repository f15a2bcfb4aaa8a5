//! Dense univariate polynomials over a finite field context.
//!
//! Coefficients are stored as element codes, low degree first, always trimmed
//! so the zero polynomial has an empty coefficient vector. Every operation
//! takes the owning `FieldCtx` explicitly; polynomials remember which field
//! they belong to and refuse to mix contexts.

use crate::field::{FieldCtx, FieldElement, FieldId};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: FieldId,
    /// Element codes, low degree first, no trailing zeros.
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly {
            field: ctx.id(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::from_codes(ctx, &[1])
    }

    /// x^d
    pub fn monomial(ctx: &FieldCtx, d: usize) -> Poly {
        let mut coeffs = vec![0u32; d + 1];
        coeffs[d] = 1;
        Poly {
            field: ctx.id(),
            coeffs,
        }
    }

    pub fn from_codes(ctx: &FieldCtx, codes: &[u64]) -> Poly {
        let mut coeffs: Vec<u32> = codes.iter().map(|&c| ctx.elem(c).code()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: ctx.id(),
            coeffs,
        }
    }

    pub fn from_elems(ctx: &FieldCtx, elems: &[FieldElement]) -> Poly {
        for &e in elems {
            assert_eq!(e.field(), ctx.id(), "coefficient from a different field");
        }
        let mut coeffs: Vec<u32> = elems.iter().map(|e| e.code()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: ctx.id(),
            coeffs,
        }
    }

    /// prod (x - r) over the given roots.
    pub fn from_roots(ctx: &FieldCtx, roots: &[FieldElement]) -> Poly {
        let mut acc = Poly::one(ctx);
        for &r in roots {
            let factor = Poly::from_elems(ctx, &[ctx.neg(r), ctx.one()]);
            acc = acc.mul(&factor, ctx);
        }
        acc
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient code at degree i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff_elems(&self, ctx: &FieldCtx) -> Vec<FieldElement> {
        self.expect_ctx(ctx);
        self.coeffs.iter().map(|&c| ctx.elem(c as u64)).collect()
    }

    fn expect_ctx(&self, ctx: &FieldCtx) {
        assert_eq!(
            self.field,
            ctx.id(),
            "polynomial over {} used with context {}",
            self.field,
            ctx.id()
        );
    }

    fn trimmed(field: FieldId, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn add(&self, other: &Poly, ctx: &FieldCtx) -> Poly {
        self.expect_ctx(ctx);
        other.expect_ctx(ctx);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; len];
        for (i, o) in out.iter_mut().enumerate() {
            *o = ctx.addc(self.coeff(i), other.coeff(i));
        }
        Poly::trimmed(self.field, out)
    }

    pub fn sub(&self, other: &Poly, ctx: &FieldCtx) -> Poly {
        self.expect_ctx(ctx);
        other.expect_ctx(ctx);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; len];
        for (i, o) in out.iter_mut().enumerate() {
            *o = ctx.subc(self.coeff(i), other.coeff(i));
        }
        Poly::trimmed(self.field, out)
    }

    pub fn scale(&self, c: FieldElement, ctx: &FieldCtx) -> Poly {
        self.expect_ctx(ctx);
        assert_eq!(c.field(), ctx.id(), "scalar from a different field");
        let out = self.coeffs.iter().map(|&a| ctx.mulc(a, c.code())).collect();
        Poly::trimmed(self.field, out)
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldCtx) -> Poly {
        self.expect_ctx(ctx);
        other.expect_ctx(ctx);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(ctx);
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.addc(out[i + j], ctx.mulc(a, b));
            }
        }
        Poly::trimmed(self.field, out)
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &Poly, ctx: &FieldCtx) -> Result<(Poly, Poly)> {
        self.expect_ctx(ctx);
        div.expect_ctx(ctx);
        if div.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let dd = div.degree().unwrap();
        let lead_inv = ctx.invc(div.coeff(dd));
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            0u32;
            self.coeffs
                .len()
                .saturating_sub(div.coeffs.len())
                .saturating_add(1)
        ];
        while rem.len() > dd {
            let d = rem.len() - 1;
            let c = rem[d];
            if c != 0 {
                let f = ctx.mulc(c, lead_inv);
                quot[d - dd] = f;
                for (i, &dc) in div.coeffs.iter().enumerate() {
                    let idx = d - dd + i;
                    rem[idx] = ctx.subc(rem[idx], ctx.mulc(f, dc));
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((
            Poly::trimmed(self.field, quot),
            Poly::trimmed(self.field, rem),
        ))
    }

    /// Horner evaluation at x.
    pub fn evaluate(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        self.expect_ctx(ctx);
        assert_eq!(x.field(), ctx.id(), "point from a different field");
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = ctx.addc(ctx.mulc(acc, x.code()), c);
        }
        ctx.elem(acc as u64)
    }

    /// Reinterpret a polynomial over the declared base subfield of `ext` as a
    /// polynomial over the base field. Every coefficient must lie in the
    /// subfield.
    pub fn project_to_base(&self, ext: &FieldCtx) -> Result<Poly> {
        self.expect_ctx(ext);
        let base_id = ext.declared_base_id()?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, &c) in self.coeffs.iter().enumerate() {
            match ext.project_base(ext.elem(c as u64))? {
                Some(b) => coeffs.push(b.code()),
                None => return Err(Error::CoefficientOutsideSubfield { index }),
            }
        }
        Ok(Poly::trimmed(base_id, coeffs))
    }

    /// Lift a polynomial over the declared base of `ext` into `ext`.
    pub fn lift_to_ext(&self, ext: &FieldCtx) -> Result<Poly> {
        let base_id = ext.declared_base_id()?;
        if self.field != base_id {
            return Err(Error::MixedContexts);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            let b = crate::field::element_unchecked(base_id, c);
            coeffs.push(ext.embed_base(b)?.code());
        }
        Ok(Poly::trimmed(ext.id(), coeffs))
    }
}

impl std::fmt::Display for Poly {
    /// Codes as "c0 + c1*x + ..." skipping zero terms; "0" for the zero poly.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}
