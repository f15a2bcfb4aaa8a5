//! Serializable code descriptors: enough data to rebuild a constructed code
//! from scratch and re-audit the certificate it shipped with.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::construct::{
    certify, check_mds, construct_lrc, construct_mds_q_plus_1, ConstructOptions, DVariant,
    ExhaustivePolicy, Family, LrcCode, LrcParams, MdsCheck, OptimalityCertificate,
};
use crate::cyclic::CyclicCode;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::{Error, Result};

/// The base field presentation: which modulus and generator index the roots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub m: u32,
    /// Monic modulus, low degree first, length m + 1.
    pub modulus: Vec<u64>,
    /// Digit vector of the multiplicative generator.
    pub generator: Vec<u64>,
}

/// The audit stored with a descriptor, matching the code's family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CertificateDescriptor {
    Lrc(OptimalityCertificate),
    Mds(MdsCheck),
}

impl CertificateDescriptor {
    pub fn verdict(&self) -> bool {
        match self {
            CertificateDescriptor::Lrc(c) => c.verdict,
            CertificateDescriptor::Mds(c) => c.verdict,
        }
    }

    fn d_exhaustive(&self) -> Option<usize> {
        match self {
            CertificateDescriptor::Lrc(c) => c.d_exhaustive,
            CertificateDescriptor::Mds(c) => c.d_exhaustive,
        }
    }
}

/// A constructed code in portable form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    pub family: String,
    /// Which construction rule produced the code; a "-half" or "-shifted"
    /// suffix also records the symmetric-layout choice.
    pub theorem: String,
    /// Sorted exponents of the defining set.
    pub defining_set: Vec<usize>,
    /// Generator polynomial, low degree first, coefficients as digit vectors.
    pub generator_poly: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
    pub certificate: CertificateDescriptor,
}

impl CodeDescriptor {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn from_json(text: &str) -> Result<CodeDescriptor> {
        serde_json::from_str(text).map_err(|e| Error::DescriptorMismatch {
            what: format!("unreadable descriptor: {e}"),
        })
    }
}

fn field_descriptor(ctx: &FieldCtx) -> FieldDescriptor {
    FieldDescriptor {
        p: ctx.p(),
        m: ctx.m(),
        modulus: ctx.modulus().to_vec(),
        generator: ctx.digits(ctx.generator().code()),
    }
}

fn poly_digits(ctx: &FieldCtx, poly: &Poly) -> Vec<Vec<u64>> {
    poly.coeffs().iter().map(|&c| ctx.digits(c)).collect()
}

/// Captures a locally repairable code together with its audit.
pub fn describe_lrc(lrc: &LrcCode, cert: &OptimalityCertificate) -> CodeDescriptor {
    let code = lrc.code();
    let ctx = code.base_field();
    let p = lrc.params();
    CodeDescriptor {
        field: field_descriptor(ctx),
        n: p.n,
        k: p.k,
        r: Some(p.r),
        delta: Some(p.delta),
        b: Some(p.b),
        family: p.family.tag().to_string(),
        theorem: lrc.rule().to_string(),
        defining_set: code.zeros().to_vec(),
        generator_poly: poly_digits(ctx, code.generator_poly()),
        groups: Some(lrc.repair_groups().groups().to_vec()),
        certificate: CertificateDescriptor::Lrc(cert.clone()),
    }
}

/// Captures an MDS code together with its audit.
pub fn describe_mds(code: &CyclicCode, rule: &str, check: &MdsCheck) -> CodeDescriptor {
    let ctx = code.base_field();
    CodeDescriptor {
        field: field_descriptor(ctx),
        n: code.n(),
        k: code.k(),
        r: None,
        delta: None,
        b: None,
        family: Family::Mds.tag().to_string(),
        theorem: rule.to_string(),
        defining_set: code.zeros().to_vec(),
        generator_poly: poly_digits(ctx, code.generator_poly()),
        groups: None,
        certificate: CertificateDescriptor::Mds(check.clone()),
    }
}

/// A code reconstructed from a descriptor.
#[derive(Debug)]
pub enum RebuiltCode {
    Lrc(LrcCode),
    Mds(CyclicCode),
}

fn mismatch<T>(what: &str) -> Result<T> {
    Err(Error::DescriptorMismatch { what: what.into() })
}

fn layout_variant(theorem: &str) -> DVariant {
    if theorem.ends_with("-half") || theorem.ends_with("-shifted") {
        DVariant::HalfCentered
    } else {
        DVariant::ZeroCentered
    }
}

fn check_code(code: &CyclicCode, desc: &CodeDescriptor) -> Result<()> {
    let ctx = code.base_field();
    if code.zeros().to_vec() != desc.defining_set {
        return mismatch("defining set");
    }
    if poly_digits(ctx, code.generator_poly()) != desc.generator_poly {
        return mismatch("generator polynomial");
    }
    Ok(())
}

/// Reconstructs the described code, checking every structural field of the
/// descriptor against what the construction rule actually produces.
pub fn rebuild(desc: &CodeDescriptor) -> Result<RebuiltCode> {
    let q = desc
        .field
        .p
        .checked_pow(desc.field.m)
        .ok_or_else(|| Error::ParamDomain {
            reason: format!("field order {}^{} overflows", desc.field.p, desc.field.m),
        })?;
    let ctx: Arc<FieldCtx> = FieldCtx::shared_for(q)?;
    if field_descriptor(&ctx) != desc.field {
        return mismatch("field presentation");
    }
    let family: Family = desc.family.parse()?;
    let variant = layout_variant(&desc.theorem);
    match family {
        Family::Mds => {
            if desc.r.is_some() || desc.delta.is_some() || desc.b.is_some() {
                return mismatch("locality parameters on an mds descriptor");
            }
            if desc.groups.is_some() {
                return mismatch("groups on an mds descriptor");
            }
            let (code, rule) = construct_mds_q_plus_1(&ctx, desc.n, desc.k, variant)?;
            if rule != desc.theorem {
                return mismatch("theorem");
            }
            check_code(&code, desc)?;
            Ok(RebuiltCode::Mds(code))
        }
        _ => {
            let (Some(r), Some(delta), Some(b)) = (desc.r, desc.delta, desc.b) else {
                return mismatch("missing locality parameters");
            };
            let params = LrcParams {
                q,
                n: desc.n,
                k: desc.k,
                r,
                delta,
                b,
                family,
            };
            let opts = ConstructOptions {
                i_list: None,
                variant,
            };
            let lrc = construct_lrc(&ctx, &params, &opts)?;
            if lrc.rule() != desc.theorem {
                return mismatch("theorem");
            }
            check_code(lrc.code(), desc)?;
            if Some(lrc.repair_groups().groups().to_vec()) != desc.groups {
                return mismatch("groups");
            }
            Ok(RebuiltCode::Lrc(lrc))
        }
    }
}

/// Rebuilds the code and recomputes its certificate, mirroring whether the
/// stored one carried an enumerated distance; the recomputed certificate must
/// serialize byte-for-byte identically to the stored one.
pub fn verify(desc: &CodeDescriptor, cap: u64) -> Result<RebuiltCode> {
    let rebuilt = rebuild(desc)?;
    let policy = if desc.certificate.d_exhaustive().is_some() {
        ExhaustivePolicy::Require
    } else {
        ExhaustivePolicy::Skip
    };
    let fresh = match &rebuilt {
        RebuiltCode::Lrc(lrc) => {
            if !matches!(desc.certificate, CertificateDescriptor::Lrc(_)) {
                return mismatch("certificate family");
            }
            CertificateDescriptor::Lrc(certify(lrc, policy, cap)?)
        }
        RebuiltCode::Mds(code) => {
            if !matches!(desc.certificate, CertificateDescriptor::Mds(_)) {
                return mismatch("certificate family");
            }
            CertificateDescriptor::Mds(check_mds(code, desc.k, policy, cap)?)
        }
    };
    let stored = serde_json::to_string(&desc.certificate).expect("certificate serializes");
    let recomputed = serde_json::to_string(&fresh).expect("certificate serializes");
    if stored != recomputed {
        return mismatch("certificate");
    }
    Ok(rebuilt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::DEFAULT_ENUM_CAP;

    fn lrc_descriptor() -> CodeDescriptor {
        let base = FieldCtx::shared_for(13).unwrap();
        let params = LrcParams {
            q: 13,
            n: 12,
            k: 4,
            r: 2,
            delta: 2,
            b: 1,
            family: Family::QMinus1,
        };
        let lrc = construct_lrc(&base, &params, &ConstructOptions::default()).unwrap();
        let cert = certify(&lrc, ExhaustivePolicy::Require, DEFAULT_ENUM_CAP).unwrap();
        describe_lrc(&lrc, &cert)
    }

    #[test]
    fn lrc_descriptor_round_trips() {
        let desc = lrc_descriptor();
        assert_eq!(desc.field.p, 13);
        assert_eq!(desc.field.m, 1);
        assert_eq!(desc.theorem, "qm1");
        assert_eq!(desc.defining_set.len(), 8);
        assert!(desc.certificate.verdict());

        let parsed = CodeDescriptor::from_json(&desc.to_json()).unwrap();
        assert_eq!(parsed, desc);
        let rebuilt = verify(&parsed, DEFAULT_ENUM_CAP).unwrap();
        match rebuilt {
            RebuiltCode::Lrc(lrc) => assert_eq!(lrc.code().k(), 4),
            other => panic!("expected an lrc, got {other:?}"),
        }
    }

    #[test]
    fn mds_descriptor_round_trips() {
        let base = FieldCtx::shared_for(8).unwrap();
        let (code, rule) = construct_mds_q_plus_1(&base, 9, 4, DVariant::ZeroCentered).unwrap();
        let check = check_mds(&code, 4, ExhaustivePolicy::Require, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(check.d_exhaustive, Some(6));
        let desc = describe_mds(&code, rule, &check);

        assert_eq!(desc.field.modulus, vec![1, 1, 0, 1]);
        assert_eq!(desc.family, "mds");
        let json = desc.to_json();
        assert!(json.contains("\"singleton_bound\": 6"));
        assert!(!json.contains("\"r\""));
        assert!(!json.contains("\"locality\""));

        let parsed = CodeDescriptor::from_json(&json).unwrap();
        assert_eq!(parsed, desc);
        assert!(matches!(
            verify(&parsed, DEFAULT_ENUM_CAP).unwrap(),
            RebuiltCode::Mds(_)
        ));
    }

    #[test]
    fn half_variant_survives_the_round_trip() {
        let base = FieldCtx::shared_for(27).unwrap();
        let params = LrcParams {
            q: 27,
            n: 28,
            k: 8,
            r: 4,
            delta: 4,
            b: 1,
            family: Family::QPlus1Delta,
        };
        let opts = ConstructOptions {
            i_list: None,
            variant: DVariant::HalfCentered,
        };
        let lrc = construct_lrc(&base, &params, &opts).unwrap();
        assert_eq!(lrc.rule(), "qp1d-neven-mueven-nueven-half");
        let cert = certify(&lrc, ExhaustivePolicy::Skip, DEFAULT_ENUM_CAP).unwrap();
        let desc = describe_lrc(&lrc, &cert);
        let parsed = CodeDescriptor::from_json(&desc.to_json()).unwrap();
        let rebuilt = verify(&parsed, DEFAULT_ENUM_CAP).unwrap();
        match rebuilt {
            RebuiltCode::Lrc(back) => {
                assert_eq!(back.code().zeros(), lrc.code().zeros());
            }
            other => panic!("expected an lrc, got {other:?}"),
        }

        let shifted = construct_mds_q_plus_1(&base, 28, 5, DVariant::HalfCentered).unwrap();
        assert_eq!(shifted.1, "mds-shifted");
        let check = check_mds(&shifted.0, 5, ExhaustivePolicy::Skip, DEFAULT_ENUM_CAP).unwrap();
        let desc = describe_mds(&shifted.0, shifted.1, &check);
        assert!(matches!(
            verify(&desc, DEFAULT_ENUM_CAP).unwrap(),
            RebuiltCode::Mds(_)
        ));
    }

    #[test]
    fn tampered_descriptors_are_rejected() {
        let desc = lrc_descriptor();

        let mut bad = desc.clone();
        bad.defining_set.pop();
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "defining set"
        ));

        let mut bad = desc.clone();
        bad.theorem = "qp1d-bodd-mueven".into();
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "theorem"
        ));

        let mut bad = desc.clone();
        bad.generator_poly[0] = vec![0];
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "generator polynomial"
        ));

        let mut bad = desc.clone();
        // a different k regenerates a different defining set
        bad.k = 5;
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "defining set"
        ));

        let mut bad = desc.clone();
        if let CertificateDescriptor::Lrc(c) = &mut bad.certificate {
            c.singleton_bound += 1;
        }
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "certificate"
        ));

        let mut bad = desc.clone();
        bad.field.generator = vec![1];
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "field presentation"
        ));

        let mut bad = desc;
        bad.groups = None;
        assert!(matches!(
            verify(&bad, DEFAULT_ENUM_CAP),
            Err(Error::DescriptorMismatch { what }) if what == "groups"
        ));
    }
}
