//! The frozen showcase instances: ten (r, delta) constructions over GF(64),
//! GF(49) and GF(27) with their exact defining sets and optimal distances.
//! The `examples` subcommand walks this table, and the verification suite
//! holds every entry to exact set equality.

use std::sync::Arc;

use crate::construct::{self, ConstructOptions, DVariant, Family, LrcCode, LrcParams};
use crate::field::FieldCtx;
use crate::Result;

/// One frozen instance and the construction output it must reproduce.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceInstance {
    pub params: LrcParams,
    pub variant: DVariant,
    /// The construction case expected to fire.
    pub rule: &'static str,
    /// The expected defining set, canonical exponents in [0, n).
    pub zeros: &'static [usize],
    /// The optimal distance the bound sandwich pins.
    pub distance: usize,
}

impl ReferenceInstance {
    /// Runs the construction with this instance's layout choice.
    pub fn build(&self, base: &Arc<FieldCtx>) -> Result<LrcCode> {
        let opts = ConstructOptions {
            i_list: None,
            variant: self.variant,
        };
        construct::construct_lrc(base, &self.params, &opts)
    }
}

const fn qp1d(q: u64, n: usize, k: usize, r: usize, delta: usize, b: usize) -> LrcParams {
    LrcParams {
        q,
        n,
        k,
        r,
        delta,
        b,
        family: Family::QPlus1Delta,
    }
}

/// The ten showcase instances, in presentation order.
pub const REFERENCE_INSTANCES: [ReferenceInstance; 10] = [
    ReferenceInstance {
        params: qp1d(64, 65, 12, 2, 4, 1),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-bodd-mueven",
        zeros: &[
            0, 1, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
            28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48,
            49, 50, 51, 54, 55, 56, 59, 60, 61, 64,
        ],
        distance: 39,
    },
    ReferenceInstance {
        params: qp1d(64, 65, 14, 2, 4, 1),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-bodd-muodd",
        zeros: &[
            0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20, 21, 24, 25, 26,
            29, 30, 31, 34, 35, 36, 39, 40, 41, 44, 45, 46, 49, 50, 51, 52, 53, 54, 55, 56, 57,
            58, 59, 60, 61, 62, 63, 64,
        ],
        distance: 34,
    },
    ReferenceInstance {
        params: qp1d(64, 65, 16, 2, 4, 2),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-beven-mueven",
        zeros: &[
            0, 1, 2, 3, 5, 7, 8, 9, 10, 11, 12, 13, 15, 17, 18, 19, 20, 21, 22, 23, 25, 27, 28,
            30, 32, 33, 35, 37, 38, 40, 42, 43, 44, 45, 46, 47, 48, 50, 52, 53, 54, 55, 56, 57,
            58, 60, 62, 63, 64,
        ],
        distance: 29,
    },
    ReferenceInstance {
        params: qp1d(64, 65, 18, 2, 4, 2),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-beven-muodd",
        zeros: &[
            0, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15, 16, 17, 18, 20, 22, 23, 25, 27, 28, 30,
            32, 33, 35, 37, 38, 40, 42, 43, 45, 47, 48, 49, 50, 51, 52, 53, 55, 57, 58, 59, 60,
            61, 62, 63,
        ],
        distance: 24,
    },
    ReferenceInstance {
        params: qp1d(49, 50, 15, 5, 6, 1),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-neven-muodd-nuodd",
        zeros: &[
            0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 18, 19, 20, 21, 22, 28, 29, 30, 31, 32,
            38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49,
        ],
        distance: 26,
    },
    ReferenceInstance {
        params: qp1d(49, 50, 28, 7, 4, 1),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-neven-mueven-nuodd",
        zeros: &[
            0, 1, 9, 10, 11, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 39, 40, 41, 49,
        ],
        distance: 14,
    },
    ReferenceInstance {
        params: qp1d(27, 28, 8, 4, 4, 1),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-neven-mueven-nueven",
        zeros: &[
            0, 1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 15, 20, 21, 22, 23, 24, 25, 26, 27,
        ],
        distance: 18,
    },
    ReferenceInstance {
        params: qp1d(27, 28, 8, 4, 4, 1),
        variant: DVariant::HalfCentered,
        rule: "qp1d-neven-mueven-nueven-half",
        zeros: &[
            0, 1, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 27,
        ],
        distance: 18,
    },
    ReferenceInstance {
        params: qp1d(64, 65, 21, 3, 3, 2),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-deltaodd-muodd",
        zeros: &[
            1, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 16, 17, 19, 21, 23, 24, 25, 26, 27, 29, 31,
            34, 36, 38, 39, 40, 41, 42, 44, 46, 48, 49, 50, 51, 52, 54, 56, 58, 59, 60, 61, 62,
            64,
        ],
        distance: 33,
    },
    ReferenceInstance {
        params: qp1d(64, 65, 24, 3, 3, 2),
        variant: DVariant::ZeroCentered,
        rule: "qp1d-deltaodd-mueven",
        zeros: &[
            0, 1, 2, 4, 6, 8, 9, 10, 11, 12, 14, 16, 18, 19, 20, 21, 22, 24, 26, 29, 31, 34,
            36, 39, 41, 43, 44, 45, 46, 47, 49, 51, 53, 54, 55, 56, 57, 59, 61, 63, 64,
        ],
        distance: 28,
    },
];
