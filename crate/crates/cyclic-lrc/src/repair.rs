//! Erasure repair: group-local repair that reads only the surviving symbols
//! of one repair group (up to delta - 1 erasures there), and the global
//! parity-check decode used when a group's budget is exceeded.

use std::fmt;

use crate::construct::LrcCode;
use crate::cyclic::CyclicCode;
use crate::field::{FieldCtx, FieldId};
use crate::linalg::{Matrix, Solve};
use crate::locality;
use crate::{Error, Result};

/// A received word; None marks an erased symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    field: FieldId,
    symbols: Vec<Option<u32>>,
}

impl Word {
    pub fn new(field: FieldId, symbols: Vec<Option<u32>>) -> Word {
        Word { field, symbols }
    }

    /// A fully known word.
    pub fn from_codeword(field: FieldId, word: &[u32]) -> Word {
        Word {
            field,
            symbols: word.iter().map(|&c| Some(c)).collect(),
        }
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Option<u32>] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> Option<u32> {
        self.symbols[i]
    }

    pub fn set(&mut self, i: usize, value: u32) {
        self.symbols[i] = Some(value);
    }

    /// Marks the given coordinates erased.
    pub fn erase(&mut self, coords: &[usize]) {
        for &i in coords {
            self.symbols[i] = None;
        }
    }

    pub fn erased(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.is_none().then_some(i))
            .collect()
    }

    /// The underlying codeword, once nothing is erased.
    pub fn to_codeword(&self) -> Option<Vec<u32>> {
        self.symbols.iter().copied().collect()
    }
}

impl fmt::Display for Word {
    /// Fixed-width hex symbols separated by spaces; erasures render as dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = format!("{:x}", self.field.order() - 1).len();
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match s {
                Some(c) => write!(f, "{c:0width$x}")?,
                None => f.write_str(&"\u{b7}".repeat(width))?,
            }
        }
        Ok(())
    }
}

enum ErasureSolve {
    Filled(Vec<(usize, u32)>),
    /// The erased columns are dependent: no unique completion exists.
    Dependent,
    /// The known symbols already violate the parity checks.
    Inconsistent,
}

/// Solves h (restricted to the erased columns) for the erased values. The
/// j-th column of `h` corresponds to coordinate `coords[j]` of the word.
fn solve_erasures(ctx: &FieldCtx, h: &Matrix, coords: &[usize], word: &Word) -> ErasureSolve {
    let local_erased: Vec<usize> = (0..coords.len())
        .filter(|&j| word.get(coords[j]).is_none())
        .collect();
    if local_erased.is_empty() {
        return ErasureSolve::Filled(Vec::new());
    }
    let he = h.select_columns(&local_erased);
    let mut rhs = vec![0u32; h.rows()];
    for (row, slot) in rhs.iter_mut().enumerate() {
        let mut acc = 0u32;
        for (j, &coord) in coords.iter().enumerate() {
            if let Some(v) = word.get(coord) {
                acc = ctx.addc(acc, ctx.mulc(h.get(row, j), v));
            }
        }
        *slot = ctx.negc(acc);
    }
    match he.solve(ctx, &rhs) {
        Solve::Unique(x) => ErasureSolve::Filled(
            local_erased
                .iter()
                .zip(x)
                .map(|(&j, v)| (coords[j], v))
                .collect(),
        ),
        Solve::Underdetermined => ErasureSolve::Dependent,
        Solve::Inconsistent => ErasureSolve::Inconsistent,
    }
}

/// Repairs every erasure inside one repair group, reading only that group's
/// surviving symbols; at most delta - 1 may be gone there. Returns the
/// repaired coordinates.
pub fn local_repair(lrc: &LrcCode, word: &mut Word, group: usize) -> Result<Vec<usize>> {
    let code = lrc.code();
    assert_eq!(word.len(), code.n(), "word length mismatch");
    assert_eq!(word.field(), code.base_field().id(), "word field mismatch");
    let coords = lrc.repair_groups().group_coords(group);
    let erased: Vec<usize> = coords
        .iter()
        .copied()
        .filter(|&i| word.get(i).is_none())
        .collect();
    let max = lrc.params().delta - 1;
    if erased.len() > max {
        return Err(Error::TooManyLocalErasures {
            group,
            count: erased.len(),
            max,
        });
    }
    if erased.is_empty() {
        return Ok(Vec::new());
    }
    let ctx = code.base_field();
    let gen = locality::restricted_code(code, coords);
    let h = gen.null_space(ctx);
    match solve_erasures(ctx, &h, coords, word) {
        ErasureSolve::Filled(values) => {
            for &(coord, v) in &values {
                word.set(coord, v);
            }
            Ok(values.into_iter().map(|(c, _)| c).collect())
        }
        // within the delta - 1 budget a group of distance >= delta always
        // determines its erasures, so both failures mean corrupted input
        ErasureSolve::Dependent | ErasureSolve::Inconsistent => Err(Error::InconsistentWord),
    }
}

/// Repairs a single erased coordinate through its repair group.
pub fn local_repair_coord(lrc: &LrcCode, word: &mut Word, coord: usize) -> Result<u32> {
    if word.get(coord).is_some() {
        return Err(Error::NotErased { coord });
    }
    let group = lrc.repair_groups().group_of(coord);
    local_repair(lrc, word, group)?;
    Ok(word.get(coord).expect("coordinate was just repaired"))
}

/// Recovers every erasure of the word from the full parity-check system.
pub fn global_erasure_decode(code: &CyclicCode, word: &mut Word) -> Result<Vec<usize>> {
    assert_eq!(word.len(), code.n(), "word length mismatch");
    assert_eq!(word.field(), code.base_field().id(), "word field mismatch");
    let erased = word.erased();
    if erased.is_empty() {
        return Ok(Vec::new());
    }
    let ctx = code.base_field();
    let all: Vec<usize> = (0..code.n()).collect();
    match solve_erasures(ctx, code.parity_check_matrix(), &all, word) {
        ErasureSolve::Filled(values) => {
            for &(coord, v) in &values {
                word.set(coord, v);
            }
            Ok(values.into_iter().map(|(c, _)| c).collect())
        }
        ErasureSolve::Dependent => Err(Error::TooManyErasures {
            erased: erased.len(),
        }),
        ErasureSolve::Inconsistent => Err(Error::InconsistentWord),
    }
}

/// Symbols a repair of the given group's erasures has to read: the group's
/// survivors when the local budget suffices, every survivor otherwise.
pub fn repair_cost(lrc: &LrcCode, word: &Word, group: usize) -> usize {
    let coords = lrc.repair_groups().group_coords(group);
    let in_group = coords.iter().filter(|&&i| word.get(i).is_none()).count();
    if in_group == 0 {
        0
    } else if in_group <= lrc.params().delta - 1 {
        coords.len() - in_group
    } else {
        word.len() - word.erased().len()
    }
}

/// One action of a full-word repair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepairStep {
    /// One group fixed from its own survivors.
    Local {
        group: usize,
        repaired: Vec<usize>,
        symbols_read: usize,
    },
    /// Whatever remained, fixed from the global parity checks.
    Global {
        repaired: Vec<usize>,
        symbols_read: usize,
    },
}

/// Repairs every erasure: group-local wherever at most delta - 1 symbols of
/// a group are gone, then one global decode for any overloaded groups.
pub fn repair_plan(lrc: &LrcCode, word: &mut Word) -> Result<Vec<RepairStep>> {
    let mut steps = Vec::new();
    let delta = lrc.params().delta;
    for group in 0..lrc.repair_groups().group_count() {
        let coords = lrc.repair_groups().group_coords(group);
        let in_group = coords.iter().filter(|&&i| word.get(i).is_none()).count();
        if in_group == 0 || in_group > delta - 1 {
            continue;
        }
        let symbols_read = coords.len() - in_group;
        let repaired = local_repair(lrc, word, group)?;
        steps.push(RepairStep::Local {
            group,
            repaired,
            symbols_read,
        });
    }
    let leftover = word.erased();
    if !leftover.is_empty() {
        let symbols_read = word.len() - leftover.len();
        let repaired = global_erasure_decode(lrc.code(), word)?;
        steps.push(RepairStep::Global {
            repaired,
            symbols_read,
        });
    }
    Ok(steps)
}
