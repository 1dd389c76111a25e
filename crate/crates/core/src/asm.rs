//! Alternating sign matrices read off bumpless pipedreams.

use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::tile::Tile;

pub type Matrix = Vec<Vec<i8>>;

/// `+1` at R tiles, `-1` at (marked or unmarked) J tiles, `0` elsewhere.
///
/// The result is checked against the ASM axioms; a failure would mean the
/// grid model is broken, so it is reported as [`Error::NotAlternating`].
pub fn asm_of(d: &Mbpd) -> Result<Matrix> {
    let m: Matrix = d
        .rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| match t {
                    Tile::R => 1,
                    Tile::J | Tile::MarkedJ => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    check_asm(&m)?;
    Ok(m)
}

/// Every row and column has partial sums in `{0, 1}` and total `1`.
pub fn check_asm(m: &Matrix) -> Result<()> {
    let n = m.len();
    let line_ok = |line: &mut dyn Iterator<Item = i8>| {
        let mut sum = 0i32;
        for v in line {
            sum += v as i32;
            if !(0..=1).contains(&sum) {
                return false;
            }
        }
        sum == 1
    };
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAlternating(format!(
                "row {} has length {}",
                i + 1,
                row.len()
            )));
        }
        if !line_ok(&mut row.iter().copied()) {
            return Err(Error::NotAlternating(format!("row {}", i + 1)));
        }
    }
    for j in 0..n {
        if !line_ok(&mut m.iter().map(|row| row[j])) {
            return Err(Error::NotAlternating(format!("column {}", j + 1)));
        }
    }
    Ok(())
}

pub fn minus_one_count(m: &Matrix) -> usize {
    m.iter().flatten().filter(|&&v| v == -1).count()
}
