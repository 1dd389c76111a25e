use super::droop::droop;
use super::segment::{find_doublecross, is_pipe_segment};
use super::{LeftE, MoveRecord, RightE, TargetKind, Window};
use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::tile::Tile;

/// A fully classified E-target `(r+1, c)` for the move between rows `r` and `r+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETarget {
    /// Upper row of the move.
    pub row: usize,
    pub col: usize,
    pub kind: TargetKind,
    pub left: LeftE,
    pub right: RightE,
    /// Left column of the window.
    pub cprime: usize,
    pub lambda: usize,
    pub rho: usize,
}

impl ETarget {
    pub fn window(&self) -> Window {
        Window {
            top: self.row,
            left: self.cprime,
            right: self.col,
        }
    }

    /// Case label, right case first: `"IS"`, `"P\u{338}S"`, ...
    pub fn label(&self) -> String {
        format!("{}{}", self.right, self.left)
    }

    pub fn is_initial(&self) -> bool {
        self.kind == TargetKind::Star
    }

    pub fn record(&self) -> MoveRecord {
        MoveRecord {
            family: 'E',
            row: self.row,
            label: self.label(),
            window: self.window(),
            lambda: self.lambda,
            rho: self.rho,
        }
    }
}

fn no_target(row: usize, clause: impl Into<String>) -> Error {
    Error::NoTarget {
        row,
        clause: clause.into(),
    }
}

/// Classifies the E-target for rows `r`, `r+1`, or reports the first failed
/// condition. The target is `e*` exactly when row `r+1` has no heavy tile.
pub fn e_target_check(d: &Mbpd, r: usize) -> Result<ETarget> {
    let n = d.n();
    if r == 0 || r >= n {
        return Err(Error::IndexOutOfRange {
            index: r,
            bound: n.saturating_sub(1),
        });
    }
    let (kind, c) = match (1..=n).find(|&j| d.get(r + 1, j).is_heavy()) {
        Some(j) => (TargetKind::Plain, j),
        None => {
            let j = (1..=n)
                .rev()
                .find(|&j| d.get(r, j) == Tile::R || d.get(r + 1, j) == Tile::R)
                .expect("every row has an R");
            (TargetKind::Star, j)
        }
    };
    let cprime = (1..c)
        .rev()
        .find(|&j| d.get(r, j) == Tile::R && !is_pipe_segment(d, r + 1, j, c))
        .ok_or_else(|| no_target(r, "(e2) no R in the upper row starting a window"))?;
    if (cprime + 1..=n).any(|j| d.get(r, j).is_heavy()) {
        return Err(no_target(
            r,
            "(e3) heavy tile in the upper row right of the window's left column",
        ));
    }

    let right = match kind {
        TargetKind::Star => RightE::I,
        TargetKind::Plain if d.get(r, c) == Tile::Plus => RightE::P,
        TargetKind::Plain => RightE::NotP,
    };
    let rho = match right {
        RightE::P => (1..c)
            .rev()
            .find(|&j| d.get(r + 1, j) == Tile::R)
            .ok_or_else(|| {
                Error::InvariantViolated(format!("no R left of the E-target in {d:?}"))
            })?,
        _ => c,
    };
    let (left, lambda) = if !is_pipe_segment(d, r, cprime, c) {
        let j = (cprime + 1..=n)
            .find(|&j| d.get(r, j) == Tile::J)
            .ok_or_else(|| Error::InvariantViolated(format!("left turn without a J in {d:?}")))?;
        (LeftE::L, j)
    } else if let Some(j) = find_doublecross(d, r, cprime) {
        (LeftE::D, j)
    } else {
        (LeftE::S, cprime)
    };

    Ok(ETarget {
        row: r,
        col: c,
        kind,
        left,
        right,
        cprime,
        lambda,
        rho,
    })
}

/// The E-target for rows `r`, `r+1`, if there is one.
pub fn find_e_target(d: &Mbpd, r: usize) -> Option<ETarget> {
    e_target_check(d, r).ok()
}

/// Applies the E-move at row `r`.
pub fn e_move(d: &Mbpd, r: usize) -> Result<Mbpd> {
    e_move_traced(d, r).map(|(out, _)| out)
}

/// Applies the E-move at row `r` and returns the classified target too.
pub fn e_move_traced(d: &Mbpd, r: usize) -> Result<(Mbpd, ETarget)> {
    let t = e_target_check(d, r)?;
    let mut out = d.clone();
    if out.get(r + 1, t.col) == Tile::MarkedJ {
        out.set(r + 1, t.col, Tile::J);
    }
    if matches!(t.left, LeftE::S | LeftE::D) {
        out = droop(&out, r, t.lambda, t.rho)
            .map_err(|e| Error::InvariantViolated(format!("E-move {} on {d:?}: {e}", t.label())))?
            .0;
    }
    if out.get(r, t.lambda) == Tile::J {
        out.set(r, t.lambda, Tile::MarkedJ);
    }
    Ok((out, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Mbpd {
        Mbpd::parse_compact(s).unwrap()
    }

    #[test]
    fn initial_move_on_identity() {
        let t = find_e_target(&Mbpd::identity(2), 1).unwrap();
        assert_eq!(t.label(), "IS");
        assert_eq!((t.cprime, t.col, t.lambda, t.rho), (1, 2, 1, 2));
        assert_eq!(e_move(&Mbpd::identity(2), 1).unwrap().to_compact(), ".r/r+");
    }

    #[test]
    fn two_moves_build_a_kink() {
        let d = e_move(&Mbpd::identity(3), 2).unwrap();
        let d = e_move(&d, 1).unwrap();
        assert_eq!(d.to_compact(), ".r-/rjr/|r+");
    }

    #[test]
    fn straight_target_above_a_blank() {
        let t = find_e_target(&g("r--/|.r/|r+"), 1).unwrap();
        assert_eq!(
            (t.left, t.right, t.lambda, t.rho),
            (LeftE::S, RightE::NotP, 1, 2)
        );
        assert_eq!(t.label(), "P\u{338}S");
        assert_eq!(
            t.window(),
            Window {
                top: 1,
                left: 1,
                right: 2
            }
        );
    }

    #[test]
    fn out_of_range() {
        assert!(e_move(&Mbpd::identity(2), 2).is_err());
        assert!(e_move(&g(".r/r+"), 1).is_err());
    }
}
