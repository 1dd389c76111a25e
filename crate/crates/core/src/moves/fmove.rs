use super::droop::undroop;
use super::segment::{find_doublecross, is_pipe_segment};
use super::{LeftF, MoveRecord, RightF, TargetKind, Window};
use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::tile::Tile;

/// A fully classified F-target `(r, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTarget {
    pub row: usize,
    pub col: usize,
    pub kind: TargetKind,
    pub left: LeftF,
    pub right: RightF,
    /// Left column of the window.
    pub b: usize,
    /// Right column of the window.
    pub cprime: usize,
    pub lambda: usize,
    pub rho: usize,
}

impl FTarget {
    pub fn window(&self) -> Window {
        Window {
            top: self.row,
            left: self.b,
            right: self.cprime,
        }
    }

    /// Case label, right case first: `"DC"`, `"TB"`, ...
    pub fn label(&self) -> String {
        format!("{}{}", self.right, self.left)
    }

    pub fn is_terminal(&self) -> bool {
        self.kind == TargetKind::Star
    }

    pub fn record(&self) -> MoveRecord {
        MoveRecord {
            family: 'F',
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

/// Classifies the F-target whose heavy tile is the rightmost heavy tile of
/// row `r`, or reports the first failed condition.
pub fn f_target_check(d: &Mbpd, r: usize) -> Result<FTarget> {
    let n = d.n();
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange { index: r, bound: n });
    }
    let c = (1..=n)
        .rev()
        .find(|&j| d.get(r, j).is_heavy())
        .ok_or_else(|| no_target(r, "(f1) row has no heavy tile"))?;
    // the last row never holds a heavy tile
    assert!(r < n, "heavy tile in the last row of a valid grid");

    let (kind, cprime) = match (c + 1..=n).find(|&j| d.get(r + 1, j) == Tile::J) {
        Some(j) => (TargetKind::Plain, j),
        None => {
            if (c + 1..=n).any(|j| d.get(r + 1, j) == Tile::MarkedJ) {
                return Err(no_target(
                    r,
                    "(f2) only a marked J lies to the right in the next row",
                ));
            }
            let j = (1..=n)
                .rev()
                .find(|&j| d.get(r, j) == Tile::R)
                .expect("every row has an R");
            (TargetKind::Star, j)
        }
    };
    if (1..cprime).any(|j| d.get(r + 1, j).is_heavy()) {
        return Err(no_target(
            r,
            "(f3) heavy tile in the next row left of the window's right column",
        ));
    }

    let target = d.get(r, c);
    let b = if target == Tile::Blank {
        c
    } else {
        (1..c)
            .rev()
            .find(|&j| d.get(r, j) == Tile::R)
            .expect("an R lies left of a marked J")
    };
    let left = if target == Tile::Blank {
        LeftF::B
    } else if is_pipe_segment(d, r + 1, b, c) {
        LeftF::C
    } else {
        LeftF::NotC
    };
    let (right, rho) = match kind {
        TargetKind::Star => (RightF::T, cprime),
        TargetKind::Plain => {
            let dc = (c + 1..cprime)
                .find(|&j| d.get(r, j) == Tile::R && find_doublecross(d, r, j) == Some(cprime));
            match dc {
                Some(j) => (RightF::D, j),
                None => (RightF::O, cprime),
            }
        }
    };

    assert!(
        matches!(d.get(r + 1, c), Tile::Horiz | Tile::R),
        "tile below an F-target must be Horiz or R in {d:?} at row {r}"
    );
    assert!(
        is_pipe_segment(d, r + 1, c, cprime),
        "lower row of an F-window must hold a pipe segment in {d:?}"
    );
    if right == RightF::T {
        assert_eq!(
            d.get(r + 1, cprime),
            Tile::Plus,
            "terminal F-target needs a Plus at the lower right in {d:?}"
        );
    }

    Ok(FTarget {
        row: r,
        col: c,
        kind,
        left,
        right,
        b,
        cprime,
        lambda: c,
        rho,
    })
}

/// The F-target of row `r`, if there is one.
pub fn f_target_in_row(d: &Mbpd, r: usize) -> Option<FTarget> {
    f_target_check(d, r).ok()
}

/// The maximum F-target: the bottommost, then rightmost, heavy tile.
/// `None` iff `d` is the identity grid.
pub fn find_f_target(d: &Mbpd) -> Option<FTarget> {
    let r = (1..=d.n())
        .rev()
        .find(|&i| d.row(i).iter().any(|t| t.is_heavy()))?;
    Some(f_target_check(d, r).expect("the maximum heavy tile is always an F-target"))
}

/// Applies the F-move at row `r`.
pub fn f_move(d: &Mbpd, r: usize) -> Result<Mbpd> {
    f_move_traced(d, r).map(|(out, _)| out)
}

/// Applies the F-move at row `r` and returns the classified target too.
pub fn f_move_traced(d: &Mbpd, r: usize) -> Result<(Mbpd, FTarget)> {
    let t = f_target_check(d, r)?;
    let mut out = d.clone();
    if out.get(r, t.col) == Tile::MarkedJ {
        out.set(r, t.col, Tile::J);
    }
    if matches!(t.left, LeftF::B | LeftF::C) {
        out = undroop(&out, r, t.lambda, t.rho)
            .map_err(|e| Error::InvariantViolated(format!("F-move {} on {d:?}: {e}", t.label())))?
            .0;
    }
    if out.get(r + 1, t.cprime) == Tile::J {
        out.set(r + 1, t.cprime, Tile::MarkedJ);
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
    fn identity_has_no_target() {
        for n in 1..=4 {
            assert!(find_f_target(&Mbpd::identity(n)).is_none());
        }
        assert!(matches!(
            f_move(&Mbpd::identity(2), 1),
            Err(Error::NoTarget { row: 1, .. })
        ));
    }

    #[test]
    fn two_by_two() {
        let t = find_f_target(&g(".r/r+")).unwrap();
        assert_eq!(
            t,
            FTarget {
                row: 1,
                col: 1,
                kind: TargetKind::Star,
                left: LeftF::B,
                right: RightF::T,
                b: 1,
                cprime: 2,
                lambda: 1,
                rho: 2
            }
        );
        assert_eq!(t.label(), "TB");
        assert_eq!(f_move(&g(".r/r+"), 1).unwrap(), Mbpd::identity(2));
    }

    #[test]
    fn first_moves_of_worked_example() {
        let d = g("...r--/..rjr-/.rxr+-/r+-+jr/||r+-+/||||r+");
        let t = find_f_target(&d).unwrap();
        assert_eq!((t.row, t.col, t.label()), (3, 3, "DC".to_string()));
        assert_eq!(
            t.record().to_string(),
            "F r=3 case=DC window=[3,4]x[2,5] λ=3 ρ=4"
        );
        let (d, _) = f_move_traced(&d, 3).unwrap();
        assert_eq!(d.to_compact(), "...r--/..rjr-/.r+-+-/r+jrxr/||r+-+/||||r+");
        let (d, t) = f_move_traced(&d, 4).unwrap();
        assert_eq!(t.label(), "TC");
        assert_eq!(d.to_compact(), "...r--/..rjr-/.r+-+-/r+jr+-/||r+jr/||||r+");
    }
}
