//! Droops and undroops of a pipe segment between rows `r` and `r+1`.
//!
//! Both moves exchange the horizontal edges of rows `r` and `r+1` inside
//! the rectangle `[r, r+1] × [b, d]`; the vertical edges between the two
//! rows are then forced by tile parity. They differ only in their
//! preconditions.

use std::fmt;

use super::segment::{classify_light_sequence, is_pipe_segment, LightFlavor};
use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::tile::Tile;

/// Named by the droop's upper-left and lower-right corners.
///
/// | `D[r,b]` \ `D[r+1,d]` | Blank → J | R → Plus  |
/// |-----------------------|-----------|-----------|
/// | R → Blank             | Standard  | Fuse      |
/// | Plus → J              | Split     | SplitFuse |
///
/// An undroop reports the kind of the droop it inverts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DroopKind {
    Standard,
    Fuse,
    Split,
    SplitFuse,
}

impl fmt::Display for DroopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DroopKind::Standard => "standard",
            DroopKind::Fuse => "fuse",
            DroopKind::Split => "split",
            DroopKind::SplitFuse => "split-fuse",
        };
        f.write_str(s)
    }
}

/// Kind of the droop whose source grid is `d`.
fn droop_kind(d: &Mbpd, r: usize, b: usize, right: usize) -> DroopKind {
    let split = d.get(r, b) == Tile::Plus;
    let fuse = d.get(r + 1, right) == Tile::R;
    match (split, fuse) {
        (false, false) => DroopKind::Standard,
        (false, true) => DroopKind::Fuse,
        (true, false) => DroopKind::Split,
        (true, true) => DroopKind::SplitFuse,
    }
}

fn bounds_ok(d: &Mbpd, r: usize, b: usize, right: usize) -> bool {
    r >= 1 && r < d.n() && b >= 1 && b < right && right <= d.n()
}

/// The `(r, [b, right])`-droop.
pub fn droop(d: &Mbpd, r: usize, b: usize, right: usize) -> Result<(Mbpd, DroopKind)> {
    let fail = |clause| {
        Err(Error::DroopPreconditionViolated {
            row: r,
            left: b,
            right,
            clause,
        })
    };
    if !bounds_ok(d, r, b, right) {
        return fail("rectangle out of range");
    }
    let heavy_ok = [r, r + 1].iter().all(|&i| {
        (b..=right).all(|j| {
            d.get(i, j).is_light() || (i == r + 1 && j == right && d.get(i, j) == Tile::Blank)
        })
    });
    if !heavy_ok {
        return fail("rectangle must be light except a blank at the lower right");
    }
    if !is_pipe_segment(d, r, b, right) {
        return fail("upper row must be a pipe segment");
    }
    if classify_light_sequence(d, r + 1, b + 1, right - 1) != LightFlavor::Paired {
        return fail("lower interior must be a paired light sequence");
    }
    if d.get(r + 1, b).right() || d.get(r + 1, right).left() {
        return fail("lower row must not connect into the interior");
    }
    if d.get(r, b) == Tile::Horiz || d.get(r, right) == Tile::Plus {
        return fail("upper-left must not be Horiz and upper-right must not be Plus");
    }
    let kind = droop_kind(d, r, b, right);
    Ok((exchange_rows(d, r, b, right)?, kind))
}

/// The `(r, [b, right])`-undroop, inverse of the droop on the same rectangle.
pub fn undroop(d: &Mbpd, r: usize, b: usize, right: usize) -> Result<(Mbpd, DroopKind)> {
    let fail = |clause| {
        Err(Error::DroopPreconditionViolated {
            row: r,
            left: b,
            right,
            clause,
        })
    };
    if !bounds_ok(d, r, b, right) {
        return fail("rectangle out of range");
    }
    let heavy_ok = [r, r + 1].iter().all(|&i| {
        (b..=right)
            .all(|j| d.get(i, j).is_light() || (i == r && j == b && d.get(i, j) == Tile::Blank))
    });
    if !heavy_ok {
        return fail("rectangle must be light except a blank at the upper left");
    }
    if !is_pipe_segment(d, r + 1, b, right) {
        return fail("lower row must be a pipe segment");
    }
    if classify_light_sequence(d, r, b + 1, right - 1) != LightFlavor::Paired {
        return fail("upper interior must be a paired light sequence");
    }
    if d.get(r, b).right() || d.get(r, right).left() {
        return fail("upper row must not connect into the interior");
    }
    if d.get(r + 1, right) == Tile::Horiz || d.get(r + 1, b) == Tile::Plus {
        return fail("lower-right must not be Horiz and lower-left must not be Plus");
    }
    let out = exchange_rows(d, r, b, right)?;
    let kind = droop_kind(&out, r, b, right);
    Ok((out, kind))
}

fn exchange_rows(d: &Mbpd, r: usize, b: usize, right: usize) -> Result<Mbpd> {
    // horizontal edge between columns j and j+1, for b <= j < right
    let edges = |row: usize| -> Vec<bool> { (b..right).map(|j| d.get(row, j).right()).collect() };
    let (upper, lower) = (edges(r), edges(r + 1));
    let mut out = d.clone();
    for x in b..=right {
        let horiz = |row: usize, swapped: &[bool]| {
            let left = if x == b {
                d.get(row, x).left()
            } else {
                swapped[x - 1 - b]
            };
            let right_edge = if x == right {
                d.get(row, x).right()
            } else {
                swapped[x - b]
            };
            (left, right_edge)
        };
        let (l1, r1) = horiz(r, &lower);
        let up1 = d.get(r, x).up();
        let middle = (l1 as u8 + r1 as u8 + up1 as u8) % 2 == 1;
        let (l2, r2) = horiz(r + 1, &upper);
        let down2 = d.get(r + 1, x).down();
        let top = Tile::from_connections(l1, r1, up1, middle);
        let bottom = Tile::from_connections(l2, r2, middle, down2);
        match (top, bottom) {
            (Some(t), Some(u)) => {
                out.set(r, x, t);
                out.set(r + 1, x, u);
            }
            _ => {
                return Err(Error::InvariantViolated(format!(
                "exchanging rows {r},{} over [{b},{right}] leaves no tile at column {x} of {d:?}",
                r + 1
            )))
            }
        }
    }
    out.check().map_err(|e| {
        Error::InvariantViolated(format!("droop/undroop produced an invalid grid: {e}"))
    })?;
    Ok(out)
}
