use crate::grid::Mbpd;
use crate::tile::Tile;

/// Flavor of a light sequence, from its subsequence of R and J tiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LightFlavor {
    /// `(R J)*`
    Paired,
    /// `J (R J)*`
    TypeJ,
    /// `(R J)* R`
    TypeR,
    /// `J (R J)* R`
    TypeJR,
    /// Some tile in the range is heavy.
    NotLight,
}

/// Whether `D_{r,[b,c]}` is a pipe segment.
///
/// The interior must be Horiz/Plus; for `b < c` the left end must connect
/// right and the right end must connect left. A single tile qualifies iff it
/// is not blank.
pub fn is_pipe_segment(d: &Mbpd, r: usize, b: usize, c: usize) -> bool {
    debug_assert!(1 <= b && b <= c && c <= d.n());
    if b == c {
        return d.get(r, b) != Tile::Blank;
    }
    d.get(r, b).right()
        && d.get(r, c).left()
        && (b + 1..c).all(|j| matches!(d.get(r, j), Tile::Horiz | Tile::Plus))
}

/// Classifies `D_{r,[b,c]}`; an empty range (`c < b`) is paired.
pub fn classify_light_sequence(d: &Mbpd, r: usize, b: usize, c: usize) -> LightFlavor {
    let tiles = if c < b { &[][..] } else { &d.row(r)[b - 1..c] };
    if tiles.iter().any(|t| t.is_heavy()) {
        return LightFlavor::NotLight;
    }
    let mut rj = tiles.iter().filter(|t| matches!(t, Tile::R | Tile::J));
    let first = rj.next();
    let last = rj.next_back().or(first);
    // R and J alternate along a row of a valid grid, so the ends decide.
    match (first == Some(&Tile::J), last == Some(&Tile::R)) {
        (false, false) => LightFlavor::Paired,
        (true, false) => LightFlavor::TypeJ,
        (false, true) => LightFlavor::TypeR,
        (true, true) => LightFlavor::TypeJR,
    }
}

/// Column `d` such that `D_{[r,r+1],[b,d]}` is a doublecross, if any.
///
/// The only candidate is the first unmarked J right of `b` in row `r+1`.
pub fn find_doublecross(d: &Mbpd, r: usize, b: usize) -> Option<usize> {
    let n = d.n();
    if r >= n || d.get(r, b) != Tile::R {
        return None;
    }
    let col = (b + 1..=n).find(|&j| d.get(r + 1, j) == Tile::J)?;
    if is_pipe_segment(d, r, b, col) && is_pipe_segment(d, r + 1, b, col) {
        debug_assert_eq!(d.get(r + 1, b), Tile::Plus);
        debug_assert_eq!(d.get(r, col), Tile::Plus);
        Some(col)
    } else {
        None
    }
}
