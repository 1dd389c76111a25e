//! Local two-row moves on MBPDs.
//!
//! An F-move at row `r` removes the rightmost heavy tile of row `r` and (unless
//! terminal) creates one in row `r+1`. An E-move at row `r` is its inverse.
//! Each move is classified by a right case and a left case, nine in all.

mod droop;
mod emove;
mod fmove;
mod segment;

use std::fmt;

pub use droop::{droop, undroop, DroopKind};
pub use emove::{e_move, e_move_traced, e_target_check, find_e_target, ETarget};
pub use fmove::{f_move, f_move_traced, f_target_check, f_target_in_row, find_f_target, FTarget};
pub use segment::{classify_light_sequence, find_doublecross, is_pipe_segment, LightFlavor};

/// Whether a target is ordinary (`f`, `e`) or terminal/initial (`f*`, `e*`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetKind {
    Plain,
    Star,
}

/// Left trichotomy of an F-target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeftF {
    /// The target is blank.
    B,
    /// The pipe through the marked J crosses the lower row segment.
    C,
    /// Neither.
    NotC,
}

/// Right trichotomy of an F-target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightF {
    /// Terminal: an `f*`-target.
    T,
    /// A doublecross ends at the window's right column.
    D,
    /// Ordinary.
    O,
}

/// Left trichotomy of an E-target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeftE {
    /// Straight.
    S,
    /// Doublecross at the window's left column.
    D,
    /// Left turn.
    L,
}

/// Right trichotomy of an E-target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightE {
    /// Initial: an `e*`-target.
    I,
    /// Plus above the target.
    P,
    /// No plus above the target.
    NotP,
}

impl fmt::Display for LeftF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeftF::B => "B",
            LeftF::C => "C",
            LeftF::NotC => "C\u{338}",
        })
    }
}

impl fmt::Display for RightF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RightF::T => "T",
            RightF::D => "D",
            RightF::O => "O",
        })
    }
}

impl fmt::Display for LeftE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeftE::S => "S",
            LeftE::D => "D",
            LeftE::L => "L",
        })
    }
}

impl fmt::Display for RightE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RightE::I => "I",
            RightE::P => "P",
            RightE::NotP => "P\u{338}",
        })
    }
}

impl LeftF {
    /// The left case of the inverse E-move.
    pub fn inverse(self) -> LeftE {
        match self {
            LeftF::B => LeftE::S,
            LeftF::C => LeftE::D,
            LeftF::NotC => LeftE::L,
        }
    }
}

impl RightF {
    /// The right case of the inverse E-move.
    pub fn inverse(self) -> RightE {
        match self {
            RightF::T => RightE::I,
            RightF::D => RightE::P,
            RightF::O => RightE::NotP,
        }
    }
}

/// A two-row rectangle `[top, top+1] × [left, right]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub top: usize,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            self.top,
            self.top + 1,
            self.left,
            self.right
        )
    }
}

/// One applied move, as printed by traces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    /// `'F'` or `'E'`.
    pub family: char,
    pub row: usize,
    pub label: String,
    pub window: Window,
    pub lambda: usize,
    pub rho: usize,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} r={} case={} window={} λ={} ρ={}",
            self.family, self.row, self.label, self.window, self.lambda, self.rho
        )
    }
}
