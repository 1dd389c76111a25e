use std::fmt;

use crate::error::{Dir, Error, Result};

/// The seven tile kinds of a marked bumpless pipedream.
///
/// The declaration order is the enumeration order used by
/// [`crate::enumerate::enumerate_mbpd`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Blank,
    Horiz,
    Vert,
    Plus,
    R,
    J,
    MarkedJ,
}

impl Tile {
    pub const ALL: [Tile; 7] = [
        Tile::Blank,
        Tile::Horiz,
        Tile::Vert,
        Tile::Plus,
        Tile::R,
        Tile::J,
        Tile::MarkedJ,
    ];

    pub fn connects(self, dir: Dir) -> bool {
        match dir {
            Dir::Left => self.left(),
            Dir::Right => self.right(),
            Dir::Up => self.up(),
            Dir::Down => self.down(),
        }
    }

    pub fn left(self) -> bool {
        matches!(self, Tile::Horiz | Tile::Plus | Tile::J | Tile::MarkedJ)
    }

    pub fn right(self) -> bool {
        matches!(self, Tile::Horiz | Tile::Plus | Tile::R)
    }

    pub fn up(self) -> bool {
        matches!(self, Tile::Vert | Tile::Plus | Tile::J | Tile::MarkedJ)
    }

    pub fn down(self) -> bool {
        matches!(self, Tile::Vert | Tile::Plus | Tile::R)
    }

    /// Blank and marked-J tiles are heavy; they carry the weight.
    pub fn is_heavy(self) -> bool {
        matches!(self, Tile::Blank | Tile::MarkedJ)
    }

    pub fn is_light(self) -> bool {
        !self.is_heavy()
    }

    /// True for both the unmarked and the marked J.
    pub fn is_j_like(self) -> bool {
        matches!(self, Tile::J | Tile::MarkedJ)
    }

    /// The unmarked tile with the given connections, if one exists.
    pub fn from_connections(left: bool, right: bool, up: bool, down: bool) -> Option<Tile> {
        match (left, right, up, down) {
            (false, false, false, false) => Some(Tile::Blank),
            (true, true, false, false) => Some(Tile::Horiz),
            (false, false, true, true) => Some(Tile::Vert),
            (true, true, true, true) => Some(Tile::Plus),
            (false, true, false, true) => Some(Tile::R),
            (true, false, true, false) => Some(Tile::J),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Horiz => '-',
            Tile::Vert => '|',
            Tile::Plus => '+',
            Tile::R => 'r',
            Tile::J => 'j',
            Tile::MarkedJ => 'x',
        }
    }

    pub fn from_char(ch: char) -> Result<Tile> {
        Ok(match ch {
            '.' => Tile::Blank,
            '-' => Tile::Horiz,
            '|' => Tile::Vert,
            '+' => Tile::Plus,
            'r' => Tile::R,
            'j' => Tile::J,
            'x' => Tile::MarkedJ,
            other => return Err(Error::Parse(format!("unknown tile character {other:?}"))),
        })
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}
