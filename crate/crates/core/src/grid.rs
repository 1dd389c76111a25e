//! The marked bumpless pipedream data model.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Dir, Error, Result, Side};
use crate::perm::{self, Permutation};
use crate::tile::Tile;

/// Heavy-tile counts per row, `m_i` for `i = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<usize>);

impl WeightVec {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An `n × n` marked bumpless pipedream.
///
/// Construction always goes through [`Mbpd::validate`], which checks that
/// adjacent tiles agree on shared edges, that every row has a pipe entering
/// from the right, that every column has a pipe leaving the bottom, and that
/// nothing crosses the top or left boundary.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mbpd {
    n: usize,
    tiles: Vec<Tile>,
}

/// JSON form `{"n": N, "rows": ["r-", "|r"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridJson {
    pub n: usize,
    pub rows: Vec<String>,
}

impl Mbpd {
    /// Validates a raw row-major tile matrix.
    pub fn validate(rows: Vec<Vec<Tile>>) -> Result<Mbpd> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("empty grid".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Parse(format!(
                "ragged grid: row {} has {} tiles, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let d = Mbpd {
            n,
            tiles: rows.into_iter().flatten().collect(),
        };
        d.check()?;
        Ok(d)
    }

    /// Builds a grid the caller knows to be valid; checked in debug builds.
    pub(crate) fn from_tiles_unchecked(n: usize, tiles: Vec<Tile>) -> Mbpd {
        let d = Mbpd { n, tiles };
        debug_assert!(d.check().is_ok(), "invalid grid produced:\n{d}");
        d
    }

    pub(crate) fn check(&self) -> Result<()> {
        let n = self.n;
        for r in 1..=n {
            for c in 1..=n {
                let t = self.get(r, c);
                if r == 1 && t.up() {
                    return Err(Error::BoundaryViolation {
                        side: Side::Top,
                        index: c,
                    });
                }
                if c == 1 && t.left() {
                    return Err(Error::BoundaryViolation {
                        side: Side::Left,
                        index: r,
                    });
                }
                if c == n && !t.right() {
                    return Err(Error::BoundaryViolation {
                        side: Side::Right,
                        index: r,
                    });
                }
                if r == n && !t.down() {
                    return Err(Error::BoundaryViolation {
                        side: Side::Bottom,
                        index: c,
                    });
                }
                if c < n && t.right() != self.get(r, c + 1).left() {
                    return Err(Error::EdgeMismatch {
                        row: r,
                        col: c,
                        dir: Dir::Right,
                    });
                }
                if r < n && t.down() != self.get(r + 1, c).up() {
                    return Err(Error::EdgeMismatch {
                        row: r,
                        col: c,
                        dir: Dir::Down,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tile at `(row, col)`, 1-based.
    pub fn get(&self, row: usize, col: usize) -> Tile {
        debug_assert!((1..=self.n).contains(&row) && (1..=self.n).contains(&col));
        self.tiles[(row - 1) * self.n + (col - 1)]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, t: Tile) {
        self.tiles[(row - 1) * self.n + (col - 1)] = t;
    }

    pub fn row(&self, row: usize) -> &[Tile] {
        &self.tiles[(row - 1) * self.n..row * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Tile>> {
        self.tiles.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The identity pipedream `D_id`: R tiles on the diagonal.
    pub fn identity(n: usize) -> Mbpd {
        Mbpd::rothe(&Permutation::identity(n))
    }

    /// The Rothe bumpless pipedream `D_w`: pipe `i` turns only at `(i, w(i))`.
    pub fn rothe(w: &Permutation) -> Mbpd {
        let n = w.size();
        let winv = w.inverse();
        let mut tiles = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let horiz = j > w.apply(i);
                let vert = winv.apply(j) < i;
                let t = if j == w.apply(i) {
                    Tile::R
                } else {
                    match (horiz, vert) {
                        (true, true) => Tile::Plus,
                        (true, false) => Tile::Horiz,
                        (false, true) => Tile::Vert,
                        (false, false) => Tile::Blank,
                    }
                };
                tiles.push(t);
            }
        }
        Mbpd::from_tiles_unchecked(n, tiles)
    }

    pub fn weight(&self) -> WeightVec {
        WeightVec(
            self.tiles
                .chunks(self.n)
                .map(|row| row.iter().filter(|t| t.is_heavy()).count())
                .collect(),
        )
    }

    pub fn heavy_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.is_heavy()).count()
    }

    pub fn is_identity(&self) -> bool {
        self.heavy_count() == 0
    }

    pub fn is_marked(&self) -> bool {
        self.tiles.contains(&Tile::MarkedJ)
    }

    /// Copy with every marked J replaced by an unmarked J.
    pub fn erase_marks(&self) -> Mbpd {
        Mbpd {
            n: self.n,
            tiles: self
                .tiles
                .iter()
                .map(|&t| if t == Tile::MarkedJ { Tile::J } else { t })
                .collect(),
        }
    }

    pub fn permutation(&self) -> Permutation {
        perm::mbpd_permutation(self)
    }

    /// Rows joined by `sep`.
    pub fn serialize_with(&self, sep: &str) -> String {
        self.tiles
            .chunks(self.n)
            .map(|row| row.iter().map(|t| t.to_char()).collect::<String>())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Newline-separated text form.
    pub fn serialize(&self) -> String {
        self.serialize_with("\n")
    }

    /// `/`-separated compact form, e.g. `".r/r+"`.
    pub fn to_compact(&self) -> String {
        self.serialize_with("/")
    }

    /// Parses the newline-separated form; a single trailing newline and
    /// carriage returns are tolerated.
    pub fn parse(text: &str) -> Result<Mbpd> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        Self::parse_rows(body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)))
    }

    pub fn parse_compact(text: &str) -> Result<Mbpd> {
        Self::parse_rows(text.trim().split('/'))
    }

    fn parse_rows<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Mbpd> {
        let rows = lines
            .map(|line| {
                line.chars()
                    .map(Tile::from_char)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Mbpd::validate(rows)
    }

    pub fn to_json(&self) -> GridJson {
        GridJson {
            n: self.n,
            rows: self
                .serialize_with("\n")
                .split('\n')
                .map(str::to_owned)
                .collect(),
        }
    }

    pub fn from_json(j: &GridJson) -> Result<Mbpd> {
        let d = Self::parse_rows(j.rows.iter().map(String::as_str))?;
        if d.n != j.n {
            return Err(Error::Parse(format!(
                "declared n={} but grid has {} rows",
                j.n, d.n
            )));
        }
        Ok(d)
    }

    /// ASCII picture with row and column indices.
    pub fn render_ascii(&self) -> String {
        let mut out = String::from("   ");
        for c in 1..=self.n {
            out.push_str(&format!("{}", c % 10));
        }
        out.push('\n');
        for r in 1..=self.n {
            out.push_str(&format!("{r:>2} "));
            out.extend(self.row(r).iter().map(|t| t.to_char()));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Mbpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for Mbpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mbpd({})", self.to_compact())
    }
}

impl FromStr for Mbpd {
    type Err = Error;

    /// Accepts either the compact or the newline form.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('/') {
            Mbpd::parse_compact(s)
        } else {
            Mbpd::parse(s)
        }
    }
}

impl Serialize for Mbpd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mbpd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GridJson::deserialize(d)?;
        Mbpd::from_json(&j).map_err(serde::de::Error::custom)
    }
}
