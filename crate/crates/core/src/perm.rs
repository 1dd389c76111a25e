//! Permutations in one-line notation and the 0-Hecke (Demazure) product.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::tile::Tile;

/// A permutation of `[n]` in one-line notation, `w = w(1) w(2) … w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a permutation of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `w_0 = n n-1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        check_simple(i, n)?;
        let mut w = Self::identity(n);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation(inv)
    }

    /// Composition as functions: `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.size(),
            other.size(),
            "composing permutations of different sizes"
        );
        Permutation(other.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    /// `s_i · w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Result<Self> {
        check_simple(i, self.size())?;
        Ok(Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        ))
    }

    /// `w · s_i`: swaps the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Result<Self> {
        check_simple(i, self.size())?;
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Ok(Permutation(w))
    }

    /// `s_i` is a right descent: `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.size() && self.0[i - 1] > self.0[i]
    }

    /// `s_i` is a left descent: `w⁻¹(i) > w⁻¹(i+1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        if i == 0 || i >= self.size() {
            return false;
        }
        let pos = |v: usize| self.0.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    /// Permutations of `[n]` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

fn check_simple(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `s_i * w`: `s_i w` if that is longer than `w`, else `w`.
pub fn demazure_left(i: usize, w: &Permutation) -> Result<Permutation> {
    check_simple(i, w.size())?;
    if w.has_left_descent(i) {
        Ok(w.clone())
    } else {
        w.left_mul_simple(i)
    }
}

/// `w * s_i`: `w s_i` if that is longer than `w`, else `w`.
pub fn demazure_right(w: &Permutation, i: usize) -> Result<Permutation> {
    check_simple(i, w.size())?;
    if w.has_right_descent(i) {
        Ok(w.clone())
    } else {
        w.right_mul_simple(i)
    }
}

/// Demazure product `s_{word[0]} * s_{word[1]} * …` in `S_n`.
pub fn hecke_product(word: &[usize], n: usize) -> Result<Permutation> {
    word.iter()
        .try_fold(Permutation::identity(n), |w, &i| demazure_right(&w, i))
}

/// Associated permutation of an MBPD under Hecke semantics: once two pipes
/// have crossed, later crossings between them act as bumps.
///
/// Pipe `i` enters at the right edge of row `i`; the result sends `i` to the
/// column where it leaves the bottom edge.
pub fn mbpd_permutation(d: &Mbpd) -> Permutation {
    mbpd_permutation_ordered(d, false)
}

/// Same as [`mbpd_permutation`], processing cells of equal `row - col` in
/// reverse order when `reverse_ties` is set. Exists to test tie-order
/// independence.
pub fn mbpd_permutation_ordered(d: &Mbpd, reverse_ties: bool) -> Permutation {
    let n = d.n();
    // Labels carried on the east edge (entering from the right) and the north
    // edge (entering from above) of each cell.
    let mut from_right = vec![vec![0usize; n + 2]; n + 2];
    let mut from_top = vec![vec![0usize; n + 2]; n + 2];
    (1..=n).for_each(|i| from_right[i][n] = i);
    let mut crossed: HashSet<(usize, usize)> = HashSet::new();
    let mut w = vec![0usize; n];

    // row - col ranges over 1-n ..= n-1; every step of a pipe (left or down)
    // raises it by one, so this is a topological order of the strands.
    for diag in -(n as isize - 1)..=(n as isize - 1) {
        let mut cells: Vec<(usize, usize)> = (1..=n)
            .filter_map(|r| {
                let c = r as isize - diag;
                (c >= 1 && c <= n as isize).then_some((r, c as usize))
            })
            .collect();
        if reverse_ties {
            cells.reverse();
        }
        for (r, c) in cells {
            let east = from_right[r][c];
            let north = from_top[r][c];
            let (west, south) = match d.get(r, c) {
                Tile::Blank => (0, 0),
                Tile::Horiz => (east, 0),
                Tile::Vert => (0, north),
                Tile::R => (0, east),
                Tile::J | Tile::MarkedJ => (north, 0),
                Tile::Plus => {
                    let key = (east.min(north), east.max(north));
                    if crossed.insert(key) {
                        (east, north)
                    } else {
                        (north, east)
                    }
                }
            };
            if c > 1 {
                from_right[r][c - 1] = west;
            }
            if r < n {
                from_top[r + 1][c] = south;
            } else {
                w[south - 1] = c;
            }
        }
    }
    Permutation(w)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts digit form (`"1432"`) or comma form (`"[1,4,3,2]"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> =
            if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|p| p.trim().parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|e| Error::Parse(format!("bad permutation {s:?}: {e}")))?
                }
            } else {
                s.chars()
                    .map(|ch| ch.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?
            };
        Permutation::new(values)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.0
    }
}
