//! Classical (not necessarily reduced) pipedreams on the staircase
//! `{(i, j) : i + j ≤ n + 1}`.
//!
//! Only crossings carry information: the antidiagonal `i + j = n + 1` is
//! always J-shaped and every other staircase cell is a bump unless listed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::WeightVec;
use crate::perm::{hecke_product, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: usize,
    crossings: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn new(n: usize, crossings: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let crossings: BTreeSet<_> = crossings.into_iter().collect();
        if let Some(&(i, j)) = crossings
            .iter()
            .find(|&&(i, j)| i == 0 || j == 0 || i + j > n)
        {
            return Err(Error::PreconditionViolated(format!(
                "crossing ({i},{j}) is outside the free staircase of size {n}"
            )));
        }
        Ok(PipeDream { n, crossings })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crossings(&self) -> &BTreeSet<(usize, usize)> {
        &self.crossings
    }

    pub fn is_crossing(&self, i: usize, j: usize) -> bool {
        self.crossings.contains(&(i, j))
    }

    /// `m_i` = number of crossings in row `i`.
    pub fn weight(&self) -> WeightVec {
        let mut m = vec![0; self.n];
        for &(i, _) in &self.crossings {
            m[i - 1] += 1;
        }
        WeightVec(m)
    }

    /// Crossings read row by row from the top, right to left within a row,
    /// as simple-reflection indices `i + j - 1`.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut cells: Vec<_> = self.crossings.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells.into_iter().map(|(i, j)| i + j - 1).collect()
    }

    /// Associated permutation: pipe entering row `i` from the left leaves
    /// the top edge in column `w(i)`, repeated crossings acting as bumps.
    pub fn permutation(&self) -> Permutation {
        hecke_product(&self.reading_word(), self.n).expect("reading word letters lie in 1..n")
    }

    /// Free (non-antidiagonal) staircase cells in row-major order.
    pub fn free_cells(n: usize) -> Vec<(usize, usize)> {
        (1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| i + j <= n).map(move |j| (i, j)))
            .collect()
    }

    /// Tile picture: `+` crossing, `)` bump, `j` antidiagonal.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            for j in 1..=self.n + 1 - i {
                out.push(if i + j == self.n + 1 {
                    'j'
                } else if self.is_crossing(i, j) {
                    '+'
                } else {
                    ')'
                });
            }
            out.push('\n');
        }
        out
    }
}

/// All `2^{n(n-1)/2}` pipedreams of size `n`; the `k`-th free cell is a
/// crossing iff bit `k` of the running counter is set.
pub fn enumerate_pd(n: usize) -> impl Iterator<Item = PipeDream> {
    let cells = PipeDream::free_cells(n);
    let k = cells.len();
    assert!(k < 64, "too many free cells to enumerate");
    (0u64..1u64 << k).map(move |mask| PipeDream {
        n,
        crossings: cells
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &c)| c)
            .collect(),
    })
}

pub fn pd_weight(p: &PipeDream) -> WeightVec {
    p.weight()
}

pub fn pd_permutation(p: &PipeDream) -> Permutation {
    p.permutation()
}

impl fmt::Display for PipeDream {
    /// `n=3; (1,1),(2,1)`, or `n=3; ()` with no crossings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        if self.crossings.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PipeDream {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"n=N; (i,j),...\", got {s:?}")))?;
        let n = head
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad size in {s:?}")))?;
        PipeDream::new(n, parse_pairs(body)?)
    }
}

/// Parses `"(a,b),(c,d)"`; `""` and `"()"` are empty.
pub(crate) fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" {
        return Ok(Vec::new());
    }
    let inner = compact
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesised pairs, got {s:?}")))?;
    inner
        .split("),(")
        .map(|pair| {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad pair {pair:?}")))?;
            let parse = |v: &str| {
                v.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad pair {pair:?}: {e}")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}
