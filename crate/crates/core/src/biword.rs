//! Biletters, working biwords, and reverse compatible pairs.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::WeightVec;
use crate::perm::{hecke_product, Permutation};
use crate::pipedream::{parse_pairs, PipeDream};

/// A pair `(i, a)` with `1 ≤ i ≤ a < n`.
///
/// `Ord` is the compatible-pair order: `(i1, a1) > (i2, a2)` iff `i1 > i2`,
/// or `i1 == i2` and `a1 < a2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Biletter {
    pub i: usize,
    pub a: usize,
}

impl Biletter {
    pub fn new(i: usize, a: usize) -> Self {
        Biletter { i, a }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        1 <= self.i && self.i <= self.a && self.a < n
    }
}

impl Ord for Biletter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.i.cmp(&other.i).then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for Biletter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Biletter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.a)
    }
}

/// A sequence of biletters with no ordering requirement.
///
/// This is the working form used while a biword is being reduced or
/// rebuilt; raising the first letter can temporarily break the order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Biword(pub Vec<Biletter>);

impl Biword {
    pub fn first(&self) -> Option<Biletter> {
        self.0.first().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Removes a leading `(i, i)`.
    pub fn rcp1_remove(&self) -> Result<Biword> {
        match self.first() {
            Some(b) if b.i == b.a => Ok(Biword(self.0[1..].to_vec())),
            Some(b) => Err(Error::PreconditionViolated(format!(
                "remove needs a first biletter (i,i), found {b}"
            ))),
            None => Err(Error::PreconditionViolated(
                "remove needs a nonempty biword".into(),
            )),
        }
    }

    /// Replaces a leading `(i, a)` with `i < a` by `(i+1, a)`.
    pub fn rcp2_raise(&self) -> Result<Biword> {
        match self.first() {
            Some(b) if b.i < b.a => {
                let mut v = self.0.clone();
                v[0] = Biletter::new(b.i + 1, b.a);
                Ok(Biword(v))
            }
            Some(b) => Err(Error::PreconditionViolated(format!(
                "raise needs a first biletter with i<a, found {b}"
            ))),
            None => Err(Error::PreconditionViolated(
                "raise needs a nonempty biword".into(),
            )),
        }
    }

    /// Prepends `(i, i)`.
    pub fn rrcp1_prepend(&self, i: usize) -> Biword {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(Biletter::new(i, i));
        v.extend_from_slice(&self.0);
        Biword(v)
    }

    /// Replaces a leading `(i, a)` with `i > 1` by `(i-1, a)`.
    pub fn rrcp2_lower(&self) -> Result<Biword> {
        match self.first() {
            Some(b) if b.i > 1 => {
                let mut v = self.0.clone();
                v[0] = Biletter::new(b.i - 1, b.a);
                Ok(Biword(v))
            }
            Some(b) => Err(Error::PreconditionViolated(format!(
                "lower needs a first biletter with i>1, found {b}"
            ))),
            None => Err(Error::PreconditionViolated(
                "lower needs a nonempty biword".into(),
            )),
        }
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Biletter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("()");
    }
    let parts: Vec<String> = letters.iter().map(|b| b.to_string()).collect();
    f.write_str(&parts.join(","))
}

/// A reverse compatible pair: a strictly decreasing sequence of biletters
/// valid for grid size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rcp {
    n: usize,
    letters: Vec<Biletter>,
}

impl Rcp {
    pub fn new(n: usize, letters: Vec<Biletter>) -> Result<Self> {
        if let Some(b) = letters.iter().find(|b| !b.is_valid(n)) {
            return Err(Error::InvalidBiword(format!(
                "biletter {b} violates 1 <= i <= a < {n}"
            )));
        }
        if let Some(w) = letters.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBiword(format!(
                "{} is not greater than {}",
                w[0], w[1]
            )));
        }
        Ok(Rcp { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Rcp {
            n,
            letters: Vec::new(),
        }
    }

    pub fn from_biword(n: usize, w: Biword) -> Result<Self> {
        Rcp::new(n, w.0)
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = parse_pairs(s)?
            .into_iter()
            .map(|(i, a)| Biletter::new(i, a))
            .collect();
        Rcp::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Biletter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_biword(&self) -> Biword {
        Biword(self.letters.clone())
    }

    /// `m_i` = number of biletters `(i, _)`.
    pub fn weight(&self) -> WeightVec {
        let mut m = vec![0; self.n];
        for b in &self.letters {
            m[b.i - 1] += 1;
        }
        WeightVec(m)
    }

    /// `s_{a_ℓ} * s_{a_{ℓ-1}} * … * s_{a_1}`.
    pub fn permutation(&self) -> Permutation {
        let word: Vec<usize> = self.letters.iter().rev().map(|b| b.a).collect();
        hecke_product(&word, self.n).expect("biletters are bounded by n")
    }

    pub fn is_reduced(&self) -> bool {
        self.len() == self.permutation().length()
    }

    /// Crossings at `(i, a - i + 1)`.
    pub fn to_pipedream(&self) -> PipeDream {
        PipeDream::new(self.n, self.letters.iter().map(|b| (b.i, b.a - b.i + 1)))
            .expect("biletter cells lie in the free staircase")
    }

    pub fn from_pipedream(p: &PipeDream) -> Rcp {
        let mut letters: Vec<Biletter> = p
            .crossings()
            .iter()
            .map(|&(i, j)| Biletter::new(i, i + j - 1))
            .collect();
        letters.sort_by(|x, y| y.cmp(x));
        Rcp { n: p.n(), letters }
    }
}

pub fn pd_of_rcp(b: &Rcp) -> PipeDream {
    b.to_pipedream()
}

pub fn rcp_of_pd(p: &PipeDream) -> Rcp {
    Rcp::from_pipedream(p)
}

pub fn rcp_weight(b: &Rcp) -> WeightVec {
    b.weight()
}

pub fn rcp_permutation(b: &Rcp) -> Permutation {
    b.permutation()
}

/// All biletters for size `n`, in decreasing order.
pub fn all_biletters(n: usize) -> Vec<Biletter> {
    let mut v: Vec<Biletter> = (1..n)
        .flat_map(|i| (i..n).map(move |a| Biletter::new(i, a)))
        .collect();
    v.sort_by(|x, y| y.cmp(x));
    v
}

/// Every RCP of size `n`: each subset of biletters sorts into exactly one.
pub fn enumerate_rcp(n: usize) -> impl Iterator<Item = Rcp> {
    let letters = all_biletters(n);
    let k = letters.len();
    assert!(k < 64, "too many biletters to enumerate");
    (0u64..1u64 << k).map(move |mask| Rcp {
        n,
        letters: letters
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &l)| l)
            .collect(),
    })
}

impl fmt::Display for Rcp {
    /// `(3,4),(3,5),(2,2)`; empty as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rcp(n: usize, s: &str) -> Rcp {
        Rcp::parse(n, s).unwrap()
    }

    #[test]
    fn order() {
        assert!(Biletter::new(2, 2) > Biletter::new(1, 1));
        assert!(Biletter::new(1, 1) > Biletter::new(1, 2));
        assert!(Rcp::parse(4, "(1,2),(1,1)").is_err());
        assert!(Rcp::parse(4, "(1,1),(1,1)").is_err());
        assert!(Rcp::parse(3, "(1,3)").is_err());
        assert!(Rcp::parse(3, "(2,1)").is_err());
    }

    #[test]
    fn weight_and_permutation() {
        let e = Rcp::empty(3);
        assert_eq!(e.weight(), WeightVec(vec![0, 0, 0]));
        assert_eq!(e.permutation(), Permutation::identity(3));
        let b = rcp(2, "(1,1)");
        assert_eq!(b.weight(), WeightVec(vec![1, 0]));
        assert_eq!(b.permutation(), "21".parse().unwrap());
        let b = rcp(3, "(2,2),(1,2)");
        assert_eq!(b.weight(), WeightVec(vec![1, 1, 0]));
        assert_eq!(b.permutation(), "132".parse().unwrap());
        assert!(!b.is_reduced());
    }

    #[test]
    fn reduction_operations() {
        let w = |s: &str| rcp(6, s).to_biword();
        assert_eq!(w("(1,1)").rcp1_remove().unwrap(), Biword::default());
        assert_eq!(w("(1,2)").rcp2_raise().unwrap(), w("(2,2)"));
        assert_eq!(w("(2,2)").rrcp2_lower().unwrap(), w("(1,2)"));
        assert_eq!(Biword::default().rrcp1_prepend(3), w("(3,3)"));
        assert!(w("(1,2)").rcp1_remove().is_err());
        assert!(w("(2,2)").rcp2_raise().is_err());
        assert!(w("(1,2)").rrcp2_lower().is_err());
        assert!(Biword::default().rcp2_raise().is_err());
        // raising can break the order; the working biword allows it
        let raised = w("(1,3),(1,4)").rcp2_raise().unwrap();
        assert!(Rcp::from_biword(6, raised).is_ok());
        let raised = w("(2,2),(1,1)").rrcp2_lower().unwrap();
        assert!(Rcp::from_biword(6, raised).is_err());
    }

    #[test]
    fn pipedream_correspondence() {
        let b = rcp(2, "(1,1)");
        assert_eq!(b.to_pipedream(), PipeDream::new(2, [(1, 1)]).unwrap());
        assert_eq!(
            Rcp::from_pipedream(&PipeDream::new(4, []).unwrap()),
            Rcp::empty(4)
        );
        let golden = rcp(6, "(3,4),(3,5),(2,2),(2,5),(1,1),(1,3),(1,5)");
        let expect =
            PipeDream::new(6, [(3, 2), (3, 3), (2, 1), (2, 4), (1, 1), (1, 3), (1, 5)]).unwrap();
        assert_eq!(golden.to_pipedream(), expect);
        assert_eq!(Rcp::from_pipedream(&expect), golden);
    }

    #[test]
    fn text_round_trip() {
        let b = rcp(6, "(3,4),(3,5),(2,2),(2,5),(1,1),(1,3),(1,5)");
        assert_eq!(b.to_string(), "(3,4),(3,5),(2,2),(2,5),(1,1),(1,3),(1,5)");
        assert_eq!(Rcp::empty(3).to_string(), "()");
        assert_eq!(rcp(3, "()"), Rcp::empty(3));
    }
}
