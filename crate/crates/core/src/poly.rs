//! Exact sparse polynomials in `β` and `x1..xn` with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(e_β, e_1, …, e_n)`.
pub type Exponents = Vec<u32>;

/// A polynomial in `β, x1..xn`; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, i128>,
}

fn checked(v: Option<i128>) -> i128 {
    v.expect("polynomial coefficient overflowed i128")
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        Poly::monomial(nvars, c, 0, &vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    /// `c · β^beta · x^x`.
    pub fn monomial(nvars: usize, c: i128, beta: u32, x: &[u32]) -> Self {
        assert_eq!(x.len(), nvars, "exponent vector length");
        let mut p = Poly::zero(nvars);
        let mut e = Vec::with_capacity(nvars + 1);
        e.push(beta);
        e.extend_from_slice(x);
        p.add_term(e, c);
        p
    }

    /// The variable `x_i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        assert!(1 <= i && i <= nvars, "variable index out of range");
        let mut x = vec![0; nvars];
        x[i - 1] = 1;
        Poly::monomial(nvars, 1, 0, &x)
    }

    pub fn beta(nvars: usize) -> Self {
        Poly::monomial(nvars, 1, 1, &vec![0; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> i128 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Terms in canonical order: ascending total degree, then
    /// lexicographically descending exponent vector.
    pub fn terms(&self) -> Vec<(&Exponents, i128)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, &c)| (e, c)).collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    fn add_term(&mut self, e: Exponents, c: i128) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = checked(o.get().checked_add(c));
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: i128) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, &k) in &self.terms {
            p.add_term(e.clone(), checked(k.checked_mul(c)));
        }
        p
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Poly {
        assert!(
            1 <= i && i < self.nvars,
            "simple reflection index out of range"
        );
        let mut p = Poly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, i + 1);
            p.add_term(e, c);
        }
        p
    }

    /// `x_i`-degree stripped into the quotient by `x_i - x_{i+1}`, with a zero
    /// remainder required.
    pub fn div_by_difference(&self, i: usize) -> Result<Poly> {
        assert!(
            1 <= i && i < self.nvars,
            "simple reflection index out of range"
        );
        let mut rest = self.clone();
        let mut q = Poly::zero(self.nvars);
        loop {
            let lead = rest
                .terms
                .iter()
                .filter(|(e, _)| e[i] > 0)
                .max_by_key(|(e, _)| e[i])
                .map(|(e, &c)| (e.clone(), c));
            let Some((e, c)) = lead else { break };
            let mut qe = e.clone();
            qe[i] -= 1;
            q.add_term(qe.clone(), c);
            // rest -= c·x^qe·(x_i - x_{i+1})
            rest.add_term(e, -c);
            let mut shifted = qe;
            shifted[i + 1] += 1;
            rest.add_term(shifted, c);
        }
        if rest.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible { i, j: i + 1 })
        }
    }

    /// Replaces `β` by the integer `value`.
    pub fn substitute_beta(&self, value: i128) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let pw = checked(value.checked_pow(e[0]));
            let mut e = e.clone();
            e[0] = 0;
            p.add_term(e, checked(c.checked_mul(pw)));
        }
        p
    }

    /// Terms with no `β`.
    pub fn beta_free_part(&self) -> Poly {
        self.filter(|e| e[0] == 0)
    }

    /// Terms of least total `x`-degree.
    pub fn lowest_x_degree_part(&self) -> Poly {
        let xdeg = |e: &Exponents| e[1..].iter().sum::<u32>();
        match self.terms.keys().map(xdeg).min() {
            Some(m) => self.filter(|e| xdeg(e) == m),
            None => self.clone(),
        }
    }

    fn filter(&self, keep: impl Fn(&Exponents) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    beta: e[0],
                    x: e[1..].to_vec(),
                    coeff: c,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson, nvars: usize) -> Result<Poly> {
        let mut p = Poly::zero(nvars);
        for t in &j.terms {
            if t.x.len() != nvars {
                return Err(Error::Parse(format!(
                    "term has {} exponents, expected {nvars}",
                    t.x.len()
                )));
            }
            p = &p + &Poly::monomial(nvars, t.coeff, t.beta, &t.x);
        }
        Ok(p)
    }
}

fn canonical_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
pub fn divided_difference(f: &Poly, i: usize) -> Result<Poly> {
    (f - &f.swap_vars(i)).div_by_difference(i)
}

/// `π_i f = ∂_i((1 + β x_{i+1}) f)`.
pub fn pi_op(f: &Poly, i: usize) -> Result<Poly> {
    let n = f.nvars;
    let factor = &Poly::one(n) + &(&Poly::beta(n) * &Poly::x(n, i + 1));
    divided_difference(&(&factor * f), i)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "mismatched variable counts");
        let mut p = self.clone();
        for (e, &c) in &rhs.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "mismatched variable counts");
        let mut p = Poly::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, checked(c1.checked_mul(c2)));
            }
        }
        p
    }
}

impl fmt::Display for Poly {
    /// `x1 + x2 + b*x1*x2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let mut factors = Vec::new();
            let names =
                std::iter::once("b".to_string()).chain((1..=self.nvars).map(|i| format!("x{i}")));
            for (name, &p) in names.zip(e.iter()) {
                match p {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{p}")),
                }
            }
            let mag = c.unsigned_abs();
            if mag != 1 || factors.is_empty() {
                factors.insert(0, mag.to_string());
            }
            let body = factors.join("*");
            match (k, c < 0) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: `{"terms":[{"beta":1,"x":[1,1,0],"coeff":1}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub beta: u32,
    pub x: Vec<u32>,
    pub coeff: i128,
}
