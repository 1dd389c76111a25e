//! β-Grothendieck polynomials, by divided differences and by three
//! enumerative sums.

use std::fmt;
use std::str::FromStr;

use crate::biword::enumerate_rcp;
use crate::enumerate::enumerate_mbpd;
use crate::error::{Error, Result};
use crate::grid::WeightVec;
use crate::perm::Permutation;
use crate::pipedream::enumerate_pd;
use crate::poly::{pi_op, Poly};

/// Which right descent `groth_recursive_with` peels off first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentChoice {
    Smallest,
    Largest,
}

/// How to compute a Grothendieck polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Recursion,
    Pd,
    Rcp,
    Mbpd,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Recursion, Method::Pd, Method::Rcp, Method::Mbpd];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recursion => "recursion",
            Method::Pd => "pd",
            Method::Rcp => "rcp",
            Method::Mbpd => "mbpd",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(Method::Recursion),
            "pd" => Ok(Method::Pd),
            "rcp" => Ok(Method::Rcp),
            "mbpd" => Ok(Method::Mbpd),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

pub fn groth(w: &Permutation, method: Method) -> Poly {
    match method {
        Method::Recursion => groth_recursive(w),
        Method::Pd => groth_from_pd(w),
        Method::Rcp => groth_from_rcp(w),
        Method::Mbpd => groth_from_mbpd(w),
    }
}

/// `x1^{n-1} x2^{n-2} ⋯ x_{n-1}`.
pub fn staircase(n: usize) -> Poly {
    let x: Vec<u32> = (1..=n).map(|i| (n - i) as u32).collect();
    Poly::monomial(n, 1, 0, &x)
}

pub fn groth_recursive(w: &Permutation) -> Poly {
    groth_recursive_with(w, DescentChoice::Smallest)
}

/// Walks from `w0` down to `w`, applying `π_i` for each step `v ← v s_i`
/// with `i` a right descent of `w⁻¹ v`.
pub fn groth_recursive_with(w: &Permutation, choice: DescentChoice) -> Poly {
    let n = w.size();
    let winv = w.inverse();
    let mut v = Permutation::longest(n);
    let mut g = staircase(n);
    loop {
        let x = winv.compose(&v);
        let descents = x.right_descents();
        let i = match choice {
            DescentChoice::Smallest => descents.first(),
            DescentChoice::Largest => descents.last(),
        };
        let Some(&i) = i else { break };
        g = pi_op(&g, i).expect("π_i of a polynomial is exact");
        v = v.right_mul_simple(i).expect("descent index is in range");
    }
    debug_assert_eq!(&v, w);
    g
}

fn term(n: usize, size: usize, len: usize, wt: &WeightVec) -> Poly {
    let x: Vec<u32> = wt.as_slice().iter().map(|&m| m as u32).collect();
    Poly::monomial(n, 1, (size - len) as u32, &x)
}

/// Sum over pipedreams with permutation `w`.
pub fn groth_from_pd(w: &Permutation) -> Poly {
    let n = w.size();
    let len = w.length();
    enumerate_pd(n)
        .filter(|p| &p.permutation() == w)
        .fold(Poly::zero(n), |acc, p| {
            &acc + &term(n, p.crossings().len(), len, &p.weight())
        })
}

/// Sum over reverse compatible pairs with permutation `w`.
pub fn groth_from_rcp(w: &Permutation) -> Poly {
    let n = w.size();
    let len = w.length();
    enumerate_rcp(n)
        .filter(|b| &b.permutation() == w)
        .fold(Poly::zero(n), |acc, b| {
            &acc + &term(n, b.len(), len, &b.weight())
        })
}

/// Sum over MBPDs with permutation `w`.
pub fn groth_from_mbpd(w: &Permutation) -> Poly {
    let n = w.size();
    let len = w.length();
    enumerate_mbpd(n)
        .filter(|d| &d.permutation() == w)
        .fold(Poly::zero(n), |acc, d| {
            &acc + &term(n, d.heavy_count(), len, &d.weight())
        })
}

/// The Schubert polynomial: the `β`-free part, which is also the lowest
/// `x`-degree part.
pub fn schubert(w: &Permutation) -> Poly {
    let g = groth_recursive(w);
    let s = g.beta_free_part();
    assert_eq!(
        s,
        g.lowest_x_degree_part(),
        "β-free and lowest-degree parts differ for {w}"
    );
    s
}
