//! Exhaustive self-checks at a given size, grouped into suites.

use std::fmt;
use std::str::FromStr;

use crate::asm::{asm_of, minus_one_count};
use crate::bijection::{is_reduced_mbpd, phi, phi_traced, psi, psi_traced};
use crate::biword::enumerate_rcp;
use crate::enumerate::enumerate_mbpd;
use crate::error::Error;
use crate::groth::{groth, groth_recursive_with, DescentChoice, Method};
use crate::moves::{e_move_traced, f_move_traced, f_target_in_row, find_e_target};
use crate::perm::Permutation;
use crate::pipedream::enumerate_pd;
use crate::poly::{pi_op, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Bijection,
    Moves,
    Polynomials,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "counts" => Ok(Suite::Counts),
            "bijection" => Ok(Suite::Bijection),
            "moves" => Ok(Suite::Moves),
            "polynomials" => Ok(Suite::Polynomials),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Counts => "counts",
            Suite::Bijection => "bijection",
            Suite::Moves => "moves",
            Suite::Polynomials => "polynomials",
            Suite::All => "all",
        })
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    /// `None` on success, otherwise the first counterexample.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {:<12} {}", self.suite, self.name),
            Some(why) => write!(f, "FAIL  {:<12} {}: {}", self.suite, self.name, why),
        }
    }
}

type Outcome = Result<(), String>;

fn check(suite: &'static str, name: &'static str, o: Outcome) -> Check {
    Check {
        suite,
        name,
        failure: o.err(),
    }
}

/// Runs `suite` for every size `1..=n`.
pub fn run(suite: Suite, n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Counts | Suite::All) {
        out.push(check("counts", "object counts", counts(n)));
        out.push(check("counts", "ASM fibers", asm_fibers(n)));
    }
    if matches!(suite, Suite::Bijection | Suite::All) {
        out.push(check("bijection", "round trips", round_trips(n)));
        out.push(check(
            "bijection",
            "weight and permutation",
            preservation(n),
        ));
        out.push(check("bijection", "reduced restriction", reduced(n)));
    }
    if matches!(suite, Suite::Moves | Suite::All) {
        out.push(check("moves", "inverse moves and cases", move_inverses(n)));
    }
    if matches!(suite, Suite::Polynomials | Suite::All) {
        out.push(check("polynomials", "four methods agree", four_way(n)));
        out.push(check(
            "polynomials",
            "defining relation",
            defining_relation(n),
        ));
    }
    out
}

fn expected_count(n: usize) -> usize {
    1usize << (n * (n - 1) / 2)
}

fn counts(n: usize) -> Outcome {
    for k in 1..=n {
        let want = expected_count(k);
        let got = [
            enumerate_mbpd(k).count(),
            enumerate_pd(k).count(),
            enumerate_rcp(k).count(),
        ];
        if got.iter().any(|&g| g != want) {
            return Err(format!(
                "n={k}: MBPD/PD/RCP counts {got:?}, expected {want}"
            ));
        }
    }
    Ok(())
}

fn asm_fibers(n: usize) -> Outcome {
    for k in 1..=n {
        let mut total = 0usize;
        let mut seen = std::collections::BTreeSet::new();
        for d in enumerate_mbpd(k) {
            let a = asm_of(&d).map_err(|e| format!("{d:?}: {e}"))?;
            if seen.insert(a.clone()) {
                total += 1 << minus_one_count(&a);
            }
        }
        if total != expected_count(k) {
            return Err(format!("n={k}: fiber sizes sum to {total}"));
        }
    }
    Ok(())
}

fn round_trips(n: usize) -> Outcome {
    for k in 1..=n {
        for d in enumerate_mbpd(k) {
            let b = phi(&d);
            if psi(&b) != d {
                return Err(format!("psi(phi({d:?})) differs"));
            }
        }
        for b in enumerate_rcp(k) {
            let (d, _) = psi_traced(&b).map_err(|e| format!("psi({b}): {e}"))?;
            if phi(&d) != b {
                return Err(format!("phi(psi({b})) differs"));
            }
        }
    }
    Ok(())
}

fn preservation(n: usize) -> Outcome {
    for k in 1..=n {
        for d in enumerate_mbpd(k) {
            let b = phi(&d);
            if b.weight() != d.weight() || b.permutation() != d.permutation() {
                return Err(format!("{d:?} ↦ {b}"));
            }
        }
    }
    Ok(())
}

fn reduced(n: usize) -> Outcome {
    for k in 1..=n {
        let mut images = Vec::new();
        for d in enumerate_mbpd(k).filter(is_reduced_mbpd) {
            let (b, pops) = phi_traced(&d);
            if let Some(rec) = pops
                .iter()
                .flatten()
                .find(|r| r.label != "TB" && r.label != "OB")
            {
                return Err(format!("{d:?}: F-case {}", rec.label));
            }
            let (_, pushes) = psi_traced(&b).map_err(|e| e.to_string())?;
            if let Some(rec) = pushes
                .iter()
                .flatten()
                .find(|r| r.label != "IS" && r.label != "P\u{338}S")
            {
                return Err(format!("{b}: E-case {}", rec.label));
            }
            images.push(b);
        }
        images.sort();
        let mut reduced: Vec<_> = enumerate_rcp(k).filter(|b| b.is_reduced()).collect();
        reduced.sort();
        if images != reduced {
            return Err(format!(
                "n={k}: reduced grids do not map onto reduced pairs"
            ));
        }
    }
    Ok(())
}

fn move_inverses(n: usize) -> Outcome {
    for k in 1..=n {
        for d in enumerate_mbpd(k) {
            for r in 1..=k {
                if f_target_in_row(&d, r).is_some() {
                    let (e, ft) = f_move_traced(&d, r).map_err(|x| format!("{d:?} F{r}: {x}"))?;
                    let (back, et) =
                        e_move_traced(&e, r).map_err(|x| format!("{e:?} E{r}: {x}"))?;
                    if back != d {
                        return Err(format!("E{r}(F{r}({d:?})) = {back:?}"));
                    }
                    if ft.window() != et.window()
                        || ft.right.inverse() != et.right
                        || ft.left.inverse() != et.left
                    {
                        return Err(format!(
                            "{d:?} row {r}: F-case {} vs E-case {}",
                            ft.label(),
                            et.label()
                        ));
                    }
                }
                if find_e_target(&d, r).is_some() {
                    let (e, _) = e_move_traced(&d, r).map_err(|x| format!("{d:?} E{r}: {x}"))?;
                    let (back, _) = f_move_traced(&e, r).map_err(|x| format!("{e:?} F{r}: {x}"))?;
                    if back != d {
                        return Err(format!("F{r}(E{r}({d:?})) = {back:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn four_way(n: usize) -> Outcome {
    for k in 1..=n {
        for w in Permutation::all(k) {
            let g = groth(&w, Method::Recursion);
            if !g.is_nonnegative() {
                return Err(format!("{w}: negative coefficient in {g}"));
            }
            if groth_recursive_with(&w, DescentChoice::Largest) != g {
                return Err(format!("{w}: descent strategies differ"));
            }
            for m in [Method::Pd, Method::Rcp, Method::Mbpd] {
                let h = groth(&w, m);
                if h != g {
                    return Err(format!("{w}: {m} gives {h}, recursion gives {g}"));
                }
            }
        }
    }
    Ok(())
}

fn defining_relation(n: usize) -> Outcome {
    for k in 1..=n {
        let all: Vec<_> = Permutation::all(k)
            .into_iter()
            .map(|w| {
                let g = groth(&w, Method::Recursion);
                (w, g)
            })
            .collect();
        let lookup = |v: &Permutation| {
            &all.iter()
                .find(|(w, _)| w == v)
                .expect("all permutations listed")
                .1
        };
        for (w, g) in &all {
            for i in w.right_descents() {
                let ws = w.right_mul_simple(i).expect("descent in range");
                let g_ws = lookup(&ws);
                let pi_w = pi_op(g, i).map_err(|e| e.to_string())?;
                let pi_ws = pi_op(g_ws, i).map_err(|e| e.to_string())?;
                if &pi_w != g_ws {
                    return Err(format!("π_{i} G_{w} is not G_{ws}"));
                }
                // π_i² = -β π_i, so π_i G_{ws_i} = -β G_{ws_i}; both sides agree once β = -1
                if pi_ws != (&Poly::beta(k) * g_ws).scale(-1) {
                    return Err(format!("π_{i} G_{ws} is not -β G_{ws}"));
                }
                if pi_w.substitute_beta(-1) != pi_ws.substitute_beta(-1) {
                    return Err(format!("π_{i} G_{w} and π_{i} G_{ws} differ at β = -1"));
                }
            }
        }
    }
    Ok(())
}
