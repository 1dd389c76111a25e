//! The bijections `phi: MBPD(n) → RCP(n)` and `psi: RCP(n) → MBPD(n)`.
//!
//! `phi` repeatedly pops a biletter off the grid with a chain of F-moves;
//! `psi` pushes the biletters back in reverse with chains of E-moves.

use crate::biword::{Biletter, Biword, Rcp};
use crate::error::{Error, Result};
use crate::grid::Mbpd;
use crate::moves::{e_move_traced, f_move_traced, find_f_target, MoveRecord};

/// Output of a row pop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopResult {
    pub biletter: Biletter,
    pub rest: Mbpd,
}

/// Pops one biletter: F-moves from the maximum target's row down to the
/// first terminal move.
pub fn row_pop(d: &Mbpd) -> Result<PopResult> {
    row_pop_traced(d).map(|(p, _)| p)
}

pub fn row_pop_traced(d: &Mbpd) -> Result<(PopResult, Vec<MoveRecord>)> {
    let start = find_f_target(d).ok_or(Error::IdentityInput)?;
    let i = start.row;
    let mut cur = d.clone();
    let mut records = Vec::new();
    let mut r = i;
    loop {
        let (next, t) = f_move_traced(&cur, r)?;
        records.push(t.record());
        cur = next;
        if t.is_terminal() {
            break;
        }
        r += 1;
    }
    Ok((
        PopResult {
            biletter: Biletter::new(i, r),
            rest: cur,
        },
        records,
    ))
}

/// The biword of `d`, one row pop at a time.
pub fn phi(d: &Mbpd) -> Rcp {
    phi_traced(d).0
}

/// `phi` together with the move records of each pop.
pub fn phi_traced(d: &Mbpd) -> (Rcp, Vec<Vec<MoveRecord>>) {
    let mut letters = Vec::new();
    let mut pops = Vec::new();
    let mut cur = d.clone();
    while !cur.is_identity() {
        let (p, recs) = row_pop_traced(&cur).expect("a non-identity grid always pops");
        letters.push(p.biletter);
        pops.push(recs);
        cur = p.rest;
    }
    let rcp = Rcp::new(d.n(), letters).expect("popped biletters form a compatible pair");
    (rcp, pops)
}

/// Pushes `(i, a)` into `d`: `e_i ⋯ e_{a-1} e*_a`.
pub fn row_push(d: &Mbpd, b: Biletter) -> Result<Mbpd> {
    row_push_traced(d, b).map(|(g, _)| g)
}

pub fn row_push_traced(d: &Mbpd, b: Biletter) -> Result<(Mbpd, Vec<MoveRecord>)> {
    if !b.is_valid(d.n()) {
        return Err(Error::PushPreconditionViolated(format!(
            "biletter {b} is out of range for n={}",
            d.n()
        )));
    }
    if let Some(r) = (b.i + 1..=d.n()).find(|&r| d.row(r).iter().any(|t| t.is_heavy())) {
        return Err(Error::PushPreconditionViolated(format!(
            "pushing {b}: heavy tile in row {r}"
        )));
    }
    let mut cur = d.clone();
    let mut records = Vec::new();
    for r in (b.i..=b.a).rev() {
        let (next, t) = e_move_traced(&cur, r)
            .map_err(|e| Error::PushPreconditionViolated(format!("pushing {b}: {e}")))?;
        if t.is_initial() != (r == b.a) {
            return Err(Error::PushPreconditionViolated(format!(
                "pushing {b}: E-move at row {r} has case {}",
                t.label()
            )));
        }
        records.push(t.record());
        cur = next;
    }
    // a push onto a grid whose next pop would come first is not invertible
    let back = row_pop(&cur)?;
    if back.biletter != b || &back.rest != d {
        return Err(Error::PushPreconditionViolated(format!(
            "pushing {b}: the result pops {}",
            back.biletter
        )));
    }
    Ok((cur, records))
}

/// The grid of `b`, pushing biletters from last to first into the identity.
pub fn psi(b: &Rcp) -> Mbpd {
    psi_traced(b)
        .expect("every compatible pair can be pushed")
        .0
}

/// `psi` with the move records of each push, in push order.
pub fn psi_traced(b: &Rcp) -> Result<(Mbpd, Vec<Vec<MoveRecord>>)> {
    let mut cur = Mbpd::identity(b.n());
    let mut pushes = Vec::new();
    for &l in b.letters().iter().rev() {
        let (next, recs) = row_push_traced(&cur, l)?;
        cur = next;
        pushes.push(recs);
    }
    Ok((cur, pushes))
}

/// `phi` by single moves: a terminal move prepends `(i,i)`, a nonterminal
/// one lowers the first biletter of the rest.
pub fn phi_fine(d: &Mbpd) -> Result<Biword> {
    let Some(t) = find_f_target(d) else {
        return Ok(Biword::default());
    };
    let (next, _) = f_move_traced(d, t.row)?;
    let rest = phi_fine(&next)?;
    if t.is_terminal() {
        Ok(rest.rrcp1_prepend(t.row))
    } else {
        rest.rrcp2_lower()
    }
}

/// `psi` by single moves: `(i,i)` is removed and `e*_i` applied, otherwise
/// the first biletter is raised and `e_i` applied.
pub fn psi_fine(n: usize, b: &Biword) -> Result<Mbpd> {
    let Some(first) = b.first() else {
        return Ok(Mbpd::identity(n));
    };
    let inner = if first.i == first.a {
        psi_fine(n, &b.rcp1_remove()?)?
    } else {
        psi_fine(n, &b.rcp2_raise()?)?
    };
    let (out, _) = e_move_traced(&inner, first.i)?;
    Ok(out)
}

/// Unmarked with exactly `ℓ(w)` heavy tiles.
pub fn is_reduced_mbpd(d: &Mbpd) -> bool {
    !d.is_marked() && d.heavy_count() == d.permutation().length()
}

pub fn is_reduced_rcp(b: &Rcp) -> bool {
    b.is_reduced()
}
