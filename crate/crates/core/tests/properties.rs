use bumpless::bijection::{phi_fine, psi_fine, row_pop};
use bumpless::enumerate::enumerate_mbpd;
use bumpless::moves::{f_move, f_target_in_row};
use bumpless::perm::{hecke_product, mbpd_permutation_ordered};
use bumpless::poly::{divided_difference, pi_op};
use bumpless::{phi, psi, Mbpd, Permutation, Poly, Rcp};
use proptest::prelude::*;

#[test]
fn adjacent_f_moves_commute() {
    let mut pairs = 0;
    for n in 2..=5 {
        for d in enumerate_mbpd(n) {
            for i in 1..n {
                if f_target_in_row(&d, i).is_none() || f_target_in_row(&d, i + 1).is_none() {
                    continue;
                }
                let a = f_move(&d, i + 1).and_then(|x| f_move(&x, i));
                let b = f_move(&d, i).and_then(|x| f_move(&x, i + 1));
                assert_eq!(a.unwrap(), b.unwrap(), "{d:?} rows {i},{}", i + 1);
                pairs += 1;
            }
        }
    }
    assert!(pairs > 0);
}

#[test]
fn consecutive_pops_from_one_row_increase() {
    for n in 2..=4 {
        for d in enumerate_mbpd(n) {
            let first = match row_pop(&d) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let i = first.biletter.i;
            if d.row(i).iter().filter(|t| t.is_heavy()).count() < 2 {
                continue;
            }
            let second = row_pop(&first.rest).unwrap();
            assert_eq!(second.biletter.i, i);
            assert!(second.biletter.a > first.biletter.a, "{d:?}");
        }
    }
}

#[test]
fn permutation_ignores_tie_order() {
    for n in 1..=4 {
        for d in enumerate_mbpd(n) {
            assert_eq!(
                mbpd_permutation_ordered(&d, false),
                mbpd_permutation_ordered(&d, true)
            );
        }
    }
}

#[test]
fn rothe_grids_are_reduced_and_unmarked() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let d = Mbpd::rothe(&w);
            assert!(bumpless::bijection::is_reduced_mbpd(&d));
            assert_eq!(d.permutation(), w);
            assert_eq!(phi(&d).permutation(), w);
        }
    }
}

fn grid_strategy() -> impl Strategy<Value = Mbpd> {
    (1usize..=5).prop_flat_map(|n| {
        let all: Vec<Mbpd> = enumerate_mbpd(n).collect();
        proptest::sample::select(all)
    })
}

fn rcp_strategy() -> impl Strategy<Value = Rcp> {
    (2usize..=7).prop_flat_map(|n| {
        let letters = bumpless::biword::all_biletters(n);
        proptest::sample::subsequence(letters.clone(), 0..=letters.len())
            .prop_map(move |v| Rcp::new(n, v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip_from_grids(d in grid_strategy()) {
        let b = phi(&d);
        prop_assert_eq!(psi(&b), d.clone());
        prop_assert_eq!(phi_fine(&d).unwrap(), b.to_biword());
    }

    // n up to 7 reaches well beyond the exhaustive range
    #[test]
    fn round_trip_from_pairs(b in rcp_strategy()) {
        let d = psi(&b);
        prop_assert_eq!(phi(&d), b.clone());
        prop_assert_eq!(psi_fine(b.n(), &b.to_biword()).unwrap(), d.clone());
        prop_assert_eq!(d.weight(), b.weight());
        prop_assert_eq!(d.permutation(), b.permutation());
    }

    #[test]
    fn hecke_idempotence(word in proptest::collection::vec(1usize..5, 0..12), k in 0usize..12) {
        let w = hecke_product(&word, 5).unwrap();
        if !word.is_empty() {
            let k = k % word.len();
            let mut doubled = word.clone();
            doubled.insert(k, word[k]);
            prop_assert_eq!(hecke_product(&doubled, 5).unwrap(), w);
        }
    }

    #[test]
    fn pi_is_quasi_idempotent(exps in proptest::collection::vec(0u32..4, 3), i in 1usize..3) {
        let f = Poly::monomial(3, 1, 0, &exps);
        let once = pi_op(&f, i).unwrap();
        let twice = pi_op(&once, i).unwrap();
        prop_assert_eq!(twice, (&Poly::beta(3) * &once).scale(-1));
        let dd = divided_difference(&divided_difference(&f, i).unwrap(), i).unwrap();
        prop_assert!(dd.is_zero());
    }
}
