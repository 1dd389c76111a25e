//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use bumpless::asm::asm_of;
use bumpless::bijection::{is_reduced_mbpd, phi_traced, psi_traced};
use bumpless::biword::enumerate_rcp;
use bumpless::enumerate::enumerate_mbpd;
use bumpless::groth::{groth, groth_recursive_with, DescentChoice, Method};
use bumpless::moves::{
    e_move_traced, f_move_traced, f_target_in_row, find_e_target, find_f_target,
};
use bumpless::pipedream::enumerate_pd;
use bumpless::poly::pi_op;
use bumpless::{phi, psi, Mbpd, Permutation, Poly, Tile};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn two_pow_binom(n: usize) -> usize {
    1 << (n * (n - 1) / 2)
}

// Independent oracles.

fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

/// `s_{a_ℓ} * ⋯ * s_{a_1}` for `word = [a_ℓ, …, a_1]`, multiplying on the right
/// one letter at a time.
fn hecke_oracle(word: &[usize], n: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &a in word {
        if w[a - 1] < w[a] {
            w.swap(a - 1, a);
        }
    }
    w
}

/// Pipe labels pushed through the grid column by column from the right.
fn trace_oracle(d: &Mbpd) -> Vec<usize> {
    let n = d.n();
    // label on the edge entering each cell from the right / from above
    let mut from_right = vec![vec![0usize; n + 2]; n + 2];
    let mut from_top = vec![vec![0usize; n + 2]; n + 2];
    (1..=n).for_each(|i| from_right[i][n] = i);
    let mut crossed = BTreeSet::new();
    let mut exit = vec![0; n + 1];
    for j in (1..=n).rev() {
        for i in 1..=n {
            let (h, v) = (from_right[i][j], from_top[i][j]);
            // (label leaving left, label leaving down)
            let (left, down) = match d.get(i, j) {
                Tile::Horiz => (h, 0),
                Tile::Vert => (0, v),
                Tile::R => (0, h),
                Tile::J | Tile::MarkedJ => (v, 0),
                Tile::Blank => (0, 0),
                Tile::Plus => {
                    let pair = (h.min(v), h.max(v));
                    if crossed.insert(pair) {
                        (h, v)
                    } else {
                        (v, h)
                    }
                }
            };
            if j > 1 {
                from_right[i][j - 1] = left;
            }
            if i < n {
                from_top[i + 1][j] = down;
            } else {
                exit[down] = j;
            }
        }
    }
    exit[1..].to_vec()
}

/// All ASMs of size `n`, by rows with bounded column partial sums.
fn asm_oracle(n: usize) -> Vec<Vec<Vec<i8>>> {
    fn rows(n: usize) -> Vec<Vec<i8>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|r: Vec<i8>| {
                    [-1i8, 0, 1]
                        .into_iter()
                        .map(move |v| [r.clone(), vec![v]].concat())
                })
                .collect();
        }
        out.retain(|r| {
            let mut s = 0;
            r.iter().all(|&v| {
                s += v;
                (0..=1).contains(&s)
            }) && s == 1
        });
        out
    }
    fn rec(
        n: usize,
        rows: &[Vec<i8>],
        col: Vec<i8>,
        acc: &mut Vec<Vec<i8>>,
        out: &mut Vec<Vec<Vec<i8>>>,
    ) {
        if acc.len() == n {
            if col.iter().all(|&c| c == 1) {
                out.push(acc.clone());
            }
            return;
        }
        for r in rows {
            let next: Vec<i8> = col.iter().zip(r).map(|(a, b)| a + b).collect();
            if next.iter().all(|&c| (0..=1).contains(&c)) {
                acc.push(r.clone());
                rec(n, rows, next, acc, out);
                acc.pop();
            }
        }
    }
    let rows = rows(n);
    let mut out = Vec::new();
    rec(n, &rows, vec![0; n], &mut Vec::new(), &mut out);
    out
}

fn rcp_perm_oracle(b: &bumpless::Rcp) -> Vec<usize> {
    let word: Vec<usize> = b.letters().iter().rev().map(|l| l.a).collect();
    hecke_oracle(&word, b.n())
}

// Criteria.

fn counting() -> Outcome {
    let expected = [1, 2, 8, 64, 1024];
    for n in 1..=5 {
        let got = [
            enumerate_mbpd(n).count(),
            enumerate_pd(n).count(),
            enumerate_rcp(n).count(),
        ];
        if got != [expected[n - 1]; 3] || expected[n - 1] != two_pow_binom(n) {
            return Err(format!("n={n}: MBPD/PD/RCP counts {got:?}"));
        }
    }
    Ok(())
}

fn round_trips() -> Outcome {
    for n in 1..=5 {
        let mut images = BTreeSet::new();
        for d in enumerate_mbpd(n) {
            let b = phi(&d);
            if psi(&b) != d {
                return Err(format!("psi(phi({d:?})) differs"));
            }
            images.insert(b);
        }
        if images.len() != two_pow_binom(n) {
            return Err(format!("n={n}: phi is not injective"));
        }
        for b in enumerate_rcp(n) {
            if phi(&psi(&b)) != b {
                return Err(format!("phi(psi({b})) differs"));
            }
        }
    }
    Ok(())
}

fn preservation() -> Outcome {
    for n in 1..=5 {
        for d in enumerate_mbpd(n) {
            let b = phi(&d);
            let heavy: Vec<usize> = (1..=n)
                .map(|i| {
                    d.row(i)
                        .iter()
                        .filter(|t| matches!(t, Tile::Blank | Tile::MarkedJ))
                        .count()
                })
                .collect();
            let mut letters = vec![0; n];
            for l in b.letters() {
                letters[l.i - 1] += 1;
            }
            if heavy != letters {
                return Err(format!("{d:?}: weight {heavy:?} but biword {b}"));
            }
            if trace_oracle(&d) != rcp_perm_oracle(&b) {
                return Err(format!("{d:?}: permutation differs from that of {b}"));
            }
            if d.permutation().one_line() != trace_oracle(&d).as_slice() {
                return Err(format!("{d:?}: library and traced permutations differ"));
            }
        }
    }
    Ok(())
}

fn check_moves_at(d: &Mbpd, table: &BTreeMap<&str, &str>, seen: &mut BTreeSet<String>) -> Outcome {
    for r in 1..=d.n() {
        if f_target_in_row(d, r).is_some() {
            let (e, ft) = f_move_traced(d, r).map_err(|x| format!("{d:?} F{r}: {x}"))?;
            let (back, et) = e_move_traced(&e, r).map_err(|x| format!("{e:?} E{r}: {x}"))?;
            if &back != d {
                return Err(format!("E(F({d:?})) at row {r} differs"));
            }
            if ft.window() != et.window() {
                return Err(format!(
                    "{d:?} row {r}: windows {} and {}",
                    ft.window(),
                    et.window()
                ));
            }
            if table.get(ft.label().as_str()) != Some(&et.label().as_str()) {
                return Err(format!(
                    "{d:?} row {r}: {} paired with {}",
                    ft.label(),
                    et.label()
                ));
            }
            seen.insert(ft.label());
        }
        if find_e_target(d, r).is_some() {
            let (e, _) = e_move_traced(d, r).map_err(|x| format!("{d:?} E{r}: {x}"))?;
            let (back, _) = f_move_traced(&e, r).map_err(|x| format!("{e:?} F{r}: {x}"))?;
            if &back != d {
                return Err(format!("F(E({d:?})) at row {r} differs"));
            }
        }
    }
    Ok(())
}

fn move_cases() -> Outcome {
    let table: BTreeMap<&str, &str> = [
        ("TB", "IS"),
        ("TC", "ID"),
        ("TC\u{338}", "IL"),
        ("DB", "PS"),
        ("DC", "PD"),
        ("DC\u{338}", "PL"),
        ("OB", "P\u{338}S"),
        ("OC", "P\u{338}D"),
        ("OC\u{338}", "P\u{338}L"),
    ]
    .into_iter()
    .collect();
    let mut seen = BTreeSet::new();
    for n in 1..=5 {
        for d in enumerate_mbpd(n) {
            check_moves_at(&d, &table, &mut seen)?;
        }
    }
    // the doublecross-crossing case first appears at n = 6
    let mut d = worked_example()?;
    while let Some(t) = find_f_target(&d) {
        check_moves_at(&d, &table, &mut seen)?;
        d = f_move_traced(&d, t.row).map_err(|e| e.to_string())?.0;
    }
    if seen.len() != 9 {
        return Err(format!("only cases {seen:?} occur"));
    }
    Ok(())
}

fn worked_example() -> Result<Mbpd, String> {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/worked_example.grid"
    ))
    .map_err(|e| e.to_string())?;
    Mbpd::parse(&text).map_err(|e| e.to_string())
}

fn golden() -> Outcome {
    let d = worked_example()?;
    let (b, pops) = phi_traced(&d);
    if b.to_string() != "(3,4),(3,5),(2,2),(2,5),(1,1),(1,3),(1,5)" {
        return Err(format!("biword {b}"));
    }
    let trace: Vec<String> = pops
        .iter()
        .map(|p| {
            p.iter()
                .map(|r| r.label.as_str())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    let want =
        "DC,TC; DB,DC\u{338},TC\u{338}; TB; OB,OB,DB,TC\u{338}; TB; OB,OB,TB; OB,OB,OB,OB,TB";
    if trace.join("; ") != want {
        return Err(format!("labels {}", trace.join("; ")));
    }
    let pd: Vec<_> = b.letters().iter().map(|l| (l.i, l.a - l.i + 1)).collect();
    let want_pd = vec![(3, 2), (3, 3), (2, 1), (2, 4), (1, 1), (1, 3), (1, 5)];
    let got_pd: BTreeSet<_> = b.to_pipedream().crossings().iter().copied().collect();
    if pd != want_pd || got_pd != want_pd.iter().copied().collect() {
        return Err(format!("crossings {got_pd:?}"));
    }
    Ok(())
}

fn polynomials() -> Outcome {
    for n in 1..=5 {
        let mut all = BTreeMap::new();
        for w in Permutation::all(n) {
            let g = groth(&w, Method::Recursion);
            if g.terms().iter().any(|&(_, c)| c <= 0) {
                return Err(format!("{w}: nonpositive coefficient in {g}"));
            }
            if groth_recursive_with(&w, DescentChoice::Largest) != g {
                return Err(format!("{w}: descent strategies disagree"));
            }
            for m in [Method::Pd, Method::Rcp, Method::Mbpd] {
                if groth(&w, m) != g {
                    return Err(format!("{w}: method {m} disagrees"));
                }
            }
            all.insert(w.one_line().to_vec(), g);
        }
        for (w, g) in &all {
            for i in 1..n {
                if w[i - 1] > w[i] {
                    let mut ws = w.clone();
                    ws.swap(i - 1, i);
                    let g_ws = &all[&ws];
                    let lhs = pi_op(g, i).map_err(|e| e.to_string())?;
                    if &lhs != g_ws {
                        return Err(format!("π_{i} G_{w:?} is not G_{ws:?}"));
                    }
                    let rhs = pi_op(g_ws, i).map_err(|e| e.to_string())?;
                    if lhs.substitute_beta(-1) != rhs.substitute_beta(-1) {
                        return Err(format!("π_{i} relation fails at β=-1 for {w:?}"));
                    }
                    if rhs != (&Poly::beta(n) * g_ws).scale(-1) {
                        return Err(format!("π_{i} G_{ws:?} is not -β G_{ws:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn reduced() -> Outcome {
    for n in 1..=4 {
        let mut images = BTreeSet::new();
        for d in enumerate_mbpd(n) {
            let is_red = !d.is_marked() && d.heavy_count() == inversions(&trace_oracle(&d));
            if is_red != is_reduced_mbpd(&d) {
                return Err(format!("{d:?}: reducedness disagrees"));
            }
            if !is_red {
                continue;
            }
            let (b, pops) = phi_traced(&d);
            if let Some(r) = pops
                .iter()
                .flatten()
                .find(|r| r.label != "TB" && r.label != "OB")
            {
                return Err(format!("{d:?}: F-case {}", r.label));
            }
            let (_, pushes) = psi_traced(&b).map_err(|e| e.to_string())?;
            if let Some(r) = pushes
                .iter()
                .flatten()
                .find(|r| r.label != "IS" && r.label != "P\u{338}S")
            {
                return Err(format!("{b}: E-case {}", r.label));
            }
            images.insert(b);
        }
        let want: BTreeSet<_> = enumerate_rcp(n)
            .filter(|b| b.len() == inversions(&rcp_perm_oracle(b)))
            .collect();
        if images != want {
            return Err(format!(
                "n={n}: {} reduced grids, {} reduced pairs",
                images.len(),
                want.len()
            ));
        }
    }
    Ok(())
}

fn asm_sanity() -> Outcome {
    for n in 1..=5 {
        let mut from_grids = BTreeSet::new();
        for d in enumerate_mbpd(n) {
            from_grids.insert(asm_of(&d).map_err(|e| format!("{d:?}: {e}"))?);
        }
        let oracle: BTreeSet<_> = asm_oracle(n).into_iter().collect();
        if from_grids != oracle {
            return Err(format!(
                "n={n}: {} matrices from grids, {} ASMs",
                from_grids.len(),
                oracle.len()
            ));
        }
        let total: usize = oracle
            .iter()
            .map(|m| 1usize << m.iter().flatten().filter(|&&v| v == -1).count())
            .sum();
        if total != two_pow_binom(n) {
            return Err(format!("n={n}: fibers sum to {total}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 counting", counting),
        ("2 round trips (n<=5)", round_trips),
        ("3 weight and permutation preservation", preservation),
        ("4 move inverses and case table", move_cases),
        ("5 worked 6x6 example", golden),
        ("6 polynomial four-way equality (S_5)", polynomials),
        ("7 reduced restriction", reduced),
        ("8 ASM sanity", asm_sanity),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("PASS criterion {name} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
