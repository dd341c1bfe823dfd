//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! running time and limit, and exits nonzero if any attainable criterion
//! fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schubert_core::bijection::gamma_inverse_traced;
use schubert_core::coeffs::Coefficients;
use schubert_core::pipedream::{eg_pipedreams, enumerate_all, max_pivot_box};
use schubert_core::schubert::{double_schubert, schubert_bjs, schubert_divided_difference};
use schubert_core::symmetric::{schur_poly, stanley_truncated, SchurCache};
use schubert_core::tableau::reduced_word_tableaux;
use schubert_core::trees::general_transition_sets;
use schubert_core::{
    eg_insert, eg_tree, ls_tree, mls_tree, Bijection, BumplessPipedream, IncreasingTableau, Method,
    Permutation, SparsePoly, StandardTableau, Word,
};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn word(s: &str) -> Word {
    Word::parse(s, Some(6)).unwrap()
}

fn sample_s5(count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: Vec<usize> = (1..=5).collect();
            v.shuffle(&mut rng);
            Permutation::new(v).unwrap()
        })
        .collect()
}

fn rows(t: &IncreasingTableau) -> Vec<Vec<usize>> {
    t.rows().to_vec()
}

fn criterion_1() -> Check {
    let a = Word::minimal(vec![2, 3, 1, 6, 4, 3, 2]).map_err(|e| e.to_string())?;
    let (p, q) = ok(eg_insert(&a))?;
    ensure(
        rows(&p) == vec![vec![1, 2, 4], vec![2, 3], vec![4], vec![6]],
        || format!("P = {p}"),
    )?;
    ensure(
        q.rows() == [vec![1, 2, 4], vec![3, 5], vec![6], vec![7]],
        || format!("Q = {:?}", q.rows()),
    )
}

fn criterion_2() -> Check {
    let got = ok(word("(3,1,4,5,2)").little_map(5, 3))?;
    ensure(got == word("(2,1,3,4,2)"), || format!("theta_5 gave {got}"))?;
    let chain = ["(5,4,1,2,5)", "(5,3,1,2,4)", "(4,3,1,2,4)", "(4,3,1,2,3)", "(3,2,1,2,3)"];
    let params = [(5, 4), (4, 5), (4, 3), (2, 4)];
    for (k, &(p, v)) in params.iter().enumerate() {
        let from = word(chain[k]);
        let to = word(chain[k + 1]);
        let fwd = ok(from.little_map(p, v))?;
        ensure(fwd == to, || format!("theta_({p},{v}) of {from} gave {fwd}"))?;
        let back = ok(to.little_map_inverse(p, v))?;
        ensure(back == from, || format!("inverse at ({p},{v}) of {to} gave {back}"))?;
    }
    Ok(())
}

const DRAWN_321654: [&str; 3] = [
    "....r-/..r-+-/r-+-+-/|rjrjr/||rjr+/|||r++",
    "...r--/..r+--/.rj|r-/r+-+jr/||rjr+/|||r++",
    "...r--/..rjr-/.r+-+-/rj|rjr/|r+jr+/|||r++",
];

fn all_methods(w: &Permutation) -> Result<Coefficients, String> {
    let first = ok(schubert_core::eg_coeffs(w, Method::ALL[0]))?;
    for m in &Method::ALL[1..] {
        let c = ok(schubert_core::eg_coeffs(w, *m))?;
        ensure(c == first, || {
            format!("{w}: {} gives {c:?}, {} gives {first:?}", m, Method::ALL[0])
        })?;
    }
    Ok(first)
}

fn shapes(pairs: &[(&str, u64)]) -> Coefficients {
    pairs.iter().map(|&(s, k)| (s.parse().unwrap(), k)).collect()
}

/// The coefficients exactly as claimed for 321654.
fn criterion_3_as_stated() -> Check {
    let claimed = shapes(&[("(4,2)", 1), ("(3,2,1)", 2)]);
    let got = all_methods(&perm("321654"))?;
    ensure(got == claimed, || {
        let listed: Vec<String> = got.iter().map(|(s, k)| format!("{s}:{k}")).collect();
        format!(
            "all four methods give {{{}}}; the claim misses five shapes \
             (80 reduced words, claim accounts for 9+2*16=41)",
            listed.join(", ")
        )
    })
}

/// What does hold for 321654: the four methods agree on F = s_21^2 and the
/// three drawn EG-pipedreams are among the eight.
fn criterion_3_corrected() -> Check {
    let w = perm("321654");
    let got = all_methods(&w)?;
    let expect = shapes(&[
        ("(4,2)", 1),
        ("(4,1,1)", 1),
        ("(3,3)", 1),
        ("(3,2,1)", 2),
        ("(3,1,1,1)", 1),
        ("(2,2,2)", 1),
        ("(2,2,1,1)", 1),
    ]);
    ensure(got == expect, || format!("got {got:?}"))?;
    let s21 = schur_poly(&"(2,1)".parse().unwrap(), 6);
    ensure(stanley_truncated(&w, 6) == &s21 * &s21, || "F != s21^2".into())?;
    ensure(w.count_reduced_words() == 80, || "reduced word count".into())?;
    let members: BTreeSet<BumplessPipedream> =
        eg_pipedreams(&w).into_iter().map(|(p, _)| p).collect();
    for s in DRAWN_321654 {
        let p: BumplessPipedream = ok(s.parse())?;
        ensure(members.contains(&p), || format!("{s} is not an EG-pipedream"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let mut perms = Permutation::all(4);
    perms.extend(sample_s5(50, 4));
    let mut cache = SchurCache::new();
    for w in &perms {
        let c = all_methods(w)?;
        let m = w.length().max(1);
        let mut sum = SparsePoly::zero();
        for (shape, k) in &c {
            sum.add_scaled(&cache.get(shape, m), &(*k).into());
        }
        ensure(sum == stanley_truncated(w, m), || format!("{w}: expansion mismatch"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut perms = Permutation::all(4);
    perms.extend(sample_s5(20, 5));
    for w in &perms {
        let bjs = schubert_bjs(w);
        let dd = ok(schubert_divided_difference(w))?;
        let weights = enumerate_all(w)
            .iter()
            .fold(SparsePoly::zero(), |acc, p| &acc + &p.weight());
        ensure(bjs == dd, || format!("{w}: BJS != divided differences"))?;
        ensure(weights.drop_y() == bjs, || format!("{w}: pipedream weights at y=0"))?;
        let double = ok(double_schubert(w))?;
        ensure(weights == double, || format!("{w}: pipedream weights != double"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let w = perm("231654");
    let mls = ok(mls_tree(&w))?;
    let bracket = "231654[241635[251436[351246[431256], 253146[423156]], 245136[342156]], \
                   234615[235416[243516[324516]]]]";
    ensure(mls.bracket() == bracket, || format!("mls tree {}", mls.bracket()))?;
    let leaves: Vec<String> = mls.leaf_perms().iter().map(|p| p.compact()).collect();
    ensure(leaves == ["431256", "423156", "342156", "324516"], || {
        format!("mls leaves {leaves:?}")
    })?;
    // the drawn LS-tree pads two Grassmannian leaves with a fixed point
    let stable = |ps: &[Permutation]| -> BTreeSet<String> {
        ps.iter().map(|p| p.stable_form().compact()).collect()
    };
    let ls = ok(ls_tree(&w))?;
    let drawn: Vec<Permutation> =
        ["351246", "2346157", "2361457", "2451367"].iter().map(|s| perm(s)).collect();
    ensure(stable(&ls.leaf_perms()) == stable(&drawn), || {
        format!("ls leaves {:?}", stable(&ls.leaf_perms()))
    })?;
    ensure(ls.leaf_perms().iter().all(Permutation::is_grassmannian), || {
        "non-Grassmannian LS leaf".into()
    })?;
    let eg = ok(eg_tree(&w))?;
    ensure(eg.same_structure(&mls), || "eg tree not isomorphic".into())?;
    let eg_leaves: Vec<_> = eg
        .leaves()
        .into_iter()
        .filter_map(|id| eg.node(id).and_then(|n| n.pipedream.as_ref()))
        .filter(|p| p.is_eg().is_some())
        .collect();
    ensure(eg_leaves.len() == 4, || format!("{} EG leaves", eg_leaves.len()))
}

/// Q stays fixed and τ is the column word of P(τ^rev) at every step.
fn chain_invariants(words: &[Word], recording: &StandardTableau) -> Check {
    for tau in words {
        let (p, q) = ok(eg_insert(&tau.reverse()))?;
        ensure(q == *recording, || format!("recording changed at {tau}"))?;
        let col = ok(p.column_reading_word(tau.n()))?;
        ensure(col == *tau, || format!("column word of P({tau}^rev) is {col}"))?;
    }
    Ok(())
}

/// Γ sweep; returns the number of word chains checked when `with_chains`.
fn gamma_sweep(w: &Permutation, with_chains: bool) -> Result<usize, String> {
    let bij = ok(Bijection::new(w))?;
    let rt = reduced_word_tableaux(w);
    let eg: BTreeSet<BumplessPipedream> = eg_pipedreams(w).into_iter().map(|(p, _)| p).collect();
    ensure(rt.len() == eg.len(), || format!("{w}: |RT| = {}, |EG| = {}", rt.len(), eg.len()))?;
    let mut image = BTreeSet::new();
    let mut chains = 0;
    for t in &rt {
        let trace = ok(bij.forward_traced(t))?;
        let p = trace.result.clone();
        ensure(p.is_eg() == Some(t.shape()), || format!("{w}: shape changed for {t}"))?;
        ensure(eg.contains(&p), || format!("{w}: image of {t} not an EG-pipedream"))?;
        let back = ok(gamma_inverse_traced(&p))?;
        ensure(back.result == *t, || format!("{w}: round trip of {t} gave {}", back.result))?;
        if with_chains {
            let fwd: Vec<Word> = trace.steps.iter().map(|s| s.word.clone()).collect();
            chain_invariants(&fwd, &trace.recording)?;
            let bwd: Vec<Word> = back.steps.iter().map(|s| s.word.clone()).collect();
            chain_invariants(&bwd, &back.recording)?;
            chains += 2;
        }
        image.insert(p);
    }
    ensure(image == eg, || format!("{w}: forward map is not onto"))?;
    for p in &eg {
        let t = ok(bij.backward(p))?;
        ensure(ok(bij.forward(&t))? == *p, || format!("{w}: forward of backward"))?;
    }
    Ok(chains)
}

fn sweep_targets() -> Vec<Permutation> {
    let mut perms = Permutation::all(5);
    perms.push(perm("231654"));
    perms.push(perm("321654"));
    perms
}

fn criterion_7() -> Check {
    for w in sweep_targets() {
        gamma_sweep(&w, false)?;
    }
    let w = perm("231654");
    let t: IncreasingTableau = ok("1,4,5/2/5".parse())?;
    let bij = ok(Bijection::new(&w))?;
    let p = ok(bij.forward(&t))?;
    let worked = "...r--/.r-jr-/.|r-+-/r+jrjr/||rjr+/|||r++";
    ensure(p.render_line() == worked, || format!("worked pipedream {}", p.render_line()))?;
    let back = ok(gamma_inverse_traced(&p))?;
    ensure(back.root_word.to_string() == "(5,4,1,2,5)", || {
        format!("w(P) = {}", back.root_word)
    })?;
    ensure(back.result.to_string() == "1,4,5/2/5", || format!("T = {}", back.result))
}

fn criterion_8() -> Check {
    let mut chains = 0;
    for w in sweep_targets() {
        chains += gamma_sweep(&w, true)?;
        let tree = ok(mls_tree(&w))?;
        for node in tree.nodes().iter().filter(|n| !n.is_leaf()) {
            let u = &node.perm;
            let (p, q) = ok(max_pivot_box(u))?;
            let v = ok(u.apply_transposition(p, q))?;
            let sets = ok(general_transition_sets(&v, p))?;
            ensure(sets.psi == vec![u.clone()], || format!("{w}: Psi at {u} is {:?}", sets.psi))?;
            for &c in &node.children {
                let child = &tree.node(c).unwrap().perm;
                if child.is_dominant() {
                    continue;
                }
                let (p2, q2) = ok(max_pivot_box(child))?;
                ensure((p2, child.at(q2)) < (p, u.at(q)), || {
                    format!("{w}: pivot box not decreasing from {u} to {child}")
                })?;
            }
        }
    }
    ensure(chains > 0, || "no chains checked".into())?;
    for w in Permutation::all(5) {
        let rothe = BumplessPipedream::rothe(&w);
        for (p, _) in eg_pipedreams(&w) {
            let (_, chain) = ok(p.reverse_droop_chain())?;
            ensure(chain.last() == Some(&rothe), || format!("{w}: reverse droops stop early"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    run: fn() -> Check,
    /// Reason the criterion cannot hold as written, if it cannot.
    unattainable: Option<&'static str>,
}

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: "1", title: "EG insertion of (2,3,1,6,4,3,2)", limit: ms(10), run: criterion_1, unattainable: None },
        Criterion { id: "2", title: "Little map goldens and the word chain", limit: ms(10), run: criterion_2, unattainable: None },
        Criterion {
            id: "3",
            title: "c^321654 = {(4,2):1, (3,2,1):2} by four methods",
            limit: secs(1),
            run: criterion_3_as_stated,
            unattainable: Some("the stated value is wrong; F_321654 = s_21^2 has eight terms"),
        },
        Criterion { id: "3*", title: "c^321654 = s_21^2 by four methods, drawn pipedreams present", limit: secs(1), run: criterion_3_corrected, unattainable: None },
        Criterion { id: "4", title: "four-method agreement on S_4 and 50 samples of S_5", limit: secs(120), run: criterion_4, unattainable: None },
        Criterion { id: "5", title: "Schubert identities on S_4 and 20 samples of S_5", limit: secs(120), run: criterion_5, unattainable: None },
        Criterion { id: "6", title: "mls, ls and eg trees of 231654", limit: secs(1), run: criterion_6, unattainable: None },
        Criterion { id: "7", title: "bijection round trips on S_5, 231654, 321654", limit: secs(300), run: criterion_7, unattainable: None },
        Criterion { id: "8", title: "chain invariants, pivot monotonicity, singleton Psi, reverse droops", limit: secs(300), run: criterion_8, unattainable: None },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let verdict = match (&outcome, took <= c.limit) {
            (Ok(()), true) => "PASS",
            _ => "FAIL",
        };
        println!("{verdict} criterion {:<2} {} [{took:.1?} / limit {:?}]", c.id, c.title, c.limit);
        if let Err(e) = &outcome {
            println!("     {e}");
        } else if took > c.limit {
            println!("     over the time limit");
        }
        match (verdict, c.unattainable) {
            ("FAIL", Some(why)) => println!("     known unattainable: {why}"),
            ("FAIL", None) => failed += 1,
            ("PASS", Some(_)) => {
                println!("     passed although marked unattainable");
                failed += 1;
            }
            _ => {}
        }
    }
    if failed > 0 {
        println!("{failed} attainable criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
