//! Single and double Schubert polynomials.

use num_bigint::BigInt;

use crate::error::Result;
use crate::perm::Permutation;
use crate::poly::{Monomial, SparsePoly};

/// Sum over reduced words a and weakly increasing b with b_i ≤ a_i and
/// b_i < b_{i+1} whenever a_i < a_{i+1}.
pub fn schubert_bjs(w: &Permutation) -> SparsePoly {
    let mut out = SparsePoly::zero();
    let mut exps = vec![0u32; w.n()];
    for a in w.reduced_words() {
        compatible(a.letters(), 0, 1, &mut exps, &mut out);
    }
    out
}

fn compatible(a: &[usize], t: usize, lo: usize, exps: &mut Vec<u32>, out: &mut SparsePoly) {
    if t == a.len() {
        out.add_term(Monomial::new(exps.clone(), vec![]), BigInt::from(1));
        return;
    }
    for b in lo..=a[t] {
        exps[b - 1] += 1;
        let next_lo = if t + 1 < a.len() && a[t] < a[t + 1] { b + 1 } else { b };
        compatible(a, t + 1, next_lo, exps, out);
        exps[b - 1] -= 1;
    }
}

/// Which ascent the divided-difference recursion climbs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// Indices i_1, …, i_k with w s_{i_1} ⋯ s_{i_k} = w_0, each an ascent of
/// the permutation reached so far.
fn ascent_path(w: &Permutation, choice: AscentChoice) -> Vec<usize> {
    let mut cur = w.clone();
    let mut path = Vec::new();
    loop {
        let mut ascents = (1..cur.n()).filter(|&i| cur.at(i) < cur.at(i + 1));
        let next = match choice {
            AscentChoice::First => ascents.next(),
            AscentChoice::Last => ascents.next_back(),
        };
        let Some(i) = next else { break };
        path.push(i);
        cur = cur.swapped(i, i + 1);
    }
    path
}

/// ∏_{i+j ≤ n} (x_i - y_j).
pub fn double_schubert_longest(n: usize) -> SparsePoly {
    let mut out = SparsePoly::one();
    for i in 1..n {
        for j in 1..=n - i {
            out = &out * &(&SparsePoly::x(i) - &SparsePoly::y(j));
        }
    }
    out
}

/// x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}.
pub fn schubert_longest(n: usize) -> SparsePoly {
    let exps = (1..=n).map(|i| (n - i) as u32).collect();
    SparsePoly::term(Monomial::new(exps, vec![]), 1)
}

fn descend(w: &Permutation, top: SparsePoly, choice: AscentChoice) -> Result<SparsePoly> {
    let mut f = top;
    for &i in ascent_path(w, choice).iter().rev() {
        f = f.divided_difference(i)?;
    }
    Ok(f)
}

/// S_w(x; y) from the longest element via S_w = ∂_i S_{w s_i}, climbing
/// through the first ascent.
pub fn double_schubert(w: &Permutation) -> Result<SparsePoly> {
    double_schubert_with(w, AscentChoice::First)
}

pub fn double_schubert_with(w: &Permutation, choice: AscentChoice) -> Result<SparsePoly> {
    descend(w, double_schubert_longest(w.n()), choice)
}

/// S_w(x) by the same recursion started from x^δ.
pub fn schubert_divided_difference(w: &Permutation) -> Result<SparsePoly> {
    descend(w, schubert_longest(w.n()), AscentChoice::First)
}
