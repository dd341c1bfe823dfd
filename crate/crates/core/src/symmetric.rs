//! Stanley symmetric functions in finitely many variables, Schur polynomials
//! and Schur expansion.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::poly::{Monomial, SparsePoly};

/// Bitmask of ascent positions: bit i-1 set when a_i < a_{i+1}.
fn ascent_mask(letters: &[usize]) -> usize {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] < p[1])
        .fold(0, |mask, (i, _)| mask | (1 << i))
}

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
fn weak_compositions(total: usize, parts: usize, mut visit: impl FnMut(&[u32])) {
    fn rec(rest: usize, slot: usize, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if slot + 1 == cur.len() {
            cur[slot] = rest as u32;
            visit(cur);
            return;
        }
        for e in 0..=rest {
            cur[slot] = e as u32;
            rec(rest - e, slot + 1, cur, visit);
        }
    }
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut cur = vec![0; parts];
    rec(total, 0, &mut cur, &mut visit);
}

/// F_w(x_1, …, x_m).
///
/// A weakly increasing b with content e is unique, so the coefficient of x^e
/// counts the reduced words whose ascents all sit at strict steps of b.
pub fn stanley_truncated(w: &Permutation, m: usize) -> SparsePoly {
    assert!(m >= 1, "need at least one variable");
    let len = w.length();
    if len == 0 {
        return SparsePoly::one();
    }
    let bits = len - 1;
    let mut count = vec![0u64; 1 << bits];
    for a in w.reduced_words() {
        count[ascent_mask(a.letters())] += 1;
    }
    // sum over subsets
    for bit in 0..bits {
        for mask in 0..count.len() {
            if mask & (1 << bit) != 0 {
                count[mask] += count[mask ^ (1 << bit)];
            }
        }
    }
    let mut out = SparsePoly::zero();
    weak_compositions(len, m, |e| {
        let mut strict = 0usize;
        let mut seen = 0usize;
        for &k in e {
            seen += k as usize;
            if k > 0 && seen < len {
                strict |= 1 << (seen - 1);
            }
        }
        let c = count[strict];
        if c > 0 {
            out.add_term(Monomial::new(e.to_vec(), vec![]), BigInt::from(c));
        }
    });
    out
}

/// Memoized Schur polynomials s_λ(x_1..x_m), built by peeling off the
/// horizontal strip of entries equal to m in a semistandard tableau.
#[derive(Debug, Default)]
pub struct SchurCache {
    memo: HashMap<(Vec<usize>, usize), SparsePoly>,
}

impl SchurCache {
    pub fn new() -> Self {
        SchurCache::default()
    }

    pub fn get(&mut self, shape: &Partition, m: usize) -> SparsePoly {
        self.rec(shape.parts(), m)
    }

    fn rec(&mut self, parts: &[usize], m: usize) -> SparsePoly {
        if parts.is_empty() {
            return SparsePoly::one();
        }
        if parts.len() > m {
            return SparsePoly::zero();
        }
        let key = (parts.to_vec(), m);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut out = SparsePoly::zero();
        let mut strips = Vec::new();
        horizontal_strips(parts, 0, &mut Vec::new(), &mut strips);
        for mu in strips {
            let removed = parts.iter().sum::<usize>() - mu.iter().sum::<usize>();
            let sub = self.rec(&mu, m - 1);
            for (mono, c) in sub.terms() {
                let mut x = mono.x_exponents().to_vec();
                x.resize(m, 0);
                x[m - 1] = removed as u32;
                out.add_term(Monomial::new(x, vec![]), c.clone());
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// All μ with λ/μ a horizontal strip: λ_{i+1} ≤ μ_i ≤ λ_i, zeros trimmed.
fn horizontal_strips(lambda: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == lambda.len() {
        let mut mu = cur.clone();
        while mu.last() == Some(&0) {
            mu.pop();
        }
        out.push(mu);
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    for mu_i in lo..=lambda[i] {
        cur.push(mu_i);
        horizontal_strips(lambda, i + 1, cur, out);
        cur.pop();
    }
}

pub fn schur_poly(shape: &Partition, m: usize) -> SparsePoly {
    SchurCache::new().get(shape, m)
}

/// Coefficients c_λ with f = Σ c_λ s_λ(x_1..x_m), found by repeatedly
/// removing the lexicographically leading monomial.
pub fn schur_expand(f: &SparsePoly, m: usize) -> Result<BTreeMap<Partition, BigInt>> {
    schur_expand_with(f, m, &mut SchurCache::new())
}

pub fn schur_expand_with(
    f: &SparsePoly,
    m: usize,
    cache: &mut SchurCache,
) -> Result<BTreeMap<Partition, BigInt>> {
    if f.has_y() || f.max_x_var() > m {
        return Err(Error::ForeignVariables(m));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !f.is_symmetric(m) {
        return Err(Error::NotSymmetric(m));
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((mono, c)) = rest.leading_term() {
        let parts: Vec<usize> = mono.x_exponents().iter().map(|&e| e as usize).collect();
        let shape = Partition::new(parts).map_err(|_| Error::NotSymmetric(m))?;
        let c = c.clone();
        if c.is_negative() {
            return Err(Error::NegativeLeftover {
                shape: shape.to_string(),
                coeff: c.to_string(),
            });
        }
        rest.add_scaled(&cache.get(&shape, m), &-c.clone());
        out.insert(shape, c);
    }
    let mut rebuilt = SparsePoly::zero();
    for (shape, c) in &out {
        rebuilt.add_scaled(&cache.get(shape, m), c);
    }
    if rebuilt != *f {
        return Err(Error::Internal("Schur expansion does not reconstruct".into()));
    }
    Ok(out)
}

/// Converts a nonnegative coefficient map to machine integers.
pub fn to_counts(map: &BTreeMap<Partition, BigInt>) -> Result<BTreeMap<Partition, u64>> {
    map.iter()
        .map(|(k, v)| {
            v.to_u64()
                .filter(|_| !v.is_zero())
                .map(|c| (k.clone(), c))
                .ok_or_else(|| Error::Internal(format!("coefficient {v} of {k} is not positive")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn stanley_small() {
        assert_eq!(stanley_truncated(&Permutation::identity(3), 4), SparsePoly::one());
        assert_eq!(
            stanley_truncated(&perm("21"), 3).to_string(),
            "x1 + x2 + x3"
        );
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur_poly(&shape("(1)"), 2).to_string(), "x1 + x2");
        assert_eq!(schur_poly(&shape("(2,1)"), 2).to_string(), "x1^2*x2 + x1*x2^2");
        assert!(schur_poly(&shape("(1,1,1)"), 2).is_zero());
        assert_eq!(schur_poly(&shape("()"), 3), SparsePoly::one());
    }

    #[test]
    fn expansion_of_321654() {
        let f = stanley_truncated(&perm("321654"), 6);
        let c = to_counts(&schur_expand(&f, 6).unwrap()).unwrap();
        // 321654 = 321 × 321 shifted, so F is s_{21}^2
        let s21 = schur_poly(&shape("(2,1)"), 6);
        assert_eq!(f, &s21 * &s21);
        let expect: BTreeMap<Partition, u64> = [
            ("(4,2)", 1),
            ("(4,1,1)", 1),
            ("(3,3)", 1),
            ("(3,2,1)", 2),
            ("(3,1,1,1)", 1),
            ("(2,2,2)", 1),
            ("(2,2,1,1)", 1),
        ]
        .into_iter()
        .map(|(s, k)| (shape(s), k))
        .collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn expansion_of_231654() {
        let f = stanley_truncated(&perm("231654"), 5);
        let c = to_counts(&schur_expand(&f, 5).unwrap()).unwrap();
        let expect: BTreeMap<Partition, u64> = ["(3,2)", "(3,1,1)", "(2,2,1)", "(2,1,1,1)"]
            .into_iter()
            .map(|s| (shape(s), 1))
            .collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn vexillary_single_schur() {
        let w = perm("35412");
        let f = stanley_truncated(&w, 7);
        assert_eq!(f, schur_poly(&shape("(3,2,2)"), 7));
    }

    #[test]
    fn expansion_rejects() {
        assert_eq!(
            schur_expand(&SparsePoly::x(1), 2),
            Err(Error::NotSymmetric(2))
        );
        assert_eq!(schur_expand(&SparsePoly::y(1), 2), Err(Error::ForeignVariables(2)));
        let neg = -&schur_poly(&shape("(1)"), 2);
        assert!(matches!(
            schur_expand(&neg, 2),
            Err(Error::NegativeLeftover { .. })
        ));
    }
}
