//! Sparse polynomials with integer coefficients in two alphabets x and y.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vectors for x and y, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn exp(v: &[u32], i: usize) -> u32 {
    v.get(i - 1).copied().unwrap_or(0)
}

fn set_exp(v: &mut Vec<u32>, i: usize, e: u32) {
    if v.len() < i {
        v.resize(i, 0);
    }
    v[i - 1] = e;
}

impl Monomial {
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Self {
        Monomial {
            x: trim(x),
            y: trim(y),
        }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.y
    }

    /// Exponent of x_i (1-based).
    pub fn x_exp(&self, i: usize) -> u32 {
        exp(&self.x, i)
    }

    pub fn y_exp(&self, j: usize) -> u32 {
        exp(&self.y, j)
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.y).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let add = |a: &[u32], b: &[u32]| {
            let len = a.len().max(b.len());
            (1..=len).map(|i| exp(a, i) + exp(b, i)).collect()
        };
        Monomial::new(add(&self.x, &other.x), add(&self.y, &other.y))
    }

    /// Exchange x_i and x_{i+1}.
    fn swap_x(&self, i: usize) -> Monomial {
        let mut x = self.x.clone();
        let (a, b) = (exp(&x, i), exp(&x, i + 1));
        set_exp(&mut x, i, b);
        set_exp(&mut x, i + 1, a);
        Monomial::new(x, self.y.clone())
    }

    fn with_x(&self, i: usize, e: u32) -> Monomial {
        let mut x = self.x.clone();
        set_exp(&mut x, i, e);
        Monomial::new(x, self.y.clone())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, v) in [("x", &self.x), ("y", &self.y)] {
            for (i, &e) in v.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{name}{}", i + 1)),
                    _ => factors.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SparsePoly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// x_i.
    pub fn x(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        SparsePoly::term(Monomial::new(e, vec![]), 1)
    }

    /// y_j.
    pub fn y(j: usize) -> Self {
        let mut e = vec![0; j];
        e[j - 1] = 1;
        SparsePoly::term(Monomial::new(vec![], e), 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = SparsePoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// self += c * other.
    pub fn add_scaled(&mut self, other: &SparsePoly, c: &BigInt) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically largest monomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Largest i such that x_i occurs.
    pub fn max_x_var(&self) -> usize {
        self.terms.keys().map(|m| m.x.len()).max().unwrap_or(0)
    }

    pub fn has_y(&self) -> bool {
        self.terms.keys().any(|m| !m.y.is_empty())
    }

    /// Substitute y = 0.
    pub fn drop_y(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y.is_empty())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Substitute x_k = 0 for k > m.
    pub fn restrict_x(&self, m: usize) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .filter(|(mono, _)| mono.x.len() <= m)
                .map(|(mono, c)| (mono.clone(), c.clone())),
        )
    }

    /// s_i f: exchange x_i and x_{i+1}.
    pub fn swap_x(&self, i: usize) -> SparsePoly {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.swap_x(i), c.clone())))
    }

    pub fn is_symmetric(&self, m: usize) -> bool {
        (1..m).all(|i| self.swap_x(i) == *self)
    }

    /// ∂_i f = (f - s_i f) / (x_i - x_{i+1}), by long division in x_i.
    pub fn divided_difference(&self, i: usize) -> Result<SparsePoly> {
        let numerator = self - &self.swap_x(i);
        // group by the monomial with x_i, x_{i+1} removed
        let mut groups: BTreeMap<Monomial, BTreeMap<(u32, u32), BigInt>> = BTreeMap::new();
        for (m, c) in &numerator.terms {
            let rest = m.with_x(i, 0).with_x(i + 1, 0);
            groups
                .entry(rest)
                .or_default()
                .insert((m.x_exp(i), m.x_exp(i + 1)), c.clone());
        }
        let mut quotient = SparsePoly::zero();
        for (rest, mut rem) in groups {
            while let Some(((a, b), c)) = rem.pop_last() {
                if a == 0 {
                    return Err(Error::Internal(format!(
                        "divided difference d_{i} left a nonzero remainder"
                    )));
                }
                quotient.add_term(rest.with_x(i, a - 1).with_x(i + 1, b), c.clone());
                let next = rem.entry((a - 1, b + 1)).or_insert_with(BigInt::zero);
                *next += c;
                if next.is_zero() {
                    rem.remove(&(a - 1, b + 1));
                }
            }
        }
        Ok(quotient)
    }

    /// Terms in display order: descending total degree, then descending
    /// lexicographic exponent.
    pub fn display_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        terms
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let is_unit = m.degree() == 0;
            if is_unit {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.times(b), c * d);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        -&self
    }
}
