//! Permutations in one-line notation, their statistics and pattern classes.
//!
//! Positions and values are 1-based. The ambient size is carried explicitly,
//! so `231` in S_3 and `2314` in S_4 are different values.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<usize>,
}

/// Which side `embed` pads on: `Left` gives 1×w, `Right` gives w×1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Classes {
    pub dominant: bool,
    pub vexillary: bool,
    pub grassmannian: bool,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "ambient size must be positive");
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The longest element n(n-1)…1.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "ambient size must be positive");
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// Every permutation of S_n in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                window: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Inverse of `lehmer_code`: rebuilds w ∈ S_n from a code of length n.
    pub fn from_lehmer_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut window = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= avail.len() {
                return Err(Error::InvalidPermutation(format!(
                    "code entry {c} at position {} too large",
                    i + 1
                )));
            }
            window.push(avail.remove(c));
        }
        Permutation::new(window)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// w_i, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// The position j with w_j = v.
    pub fn position_of(&self, v: usize) -> usize {
        self.window.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// λ(w): the Lehmer code sorted into a partition.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.lehmer_code())
    }

    /// Positions i with w_i > w_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// Dominance via the Lehmer code (weakly decreasing).
    pub fn is_dominant(&self) -> bool {
        self.lehmer_code().windows(2).all(|c| c[0] >= c[1])
    }

    /// Dominance via 132-avoidance.
    pub fn avoids_132(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if w[i] < w[k] && w[k] < w[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// 2143-avoidance.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for a in 0..n {
            for b in a + 1..n {
                if w[b] >= w[a] {
                    continue;
                }
                for c in b + 1..n {
                    if w[c] <= w[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if w[d] > w[a] && w[d] < w[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    pub fn classify(&self) -> Classes {
        let dominant = self.is_dominant();
        debug_assert_eq!(dominant, self.avoids_132());
        Classes {
            dominant,
            vexillary: self.is_vexillary(),
            grassmannian: self.is_grassmannian(),
        }
    }

    /// w t_{i,j}: swap the entries in positions i < j.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<Self> {
        if i >= j || i == 0 {
            return Err(Error::BadTransposition { i, j });
        }
        if j > self.n() {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.n(),
            });
        }
        Ok(self.swapped(i, j))
    }

    pub(crate) fn swapped(&self, i: usize, j: usize) -> Self {
        let mut window = self.window.clone();
        window.swap(i - 1, j - 1);
        Permutation { window }
    }

    pub fn embed(&self, side: Side) -> Self {
        let n = self.n();
        let window = match side {
            Side::Left => std::iter::once(1)
                .chain(self.window.iter().map(|&v| v + 1))
                .collect(),
            Side::Right => self.window.iter().copied().chain([n + 1]).collect(),
        };
        Permutation { window }
    }

    /// Drops trailing fixed points, undoing any number of w×1 embeddings.
    pub fn stable_form(&self) -> Self {
        let mut window = self.window.clone();
        while window.len() > 1 && window.last() == Some(&window.len()) {
            window.pop();
        }
        Permutation { window }
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// v_i = n+1 - w_{n+1-i}.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let window = self.window.iter().rev().map(|&v| n + 1 - v).collect();
        Permutation { window }
    }

    /// Every reduced word, lexicographically sorted.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut memo = HashMap::new();
        let mut words: Vec<Word> = reduced_words_rec(self, &mut memo)
            .iter()
            .map(|letters| Word::new_unchecked(letters.clone(), self.n()))
            .collect();
        words.sort();
        words
    }

    /// |Red(w)| without materializing the words.
    pub fn count_reduced_words(&self) -> u128 {
        fn rec(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
            if w.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(w) {
                return c;
            }
            let c = w
                .descents()
                .into_iter()
                .map(|d| rec(&w.swapped(d, d + 1), memo))
                .sum();
            memo.insert(w.clone(), c);
            c
        }
        rec(self, &mut HashMap::new())
    }

    /// Digits when n ≤ 9, comma-separated otherwise.
    pub fn compact(&self) -> String {
        if self.n() <= 9 {
            self.window.iter().map(|v| v.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

// Words ending in a descent d: Red(w s_d) followed by d.
fn reduced_words_rec(
    w: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(ws) = memo.get(w) {
        return ws.clone();
    }
    let mut out = Vec::new();
    for d in w.descents() {
        for mut prefix in reduced_words_rec(&w.swapped(d, d + 1), memo) {
            prefix.push(d);
            out.push(prefix);
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let window: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("permutation entry {p:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        if !s.contains(',') && window.len() > 9 {
            return Err(Error::Parse(
                "compact digit form only allowed for n <= 9".into(),
            ));
        }
        Permutation::new(window)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Boxes (i, j), 1-based, in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}
