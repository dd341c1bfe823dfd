//! Words in the simple transpositions s_1..s_{n-1}, line diagrams, bumps and
//! the Little map.
//!
//! Evaluating a word starts from the identity and, for each letter a, swaps
//! the entries in positions a and a+1 (right multiplication by s_a).

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWord("ambient size must be positive".into()));
        }
        if let Some(&a) = letters.iter().find(|&&a| a == 0 || a >= n) {
            return Err(Error::InvalidWord(format!(
                "letter {a} outside 1..={}",
                n - 1
            )));
        }
        Ok(Word { letters, n })
    }

    /// Ambient size max(letter)+1, or 1 for the empty word.
    pub fn minimal(letters: Vec<usize>) -> Result<Self> {
        let n = letters.iter().copied().max().unwrap_or(0) + 1;
        Word::new(letters, n)
    }

    pub(crate) fn new_unchecked(letters: Vec<usize>, n: usize) -> Self {
        Word { letters, n }
    }

    /// Parses `(5,4,1,2,5)` or `5 4 1 2 5`. Without `n` the ambient size is
    /// the largest letter plus one.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let letters = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("word letter {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match n {
            Some(n) => Word::new(letters, n),
            None => Word::minimal(letters),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters in a larger ambient group.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Word::new(self.letters.clone(), n)
    }

    pub fn evaluate(&self) -> Permutation {
        let mut w: Vec<usize> = (1..=self.n).collect();
        for &a in &self.letters {
            w.swap(a - 1, a);
        }
        Permutation::new(w).expect("swaps of the identity form a permutation")
    }

    pub fn is_reduced(&self) -> bool {
        let mut w: Vec<usize> = (1..=self.n).collect();
        for &a in &self.letters {
            if w[a - 1] > w[a] {
                return false;
            }
            w.swap(a - 1, a);
        }
        true
    }

    pub fn reverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, n: self.n }
    }

    /// a_i -> n - a_i.
    pub fn complement(&self) -> Self {
        let letters = self.letters.iter().map(|&a| self.n - a).collect();
        Word { letters, n: self.n }
    }

    /// Positions i with a_i > a_{i+1}.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.letters[i - 1] > self.letters[i])
            .collect()
    }

    /// a^{(t)}: the word with letter t removed.
    pub fn without(&self, t: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(t - 1);
        Word { letters, n: self.n }
    }

    pub fn line_diagram(&self) -> LineDiagram {
        LineDiagram::new(self.clone())
    }

    fn check_time(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.len() {
            return Err(Error::IndexOutOfRange {
                index: t,
                bound: self.len(),
            });
        }
        Ok(())
    }

    /// a↑_t. When a_t = 1 every other letter moves up and n grows by one.
    pub fn bump_at(&self, t: usize) -> Result<Self> {
        self.check_time(t)?;
        let mut letters = self.letters.clone();
        if letters[t - 1] > 1 {
            letters[t - 1] -= 1;
            Ok(Word { letters, n: self.n })
        } else {
            for (s, a) in letters.iter_mut().enumerate() {
                if s != t - 1 {
                    *a += 1;
                }
            }
            Ok(Word {
                letters,
                n: self.n + 1,
            })
        }
    }

    /// Little bump from `t1`, returning the final word and the bumped times.
    pub fn little_bump_path(&self, t1: usize) -> Result<(Word, Vec<usize>)> {
        self.check_time(t1)?;
        if !self.is_reduced() {
            return Err(Error::NotReduced(self.to_string()));
        }
        if !self.without(t1).is_reduced() {
            return Err(Error::LittleMap(format!(
                "deleting letter {t1} of {self} does not leave a reduced word"
            )));
        }
        let guard = 10 * (self.n + self.len()).pow(2);
        let mut cur = self.clone();
        let mut t = t1;
        let mut times = Vec::new();
        loop {
            if times.len() >= guard {
                return Err(Error::Internal(format!(
                    "little bump of {self} at {t1} exceeded {guard} steps"
                )));
            }
            times.push(t);
            let next = cur.bump_at(t)?;
            if next.is_reduced() {
                return Ok((next, times));
            }
            let diagram = next.line_diagram();
            let (a, b) = diagram.crossing(t);
            let other: Vec<usize> = diagram
                .crossing_times(a, b)
                .into_iter()
                .filter(|&s| s != t)
                .collect();
            let [s] = other[..] else {
                return Err(Error::Internal(format!(
                    "bumped word {next} has {} repeat crossings at {t}",
                    other.len()
                )));
            };
            let mut expected = vec![t, s];
            expected.sort_unstable();
            if next.defects() != expected {
                return Err(Error::Internal(format!(
                    "bumped word {next} violates the unique-defect rule at {t}"
                )));
            }
            cur = next;
            t = s;
        }
    }

    pub fn little_bump(&self, t1: usize) -> Result<Self> {
        self.little_bump_path(t1).map(|(w, _)| w)
    }

    /// Times whose deletion leaves a reduced word.
    pub fn defects(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&t| self.without(t).is_reduced())
            .collect()
    }

    /// θ_{k,v}: bump at the crossing of the lines w_k and v, where
    /// w = eval(a), v sits at a position j > k and w_k > v.
    pub fn little_map(&self, k: usize, v: usize) -> Result<Self> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(self.to_string()));
        }
        let w = self.evaluate();
        let n = self.n;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange { index: v, bound: n });
        }
        let j = w.position_of(v);
        let wk = w.at(k);
        if j <= k || wk <= v {
            return Err(Error::LittleMap(format!(
                "need value {v} after position {k} and below w_{k}={wk} in {}",
                w.compact()
            )));
        }
        let diagram = self.line_diagram();
        let t1 = match diagram.crossing_times(wk, v)[..] {
            [t] => t,
            _ => {
                return Err(Error::LittleMap(format!(
                    "lines {wk} and {v} do not cross in {self}"
                )))
            }
        };
        self.little_bump(t1)
    }

    /// θ_k with v inferred: the unique j > k with ℓ(w t_{k,j}) = ℓ(w) - 1.
    pub fn little_map_inferred(&self, k: usize) -> Result<Self> {
        let v = self.infer_value(k)?;
        self.little_map(k, v)
    }

    /// The value v = w_j for the unique j > k with w_j < w_k and no value
    /// between them at positions strictly between k and j.
    pub fn infer_value(&self, k: usize) -> Result<usize> {
        let w = self.evaluate();
        let n = w.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        let wk = w.at(k);
        let candidates: Vec<usize> = (k + 1..=n)
            .filter(|&j| {
                let wj = w.at(j);
                wj < wk && (k + 1..j).all(|m| !(wj < w.at(m) && w.at(m) < wk))
            })
            .map(|j| w.at(j))
            .collect();
        match candidates[..] {
            [v] => Ok(v),
            [] => Err(Error::LittleMap(format!(
                "no j > {k} with l(w t_{{{k},j}}) = l(w) - 1 for w = {}",
                w.compact()
            ))),
            _ => Err(Error::LittleMap(format!(
                "ambiguous: values {candidates:?} all qualify at k = {k}; pass v explicitly"
            ))),
        }
    }

    /// θ^{-1}_{k,v}(a) = (θ_{n+1-k, n+1-v}(a^c))^c.
    pub fn little_map_inverse(&self, k: usize, v: usize) -> Result<Self> {
        let n = self.n;
        if k == 0 || k > n || v == 0 || v > n {
            return Err(Error::IndexOutOfRange {
                index: k.max(v),
                bound: n,
            });
        }
        let mapped = self.complement().little_map(n + 1 - k, n + 1 - v)?;
        if mapped.n != n {
            return Err(Error::LittleMap(format!(
                "inverse of {self} left the ambient group S_{n}"
            )));
        }
        Ok(mapped.complement())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Line diagram of a word: `columns[t][r-1]` is the line (value) in row r
/// after the first t letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDiagram {
    word: Word,
    columns: Vec<Vec<usize>>,
}

impl LineDiagram {
    pub fn new(word: Word) -> Self {
        let mut cur: Vec<usize> = (1..=word.n).collect();
        let mut columns = vec![cur.clone()];
        for &a in &word.letters {
            cur.swap(a - 1, a);
            columns.push(cur.clone());
        }
        LineDiagram { word, columns }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Row of line v after t letters.
    pub fn row_of(&self, v: usize, t: usize) -> usize {
        self.columns[t].iter().position(|&x| x == v).expect("line exists") + 1
    }

    /// The two lines crossing at time t, as (upper, lower) before the swap.
    pub fn crossing(&self, t: usize) -> (usize, usize) {
        let a = self.word.letters[t - 1];
        let col = &self.columns[t - 1];
        (col[a - 1], col[a])
    }

    /// All times at which lines u and v cross.
    pub fn crossing_times(&self, u: usize, v: usize) -> Vec<usize> {
        (1..=self.word.len())
            .filter(|&t| {
                let (a, b) = self.crossing(t);
                (a == u && b == v) || (a == v && b == u)
            })
            .collect()
    }

    /// Largest number of crossings between any pair of lines.
    pub fn max_pair_crossings(&self) -> usize {
        let n = self.word.n;
        let mut counts = vec![0usize; (n + 1) * (n + 1)];
        for t in 1..=self.word.len() {
            let (a, b) = self.crossing(t);
            let (lo, hi) = (a.min(b), a.max(b));
            counts[lo * (n + 1) + hi] += 1;
        }
        counts.into_iter().max().unwrap_or(0)
    }
}
