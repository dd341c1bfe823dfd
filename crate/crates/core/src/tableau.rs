//! Increasing and standard tableaux, Edelman-Greene insertion and reduced
//! word tableaux.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::words::Word;

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|e| Error::InvalidTableau(e.to_string()))
}

fn strictly_increasing(rows: &[Vec<usize>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]));
    let cols_ok = rows
        .windows(2)
        .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
    rows_ok && cols_ok
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|err| Error::Parse(format!("tableau entry {e:?}: {err}")))
                })
                .collect()
        })
        .collect()
}

fn fmt_rows(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    f.write_str(&rows.join("/"))
}

/// Rows and columns strictly increasing, entries positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTableau {
    rows: Vec<Vec<usize>>,
}

impl IncreasingTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        shape_of(&rows)?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if !strictly_increasing(&rows) {
            return Err(Error::InvalidTableau(
                "rows and columns must strictly increase".into(),
            ));
        }
        Ok(IncreasingTableau { rows })
    }

    pub fn empty() -> Self {
        IncreasingTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated at construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect();
        IncreasingTableau { rows }
    }

    /// Rows bottom to top, each left to right. Ambient size given by `n`.
    pub fn row_reading_word(&self, n: usize) -> Result<Word> {
        let letters = self.rows.iter().rev().flatten().copied().collect();
        Word::new(letters, n)
    }

    /// Columns right to left, each top to bottom.
    pub fn column_reading_word(&self, n: usize) -> Result<Word> {
        let width = self.rows.first().map_or(0, Vec::len);
        let letters = (0..width)
            .rev()
            .flat_map(|j| {
                self.rows
                    .iter()
                    .take_while(move |r| r.len() > j)
                    .map(move |r| r[j])
            })
            .collect();
        Word::new(letters, n)
    }

    /// column(T) is a reduced word of w.
    pub fn is_reduced_word_tableau(&self, w: &Permutation) -> bool {
        if self.max_entry() >= w.n() {
            return false;
        }
        let word = self.column_reading_word(w.n()).expect("entries below n");
        word.is_reduced() && word.evaluate() == *w
    }

    fn row_word_key(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl PartialOrd for IncreasingTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by shape, then row reading word.
impl Ord for IncreasingTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.row_word_key().cmp(&other.row_word_key()))
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

impl FromStr for IncreasingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IncreasingTableau::new(parse_rows(s)?)
    }
}

/// Increasing tableau whose entries are exactly 1..=size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        shape_of(&rows)?;
        let mut entries: Vec<usize> = rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        if entries.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::InvalidTableau(
                "entries must be exactly 1..=size".into(),
            ));
        }
        if !strictly_increasing(&rows) {
            return Err(Error::InvalidTableau(
                "rows and columns must strictly increase".into(),
            ));
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated at construction")
    }

    /// Number of standard tableaux of a shape, by the hook length formula.
    pub fn count(shape: &Partition) -> u128 {
        let conj = shape.conjugate();
        let num: u128 = (1..=shape.size() as u128).product();
        let hooks: u128 = shape
            .boxes()
            .map(|(i, j)| {
                (shape.parts()[i - 1] - j + conj.parts()[j - 1] - i + 1) as u128
            })
            .product();
        num / hooks
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
}

/// Inserts x into `rows`, returning the row index (0-based) of the new box.
fn insert_letter(rows: &mut Vec<Vec<usize>>, x: usize) -> Result<usize> {
    let mut x = x;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return Ok(r);
        }
        let last = *rows[r].last().expect("rows are nonempty");
        if x > last {
            rows[r].push(x);
            return Ok(r);
        }
        if x == last {
            return Err(Error::Internal(format!(
                "inserting {x} into a row whose largest entry is {x}"
            )));
        }
        let c = rows[r].iter().position(|&y| y > x).expect("x < last");
        let y = rows[r][c];
        let left_ok = c == 0 || rows[r][c - 1] < x;
        let above_ok = r == 0 || rows[r - 1][c] < x;
        if left_ok && above_ok {
            rows[r][c] = x;
        }
        x = y;
        r += 1;
    }
}

/// Edelman-Greene insertion of a reduced word.
pub fn eg_insert(a: &Word) -> Result<(IncreasingTableau, StandardTableau)> {
    if !a.is_reduced() {
        return Err(Error::NotReduced(a.to_string()));
    }
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in a.letters().iter().enumerate() {
        let r = insert_letter(&mut p, x)?;
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step + 1);
    }
    let p = IncreasingTableau::new(p)
        .map_err(|e| Error::Internal(format!("insertion tableau: {e}")))?;
    let q = StandardTableau::new(q)
        .map_err(|e| Error::Internal(format!("recording tableau: {e}")))?;
    Ok((p, q))
}

/// RT(w): the distinct insertion tableaux of the reduced words of w^{-1}.
pub fn reduced_word_tableaux(w: &Permutation) -> Vec<IncreasingTableau> {
    let set: BTreeSet<IncreasingTableau> = w
        .inverse()
        .reduced_words()
        .iter()
        .map(|a| eg_insert(a).expect("reduced words insert").0)
        .collect();
    set.into_iter().collect()
}

/// The frozen tableau of a dominant permutation: box (i,j) holds i+j-1.
pub fn frozen_tableau(w: &Permutation) -> Result<IncreasingTableau> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.compact()));
    }
    let rows = w
        .shape()
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (1..=len).map(|j| i + j).collect())
        .collect();
    IncreasingTableau::new(rows)
}
