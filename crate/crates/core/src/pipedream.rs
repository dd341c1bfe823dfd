//! Bumpless pipedreams in matrix coordinates: box (i, j) is row i from the
//! top, column j from the left.
//!
//! Pipe i enters through the south edge of column i and leaves through the
//! east edge of row w^{-1}(i). Pipes only travel north and east.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::poly::SparsePoly;

pub type Box2 = (usize, usize);

const N: u8 = 1;
const E: u8 = 2;
const S: u8 = 4;
const W: u8 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Empty,
    NwElbow,
    SeElbow,
    Horizontal,
    Vertical,
    Crossing,
}

impl Tile {
    fn edges(self) -> u8 {
        match self {
            Tile::Empty => 0,
            Tile::NwElbow => N | W,
            Tile::SeElbow => S | E,
            Tile::Horizontal => W | E,
            Tile::Vertical => N | S,
            Tile::Crossing => N | E | S | W,
        }
    }

    fn from_edges(mask: u8) -> Option<Tile> {
        [
            Tile::Empty,
            Tile::NwElbow,
            Tile::SeElbow,
            Tile::Horizontal,
            Tile::Vertical,
            Tile::Crossing,
        ]
        .into_iter()
        .find(|t| t.edges() == mask)
    }

    pub fn is_elbow(self) -> bool {
        matches!(self, Tile::NwElbow | Tile::SeElbow)
    }

    pub fn ascii(self) -> char {
        match self {
            Tile::Empty => '.',
            Tile::NwElbow => 'j',
            Tile::SeElbow => 'r',
            Tile::Horizontal => '-',
            Tile::Vertical => '|',
            Tile::Crossing => '+',
        }
    }

    pub fn unicode(self) -> char {
        match self {
            Tile::Empty => '.',
            Tile::NwElbow => '┘',
            Tile::SeElbow => '┌',
            Tile::Horizontal => '─',
            Tile::Vertical => '│',
            Tile::Crossing => '┼',
        }
    }

    pub fn from_char(c: char) -> Option<Tile> {
        Some(match c {
            '.' => Tile::Empty,
            'j' | '┘' => Tile::NwElbow,
            'r' | '┌' => Tile::SeElbow,
            '-' | '─' => Tile::Horizontal,
            '|' | '│' => Tile::Vertical,
            '+' | '┼' => Tile::Crossing,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DroopError {
    #[error("box {0:?} lies outside the grid")]
    OutOfGrid(Box2),
    #[error("box {0:?} is not an SE elbow")]
    NotSeElbow(Box2),
    #[error("box {0:?} is not an NW elbow")]
    NotNwElbow(Box2),
    #[error("target {0:?} is not empty")]
    TargetNotEmpty(Box2),
    #[error("target {target:?} is not strictly southeast of {elbow:?}")]
    NotSoutheast { elbow: Box2, target: Box2 },
    #[error("the elbow's pipe does not run along the west column and north row of the rectangle")]
    PipeOffBoundary,
    #[error("the rectangle contains another elbow at {0:?}")]
    ExtraElbow(Box2),
    #[error("northwest corner {0:?} of the rectangle is not empty")]
    CornerNotEmpty(Box2),
    #[error("rerouted pipe collides with another pipe at {0:?}")]
    Collision(Box2),
    #[error("result is not a bumpless pipedream: {0}")]
    Invalid(String),
}

/// Pipe owning each of a box's four edges, indexed N, E, S, W.
type Owners = [Option<usize>; 4];

fn slot(dir: u8) -> usize {
    match dir {
        N => 0,
        E => 1,
        S => 2,
        _ => 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BumplessPipedream {
    n: usize,
    tiles: Vec<Tile>,
    perm: Permutation,
}

impl PartialOrd for BumplessPipedream {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: ambient size, then tiles in row-major order.
impl Ord for BumplessPipedream {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.tiles.cmp(&other.tiles))
    }
}

struct Traced {
    owners: Vec<Owners>,
    perm: Permutation,
}

fn trace(n: usize, tiles: &[Tile]) -> Result<Traced> {
    let bad = |msg: String| Err(Error::InvalidPipedream(msg));
    if n == 0 || tiles.len() != n * n {
        return bad(format!("expected {n}x{n} tiles, got {}", tiles.len()));
    }
    let at = |r: usize, c: usize| tiles[(r - 1) * n + (c - 1)].edges();
    for r in 1..=n {
        for c in 1..=n {
            let e = at(r, c);
            let north_open = if r == 1 { false } else { at(r - 1, c) & S != 0 };
            let west_open = if c == 1 { false } else { at(r, c - 1) & E != 0 };
            let south_open = if r == n { true } else { at(r + 1, c) & N != 0 };
            let east_open = if c == n { true } else { at(r, c + 1) & W != 0 };
            let expect = [(N, north_open), (W, west_open), (S, south_open), (E, east_open)];
            for (dir, open) in expect {
                if (e & dir != 0) != open {
                    return bad(format!("dangling pipe edge at ({r},{c})"));
                }
            }
        }
    }
    let mut owners = vec![[None; 4]; n * n];
    let mut exit_row = vec![0; n + 1];
    for pipe in 1..=n {
        let (mut r, mut c, mut from) = (n, pipe, S);
        loop {
            let idx = (r - 1) * n + (c - 1);
            let tile = tiles[idx];
            let to = match (tile, from) {
                (Tile::Vertical | Tile::Crossing, S) => N,
                (Tile::SeElbow, S) => E,
                (Tile::Horizontal | Tile::Crossing, W) => E,
                (Tile::NwElbow, W) => N,
                _ => return bad(format!("pipe {pipe} cannot pass through ({r},{c})")),
            };
            for d in [from, to] {
                if owners[idx][slot(d)].replace(pipe).is_some() {
                    return bad(format!("pipes share an edge at ({r},{c})"));
                }
            }
            if to == N {
                r -= 1;
                from = S;
            } else if c == n {
                exit_row[pipe] = r;
                break;
            } else {
                c += 1;
                from = W;
            }
        }
    }
    for (idx, tile) in tiles.iter().enumerate() {
        let e = tile.edges();
        for d in [N, E, S, W] {
            if e & d != 0 && owners[idx][slot(d)].is_none() {
                return bad(format!(
                    "edge at ({},{}) carries no pipe",
                    idx / n + 1,
                    idx % n + 1
                ));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for (idx, tile) in tiles.iter().enumerate() {
        if *tile == Tile::Crossing {
            let (v, h) = (owners[idx][slot(S)], owners[idx][slot(W)]);
            let pair = (v.min(h), v.max(h));
            if !seen.insert(pair) {
                return bad(format!(
                    "pipes {} and {} cross twice",
                    pair.0.unwrap_or(0),
                    pair.1.unwrap_or(0)
                ));
            }
        }
    }
    let mut window = vec![0; n];
    for pipe in 1..=n {
        window[exit_row[pipe] - 1] = pipe;
    }
    let perm = Permutation::new(window).map_err(|e| Error::InvalidPipedream(e.to_string()))?;
    Ok(Traced { owners, perm })
}

/// Pipe segments of the route hugging the west column and north row of the
/// rectangle with corners (r1,c1), (r2,c2).
fn north_route(r1: usize, c1: usize, r2: usize, c2: usize, r: usize, c: usize) -> u8 {
    if (r, c) == (r1, c1) {
        S | E
    } else if c == c1 && r > r1 && r <= r2 {
        N | S
    } else if r == r1 && c > c1 && c <= c2 {
        W | E
    } else {
        0
    }
}

/// The route after a droop: up the west edge to the southwest corner, along
/// the south row, up the east column, out of the northeast corner.
fn south_route(r1: usize, c1: usize, r2: usize, c2: usize, r: usize, c: usize) -> u8 {
    if (r, c) == (r2, c1) {
        S | E
    } else if r == r2 && c > c1 && c < c2 {
        W | E
    } else if (r, c) == (r2, c2) {
        W | N
    } else if c == c2 && r > r1 && r < r2 {
        N | S
    } else if (r, c) == (r1, c2) {
        S | E
    } else {
        0
    }
}

/// The Rothe diagram {(i, j) : w_i > j, j appears after position i}.
pub fn rothe_diagram(w: &Permutation) -> Vec<Box2> {
    let n = w.n();
    let inv = w.inverse();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..w.at(i) {
            if inv.at(j) > i {
                out.push((i, j));
            }
        }
    }
    out
}

impl BumplessPipedream {
    pub fn from_tiles(n: usize, tiles: Vec<Tile>) -> Result<Self> {
        let perm = trace(n, &tiles)?.perm;
        Ok(BumplessPipedream { n, tiles, perm })
    }

    /// Validates a grid and returns the permutation its pipes realize.
    pub fn validate(n: usize, tiles: &[Tile]) -> Result<Permutation> {
        trace(n, tiles).map(|t| t.perm)
    }

    /// The pipedream without NW elbows.
    pub fn rothe(w: &Permutation) -> Self {
        let n = w.n();
        let inv = w.inverse();
        let mut tiles = vec![Tile::Empty; n * n];
        for r in 1..=n {
            for c in 1..=n {
                let v = w.at(r);
                // pipe v turns at (r, v); pipe c passes vertically below its elbow
                let horizontal = c > v;
                let vertical = inv.at(c) < r;
                tiles[(r - 1) * n + (c - 1)] = if c == v {
                    Tile::SeElbow
                } else {
                    match (horizontal, vertical) {
                        (true, true) => Tile::Crossing,
                        (true, false) => Tile::Horizontal,
                        (false, true) => Tile::Vertical,
                        (false, false) => Tile::Empty,
                    }
                };
            }
        }
        BumplessPipedream::from_tiles(n, tiles).expect("Rothe pipedream is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile(&self, (r, c): Box2) -> Tile {
        self.tiles[(r - 1) * self.n + (c - 1)]
    }

    fn boxes_with(&self, kind: Tile) -> Vec<Box2> {
        let n = self.n;
        (0..n * n)
            .filter(|&k| self.tiles[k] == kind)
            .map(|k| (k / n + 1, k % n + 1))
            .collect()
    }

    /// Empty boxes in row-major order.
    pub fn empty_boxes(&self) -> Vec<Box2> {
        self.boxes_with(Tile::Empty)
    }

    pub fn nw_elbows(&self) -> Vec<Box2> {
        self.boxes_with(Tile::NwElbow)
    }

    pub fn se_elbows(&self) -> Vec<Box2> {
        self.boxes_with(Tile::SeElbow)
    }

    fn in_grid(&self, (r, c): Box2) -> bool {
        (1..=self.n).contains(&r) && (1..=self.n).contains(&c)
    }

    fn owners(&self) -> Vec<Owners> {
        trace(self.n, &self.tiles).expect("validated").owners
    }

    fn reroute(
        &self,
        (r1, c1): Box2,
        (r2, c2): Box2,
        before: fn(usize, usize, usize, usize, usize, usize) -> u8,
        after: fn(usize, usize, usize, usize, usize, usize) -> u8,
    ) -> std::result::Result<Self, DroopError> {
        let n = self.n;
        let mut tiles = self.tiles.clone();
        for r in r1..=r2 {
            for c in c1..=c2 {
                let idx = (r - 1) * n + (c - 1);
                let old = tiles[idx].edges();
                let gone = before(r1, c1, r2, c2, r, c);
                let added = after(r1, c1, r2, c2, r, c);
                if old & gone != gone {
                    return Err(DroopError::Invalid(format!(
                        "pipe missing from its route at ({r},{c})"
                    )));
                }
                let other = old & !gone;
                if other & added != 0 {
                    return Err(DroopError::Collision((r, c)));
                }
                tiles[idx] = Tile::from_edges(other | added).ok_or(DroopError::Collision((r, c)))?;
            }
        }
        let perm = trace(n, &tiles).map_err(|e| DroopError::Invalid(e.to_string()))?;
        if perm.perm != self.perm {
            return Err(DroopError::Invalid("permutation changed".into()));
        }
        Ok(BumplessPipedream {
            n,
            tiles,
            perm: perm.perm,
        })
    }

    fn other_elbow(&self, (r1, c1): Box2, (r2, c2): Box2, allowed: &[Box2]) -> Option<Box2> {
        (r1..=r2)
            .flat_map(|r| (c1..=c2).map(move |c| (r, c)))
            .find(|b| !allowed.contains(b) && self.tile(*b).is_elbow())
    }

    /// Swap the SE elbow `elbow` with the empty box `target` strictly to its
    /// southeast, rerouting the elbow's pipe around the rectangle they span.
    pub fn droop(&self, elbow: Box2, target: Box2) -> std::result::Result<Self, DroopError> {
        for b in [elbow, target] {
            if !self.in_grid(b) {
                return Err(DroopError::OutOfGrid(b));
            }
        }
        if self.tile(elbow) != Tile::SeElbow {
            return Err(DroopError::NotSeElbow(elbow));
        }
        if self.tile(target) != Tile::Empty {
            return Err(DroopError::TargetNotEmpty(target));
        }
        let ((r1, c1), (r2, c2)) = (elbow, target);
        if r2 <= r1 || c2 <= c1 {
            return Err(DroopError::NotSoutheast { elbow, target });
        }
        let owners = self.owners();
        let n = self.n;
        let own = |r: usize, c: usize, d: u8| owners[(r - 1) * n + (c - 1)][slot(d)];
        let pipe = own(r1, c1, S);
        let along_west = (r1..=r2).all(|r| own(r, c1, S) == pipe);
        let along_north = (c1..=c2).all(|c| own(r1, c, E) == pipe);
        if !(along_west && along_north) {
            return Err(DroopError::PipeOffBoundary);
        }
        if let Some(b) = self.other_elbow(elbow, target, &[elbow]) {
            return Err(DroopError::ExtraElbow(b));
        }
        self.reroute(elbow, target, north_route, south_route)
    }

    /// Undo the droop that produced the NW elbow at `nw`.
    pub fn reverse_droop(&self, nw: Box2) -> std::result::Result<Self, DroopError> {
        if !self.in_grid(nw) {
            return Err(DroopError::OutOfGrid(nw));
        }
        if self.tile(nw) != Tile::NwElbow {
            return Err(DroopError::NotNwElbow(nw));
        }
        let (r2, c2) = nw;
        // follow the pipe west along row r2, then north along column c2,
        // to the SE elbows where it turned
        let c1 = (1..c2)
            .rev()
            .find(|&c| self.tile((r2, c)) == Tile::SeElbow)
            .ok_or(DroopError::PipeOffBoundary)?;
        let r1 = (1..r2)
            .rev()
            .find(|&r| self.tile((r, c2)) == Tile::SeElbow)
            .ok_or(DroopError::PipeOffBoundary)?;
        let straight = (c1 + 1..c2).all(|c| self.tile((r2, c)).edges() & (W | E) == W | E)
            && (r1 + 1..r2).all(|r| self.tile((r, c2)).edges() & (N | S) == N | S);
        if !straight {
            return Err(DroopError::PipeOffBoundary);
        }
        if self.tile((r1, c1)) != Tile::Empty {
            return Err(DroopError::CornerNotEmpty((r1, c1)));
        }
        if let Some(b) = self.other_elbow((r1, c1), (r2, c2), &[(r2, c1), (r2, c2), (r1, c2)]) {
            return Err(DroopError::ExtraElbow(b));
        }
        self.reroute((r1, c1), (r2, c2), south_route, north_route)
    }

    /// Reverse droops at the NW elbows, smallest box first, until none remain.
    /// Returns the boxes used and every pipedream along the way, starting
    /// with `self` and ending with the Rothe pipedream.
    pub fn reverse_droop_chain(&self) -> Result<(Vec<Box2>, Vec<BumplessPipedream>)> {
        let boxes = self.nw_elbows();
        let mut chain = vec![self.clone()];
        for &b in &boxes {
            let next = chain.last().expect("nonempty").reverse_droop(b)?;
            chain.push(next);
        }
        if *chain.last().expect("nonempty") != BumplessPipedream::rothe(&self.perm) {
            return Err(Error::Internal(
                "reverse droops did not reach the Rothe pipedream".into(),
            ));
        }
        Ok((boxes, chain))
    }

    /// ∏ (x_i - y_j) over empty boxes (i, j).
    pub fn weight(&self) -> SparsePoly {
        self.empty_boxes()
            .into_iter()
            .fold(SparsePoly::one(), |acc, (i, j)| {
                &acc * &(&SparsePoly::x(i) - &SparsePoly::y(j))
            })
    }

    /// The shape when the empty boxes form a Young diagram in the northwest
    /// corner.
    pub fn is_eg(&self) -> Option<Partition> {
        let empties = self.empty_boxes();
        let mut rows = vec![0usize; self.n];
        for &(r, _) in &empties {
            rows[r - 1] += 1;
        }
        let justified = empties.iter().all(|&(r, c)| c <= rows[r - 1]);
        let decreasing = rows.windows(2).all(|p| p[0] >= p[1]);
        (justified && decreasing).then(|| Partition::from_unsorted(rows))
    }

    /// One line per row.
    pub fn render(&self, unicode: bool) -> String {
        self.rows(unicode).join("\n")
    }

    /// Rows joined by `/`.
    pub fn render_line(&self) -> String {
        self.rows(false).join("/")
    }

    fn rows(&self, unicode: bool) -> Vec<String> {
        self.tiles
            .chunks(self.n)
            .map(|row| {
                row.iter()
                    .map(|t| if unicode { t.unicode() } else { t.ascii() })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for BumplessPipedream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl FromStr for BumplessPipedream {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .collect();
        let n = rows.len();
        let mut tiles = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let before = tiles.len();
            for ch in row.chars() {
                tiles.push(Tile::from_char(ch).ok_or_else(|| {
                    Error::Parse(format!("unknown tile {ch:?} in row {}", i + 1))
                })?);
            }
            if tiles.len() - before != n {
                return Err(Error::Parse(format!(
                    "row {} has {} tiles, expected {n}",
                    i + 1,
                    tiles.len() - before
                )));
            }
        }
        BumplessPipedream::from_tiles(n, tiles)
    }
}

/// Pivots of an empty box of rothe(w): SE elbows (a, w_a) northwest of the
/// box whose spanned rectangle holds no other elbow.
pub fn pivots(w: &Permutation, (i, j): Box2) -> Result<Vec<Box2>> {
    if !rothe_diagram(w).contains(&(i, j)) {
        return Err(Error::InvalidPipedream(format!(
            "({i},{j}) is not an empty box of the Rothe pipedream"
        )));
    }
    let elbows: Vec<Box2> = (1..=w.n()).map(|a| (a, w.at(a))).collect();
    let nw_of = |(a, b): Box2| a < i && b < j;
    Ok(elbows
        .iter()
        .copied()
        .filter(|&e| nw_of(e))
        .filter(|&(a, b)| {
            elbows
                .iter()
                .all(|&(r, c)| (r, c) == (a, b) || !(a <= r && r <= i && b <= c && c <= j))
        })
        .collect())
}

/// Empty boxes of rothe(w) that have at least one pivot, row-major.
pub fn pivot_set(w: &Permutation) -> Vec<Box2> {
    rothe_diagram(w)
        .into_iter()
        .filter(|&b| !pivots(w, b).expect("diagram box").is_empty())
        .collect()
}

/// (p, q) with p the largest t having i < t < j and w_i < w_j < w_t, and q
/// the largest j > p with w_j < w_p and some i < p having w_i < w_j.
pub fn max_pivot_box(w: &Permutation) -> Result<(usize, usize)> {
    let n = w.n();
    let has_132_middle = |t: usize| {
        (1..t).any(|i| (t + 1..=n).any(|j| w.at(i) < w.at(j) && w.at(j) < w.at(t)))
    };
    let p = (1..=n)
        .rev()
        .find(|&t| has_132_middle(t))
        .ok_or_else(|| Error::Dominant(w.compact()))?;
    let q = (p + 1..=n)
        .rev()
        .find(|&j| w.at(j) < w.at(p) && (1..p).any(|i| w.at(i) < w.at(j)))
        .ok_or_else(|| Error::Internal(format!("no q for p = {p} in {}", w.compact())))?;
    // q also indexes the largest value after p that is below w_p
    let largest_below = (p + 1..=n)
        .filter(|&j| w.at(j) < w.at(p))
        .max_by_key(|&j| w.at(j))
        .expect("q exists");
    if largest_below != q {
        return Err(Error::Internal(format!(
            "q = {q} is not the position of the largest value after {p} below w_p in {}",
            w.compact()
        )));
    }
    Ok((p, q))
}

/// Every bumpless pipedream of w: the closure of rothe(w) under droops.
pub fn enumerate_all(w: &Permutation) -> Vec<BumplessPipedream> {
    let start = BumplessPipedream::rothe(w);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let empties = cur.empty_boxes();
        for e in cur.se_elbows() {
            for &t in empties.iter().filter(|t| t.0 > e.0 && t.1 > e.1) {
                if let Ok(next) = cur.droop(e, t) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// EG-pipedreams of w with their shapes.
pub fn eg_pipedreams(w: &Permutation) -> Vec<(BumplessPipedream, Partition)> {
    enumerate_all(w)
        .into_iter()
        .filter_map(|p| p.is_eg().map(|shape| (p, shape)))
        .collect()
}

/// Permutation whose Rothe diagram is `empties`, if one exists.
pub fn perm_from_diagram(n: usize, empties: &[Box2]) -> Option<Permutation> {
    let mut code = vec![0; n];
    for &(r, _) in empties {
        code[r - 1] += 1;
    }
    let w = Permutation::from_lehmer_code(&code).ok()?;
    (rothe_diagram(&w) == empties).then_some(w)
}
