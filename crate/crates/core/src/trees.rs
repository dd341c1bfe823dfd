//! Transitions and the three transition trees: the classical LS-tree with
//! Grassmannian leaves, the modified LS-tree with dominant leaves, and the
//! EG-tree carrying a bumpless pipedream at every node.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Side};
use crate::pipedream::{max_pivot_box, rothe_diagram, BumplessPipedream};

/// The maximal transition of w, possibly after padding on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalTransition {
    /// 1^e × w, the permutation actually split.
    pub base: Permutation,
    pub embeds: usize,
    /// Last descent of `base`.
    pub r: usize,
    /// Largest s > r with base_s < base_r.
    pub s: usize,
    pub indices: Vec<usize>,
    /// base t_{r,s} t_{i,r} for each i in `indices`, ascending.
    pub children: Vec<Permutation>,
}

/// I(u, k): positions i < k with u_i < u_k and no value strictly between
/// them at positions strictly between them.
pub fn lower_set(u: &Permutation, k: usize) -> Vec<usize> {
    let uk = u.at(k);
    (1..k)
        .filter(|&i| {
            let ui = u.at(i);
            ui < uk && (i + 1..k).all(|j| !(ui < u.at(j) && u.at(j) < uk))
        })
        .collect()
}

/// S(u, k): positions j > k with u_j > u_k and no value strictly between
/// them at positions strictly between them.
pub fn upper_set(u: &Permutation, k: usize) -> Vec<usize> {
    let uk = u.at(k);
    (k + 1..=u.n())
        .filter(|&j| {
            let uj = u.at(j);
            uj > uk && (k + 1..j).all(|m| !(uk < u.at(m) && u.at(m) < uj))
        })
        .collect()
}

pub fn maximal_transition(w: &Permutation) -> Result<MaximalTransition> {
    if w.is_identity() {
        return Err(Error::Identity);
    }
    let guard = 2 * w.n();
    let mut base = w.clone();
    for embeds in 0..=guard {
        let r = *base.descents().last().expect("non-identity has a descent");
        let s = (r + 1..=base.n())
            .rev()
            .find(|&i| base.at(i) < base.at(r))
            .expect("descent at r");
        let v = base.swapped(r, s);
        let indices = lower_set(&v, r);
        if !indices.is_empty() {
            let children = indices.iter().map(|&i| v.swapped(i, r)).collect();
            return Ok(MaximalTransition {
                base,
                embeds,
                r,
                s,
                indices,
                children,
            });
        }
        base = base.embed(Side::Left);
    }
    Err(Error::Internal(format!(
        "maximal transition of {} needed more than {guard} embeddings",
        w.compact()
    )))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionSets {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    /// Φ(u, k), falling back to Φ(1×u, k+1) when I(u, k) is empty.
    pub phi: Vec<Permutation>,
    /// Ψ(u, k), falling back to Ψ(u×1, k) when S(u, k) is empty.
    pub psi: Vec<Permutation>,
}

pub fn general_transition_sets(u: &Permutation, k: usize) -> Result<TransitionSets> {
    if k == 0 || k > u.n() {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: u.n(),
        });
    }
    let lower = lower_set(u, k);
    let upper = upper_set(u, k);
    let phi = if lower.is_empty() {
        let padded = u.embed(Side::Left);
        lower_set(&padded, k + 1)
            .into_iter()
            .map(|i| padded.swapped(i, k + 1))
            .collect()
    } else {
        lower.iter().map(|&i| u.swapped(i, k)).collect()
    };
    let psi = if upper.is_empty() {
        let padded = u.embed(Side::Right);
        upper_set(&padded, k)
            .into_iter()
            .map(|j| padded.swapped(k, j))
            .collect()
    } else {
        upper.iter().map(|&j| u.swapped(k, j)).collect()
    };
    Ok(TransitionSets {
        lower,
        upper,
        phi,
        psi,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeKind {
    Ls,
    Mls,
    Eg,
}

/// The transition producing a node. For the LS-tree `p` and `q` are the
/// r and s of the maximal transition and `embed` counts 1× paddings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub p: usize,
    pub q: usize,
    pub i: usize,
    pub embed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub id: usize,
    pub perm: Permutation,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub mv: Option<Move>,
    pub pipedream: Option<BumplessPipedream>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Nodes are numbered in depth-first preorder; the root is node 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTree {
    kind: TreeKind,
    nodes: Vec<TreeNode>,
}

type Expand<'a> = &'a dyn Fn(&Permutation) -> Result<Vec<(Permutation, Move)>>;

impl TransitionTree {
    fn build(
        kind: TreeKind,
        root: Permutation,
        expand: Expand<'_>,
    ) -> Result<Self> {
        let mut tree = TransitionTree {
            kind,
            nodes: Vec::new(),
        };
        tree.grow(root, None, None, expand)?;
        Ok(tree)
    }

    fn grow(
        &mut self,
        perm: Permutation,
        parent: Option<usize>,
        mv: Option<Move>,
        expand: Expand<'_>,
    ) -> Result<usize> {
        let id = self.nodes.len();
        if id > 100_000 {
            return Err(Error::Internal("transition tree exceeded 100000 nodes".into()));
        }
        let kids = expand(&perm)?;
        self.nodes.push(TreeNode {
            id,
            perm,
            parent,
            children: Vec::new(),
            mv,
            pipedream: None,
        });
        for (child, m) in kids {
            let cid = self.grow(child, Some(id), Some(m), expand)?;
            self.nodes[id].children.push(cid);
        }
        Ok(id)
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> Option<&TreeNode> {
        self.nodes.get(id)
    }

    /// Leaf ids in preorder.
    pub fn leaves(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.is_leaf())
            .map(|n| n.id)
            .collect()
    }

    pub fn leaf_perms(&self) -> Vec<Permutation> {
        self.leaves()
            .into_iter()
            .map(|id| self.nodes[id].perm.clone())
            .collect()
    }

    /// Root-first path to a leaf.
    pub fn leaf_path(&self, leaf: usize) -> Result<Vec<&TreeNode>> {
        let node = self.nodes.get(leaf).ok_or(Error::IndexOutOfRange {
            index: leaf,
            bound: self.nodes.len().saturating_sub(1),
        })?;
        if !node.is_leaf() {
            return Err(Error::NotLeaf(leaf));
        }
        let mut path = vec![node];
        while let Some(p) = path.last().expect("nonempty").parent {
            path.push(&self.nodes[p]);
        }
        path.reverse();
        Ok(path)
    }

    /// Nested bracket form, e.g. `21[12]`, for structural comparison.
    pub fn bracket(&self) -> String {
        fn rec(t: &TransitionTree, id: usize, out: &mut String) {
            let node = &t.nodes[id];
            out.push_str(&node.perm.compact());
            if !node.children.is_empty() {
                out.push('[');
                for (k, &c) in node.children.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    rec(t, c, out);
                }
                out.push(']');
            }
        }
        let mut out = String::new();
        rec(self, 0, &mut out);
        out
    }

    /// Same shape, permutations and moves; pipedreams ignored.
    pub fn same_structure(&self, other: &TransitionTree) -> bool {
        self.nodes.len() == other.nodes.len()
            && self.nodes.iter().zip(&other.nodes).all(|(a, b)| {
                a.perm == b.perm && a.parent == b.parent && a.children == b.children && a.mv == b.mv
            })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|node| {
                let mut v = json!({
                    "id": node.id,
                    "parent": node.parent,
                    "perm": node.perm.window(),
                    "n": node.perm.n(),
                    "move": node.mv,
                    "leaf": node.is_leaf(),
                    "children": node.children,
                });
                if let Some(pd) = &node.pipedream {
                    v["pipedream"] = json!(pd.render_line());
                }
                v
            })
            .collect();
        json!({
            "schema": 1,
            "kind": self.kind,
            "indexing": "1-based",
            "nodes": nodes,
        })
    }

    pub fn render_ascii(&self) -> String {
        self.render_text(false)
    }

    /// Indented outline, one node per line; leaves are starred.
    pub fn render_text(&self, unicode: bool) -> String {
        let glyphs: [&str; 4] = if unicode {
            ["├── ", "└── ", "│   ", "    "]
        } else {
            ["|-- ", "`-- ", "|   ", "    "]
        };
        fn label(t: &TransitionTree, node: &TreeNode) -> String {
            let mut s = node.perm.compact();
            if let Some(m) = node.mv {
                let (a, b) = if t.kind == TreeKind::Ls { ("r", "s") } else { ("p", "q") };
                s.push_str(&format!("  {a}={} {b}={} i={}", m.p, m.q, m.i));
                if m.embed > 0 {
                    s.push_str(&format!(" embed={}", m.embed));
                }
            }
            if let Some(pd) = &node.pipedream {
                s.push_str(&format!("  {}", pd.render_line()));
            }
            if node.is_leaf() {
                s.push_str("  *");
            }
            s
        }
        fn rec(t: &TransitionTree, id: usize, prefix: &str, g: &[&str; 4], out: &mut Vec<String>) {
            let kids = &t.nodes[id].children;
            for (k, &c) in kids.iter().enumerate() {
                let last = k + 1 == kids.len();
                let (branch, pad) = if last { (g[1], g[3]) } else { (g[0], g[2]) };
                out.push(format!("{prefix}{branch}{}", label(t, &t.nodes[c])));
                rec(t, c, &format!("{prefix}{pad}"), g, out);
            }
        }
        let mut out = vec![label(self, self.root())];
        rec(self, 0, "", &glyphs, &mut out);
        out.join("\n")
    }
}

/// Expansion step of the modified LS-tree: the children of a non-dominant u
/// are Φ(u t_{p,q}, p), in ascending pivot row.
pub fn mls_children(u: &Permutation) -> Result<Vec<(Permutation, Move)>> {
    if u.is_dominant() {
        return Ok(Vec::new());
    }
    let (p, q) = max_pivot_box(u)?;
    let v = u.swapped(p, q);
    let rows = lower_set(&v, p);
    if rows.is_empty() {
        return Err(Error::Internal(format!(
            "I(u t_(p,q), p) is empty for u = {}",
            u.compact()
        )));
    }
    Ok(rows
        .into_iter()
        .map(|i| (v.swapped(i, p), Move { p, q, i, embed: 0 }))
        .collect())
}

pub fn mls_tree(w: &Permutation) -> Result<TransitionTree> {
    let n = w.n();
    TransitionTree::build(TreeKind::Mls, w.clone(), &|u| {
        let kids = mls_children(u)?;
        if kids.iter().any(|(c, _)| c.n() != n) {
            return Err(Error::Internal("ambient size changed".into()));
        }
        Ok(kids)
    })
}

pub fn ls_tree(w: &Permutation) -> Result<TransitionTree> {
    TransitionTree::build(TreeKind::Ls, w.clone(), &|u| {
        if u.is_grassmannian() {
            return Ok(Vec::new());
        }
        let t = maximal_transition(u)?;
        Ok(t.children
            .iter()
            .zip(&t.indices)
            .map(|(c, &i)| {
                let mv = Move {
                    p: t.r,
                    q: t.s,
                    i,
                    embed: t.embeds,
                };
                (c.clone(), mv)
            })
            .collect())
    })
}

/// The modified LS-tree with pipedreams attached: the root carries rothe(w)
/// and each child is a droop of its parent's pipedream, moving the SE elbow
/// (i, u_i) to the box (p, u_q).
pub fn eg_tree(w: &Permutation) -> Result<TransitionTree> {
    let mut tree = mls_tree(w)?;
    tree.kind = TreeKind::Eg;
    tree.nodes[0].pipedream = Some(BumplessPipedream::rothe(w));
    for id in 1..tree.nodes.len() {
        let node = &tree.nodes[id];
        let parent = &tree.nodes[node.parent.expect("non-root")];
        let mv = node.mv.expect("non-root");
        let u = &parent.perm;
        let pd = parent
            .pipedream
            .as_ref()
            .expect("preorder visits parents first")
            .droop((mv.i, u.at(mv.i)), (mv.p, u.at(mv.q)))?;
        if pd.empty_boxes() != rothe_diagram(&node.perm) {
            return Err(Error::Internal(format!(
                "droop for {} does not leave its Rothe diagram empty",
                node.perm.compact()
            )));
        }
        if node.is_leaf() && pd.is_eg().is_none() {
            return Err(Error::Internal(format!(
                "leaf {} does not carry an EG-pipedream",
                node.perm.compact()
            )));
        }
        tree.nodes[id].pipedream = Some(pd);
    }
    Ok(tree)
}
