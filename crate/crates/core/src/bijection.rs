//! Shape-preserving bijection between reduced word tableaux and
//! EG-pipedreams of a permutation.
//!
//! Forward: walk the modified LS-tree from the root, moving the column word
//! of the tableau along with Little maps; the leaf reached selects an
//! EG-pipedream. Backward: undo droops to recover the tree path, then undo
//! the Little maps starting from the frozen tableau of the leaf.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::{max_pivot_box, perm_from_diagram, Box2, BumplessPipedream};
use crate::tableau::{eg_insert, frozen_tableau, IncreasingTableau, StandardTableau};
use crate::trees::{eg_tree, TransitionTree};
use crate::words::Word;

/// One stop on the forward walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardStep {
    pub node: usize,
    pub perm: Permutation,
    pub word: Word,
    pub pipedream: BumplessPipedream,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardTrace {
    pub steps: Vec<ForwardStep>,
    /// Q(τ^rev), the same at every step.
    pub recording: StandardTableau,
    pub result: BumplessPipedream,
}

/// One stop on the backward walk, leaf first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardStep {
    pub perm: Permutation,
    pub word: Word,
    pub pipedream: BumplessPipedream,
    /// NW elbow removed to reach the next step.
    pub undone: Option<Box2>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardTrace {
    pub steps: Vec<BackwardStep>,
    pub recording: StandardTableau,
    /// The reduced word of w produced at the root.
    pub root_word: Word,
    pub result: IncreasingTableau,
}

/// Checks that τ is the column word of P(τ^rev) and returns Q(τ^rev).
fn insertion_invariants(tau: &Word) -> Result<StandardTableau> {
    let (p, q) = eg_insert(&tau.reverse())?;
    if p.column_reading_word(tau.n())? != *tau {
        return Err(Error::Internal(format!(
            "{tau} is not the column word of the insertion tableau of its reverse"
        )));
    }
    Ok(q)
}

fn same_recording(expected: &StandardTableau, tau: &Word) -> Result<()> {
    if insertion_invariants(tau)? != *expected {
        return Err(Error::Internal(format!(
            "recording tableau changed at {tau}"
        )));
    }
    Ok(())
}

/// Γ and its inverse for a fixed permutation, sharing one EG-tree.
#[derive(Debug, Clone)]
pub struct Bijection {
    w: Permutation,
    tree: TransitionTree,
}

impl Bijection {
    pub fn new(w: &Permutation) -> Result<Self> {
        Ok(Bijection {
            w: w.clone(),
            tree: eg_tree(w)?,
        })
    }

    pub fn tree(&self) -> &TransitionTree {
        &self.tree
    }

    pub fn forward(&self, t: &IncreasingTableau) -> Result<BumplessPipedream> {
        self.forward_traced(t).map(|tr| tr.result)
    }

    pub fn forward_traced(&self, t: &IncreasingTableau) -> Result<ForwardTrace> {
        if !t.is_reduced_word_tableau(&self.w) {
            return Err(Error::NotReducedWordTableau(self.w.compact()));
        }
        let n = self.w.n();
        let mut tau = t.column_reading_word(n)?;
        let recording = insertion_invariants(&tau)?;
        let mut node = self.tree.root();
        let mut steps = Vec::new();
        loop {
            steps.push(ForwardStep {
                node: node.id,
                perm: node.perm.clone(),
                word: tau.clone(),
                pipedream: node.pipedream.clone().expect("EG-tree nodes carry pipedreams"),
            });
            if node.is_leaf() {
                break;
            }
            let first = self.tree.node(node.children[0]).expect("child");
            let mv = first.mv.expect("non-root");
            tau = tau.little_map(mv.p, node.perm.at(mv.q))?;
            same_recording(&recording, &tau)?;
            let reached = tau.evaluate();
            node = node
                .children
                .iter()
                .map(|&c| self.tree.node(c).expect("child"))
                .find(|c| c.perm == reached)
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "{tau} evaluates to {}, which is not a child of {}",
                        reached.compact(),
                        node.perm.compact()
                    ))
                })?;
        }
        let frozen = frozen_tableau(&node.perm)?.column_reading_word(n)?;
        if tau != frozen {
            return Err(Error::Internal(format!(
                "walk ended at {tau}, not the frozen column word {frozen}"
            )));
        }
        let result = node.pipedream.clone().expect("EG-tree nodes carry pipedreams");
        if result.is_eg() != Some(t.shape()) {
            return Err(Error::Internal("forward map changed the shape".into()));
        }
        Ok(ForwardTrace {
            steps,
            recording,
            result,
        })
    }

    pub fn backward(&self, p: &BumplessPipedream) -> Result<IncreasingTableau> {
        if *p.permutation() != self.w {
            return Err(Error::InvalidPipedream(format!(
                "pipedream realizes {}, expected {}",
                p.permutation().compact(),
                self.w.compact()
            )));
        }
        gamma_inverse_traced(p).map(|tr| tr.result)
    }
}

/// Γ(T) for T a reduced word tableau of w.
pub fn gamma(t: &IncreasingTableau, w: &Permutation) -> Result<BumplessPipedream> {
    Bijection::new(w)?.forward(t)
}

/// Γ̃(P) for P an EG-pipedream.
pub fn gamma_inverse(p: &BumplessPipedream) -> Result<IncreasingTableau> {
    gamma_inverse_traced(p).map(|tr| tr.result)
}

pub fn gamma_inverse_traced(p: &BumplessPipedream) -> Result<BackwardTrace> {
    let shape = p.is_eg().ok_or(Error::NotEgPipedream)?;
    let n = p.n();
    let (boxes, chain) = p.reverse_droop_chain()?;
    let perms = chain
        .iter()
        .map(|pd| {
            perm_from_diagram(n, &pd.empty_boxes()).ok_or_else(|| {
                Error::Internal("empty boxes do not form a Rothe diagram".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    // the droop into step k happened at the maximal pivot box of step k+1
    for (k, &b) in boxes.iter().enumerate() {
        let parent = &perms[k + 1];
        let (pp, q) = max_pivot_box(parent)?;
        if (pp, parent.at(q)) != b {
            return Err(Error::Internal(format!(
                "NW elbow {b:?} is not the maximal pivot box of {}",
                parent.compact()
            )));
        }
    }
    let leaf = &perms[0];
    let mut tau = frozen_tableau(leaf)?.column_reading_word(n)?;
    let recording = insertion_invariants(&tau)?;
    let mut steps = Vec::new();
    for k in 0..chain.len() {
        steps.push(BackwardStep {
            perm: perms[k].clone(),
            word: tau.clone(),
            pipedream: chain[k].clone(),
            undone: boxes.get(k).copied(),
        });
        let Some(&(i, j)) = boxes.get(k) else { break };
        tau = tau.little_map_inverse(i, j)?;
        same_recording(&recording, &tau)?;
        if tau.evaluate() != perms[k + 1] {
            return Err(Error::Internal(format!(
                "inverse Little map gave {}, expected {}",
                tau.evaluate().compact(),
                perms[k + 1].compact()
            )));
        }
    }
    let (result, _) = eg_insert(&tau.reverse())?;
    if result.shape() != shape {
        return Err(Error::Internal("backward map changed the shape".into()));
    }
    Ok(BackwardTrace {
        steps,
        recording,
        root_word: tau,
        result,
    })
}
