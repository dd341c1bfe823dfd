//! Edelman-Greene coefficients c^w_λ, the multiplicity of s_λ in F_w, by
//! four independent methods.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::pipedream::eg_pipedreams;
use crate::symmetric::{schur_expand, stanley_truncated, to_counts};
use crate::tableau::reduced_word_tableaux;
use crate::trees::mls_tree;

pub type Coefficients = BTreeMap<Partition, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Shapes of the reduced word tableaux.
    Tableaux,
    /// Shapes of the EG-pipedreams.
    Pipedreams,
    /// Lehmer codes of the modified LS-tree leaves.
    MlsLeaves,
    /// Schur expansion of F_w in ℓ(w) variables.
    Monomial,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Tableaux,
        Method::Pipedreams,
        Method::MlsLeaves,
        Method::Monomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Tableaux => "tableaux",
            Method::Pipedreams => "pipedreams",
            Method::MlsLeaves => "mls_leaves",
            Method::Monomial => "monomial",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

fn tally(shapes: impl IntoIterator<Item = Partition>) -> Coefficients {
    let mut out = Coefficients::new();
    for s in shapes {
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

pub fn eg_coeffs(w: &Permutation, method: Method) -> Result<Coefficients> {
    match method {
        Method::Tableaux => Ok(tally(reduced_word_tableaux(w).iter().map(|t| t.shape()))),
        Method::Pipedreams => Ok(tally(eg_pipedreams(w).into_iter().map(|(_, s)| s))),
        Method::MlsLeaves => Ok(tally(mls_tree(w)?.leaf_perms().iter().map(|u| u.shape()))),
        Method::Monomial => {
            let m = w.length().max(1);
            to_counts(&schur_expand(&stanley_truncated(w, m), m)?)
        }
    }
}

/// `(4,2): 1` lines, largest shape first.
pub fn format_coefficients(c: &Coefficients) -> String {
    c.iter()
        .rev()
        .map(|(shape, k)| format!("{shape}: {k}"))
        .collect::<Vec<_>>()
        .join("\n")
}
