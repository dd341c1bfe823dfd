use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use schubert_core::bijection::{gamma_inverse_traced, Bijection};
use schubert_core::coeffs::format_coefficients;
use schubert_core::pipedream::enumerate_all;
use schubert_core::schubert::{double_schubert, schubert_bjs};
use schubert_core::{
    eg_coeffs, eg_insert, eg_tree, ls_tree, mls_tree, BumplessPipedream, IncreasingTableau,
    Method, Permutation, SparsePoly, TransitionTree, Word,
};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Reduced words, bumpless pipedreams and Edelman-Greene coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of the Stanley symmetric function F_w
    Expand {
        perm: String,
        #[arg(long, default_value = "monomial")]
        method: String,
    },
    /// Schubert polynomial of w
    Schubert {
        perm: String,
        /// Double Schubert polynomial in x and y
        #[arg(long)]
        double: bool,
    },
    /// Edelman-Greene insertion of a reduced word
    EgInsert {
        word: String,
        /// Ambient size; defaults to one more than the largest letter
        #[arg(long)]
        n: Option<usize>,
    },
    /// Little map θ_{k,v} or its inverse
    Little {
        word: String,
        #[arg(long)]
        k: usize,
        /// Inferred when omitted (forward direction only)
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Bumpless pipedreams of w
    Pipedreams {
        perm: String,
        #[arg(long)]
        eg_only: bool,
        /// Print full grids instead of one line each
        #[arg(long)]
        render: bool,
        #[arg(long)]
        unicode: bool,
    },
    /// Transition trees
    Tree {
        perm: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long)]
        unicode: bool,
    },
    /// Reduced word tableaux and EG-pipedreams
    Bijection {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Cross-check the four coefficient methods and the pipedream weights
    Verify { perm: String },
}

#[derive(Subcommand)]
enum Direction {
    Forward {
        #[arg(long)]
        perm: String,
        /// Rows separated by '/', entries by ','
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        trace: bool,
    },
    Backward {
        /// Rows separated by '/' or newlines
        #[arg(long)]
        pipedream: String,
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ls,
    Mls,
    Eg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

fn perm(s: &str) -> Result<Permutation> {
    s.parse().with_context(|| format!("bad permutation {s:?}"))
}

fn word(s: &str, n: Option<usize>) -> Result<Word> {
    Word::parse(s, n).with_context(|| format!("bad word {s:?}"))
}

fn expand(w: &str, method: &str) -> Result<String> {
    let method: Method = method.parse()?;
    Ok(format_coefficients(&eg_coeffs(&perm(w)?, method)?))
}

fn eg_insert_cmd(a: &str, n: Option<usize>) -> Result<String> {
    let a = word(a, n)?;
    if !a.is_reduced() {
        bail!("{a} is not a reduced word");
    }
    let (p, q) = eg_insert(&a)?;
    Ok(format!("P: {p}\nQ: {q}"))
}

fn little(a: &str, k: usize, v: Option<usize>, inverse: bool, n: Option<usize>) -> Result<String> {
    let a = word(a, n)?;
    let out = match (inverse, v) {
        (false, Some(v)) => a.little_map(k, v)?,
        (false, None) => a.little_map_inferred(k)?,
        (true, Some(v)) => a.little_map_inverse(k, v)?,
        (true, None) => bail!("--inverse needs --v"),
    };
    Ok(out.to_string())
}

fn pipedreams(w: &str, eg_only: bool, full: bool, unicode: bool) -> Result<String> {
    let w = perm(w)?;
    let mut blocks = Vec::new();
    for p in enumerate_all(&w) {
        let shape = p.is_eg();
        if eg_only && shape.is_none() {
            continue;
        }
        let tag = shape.map(|s| format!("  EG {s}")).unwrap_or_default();
        blocks.push(if full {
            format!("{}{tag}\n{}", p.render_line(), p.render(unicode))
        } else {
            format!("{}{tag}", p.render_line())
        });
    }
    let sep = if full { "\n\n" } else { "\n" };
    Ok(format!("{}\ntotal: {}", blocks.join(sep), blocks.len()))
}

fn tree(w: &str, kind: Kind, format: Format, unicode: bool) -> Result<String> {
    let w = perm(w)?;
    let t: TransitionTree = match kind {
        Kind::Ls => ls_tree(&w)?,
        Kind::Mls => mls_tree(&w)?,
        Kind::Eg => eg_tree(&w)?,
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&t.to_json())?,
        Format::Ascii => t.render_text(unicode),
    })
}

fn forward(w: &str, t: &str, trace: bool) -> Result<String> {
    let w = perm(w)?;
    let t: IncreasingTableau = t.parse().with_context(|| format!("bad tableau {t:?}"))?;
    let tr = Bijection::new(&w)?.forward_traced(&t)?;
    let mut out = Vec::new();
    if trace {
        for s in &tr.steps {
            out.push(format!("{}  {}  {}", s.perm.compact(), s.word, s.pipedream.render_line()));
        }
    }
    out.push(tr.result.render(false));
    Ok(out.join("\n"))
}

fn backward(p: &str, trace: bool) -> Result<String> {
    let p: BumplessPipedream = p.parse().with_context(|| "bad pipedream".to_string())?;
    let tr = gamma_inverse_traced(&p)?;
    let mut out = Vec::new();
    if trace {
        for s in &tr.steps {
            let undone = s.undone.map(|(i, j)| format!("  undo ({i},{j})")).unwrap_or_default();
            out.push(format!("{}  {}{undone}", s.perm.compact(), s.word));
        }
        out.push(format!("w(P) = {}", tr.root_word));
    }
    out.push(tr.result.to_string());
    Ok(out.join("\n"))
}

/// Returns the report and whether every check agreed.
fn verify(w: &str) -> Result<(String, bool)> {
    let w = perm(w)?;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for m in Method::ALL {
        let c = eg_coeffs(&w, m)?;
        let listed: Vec<String> = c.iter().rev().map(|(s, k)| format!("{s}:{k}")).collect();
        lines.push(format!("{:<11} {{{}}}", format!("{m}:"), listed.join(", ")));
        results.push(c);
    }
    let coeffs_ok = results.windows(2).all(|p| p[0] == p[1]);
    let weights = enumerate_all(&w)
        .iter()
        .fold(SparsePoly::zero(), |acc, p| &acc + &p.weight());
    let double_ok = weights == double_schubert(&w)?;
    let single_ok = weights.drop_y() == schubert_bjs(&w);
    let mark = |b: bool| if b { "OK" } else { "MISMATCH" };
    lines.push(format!("{:<11} {}", "double:", mark(double_ok)));
    lines.push(format!("{:<11} {}", "single:", mark(single_ok)));
    let all = coeffs_ok && double_ok && single_ok;
    lines.push(format!("status: {}", mark(all)));
    Ok((lines.join("\n"), all))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let out = match cli.command {
        Command::Expand { perm, method } => expand(&perm, &method)?,
        Command::Schubert { perm: w, double } => {
            let w = perm(&w)?;
            if double {
                double_schubert(&w)?.to_string()
            } else {
                schubert_bjs(&w).to_string()
            }
        }
        Command::EgInsert { word, n } => eg_insert_cmd(&word, n)?,
        Command::Little { word, k, v, inverse, n } => little(&word, k, v, inverse, n)?,
        Command::Pipedreams { perm, eg_only, render, unicode } => {
            pipedreams(&perm, eg_only, render, unicode)?
        }
        Command::Tree { perm, kind, format, unicode } => tree(&perm, kind, format, unicode)?,
        Command::Bijection { direction } => match direction {
            Direction::Forward { perm, tableau, trace } => forward(&perm, &tableau, trace)?,
            Direction::Backward { pipedream, trace } => backward(&pipedream, trace)?,
        },
        Command::Verify { perm } => return verify(&perm),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
