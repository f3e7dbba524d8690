//! Batch CLI over the hecke-trace library. All output is canonical text;
//! identical argv produces byte-identical output. Exit codes: 0 success,
//! 2 domain/parse errors, 3 unsupported-case errors.

use clap::{Args, Parser, Subcommand};
use std::fs::File;
use std::process::ExitCode;

use hecke_trace::heckeops::{
    chi_truncated_ct, chihat_truncated_ct, constant_term, kottwitz_poly, newton_truncated_ct,
    SlopeVector,
};
use hecke_trace::polyring::LaurentPoly;
use hecke_trace::repmodel::{classify_type, speh_expand, CharSpec, RepDescriptor};
use hecke_trace::spectral::{aggregate_trace, load_spectrum};
use hecke_trace::symcomb::{
    intersection_composition, is_min_rep, min_coset_reps, tableau_from_perm, Composition, Flavor,
    Permutation,
};
use hecke_trace::traceengine::{
    closed_form_trace, truncated_trace, ClosedFormParams, SignConvention,
};
use hecke_trace::verify::{ray_sum_diagnostic, run_suite};
use hecke_trace::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hecke-trace",
    about = "Exact truncated traces of unramified Hecke operators on GL_n(F)",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Satake transform of the Kottwitz function f_{nαs}
    Satake { n: usize, alpha: usize, s: usize },
    /// Constant term f_{nαs}^{(P)} along a standard parabolic
    ConstantTerm {
        n: usize,
        alpha: usize,
        s: usize,
        /// comma-separated blocks of P, e.g. 2,1
        #[arg(long)]
        parabolic: String,
    },
    /// χ- or χ̂-truncated constant terms (Prop 3.2)
    Truncate {
        #[command(subcommand)]
        which: TruncateCmd,
    },
    /// Slope truncation of the constant term (Prop 3.3)
    NewtonCt {
        /// slope vector, e.g. 1/2:2,0:1
        #[arg(long)]
        lambda: String,
        /// comma-separated blocks of P
        #[arg(long)]
        parabolic: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
    },
    /// Minimal double-coset representatives S_λ\S_n/S_ν (Prop 4.3)
    MinReps {
        #[arg(long)]
        shape: String,
        #[arg(long = "type", value_name = "TYPE")]
        typ: String,
    },
    /// The tableau w·T attached to a permutation (Props 4.2–4.4)
    Tableau {
        /// one-line permutation, e.g. 1,3,2
        #[arg(long)]
        perm: String,
        #[arg(long)]
        shape: String,
        #[arg(long = "type", value_name = "TYPE")]
        typ: String,
    },
    /// Tadić expansion of Speh(x,y) in the Zelevinsky ring (Prop 5.2)
    SpehExpand {
        x: usize,
        y: usize,
        /// character, e.g. eps|0
        #[arg(long, default_value = "-|0")]
        char_: String,
    },
    /// Classify a representation per Defs 5.2/5.3
    Classify {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        p1: usize,
        #[arg(long)]
        p2: usize,
    },
    /// Truncated traces Tr(C_λ f_{nαs}, π) (Cor 3.4, Prop 5.3)
    Trace {
        #[command(subcommand)]
        which: TraceCmd,
    },
    /// Theorem 6.1 aggregation over a spectrum file
    Aggregate {
        #[arg(long)]
        spectrum: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Run the acceptance property suites A1–A10
    Verify {
        /// run a single suite, e.g. A7
        #[arg(long)]
        suite: Option<String>,
        /// also print the informational ray-sum diagnostic
        #[arg(long)]
        ray_sum: bool,
    },
}

#[derive(Subcommand)]
enum TruncateCmd {
    /// χ^{M1}_{M2} truncation of f_{nαs}^{(M2)}
    Chi {
        n: usize,
        alpha: usize,
        s: usize,
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
    },
    /// χ̂^{M1}_{M2} truncation of ⊗_i f_{n_i α s_i}
    Chihat {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        /// comma-separated s_i, one per M1 block (zeros allowed)
        #[arg(long)]
        s_vec: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
    },
}

#[derive(Args)]
struct NumericQ {
    /// evaluate q numerically at this value (CLI-only helper; output keeps
    /// X/character factors symbolic)
    #[arg(long)]
    numeric_q: Option<f64>,
}

#[derive(Subcommand)]
enum TraceCmd {
    /// General engine path (Cor 3.4 → geometric lemma → Prop 5.1)
    Engine {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[command(flatten)]
        nq: NumericQ,
    },
    /// One of the six displayed formulas of Prop 5.3
    ClosedForm {
        #[arg(long)]
        case: u8,
        /// ambient n; checked against --lambda when both are given
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        /// statement | proof
        #[arg(long, default_value = "proof")]
        sign: String,
        #[command(flatten)]
        nq: NumericQ,
    },
}

fn comp(s: &str) -> Result<Composition> {
    Composition::parse(s, Flavor::Strict)
}

/// Numeric-q rendering: each canonical term with q^r replaced by q_val^r.
fn numeric_render(p: &LaurentPoly, q: f64) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ctx = p.ctx().clone();
    let mut parts = Vec::new();
    for (e, c) in p.terms() {
        let coeff = c.to_string().parse::<f64>().unwrap_or(f64::NAN)
            * q.powf(*e.q.numer() as f64 / *e.q.denom() as f64);
        let mut factors = vec![format!("{coeff:.6}")];
        for (i, &xi) in e.x.iter().enumerate() {
            if xi != 0 {
                factors.push(format!("X{}^{}", i + 1, xi));
            }
        }
        for (j, &zj) in e.z.iter().enumerate() {
            if zj != 0 {
                factors.push(format!("{}^{}", ctx.symbols[j], zj));
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}

fn poly_out(p: &LaurentPoly, nq: &NumericQ) -> String {
    match nq.numeric_q {
        Some(q) => numeric_render(p, q),
        None => p.canonical_string(),
    }
}

/// Character data for a Prop 5.3 closed form, read off the representation
/// descriptor and aligned with the λ-blocks.
fn closed_form_chars(
    case: u8,
    rep: &RepDescriptor,
    lambda: &SlopeVector,
) -> Result<Vec<CharSpec>> {
    use hecke_trace::repmodel::BlockTag;
    let mismatch = |msg: &str| Error::Domain(format!("Prop 5.3({case}): {msg}"));
    match (case, rep) {
        (1, RepDescriptor::SteinbergTwist(_, c)) | (2, RepDescriptor::TrivialTwist(_, c)) => {
            Ok(vec![c.clone()])
        }
        (3, RepDescriptor::Speh { x: 2, char_, .. }) => Ok(vec![char_.clone()]),
        (4, RepDescriptor::Speh { y: 2, char_, .. }) => Ok(vec![char_.clone()]),
        (5 | 6, RepDescriptor::StandardModule(blocks)) => {
            if blocks.len() != 2 {
                return Err(mismatch("needs a two-block standard module"));
            }
            let want = if case == 5 { BlockTag::St } else { BlockTag::Triv };
            if blocks.iter().any(|b| b.tag != want) {
                return Err(mismatch("block tags do not match the case"));
            }
            let lb = lambda.blocks();
            let (p1, p2) = (lb.parts()[0], lb.parts()[1]);
            if (blocks[0].m, blocks[1].m) == (p1, p2) {
                Ok(vec![blocks[0].char_.clone(), blocks[1].char_.clone()])
            } else if (blocks[0].m, blocks[1].m) == (p2, p1) {
                Ok(vec![blocks[1].char_.clone(), blocks[0].char_.clone()])
            } else {
                Err(mismatch("block sizes do not match the λ-blocks"))
            }
        }
        _ => Err(mismatch("representation does not match the case signature")),
    }
}

fn run() -> Result<String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Satake { n, alpha, s } => Ok(kottwitz_poly(n, alpha, s)?.canonical_string()),
        Command::ConstantTerm {
            n,
            alpha,
            s,
            parabolic,
        } => Ok(constant_term(n, alpha, s, &comp(&parabolic)?)?.render()),
        Command::Truncate { which } => match which {
            TruncateCmd::Chi { n, alpha, s, m1, m2 } => {
                Ok(chi_truncated_ct(&comp(&m1)?, &comp(&m2)?, n, alpha, s)?.render())
            }
            TruncateCmd::Chihat {
                m1,
                m2,
                s_vec,
                alpha,
            } => {
                let s_vec = Composition::parse(&s_vec, Flavor::Extended)?;
                Ok(chihat_truncated_ct(&comp(&m1)?, &comp(&m2)?, &s_vec, alpha)?.render())
            }
        },
        Command::NewtonCt {
            lambda,
            parabolic,
            alpha,
        } => {
            let lambda = SlopeVector::parse(&lambda)?;
            let (n, s) = (lambda.n(), lambda.s());
            Ok(newton_truncated_ct(&lambda, &comp(&parabolic)?, n, alpha, s)?.render())
        }
        Command::MinReps { shape, typ } => {
            let reps = min_coset_reps(&comp(&shape)?, &comp(&typ)?)?;
            Ok(reps
                .iter()
                .map(|w| w.one_line())
                .collect::<Vec<_>>()
                .join("\n"))
        }
        Command::Tableau { perm, shape, typ } => {
            let w = Permutation::parse_one_line(&perm)?;
            let shape = comp(&shape)?;
            let typ = comp(&typ)?;
            let t = tableau_from_perm(&w, &shape, &typ)?;
            let mut out = vec![t.render()];
            out.push(format!("row_semi_standard: {}", t.is_row_semi_standard()));
            if is_min_rep(&w, &shape, &typ)? {
                out.push(format!(
                    "intersection: {}",
                    intersection_composition(&w, &shape, &typ)?.render()
                ));
            } else {
                out.push("minimal: false".to_string());
            }
            Ok(out.join("\n"))
        }
        Command::SpehExpand { x, y, char_ } => {
            Ok(speh_expand(x, y, &CharSpec::parse(&char_)?)?.render())
        }
        Command::Classify { rep, p1, p2 } => {
            let rep = RepDescriptor::parse(&rep)?;
            Ok(classify_type(&rep, p1, p2)?.render().to_string())
        }
        Command::Trace { which } => match which {
            TraceCmd::Engine {
                lambda,
                rep,
                alpha,
                nq,
            } => {
                let lambda = SlopeVector::parse(&lambda)?;
                let rep = RepDescriptor::parse(&rep)?;
                let t = truncated_trace(&lambda, alpha, lambda.s(), &rep)?;
                Ok(format!(
                    "# provenance={} sign={}\n{}",
                    t.provenance.render(),
                    t.sign_convention.render(),
                    poly_out(&t.value, &nq)
                ))
            }
            TraceCmd::ClosedForm {
                case,
                n,
                lambda,
                rep,
                alpha,
                sign,
                nq,
            } => {
                if let Some(n) = n {
                    if (case == 3 || case == 4) && n % 2 != 0 {
                        return Err(Error::Domain(format!(
                            "Prop 5.3({case}) requires n even"
                        )));
                    }
                }
                let lambda = lambda.ok_or_else(|| {
                    Error::Domain("closed-form trace needs --lambda".into())
                })?;
                let lambda = SlopeVector::parse(&lambda)?;
                if let Some(n) = n {
                    if lambda.n() != n {
                        return Err(Error::Domain(format!(
                            "--n {n} does not match λ with total {}",
                            lambda.n()
                        )));
                    }
                }
                let conv = match sign.as_str() {
                    "statement" => SignConvention::Statement,
                    "proof" => SignConvention::Proof,
                    other => {
                        return Err(Error::Domain(format!(
                            "--sign must be statement or proof, got `{other}`"
                        )))
                    }
                };
                let rep = RepDescriptor::parse(&rep)?;
                if rep.ambient_n() != lambda.n() {
                    return Err(Error::Domain(format!(
                        "representation lives on GL_{} but λ has total {}",
                        rep.ambient_n(),
                        lambda.n()
                    )));
                }
                let chars = closed_form_chars(case, &rep, &lambda)?;
                let params = ClosedFormParams {
                    alpha,
                    lambda,
                    chars,
                };
                let t = closed_form_trace(case, &params, conv)?;
                Ok(format!(
                    "# provenance={} sign={}\n{}",
                    t.provenance.render(),
                    t.sign_convention.render(),
                    poly_out(&t.value, &nq)
                ))
            }
        },
        Command::Aggregate {
            spectrum,
            alpha,
            lambda,
        } => {
            let file = File::open(&spectrum)
                .map_err(|e| Error::Parse(format!("cannot open {spectrum}: {e}")))?;
            let spec = load_spectrum(file)?;
            let lambda = SlopeVector::parse(&lambda)?;
            Ok(aggregate_trace(alpha, &lambda, &spec)?.render())
        }
        Command::Verify { suite, ray_sum } => {
            let reports = run_suite(suite.as_deref());
            if reports.is_empty() {
                return Err(Error::Domain(format!(
                    "unknown suite `{}`; expected one of A1..A10",
                    suite.unwrap_or_default()
                )));
            }
            let mut lines: Vec<String> = reports.iter().map(|r| r.line()).collect();
            let passed = reports.iter().filter(|r| r.passed).count();
            lines.push(format!("{passed}/{} suites passed", reports.len()));
            if ray_sum {
                lines.push(ray_sum_diagnostic());
            }
            if passed != reports.len() {
                return Err(Error::Domain(format!(
                    "verification failed:\n{}",
                    lines.join("\n")
                )));
            }
            Ok(lines.join("\n"))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
