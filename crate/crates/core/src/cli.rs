//! Command-line front end. `run` is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::rho_cyclic;
use crate::classify::classify;
use crate::group::{BuildOptions, Group, GroupRecipe, DEFAULT_ORDER_CAP};
use crate::invariants::invariants_direct;
use crate::verify::{
    check_abelian_distinguish, parse_corpus, parse_recipe, remark_p_rows, remark_qp_rows,
    run_corpus, RunOptions, TheoremTag, VerificationReport, DEFAULT_CORPUS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rho-bounds",
    version,
    about = "Products of element orders of finite groups"
)]
struct Cli {
    /// Largest group order that may be built
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: u64,
    /// Worker threads for corpus runs
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, product, sum and set of element orders
    Compute {
        recipe: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Structural flags and decompositions
    Classify {
        recipe: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every bound on a corpus (`default` selects the bundled one)
    Verify {
        #[arg(long)]
        corpus: String,
        /// Comma-separated tags, or `all`
        #[arg(long, default_value = "all")]
        tags: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report pairs of groups with equal order and equal product
        #[arg(long)]
        collisions: bool,
    },
    /// Prime-power and p >= q remark sweeps
    Remarks {
        #[arg(long, default_value_t = 97)]
        p_max: u64,
        #[arg(long, default_value_t = 8)]
        alpha_max: u64,
        /// Range for the p >= q sweep (defaults to p-max)
        #[arg(long)]
        qp_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distinguishability of abelian groups of each order up to n-max
    Abelian {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed form against enumeration for cyclic groups
    Table {
        #[arg(long)]
        n_max: u64,
    },
}

struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

/// Runs the program on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn build(recipe: &str, opts: &BuildOptions) -> Result<(GroupRecipe, Group), Failure> {
    let recipe = parse_recipe(recipe).map_err(usage)?;
    let g = Group::build_with(&recipe, opts).map_err(usage)?;
    Ok((recipe, g))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(EXIT_USAGE, e.to_string()))
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = BuildOptions { order_cap: cli.cap };
    match cli.command {
        Command::Compute { recipe, format } => {
            let (recipe, g) = build(&recipe, &opts)?;
            let rec = invariants_direct(&g);
            let text = match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&rec).expect("record serialises");
                    v["recipe"] = json!(recipe.to_string());
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
                }
                Format::Csv => format!(
                    "recipe,n,q_min,rho,psi,omega\n\"{recipe}\",{},{},{},{},\"{}\"\n",
                    rec.n,
                    rec.q_min.map_or(String::new(), |q| q.to_string()),
                    rec.rho,
                    rec.psi,
                    join(&rec.omega)
                ),
                Format::Text => format!(
                    "recipe: {recipe}\norder: {}\nrho: {}\npsi: {}\nomega: {{{}}}\n",
                    rec.n,
                    rec.rho,
                    rec.psi,
                    join(&rec.omega)
                ),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Classify { recipe, format } => {
            let (recipe, g) = build(&recipe, &opts)?;
            let c = classify(&g).map_err(|e| Failure(EXIT_VIOLATION, e.to_string()))?;
            let text = if format == Format::Text {
                classification_text(&recipe, &c)
            } else {
                let mut v = serde_json::to_value(&c).expect("classification serialises");
                v["recipe"] = json!(recipe.to_string());
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            corpus,
            tags,
            format,
            out: path,
            collisions,
        } => {
            let source = if corpus == "default" {
                DEFAULT_CORPUS.to_string()
            } else {
                std::fs::read_to_string(&corpus).map_err(|e| usage(format!("{corpus}: {e}")))?
            };
            let entries = parse_corpus(&source).map_err(|e| usage(format!("{corpus}:{e}")))?;
            let tags = TheoremTag::parse_list(&tags).map_err(usage)?;
            let run = RunOptions {
                tags,
                build: opts,
                jobs: cli.jobs,
                collision_scan: collisions,
                ..RunOptions::default()
            };
            let report = run_corpus(&entries, &run);
            let text = render(&report, format);
            match path {
                Some(p) => {
                    std::fs::write(&p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?
                }
                None => emit(out, &text)?,
            }
            Ok(report.exit_code())
        }
        Command::Remarks {
            p_max,
            alpha_max,
            qp_max,
            format,
        } => {
            let mut rows = remark_p_rows(p_max, alpha_max);
            rows.extend(remark_qp_rows(qp_max.unwrap_or(p_max)));
            let report = VerificationReport::from_rows(
                rows,
                &[TheoremTag::RemarkP, TheoremTag::RemarkQp],
                String::new(),
            );
            emit(out, &render(&report, format))?;
            Ok(report.exit_code())
        }
        Command::Abelian { n_max, format } => {
            let rows = check_abelian_distinguish(n_max, &opts).map_err(usage)?;
            let report = VerificationReport::from_rows(
                rows,
                &[TheoremTag::AbelianDistinguish],
                String::new(),
            );
            emit(out, &render(&report, format))?;
            Ok(report.exit_code())
        }
        Command::Table { n_max } => {
            if n_max > opts.order_cap {
                return Err(usage(format!(
                    "n-max {n_max} exceeds the order cap {}",
                    opts.order_cap
                )));
            }
            let mut text = String::from("n\tclosed_form\tenumerated\tmatch\n");
            let mut mismatches = 0;
            for n in 1..=n_max {
                let closed = rho_cyclic(n);
                let g = Group::build_with(&GroupRecipe::Cyclic(n), &opts).map_err(usage)?;
                let enumerated = invariants_direct(&g).rho;
                let ok = closed == enumerated;
                mismatches += usize::from(!ok);
                text.push_str(&format!("{n}\t{closed}\t{enumerated}\t{ok}\n"));
            }
            emit(out, &text)?;
            Ok(if mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn classification_text(recipe: &GroupRecipe, c: &crate::classify::Classification) -> String {
    let mut s = format!("recipe: {recipe}\norder: {}\n", c.order);
    for (name, flag) in [
        ("cyclic", c.cyclic),
        ("abelian", c.abelian),
        ("nilpotent", c.nilpotent),
        ("supersoluble", c.supersoluble),
        ("sylow_tower", c.sylow_tower),
        ("metacyclic_paper", c.metacyclic_paper),
    ] {
        s.push_str(&format!("{name}={flag}\n"));
    }
    for (p, flag) in &c.p_nilpotent {
        s.push_str(&format!("{p}-nilpotent={flag}\n"));
    }
    if let Some(inv) = &c.abelian_invariants {
        s.push_str(&format!("abelian_invariants=[{}]\n", join(inv)));
    }
    match &c.frobenius {
        Some(f) => s.push_str(&format!(
            "frobenius: kernel order {} ({}), complement order {} ({})\n",
            f.kernel_order,
            if f.kernel_cyclic {
                "cyclic"
            } else {
                "non-cyclic"
            },
            f.complement_order,
            if f.complement_cyclic {
                "cyclic"
            } else {
                "non-cyclic"
            },
        )),
        None => s.push_str("frobenius: none\n"),
    }
    for sp in &c.sylow_splits {
        s.push_str(&format!(
            "sylow split p={}: |P|={} ({}), |F|={}, |C_F(P)|={}\n",
            sp.p,
            sp.sylow_order,
            if sp.sylow_cyclic {
                "cyclic"
            } else {
                "non-cyclic"
            },
            sp.complement_order,
            sp.centralizer_order
        ));
    }
    s
}
