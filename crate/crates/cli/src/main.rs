//! `excursion-lab`: exact enumeration of weighted lattice excursions.
//!
//! Exit codes: 0 on success, 1 when a verification check ran and failed,
//! 2 on input errors. All diagnostics go to stderr; results go to stdout.

mod output;
mod verify;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use excursion_core::bounded::{check_recurrence_with_annihilator, numerator_with_annihilator};
use excursion_core::oracle::{count_bounded, count_excursions};
use excursion_core::platypus::{annihilator, plethysm_elementary};
use excursion_core::ring::poly::poly_exact_div;
use excursion_core::ring::text::parse_bivariate;
use excursion_core::schur::{rect_schur_gf, NumericAlphabet};
use excursion_core::stepset::{normalize_steps, parse_stepset, render_stepset};
use excursion_core::{Error, Rational, Result, StepSet};

#[derive(Parser)]
#[command(
    name = "excursion-lab",
    version,
    about = "Exact generating-function toolkit for weighted lattice excursions"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Rescale step sets whose values share a common factor > 1
    #[arg(long, global = true)]
    normalize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The annihilating polynomial D(t,z) of the excursion series
    Annihilator {
        /// Step set, e.g. "1:1,-1:1" or "2:t,1:1,-1:1,-2:t"
        #[arg(long)]
        steps: String,
    },
    /// The excursion series E(t), counted by brute-force enumeration
    Series {
        #[arg(long)]
        steps: String,
        /// Expansion order in t
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Restrict to excursions of height at most this bound
        #[arg(long)]
        bounded: Option<usize>,
    },
    /// The bounded-height series E^(k) = F_k/F_(k+1), transfer-matrix route
    Bounded {
        #[arg(long)]
        steps: String,
        #[arg(long)]
        height: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// N(t,z), D(t,z), delta, and the linear recurrence for the F_k
    Recurrence {
        #[arg(long)]
        steps: String,
        /// Check the recurrence for delta < k <= kmax (default d + a + b)
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Elementary-basis plethysm expansion of e_k applied to e_a, on n letters
    Plethysm {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        n: u32,
        /// Comma-separated indices i: keep e_i, zero the others
        #[arg(long)]
        restrict: Option<String>,
    },
    /// Rational generating function of rectangular Schur functions
    SchurGf {
        /// Comma-separated alphabet, e.g. "1,2,3,5"
        #[arg(long)]
        vars: String,
        #[arg(long)]
        a: u32,
    },
    /// Run the full verification battery for a step set
    Verify {
        #[arg(long)]
        steps: String,
        #[arg(long, default_value_t = 15)]
        order: usize,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Exact divisibility of D(t,z) by candidate factors
    Divides {
        #[arg(long)]
        steps: String,
        /// Candidate factor in t and z, e.g. "1+t^2*z" (repeatable)
        #[arg(long, required = true)]
        factor: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load_steps(text: &str, normalize: bool) -> Result<StepSet> {
    let s = parse_stepset(text)?;
    let g = s.step_gcd();
    if g > 1 {
        if normalize {
            return Ok(normalize_steps(&s));
        }
        return Err(Error::InvalidArgument(format!(
            "step values share the common factor {g}; pass --normalize to rescale them"
        )));
    }
    Ok(s)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Annihilator { steps } => {
            let s = load_steps(steps, cli.normalize)?;
            let d = annihilator(&s)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "steps": render_stepset(&s),
                        "degree": s.d(),
                        "annihilator": output::bivariate_json(&d),
                    })
                );
            } else {
                println!("{}", output::bivariate_text(&d));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            steps,
            order,
            bounded,
        } => {
            let s = load_steps(steps, cli.normalize)?;
            let counts = match bounded {
                Some(k) => count_bounded(&s, *k, *order),
                None => count_excursions(&s, *order),
            };
            if cli.json {
                let mut doc = json!({
                    "steps": render_stepset(&s),
                    "series": output::t_series_json(counts.coefficients()),
                });
                if let Some(k) = bounded {
                    doc["bounded"] = json!(k);
                }
                println!("{doc}");
            } else {
                println!("{}", output::t_series_text(counts.coefficients()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounded {
            steps,
            height,
            order,
        } => {
            let s = load_steps(steps, cli.normalize)?;
            let series = excursion_core::bounded::bounded_series(&s, *height, *order);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "steps": render_stepset(&s),
                        "height": height,
                        "series": output::t_series_json(series.coeffs()),
                    })
                );
            } else {
                println!("{}", output::t_series_text(series.coeffs()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Recurrence { steps, kmax } => {
            let s = load_steps(steps, cli.normalize)?;
            let d_poly = annihilator(&s)?;
            let n_poly = numerator_with_annihilator(&s, &d_poly)?;
            let kmax = kmax.unwrap_or(s.d() as usize + (s.a() + s.b()) as usize);
            let holds = check_recurrence_with_annihilator(&s, &d_poly, kmax)?;
            if cli.json {
                let coeffs: Vec<serde_json::Value> = (0..=s.d() as usize)
                    .map(|i| {
                        json!({
                            "i": i,
                            "a_i": d_poly
                                .coeff(i)
                                .iter()
                                .map(|(e, q)| json!([e, q.to_string()]))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "steps": render_stepset(&s),
                        "numerator": output::bivariate_json(&n_poly),
                        "annihilator": output::bivariate_json(&d_poly),
                        "delta": s.delta(),
                        "order": s.d(),
                        "coefficients": coeffs,
                        "kmax": kmax,
                        "holds": holds,
                    })
                );
            } else {
                println!("N(t,z) = {}", output::bivariate_text(&n_poly));
                println!("D(t,z) = {}", output::bivariate_text(&d_poly));
                println!("delta = {}", s.delta());
                println!(
                    "recurrence sum_i a_i F_(k-i) = 0 of order {} for k > {}:",
                    s.d(),
                    s.delta()
                );
                for i in 0..=s.d() as usize {
                    println!("  a_{i} = {}", output::laurent_text(&d_poly.coeff(i)));
                }
                println!(
                    "checked with determinant-computed F_k up to k = {kmax}: {}",
                    if holds { "holds" } else { "FAILS" }
                );
            }
            Ok(if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Plethysm { a, n, restrict } => {
            let restrict_set = restrict.as_deref().map(parse_index_list).transpose()?;
            let expansion = plethysm_elementary(*a, *n, restrict_set.as_ref())?;
            if cli.json {
                let entries: Vec<serde_json::Value> = expansion
                    .coefficients()
                    .iter()
                    .enumerate()
                    .map(|(k, poly)| {
                        let terms: Vec<serde_json::Value> = poly
                            .iter_padded()
                            .map(|(exps, c)| json!({ "coeff": c.to_string(), "exponents": exps }))
                            .collect();
                        json!({ "k": k, "terms": terms })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "a": a,
                        "n": n,
                        "restrict": restrict_set.map(|r| r.into_iter().collect::<Vec<_>>()),
                        "entries": entries,
                    })
                );
            } else {
                println!("{}", expansion.render_q());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SchurGf { vars, a } => {
            let values = vars
                .split(',')
                .map(|v| Rational::parse(v.trim()))
                .collect::<Result<Vec<_>>>()?;
            let alphabet = NumericAlphabet::new(values)?;
            let (p, q) = rect_schur_gf(&alphabet, *a)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "vars": alphabet.values().iter().map(Rational::to_string).collect::<Vec<_>>(),
                        "a": a,
                        "p": output::rational_poly_json(&p),
                        "q": output::rational_poly_json(&q),
                    })
                );
            } else {
                println!("P(z) = {}", output::rational_poly_text(&p, "z"));
                println!("Q(z) = {}", output::rational_poly_text(&q, "z"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { steps, order, kmax } => {
            let s = load_steps(steps, cli.normalize)?;
            let reports = verify::run_battery(&s, *order, *kmax)?;
            let all_pass = reports.iter().all(|r| r.pass);
            if cli.json {
                let checks: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "pass": r.pass,
                            "detail": r.detail,
                            "ms": r.millis,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "steps": render_stepset(&s),
                        "order": order,
                        "checks": checks,
                        "pass": all_pass,
                    })
                );
            } else {
                for r in &reports {
                    println!(
                        "{} {:<18} {} ({} ms)",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.name,
                        r.detail,
                        r.millis
                    );
                }
                println!(
                    "verify: {}",
                    if all_pass {
                        "all checks passed"
                    } else {
                        "FAILED"
                    }
                );
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Divides { steps, factor } => {
            let s = load_steps(steps, cli.normalize)?;
            let d_poly = annihilator(&s)?;
            let mut quotient = d_poly.clone();
            let mut verdicts = Vec::new();
            let mut all_divide = true;
            for text in factor {
                let f = parse_bivariate(text)?;
                if f.is_zero() {
                    return Err(Error::InvalidArgument("zero factor".into()));
                }
                match poly_exact_div(&quotient, &f) {
                    Some(q) => {
                        verdicts.push((text.clone(), true));
                        quotient = q;
                    }
                    None => {
                        verdicts.push((text.clone(), false));
                        all_divide = false;
                        break;
                    }
                }
            }
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "steps": render_stepset(&s),
                        "annihilator": output::bivariate_json(&d_poly),
                        "factors": verdicts
                            .iter()
                            .map(|(f, ok)| json!({ "factor": f, "divides": ok }))
                            .collect::<Vec<_>>(),
                        "divisible": all_divide,
                        "quotient": all_divide.then(|| output::bivariate_json(&quotient)),
                    })
                );
            } else {
                println!("D(t,z) = {}", output::bivariate_text(&d_poly));
                for (f, ok) in &verdicts {
                    println!("divides {f}: {}", if *ok { "yes" } else { "no" });
                }
                if all_divide {
                    println!("quotient = {}", output::bivariate_text(&quotient));
                }
            }
            Ok(if all_divide {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_index_list(text: &str) -> Result<BTreeSet<u32>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid index {part:?} in restrict list")))
        })
        .collect()
}
