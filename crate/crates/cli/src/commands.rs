use std::io::Read;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use bcf_core::arith::{
    parse_rational, pow10_neg, rational_to_string, to_decimal_string, PolySpec, Rational, RealValue,
};
use bcf_core::closedform::{
    allones_poly, allones_root, alpha_cubic, beta_cubic, cubic_hunt, period1_alpha_root,
    period1_beta_root, Approximation, Period1Params,
};
use bcf_core::evaluation::{
    convergent_table_with, reconstruct_with, render_tree, EvaluatorRegistry, TreeRoot,
};
use bcf_core::expansion::{expand, Expansion};
use bcf_core::periodicity::{detect_apparent_period, detect_period, PeriodReport};
use bcf_core::sequences::{kbonacci, ratio_limit};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::args::*;
use crate::digit_file::{notation, parse_notation, DigitFile};
use crate::value_spec::ValueSpec;
use crate::{CliError, CliResult};

/// Repetitions an inexact digit run needs before it is called periodic.
const APPARENT_REPEATS: usize = 3;

pub fn dispatch(cli: Cli, stdin: &mut dyn Read) -> CliResult<String> {
    match cli.command {
        Command::Expand(a) => cmd_expand(a),
        Command::Convergents(a) => cmd_convergents(a, stdin),
        Command::Tree(a) => cmd_tree(a, stdin),
        Command::ClosedForm(a) => cmd_closed_form(a),
        Command::Kbonacci(a) => cmd_kbonacci(a),
        Command::Period(a) => cmd_period(a),
        Command::CubicHunt(a) => cmd_cubic_hunt(a, stdin),
        Command::Reconstruct(a) => cmd_reconstruct(a, stdin),
    }
}

fn parse_values(texts: &[String]) -> CliResult<Vec<ValueSpec>> {
    texts.iter().map(|t| t.parse()).collect()
}

fn parse_tol(text: &str) -> CliResult<Rational> {
    parse_rational(text)
        .filter(|t| t.is_positive())
        .ok_or_else(|| CliError::Parse(format!("invalid tolerance '{text}'")))
}

/// `-` reads standard input, an existing path reads that file, anything
/// else is inline notation.
pub fn load_digits(arg: &str, stdin: &mut dyn Read) -> CliResult<DigitFile> {
    if arg == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        return DigitFile::parse(&text);
    }
    if Path::new(arg).is_file() {
        return DigitFile::parse(&std::fs::read_to_string(arg)?);
    }
    Ok(DigitFile::new(parse_notation(arg)?))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable output");
    out.push('\n');
    out
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

/// Compact scientific rendering with `sig` significant digits.
pub fn sci(x: &Rational, sig: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let x = x.abs();
    let mut exp = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let ten = Rational::from_integer(BigInt::from(10));
    let scale = |e: i64| num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
    loop {
        let lower = if exp >= 0 {
            scale(exp)
        } else {
            scale(exp).recip()
        };
        if x < lower {
            exp -= 1;
        } else if x >= &lower * &ten {
            exp += 1;
        } else {
            break;
        }
    }
    let shift = sig as i64 - 1 - exp;
    let scaled = if shift >= 0 {
        &x * scale(shift)
    } else {
        &x / scale(shift)
    };
    let mut digits = (scaled + Rational::new(1.into(), 2.into()))
        .floor()
        .to_integer();
    if digits.to_string().len() > sig {
        digits /= 10;
        exp += 1;
    }
    let d = digits.to_string();
    let mantissa = if sig > 1 {
        format!("{}.{}", &d[..1], &d[1..])
    } else {
        d
    };
    format!("{sign}{mantissa}e{exp}")
}

#[derive(Serialize)]
struct PeriodJson {
    status: &'static str,
    preperiod: usize,
    period: usize,
    witness: Option<[usize; 2]>,
}

impl From<&PeriodReport> for PeriodJson {
    fn from(r: &PeriodReport) -> Self {
        PeriodJson {
            status: r.status.as_str(),
            preperiod: r.preperiod,
            period: r.period,
            witness: r.witness.map(|(a, b)| [a, b]),
        }
    }
}

fn report_for(exp: &Expansion) -> CliResult<PeriodReport> {
    if exp.states().is_some() {
        Ok(detect_period(exp)?)
    } else {
        Ok(detect_apparent_period(exp, APPARENT_REPEATS))
    }
}

fn expand_specs(specs: &[ValueSpec], depth: usize) -> CliResult<Expansion> {
    let values = specs
        .iter()
        .map(ValueSpec::to_real)
        .collect::<CliResult<Vec<RealValue>>>()?;
    Ok(expand(values, depth)?)
}

#[derive(Serialize)]
struct ExpandJson {
    m: usize,
    source: Vec<String>,
    head: Vec<Vec<String>>,
    cycle: Option<Vec<Vec<String>>>,
    terminated: bool,
    terminated_at: Option<usize>,
    period: Option<PeriodJson>,
    notation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    created_unix: Option<u64>,
}

fn cmd_expand(a: ExpandArgs) -> CliResult<String> {
    let specs = parse_values(&a.values)?;
    let exp = expand_specs(&specs, a.depth)?;
    let report = a.period.then(|| report_for(&exp)).transpose()?;
    let spec = match &report {
        Some(r) => exp.to_periodic_spec(r),
        None => exp.to_digit_spec(),
    };
    let source = specs
        .iter()
        .map(ValueSpec::canonical)
        .collect::<CliResult<Vec<_>>>()?;
    let created = a.verbose.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs())
    });
    let terminated_at = if spec.cycle().is_some() {
        None
    } else {
        exp.terminated_at()
    };

    match a.format {
        Format::Json => Ok(json(&ExpandJson {
            m: spec.order(),
            source,
            head: spec.head().iter().map(|s| strings(s)).collect(),
            cycle: spec.cycle().map(|c| c.iter().map(|s| strings(s)).collect()),
            terminated: terminated_at.is_some(),
            terminated_at,
            period: report.as_ref().map(PeriodJson::from),
            notation: notation(&spec),
            created_unix: created,
        })),
        Format::Text => {
            let mut file = DigitFile::new(spec.clone());
            file.terminated_at = terminated_at;
            file = file
                .with_meta("source", source.join(" "))
                .with_meta("notation", notation(&spec));
            if let Some(r) = &report {
                file = file
                    .with_meta("period.status", r.status.as_str())
                    .with_meta("period.preperiod", r.preperiod.to_string())
                    .with_meta("period.period", r.period.to_string());
                if let Some((i, j)) = r.witness {
                    file = file.with_meta("period.witness", format!("{i} {j}"));
                }
            }
            if let Some(t) = created {
                file = file.with_meta("created_unix", t.to_string());
            }
            Ok(file.to_text())
        }
    }
}

#[derive(Serialize)]
struct ConvergentRow {
    depth: usize,
    values: Vec<String>,
    decimals: Vec<String>,
}

#[derive(Serialize)]
struct ConvergentsJson {
    m: usize,
    evaluator: String,
    precision: usize,
    convergents: Vec<ConvergentRow>,
}

fn decimals(values: &[Rational], precision: usize) -> Vec<String> {
    values
        .iter()
        .map(|v| to_decimal_string(v, precision))
        .collect()
}

fn cmd_convergents(a: ConvergentsArgs, stdin: &mut dyn Read) -> CliResult<String> {
    let file = load_digits(&a.digits.digits, stdin)?;
    let registry = EvaluatorRegistry::default();
    let evaluator = registry.get(&a.evaluator)?;
    let upto = file.spec.max_depth().map_or(a.upto, |d| d.min(a.upto));
    let table = convergent_table_with(evaluator, &file.spec, upto)?;
    let rows: Vec<ConvergentRow> = table
        .rows()
        .iter()
        .enumerate()
        .map(|(depth, row)| ConvergentRow {
            depth,
            values: row.iter().map(rational_to_string).collect(),
            decimals: decimals(row, a.precision),
        })
        .collect();
    Ok(match a.format {
        Format::Json => json(&ConvergentsJson {
            m: file.spec.order(),
            evaluator: evaluator.name().to_string(),
            precision: a.precision,
            convergents: rows,
        }),
        Format::Text => rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .values
                    .iter()
                    .zip(&r.decimals)
                    .map(|(v, d)| format!("{v} ≈ {d}"))
                    .collect();
                format!("{}: {}\n", r.depth, cells.join(" | "))
            })
            .collect(),
    })
}

fn cmd_tree(a: TreeArgs, stdin: &mut dyn Read) -> CliResult<String> {
    let file = load_digits(&a.digits.digits, stdin)?;
    let root = match a.which {
        Which::Alpha => TreeRoot::Alpha,
        Which::Beta => TreeRoot::Beta,
    };
    let mut out = render_tree(&file.spec, a.depth, root)?;
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct RootJson {
    name: &'static str,
    poly: String,
    coeffs: Vec<String>,
    lo: String,
    hi: String,
    decimal: String,
    precision: usize,
}

fn root_json(
    name: &'static str,
    poly: &PolySpec,
    (lo, hi): (Rational, Rational),
    precision: usize,
) -> RootJson {
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    RootJson {
        name,
        poly: poly.to_string(),
        coeffs: strings(poly.coeffs()),
        lo: rational_to_string(&lo),
        hi: rational_to_string(&hi),
        decimal: to_decimal_string(&mid, precision),
        precision,
    }
}

#[derive(Serialize)]
struct ClosedFormJson {
    a: Option<String>,
    b: Option<String>,
    order: Option<usize>,
    roots: Vec<RootJson>,
}

fn cmd_closed_form(a: ClosedFormArgs) -> CliResult<String> {
    let width = pow10_neg(a.precision as u32 + 2);
    let (roots, doc_params) = if a.all_ones {
        let m = a.order.expect("clap requires --order");
        let poly = allones_poly(m)?;
        let root = allones_root(m, &width)?;
        (
            vec![root_json("alpha", &poly, root, a.precision)],
            (None, None, Some(m)),
        )
    } else {
        let p = Period1Params::new(a.a.expect("clap requires --a"), a.b.unwrap_or(0))?;
        let alpha = root_json(
            "alpha",
            &alpha_cubic(p),
            period1_alpha_root(p, &width)?,
            a.precision,
        );
        let beta = root_json(
            "beta",
            &beta_cubic(p),
            period1_beta_root(p, &width)?,
            a.precision,
        );
        (
            vec![alpha, beta],
            (Some(p.a().to_string()), Some(p.b().to_string()), None),
        )
    };
    Ok(match a.format {
        Format::Json => json(&ClosedFormJson {
            a: doc_params.0,
            b: doc_params.1,
            order: doc_params.2,
            roots,
        }),
        Format::Text => {
            let mut out = String::new();
            for r in &roots {
                out.push_str(&format!("{}: {}\n", r.name, r.poly));
            }
            for r in &roots {
                out.push_str(&format!("{} ≈ {}\n", r.name, r.decimal));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct RatioJson {
    value: String,
    decimal: String,
    precision: usize,
    tol: String,
}

#[derive(Serialize)]
struct KbonacciJson {
    k: usize,
    n: usize,
    terms: Vec<String>,
    ratio: Option<RatioJson>,
}

fn cmd_kbonacci(a: KbonacciArgs) -> CliResult<String> {
    let terms = kbonacci(a.k, a.n)?;
    let ratio = a
        .limit
        .as_deref()
        .map(|text| -> CliResult<RatioJson> {
            let tol = parse_tol(text)?;
            let value = ratio_limit(a.k, &tol)?;
            Ok(RatioJson {
                decimal: to_decimal_string(&value, a.precision),
                value: rational_to_string(&value),
                precision: a.precision,
                tol: rational_to_string(&tol),
            })
        })
        .transpose()?;
    Ok(match a.format {
        Format::Json => json(&KbonacciJson {
            k: a.k,
            n: a.n,
            terms: strings(&terms),
            ratio,
        }),
        Format::Text => {
            let mut out = strings(&terms).join(" ");
            out.push('\n');
            if let Some(r) = ratio {
                out.push_str(&format!("ratio ≈ {}\n", r.decimal));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct PeriodCmdJson {
    m: usize,
    steps: usize,
    terminated: bool,
    period: PeriodJson,
    notation: String,
}

fn cmd_period(a: PeriodArgs) -> CliResult<String> {
    let exp = expand_specs(&parse_values(&a.values)?, a.depth)?;
    let report = report_for(&exp)?;
    let spec = exp.to_periodic_spec(&report);
    let out = PeriodCmdJson {
        m: exp.order(),
        steps: exp.len(),
        terminated: exp.is_terminated(),
        period: PeriodJson::from(&report),
        notation: notation(&spec),
    };
    Ok(match a.format {
        Format::Json => json(&out),
        Format::Text => {
            let mut text = format!(
                "status: {}\npreperiod: {}\nperiod: {}\n",
                out.period.status, out.period.preperiod, out.period.period
            );
            if let Some([i, j]) = out.period.witness {
                text.push_str(&format!("witness: {i} {j}\n"));
            }
            if out.terminated {
                text.push_str(&format!("terminated after {} steps\n", out.steps));
            }
            text.push_str(&format!("notation: {}\n", out.notation));
            text
        }
    })
}

#[derive(Serialize)]
struct CandidateJson {
    coeffs: [String; 4],
    poly: String,
    residual: String,
    residual_sci: String,
}

#[derive(Serialize)]
struct CubicHuntJson {
    value: String,
    radius: String,
    height: i64,
    tol: String,
    candidates: Vec<CandidateJson>,
}

/// Width used when approximating an exact algebraic value.
const ALG_WIDTH_DIGITS: u32 = 60;

fn cmd_cubic_hunt(a: CubicHuntArgs, stdin: &mut dyn Read) -> CliResult<String> {
    let tol = parse_tol(&a.tol)?;
    let approx = match (&a.value, &a.digits) {
        (Some(text), _) => match text.parse::<ValueSpec>()? {
            ValueSpec::Rat(r) => Approximation::exact(r),
            ValueSpec::Dec(d) => Approximation {
                value: d.value(),
                radius: d.radius(),
            },
            alg => {
                let width = pow10_neg(ALG_WIDTH_DIGITS);
                Approximation {
                    value: alg.to_real()?.approximate(&width)?,
                    radius: width,
                }
            }
        },
        (None, Some(digits)) => {
            let file = load_digits(digits, stdin)?;
            let rtol = parse_tol(&a.reconstruct_tol)?;
            let rec = reconstruct_with(
                EvaluatorRegistry::default().get("backward")?,
                &file.spec,
                &rtol,
                RECONSTRUCT_LIMIT,
            )?;
            Approximation {
                value: rec.values[0].clone(),
                radius: rec.achieved_bound,
            }
        }
        (None, None) => unreachable!("clap requires --value or --digits"),
    };
    let found = cubic_hunt(&approx, a.height, &tol)?;
    Ok(match a.format {
        Format::Json => json(&CubicHuntJson {
            value: rational_to_string(&approx.value),
            radius: rational_to_string(&approx.radius),
            height: a.height,
            tol: rational_to_string(&tol),
            candidates: found
                .iter()
                .map(|c| CandidateJson {
                    coeffs: c.coeffs.map(|x| x.to_string()),
                    poly: c.poly().to_string(),
                    residual: rational_to_string(&c.residual),
                    residual_sci: sci(&c.residual, 3),
                })
                .collect(),
        }),
        Format::Text if found.is_empty() => format!("no cubic within height {}\n", a.height),
        Format::Text => found
            .iter()
            .map(|c| {
                let [c3, c2, c1, c0] = c.coeffs;
                format!(
                    "{c3},{c2},{c1},{c0}  {}  residual {}\n",
                    c.poly(),
                    sci(&c.residual, 3)
                )
            })
            .collect(),
    })
}

/// Depth cap for reconstructions feeding the cubic search.
const RECONSTRUCT_LIMIT: usize = 2000;

#[derive(Serialize)]
struct ReconstructJson {
    m: usize,
    evaluator: String,
    depth: usize,
    tol: String,
    achieved_bound: String,
    values: Vec<String>,
    decimals: Vec<String>,
    precision: usize,
}

fn cmd_reconstruct(a: ReconstructArgs, stdin: &mut dyn Read) -> CliResult<String> {
    let file = load_digits(&a.digits.digits, stdin)?;
    let tol = parse_tol(&a.tol)?;
    let registry = EvaluatorRegistry::default();
    let evaluator = registry.get(&a.evaluator)?;
    let rec = reconstruct_with(evaluator, &file.spec, &tol, a.max_depth)?;
    let out = ReconstructJson {
        m: file.spec.order(),
        evaluator: evaluator.name().to_string(),
        depth: rec.depth,
        tol: rational_to_string(&tol),
        achieved_bound: rational_to_string(&rec.achieved_bound),
        values: rec.values.iter().map(rational_to_string).collect(),
        decimals: decimals(&rec.values, a.precision),
        precision: a.precision,
    };
    Ok(match a.format {
        Format::Json => json(&out),
        Format::Text => {
            let mut text = format!(
                "depth: {}\nbound: {}\n",
                rec.depth,
                sci(&rec.achieved_bound, 3)
            );
            for (k, d) in out.decimals.iter().enumerate() {
                text.push_str(&format!("x{} ≈ {d}\n", k + 1));
            }
            text
        }
    })
}
