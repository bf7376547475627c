use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use anyhow::{Context, Result};
use fibideal::kr::{cn_poly, lambda_divisor, lambda_eval, lambda_product, run_verification, LambdaMethod, VerificationReport};
use fibideal::series::{kr_lhs_series, lambda_product_series};
use fibideal::{BigInt, Exec, GaussInt, LaurentPoly, QuadInt};
use log::{error, info};
use serde::Serialize;

use crate::args::{CnArgs, EvalPoint, Format, LambdaArgs, Method, QValue, SeriesArgs, SeriesKind, VerifyArgs};
use crate::output::{open_sink, write_csv, write_json_lines, OutputRow};

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Failure,
}

fn exec_for(jobs: Option<u64>) -> Exec {
    Exec::from_jobs(jobs.map(|j| j as usize))
}

fn decimal(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `λ_1..λ_max` for one method. `eval` failures surface as `None`.
fn lambda_column(method: LambdaMethod, max_n: u64, exec: Exec) -> Vec<Option<BigInt>> {
    match method {
        LambdaMethod::Product => lambda_product(max_n).into_iter().map(|r| Some(r.value)).collect(),
        LambdaMethod::Divisor => exec.map_range(1..=max_n, |n| Some(lambda_divisor(n).value)),
        LambdaMethod::Eval => exec.map_range(1..=max_n, |n| match lambda_eval(n) {
            Ok(r) => Some(r.value),
            Err(e) => {
                error!("{e}");
                None
            }
        }),
    }
}

fn show(v: &Option<BigInt>) -> String {
    v.as_ref().map_or_else(|| "error".to_string(), ToString::to_string)
}

pub fn lambda(args: &LambdaArgs) -> Result<Status> {
    let exec = exec_for(args.output.jobs);
    let start = Instant::now();
    let methods: Vec<LambdaMethod> = match args.method {
        Method::Product => vec![LambdaMethod::Product],
        Method::Divisor => vec![LambdaMethod::Divisor],
        Method::Eval => vec![LambdaMethod::Eval],
        Method::All => LambdaMethod::ALL.to_vec(),
    };
    let columns: Vec<Vec<Option<BigInt>>> = methods.iter().map(|&m| lambda_column(m, args.max_n, exec)).collect();

    let mut status = Status::Success;
    for i in 0..args.max_n as usize {
        let first = &columns[0][i];
        if first.is_none() || columns.iter().any(|c| c[i] != *first) {
            let values: Vec<String> = columns.iter().map(|c| show(&c[i])).collect();
            error!("methods disagree at n = {}: {}", i + 1, values.join(" vs "));
            status = Status::Failure;
        }
    }

    let mut sink = open_sink(args.output.out.as_deref())?;
    match args.output.format {
        Format::Csv => {
            let mut header = vec!["n"];
            if methods.len() == 1 {
                header.push("lambda");
            } else {
                header.extend(methods.iter().map(|m| m.name()));
            }
            let rows: Vec<Vec<String>> = (0..args.max_n as usize)
                .map(|i| {
                    let mut row = vec![(i + 1).to_string()];
                    row.extend(columns.iter().map(|c| show(&c[i])));
                    row
                })
                .collect();
            write_csv(&mut sink, &header, &rows)?;
        }
        Format::Json => {
            let coeffs = exec.map_range(1..=args.max_n, |n| decimal(&cn_poly(n).coeffs()));
            let rows: Vec<OutputRow> = coeffs
                .into_iter()
                .enumerate()
                .map(|(i, cn_coeffs)| OutputRow {
                    n: i as u64 + 1,
                    lambda: show(&columns[0][i]),
                    cn_coeffs,
                    lambda_by_method: (methods.len() > 1).then(|| {
                        methods
                            .iter()
                            .zip(&columns)
                            .map(|(m, c)| (m.name().to_string(), show(&c[i])))
                            .collect::<BTreeMap<_, _>>()
                    }),
                    eval_minus_one: None,
                    eval_i: None,
                    eval_alpha: None,
                })
                .collect();
            write_json_lines(&mut sink, &rows)?;
        }
    }
    info!("lambda: {} values in {:.2?}", args.max_n, start.elapsed());
    Ok(status)
}

pub fn cn(args: &CnArgs) -> Result<Status> {
    let cn = cn_poly(args.n);
    let lambda = lambda_divisor(args.n).value;
    let mut row = OutputRow {
        n: args.n,
        lambda: lambda.to_string(),
        cn_coeffs: decimal(&cn.coeffs()),
        lambda_by_method: None,
        eval_minus_one: None,
        eval_i: None,
        eval_alpha: None,
    };
    for point in &args.eval_points {
        match point {
            EvalPoint::MinusOne => row.eval_minus_one = Some(cn.eval(&BigInt::from(-1))?.to_string()),
            EvalPoint::I => row.eval_i = Some(cn.eval(&GaussInt::i())?),
            EvalPoint::Alpha => row.eval_alpha = Some(cn.eval(&QuadInt::alpha())?),
        }
    }

    let mut sink = open_sink(args.output.out.as_deref())?;
    match args.output.format {
        Format::Json => write_json_lines(&mut sink, &[row])?,
        Format::Csv => {
            let mut header = vec!["n", "lambda", "cn_coeffs"];
            let mut record = vec![row.n.to_string(), row.lambda.clone(), row.cn_coeffs.join(";")];
            if let Some(v) = &row.eval_minus_one {
                header.push("eval_minus_one");
                record.push(v.clone());
            }
            if let Some(v) = &row.eval_i {
                header.extend(["eval_i_re", "eval_i_im"]);
                record.extend([v.re.to_string(), v.im.to_string()]);
            }
            if let Some(v) = &row.eval_alpha {
                header.extend(["eval_alpha_a", "eval_alpha_b"]);
                record.extend([v.a.to_string(), v.b.to_string()]);
            }
            write_csv(&mut sink, &header, &[record])?;
        }
    }
    Ok(Status::Success)
}

/// Summary lines followed, on failure, by one JSON witness per line.
pub fn render_report(report: &VerificationReport, sink: &mut dyn Write) -> Result<Status> {
    for suite in &report.suites {
        writeln!(sink, "{suite}")?;
    }
    for w in report.failures() {
        serde_json::to_writer(&mut *sink, w)?;
        writeln!(sink)?;
    }
    sink.flush()?;
    Ok(if report.all_passed() {
        Status::Success
    } else {
        Status::Failure
    })
}

pub fn verify(args: &VerifyArgs) -> Result<Status> {
    let mut suites = args.suites.clone();
    let mut seen = Vec::new();
    suites.retain(|s| {
        let fresh = !seen.contains(s);
        seen.push(*s);
        fresh
    });
    let start = Instant::now();
    let report = run_verification(args.max_n, &suites, args.gf_max, exec_for(args.jobs));
    info!("verify: max {} in {:.2?}", args.max_n, start.elapsed());
    if let Some(path) = &args.out {
        let mut file = open_sink(Some(path))?;
        serde_json::to_writer_pretty(&mut file, &report)?;
        writeln!(file)?;
        file.flush().with_context(|| format!("cannot write {}", path.display()))?;
    }
    let mut stdout = open_sink(None)?;
    render_report(&report, &mut stdout)
}

#[derive(Serialize)]
struct SeriesRow<T: Serialize> {
    n: usize,
    coeff: T,
}

/// Laurent polynomial as `{min_exp, coeffs}` with ascending decimal coefficients.
#[derive(Serialize)]
struct LaurentJson {
    min_exp: i64,
    coeffs: Vec<String>,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(p: &LaurentPoly) -> Self {
        let (lo, hi) = (p.min_exp().unwrap_or(0), p.max_exp().unwrap_or(0));
        LaurentJson {
            min_exp: lo,
            coeffs: decimal(&p.to_dense(lo, hi)),
        }
    }
}

fn emit_series<T, J: Serialize>(
    coeffs: &[T],
    format: Format,
    sink: &mut dyn Write,
    json: impl Fn(&T) -> J,
    text: impl Fn(&T) -> String,
) -> Result<()> {
    match format {
        Format::Json => {
            let rows: Vec<SeriesRow<J>> = coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| SeriesRow { n, coeff: json(c) })
                .collect();
            write_json_lines(sink, &rows)
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = coeffs.iter().enumerate().map(|(n, c)| vec![n.to_string(), text(c)]).collect();
            write_csv(sink, &["n", "coeff"], &rows)
        }
    }
}

pub fn series(args: &SeriesArgs) -> Result<Status> {
    let order = args.max_n as usize;
    let mut sink = open_sink(args.output.out.as_deref())?;
    let format = args.output.format;
    match (args.kind, args.at) {
        (SeriesKind::Lambda, _) => {
            let s = lambda_product_series(order);
            emit_series(s.coeffs(), format, &mut sink, ToString::to_string, ToString::to_string)?;
        }
        (SeriesKind::Kr, QValue::Symbolic) => {
            let s = kr_lhs_series(order, &LaurentPoly::q())?;
            emit_series(s.coeffs(), format, &mut sink, |c| LaurentJson::from(c), ToString::to_string)?;
        }
        (SeriesKind::Kr, QValue::Alpha) => {
            let s = kr_lhs_series(order, &QuadInt::alpha())?;
            emit_series(s.coeffs(), format, &mut sink, Clone::clone, |c| format!("{}+{}φ", c.a, c.b))?;
        }
        (SeriesKind::Kr, QValue::One) => {
            let s = kr_lhs_series(order, &BigInt::from(1))?;
            emit_series(s.coeffs(), format, &mut sink, ToString::to_string, ToString::to_string)?;
        }
    }
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fibideal::kr::{Suite, SuiteResult, Witness};

    #[test]
    fn failing_report_renders_witnesses_and_fails() {
        let witness = Witness {
            n: 3,
            identity: "C_n(α) = λ_n(f_2n α − f_2n-2)".into(),
            left: "10 + 20φ".into(),
            right: "11 + 22φ".into(),
        };
        let report = VerificationReport {
            max_n: 3,
            suites: vec![SuiteResult {
                suite: Suite::Theorem,
                max_n: 3,
                checked: 3,
                passed: 2,
                failures: vec![witness.clone()],
            }],
        };
        let mut buf = Vec::new();
        assert_eq!(render_report(&report, &mut buf).unwrap(), Status::Failure);
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("theorem: 2/3 FAIL"));
        let parsed: Witness = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(parsed, witness);
    }

    #[test]
    fn passing_report() {
        let report = run_verification(5, &[Suite::Theorem, Suite::Sigma], 60, Exec::Sequential);
        let mut buf = Vec::new();
        assert_eq!(render_report(&report, &mut buf).unwrap(), Status::Success);
        assert_eq!(String::from_utf8(buf).unwrap(), "theorem: 5/5 PASS\nsigma: 5/5 PASS\n");
    }
}
