use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tzstream::continual::mechanism_run;
use tzstream::hankel::{detect_degree, space_lower_bound, HankelView};
use tzstream::rat::{fmt_rat, int, parse_rat, Rat};
use tzstream::ratgf::{agreement, pade, RationalGF};
use tzstream::series::{catalog, parse, CatalogEntry, Series};
use tzstream::streamkit::{dense_streamer, rational_streamer, run};
use tzstream::verify::{
    check_comp_relation, verify_catalan_dets, verify_corank, verify_junod, verify_sqrt_dets,
    CompRelation, Report,
};
use tzstream::Poly;

use crate::args::{
    Command, ContinualCommand, Generator, GfArgs, HankelArgs, HankelCommand, InputArgs,
    StreamCommand, StreamRunArgs, VerifyCommand,
};
use crate::CliError;

/// What a command produced, in both renderings.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn strs(values: &[Rat]) -> Vec<String> {
    values.iter().map(fmt_rat).collect()
}

fn lines(values: &[Rat]) -> String {
    values.iter().map(|v| fmt_rat(v) + "\n").collect()
}

fn series_of(gf: &GfArgs, order: usize) -> Result<Series, CliError> {
    series_from(gf.gf.as_deref(), gf.expr.as_deref(), order)
}

fn series_from(gf: Option<&str>, expr: Option<&str>, order: usize) -> Result<Series, CliError> {
    match (gf, expr) {
        (Some(name), _) => {
            let entry: CatalogEntry = name.parse()?;
            Ok(catalog(&entry, order)?)
        }
        (None, Some(text)) => Ok(parse(text, order)?),
        (None, None) => Err(CliError::Usage("one of --gf or --expr is required".into())),
    }
}

pub fn execute(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Coeffs { gf, order } => coeffs(&gf, order),
        Command::Stream(StreamCommand::Run(args)) => stream_run(&args),
        Command::Hankel(HankelCommand::Det(args)) => hankel_det(&args),
        Command::Hankel(HankelCommand::Rank(args)) => hankel_rank(&args),
        Command::Hankel(HankelCommand::Degree { gf, order }) => hankel_degree(&gf, order),
        Command::Lowerbound { gf, t, horizon } => lowerbound(&gf, t, horizon),
        Command::Pade { gf, degree, order } => pade_cmd(&gf, degree, order),
        Command::Verify(v) => verify(v),
        Command::Continual(ContinualCommand::Demo {
            length,
            approx_degree,
            seed,
            input,
        }) => continual_demo(length, approx_degree, seed, input.as_deref()),
    }
}

fn coeffs(gf: &GfArgs, order: usize) -> Result<Output, CliError> {
    let a = series_of(gf, order)?;
    Ok(Output::ok(
        format!("{a}\n"),
        json!({ "order": order, "coeffs": strs(a.coeffs()) }),
    ))
}

fn read_stream(path: &Path) -> Result<Vec<Rat>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v = parse_rat(body)
            .map_err(|e| CliError::Usage(format!("{}:{}: {e}", path.display(), n + 1)))?;
        values.push(v);
    }
    Ok(values)
}

fn stream_inputs(args: &InputArgs) -> Result<Vec<Rat>, CliError> {
    if let Some(path) = &args.input {
        let values = read_stream(path)?;
        return match args.length {
            Some(n) if n != values.len() => Err(CliError::Domain(format!(
                "--length {n} but {} values in {}",
                values.len(),
                path.display()
            ))),
            _ => Ok(values),
        };
    }
    let generator = args
        .generator
        .ok_or_else(|| CliError::Usage("one of --input or --generator is required".into()))?;
    let n = args
        .length
        .ok_or_else(|| CliError::Usage("--generator needs --length".into()))?;
    Ok(match generator {
        Generator::Impulse => (0..n).map(|t| int(i64::from(t == 0))).collect(),
        Generator::Ones => vec![int(1); n],
        Generator::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..n).map(|_| int(rng.random_range(-10..=10))).collect()
        }
    })
}

fn stream_run(args: &StreamRunArgs) -> Result<Output, CliError> {
    let z = stream_inputs(&args.input)?;
    let (result, mode) = match (&args.num, &args.den) {
        (Some(num), Some(den)) => {
            let g = RationalGF::from_fraction(Poly::new(num.0.clone()), Poly::new(den.0.clone()))?;
            (run(&mut rational_streamer(&g), &z)?, "rational")
        }
        _ => {
            let order = z.len().saturating_sub(1);
            let a =
                series_from(args.gf.as_deref(), args.expr.as_deref(), order).map_err(
                    |e| match e {
                        CliError::Usage(_) => {
                            CliError::Usage("one of --gf, --expr or --num/--den is required".into())
                        }
                        other => other,
                    },
                )?;
            (run(&mut dense_streamer(&a), &z)?, "dense")
        }
    };
    let text = format!(
        "{}max_buffer={}\n",
        lines(&result.outputs),
        result.max_buffer
    );
    let json = json!({
        "streamer": mode,
        "inputs": strs(&result.inputs),
        "outputs": strs(&result.outputs),
        "buffer_profile": result.buffer_profile,
        "max_buffer": result.max_buffer,
    });
    Ok(Output::ok(text, json))
}

fn hankel_det(args: &HankelArgs) -> Result<Output, CliError> {
    let a = series_of(&args.gf, args.rows + args.cols)?;
    let det = HankelView::new(&a, args.rows, args.cols)?.det()?;
    Ok(Output::ok(
        format!("det={}\n", fmt_rat(&det)),
        json!({ "rows": args.rows, "cols": args.cols, "det": fmt_rat(&det) }),
    ))
}

fn hankel_rank(args: &HankelArgs) -> Result<Output, CliError> {
    let a = series_of(&args.gf, args.rows + args.cols)?;
    let (rank, witness) = HankelView::new(&a, args.rows, args.cols)?.rank_with_witness();
    let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
    Ok(Output::ok(
        format!("rank={rank} witness=[{}]\n", w.join(",")),
        json!({ "rows": args.rows, "cols": args.cols, "rank": rank, "witness": witness }),
    ))
}

fn hankel_degree(gf: &GfArgs, order: usize) -> Result<Output, CliError> {
    let report = detect_degree(&series_of(gf, order)?)?;
    Ok(Output::ok(
        format!("{report}\n"),
        json!({
            "truncation": report.truncation,
            "ranks": report.ranks,
            "consistent_degree": report.consistent_degree,
        }),
    ))
}

fn lowerbound(gf: &GfArgs, t: usize, horizon: usize) -> Result<Output, CliError> {
    let a = series_of(gf, t + horizon)?;
    let cert = space_lower_bound(&a, t, horizon)?;
    Ok(Output::ok(
        format!("{cert}\n"),
        json!({ "t": cert.t, "I": cert.horizon, "rank": cert.rank, "witness": cert.witness }),
    ))
}

fn pade_cmd(gf: &GfArgs, degree: usize, order: Option<usize>) -> Result<Output, CliError> {
    let order = order.unwrap_or(2 * degree + 8);
    let f = series_of(gf, order)?;
    let fit = pade(&f, degree)?;
    let g = &fit.approximant;
    let agree = agreement(&f, g);
    let mut text = format!("{g}\ndegree={}\nagreement={agree}\n", fit.achieved_degree);
    if fit.achieved_degree < fit.requested_degree {
        text.push_str(&format!(
            "# singular system: stepped down from degree {}\n",
            fit.requested_degree
        ));
    }
    let json = json!({
        "P": strs(g.numerator().coeffs()),
        "Q": strs(g.denominator().coeffs()),
        "requested_degree": fit.requested_degree,
        "degree": fit.achieved_degree,
        "agreement": agree,
        "order": order,
    });
    Ok(Output::ok(text, json))
}

fn report_output(report: Report) -> Output {
    let json = json!({
        "check": report.check,
        "passed": report.passed(),
        "lines": report.lines.iter().map(|l| json!({
            "d": l.d, "expected": l.expected, "got": l.got, "ok": l.ok,
        })).collect::<Vec<_>>(),
        "notes": report.notes,
    });
    let mut text = report.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Output {
        text,
        json,
        ok: report.passed(),
    }
}

fn verify(command: VerifyCommand) -> Result<Output, CliError> {
    let report = match command {
        VerifyCommand::Catalan { dmax } => verify_catalan_dets(dmax)?,
        VerifyCommand::Sqrtdet { dmax } => verify_sqrt_dets(dmax)?,
        VerifyCommand::Junod { b, c, dmax } => verify_junod(&b, &c, dmax)?,
        VerifyCommand::Corank { lm, dmax } => verify_corank(&lm.lambda, &lm.mu, dmax)?,
        VerifyCommand::Comp { lm, dmax } => {
            let rel = CompRelation::harder_sqrt(&lm.lambda, &lm.mu, 2 * dmax)?;
            check_comp_relation(&rel, dmax)?
        }
    };
    Ok(report_output(report))
}

fn continual_demo(
    length: usize,
    approx_degree: usize,
    seed: u64,
    input: Option<&Path>,
) -> Result<Output, CliError> {
    let z = match input {
        Some(path) => read_stream(path)?,
        None => vec![int(1); length],
    };
    let r = mechanism_run(length, approx_degree, seed, &z)?;
    let text = format!(
        "{}max_buffer={}\ncoeff_error={}\n",
        lines(&r.outputs),
        r.max_buffer,
        fmt_rat(&r.coeff_error)
    );
    let json = json!({
        "inputs": strs(&z),
        "noise": strs(&r.noise),
        "outputs": strs(&r.outputs),
        "max_buffer": r.max_buffer,
        "approximant": {
            "P": strs(r.approximant.numerator().coeffs()),
            "Q": strs(r.approximant.denominator().coeffs()),
        },
        "degree": r.achieved_degree,
        "coeff_error": fmt_rat(&r.coeff_error),
    });
    Ok(Output::ok(text, json))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_file_format() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z.txt");
        fs::write(&path, "# counts\n1\n\n-1/2  # half\n 3 \n").unwrap();
        assert_eq!(
            read_stream(&path).unwrap(),
            vec![int(1), tzstream::rat::frac(-1, 2), int(3)]
        );
        fs::write(&path, "1\nfoo\n").unwrap();
        let err = read_stream(&path).unwrap_err();
        assert!(matches!(err, CliError::Usage(m) if m.contains("z.txt:2:")));
    }
}
