use std::fs;
use std::io::Read;

use prefmap::io::{self, DecodeError, Document, Kind, ParseError};
use prefmap::{
    check_bijection, check_bijection_unbounded, cs_to_pm, cs_to_ranking, enumerate_weak_orders,
    enumerate_weak_orders_unbounded, pm_to_cs, pm_to_ranking, ranking_to_cs, ranking_to_pm,
    BijectionReport, CookSeifordVector, OracleError, ParsePositionError, Position, PreferenceMap,
    Ranking, Roster, ValidationReport, Violation, ViolationCode,
};

use crate::cli::{
    CheckArgs, Cli, Command, ConvertArgs, EnumerateArgs, Format, InputArgs, OutputArgs, ReprKind,
    ValidateArgs,
};

/// A terminal failure: exit code plus an already-rendered message for
/// stderr (possibly empty when the report went to stdout).
pub struct Failure {
    pub code: u8,
    pub message: String,
}

const INVALID: u8 = 1;
const USAGE: u8 = 2;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: INVALID,
        message: message.into(),
    }
}

pub fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Convert(args) => cmd_convert(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Check(args) => cmd_check(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

// ---------------------------------------------------------------- input --

fn read_input(args: &InputArgs) -> Result<String, Failure> {
    if let Some(text) = &args.input {
        return Ok(text.clone());
    }
    if let Some(path) = &args.file {
        return fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())));
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
    Ok(text)
}

/// JSON documents are objects whose first member is a string key; raw
/// preference-map text also starts with `{` but never with `{"`.
fn looks_like_json(text: &str) -> bool {
    let trimmed = text.trim_start();
    match trimmed.strip_prefix('{') {
        Some(rest) => rest.trim_start().starts_with('"') || rest.trim_start().starts_with('}'),
        None => false,
    }
}

fn roster_from_labels(args: &InputArgs) -> Result<Option<Roster>, Failure> {
    match &args.labels {
        None => Ok(None),
        Some(labels) => Roster::new(labels.clone())
            .map(Some)
            .map_err(|e| usage(format!("bad --labels: {e}"))),
    }
}

fn io_kind(kind: ReprKind) -> Kind {
    match kind {
        ReprKind::Ranking => Kind::Ranking,
        ReprKind::Pm => Kind::Pm,
        ReprKind::Cs => Kind::Cs,
    }
}

/// One of the three convertible representations.
enum Object {
    Ranking(Ranking),
    Pm(PreferenceMap),
    Cs(CookSeifordVector),
}

fn parse_failure(err: ParseError) -> Failure {
    match &err {
        ParseError::Syntax { .. } => usage(err.to_string()),
        ParseError::Position {
            source: ParsePositionError::Syntax(_),
            ..
        } => usage(err.to_string()),
        _ => invalid(err.to_string()),
    }
}

fn decode_failure(err: DecodeError, format: Format) -> Failure {
    match err {
        DecodeError::Json(_) | DecodeError::Schema(_) | DecodeError::WrongKind { .. } => {
            usage(err.to_string())
        }
        DecodeError::Roster(_) | DecodeError::Ranking(_) => invalid(err.to_string()),
        DecodeError::Invalid(report) => Failure {
            code: INVALID,
            message: render_report(&report, format),
        },
    }
}

/// Raw position-vector text, split into either exact values or a report for
/// values that parse as decimals but break the half-integer invariant.
fn cs_values_or_report(
    text: &str,
) -> Result<Result<Vec<Position>, ValidationReport>, Failure> {
    match io::parse_cs_text(text) {
        Ok(values) => Ok(Ok(values)),
        Err(ParseError::Position { index, source }) => match source {
            ParsePositionError::Syntax(_) => Err(usage(format!("value {index}: {source}"))),
            ParsePositionError::NotHalfInteger(_) => {
                Ok(Err(ValidationReport::from_violations(vec![Violation {
                    code: ViolationCode::CsNotHalfInteger,
                    indices: vec![index],
                    message: source.to_string(),
                }])))
            }
            ParsePositionError::OutOfRange(_) => {
                Ok(Err(ValidationReport::from_violations(vec![Violation {
                    code: ViolationCode::CsOutOfRange,
                    indices: vec![index],
                    message: source.to_string(),
                }])))
            }
        },
        Err(other) => Err(parse_failure(other)),
    }
}

/// Decodes a single (non-batch) input into one of the three representations.
fn decode_object(text: &str, args: &InputArgs, format: Format) -> Result<Object, Failure> {
    let roster = roster_from_labels(args)?;
    if looks_like_json(text) {
        if roster.is_some() {
            return Err(usage("--labels applies only to raw text input"));
        }
        let expected = args.kind.map(io_kind);
        let document = io::decode_json(text, expected).map_err(|e| decode_failure(e, format))?;
        return match document {
            Document::Ranking(r) => Ok(Object::Ranking(r)),
            Document::Pm(pm) => Ok(Object::Pm(pm)),
            Document::Cs(cs) => Ok(Object::Cs(cs)),
            other => Err(usage(format!(
                "a `{}` document is not a convertible input",
                other.kind()
            ))),
        };
    }
    match args.kind.unwrap_or(ReprKind::Ranking) {
        ReprKind::Ranking => io::parse_ranking(text, roster.as_ref())
            .map(Object::Ranking)
            .map_err(parse_failure),
        ReprKind::Pm => {
            let sets = io::parse_pm_text(text).map_err(parse_failure)?;
            let roster = match roster {
                Some(roster) => roster,
                None => Roster::numbered(sets.len()).expect("at least one entry"),
            };
            PreferenceMap::new(roster, &sets)
                .map(Object::Pm)
                .map_err(|report| Failure {
                    code: INVALID,
                    message: render_report(&report, format),
                })
        }
        ReprKind::Cs => {
            let values = match cs_values_or_report(text)? {
                Ok(values) => values,
                Err(report) => {
                    return Err(Failure {
                        code: INVALID,
                        message: render_report(&report, format),
                    })
                }
            };
            let roster = match roster {
                Some(roster) => roster,
                None => Roster::numbered(values.len()).expect("at least one value"),
            };
            CookSeifordVector::new(roster, values)
                .map(Object::Cs)
                .map_err(|report| Failure {
                    code: INVALID,
                    message: render_report(&report, format),
                })
        }
    }
}

// --------------------------------------------------------------- output --

fn render_report(report: &ValidationReport, format: Format) -> String {
    match format {
        Format::Json => io::encode_json(&Document::Validation(report.clone())),
        Format::Text => {
            let mut lines = vec![if report.is_valid() {
                "valid".to_owned()
            } else {
                "invalid".to_owned()
            }];
            for violation in report.violations() {
                let indices: Vec<String> =
                    violation.indices.iter().map(usize::to_string).collect();
                lines.push(format!(
                    "{} [{}] {}",
                    violation.code,
                    indices.join(","),
                    violation.message
                ));
            }
            lines.join("\n")
        }
    }
}

fn render_check(report: &BijectionReport, format: Format) -> String {
    match format {
        Format::Json => io::encode_json(&Document::Check(report.clone())),
        Format::Text => format!(
            "n={} total={} pm_images_distinct={} cs_images_distinct={} roundtrip_failures={} {}",
            report.n,
            report.total,
            report.pm_images_distinct,
            report.cs_images_distinct,
            report.roundtrip_failures,
            if report.ok() { "ok" } else { "FAILED" }
        ),
    }
}

fn render_document(document: &Document, format: Format) -> String {
    match format {
        Format::Json => io::encode_json(document),
        Format::Text => match document {
            Document::Ranking(r) => io::format_ranking(r),
            Document::Pm(pm) => io::format_pm_text(pm),
            Document::Cs(cs) => io::format_cs_text(cs),
            Document::Validation(report) => render_report(report, Format::Text),
            Document::Check(report) => render_check(report, Format::Text),
        },
    }
}

fn emit(out: &OutputArgs, content: String) -> Result<(), Failure> {
    let content = content + "\n";
    match &out.output {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

// ------------------------------------------------------------- convert --

fn convert_object(object: Object, to: ReprKind) -> Document {
    match (object, to) {
        (Object::Ranking(r), ReprKind::Ranking) => Document::Ranking(r),
        (Object::Ranking(r), ReprKind::Pm) => Document::Pm(ranking_to_pm(&r)),
        (Object::Ranking(r), ReprKind::Cs) => Document::Cs(ranking_to_cs(&r)),
        (Object::Pm(pm), ReprKind::Ranking) => Document::Ranking(pm_to_ranking(&pm)),
        (Object::Pm(pm), ReprKind::Pm) => Document::Pm(pm),
        (Object::Pm(pm), ReprKind::Cs) => Document::Cs(pm_to_cs(&pm)),
        (Object::Cs(cs), ReprKind::Ranking) => Document::Ranking(cs_to_ranking(&cs)),
        (Object::Cs(cs), ReprKind::Pm) => Document::Pm(cs_to_pm(&cs)),
        (Object::Cs(cs), ReprKind::Cs) => Document::Cs(cs),
    }
}

fn cmd_convert(args: ConvertArgs) -> Result<(), Failure> {
    if args.input.batch {
        return convert_batch(args);
    }
    let text = read_input(&args.input)?;
    let object = decode_object(&text, &args.input, args.format)?;
    let document = convert_object(object, args.to);
    emit(&args.out, render_document(&document, args.format))
}

fn convert_batch(args: ConvertArgs) -> Result<(), Failure> {
    if matches!(args.input.kind, Some(ReprKind::Pm) | Some(ReprKind::Cs)) {
        return Err(usage("--batch input is ranking expressions, one per line"));
    }
    let roster = roster_from_labels(&args.input)?;
    let text = read_input(&args.input)?;
    let batch = io::parse_ranking_batch(&text, roster.as_ref()).map_err(|err| {
        let mut failure = parse_failure(err.source.clone());
        failure.message = format!("line {}: {}", err.line, failure.message);
        failure
    })?;
    let lines: Vec<String> = batch
        .into_iter()
        .map(|(_, ranking)| {
            render_document(&convert_object(Object::Ranking(ranking), args.to), args.format)
        })
        .collect();
    emit(&args.out, lines.join("\n"))
}

// ------------------------------------------------------------- validate --

fn cmd_validate(args: ValidateArgs) -> Result<(), Failure> {
    if args.input.batch {
        return validate_batch(args);
    }
    let text = read_input(&args.input)?;
    let report = validation_report(&text, &args.input)?;
    let valid = report.is_valid();
    emit(&args.out, render_report(&report, args.format))?;
    if valid {
        Ok(())
    } else {
        Err(Failure {
            code: INVALID,
            message: String::new(),
        })
    }
}

/// Produces the validation report for one input of any kind. Ranking inputs
/// have no violation codes: they are valid when they parse, and their parse
/// and structural errors surface as ordinary failures.
fn validation_report(text: &str, args: &InputArgs) -> Result<ValidationReport, Failure> {
    let roster = roster_from_labels(args)?;
    if looks_like_json(text) {
        if roster.is_some() {
            return Err(usage("--labels applies only to raw text input"));
        }
        let expected = args.kind.map(io_kind);
        return match io::decode_json(text, expected) {
            Ok(Document::Ranking(_)) | Ok(Document::Pm(_)) | Ok(Document::Cs(_)) => {
                Ok(ValidationReport::valid())
            }
            Ok(other) => Err(usage(format!(
                "a `{}` document is not a validatable input",
                other.kind()
            ))),
            Err(DecodeError::Invalid(report)) => Ok(report),
            Err(err) => Err(decode_failure(err, Format::Text)),
        };
    }
    match args.kind.unwrap_or(ReprKind::Ranking) {
        ReprKind::Ranking => match io::parse_ranking(text, roster.as_ref()) {
            Ok(_) => Ok(ValidationReport::valid()),
            Err(err) => Err(parse_failure(err)),
        },
        ReprKind::Pm => {
            let sets = io::parse_pm_text(text).map_err(parse_failure)?;
            let roster = match roster {
                Some(roster) => roster,
                None => Roster::numbered(sets.len()).expect("at least one entry"),
            };
            Ok(match PreferenceMap::new(roster, &sets) {
                Ok(_) => ValidationReport::valid(),
                Err(report) => report,
            })
        }
        ReprKind::Cs => {
            let values = match cs_values_or_report(text)? {
                Ok(values) => values,
                Err(report) => return Ok(report),
            };
            let roster = match roster {
                Some(roster) => roster,
                None => Roster::numbered(values.len()).expect("at least one value"),
            };
            Ok(match CookSeifordVector::new(roster, values) {
                Ok(_) => ValidationReport::valid(),
                Err(report) => report,
            })
        }
    }
}

fn validate_batch(args: ValidateArgs) -> Result<(), Failure> {
    if args.format == Format::Json {
        return Err(usage("--batch validation reports are text only"));
    }
    if matches!(args.input.kind, Some(ReprKind::Pm) | Some(ReprKind::Cs)) {
        return Err(usage("--batch input is ranking expressions, one per line"));
    }
    let roster = roster_from_labels(&args.input)?;
    let text = read_input(&args.input)?;
    let mut lines = Vec::new();
    let mut worst: u8 = 0;
    for (i, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        match io::parse_ranking(line, roster.as_ref()) {
            Ok(_) => lines.push(format!("line {}: valid", i + 1)),
            Err(err) => {
                let failure = parse_failure(err);
                worst = worst.max(failure.code);
                lines.push(format!("line {}: {}", i + 1, failure.message));
            }
        }
    }
    emit(&args.out, lines.join("\n"))?;
    if worst == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: worst,
            message: String::new(),
        })
    }
}

// ------------------------------------------------------- check/enumerate --

fn guard_failure(err: OracleError) -> Failure {
    match err {
        OracleError::Empty => usage("--n must be at least 1"),
        OracleError::TooLarge { .. } => usage(format!("{err}; pass --force to run it anyway")),
    }
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let report = if args.force {
        check_bijection_unbounded(args.n)
    } else {
        check_bijection(args.n)
    }
    .map_err(guard_failure)?;
    let ok = report.ok();
    emit(&args.out, render_check(&report, args.format))?;
    if ok {
        Ok(())
    } else {
        Err(Failure {
            code: INVALID,
            message: String::new(),
        })
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let iter = if args.force {
        enumerate_weak_orders_unbounded(args.n)
    } else {
        enumerate_weak_orders(args.n)
    }
    .map_err(guard_failure)?;
    let content = match args.format {
        Format::Text => {
            let lines: Vec<String> = iter.map(|r| io::format_ranking(&r)).collect();
            lines.join("\n")
        }
        Format::Json => {
            let docs: Vec<String> = iter
                .map(|r| io::encode_json(&Document::Ranking(r)))
                .collect();
            format!("[{}]", docs.join(","))
        }
    };
    emit(&args.out, content)
}
