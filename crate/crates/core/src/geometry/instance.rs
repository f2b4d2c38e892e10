//! Instance files and report serialization.
//!
//! An instance file is line-oriented text. The header is `a N field` where
//! `field` is `rational`, a prime `p`, or `p^2` for the quadratic extension.
//! Every following non-comment line is one condition line given by two basis
//! vectors: `2 * N` integers. Blank lines and `#` comments are skipped.
//!
//! Rational instances are solved exactly with the Plucker pencil (so they
//! must be four lines in 4-space with `a = 2`); finite-field instances are
//! counted by exhaustive subspace enumeration. Reports serialize to JSON
//! with canonical (sorted) keys and exact-rational strings.

use super::counting::finite_field_count;
use super::field::{Field, PrimeField, QuadraticField, Rationals};
use super::pencil::{solve_four_lines, PencilSolutionReport, SolutionCount};
use super::subspace::LinearSubspace;
use super::GeometryError;
use serde_json::{json, Value};

/// Which coefficient field an instance lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
    Quadratic(u64),
}

impl FieldSpec {
    pub fn parse(token: &str) -> Option<FieldSpec> {
        if token == "rational" {
            return Some(FieldSpec::Rational);
        }
        if let Some(base) = token.strip_suffix("^2") {
            return base.parse().ok().map(FieldSpec::Quadratic);
        }
        token.parse().ok().map(FieldSpec::Prime)
    }

    pub fn render(&self) -> String {
        match self {
            FieldSpec::Rational => "rational".to_string(),
            FieldSpec::Prime(p) => p.to_string(),
            FieldSpec::Quadratic(p) => format!("{p}^2"),
        }
    }
}

/// A parsed instance: count `a`-dimensional subspaces of `N`-space meeting
/// every listed condition line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub a: u32,
    pub n: u32,
    pub field: FieldSpec,
    /// Two basis vectors per condition line.
    pub lines: Vec<[Vec<i64>; 2]>,
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, GeometryError> {
    let mut header: Option<(u32, u32, FieldSpec)> = None;
    let mut lines: Vec<[Vec<i64>; 2]> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if tokens.len() != 3 {
                return Err(GeometryError::Parse {
                    line: lineno + 1,
                    message: "header must be: a N field".to_string(),
                });
            }
            let a = tokens[0].parse().map_err(|_| GeometryError::Parse {
                line: lineno + 1,
                message: format!("bad subspace dimension {:?}", tokens[0]),
            })?;
            let n = tokens[1].parse().map_err(|_| GeometryError::Parse {
                line: lineno + 1,
                message: format!("bad ambient dimension {:?}", tokens[1]),
            })?;
            let field = FieldSpec::parse(tokens[2]).ok_or_else(|| GeometryError::Parse {
                line: lineno + 1,
                message: format!("bad field {:?}; use rational, p, or p^2", tokens[2]),
            })?;
            if a < 1 || n < 2 || a >= n {
                return Err(GeometryError::Parse {
                    line: lineno + 1,
                    message: format!("need 1 <= a < N, got a={a} N={n}"),
                });
            }
            header = Some((a, n, field));
            continue;
        }
        let (_, n, _) = header.expect("header parsed above");
        let width = n as usize;
        if tokens.len() != 2 * width {
            return Err(GeometryError::Parse {
                line: lineno + 1,
                message: format!(
                    "condition line needs {} integers (two vectors of length {}), got {}",
                    2 * width,
                    width,
                    tokens.len()
                ),
            });
        }
        let mut values = Vec::with_capacity(2 * width);
        for t in &tokens {
            values.push(t.parse::<i64>().map_err(|_| GeometryError::Parse {
                line: lineno + 1,
                message: format!("bad integer {t:?}"),
            })?);
        }
        lines.push([values[..width].to_vec(), values[width..].to_vec()]);
    }
    let (a, n, field) = header.ok_or(GeometryError::Parse {
        line: 0,
        message: "missing header".to_string(),
    })?;
    Ok(InstanceFile { a, n, field, lines })
}

pub fn render_instance(instance: &InstanceFile) -> String {
    let mut out = format!(
        "{} {} {}\n",
        instance.a,
        instance.n,
        instance.field.render()
    );
    for [u, v] in &instance.lines {
        let row: Vec<String> = u.iter().chain(v.iter()).map(i64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Outcome of running an instance.
#[derive(Debug, Clone)]
pub enum InstanceResult {
    /// Rational pencil route; degeneracies are data here, not failures.
    Pencil(Result<PencilSolutionReport, GeometryError>),
    /// Finite-field enumeration count.
    Count(u64),
}

/// Runs an instance. Rational instances go through the exact pencil solver
/// and are therefore restricted to four lines in 4-space with `a = 2`;
/// finite-field instances are counted by enumeration under `cap`.
pub fn run_instance(instance: &InstanceFile, cap: u64) -> Result<InstanceResult, GeometryError> {
    match instance.field {
        FieldSpec::Rational => {
            if instance.a != 2 || instance.n != 4 || instance.lines.len() != 4 {
                return Err(GeometryError::UnsupportedInstance {
                    message: format!(
                        "rational instances must be four lines in 4-space with a = 2; \
                         got a={} N={} with {} lines",
                        instance.a,
                        instance.n,
                        instance.lines.len()
                    ),
                });
            }
            let field = Rationals;
            let mut lines = Vec::with_capacity(4);
            for pair in &instance.lines {
                lines.push(build_line(&field, instance.n, pair)?);
            }
            let lines: [LinearSubspace<Rationals>; 4] =
                lines.try_into().expect("length checked above");
            Ok(InstanceResult::Pencil(solve_four_lines(&lines)))
        }
        FieldSpec::Prime(p) => {
            let field = PrimeField::new(p)?;
            let conditions = instance
                .lines
                .iter()
                .map(|pair| build_line(&field, instance.n, pair))
                .collect::<Result<Vec<_>, _>>()?;
            let count = finite_field_count(&field, instance.a, instance.n, &conditions, cap)?;
            Ok(InstanceResult::Count(count))
        }
        FieldSpec::Quadratic(p) => {
            let field = QuadraticField::new(p)?;
            let conditions = instance
                .lines
                .iter()
                .map(|pair| build_line(&field, instance.n, pair))
                .collect::<Result<Vec<_>, _>>()?;
            let count = finite_field_count(&field, instance.a, instance.n, &conditions, cap)?;
            Ok(InstanceResult::Count(count))
        }
    }
}

fn build_line<F: Field>(
    field: &F,
    n: u32,
    pair: &[Vec<i64>; 2],
) -> Result<LinearSubspace<F>, GeometryError> {
    let rows = pair
        .iter()
        .map(|v| v.iter().map(|&x| field.from_i64(x)).collect())
        .collect();
    LinearSubspace::from_basis(field.clone(), n as usize, rows)
}

/// JSON for a successful solve: keys `count`, `degenerate`, `discriminant`,
/// `extension`, `reason`, `solutions`, always in sorted order, rationals as
/// exact strings.
pub fn report_to_json(report: &PencilSolutionReport) -> Value {
    let solutions: Vec<Value> = report
        .solutions
        .iter()
        .map(|space| {
            let rows: Vec<Value> = space
                .basis()
                .iter()
                .map(|row| {
                    Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect())
                })
                .collect();
            Value::Array(rows)
        })
        .collect();
    json!({
        "count": match report.count_with_multiplicity {
            SolutionCount::Finite(c) => json!(c),
            SolutionCount::Infinite => json!("infinite"),
        },
        "degenerate": false,
        "discriminant": report.discriminant.to_string(),
        "extension": report.extension.clone().map(Value::String).unwrap_or(Value::Null),
        "reason": Value::Null,
        "solutions": solutions,
    })
}

/// JSON for a degenerate or non-reduced configuration, same key set.
pub fn degenerate_to_json(error: &GeometryError) -> Value {
    let infinite = matches!(error, GeometryError::NonReducedPencil);
    json!({
        "count": if infinite { json!("infinite") } else { Value::Null },
        "degenerate": true,
        "discriminant": Value::Null,
        "extension": Value::Null,
        "reason": error.to_string(),
        "solutions": Value::Array(vec![]),
    })
}

/// JSON for whichever way an instance ran.
pub fn instance_result_to_json(result: &InstanceResult) -> Value {
    match result {
        InstanceResult::Pencil(Ok(report)) => report_to_json(report),
        InstanceResult::Pencil(Err(e)) => degenerate_to_json(e),
        InstanceResult::Count(count) => json!({ "count": count, "degenerate": false }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const COORDINATE_PAIRS: &str = "\
# four coordinate-pair lines
2 4 rational
1 0 0 0 0 1 0 0
0 0 1 0 0 0 0 1
1 0 0 0 0 0 1 0
0 1 0 0 0 0 0 1
";

    #[test]
    fn parse_and_render_round_trip() {
        let parsed = parse_instance(COORDINATE_PAIRS).unwrap();
        assert_eq!(parsed.a, 2);
        assert_eq!(parsed.n, 4);
        assert_eq!(parsed.field, FieldSpec::Rational);
        assert_eq!(parsed.lines.len(), 4);
        let rendered = render_instance(&parsed);
        let reparsed = parse_instance(&rendered).unwrap();
        assert_eq!(parsed, reparsed);
    }

    #[test]
    fn field_tokens() {
        assert_eq!(FieldSpec::parse("rational"), Some(FieldSpec::Rational));
        assert_eq!(FieldSpec::parse("7"), Some(FieldSpec::Prime(7)));
        assert_eq!(FieldSpec::parse("7^2"), Some(FieldSpec::Quadratic(7)));
        assert_eq!(FieldSpec::parse("x"), None);
    }

    #[test]
    fn parse_rejects_bad_rows() {
        let text = "2 4 rational\n1 0 0 0 0 1 0\n";
        assert!(matches!(
            parse_instance(text),
            Err(GeometryError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance(""),
            Err(GeometryError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_instance("0 4 rational\n"),
            Err(GeometryError::Parse { .. })
        ));
    }

    #[test]
    fn rational_instance_solves() {
        let parsed = parse_instance(COORDINATE_PAIRS).unwrap();
        let result = run_instance(&parsed, 1000).unwrap();
        match result {
            InstanceResult::Pencil(Ok(report)) => {
                assert_eq!(report.solutions.len(), 2);
            }
            other => panic!("expected a solved pencil, got {other:?}"),
        }
    }

    #[test]
    fn finite_field_instance_counts() {
        let text = COORDINATE_PAIRS.replace("rational", "3");
        let parsed = parse_instance(&text).unwrap();
        match run_instance(&parsed, 1000).unwrap() {
            InstanceResult::Count(count) => assert_eq!(count, 2),
            other => panic!("expected a count, got {other:?}"),
        }
    }

    #[test]
    fn report_json_is_canonical() {
        let parsed = parse_instance(COORDINATE_PAIRS).unwrap();
        let result = run_instance(&parsed, 1000).unwrap();
        let rendered = serde_json::to_string(&instance_result_to_json(&result)).unwrap();
        // Keys appear in sorted order and rationals are exact strings.
        assert!(rendered.starts_with("{\"count\":2,\"degenerate\":false,\"discriminant\":\""));
        let again = serde_json::to_string(&instance_result_to_json(
            &run_instance(&parsed, 1000).unwrap(),
        ))
        .unwrap();
        assert_eq!(rendered, again);
    }

    #[test]
    fn unsupported_rational_shape_is_an_error() {
        let text = "1 3 rational\n1 0 0 0 1 0\n";
        let parsed = parse_instance(text).unwrap();
        assert!(matches!(
            run_instance(&parsed, 1000),
            Err(GeometryError::UnsupportedInstance { .. })
        ));
    }
}
