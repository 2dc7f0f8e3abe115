//! Subcommand implementations: decode payloads, call the library, encode the
//! result as JSON. Every handler returns either an [`Outcome`] (result value
//! plus success flag) or a domain error for `main` to map onto exit codes.

use crate::{Command, G2Command, QuantizeCommand, RollCommand, SuiteArg, TripleCommand};
use g2roll_core::json::{
    crat_to_value, g2_from_value, g2_to_value, imaginary_complex_from_value, imaginary_from_value,
    imaginary_to_value, octonion_from_value, octonion_to_value, rat_to_value, triple_to_value,
    triple_vectors_from_value,
};
use g2roll_core::kinematics::{cover_to_contact, pc_trajectory, su2_trajectory, RollingLineParams};
use g2roll_core::par::ExecMode;
use g2roll_core::quantization::{delta, delta_adjoint, trace_dot};
use g2roll_core::verify::{all_suites, suite_by_name, SuiteParams};
use g2roll_core::{
    annihilator, apartment_basis, classify_pair, complete_pair, extend_config, g2_from_triples,
    midpoint, pair_transporter, roll_distance, validate_triple, GeomError, Imaginary,
    LineSubalgebra, PcPoint, Quaternion, Rat,
};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

/// Result value of a completed command, with `ok = false` reserved for
/// verification runs whose checks failed (exit 1 with the report printed).
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

impl Outcome {
    fn pass(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

/// Parse a payload argument: inline JSON first, then a path to a JSON file.
fn payload(arg: &str) -> Result<Value, GeomError> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| {
        GeomError::InvalidInput(format!(
            "payload `{arg}` is neither inline JSON nor a readable file: {e}"
        ))
    })?;
    serde_json::from_str(&text)
        .map_err(|e| GeomError::InvalidInput(format!("malformed JSON in `{arg}`: {e}")))
}

fn vector(arg: &str) -> Result<Imaginary<Rat>, GeomError> {
    imaginary_from_value(&payload(arg)?)
}

fn point(arg: &str) -> Result<PcPoint<Rat>, GeomError> {
    PcPoint::from_vector(&vector(arg)?)
}

fn triple_vectors(arg: &str) -> Result<[Imaginary<Rat>; 3], GeomError> {
    triple_vectors_from_value(&payload(arg)?)
}

pub fn dispatch(cmd: Command) -> Result<Outcome, GeomError> {
    match cmd {
        Command::Mul { x, y } => {
            let (x, y) = (
                octonion_from_value(&payload(&x)?)?,
                octonion_from_value(&payload(&y)?)?,
            );
            Ok(Outcome::pass(
                json!({ "product": octonion_to_value(&(&x * &y)) }),
            ))
        }
        Command::Dot { x, y } => {
            let (x, y) = (vector(&x)?, vector(&y)?);
            Ok(Outcome::pass(json!({ "dot": rat_to_value(&x.dot(&y)) })))
        }
        Command::Cross { x, y } => {
            let (x, y) = (vector(&x)?, vector(&y)?);
            Ok(Outcome::pass(
                json!({ "cross": imaginary_to_value(&x.cross(&y)) }),
            ))
        }
        Command::Distance { x, y } => {
            let d = roll_distance(&point(&x)?, &point(&y)?);
            Ok(Outcome::pass(json!({ "distance": d.value() })))
        }
        Command::Annihilator { x } => {
            let basis = annihilator(&point(&x)?);
            Ok(Outcome::pass(json!({
                "basis": basis.iter().map(imaginary_to_value).collect::<Vec<_>>(),
            })))
        }
        Command::Line { x, y } => {
            let line = LineSubalgebra::through(&point(&x)?, &point(&y)?)?;
            Ok(Outcome::pass(json!({
                "basis": line.basis().iter().map(imaginary_to_value).collect::<Vec<_>>(),
            })))
        }
        Command::Midpoint { x, z } => {
            let m = midpoint(&point(&x)?, &point(&z)?)?;
            Ok(Outcome::pass(
                json!({ "midpoint": imaginary_to_value(m.rep()) }),
            ))
        }
        Command::Classify { x, y } => {
            let (a, b) = (point(&x)?, point(&y)?);
            Ok(Outcome::pass(json!({
                "class": classify_pair(&a, &b).to_string(),
                "distance": roll_distance(&a, &b).value(),
            })))
        }
        Command::Triple(t) => triple(t),
        Command::Apartment { x, y, z } => {
            let [x, y, z] = [vector(&x)?, vector(&y)?, vector(&z)?];
            let t = validate_triple(&x, &y, &z)?;
            let a = apartment_basis(&t);
            Ok(Outcome::pass(json!({
                "vectors": a.vectors().iter().map(imaginary_to_value).collect::<Vec<_>>(),
                "w": imaginary_to_value(a.w()),
            })))
        }
        Command::G2(g) => g2(g),
        Command::Roll(r) => roll(r),
        Command::Quantize(q) => quantize(q),
        Command::Verify {
            suite,
            seed,
            samples,
        } => verify(suite, seed, samples),
    }
}

fn triple(cmd: TripleCommand) -> Result<Outcome, GeomError> {
    match cmd {
        TripleCommand::Validate { x, y, z } => {
            let t = validate_triple(&vector(&x)?, &vector(&y)?, &vector(&z)?)?;
            Ok(Outcome::pass(
                json!({ "valid": true, "triple": triple_to_value(&t) }),
            ))
        }
        TripleCommand::Complete { x, y } => {
            let t = complete_pair(&vector(&x)?, &vector(&y)?)?;
            Ok(Outcome::pass(json!({ "triple": triple_to_value(&t) })))
        }
        TripleCommand::Extend {
            case,
            first,
            second,
        } => {
            let first = vector(&first)?;
            let second = second.map(|s| vector(&s)).transpose()?;
            let ext = extend_config(case, &first, second.as_ref())?;
            Ok(Outcome::pass(json!({
                "case": case,
                "triple": triple_to_value(&ext.triple),
                "scale": ext.scale.as_ref().map(rat_to_value).unwrap_or(Value::Null),
            })))
        }
    }
}

fn g2(cmd: G2Command) -> Result<Outcome, GeomError> {
    match cmd {
        G2Command::FromTriples { t1, t2 } => {
            let [x1, y1, z1] = triple_vectors(&t1)?;
            let [x2, y2, z2] = triple_vectors(&t2)?;
            let t1 = validate_triple(&x1, &y1, &z1)?;
            let t2 = validate_triple(&x2, &y2, &z2)?;
            let g = g2_from_triples(&t1, &t2);
            Ok(Outcome::pass(json!({ "matrix": g2_to_value(&g) })))
        }
        G2Command::Apply { g, x } => {
            let mut v = payload(&g)?;
            // Accept both a bare 7×7 matrix and the {"matrix": ...} wrapper
            // that `g2 from-triples` and `g2 transport` print.
            if let Some(inner) = v.get("matrix") {
                v = inner.clone();
            }
            let g = g2_from_value(&v)?;
            Ok(Outcome::pass(
                json!({ "image": imaginary_to_value(&g.apply(&vector(&x)?)) }),
            ))
        }
        G2Command::Transport { a1, b1, a2, b2 } => {
            let g = pair_transporter(&point(&a1)?, &point(&b1)?, &point(&a2)?, &point(&b2)?)?;
            Ok(Outcome::pass(json!({ "matrix": g2_to_value(&g) })))
        }
    }
}

/// Fixed CSV header: angle, contact point, orientation quaternion, null
/// 7-vector of the projectivized trajectory.
const CSV_HEADER: &str = "theta,contact_x,contact_y,contact_z,q_w,q_x,q_y,q_z,n1,n2,n3,n4,n5,n6,n7";

fn roll(cmd: RollCommand) -> Result<Outcome, GeomError> {
    let RollCommand::Simulate { ratio, steps, out } = cmd;
    if steps == 0 {
        return Err(GeomError::InvalidInput("--steps must be at least 1".into()));
    }
    let params =
        RollingLineParams::new(Quaternion::i(), Quaternion::k(), Quaternion::one(), ratio)?;
    let mut body = String::with_capacity((steps + 2) * 16 * 24);
    body.push_str(CSV_HEADER);
    body.push('\n');
    for i in 0..=steps {
        let theta = std::f64::consts::PI * (i as f64) / (steps as f64);
        let contact = cover_to_contact(&su2_trajectory(&params, theta));
        let null = pc_trajectory(&params, theta);
        write!(body, "{theta:.16e}").expect("write to string");
        for c in contact.contact.iter().chain(contact.rot.coords().iter()) {
            write!(body, ",{c:.16e}").expect("write to string");
        }
        for c in &null.0 {
            write!(body, ",{c:.16e}").expect("write to string");
        }
        body.push('\n');
    }
    write_file(&out, &body)?;
    Ok(Outcome::pass(json!({
        "path": out.display().to_string(),
        "rows": steps + 1,
    })))
}

fn write_file(path: &Path, contents: &str) -> Result<(), GeomError> {
    std::fs::write(path, contents)
        .map_err(|e| GeomError::InvalidInput(format!("cannot write `{}`: {e}", path.display())))
}

fn quantize(cmd: QuantizeCommand) -> Result<Outcome, GeomError> {
    match cmd {
        QuantizeCommand::Delta { w } => {
            let w = imaginary_complex_from_value(&payload(&w)?)?;
            let b = delta(&w);
            let rows: Vec<Value> =
                b.0.iter()
                    .map(|row| Value::Array(row.iter().map(crat_to_value).collect()))
                    .collect();
            Ok(Outcome::pass(json!({ "matrix": rows })))
        }
        QuantizeCommand::Adjoint => {
            let table = delta_adjoint();
            let rows: Vec<Value> = table
                .iter()
                .map(|row| Value::Array(row.iter().map(imaginary_to_value).collect()))
                .collect();
            Ok(Outcome::pass(json!({ "table": rows })))
        }
        QuantizeCommand::TraceDot { a, b } => {
            let (a, b) = (vector(&a)?, vector(&b)?);
            Ok(Outcome::pass(
                json!({ "trace_dot": rat_to_value(&trace_dot(&a, &b)) }),
            ))
        }
    }
}

fn verify(suite: SuiteArg, seed: u64, samples: usize) -> Result<Outcome, GeomError> {
    let p = SuiteParams {
        seed,
        samples,
        mode: ExecMode::default(),
    };
    match suite.name() {
        Some(name) => {
            let report = suite_by_name(name, &p).expect("suite names mirror the library's");
            Ok(Outcome {
                ok: report.all_ok(),
                value: serde_json::to_value(&report).expect("report serializes"),
            })
        }
        None => {
            let reports = all_suites(&p);
            let all_ok = reports.iter().all(|r| r.all_ok());
            Ok(Outcome {
                ok: all_ok,
                value: json!({
                    "seed": seed,
                    "samples": samples,
                    "all_ok": all_ok,
                    "reports": reports,
                }),
            })
        }
    }
}
