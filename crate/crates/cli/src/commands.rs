use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;
use sudiag::ainf::{stasheff_check, AInfinity, CyclicFactor, Element, Monomial, SignRule, TensorProduct, TupleSource};
use sudiag::cyclic_products::{
    arity_support as scan, c4c4_example, evaluate_witness, snake_matrix, snake_trees, verify_snake_derived, witness_argument,
    SnakeSpec, Variant, WitnessMode,
};
use sudiag::trees::delta_k_capped;

use crate::{Factors, Format, Outcome, TensorOpArgs};

type CmdResult = Result<Outcome, Box<dyn std::error::Error>>;

/// Bumped whenever a JSON layout changes.
const SCHEMA: &str = "sudiag/1";

fn json_out(command: &str, body: impl Serialize, verified: bool) -> CmdResult {
    let mut v = serde_json::to_value(body)?;
    if let Some(map) = v.as_object_mut() {
        map.insert("schema".into(), SCHEMA.into());
        map.insert("command".into(), command.into());
        map.insert("verified".into(), verified.into());
    }
    Ok(Outcome {
        text: serde_json::to_string_pretty(&v)? + "\n",
        verified,
    })
}

fn no_dot(command: &str) -> Box<dyn std::error::Error> {
    format!("{command} has no DOT rendering; use text or json").into()
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

pub fn delta_k(arity: usize, cap: usize, f: Format) -> CmdResult {
    let terms = delta_k_capped(arity, cap)?;
    let text = match f {
        Format::Json => {
            return json_out("delta-k", json!({ "arity": arity, "count": terms.len(), "terms": terms }), true);
        }
        Format::Dot => {
            let mut s = String::new();
            for (i, t) in terms.iter().enumerate() {
                s += &t.left.to_dot(&format!("term{}_left", i + 1));
                s += &t.right.to_dot(&format!("term{}_right", i + 1));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for t in &terms {
                writeln!(s, "{t}")?;
            }
            let total: u64 = terms.iter().map(|t| t.multiplicity).sum();
            writeln!(s, "{} terms in arity {arity}, total multiplicity {total}", terms.len())?;
            s
        }
    };
    Ok(Outcome { text, verified: true })
}

fn parse_args(s: &str) -> Result<Vec<Monomial>, sudiag::Error> {
    s.split(',').map(|t| Monomial::parse(t.trim(), 2)).collect()
}

pub fn tensor_op(a: &TensorOpArgs, f: Format) -> CmdResult {
    if a.arity > a.caps.max_arity_cap {
        return Err(format!("arity {} exceeds the cap {}", a.arity, a.caps.max_arity_cap).into());
    }
    let args = parse_args(&a.args)?;
    if args.len() != a.arity {
        return Err(format!("--arity {} but {} arguments given", a.arity, args.len()).into());
    }
    let factor = |n| {
        if a.shaped {
            CyclicFactor::madsen_shaped(n, a.p, a.ycap)
        } else {
            CyclicFactor::madsen(n, a.p, a.ycap)
        }
    };
    let left = Arc::new(factor(a.factors.n)?);
    let right = Arc::new(factor(a.factors.m)?);
    let rule = if a.experimental_signs { SignRule::ExperimentalKoszul } else { SignRule::Char2 };
    let t = TensorProduct::with_sign_rule(left, right, a.arity.max(2), rule)?;
    let value = t.op_basis(&args)?;
    let truncations = t.truncations();
    if truncations > 0 {
        eprintln!("note: {truncations} terms above y^{} were dropped", a.ycap);
    }
    match f {
        Format::Json => json_out(
            "tensor-op",
            json!({
                "n": a.factors.n, "m": a.factors.m, "p": a.p, "ycap": a.ycap, "arity": a.arity,
                "args": args.iter().map(Monomial::to_string).collect::<Vec<_>>(),
                "value": value, "value_text": value.to_string(), "truncations": truncations,
            }),
            true,
        ),
        Format::Dot => Err(no_dot("tensor-op")),
        Format::Text => Ok(Outcome {
            text: format!("{value}\n"),
            verified: true,
        }),
    }
}

pub fn arity_support(fs: Factors, max_arity: usize, ycap: u16, f: Format) -> CmdResult {
    let r = scan(fs.n, fs.m, max_arity, ycap)?;
    let ok = r.matches_expected();
    match f {
        Format::Json => json_out("arity-support", &r, ok),
        Format::Dot => Err(no_dot("arity-support")),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "H*(C_{} x C_{}; F_2), arities 2..={max_arity}, ycap {ycap}", r.n, r.m)?;
            writeln!(s, "support: {}", list(&r.support))?;
            writeln!(s, "expected: {}", list(&r.expected))?;
            for w in &r.witnesses {
                writeln!(s, "  m{}({}) = {}", w.arity, w.args.join(", "), w.value)?;
            }
            writeln!(s, "truncations: {}", r.truncation_count)?;
            writeln!(s, "{}", if ok { "support matches" } else { "support differs" })?;
            Ok(Outcome { text: s, verified: ok })
        }
    }
}

pub fn snake(fs: Factors, k: usize, variant: Variant, mode: WitnessMode, f: Format) -> CmdResult {
    let spec = SnakeSpec::new(fs.n, fs.m, k, variant)?;
    let matrix = snake_matrix(&spec)?;
    let replay = verify_snake_derived(&spec);
    let (left, right) = snake_trees(&spec)?;
    let (args, value) = if k == 0 {
        (Vec::new(), None)
    } else {
        (witness_argument(&spec)?, Some(evaluate_witness(&spec, mode)?))
    };
    let nonzero = value.as_ref().is_none_or(|v| !v.is_zero());
    let ok = replay.is_ok() && nonzero;
    match f {
        Format::Json => json_out(
            "snake",
            json!({
                "spec": spec, "arity": spec.arity(), "matrix": matrix,
                "replay": replay.as_ref().ok(), "replay_error": replay.as_ref().err().map(ToString::to_string),
                "left": left, "right": right, "mode": mode,
                "witness_args": args.iter().map(Monomial::to_string).collect::<Vec<_>>(),
                "value": value, "value_text": value.as_ref().map(Element::to_string),
            }),
            ok,
        ),
        Format::Dot => Ok(Outcome {
            text: left.to_dot("left") + &right.to_dot("right"),
            verified: ok,
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "snake {spec}, arity {}", spec.arity())?;
            writeln!(s, "{matrix}")?;
            match &replay {
                Ok(w) => writeln!(s, "replayed from a step matrix in {} moves", w.moves.len())?,
                Err(e) => writeln!(s, "replay failed: {e}")?,
            }
            writeln!(s, "left:  {left}")?;
            writeln!(s, "right: {right}")?;
            if let Some(v) = &value {
                let shown: Vec<String> = args.iter().map(Monomial::to_string).collect();
                writeln!(s, "witness: {}", shown.join(", "))?;
                writeln!(s, "value: {v}")?;
            }
            Ok(Outcome { text: s, verified: ok })
        }
    }
}

pub fn example(ycap: u16, f: Format) -> CmdResult {
    let r = c4c4_example(ycap)?;
    let ok = r.passed();
    match f {
        Format::Json => json_out("example-c4c4", &r, ok),
        Format::Dot => Err(no_dot("example-c4c4")),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "H*(C_4 x C_4; F_2), ycap {ycap}")?;
            s += &r.m4.table_text();
            let failures: usize = r.m4.identities.iter().map(|c| c.failures.len()).sum();
            writeln!(
                s,
                "m4 identities: {} checked on all decorations, {failures} failures; zero on every other pattern: {}",
                r.m4.identities.len(),
                r.m4.vanishes_elsewhere
            )?;
            let m6 = &r.m6;
            writeln!(s, "m6({}) = {}", m6.witness_args.replace(',', ", "), m6.witness_value)?;
            writeln!(
                s,
                "m6 non-zero patterns: {} for some decoration, {} for all decorations (claimed {})",
                m6.count_some_decoration, m6.count_all_decorations, m6.claimed_count
            )?;
            for p in &m6.patterns {
                writeln!(s, "  m6({}) = {}", p.args.join(", "), p.value)?;
            }
            writeln!(s, "{}", if ok { "example verified" } else { "example differs from the claims" })?;
            Ok(Outcome { text: s, verified: ok })
        }
    }
}

pub fn stasheff(fs: Factors, max_arity: usize, degree: u32, ycap: u16, f: Format) -> CmdResult {
    let a = Arc::new(CyclicFactor::madsen(fs.n, 2, ycap)?);
    let b = Arc::new(CyclicFactor::madsen(fs.m, 2, ycap)?);
    let t = TensorProduct::new(a, b, max_arity.max(2))?;
    let source = TupleSource::Exhaustive { max_total_degree: degree };
    let reports = (2..=max_arity).map(|k| stasheff_check(&t, k, &source)).collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.passed());
    match f {
        Format::Json => json_out(
            "stasheff",
            json!({ "n": fs.n, "m": fs.m, "max_arity": max_arity, "max_total_degree": degree, "ycap": ycap, "reports": reports }),
            ok,
        ),
        Format::Dot => Err(no_dot("stasheff")),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                if r.passed() {
                    writeln!(s, "St_{}: {} tuples, no violations", r.arity, r.tuples_checked)?;
                } else {
                    writeln!(s, "St_{}: {} tuples, {} violations", r.arity, r.tuples_checked, r.violation_count)?;
                    for v in &r.violations {
                        writeln!(s, "  ({}) -> {}", v.args.join(", "), v.value)?;
                    }
                }
                if r.truncations > 0 {
                    writeln!(s, "  {} terms dropped by the y cap", r.truncations)?;
                }
            }
            writeln!(s, "{}", if ok { "no violations" } else { "violations found" })?;
            Ok(Outcome { text: s, verified: ok })
        }
    }
}

pub fn oracle_diff(n: usize, f: Format) -> CmdResult {
    let d = sudiag::oracle::oracle_diff(n)?;
    let ok = d.agrees();
    match f {
        Format::Json => json_out("oracle-diff", &d, ok),
        Format::Dot => Err(no_dot("oracle-diff")),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "N = {n}")?;
            writeln!(s, "step matrices agree: {}", d.step_matrices_agree)?;
            writeln!(s, "derived matrices: {}, unrestricted closure: {}", d.closure.derived, d.closure.closure)?;
            for m in &d.closure.only_in_closure {
                writeln!(s, "only in closure:\n{m}")?;
            }
            for m in &d.closure.only_in_derived {
                writeln!(s, "only in derived set:\n{m}")?;
            }
            writeln!(s, "delta_P terms: {} main, {} naive", d.delta_p_main, d.delta_p_naive)?;
            writeln!(s, "{}", if ok { "oracles agree" } else { "oracles differ" })?;
            Ok(Outcome { text: s, verified: ok })
        }
    }
}
