mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use witt_core::delta::{check_delta_axioms, FrobeniusLiftSpec};
use witt_core::descent::{
    alpha_homomorphism_report, equalizer_report, kernel_report, nilpotence_report, surjectivity_report,
    v_sequence_report, FiniteAlgebra, FiniteMap,
};
use witt_core::multi::{
    big_ghost_congruence_failures, classical_big_ghost, truncation_set_context, BigWittChange, MultiIndex,
    MultiWittRing,
};
use witt_core::presentations::{lambda_presentation, verify_wn_presentation, RingPresentation, Style};
use witt_core::report::Report;
use witt_core::rings::parse::parse_ring;
use witt_core::selftest::{coordinate_change_report, run_suite, structural_integrity, Size};
use witt_core::witt::{structural_polys, OpKind, WittContext, WittRing};
use witt_core::{Algebra, BaseRing, Elem, Result, WittError};

use crate::expr::{Evaluator, Value};

#[derive(Parser)]
#[command(name = "witt", version, about = "Exact arithmetic with truncated Witt vectors")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct CtxArgs {
    /// Base ring: Z or Fp[t]:p
    #[arg(long, default_value = "Z")]
    base: String,
    /// Prime element of the base (defaults to t over F_p[t])
    #[arg(long)]
    pi: Option<String>,
    /// Normalized truncation length n (n+1 components)
    #[arg(long, default_value_t = 1)]
    len: usize,
    /// Coefficient algebra, e.g. Z/4, F2[t]/(t^2), Z[x]
    #[arg(long)]
    alg: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a Witt-vector expression
    Eval {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        expr: String,
    },
    /// Ghost components of a vector given as comma-separated components
    Ghost {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        vector: String,
    },
    /// Witt components of a ghost vector
    Unghost {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        entries: String,
    },
    /// Structural polynomials of a ring operation
    Structpoly {
        #[command(flatten)]
        ctx: CtxArgs,
        /// sum, product, negation or frobenius
        #[arg(long)]
        op: String,
        #[arg(long)]
        component: Option<usize>,
    },
    /// Presentation of Λ_n ⊙ A from a presentation of A
    Present {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Comma-separated variables of A
        #[arg(long)]
        vars: String,
        /// Relation polynomial (repeatable)
        #[arg(long = "relation")]
        relations: Vec<String>,
        #[arg(long, default_value = "theta")]
        style: String,
    },
    /// Coaction A → W_n(A) of a Frobenius-lift spec file
    Coaction {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        elem: String,
        #[arg(long, default_value_t = 1)]
        len: usize,
        /// Multi-index for several primes, e.g. 1,1
        #[arg(long)]
        index: Option<String>,
    },
    /// Big Witt vectors on a divisor-closed truncation set
    Bigwitt {
        /// Truncation set, e.g. 1,2,3,6
        #[arg(long)]
        set: String,
        /// Classical components x_d over Z, in increasing d
        #[arg(long)]
        components: Option<String>,
    },
    /// Run one verifier in the given context
    Verify {
        #[command(flatten)]
        ctx: CtxArgs,
        /// kernel, equalizer, alpha-hom, ghost-congruence, v-sequence,
        /// surjective, wn-presentation, coord-change, structural, delta-axioms
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Target algebra for the surjectivity check
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites
    Selftest {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "small")]
        size: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl CtxArgs {
    fn base(&self) -> Result<BaseRing> {
        BaseRing::parse(&self.base).map_err(context_error)
    }

    fn context(&self) -> Result<WittContext> {
        let base = self.base()?;
        let pi = match (&self.pi, &base) {
            (Some(s), _) => base.parse_element(s)?,
            (None, BaseRing::FpT(_)) => base.parse_element("t")?,
            (None, BaseRing::Integers) => {
                return Err(WittError::InvalidContext("--pi is required over Z".into()))
            }
        };
        WittContext::new(base, pi, self.len)
    }

    fn algebra(&self, base: &BaseRing) -> Result<Algebra> {
        match &self.alg {
            None => Ok(Algebra::base_itself(base)),
            Some(s) => Algebra::new(base, parse_ring(s)?),
        }
    }

    fn ring(&self) -> Result<Arc<WittRing>> {
        let ctx = self.context()?;
        let alg = self.algebra(&ctx.base)?;
        WittRing::new(ctx, alg)
    }
}

fn context_error(e: WittError) -> WittError {
    match e {
        WittError::Parse { msg, .. } => WittError::InvalidContext(msg),
        other => other,
    }
}

fn exit_code(e: &WittError) -> u8 {
    match e {
        WittError::Parse { .. } => 2,
        WittError::InvalidContext(_)
        | WittError::ContextMismatch(_)
        | WittError::NotPrimeElement { .. }
        | WittError::NotAUnit(_)
        | WittError::NotDivisorClosed(_)
        | WittError::NotRectangular(_)
        | WittError::UnsupportedPresentation(_)
        | WittError::NotSurjective(_) => 3,
        _ => 4,
    }
}

fn error_kind(e: &WittError) -> &'static str {
    match e {
        WittError::DivisionInexact { .. } => "DivisionInexact",
        WittError::NotPrimeElement { .. } => "NotPrimeElement",
        WittError::ContextMismatch(_) => "ContextMismatch",
        WittError::CongruenceViolation { .. } => "CongruenceViolation",
        WittError::InternalIntegrity(_) => "InternalIntegrity",
        WittError::LengthZero => "LengthZero",
        WittError::IndexOutOfRange { .. } => "IndexOutOfRange",
        WittError::NotAUnit(_) => "NotAUnit",
        WittError::TorsionNotSupported(_) => "TorsionNotSupported",
        WittError::NotDivisorClosed(_) => "NotDivisorClosed",
        WittError::NotRectangular(_) => "NotRectangular",
        WittError::LiftViolation(_) => "LiftViolation",
        WittError::UnsupportedPresentation(_) => "UnsupportedPresentation",
        WittError::NotSurjective(_) => "NotSurjective",
        WittError::InvalidContext(_) => "InvalidContext",
        WittError::Parse { .. } => "Parse",
        WittError::BudgetExceeded(_) => "BudgetExceeded",
    }
}

fn context_json(ring: &WittRing) -> Json {
    let ctx = &ring.ctx;
    json!({
        "base": ctx.base.to_string(),
        "pi": ctx.pi_string(),
        "q": ctx.q.to_string(),
        "n": ctx.n.to_string(),
        "traditional_length": (ctx.n + 1).to_string(),
        "algebra": ring.alg.ring.to_string(),
    })
}

fn convention_note(n: usize) -> String {
    format!("normalized W_{n} has {} components; traditionally written W_{}", n + 1, n + 1)
}

fn context_line(ring: &WittRing) -> String {
    let ctx = &ring.ctx;
    format!(
        "W_{} (traditional W_{}) over {}, pi={}, q={}, A={}",
        ctx.n,
        ctx.n + 1,
        ctx.base,
        ctx.pi_string(),
        ctx.q,
        ring.alg.ring
    )
}

struct Output {
    text: String,
    json: Json,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Json) -> Output {
        Output { text, json, ok: true }
    }
}

fn split_list(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur.trim().to_string());
    parts
}

fn witt_output(w: &witt_core::WittVector) -> Output {
    let ring = w.ring();
    let r = &ring.alg.ring;
    let comps: Vec<String> = w.components().iter().map(|c| r.format(c)).collect();
    let mut text = w.format();
    let mut json = json!({
        "context": context_json(ring),
        "components": comps,
        "convention_note": convention_note(ring.ctx.n),
    });
    if ring.is_torsion_free() {
        let g = w.ghost();
        text.push_str(&format!("\nghost: {}", g.format()));
        json["ghost"] = json!(g.entries().iter().map(|e| r.format(e)).collect::<Vec<_>>());
    }
    text.push_str(&format!("\n{}", context_line(ring)));
    Output::new(text, json)
}

fn eval(ctx: &CtxArgs, src: &str) -> Result<Output> {
    let ring = ctx.ring()?;
    Ok(match Evaluator::new(ring.clone(), src).run()? {
        Value::Witt(w) => witt_output(&w),
        Value::Ghost(g) => {
            let r = &g.ring().alg.ring;
            Output::new(
                format!("{}\n{}", g.format(), context_line(g.ring())),
                json!({
                    "context": context_json(g.ring()),
                    "ghost": g.entries().iter().map(|e| r.format(e)).collect::<Vec<_>>(),
                    "convention_note": convention_note(g.ring().ctx.n),
                }),
            )
        }
        Value::Scalar(s) => {
            let text = ring.ctx.base.format(&s);
            Output::new(text.clone(), json!({"context": context_json(&ring), "value": text}))
        }
        Value::Elem(a) => {
            let text = ring.alg.ring.format(&a);
            Output::new(text.clone(), json!({"context": context_json(&ring), "value": text}))
        }
    })
}

fn parse_components(ring: &WittRing, s: &str) -> Result<Vec<Elem>> {
    split_list(s).iter().map(|c| ring.alg.ring.parse(c)).collect()
}

fn structpoly(ctx: &CtxArgs, op: &str, component: Option<usize>) -> Result<Output> {
    let op = OpKind::parse(op)?;
    let context = ctx.context()?;
    let set = structural_polys(&context, op)?;
    let letter = match op {
        OpKind::Sum => "S",
        OpKind::Product => "P",
        OpKind::Negation => "N",
        OpKind::Frobenius => "F",
    };
    let indices: Vec<usize> = match component {
        Some(i) if i < set.polys.len() => vec![i],
        Some(i) => return Err(WittError::IndexOutOfRange { index: i, len: set.polys.len() - 1 }),
        None => (0..set.polys.len()).collect(),
    };
    let mut lines = Vec::new();
    let mut polys = Vec::new();
    for i in indices {
        let text = set.format(i);
        lines.push(format!("{letter}_{i} = {text}"));
        polys.push(json!({
            "index": i.to_string(),
            "poly": text,
            "terms": set.polys[i].as_multi().len().to_string(),
        }));
    }
    let ring = WittRing::over_base(context.clone());
    lines.push(context_line(&ring));
    Ok(Output::new(
        lines.join("\n"),
        json!({
            "context": context_json(&ring),
            "op": op.name(),
            "variables": set.variable_names(),
            "polynomials": polys,
            "convention_note": convention_note(context.n),
        }),
    ))
}

fn present(ctx: &CtxArgs, vars: &str, relations: &[String], style: &str) -> Result<Output> {
    let context = ctx.context()?;
    let style = Style::parse(style)?;
    let vars: Vec<String> = split_list(vars);
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let rel_refs: Vec<&str> = relations.iter().map(|s| s.as_str()).collect();
    let p = RingPresentation::parse(&context.base, &var_refs, &rel_refs)?;
    let lp = lambda_presentation(&p, &context, style)?;
    let json = json!({
        "style": style,
        "n": lp.n.to_string(),
        "generators": lp.generators,
        "relations": lp.relations,
        "convention_note": convention_note(context.n),
    });
    Ok(Output::new(lp.to_string().trim_end().to_string(), json))
}

fn coaction(spec: &PathBuf, elem: &str, len: usize, index: Option<&str>) -> Result<Output> {
    let text = std::fs::read_to_string(spec)
        .map_err(|e| WittError::InvalidContext(format!("cannot read {}: {e}", spec.display())))?;
    let spec = FrobeniusLiftSpec::from_json(&text)?;
    let a = spec.alg.ring.parse(elem)?;
    let lift = spec.check_frobenius_lift();
    if !lift.passed() {
        return Err(WittError::LiftViolation(lift.failures.join("; ")));
    }
    match index {
        None if spec.family.len() == 1 => Ok(witt_output(&spec.coaction(0, &a, len)?)),
        None => Err(WittError::InvalidContext("several primes: pass --index".into())),
        Some(s) => {
            let idx = MultiIndex(
                split_list(s)
                    .iter()
                    .map(|k| k.parse().map_err(|_| WittError::Parse { pos: 0, msg: format!("bad index {k:?}") }))
                    .collect::<Result<Vec<usize>>>()?,
            );
            let w = spec.coaction_multi(&a, &idx)?;
            let r = &spec.alg.ring;
            let comps: BTreeMap<String, String> =
                w.components().iter().map(|(i, c)| (i.to_string(), r.format(c))).collect();
            let ghost: BTreeMap<String, String> =
                w.multi_ghost().iter().map(|(i, c)| (i.to_string(), r.format(c))).collect();
            let mut text = w.format();
            for (i, g) in &ghost {
                text.push_str(&format!("\ngh_{i} = {g}"));
            }
            Ok(Output::new(
                text,
                json!({"primes": spec.family.labels(), "index": idx.to_string(), "components": comps, "ghost": ghost}),
            ))
        }
    }
}

fn bigwitt(set: &str, components: Option<&str>) -> Result<Output> {
    let t: BTreeSet<u64> = split_list(set)
        .iter()
        .map(|d| d.parse().map_err(|_| WittError::Parse { pos: 0, msg: format!("bad divisor {d:?}") }))
        .collect::<Result<_>>()?;
    let ts = truncation_set_context(&t)?;
    let labels = ts.family.labels();
    let mut lines = vec![format!("family {{{}}}, n = {}", labels.join(","), ts.index)];
    let mapping: BTreeMap<String, String> =
        ts.elements().iter().map(|&d| (d.to_string(), ts.index_of(d).to_string())).collect();
    for (d, i) in &mapping {
        lines.push(format!("{d} <-> {i}"));
    }
    let mut json = json!({"family": labels, "index": ts.index.to_string(), "divisors": mapping});
    if let Some(c) = components {
        let ds = ts.elements();
        let vals = split_list(c);
        if vals.len() != ds.len() {
            return Err(WittError::ContextMismatch(format!("{} components for {} divisors", vals.len(), ds.len())));
        }
        let ring = witt_core::Ring::Integers;
        let x: BTreeMap<u64, Elem> =
            ds.iter().zip(&vals).map(|(&d, v)| Ok((d, ring.parse(v)?))).collect::<Result<_>>()?;
        let change = BigWittChange::new(&ts)?;
        let nested = change.classical_to_nested(&x, &ring);
        let m = MultiWittRing::new(ts.family.clone(), ts.index.clone(), Algebra::over_integers(ring.clone()))?;
        let w = m.from_components(&nested)?;
        let ghost = classical_big_ghost(&ring, &x);
        let ints = ghost.iter().map(|(&d, g)| (d, g.as_int().clone())).collect();
        let fails = big_ghost_congruence_failures(&ints);
        let show = |m: &BTreeMap<u64, Elem>| -> BTreeMap<String, String> {
            m.iter().map(|(d, e)| (d.to_string(), ring.format(e))).collect()
        };
        let nested_by_d: BTreeMap<u64, Elem> = nested.iter().map(|(i, e)| (ts.divisor_of(i), e.clone())).collect();
        lines.push(format!("classical ghost: {:?}", show(&ghost)));
        lines.push(format!("nested components: {}", w.format()));
        lines.push(format!("congruences: {}", if fails.is_empty() { "hold".into() } else { format!("fail at {fails:?}") }));
        json["classical_ghost"] = json!(show(&ghost));
        json["nested_components"] = json!(show(&nested_by_d));
        json["congruence_failures"] = json!(fails.iter().map(|(j, p)| format!("{j}:{p}")).collect::<Vec<_>>());
    }
    Ok(Output::new(lines.join("\n"), json))
}

fn report_output(reports: Vec<Report>) -> Output {
    let ok = reports.iter().all(|r| r.passed());
    let mut lines: Vec<String> = reports.iter().map(|r| r.summary()).collect();
    for r in reports.iter().filter(|r| !r.passed()) {
        for f in &r.failures {
            lines.push(format!("  {}: {f}", r.claim_id));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    lines.push(format!("{} claims, {} failed", reports.len(), failed));
    let claims: Vec<Json> = reports
        .iter()
        .map(|r| {
            json!({
                "claim_id": r.claim_id,
                "paper_ref": r.paper_ref,
                "universe_size": r.universe_size.to_string(),
                "failure_count": r.failure_count.to_string(),
                "failures": r.failures,
                "passed": r.passed(),
            })
        })
        .collect();
    Output { text: lines.join("\n"), json: json!({"claims": claims, "passed": ok}), ok }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    ctx: &CtxArgs,
    check: &str,
    j: usize,
    target: Option<&str>,
    spec: Option<&PathBuf>,
    samples: usize,
    seed: u64,
) -> Result<Output> {
    let reports = match check {
        "wn-presentation" => vec![verify_wn_presentation(&ctx.context()?)?],
        "coord-change" => vec![coordinate_change_report(&ctx.context()?)?],
        "structural" => {
            let c = ctx.context()?;
            OpKind::ALL.iter().map(|&op| structural_integrity(&c, op)).collect()
        }
        "delta-axioms" => {
            let path = spec.ok_or_else(|| WittError::InvalidContext("--spec is required".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| WittError::InvalidContext(format!("cannot read {}: {e}", path.display())))?;
            let spec = FrobeniusLiftSpec::from_json(&text)?;
            let mut out = vec![spec.check_frobenius_lift()];
            out.extend(check_delta_axioms(&spec, samples, seed)?.reports);
            out
        }
        "surjective" => {
            let c = ctx.context()?;
            let finite = |s: Option<&String>| -> Result<FiniteAlgebra> {
                let s = s.ok_or_else(|| WittError::InvalidContext("--alg is required".into()))?;
                Ok(FiniteAlgebra { name: s.clone(), pi: c.pi.clone(), alg: Algebra::new(&c.base, parse_ring(s)?)? })
            };
            let target = target.map(|s| s.to_string());
            let phi = FiniteMap::canonical(finite(ctx.alg.as_ref())?, finite(target.as_ref())?)?;
            vec![surjectivity_report(&phi, c.n)?]
        }
        _ => {
            let ring = ctx.ring()?;
            if ring.alg.ring.cardinality().is_none() {
                return Err(WittError::InvalidContext(format!("{check} needs a finite algebra")));
            }
            match check {
                "kernel" => vec![kernel_report(&ring)?],
                "equalizer" => vec![equalizer_report(&ring)?],
                "alpha-hom" => vec![alpha_homomorphism_report(&ring)?],
                "ghost-congruence" => vec![nilpotence_report(&ring)?],
                "v-sequence" => vec![v_sequence_report(&ring, j)?],
                other => return Err(WittError::Parse { pos: 0, msg: format!("unknown check {other:?}") }),
            }
        }
    };
    Ok(report_output(reports))
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Eval { ctx, expr } => eval(ctx, expr),
        Cmd::Ghost { ctx, vector } => {
            let ring = ctx.ring()?;
            let comps = parse_components(&ring, vector)?;
            let w = ring.with_len(comps.len().saturating_sub(1)).vector(comps)?;
            let g = w.ghost();
            let r = &ring.alg.ring;
            Ok(Output::new(
                format!("{}\n{}", g.format(), context_line(w.ring())),
                json!({
                    "context": context_json(w.ring()),
                    "components": w.components().iter().map(|c| r.format(c)).collect::<Vec<_>>(),
                    "ghost": g.entries().iter().map(|c| r.format(c)).collect::<Vec<_>>(),
                    "convention_note": convention_note(w.ctx().n),
                }),
            ))
        }
        Cmd::Unghost { ctx, entries } => {
            let ring = ctx.ring()?;
            let e = parse_components(&ring, entries)?;
            let g = ring.with_len(e.len().saturating_sub(1)).ghost_vector(e)?;
            Ok(witt_output(&g.unghost()?))
        }
        Cmd::Structpoly { ctx, op, component } => structpoly(ctx, op, *component),
        Cmd::Present { ctx, vars, relations, style } => present(ctx, vars, relations, style),
        Cmd::Coaction { spec, elem, len, index } => coaction(spec, elem, *len, index.as_deref()),
        Cmd::Bigwitt { set, components } => bigwitt(set, components.as_deref()),
        Cmd::Verify { ctx, check, j, target, spec, samples, seed } => {
            verify(ctx, check, *j, target.as_deref(), spec.as_ref(), *samples, *seed)
        }
        Cmd::Selftest { suite, size, seed } => {
            let size = Size::parse(size)?;
            Ok(report_output(run_suite(suite, size, *seed)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"error": {"kind": error_kind(&e), "message": e.to_string()}}))
                        .unwrap()
                ),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
