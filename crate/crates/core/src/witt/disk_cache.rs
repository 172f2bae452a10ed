//! Optional on-disk store for structural polynomials, enabled by setting
//! `WITT_CACHE_DIR`. Entries are versioned JSON keyed by a context fingerprint;
//! anything unreadable or mismatched is ignored and regenerated.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::structural::{OpKind, StructuralPolynomialSet};
use super::WittContext;
use crate::rings::{Algebra, Elem, MPoly, Mono};

const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    fingerprint: String,
    variables: Vec<String>,
    /// One list of `(coefficient, exponents)` per component.
    polys: Vec<Vec<(String, Vec<u32>)>>,
}

pub(crate) fn fingerprint(ctx: &WittContext, op: OpKind) -> String {
    format!("{}|{}|pi={}|q={}|n={}", op, ctx.base, ctx.pi_string(), ctx.q, ctx.n)
}

fn path_for(ctx: &WittContext, op: OpKind) -> Option<PathBuf> {
    let dir = std::env::var_os("WITT_CACHE_DIR")?;
    let name: String = fingerprint(ctx, op)
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    Some(PathBuf::from(dir).join(format!("structpoly-v{VERSION}-{name}.json")))
}

pub(crate) fn load(ctx: &WittContext, op: OpKind) -> Option<StructuralPolynomialSet> {
    let path = path_for(ctx, op)?;
    let text = std::fs::read_to_string(path).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    if entry.version != VERSION || entry.fingerprint != fingerprint(ctx, op) {
        return None;
    }
    let alg = Algebra::polynomial(&ctx.base, entry.variables.clone()).ok()?;
    let base = ctx.base.ring();
    let nvars = entry.variables.len();
    let mut polys = Vec::with_capacity(entry.polys.len());
    for terms in entry.polys {
        let mut parsed = Vec::with_capacity(terms.len());
        for (c, exps) in terms {
            if exps.len() != nvars {
                return None;
            }
            parsed.push((Mono(exps.into_boxed_slice()), base.parse(&c).ok()?));
        }
        polys.push(Elem::Multi(MPoly::from_terms(&base, parsed)));
    }
    if polys.len() != op.output_len(ctx.n) {
        return None;
    }
    Some(StructuralPolynomialSet { op, ctx: ctx.clone(), ring: alg.ring, polys })
}

/// Best effort; write failures only cost a later resynthesis.
pub(crate) fn store(set: &StructuralPolynomialSet) {
    let Some(path) = path_for(&set.ctx, set.op) else { return };
    let base = set.ctx.base.ring();
    let polys = set
        .polys
        .iter()
        .map(|p| {
            p.as_multi()
                .terms()
                .iter()
                .map(|(m, c)| (base.format(c), m.0.to_vec()))
                .collect()
        })
        .collect();
    let entry = Entry {
        version: VERSION,
        fingerprint: fingerprint(&set.ctx, set.op),
        variables: set.variable_names(),
        polys,
    };
    if let Ok(text) = serde_json::to_string(&entry) {
        let _ = std::fs::create_dir_all(path.parent().unwrap());
        let tmp = path.with_extension("tmp");
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(tmp, path);
        }
    }
}
