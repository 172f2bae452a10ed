//! Presentations of `Λ_n ⊙ A` in Witt-component (θ) or δ coordinates, the
//! change of coordinates between them, and the presentation of `W_n(R₀)` by
//! the Verschiebung images `V^i(1)`.

use std::fmt;

use serde::Serialize;

use crate::delta::c_alpha;
use crate::error::{Result, WittError};
use crate::report::Report;
use crate::rings::mpoly::evaluate;
use crate::rings::{Algebra, BaseRing, Elem, Ring};
use crate::witt::{WittContext, WittRing};

/// `R₀[x_1..x_r]/(f_1..f_s)`
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub base: BaseRing,
    pub vars: Vec<String>,
    pub ring: Ring,
    pub relations: Vec<Elem>,
}

impl RingPresentation {
    pub fn parse(base: &BaseRing, vars: &[&str], relations: &[&str]) -> Result<RingPresentation> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        if vars.is_empty() {
            return Err(WittError::InvalidContext("a presentation needs at least one variable".into()));
        }
        let ring = Ring::multi(base.ring(), vars.clone())?;
        let relations = relations.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(RingPresentation { base: base.clone(), vars, ring, relations })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Theta,
    Delta,
}

impl Style {
    pub fn parse(s: &str) -> Result<Style> {
        match s {
            "theta" => Ok(Style::Theta),
            "delta" => Ok(Style::Delta),
            _ => Err(WittError::parse(0, format!("unknown coordinate style {s:?}"))),
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Style::Theta => "theta",
            Style::Delta => "delta",
        }
    }
}

/// Polynomial ring `R₀[g_i(x_j) : 0 ≤ i ≤ n]`, generator-major.
#[derive(Clone, Debug)]
pub struct Coordinates {
    pub style: Style,
    pub n: usize,
    pub vars: Vec<String>,
    pub alg: Algebra,
}

impl Coordinates {
    pub fn new(base: &BaseRing, style: Style, vars: &[String], n: usize) -> Result<Coordinates> {
        let names = vars
            .iter()
            .flat_map(|x| (0..=n).map(move |i| format!("{}_{i}({x})", style.prefix())))
            .collect();
        Ok(Coordinates { style, n, vars: vars.to_vec(), alg: Algebra::polynomial(base, names)? })
    }

    pub fn ring(&self) -> &Ring {
        &self.alg.ring
    }

    /// `g_i(x_j)`
    pub fn gen(&self, i: usize, j: usize) -> Elem {
        self.ring().gen(j * (self.n + 1) + i)
    }

    pub fn names(&self) -> Vec<String> {
        self.ring().variable_names()
    }
}

/// Witt components of `f` evaluated at the generic vectors
/// `X_j = (θ_0(x_j), …, θ_n(x_j))`.
pub fn theta_expand(f: &Elem, vars: &[String], ctx: &WittContext) -> Result<(Coordinates, Vec<Elem>)> {
    let coords = Coordinates::new(&ctx.base, Style::Theta, vars, ctx.n)?;
    let w = WittRing::new(ctx.clone(), coords.alg.clone())?;
    let generic: Vec<Elem> = (0..vars.len())
        .map(|j| Elem::Witt((0..=ctx.n).map(|i| coords.gen(i, j)).collect()))
        .collect();
    let target = Ring::Witt(w.clone());
    let value = evaluate(f.as_multi(), &target, &generic, |c| w.scalar(c));
    Ok((coords, value.as_witt().to_vec()))
}

/// The δ-operator of the free δ-ring on `δ_i(x_j)`, computed from the
/// sum, product and constant laws.
pub struct DeltaCalculus {
    pub ctx: WittContext,
    pub coords: Coordinates,
    c: Elem,
}

impl DeltaCalculus {
    pub fn new(ctx: &WittContext, vars: &[String]) -> Result<DeltaCalculus> {
        let coords = Coordinates::new(&ctx.base, Style::Delta, vars, ctx.n)?;
        let (_, c) = c_alpha(&ctx.base, &ctx.pi, ctx.q)?;
        Ok(DeltaCalculus { ctx: ctx.clone(), coords, c })
    }

    fn ring(&self) -> &Ring {
        self.coords.ring()
    }

    fn delta_scalar(&self, r: &Elem) -> Result<Elem> {
        let r0 = self.ctx.base.ring();
        let d = r0.exact_div(&r0.sub(r, &r0.pow(r, self.ctx.q)), &self.ctx.pi)?;
        Ok(self.coords.alg.scalar(&d))
    }

    fn sum(&self, (a, da): (Elem, Elem), (b, db): (Elem, Elem)) -> (Elem, Elem) {
        let ring = self.ring();
        let c = evaluate(self.c.as_multi(), ring, &[a.clone(), b.clone()], |k| ring.constant(k.clone()));
        (ring.add(&a, &b), ring.add(&ring.add(&da, &db), &c))
    }

    fn product(&self, (a, da): (Elem, Elem), (b, db): (Elem, Elem)) -> (Elem, Elem) {
        let ring = self.ring();
        let q = self.ctx.q;
        let pi = self.coords.alg.scalar(&self.ctx.pi);
        let d = ring.add(
            &ring.add(&ring.mul(&da, &ring.pow(&b, q)), &ring.mul(&ring.pow(&a, q), &db)),
            &ring.mul(&pi, &ring.mul(&da, &db)),
        );
        (ring.mul(&a, &b), d)
    }

    /// `δ(g)` for `g` in the δ-coordinate ring.
    pub fn delta(&self, g: &Elem) -> Result<Elem> {
        let ring = self.ring();
        let n = self.coords.n;
        let mut acc = (ring.zero(), ring.zero());
        for (m, c) in g.as_multi().terms() {
            let mut term = (ring.constant(c.clone()), self.delta_scalar(c)?);
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (i, j) = (idx % (n + 1), idx / (n + 1));
                if i == n {
                    return Err(WittError::IndexOutOfRange { index: i + 1, len: n });
                }
                let factor = (self.coords.gen(i, j), self.coords.gen(i + 1, j));
                for _ in 0..e {
                    term = self.product(term, factor.clone());
                }
            }
            acc = self.sum(acc, term);
        }
        Ok(acc.1)
    }

    /// `δ(g) = (Ψ(g) − g^q)/π` with `Ψ(δ_i) = δ_i^q + π δ_{i+1}`.
    pub fn delta_via_lift(&self, g: &Elem) -> Result<Elem> {
        let ring = self.ring();
        let n = self.coords.n;
        let q = self.ctx.q;
        let pi = self.coords.alg.scalar(&self.ctx.pi);
        let mut images = Vec::new();
        for j in 0..self.coords.vars.len() {
            for i in 0..=n {
                let d = self.coords.gen(i, j);
                if i == n {
                    if g.as_multi().degree_in(j * (n + 1) + i) > 0 {
                        return Err(WittError::IndexOutOfRange { index: i + 1, len: n });
                    }
                    images.push(ring.pow(&d, q));
                } else {
                    images.push(ring.add(&ring.pow(&d, q), &ring.mul(&pi, &self.coords.gen(i + 1, j))));
                }
            }
        }
        let psi = evaluate(g.as_multi(), ring, &images, |c| ring.constant(c.clone()));
        ring.exact_div(&ring.sub(&psi, &ring.pow(g, q)), &pi)
    }
}

/// `(δ^0(f), …, δ^n(f))` in δ-coordinates.
pub fn delta_expand(f: &Elem, vars: &[String], ctx: &WittContext) -> Result<(Coordinates, Vec<Elem>)> {
    let calc = DeltaCalculus::new(ctx, vars)?;
    let ring = calc.coords.ring().clone();
    let values: Vec<Elem> = (0..vars.len()).map(|j| calc.coords.gen(0, j)).collect();
    let mut out = vec![evaluate(f.as_multi(), &ring, &values, |c| ring.constant(c.clone()))];
    for i in 1..=ctx.n {
        let next = calc.delta(&out[i - 1])?;
        out.push(next);
    }
    Ok((calc.coords, out))
}

/// The triangular polynomial maps between `(δ_0, …, δ_n)` and
/// `(θ_0, …, θ_n)` for a single generator `x`.
#[derive(Clone, Debug)]
pub struct CoordChange {
    pub ctx: WittContext,
    pub delta: Coordinates,
    pub theta: Coordinates,
    /// `θ_i` as polynomials in the δ's.
    pub theta_in_delta: Vec<Elem>,
    /// `δ_i` as polynomials in the θ's.
    pub delta_in_theta: Vec<Elem>,
}

pub fn coord_change(ctx: &WittContext) -> Result<CoordChange> {
    let x = vec!["x".to_string()];
    let delta = Coordinates::new(&ctx.base, Style::Delta, &x, ctx.n)?;
    let theta = Coordinates::new(&ctx.base, Style::Theta, &x, ctx.n)?;
    let dr = delta.ring().clone();
    let pi = delta.alg.scalar(&ctx.pi);
    // ghost entries of the coaction: gh_k = Ψ^k(δ_0)
    let images: Vec<Elem> = (0..=ctx.n)
        .map(|i| {
            let d = delta.gen(i, 0);
            if i == ctx.n {
                dr.pow(&d, ctx.q)
            } else {
                dr.add(&dr.pow(&d, ctx.q), &dr.mul(&pi, &delta.gen(i + 1, 0)))
            }
        })
        .collect();
    let mut ghost = vec![delta.gen(0, 0)];
    for k in 1..=ctx.n {
        let prev = &ghost[k - 1];
        ghost.push(evaluate(prev.as_multi(), &dr, &images, |c| dr.constant(c.clone())));
    }
    let w = WittRing::new(ctx.clone(), delta.alg.clone())?;
    let theta_in_delta = w
        .unghost_of(&ghost)
        .map_err(|e| WittError::InternalIntegrity(format!("coordinate change: {e}")))?;

    let tr = theta.ring().clone();
    let mut delta_in_theta: Vec<Elem> = Vec::new();
    for (i, t) in theta_in_delta.iter().enumerate() {
        let rest = dr.sub(t, &delta.gen(i, 0));
        if rest.as_multi().degree_in(i) > 0 || (i + 1..=ctx.n).any(|k| t.as_multi().degree_in(k) > 0) {
            return Err(WittError::InternalIntegrity(format!("coordinate change is not triangular at {i}")));
        }
        let mut values = delta_in_theta.clone();
        values.resize(ctx.n + 1, tr.zero());
        let rest_theta = evaluate(rest.as_multi(), &tr, &values, |c| tr.constant(c.clone()));
        delta_in_theta.push(tr.sub(&theta.gen(i, 0), &rest_theta));
    }
    Ok(CoordChange { ctx: ctx.clone(), delta, theta, theta_in_delta, delta_in_theta })
}

impl CoordChange {
    /// `θ_i(values)` for δ-coordinates `values`, inside `target`.
    pub fn to_theta(&self, target: &Ring, values: &[Elem]) -> Vec<Elem> {
        self.theta_in_delta
            .iter()
            .map(|t| evaluate(t.as_multi(), target, values, |c| target.constant(c.clone())))
            .collect()
    }

    pub fn to_delta(&self, target: &Ring, values: &[Elem]) -> Vec<Elem> {
        self.delta_in_theta
            .iter()
            .map(|t| evaluate(t.as_multi(), target, values, |c| target.constant(c.clone())))
            .collect()
    }

    /// Indices `i` with `δ_i ≠ θ_i` as polynomials.
    pub fn differing(&self) -> Vec<usize> {
        (0..=self.ctx.n).filter(|&i| self.theta_in_delta[i] != self.delta.gen(i, 0)).collect()
    }
}

/// Generators and expanded relations of `Λ_n ⊙ A`.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaPresentation {
    pub style: Style,
    pub n: usize,
    pub generators: Vec<String>,
    pub relations: Vec<NamedRelation>,
    #[serde(skip)]
    pub coords: Option<Coordinates>,
    #[serde(skip)]
    pub polys: Vec<Elem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedRelation {
    pub name: String,
    pub poly: String,
}

pub fn lambda_presentation(p: &RingPresentation, ctx: &WittContext, style: Style) -> Result<LambdaPresentation> {
    if p.base != ctx.base {
        return Err(WittError::ContextMismatch(format!("{} vs {}", p.base, ctx.base)));
    }
    let coords = Coordinates::new(&ctx.base, style, &p.vars, ctx.n)?;
    let mut relations = Vec::new();
    let mut polys = Vec::new();
    for (k, f) in p.relations.iter().enumerate() {
        let (c, expanded) = match style {
            Style::Theta => theta_expand(f, &p.vars, ctx)?,
            Style::Delta => delta_expand(f, &p.vars, ctx)?,
        };
        for (i, g) in expanded.into_iter().enumerate() {
            relations.push(NamedRelation {
                name: format!("{}_{i}(f{})", style.prefix(), k + 1),
                poly: c.ring().format(&g),
            });
            polys.push(g);
        }
    }
    Ok(LambdaPresentation {
        style,
        n: ctx.n,
        generators: coords.names(),
        relations,
        coords: Some(coords),
        polys,
    })
}

impl fmt::Display for LambdaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        if self.relations.is_empty() {
            writeln!(f, "relations: none")?;
        }
        for r in &self.relations {
            writeln!(f, "{} = {}", r.name, r.poly)?;
        }
        Ok(())
    }
}

/// `x_i = V^i(1)` satisfy `x_i x_j = π^i x_j` for `1 ≤ i ≤ j ≤ n` in `W_n(R₀)`.
pub fn verify_wn_presentation(ctx: &WittContext) -> Result<Report> {
    let ring = WittRing::over_base(ctx.clone());
    let n = ctx.n;
    let mut report = Report::new(
        format!("wn-presentation[{ctx}]"),
        "W_n(R) = R[x_1..x_n]/(x_i x_j - pi^i x_j), x_i = V^i(1)",
    );
    let xs: Vec<_> = (0..=n).map(|i| ring.with_len(n - i).one().verschiebung(i)).collect();
    let r0 = ctx.base.ring();
    for i in 1..=n {
        for j in i..=n {
            let lhs = xs[i].mul(&xs[j])?;
            let rhs = xs[j].scale(&r0.pow(&ctx.pi, i as u64));
            report.check(lhs == rhs, || {
                format!("x_{i} x_{j} = {} but pi^{i} x_{j} = {}", lhs.format(), rhs.format())
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn poly(base: &BaseRing, v: &[&str], s: &str) -> Elem {
        Ring::multi(base.ring(), vars(v)).unwrap().parse(s).unwrap()
    }

    #[test]
    fn theta_examples() {
        let z = BaseRing::Integers;
        let ctx = WittContext::integers(2, 1).unwrap();
        let (c, e) = theta_expand(&poly(&z, &["x", "y"], "x + y"), &vars(&["x", "y"]), &ctx).unwrap();
        assert_eq!(c.ring().format(&e[1]), "-theta_0(x)*theta_0(y) + theta_1(x) + theta_1(y)");
        let (c, e) = theta_expand(&poly(&z, &["x"], "x"), &vars(&["x"]), &ctx).unwrap();
        assert_eq!(e, vec![c.gen(0, 0), c.gen(1, 0)]);
        let (c, e) = theta_expand(&poly(&z, &["x"], "0"), &vars(&["x"]), &ctx).unwrap();
        assert!(e.iter().all(|g| c.ring().is_zero(g)));
    }

    #[test]
    fn delta_examples() {
        let z = BaseRing::Integers;
        let ctx = WittContext::integers(2, 1).unwrap();
        let (c, e) = delta_expand(&poly(&z, &["x", "y"], "x*y"), &vars(&["x", "y"]), &ctx).unwrap();
        let r = c.ring();
        assert_eq!(
            e[1],
            r.parse("delta_1(x)*delta_0(y)^2 + delta_0(x)^2*delta_1(y) + 2*delta_1(x)*delta_1(y)").unwrap()
        );
        let (c, e) = delta_expand(&poly(&z, &["x", "y"], "x + y"), &vars(&["x", "y"]), &ctx).unwrap();
        assert_eq!(e[1], c.ring().parse("delta_1(x) + delta_1(y) - delta_0(x)*delta_0(y)").unwrap());
    }

    #[test]
    fn structural_delta_matches_lift() {
        for (p, n) in [(2, 2), (3, 2)] {
            let ctx = WittContext::integers(p, n).unwrap();
            let calc = DeltaCalculus::new(&ctx, &vars(&["x", "y"])).unwrap();
            let r = calc.coords.ring().clone();
            for s in ["delta_0(x)*delta_0(y) + 3", "delta_0(x)^2 - delta_1(y) + 5*delta_0(y)"] {
                let g = r.parse(s).unwrap();
                assert_eq!(calc.delta(&g).unwrap(), calc.delta_via_lift(&g).unwrap());
            }
        }
    }

    #[test]
    fn coordinate_change_low_indices() {
        let ctx = WittContext::integers(2, 2).unwrap();
        let cc = coord_change(&ctx).unwrap();
        assert_eq!(cc.differing(), vec![2]);
        let dr = cc.delta.ring();
        assert_eq!(
            cc.theta_in_delta[2],
            dr.parse("delta_2(x) + delta_0(x)^2*delta_1(x) + delta_1(x)^2").unwrap()
        );
        // round trip on generic coordinates
        let tr = cc.theta.ring();
        let thetas: Vec<Elem> = (0..=2).map(|i| cc.theta.gen(i, 0)).collect();
        let deltas = cc.to_delta(tr, &thetas);
        assert_eq!(cc.to_theta(tr, &deltas), thetas);
    }

    #[test]
    fn styles_agree_through_coordinate_change() {
        for p in [2, 3] {
            let ctx = WittContext::integers(p, 2).unwrap();
            let cc = coord_change(&ctx).unwrap();
            let vs = vars(&["x", "y"]);
            for s in ["x*y + 1", "x^2 - 2*y", "x + y"] {
                let f = poly(&BaseRing::Integers, &["x", "y"], s);
                let (dc, de) = delta_expand(&f, &vs, &ctx).unwrap();
                let (_, te) = theta_expand(&f, &vs, &ctx).unwrap();
                let dr = dc.ring().clone();
                let via_delta = cc.to_theta(&dr, &de);
                let subst: Vec<Elem> = (0..2)
                    .flat_map(|j| {
                        let ds: Vec<Elem> = (0..=2).map(|i| dc.gen(i, j)).collect();
                        cc.to_theta(&dr, &ds)
                    })
                    .collect();
                let via_theta: Vec<Elem> = te
                    .iter()
                    .map(|g| evaluate(g.as_multi(), &dr, &subst, |c| dr.constant(c.clone())))
                    .collect();
                assert_eq!(via_delta, via_theta, "p = {p}, f = {s}");
            }
        }
    }

    #[test]
    fn presentations() {
        let z = BaseRing::Integers;
        let ctx = WittContext::integers(2, 1).unwrap();
        let free = RingPresentation::parse(&z, &["x"], &[]).unwrap();
        let lp = lambda_presentation(&free, &ctx, Style::Theta).unwrap();
        assert_eq!(lp.generators, vec!["theta_0(x)", "theta_1(x)"]);
        assert!(lp.relations.is_empty());
        let sq = RingPresentation::parse(&z, &["x"], &["x^2"]).unwrap();
        let lp = lambda_presentation(&sq, &ctx, Style::Theta).unwrap();
        assert_eq!(lp.relations.len(), 2);
        assert_eq!(lp.relations[0].poly, "theta_0(x)^2");
        assert_eq!(lp.relations[1].poly, "2*theta_0(x)^2*theta_1(x) + 2*theta_1(x)^2");
    }

    #[test]
    fn wn_presentation() {
        for p in [2, 3] {
            for n in 0..=3 {
                assert!(verify_wn_presentation(&WittContext::integers(p, n).unwrap()).unwrap().passed());
            }
        }
        let r = verify_wn_presentation(&WittContext::fpt(3, "t", 2).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.universe_size, 3);
    }
}
