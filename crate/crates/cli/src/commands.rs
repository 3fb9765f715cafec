use crate::cert::{CliError, Outcome};
use crate::config::{Ctx, FamilyConfig, RunConfig};
use bigal::families::{
    build_coideal, build_family, coideal_host, enumerate_coideal_data, family_for_datum, family_g_twist_relation,
    verify_family_simple, verify_lifting, verify_tw_coidl, CoidealDatum, CoidealKind, Family, FamilySpec,
};
use bigal::galois::{bigal_equivalence, neutral_check, phi_check, verify_group_law, BiGal, KxKn, Setting};
use bigal::hopf::{h_chi, h_double, taft, taft_inverse, verify_consequences, verify_hopf, Character};
use bigal::morphism::iso_cop;
use bigal::report::Report;
use bigal::twist::{verify_twist_presentation, Cocycle2};
use serde_json::{json, Value};
use std::sync::Arc;

pub fn verify_hopf_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (f, n) = (&ctx.field, ctx.n);
    let mut hopfs = vec![taft(f, n)?, taft_inverse(f, n)?, h_double(f, n)?];
    if cfg.chi1.is_some() || cfg.chi2.is_some() {
        let one = || ["1".to_string(), "1".to_string()];
        let c1 = cfg.chi1.clone().unwrap_or_else(one);
        let c2 = cfg.chi2.clone().unwrap_or_else(one);
        let chi1 = Character::from_generators(ctx.group, &ctx.scalar(&c1[0])?, &ctx.scalar(&c1[1])?)?;
        let chi2 = Character::from_generators(ctx.group, &ctx.scalar(&c2[0])?, &ctx.scalar(&c2[1])?)?;
        hopfs.push(h_chi(f, n, &chi1, &chi2)?);
    }
    let mut reports = Vec::new();
    let mut dims = Vec::new();
    for h in &hopfs {
        reports.push(verify_hopf(h));
        reports.push(verify_consequences(h));
        dims.push(json!({ "name": h.name, "dim": h.dim() }));
    }
    let (_, _, m) = iso_cop(f, n)?;
    let images: Vec<_> = m.images.iter().map(bigal::json::vector_json).collect();
    reports.push(m.report);
    Ok(Outcome {
        reports,
        result: json!({ "hopf_algebras": dims, "iso_cop": { "map": "g ↦ g, y ↦ x g^-1", "images": images } }),
        csv: None,
    })
}

fn family_spec(ctx: &Ctx, c: &FamilyConfig) -> Result<FamilySpec, CliError> {
    let family = ctx.family(c)?;
    let default_sub = if matches!(family, Family::L { .. }) { "diag" } else { "whole" };
    let sub = ctx.subgroup(c.subgroup.as_deref(), default_sub)?;
    let psi = match c.psi {
        Some(m) => ctx.bicharacter(sub, m)?,
        None => Cocycle2::trivial(&ctx.field, sub),
    };
    Ok(FamilySpec::new(ctx.n, family, psi))
}

pub fn family_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let c = cfg.family.as_ref().ok_or_else(|| CliError::Input("missing family".into()))?;
    let spec = family_spec(ctx, c)?;
    let h = Arc::new(h_double(&ctx.field, ctx.n)?);
    let simple = verify_family_simple(&spec, h.clone())?;
    let (lift, search) = verify_lifting(&spec, h.clone())?;
    let mut reports = vec![simple.report.clone(), lift];
    let mut result = json!({
        "spec": spec.to_string(),
        "dim": simple.dim,
        "expected_dim": spec.expected_dim(),
        "simplicity": simple.simplicity,
        "coinvariant_dim": simple.coinvariant_dim,
        "lifting": { "graded": spec.graded().to_string(), "found": search.found(), "candidates_tried": search.candidates_tried },
    });
    if let Some([i, j]) = c.g_twist {
        let (r, target, _) = family_g_twist_relation(&spec, ctx.group.elem(i, j), h)?;
        result["g_twist"] = json!({ "by": ctx.group.label(ctx.group.elem(i, j)), "target": target.to_string() });
        reports.push(r);
    }
    Ok(Outcome { reports, result, csv: None })
}

pub fn coideal_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let c = cfg.coideal.as_ref().ok_or_else(|| CliError::Input("missing coideal".into()))?;
    let kind = ctx.coideal_kind(c)?;
    let default_sub = if matches!(kind, CoidealKind::Xi(_)) { "diag" } else { "whole" };
    let sub = ctx.subgroup(c.subgroup.as_deref(), default_sub)?;
    if let Some(m) = c.psi {
        let psi = ctx.bicharacter(ctx.group.whole(), m)?;
        let t = verify_tw_coidl(kind, sub, &psi)?;
        let found = t.search.as_ref().is_some_and(|s| s.found());
        return Ok(Outcome {
            result: json!({ "datum": t.datum, "psi": psi.to_json(), "target": t.target, "found": found }),
            reports: vec![t.report],
            csv: None,
        });
    }
    let datum = CoidealDatum { n: ctx.n, kind, sub, chars: None };
    let host = Arc::new(coideal_host(&ctx.field, &datum)?);
    let k = build_coideal(&datum, host)?;
    let basis: Vec<String> = k.algebra.algebra.labels().to_vec();
    Ok(Outcome {
        result: json!({ "datum": k.datum, "dim": k.algebra.dim(), "expected_dim": datum.expected_dim(), "basis": basis }),
        reports: vec![k.report],
        csv: None,
    })
}

pub fn twist_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let samples = if cfg.psi.is_empty() {
        vec![[[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [1, 0]]]
    } else {
        cfg.psi.clone()
    };
    let mut reports = Vec::new();
    let mut results = Vec::new();
    for m in samples {
        let psi = ctx.bicharacter(ctx.group.whole(), m)?;
        let t = verify_twist_presentation(&ctx.field, ctx.n, &psi)?;
        let mut r = t.report.clone();
        r.record("witness found", t.witness.is_some(), format!("{} candidates", t.candidates_tried));
        reports.push(r);
        results.push(serde_json::to_value(&t).map_err(|e| CliError::Io(e.to_string()))?);
    }
    Ok(Outcome { reports, result: Value::Array(results), csv: None })
}

fn bigal(ctx: &Ctx, p: &Option<[String; 2]>, what: &str) -> Result<BiGal, CliError> {
    let (xi, mu) = ctx.pair(p, what)?;
    Ok(BiGal::new(xi, mu)?)
}

pub fn grouplaw_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let lhs = bigal(ctx, &cfg.lhs, "lhs (ξ′, μ′)")?;
    let rhs = bigal(ctx, &cfg.rhs, "rhs (ξ, μ)")?;
    let s = Setting::new(&ctx.field, ctx.n)?;
    let g = verify_group_law(&s, &lhs, &rhs)?;
    let grid = vec![(lhs.xi.clone(), lhs.mu.clone()), (rhs.xi.clone(), rhs.mu.clone())];
    let mut kxk = phi_check(&ctx.field, ctx.n, &grid)?;
    let via = KxKn::from_bigal(ctx.n, &lhs).mul(&KxKn::from_bigal(ctx.n, &rhs))?;
    kxk.record(
        "product matches (ā,b)·(c̄,d)",
        KxKn::from_bigal(ctx.n, &g.product) == via,
        format!("({}, {})", via.a, via.b),
    );
    let mut reports = vec![g.report.clone(), kxk];
    if cfg.neutral {
        reports.push(neutral_check(&s)?.0);
    }
    let result = serde_json::to_value(&g).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(Outcome { reports, result, csv: None })
}

pub fn bigal_equiv_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = bigal(ctx, &cfg.lhs, "lhs (ξ, μ)")?;
    let b = bigal(ctx, &cfg.rhs, "rhs (ξ′, μ′)")?;
    let s = Setting::new(&ctx.field, ctx.n)?;
    let e = bigal_equivalence(&s, &a, &b)?;
    let result = serde_json::to_value(&e).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(Outcome { reports: vec![e.report], result, csv: None })
}

/// A member with nonzero deformation parameters lifting the datum.
fn lifting_sample(ctx: &Ctx, d: &CoidealDatum) -> FamilySpec {
    let f = &ctx.field;
    let mut spec = family_for_datum(d, Cocycle2::trivial(f, d.sub.clone()));
    spec.family = match spec.family {
        Family::L { xi, .. } => Family::L { xi, mu: f.one() },
        Family::K11 { .. } => {
            let xi = if d.sub.contains(ctx.group.elem(1, -1)) { f.one() } else { f.zero() };
            Family::K11 { a: f.one(), b: f.int(2), xi }
        }
        Family::K01 { .. } => Family::K01 { a: f.one() },
        Family::K10 { .. } => Family::K10 { b: f.one() },
        Family::Tga => Family::Tga,
    };
    spec
}

/// `ξ` enters the class only through `ξⁿ`.
fn class_key(ctx: &Ctx, spec: &FamilySpec) -> Result<String, CliError> {
    Ok(match &spec.family {
        Family::L { xi, mu } => format!("L|F={}|xi^n={}|mu={}", spec.sub(), xi.pow(ctx.n as i64)?, mu),
        _ => spec.to_string(),
    })
}

pub fn atlas_cmd(ctx: &Ctx, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let xi_text = cfg.xi.clone().unwrap_or_else(|| vec!["1".into(), "q".into(), "2".into()]);
    let xis = xi_text.iter().map(|t| ctx.scalar(t)).collect::<Result<Vec<_>, _>>()?;
    let max_dim = cfg.max_dim.unwrap_or(27);
    let h = Arc::new(h_double(&ctx.field, ctx.n)?);
    let data = enumerate_coideal_data(&ctx.field, ctx.n, &xis, None)?;
    let mut wtr = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(e.to_string());
    wtr.write_record([
        "datum", "datum_dim", "datum_verified", "spec", "dim", "simple", "trivial_coinv", "lifting_match", "class_key",
    ])
    .map_err(csv_err)?;
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for d in &data {
        let k = build_coideal(d, h.clone())?;
        let spec = lifting_sample(ctx, d);
        let key = class_key(ctx, &spec)?;
        let (simple, triv, lift) = if spec.expected_dim() <= max_dim {
            let s = verify_family_simple(&spec, h.clone())?;
            let (lr, _) = verify_lifting(&spec, h.clone())?;
            let tw = verify_tw_coidl(d.kind.clone(), d.sub.clone(), &Cocycle2::trivial(&ctx.field, ctx.group.whole()))?;
            let lifted = lr.passed() && tw.passed();
            let mut r = s.report.clone();
            r.extend("lifting", lr);
            r.extend("graded ≅ coideal", tw.report);
            reports.push(r);
            let yn = |b: bool| if b { "yes" } else { "no" }.to_string();
            (yn(s.simplicity.simple), yn(s.coinvariant_dim == 1), yn(lifted))
        } else {
            build_family(&spec, h.clone())?;
            ("skipped".into(), "skipped".into(), "skipped".into())
        };
        let row = [
            k.datum.clone(),
            k.algebra.dim().to_string(),
            if k.report.passed() { "yes" } else { "no" }.to_string(),
            spec.to_string(),
            spec.expected_dim().to_string(),
            simple,
            triv,
            lift,
            key,
        ];
        wtr.write_record(&row).map_err(csv_err)?;
        rows.push(row.to_vec());
        reports.push(k.report);
    }
    reports.push(equivalence_grid(ctx, &xis)?);
    let csv = String::from_utf8(wtr.into_inner().map_err(|e| CliError::Io(e.to_string()))?)
        .map_err(|e| CliError::Io(e.to_string()))?;
    let result = json!({
        "subgroups": ctx.group.subgroups().len(),
        "data": data.len(),
        "xi_samples": xi_text,
        "max_dim": max_dim,
        "rows": rows.len(),
    });
    Ok(Outcome { reports, result, csv: Some(csv) })
}

/// Over `ℓ(ξ, μ)` for the `ξ` samples and `μ ∈ {0, 1}`: equal class keys
/// iff the objects are equivalent.
fn equivalence_grid(ctx: &Ctx, xis: &[bigal::Scalar]) -> Result<Report, CliError> {
    let mut r = Report::new("equivalence grid");
    if xis.is_empty() {
        return Ok(r);
    }
    let s = Setting::new(&ctx.field, ctx.n)?;
    let f = &ctx.field;
    let mut objs = Vec::new();
    for xi in xis.iter().filter(|x| !x.is_zero()) {
        for mu in [f.zero(), f.one()] {
            objs.push(BiGal::new(xi.clone(), mu)?);
        }
    }
    let key = |p: &BiGal| -> Result<String, CliError> {
        class_key(ctx, &FamilySpec::new(ctx.n, Family::L { xi: p.xi.clone(), mu: p.mu.clone() }, Cocycle2::trivial(f, ctx.group.diagonal())))
    };
    let mut bad = None;
    let mut count = 0;
    for a in &objs {
        for b in &objs {
            let e = bigal_equivalence(&s, a, b)?;
            count += 1;
            if !e.report.passed() || e.equivalent != (key(a)? == key(b)?) {
                bad.get_or_insert(format!("{a} vs {b}: {}", e.reason));
            }
        }
    }
    r.record("class key separates ∼-classes", bad.is_none(), bad.unwrap_or_default());
    if let Some(c) = r.checks.last_mut() {
        c.evaluated = count;
    }
    Ok(r)
}
