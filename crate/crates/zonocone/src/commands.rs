//! The analyses behind each subcommand, rendered to text or JSON.

use std::fmt::Write;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use zonocone_core::decompose::{decompose, identify_ray, verify_with};
use zonocone_core::defcone::{formula_report, two_face_count};
use zonocone_core::deformation::build_polytope;
use zonocone_core::experiments::{census_table, CensusCheck};
use zonocone_core::{Census, DefCone, FlipGraph, Graph, Limits};

use crate::census::par_census;
use crate::error::{AppError, AppResult};
use crate::input::{load_lengths, summand_name};
use crate::json::{export_cone, export_decomposition, export_polytope};

#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub limits: Limits,
    pub json: bool,
}

/// Rendered output and whether the validation it carries passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn render(ctx: &Ctx, value: Value, text: String, ok: bool) -> Outcome {
    let text = if ctx.json {
        serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n"
    } else {
        text
    };
    Outcome { text, ok }
}

pub fn info(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let t = g.triangles().len();
    let value = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "triangles": t,
        "cliques": g.clique_count(),
        "clique_number": g.clique_number(),
        "k4_free": g.is_k4_free(),
        "triangle_free": g.is_triangle_free(),
    });
    let text = format!(
        "n: {}\nedges: {}\ntriangles: {t}\ncliques: {}\nclique_number: {}\nk4_free: {}\ntriangle_free: {}\n",
        g.n(),
        g.edge_count(),
        g.clique_count(),
        g.clique_number(),
        g.is_k4_free(),
        g.is_triangle_free()
    );
    Ok(render(ctx, value, text, true))
}

pub fn cone(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    let s = dc.solve(&ctx.limits)?;
    let r = formula_report(&dc, &s);
    let status = |ok: bool| if ok { "ok" } else { "MISMATCH" };
    let value = json!({
        "ambient_dim": r.ambient_dim,
        "equalities": dc.cone().equalities.nrows(),
        "dim": r.dim,
        "expected_dim": r.expected_dim,
        "facets": r.facets,
        "expected_facets": r.expected_facets,
        "rays": r.rays,
        "dim_ok": r.dim_ok(),
        "facets_ok": r.facets_ok(),
    });
    let text = format!(
        "ambient_dim: {}\nequalities: {}\ndim: {}\nfacets: {}\nrays: {}\ndim_formula: {} (cliques {})\nfacet_formula: {} (expected {})\n",
        r.ambient_dim,
        dc.cone().equalities.nrows(),
        r.dim,
        r.facets,
        r.rays,
        status(r.dim_ok()),
        r.expected_dim,
        status(r.facets_ok()),
        r.expected_facets
    );
    Ok(render(ctx, value, text, r.ok()))
}

pub fn cone_export(g: &Graph, limits: &Limits) -> AppResult<String> {
    let dc = DefCone::new(g, limits)?;
    Ok(serde_json::to_string(&export_cone(&dc))? + "\n")
}

pub fn rays(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    let rays = dc.solve(&ctx.limits)?.into_rays();
    let named = g.is_k4_free();
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in &rays.rays {
        let entries: Vec<i64> = r
            .iter()
            .map(|v| v.to_i64().ok_or(zonocone_core::Error::Overflow))
            .collect::<Result<_, _>>()?;
        let name = if named { identify_ray(&dc, r)?.map(summand_name) } else { None };
        let line = entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        match &name {
            Some(n) => writeln!(text, "{line}\t{n}"),
            None => writeln!(text, "{line}"),
        }
        .expect("writing to a String");
        rows.push(json!({ "ray": entries, "summand": name }));
    }
    Ok(render(ctx, json!({ "rays": rows }), text, true))
}

pub fn fvector(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    let s = dc.solve(&ctx.limits)?;
    let f = s.f_vector(ctx.limits.max_fvector_rays)?;
    let mut value = json!({ "f_vector": f });
    let mut text = f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n";
    let mut ok = true;
    if g.is_k4_free() {
        let c = two_face_count(g, &ctx.limits)?;
        ok = c.computed == c.formula;
        value["two_face_formula"] = json!(c.formula);
        writeln!(text, "two_faces: {} (formula {})", c.computed, c.formula).expect("writing to a String");
    }
    Ok(render(ctx, value, text, ok))
}

pub fn decompose_lengths(ctx: &Ctx, g: &Graph, lengths: &str) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    let l = load_lengths(&dc, lengths)?;
    let d = decompose(&dc, &l)?;
    let verified = d.lengths(&dc) == l;
    let report = export_decomposition(&d, verified);
    let mut text = String::new();
    for (e, w) in &d.omega_edge {
        writeln!(text, "e({},{}) {w}", e[0], e[1]).expect("writing to a String");
    }
    for ((t, w), (_, s)) in d.omega_tri.iter().zip(d.epsilon()) {
        writeln!(text, "t({},{},{}) {w} epsilon {s}", t[0], t[1], t[2]).expect("writing to a String");
    }
    writeln!(text, "verified: {verified}").expect("writing to a String");
    Ok(render(ctx, serde_json::to_value(report)?, text, verified))
}

pub fn polytope(ctx: &Ctx, g: &Graph, lengths: &str) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    let l = load_lengths(&dc, lengths)?;
    if !dc.contains(&l)? {
        return Err(AppError::input("lengths are not in the deformation cone"));
    }
    let flips = FlipGraph::new(dc.edges(), ctx.limits.max_orientations)?;
    let p = build_polytope(&flips, &l)?;
    let export = export_polytope(&p);
    let mut text = String::new();
    for v in &export.vertices {
        writeln!(text, "{}", v.join(" ")).expect("writing to a String");
    }
    writeln!(text, "dim: {}", export.dim).expect("writing to a String");
    Ok(render(ctx, serde_json::to_value(export)?, text, true))
}

fn census_json(c: &Census) -> Value {
    json!({
        "census": c.counts.iter().map(|(d, n)| [d, n]).collect::<Vec<_>>(),
        "total": c.total(),
    })
}

pub fn census(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let c = par_census(g, &ctx.limits)?;
    let text = format!("{c}\n");
    Ok(render(ctx, census_json(&c), text, true))
}

/// Census rows for a graph family; for `cyc3` the low dimensions are checked
/// against `3(n - 2)`, `6n - 16` and `23(n - 3)`.
pub fn table(ctx: &Ctx, family: &str, n_min: usize, n_max: usize) -> AppResult<Outcome> {
    let make: fn(usize) -> zonocone_core::Result<Graph> = match family {
        "cyc3" => Graph::cyc3,
        "wedge_k4" => Graph::wedge_k4,
        _ => return Err(AppError::input(format!("unknown family {family:?}; use cyc3 or wedge_k4"))),
    };
    if n_min < 4 || n_min > n_max {
        return Err(AppError::input(format!("bad range {n_min}..={n_max}; n starts at 4")));
    }
    let mut rows = Vec::new();
    let mut ok = true;
    for n in n_min..=n_max {
        let c = par_census(&make(n)?, &ctx.limits)?;
        if family == "cyc3" {
            ok &= CensusCheck::new(n, c.clone()).ok();
        }
        rows.push((n, c));
    }
    let value = json!(rows
        .iter()
        .map(|(n, c)| {
            let mut v = census_json(c);
            v["n"] = json!(n);
            v
        })
        .collect::<Vec<_>>());
    Ok(render(ctx, value, census_table(&rows), ok))
}

pub fn check(ctx: &Ctx, g: &Graph) -> AppResult<Outcome> {
    let dc = DefCone::new(g, &ctx.limits)?;
    if !g.is_k4_free() {
        return Err(AppError::input("check needs a graph without K4"));
    }
    let s = dc.solve(&ctx.limits)?;
    let r = verify_with(&dc, &s)?;
    let value = json!({
        "rays": r.rays,
        "expected_rays": r.expected_rays,
        "dim": r.dim,
        "expected_dim": r.expected_dim,
        "rays_match": r.rays_match,
        "rays_decompose": r.rays_decompose,
        "ok": r.ok(),
    });
    let text = format!(
        "rays: {} (expected {})\ndim: {} (expected {})\nrays_match: {}\nrays_decompose: {}\ntriangulation: {}\n",
        r.rays,
        r.expected_rays,
        r.dim,
        r.expected_dim,
        r.rays_match,
        r.rays_decompose,
        if r.ok() { "ok" } else { "FAILED" }
    );
    Ok(render(ctx, value, text, r.ok()))
}
