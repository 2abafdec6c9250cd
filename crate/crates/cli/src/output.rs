//! Renderers for the machine-readable output formats.
//!
//! All rationals are emitted as decimal strings (`"4"`, `"5/2"`) so no
//! consumer ever loses precision; every collection is emitted in a fixed
//! deterministic order. The cdd-compatible text formats follow the usual
//! polyhedron file layout: an H-representation row `b a_1 .. a_d` encodes
//! `b + a.x >= 0`, a V-representation row starts with `1` followed by the
//! point coordinates.

use anyhow::Result;
use primepoly::exact::{Int, Rat};
use primepoly::faces::{enumerate_faces, f_vector_formula, f_vector_from_faces, FaceClass};
use primepoly::general::{CertifyReport, SymmetricIntMatrix};
use primepoly::oracle::{brute_face_lattice, PointCloud};
use primepoly::polytope::{
    facets, hrep, minimality_certificate, vertex_points, vertices, FacetClass, IneqKind, Inequality,
};
use serde_json::{json, Value};

pub fn fmt_usizes(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn fmt_rats(v: &[Rat]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn fmt_ints(v: &[Int]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn rats_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn ints_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

// ---- vertices ----------------------------------------------------------

pub fn vertices_text(d: usize, e: usize, t: &Rat) -> Result<String> {
    let verts = vertices(d, e)?;
    let pts = vertex_points(d, e, t)?;
    let mut out = format!("vertices d={d} e={e} t={t} count={}\n", verts.len());
    for (i, (ev, p)) in verts.iter().zip(&pts).enumerate() {
        out.push_str(&format!(
            "{i}: exponents {} point {}\n",
            fmt_usizes(ev.entries()),
            fmt_rats(p)
        ));
    }
    Ok(out)
}

pub fn vertices_json(d: usize, e: usize, t: &Rat) -> Result<String> {
    let verts = vertices(d, e)?;
    let pts = vertex_points(d, e, t)?;
    let items: Vec<Value> = verts
        .iter()
        .zip(&pts)
        .enumerate()
        .map(|(i, (ev, p))| {
            json!({
                "index": i,
                "exponents": ev.entries(),
                "point": rats_json(p),
            })
        })
        .collect();
    Ok(pretty(&json!({
        "d": d, "e": e, "t": t.to_string(), "count": verts.len(), "vertices": items,
    })))
}

pub fn vertices_cdd(d: usize, e: usize, t: &Rat) -> Result<String> {
    let pts = vertex_points(d, e, t)?;
    let mut out = String::from("V-representation\nbegin\n");
    out.push_str(&format!(" {} {} rational\n", pts.len(), d + 1));
    for p in &pts {
        let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(" 1 {}\n", coords.join(" ")));
    }
    out.push_str("end\n");
    Ok(out)
}

// ---- hrep --------------------------------------------------------------

fn ineq_tag(ineq: &Inequality) -> String {
    match ineq.kind() {
        IneqKind::Regular(rv) => format!(
            "kind=regular alpha={} lambda={} mu={}",
            fmt_usizes(rv.alpha()),
            rv.lambda(),
            rv.mu()
        ),
        IneqKind::Upper => "kind=upper".to_string(),
        IneqKind::Lower(i) => format!("kind=lower i={i}"),
    }
}

fn ineq_json(ineq: &Inequality) -> Value {
    let (b, a) = ineq.halfspace_row();
    let mut obj = match ineq.kind() {
        IneqKind::Regular(rv) => json!({
            "kind": "regular",
            "alpha": rv.alpha(),
            "lambda": rv.lambda(),
            "mu": rv.mu(),
        }),
        IneqKind::Upper => json!({"kind": "upper"}),
        IneqKind::Lower(i) => json!({"kind": "lower", "i": i}),
    };
    let map = obj.as_object_mut().expect("object");
    map.insert("redundant".into(), json!(ineq.redundant()));
    map.insert("b".into(), Value::String(b.to_string()));
    map.insert("a".into(), rats_json(&a));
    obj
}

pub fn hrep_text(d: usize, e: usize, t: &Rat) -> Result<String> {
    let system = hrep(d, e, t)?;
    let mut out = format!("hrep d={d} e={e} t={t} count={}\n", system.len());
    for (i, ineq) in system.iter().enumerate() {
        let (b, a) = ineq.halfspace_row();
        let marker = if ineq.redundant() { " redundant" } else { "" };
        out.push_str(&format!(
            "{i}: {} b={} a={}{marker}\n",
            ineq_tag(ineq),
            b,
            fmt_rats(&a)
        ));
    }
    Ok(out)
}

pub fn hrep_json(d: usize, e: usize, t: &Rat) -> Result<String> {
    let system = hrep(d, e, t)?;
    let items: Vec<Value> = system.iter().map(ineq_json).collect();
    Ok(pretty(&json!({
        "d": d, "e": e, "t": t.to_string(), "count": system.len(), "inequalities": items,
    })))
}

pub fn hrep_cdd(d: usize, e: usize, t: &Rat) -> Result<String> {
    let system = hrep(d, e, t)?;
    let mut out = String::from("H-representation\nbegin\n");
    out.push_str(&format!(" {} {} rational\n", system.len(), d + 1));
    for ineq in &system {
        let (b, a) = ineq.halfspace_row();
        let coeffs: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(" {} {}\n", b, coeffs.join(" ")));
    }
    out.push_str("end\n");
    Ok(out)
}

// ---- facets ------------------------------------------------------------

pub fn facets_text(d: usize, e: usize, t: &Rat) -> Result<String> {
    let fs = facets(d, e, t)?;
    let mut out = format!("facets d={d} e={e} t={t} count={}\n", fs.len());
    for (i, f) in fs.iter().enumerate() {
        let class = match &f.class {
            FacetClass::Regular { lambda } => format!("regular lambda={lambda}"),
            FacetClass::Upper => "upper".to_string(),
            FacetClass::Lower(i) => format!("lower i={i}"),
        };
        out.push_str(&format!(
            "{i}: class={class} vertices={}\n",
            fmt_usizes(&f.vertex_indices)
        ));
    }
    Ok(out)
}

pub fn facets_json(d: usize, e: usize, t: &Rat) -> Result<String> {
    let fs = facets(d, e, t)?;
    let items: Vec<Value> = fs
        .iter()
        .map(|f| {
            let mut obj = match f.inequality.kind() {
                IneqKind::Regular(rv) => json!({
                    "kind": "regular",
                    "alpha": rv.alpha(),
                    "lambda": rv.lambda(),
                    "mu": rv.mu(),
                }),
                IneqKind::Upper => json!({"kind": "upper"}),
                IneqKind::Lower(i) => json!({"kind": "lower", "i": i}),
            };
            obj.as_object_mut()
                .expect("object")
                .insert("vertex_indices".into(), json!(f.vertex_indices));
            obj
        })
        .collect();
    Ok(pretty(&json!({
        "d": d, "e": e, "t": t.to_string(), "count": fs.len(), "facets": items,
    })))
}

// ---- f-vector and faces ------------------------------------------------

pub fn fvector_formula_counts(d: usize, e: usize) -> Result<Vec<u64>> {
    Ok(f_vector_formula(d, e)?.counts().to_vec())
}

pub fn fvector_lattice_counts(d: usize, e: usize) -> Result<Vec<u64>> {
    let en = enumerate_faces(d, e)?;
    Ok(f_vector_from_faces(&en.faces).counts().to_vec())
}

pub fn fvector_oracle_counts(d: usize, e: usize, t: &Rat) -> Result<Vec<u64>> {
    let cloud = PointCloud::new(vertex_points(d, e, t)?)?;
    Ok(brute_face_lattice(&cloud)?.f_vector)
}

pub fn fvector_text(counts: &[u64]) -> String {
    let parts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    format!("{}\n", parts.join(" "))
}

pub fn fvector_json(d: usize, e: usize, method: &str, counts: &[u64]) -> String {
    pretty(&json!({"d": d, "e": e, "method": method, "f": counts}))
}

fn face_class_text(class: &FaceClass) -> String {
    match class {
        FaceClass::Vertex => "vertex".to_string(),
        FaceClass::Regular {
            support,
            lambda,
            base,
        } => format!(
            "regular support={} lambda={lambda} base={}",
            fmt_usizes(support),
            fmt_usizes(base)
        ),
        FaceClass::Upper { corners } => format!("upper corners={}", fmt_usizes(corners)),
        FaceClass::Lower { fixed } => format!("lower fixed={}", fmt_usizes(fixed)),
    }
}

fn face_class_json(class: &FaceClass) -> Value {
    match class {
        FaceClass::Vertex => json!({"class": "vertex"}),
        FaceClass::Regular {
            support,
            lambda,
            base,
        } => {
            json!({"class": "regular", "support": support, "lambda": lambda, "base": base})
        }
        FaceClass::Upper { corners } => json!({"class": "upper", "corners": corners}),
        FaceClass::Lower { fixed } => json!({"class": "lower", "fixed": fixed}),
    }
}

pub fn faces_text(d: usize, e: usize) -> Result<String> {
    let en = enumerate_faces(d, e)?;
    let fv = f_vector_from_faces(&en.faces);
    let mut out = format!(
        "faces d={d} e={e} count={} f={} anomalies={}\n",
        en.faces.len(),
        fvector_text(fv.counts()).trim_end(),
        en.counting_anomalies
    );
    for (i, f) in en.faces.iter().enumerate() {
        out.push_str(&format!(
            "{i}: dim={} class={} vertices={}\n",
            f.dim,
            face_class_text(&f.class),
            fmt_usizes(&f.vertex_indices)
        ));
    }
    Ok(out)
}

pub fn faces_json(d: usize, e: usize) -> Result<String> {
    let en = enumerate_faces(d, e)?;
    let fv = f_vector_from_faces(&en.faces);
    let items: Vec<Value> = en
        .faces
        .iter()
        .map(|f| {
            let mut obj = json!({"dim": f.dim, "vertex_indices": f.vertex_indices});
            obj.as_object_mut().expect("object").extend(
                face_class_json(&f.class)
                    .as_object()
                    .expect("object")
                    .clone(),
            );
            obj
        })
        .collect();
    Ok(pretty(&json!({
        "d": d,
        "e": e,
        "f": fv.counts(),
        "counting_anomalies": en.counting_anomalies,
        "faces": items,
    })))
}

// ---- minimality --------------------------------------------------------

pub fn minimality_reports(
    d: usize,
    e: usize,
    t: &Rat,
) -> Result<Vec<primepoly::polytope::CertificateReport>> {
    Ok(minimality_certificate(d, e, t)?)
}

pub fn minimality_text(d: usize, e: usize, t: &Rat) -> Result<(String, bool)> {
    let reports = minimality_reports(d, e, t)?;
    let mut out = format!("minimality d={d} e={e} t={t}\n");
    let mut ok = 0usize;
    for r in &reports {
        let kind = match &r.kind {
            IneqKind::Regular(rv) => format!("regular alpha={}", fmt_usizes(rv.alpha())),
            IneqKind::Upper => "upper".to_string(),
            IneqKind::Lower(i) => format!("lower i={i}"),
        };
        if r.as_predicted() {
            ok += 1;
        }
        out.push_str(&format!(
            "{}: kind={kind} rank={} equality={} strict={} passed={} predicted_facet={} {}\n",
            r.index,
            r.sharp_affine_rank,
            r.equality_on_self,
            r.strict_on_others,
            r.passed(),
            r.expected_facet,
            if r.as_predicted() { "ok" } else { "UNEXPECTED" }
        ));
    }
    let all = ok == reports.len();
    out.push_str(&format!(
        "summary: {}/{} certificates as predicted\n",
        ok,
        reports.len()
    ));
    Ok((out, all))
}

pub fn minimality_json(d: usize, e: usize, t: &Rat) -> Result<(String, bool)> {
    let reports = minimality_reports(d, e, t)?;
    let all = reports.iter().all(|r| r.as_predicted());
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            let kind = match &r.kind {
                IneqKind::Regular(rv) => json!({"kind": "regular", "alpha": rv.alpha()}),
                IneqKind::Upper => json!({"kind": "upper"}),
                IneqKind::Lower(i) => json!({"kind": "lower", "i": i}),
            };
            json!({
                "index": r.index,
                "kind": kind,
                "sharp_affine_rank": r.sharp_affine_rank,
                "equality_on_self": r.equality_on_self,
                "strict_on_others": r.strict_on_others,
                "passed": r.passed(),
                "predicted_facet": r.expected_facet,
                "as_predicted": r.as_predicted(),
            })
        })
        .collect();
    let text = pretty(&json!({
        "d": d, "e": e, "t": t.to_string(),
        "reports": items,
        "all_as_predicted": all,
    }));
    Ok((text, all))
}

// ---- general and matrix ------------------------------------------------

pub fn general_text(n: u64, d: usize) -> Result<String> {
    let cloud = primepoly::general::general_polytope_vertices(n, d)?;
    let mut out = format!("general n={n} d={d} count={}\n", cloud.len());
    for (i, p) in cloud.points().iter().enumerate() {
        out.push_str(&format!("{i}: {}\n", fmt_rats(p)));
    }
    Ok(out)
}

pub fn general_json(n: u64, d: usize) -> Result<String> {
    let cloud = primepoly::general::general_polytope_vertices(n, d)?;
    let pts: Vec<Value> = cloud.points().iter().map(|p| rats_json(p)).collect();
    Ok(pretty(
        &json!({"n": n, "d": d, "count": cloud.len(), "points": pts}),
    ))
}

pub fn matrix_text(a: &SymmetricIntMatrix, det: u64, report: &CertifyReport) -> String {
    let mut out = format!(
        "matrix size={} det={det} completions={}\n",
        a.size(),
        report.completions.len()
    );
    for (i, c) in report.completions.iter().enumerate() {
        out.push_str(&format!("{i}: {}\n", fmt_ints(c.diag())));
    }
    if report.all_vertices() {
        out.push_str(&format!(
            "certified: all {} completions are vertices\n",
            report.completions.len()
        ));
    } else {
        out.push_str(&format!(
            "FALSIFIED: non-vertex completions at indices {}\n",
            fmt_usizes(&report.non_vertices)
        ));
    }
    out
}

pub fn matrix_json(a: &SymmetricIntMatrix, det: u64, report: &CertifyReport) -> String {
    let completions: Vec<Value> = report
        .completions
        .iter()
        .map(|c| ints_json(c.diag()))
        .collect();
    pretty(&json!({
        "size": a.size(),
        "det": det,
        "count": report.completions.len(),
        "completions": completions,
        "non_vertices": report.non_vertices,
        "all_vertices": report.all_vertices(),
    }))
}
