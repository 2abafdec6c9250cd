//! The `verify` subcommand: run the full cross-check suite for one `(d, e)`
//! over a list of bases and produce a deterministic plain-text report, one
//! line per check. Two runs with the same arguments produce byte-identical
//! output.

use anyhow::{bail, Result};
use num_traits::{Signed, Zero};
use primepoly::exact::Rat;
use primepoly::faces::{enumerate_faces, f_vector_formula, f_vector_from_faces};
use primepoly::factor::{binomial, compositions};
use primepoly::general::certify_vertices_da;
use primepoly::oracle::{
    brute_face_lattice, brute_facets, is_vertex, same_facet_family, PointCloud,
};
use primepoly::polytope::{
    facets, hrep, minimality_certificate, normalize_facet, sharp_set, vertex_points, vertices,
    FacetClass, Hypersimplex,
};
use primepoly::regular::{phi, psi};
use std::fmt::Write as _;

/// Subset-enumeration budget for the oracle: `C(f_0, d)` hyperplane fits.
pub const ORACLE_BUDGET: u64 = 600_000;

/// Number of d-subsets the oracle would enumerate, saturating at the cap.
/// Degenerate parameters cost nothing here; they are rejected by the
/// construction itself.
pub fn oracle_cost(d: usize, e: usize) -> u64 {
    if d < 2 || e < 2 {
        return 0;
    }
    let f0 = binomial(e + d - 1, d - 1);
    let mut acc: u128 = 1;
    for i in 0..d as u128 {
        acc = acc * (f0 as u128 - i) / (i + 1);
        if acc > ORACLE_BUDGET as u128 {
            return ORACLE_BUDGET + 1;
        }
    }
    acc as u64
}

pub struct VerifyOutcome {
    pub report: String,
    pub passed: bool,
}

struct Reporter {
    out: String,
    passed: usize,
    failed: usize,
}

impl Reporter {
    fn check(&mut self, name: &str, ok: bool, detail: &str) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        if detail.is_empty() {
            writeln!(self.out, "check {name}: {verdict}").expect("string write");
        } else {
            writeln!(self.out, "check {name}: {verdict} ({detail})").expect("string write");
        }
    }
}

/// Run every cross-check for `(d, e)` at the given bases.
pub fn run_verify(d: usize, e: usize, bases: &[Rat]) -> Result<VerifyOutcome> {
    if bases.is_empty() {
        bail!("at least one base is required");
    }
    if oracle_cost(d, e) > ORACLE_BUDGET {
        bail!(
            "instance (d={d}, e={e}) is above the oracle budget of {ORACLE_BUDGET} \
             hyperplane fits; verify is limited to desk scale"
        );
    }

    let mut r = Reporter {
        out: String::new(),
        passed: 0,
        failed: 0,
    };
    let base_list: Vec<String> = bases.iter().map(|t| t.to_string()).collect();
    writeln!(
        r.out,
        "primepoly verify d={d} e={e} bases={}",
        base_list.join(",")
    )
    .expect("string write");

    let verts = vertices(d, e)?;
    r.check(
        "vertex-count",
        verts.len() as u64 == binomial(e + d - 1, d - 1),
        &format!("{} vertices", verts.len()),
    );

    let mut closed_families: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut oracle_families: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut oracle_lattice: Option<primepoly::oracle::BruteLattice> = None;

    for t in bases {
        let pts = vertex_points(d, e, t)?;
        let system = hrep(d, e, t)?;

        let valid = system.iter().all(|ineq| {
            pts.iter()
                .all(|p| !ineq.slack(p).expect("dims match").is_negative())
        });
        r.check(
            &format!("hrep-validity t={t}"),
            valid,
            &format!("{} inequalities x {} vertices", system.len(), pts.len()),
        );

        let mut sharp_ok = true;
        for ineq in &system {
            let sharp = sharp_set(ineq);
            for (ev, p) in verts.iter().zip(&pts) {
                let is_zero = ineq.slack(p).expect("dims match").is_zero();
                if is_zero != sharp.contains(ev) {
                    sharp_ok = false;
                }
            }
        }
        r.check(&format!("hrep-sharpness t={t}"), sharp_ok, "");

        let fs = facets(d, e, t)?;
        let mut norm_ok = true;
        let mut regular_count = 0usize;
        for f in &fs {
            if let FacetClass::Regular { lambda } = f.class {
                regular_count += 1;
                let mut image = normalize_facet(f)?;
                image.sort();
                if image != Hypersimplex::new(d, lambda)?.vertices() {
                    norm_ok = false;
                }
            }
        }
        r.check(
            &format!("hypersimplex-normalization t={t}"),
            norm_ok,
            &format!("{regular_count} regular facets"),
        );

        let cloud = PointCloud::new(pts.clone())?;
        let extreme = (0..cloud.len()).all(|i| is_vertex(i, &cloud));
        r.check(
            &format!("extremality t={t}"),
            extreme,
            &format!("{} points", cloud.len()),
        );

        let closed: Vec<Vec<usize>> = fs.iter().map(|f| f.vertex_indices.clone()).collect();
        let brute: Vec<Vec<usize>> = brute_facets(&cloud)?
            .into_iter()
            .map(|f| f.incident)
            .collect();
        let complete = same_facet_family(&closed, &brute);
        r.check(
            &format!("facet-completeness t={t}"),
            complete,
            &format!("{} facets", closed.len()),
        );
        if oracle_lattice.is_none() {
            oracle_lattice = Some(brute_face_lattice(&cloud)?);
        }
        closed_families.push(closed);
        oracle_families.push(brute);
    }

    let closed_invariant = closed_families.windows(2).all(|w| w[0] == w[1]);
    r.check(
        "facet-base-invariance",
        closed_invariant,
        &format!("{} bases", bases.len()),
    );
    let oracle_invariant = oracle_families
        .windows(2)
        .all(|w| same_facet_family(&w[0], &w[1]));
    r.check("oracle-base-invariance", oracle_invariant, "");

    let formula = f_vector_formula(d, e)?;
    let en = enumerate_faces(d, e)?;
    let constructive = f_vector_from_faces(&en.faces);
    let lattice = oracle_lattice.expect("at least one base");
    let counts_text: Vec<String> = formula.counts().iter().map(|c| c.to_string()).collect();
    r.check(
        "fvector-agreement",
        formula.counts() == constructive.counts()
            && formula.counts() == &lattice.f_vector[..]
            && en.counting_anomalies == 0,
        &counts_text.join(" "),
    );
    // Faces must agree as vertex-index families, not only in count.
    let mut face_families_ok = true;
    for k in 0..d {
        let constructed: Vec<Vec<usize>> = en
            .faces
            .iter()
            .filter(|f| f.dim == k)
            .map(|f| f.vertex_indices.clone())
            .collect();
        if !same_facet_family(&constructed, &lattice.faces_by_dim[k]) {
            face_families_ok = false;
        }
    }
    r.check(
        "face-families-vs-oracle",
        face_families_ok,
        "all dimensions",
    );
    r.check("euler-relation", formula.euler_holds(), "");

    let mut minimality_ok = true;
    for t in bases {
        let reports = minimality_certificate(d, e, t)?;
        if !reports.iter().all(|rep| rep.as_predicted()) {
            minimality_ok = false;
        }
    }
    r.check(
        "minimality",
        minimality_ok,
        &format!("{} bases", bases.len()),
    );

    let mut roundtrip_ok = true;
    for lambda in 1..=e.min(d - 1) {
        for beta in compositions(e - lambda, d)? {
            let rv = psi(&beta, e)?;
            if phi(&rv) != beta || psi(&phi(&rv), e)? != rv {
                roundtrip_ok = false;
            }
        }
    }
    r.check(
        "bijection-roundtrip",
        roundtrip_ok,
        &format!("lambda 1..{}", e.min(d - 1)),
    );

    let passed = r.failed == 0;
    let verdict = if passed { "PASS" } else { "FAIL" };
    writeln!(
        r.out,
        "result: {verdict} (checks {}/{})",
        r.passed,
        r.passed + r.failed
    )
    .expect("string write");
    Ok(VerifyOutcome {
        report: r.out,
        passed,
    })
}

/// Certification half of the `matrix` subcommand, reused by tests.
pub fn certify_matrix(
    a: &primepoly::general::SymmetricIntMatrix,
    det: u64,
) -> Result<primepoly::general::CertifyReport> {
    Ok(certify_vertices_da(a, det)?)
}
