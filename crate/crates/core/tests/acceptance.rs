//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::{Signed, Zero};
use solidcone::extremal::{
    barnes_min_det, min_det_vertex, partial_det_direction_check, reproduce_table, triangle_scan, FacetSystem,
    TableName, DEFAULT_GRID,
};
use solidcone::forms;
use solidcone::linalg::{format_rational, gram_from_basis, rational, Rational};
use solidcone::solidangle::{
    lhuilier_3d, mc_solid_angle, orthant_integral, solid_angle, PairwiseAngles, QuadratureSpec,
};
use solidcone::GramMatrix;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > budget {
        o.pass = false;
        o.detail.push_str(&format!("; over time budget {budget:?}"));
    }
    o.detail.push_str(&format!(" [{:.2}s]", took.as_secs_f64()));
    o
}

fn identity_sanity() -> Outcome {
    let mut worst = 0.0f64;
    let mut slow = false;
    for n in 2..=5 {
        let start = Instant::now();
        let w = solid_angle(&GramMatrix::identity(n).unwrap(), &spec()).unwrap();
        slow |= start.elapsed() > Duration::from_secs(1);
        worst = worst.max((w.omega - 0.5f64.powi(n as i32)).abs());
    }
    outcome(worst <= 1e-8 && !slow, format!("max |omega - 2^-n| = {worst:.2e}"))
}

fn table_row(table: TableName, row: usize) -> (bool, String) {
    let t = reproduce_table(table, &spec()).unwrap();
    let r = &t.rows[row];
    (r.pass, format!("{} = {} (reference {})", r.quantity, r.computed, r.reference))
}

fn lemma_integral() -> Outcome {
    let r = orthant_integral(&forms::fcc(4), &QuadratureSpec::gauss(48)).unwrap();
    outcome(r.converged && (r.value - 0.345503).abs() <= 5e-5, format!("integral(Q0) = {:.9}", r.value))
}

fn derivative_integrals() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for table in [TableName::Lemma43, TableName::Lemma44] {
        let o = timed(Duration::from_secs(10), || {
            let (p, d) = table_row(table, 1);
            outcome(p, d)
        });
        pass &= o.pass;
        parts.push(o.detail);
    }
    outcome(pass, parts.join("; "))
}

fn comparison(table: TableName) -> Outcome {
    let t = reproduce_table(table, &spec()).unwrap();
    let detail = t
        .rows
        .iter()
        .filter(|r| r.quantity.starts_with("omega"))
        .map(|r| format!("{} = {}", r.quantity, r.computed))
        .collect::<Vec<_>>()
        .join("; ");
    let pass = [0, 1, 4].iter().all(|&k| t.rows[k].pass);
    outcome(pass, detail)
}

fn determinants() -> Outcome {
    let dets = [forms::fcc(4), forms::fcc_with_zero(4), forms::fcc(5)]
        .map(|q| format_rational(&q.exact_determinant().unwrap()));
    outcome(dets == ["5/16", "1/4", "3/16"], format!("det(Q0), det(Q1), det(R0) = {}", dets.join(", ")))
}

fn vertex_tables() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for table in [TableName::Vertices23, TableName::Vertices24] {
        let o = timed(Duration::from_secs(1), || {
            let t = reproduce_table(table, &spec()).unwrap();
            let bad: Vec<&str> = t.rows.iter().filter(|r| !r.pass).map(|r| r.quantity.as_str()).collect();
            outcome(t.pass, format!("{table}: {} classes, mismatches {bad:?}", t.rows.len() - 1))
        });
        pass &= o.pass;
        parts.push(o.detail);
    }
    outcome(pass, parts.join("; "))
}

fn barnes_consistency() -> Outcome {
    let mut rng = common::rng(2024);
    for _ in 0..100 {
        let mut d: Vec<Rational> = (0..3).map(|_| common::random_rational(&mut rng, 1, 5, 12)).collect();
        d.sort();
        let system = FacetSystem::fixed_diagonal(&d).unwrap();
        let vertex_min = min_det_vertex(&system, &Rational::zero()).unwrap().value;
        let formula = barnes_min_det(&d).unwrap();
        if vertex_min != formula {
            return outcome(false, format!("diagonal {d:?}: vertices {vertex_min}, formula {formula}"));
        }
    }
    outcome(true, "100 diagonals agree exactly")
}

fn quasi_concavity() -> Outcome {
    let mut rng = common::rng(9);
    let mut worst = f64::INFINITY;
    for k in 0..1000 {
        let n = 2 + k % 4;
        let (q1, q2) = (common::random_gram(&mut rng, n), common::random_gram(&mut rng, n));
        let lambda = rand::Rng::random::<f64>(&mut rng);
        let q = solidcone::linalg::convex_combination(&q1, &q2, lambda).unwrap();
        worst = worst.min(q.determinant() - q1.determinant().min(q2.determinant()));
    }
    outcome(worst >= -1e-12, format!("min det(mix) - min(det) = {worst:.3e}"))
}

fn positive_entries_bound() -> Outcome {
    let mut rng = common::rng(10);
    let mut worst = f64::NEG_INFINITY;
    for k in 0..200 {
        let n = 3 + k % 2;
        let q = gram_from_basis(&common::random_positive_basis(&mut rng, n)).unwrap();
        let w = solid_angle(&q, &spec()).unwrap();
        worst = worst.max(w.omega - 0.5f64.powi(n as i32));
    }
    outcome(worst <= 2e-4, format!("max omega - 2^-n = {worst:.3e}"))
}

fn rank3_lower_bound() -> Outcome {
    let fcc = solid_angle(&forms::fcc(3), &spec()).unwrap().omega;
    let excess = lhuilier_3d(&PairwiseAngles::from_gram(&forms::fcc(3)).unwrap());
    let via_basis = solid_angle(&gram_from_basis(&forms::fcc_basis()).unwrap(), &spec()).unwrap().omega;
    let mut rng = common::rng(11);
    let mut worst = f64::INFINITY;
    for _ in 0..200 {
        let q = common::random_reduced(&mut rng, 3, 1.0, false);
        worst = worst.min(solid_angle(&q, &spec()).unwrap().omega - fcc);
    }
    let pass = worst >= -2e-4 && (fcc - excess).abs() < 1e-6 && (via_basis - fcc).abs() < 1e-9 && (fcc - 0.04387).abs() < 1e-5;
    outcome(pass, format!("omega(A3) = {fcc:.9} (spherical excess {excess:.9}); min omega - omega(A3) = {worst:.3e}"))
}

fn oracle_triangulation() -> Outcome {
    let mut rng = common::rng(12);
    let mut bases = vec![forms::fcc(4).cholesky_basis(), forms::fcc_with_zero(5).cholesky_basis()];
    bases.extend((0..20).map(|k| common::random_basis(&mut rng, 3 + k % 3, 0.5)));
    let mut worst_sigma = 0.0f64;
    for (k, b) in bases.iter().enumerate() {
        let w = solid_angle(&gram_from_basis(b).unwrap(), &spec()).unwrap();
        let mc = mc_solid_angle(b, 1_000_000, 1000 + k as u64).unwrap();
        let z = ((w.omega - mc.estimate).abs() - w.omega_error()).max(0.0) / mc.stderr;
        worst_sigma = worst_sigma.max(z);
    }
    let mut worst_excess = 0.0f64;
    for _ in 0..50 {
        let q = gram_from_basis(&common::random_basis(&mut rng, 3, 0.5)).unwrap();
        let adaptive = QuadratureSpec { method: solidcone::solidangle::Method::Adaptive, ..spec() };
        let w = solid_angle(&q, &adaptive).unwrap();
        let e = lhuilier_3d(&PairwiseAngles::from_gram(&q).unwrap());
        worst_excess = worst_excess.max((w.omega - e).abs());
    }
    outcome(
        worst_sigma <= 3.0 && worst_excess <= 1e-6,
        format!("max |quad - mc| / stderr = {worst_sigma:.2}; max |quad - excess| = {worst_excess:.2e}"),
    )
}

fn direction_inequality() -> Outcome {
    let m = 16i64;
    let mut count = 0usize;
    let mut worst: Option<Rational> = None;
    for a2 in 0..=m {
        for a3 in 0..=m {
            for b1 in 0..=m {
                for b2 in 0..=m {
                    if a3 + b1 < a2 + b2 || a2 + b2 < m {
                        continue;
                    }
                    let [a2, a3, b1, b2] = [a2, a3, b1, b2].map(|v| rational(v, 2 * m));
                    let v: Rational = partial_det_direction_check(a2, a3, b1, b2).unwrap();
                    count += 1;
                    if worst.as_ref().is_none_or(|w| v > *w) {
                        worst = Some(v);
                    }
                }
            }
        }
    }
    let worst = worst.unwrap();
    outcome(count >= 10_000 && worst.is_negative(), format!("{count} points, max value {}", format_rational(&worst)))
}

fn triangle_minimum() -> Outcome {
    let s = triangle_scan(DEFAULT_GRID, &spec()).unwrap();
    let p = s.min_point();
    let converged = s.points.iter().all(|p| p.converged);
    outcome(
        s.minimizer_corner.is_some() && converged,
        format!(
            "{} points, min omega * 2 pi^2 = {:.9} at (a2, b2) = ({}, {}), corner {}",
            s.points.len(),
            p.omega * 2.0 * PI * PI,
            p.a2,
            p.b2,
            s.minimizer_corner.map_or("none".to_string(), |c| format!("{c:?}"))
        ),
    )
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("identity sanity", Box::new(move || timed(s(4), identity_sanity))),
        ("orthant integral at Q0", Box::new(move || timed(s(5), lemma_integral))),
        ("second-derivative integrals", Box::new(derivative_integrals)),
        ("rank-4 comparison", Box::new(move || timed(s(30), || comparison(TableName::Dim4)))),
        ("rank-5 reversal", Box::new(move || timed(s(180), || comparison(TableName::Dim5)))),
        ("exact determinants", Box::new(determinants)),
        ("vertex tables", Box::new(vertex_tables)),
        ("minimal determinant formula", Box::new(barnes_consistency)),
        ("determinant quasi-concavity", Box::new(quasi_concavity)),
        ("positive-entry upper bound", Box::new(positive_entries_bound)),
        ("rank-3 lower bound", Box::new(rank3_lower_bound)),
        ("oracle triangulation", Box::new(oracle_triangulation)),
        ("direction derivative sign", Box::new(direction_inequality)),
        ("reduced-triangle minimum", Box::new(triangle_minimum)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("acceptance: {} of 14 criteria pass", 14 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
