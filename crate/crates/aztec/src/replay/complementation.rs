//! Replay of the complementation route: single parameter-map steps, the
//! jump to the doubly-intruded Aztec rectangle, its factorization into two
//! trimmed Aztec rectangles, and the closing comparison with the
//! nearly-cruciform product formula.


use crate::graph::{AxisSpec, EmbeddedPlanarGraph};
use crate::matching::count_matchings;
use crate::regions::{
    doubly_intruded_aztec_rectangle, nearly_cruciform, trimmed_aztec_rectangle,
};
use crate::symmetry::{
    complement_params, factorization_split, find_missing_mirrors, symmetrize_auto,
};
use crate::Weight;

use super::report::IdentityReport;

fn params_str(m: i64, n: i64, a: i64, b: i64, d: i64) -> String {
    format!("m={m},n={n},a={a},b={b},d={d}")
}

fn count_d(m: i64, n: i64, a: i64, b: i64, d: i64) -> Result<Weight, String> {
    let g = nearly_cruciform(m, n, a, b, a, d).map_err(|e| e.to_string())?;
    Ok(count_matchings(&g))
}

/// The deletion index sets of the two trimmed Aztec rectangles produced by
/// the factorization of the doubly-intruded rectangle: [m+n] and [m+n+1]
/// minus the odd-step runs starting at n-d+1.
pub fn ecg_index_sets(m: i64, n: i64, a: i64, b: i64, d: i64) -> (Vec<i64>, Vec<i64>) {
    let start = n - d + 1;
    let s_end = n - d + 2 * m - 2 * a - 3;
    let t_end = n - d + 2 * m - 2 * a - 1;
    debug_assert_eq!(s_end, m + b - 1);
    debug_assert_eq!(t_end, m + b + 1);
    let excluded = |hi: i64, t: i64| t >= start && t <= hi && (t - start) % 2 == 0;
    let s_set = (1..=m + n).filter(|&t| !excluded(s_end, t)).collect();
    let t_set = (1..=m + n + 1).filter(|&t| !excluded(t_end, t)).collect();
    (s_set, t_set)
}

/// Mirror about the line y = x; the below-axis half of the intruded
/// rectangle matches its trimmed rectangle directly, the above half as
/// this mirror image.
fn transpose(g: &EmbeddedPlanarGraph) -> EmbeddedPlanarGraph {
    let vs: Vec<_> = g
        .vertices()
        .iter()
        .map(|p| crate::graph::GridPoint::new(p.y, p.x))
        .collect();
    let es: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            (
                crate::graph::GridPoint::new(e.u.y, e.u.x),
                crate::graph::GridPoint::new(e.v.y, e.v.x),
                e.w.clone(),
            )
        })
        .collect();
    EmbeddedPlanarGraph::build(vs, es).expect("transpose preserves validity")
}

/// Verify the complementation route starting from balanced a = c
/// parameters (m, n, a, b, d).
pub fn verify_complementation(m: i64, n: i64, a: i64, b: i64, d: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    if 2 * a + b + d != m + n - 2 {
        let mut r = IdentityReport::check(
            "ecc",
            params_str(m, n, a, b, d),
            "-".into(),
            "unbalanced parameters".into(),
        );
        r.pass = false;
        out.push(r);
        return out;
    }

    // single complementation steps while parameters stay constructible
    let mut cur = (m, n, a, b, d);
    let mut cur_count = count_d(m, n, a, b, d).ok();
    let mut step = 0;
    loop {
        let id = if step == 0 { "ecc" } else { "ecd" };
        let (next, t) = complement_params(cur.0, cur.1, cur.2, cur.3, cur.4);
        let in_range = next.1 >= 1 && next.3 >= 0 && next.4 >= 0;
        if !in_range {
            out.push(IdentityReport::skipped(
                id,
                params_str(cur.0, cur.1, cur.2, cur.3, cur.4),
                "skipped: negative pier",
            ));
            break;
        }
        let lhs = cur_count.clone();
        let rhs_base = count_d(next.0, next.1, next.2, next.3, next.4).ok();
        match (lhs, &rhs_base) {
            (Some(l), Some(r)) => {
                out.push(IdentityReport::check(
                    id,
                    params_str(cur.0, cur.1, cur.2, cur.3, cur.4),
                    l.to_string(),
                    r.mul_pow2(t).to_string(),
                ));
            }
            _ => {
                let mut rep = IdentityReport::check(
                    id,
                    params_str(cur.0, cur.1, cur.2, cur.3, cur.4),
                    "-".into(),
                    "construction failed".into(),
                );
                rep.pass = false;
                out.push(rep);
                break;
            }
        }
        cur = next;
        cur_count = rhs_base;
        step += 1;
    }

    out.extend(verify_ecf_ecg(m, n, a, b, d));
    out
}

/// Eq. ecf (count identity against the doubly-intruded rectangle) and
/// Eq. ecg (its factorization into trimmed rectangles), closing with the
/// product-formula comparison.
pub fn verify_ecf_ecg(m: i64, n: i64, a: i64, b: i64, d: i64) -> Vec<IdentityReport> {
    let params = params_str(m, n, a, b, d);
    let mut out = Vec::new();
    if n - d < 0 || n - b < 0 {
        out.push(IdentityReport::skipped(
            "ecf",
            params.clone(),
            "skipped: negative intrusion length",
        ));
        return out;
    }
    let (p, q) = (2 * n + 2 * a + 1, m + n);
    let build = || -> Result<_, String> {
        let dg = nearly_cruciform(m, n, a, b, a, d).map_err(|e| e.to_string())?;
        let ar = doubly_intruded_aztec_rectangle(p, q, n - d, n - b, true)
            .map_err(|e| e.to_string())?;
        Ok((dg, ar))
    };
    let (dg, ar) = match build() {
        Ok(x) => x,
        Err(e) => {
            let mut r =
                IdentityReport::check("ecf", params.clone(), "-".into(), "-".into());
            r.pass = false;
            r.rhs = format!("construction failed: {e}");
            out.push(r);
            return out;
        }
    };
    let md = count_matchings(&dg);
    let mar = count_matchings(&ar);
    let expo = n * (n - 2 * a - 2) - 3 * n * (n - 1) / 2;
    out.push(IdentityReport::check(
        "ecf",
        params.clone(),
        md.to_string(),
        mar.mul_pow2(expo).to_string(),
    ));

    // ecg: restore the deleted corner, split about the long midline
    let axis = AxisSpec::diag_up(2 * (1 - p));
    let ecg = (|| -> Result<IdentityReport, String> {
        let missing = find_missing_mirrors(&ar, &axis).map_err(|e| e.to_string())?;
        if missing.len() != 1 {
            return Err(format!("expected one missing mirror, got {}", missing.len()));
        }
        let (g, _) = symmetrize_auto(&ar, &axis, missing[0]).map_err(|e| e.to_string())?;
        let doubling_ok = count_matchings(&g) == mar.double();
        let s = factorization_split(&g, &axis).map_err(|e| e.to_string())?;
        let (s_set, t_set) = ecg_index_sets(m, n, a, b, d);
        let mu = n + a + 1;
        let gs = trimmed_aztec_rectangle(mu, m + n - 1, &s_set).map_err(|e| e.to_string())?;
        let gt = trimmed_aztec_rectangle(mu, m + n, &t_set).map_err(|e| e.to_string())?;
        let ms = count_matchings(&gs);
        let mt = count_matchings(&gt);
        // halves: the above half is the mirror image of AR(S), the below
        // half is AR(T) on the nose
        let plus_red = s.plus.reduce_forced_edges();
        let s_match = plus_red.feasible
            && plus_red.factor.is_one()
            && EmbeddedPlanarGraph::graph_equal(
                &plus_red.graph,
                &transpose(&gs.reduce_forced_edges().graph),
            );
        let t_match = EmbeddedPlanarGraph::graph_equal(&s.minus, &gt);
        // the closing formula comparison: assembling ecf, ecg and the
        // trimmed-rectangle formula reproduces formula_D
        let fd = crate::formulas::formula_d(m, n, a, b, d).map_err(|e| e.to_string())?;
        let fs = crate::formulas::formula_trimmed_ar(mu, m + n - 1, &s_set)
            .map_err(|e| e.to_string())?;
        let ft = crate::formulas::formula_trimmed_ar(mu, m + n, &t_set)
            .map_err(|e| e.to_string())?;
        let assembled = Weight::from_int(fs * ft)
            .mul_pow2(expo + m - a - 1);
        Ok(IdentityReport::check(
            "ecg",
            params.clone(),
            mar.double().to_string(),
            (&ms * &mt).mul_pow2(m - a).to_string(),
        )
        .and_assert(doubling_ok, "pendant doubling")
        .and_assert(s.k == (m - a) as u32, "axis exponent m-a")
        .and_assert(s_match, "above half is the mirrored trimmed rectangle (S)")
        .and_assert(t_match, "below half is the trimmed rectangle (T)")
        .and_assert(
            Weight::from_int(fd) == assembled,
            "formula_D equals the assembled product",
        ))
    })();
    match ecg {
        Ok(r) => out.push(r),
        Err(e) => {
            let mut r = IdentityReport::check("ecg", params, "-".into(), "-".into());
            r.pass = false;
            r.rhs = format!("construction failed: {e}");
            out.push(r);
        }
    }
    out
}
