//! Formula-versus-count sweeps over whole parameter ranges.

use num_bigint::BigInt;

use crate::formulas::{formula_c, formula_d, formula_trimmed_ar};
use crate::matching::count_matchings;
use crate::regions::{cruciform, nearly_cruciform, trimmed_aztec_rectangle};
use crate::Weight;

use super::report::IdentityReport;

fn int(b: BigInt) -> Weight {
    Weight::from_int(b)
}

/// All balanced cruciform instances with widths up to `max_mn`:
/// formula against the exact matching count.
pub fn sweep_cruciform(max_mn: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for m in 1..=max_mn {
        for n in 1..=max_mn {
            let total = m + n - 1;
            for a in 0..=total {
                for b in 0..=total - a {
                    for c in 0..=total - a - b {
                        let d = total - a - b - c;
                        let g = cruciform(m, n, a, b, c, d).expect("valid parameters");
                        let count = count_matchings(&g);
                        let formula = formula_c(m, n, a, b, c, d).expect("balanced");
                        out.push(IdentityReport::check(
                            "tba-sweep",
                            format!("m={m},n={n},a={a},b={b},c={c},d={d}"),
                            int(formula).to_string(),
                            count.to_string(),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// All balanced a = c nearly-cruciform instances with widths up to `max_mn`.
pub fn sweep_nearly_cruciform(max_mn: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for m in 1..=max_mn {
        for n in 1..=max_mn {
            let total = m + n - 2;
            for a in 0..=total / 2 {
                for b in 0..=total - 2 * a {
                    let d = total - 2 * a - b;
                    let formula = formula_d(m, n, a, b, d).expect("balanced");
                    let count = match nearly_cruciform(m, n, a, b, a, d) {
                        Ok(g) => count_matchings(&g),
                        Err(crate::regions::RegionError::Infeasible) => Weight::zero(),
                        Err(e) => panic!("unexpected construction failure: {e}"),
                    };
                    out.push(IdentityReport::check(
                        "tbb-sweep",
                        format!("m={m},n={n},a={a},b={b},d={d}"),
                        int(formula).to_string(),
                        count.to_string(),
                    ));
                }
            }
        }
    }
    out
}

/// Every deletion set for the trimmed Aztec rectangle with m <= n <= max_n.
pub fn sweep_trimmed_all(max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            let mut choose = Vec::new();
            subsets(1, n + 1, m, &mut Vec::new(), &mut choose);
            for t_set in choose {
                out.push(check_trimmed(m, n, &t_set));
            }
        }
    }
    out
}

/// One trimmed-rectangle comparison.
pub fn check_trimmed(m: i64, n: i64, t_set: &[i64]) -> IdentityReport {
    let g = trimmed_aztec_rectangle(m, n, t_set).expect("valid parameters");
    let count = count_matchings(&g);
    let formula = formula_trimmed_ar(m, n, t_set).expect("valid parameters");
    IdentityReport::check(
        "tca-sweep",
        format!("m={m},n={n},T={t_set:?}"),
        int(formula).to_string(),
        count.to_string(),
    )
}

fn subsets(from: i64, to: i64, k: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == 0 {
        out.push(cur.clone());
        return;
    }
    for t in from..=to {
        cur.push(t);
        subsets(t + 1, to, k - 1, cur, out);
        cur.pop();
    }
}
