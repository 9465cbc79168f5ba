//! Integration checks of the replay layer beyond the acceptance criteria:
//! the large chain-feeding instances and the classic complementation
//! cascade starting at (7,7,3,3,3).

use num_bigint::BigInt;

use aztec::formulas::{formula_c, formula_d};
use aztec::matching::count_matchings;
use aztec::regions::{cruciform, nearly_cruciform};
use aztec::replay::{ecg_index_sets, verify_complementation};
use aztec::Weight;

fn int(b: BigInt) -> Weight {
    Weight::from_int(b)
}

#[test]
fn chain_feeding_instances_match_formulas() {
    for n in 1..=4 {
        let m = 2 * n + 1;
        let c = cruciform(m, m, n + 1, n, n, n).unwrap();
        assert_eq!(
            count_matchings(&c),
            int(formula_c(m, m, n + 1, n, n, n).unwrap()),
            "cruciform n={n}"
        );
        let d = nearly_cruciform(m, m, n, n, n, n).unwrap();
        assert_eq!(
            count_matchings(&d),
            int(formula_d(m, m, n, n, n).unwrap()),
            "nearly-cruciform n={n}"
        );
    }
}

#[test]
fn passing_reports_have_identical_sides() {
    // a passing record must show lhs = rhs verbatim so an external reader
    // can re-check it from the serialized report alone
    let mut reports = aztec::replay::verify_chain(2);
    reports.extend(verify_complementation(3, 3, 1, 1, 1));
    for r in &reports {
        if r.pass {
            assert_eq!(r.lhs, r.rhs, "{} {}", r.identity_id, r.params);
        }
    }
    let jsonl = aztec::replay::to_jsonl(&reports);
    assert!(!jsonl.contains("elapsed"));
}

#[test]
fn fig_instance_index_sets() {
    // the doubly-intruded rectangle for (7,7,3,3,3) factors into the
    // trimmed rectangles with exactly these deletion sets
    let (s_set, t_set) = ecg_index_sets(7, 7, 3, 3, 3);
    assert_eq!(s_set, vec![1, 2, 3, 4, 6, 8, 10, 11, 12, 13, 14]);
    assert_eq!(t_set, vec![1, 2, 3, 4, 6, 8, 10, 12, 13, 14, 15]);
}

#[test]
fn ecf_ecg_with_unequal_intrusions() {
    // b != d exercises the bottom/top intrusion orientation; d = n makes
    // one intrusion empty; a = 0 shrinks the rectangle to its minimum
    for (m, n, a, b, d) in [(4, 4, 1, 3, 1), (4, 2, 0, 2, 2), (2, 4, 0, 2, 2)] {
        let reports = aztec::replay::verify_ecf_ecg(m, n, a, b, d);
        assert!(reports.iter().any(|r| r.identity_id == "ecf"));
        assert!(reports.iter().any(|r| r.identity_id == "ecg"));
        for r in &reports {
            assert!(
                r.pass,
                "{} {}: {} vs {}",
                r.identity_id, r.params, r.lhs, r.rhs
            );
            assert!(r.skipped.is_none());
        }
    }
}

#[test]
fn complementation_cascade_from_7733() {
    let reports = verify_complementation(7, 7, 3, 3, 3);
    for r in &reports {
        assert!(r.pass, "{} {} failed: {} vs {}", r.identity_id, r.params, r.lhs, r.rhs);
    }
    // first step has exponent n - 2a - 2 = -1: M(D_{7,7}) = M(D_{8,6}) / 2
    let first = reports
        .iter()
        .find(|r| r.identity_id == "ecc")
        .expect("first step present");
    assert_eq!(first.params, "m=7,n=7,a=3,b=3,d=3");
    assert!(first.skipped.is_none());
    // the cascade walks 3,3 -> 2,2 -> 1,1 -> 0,0 and then skips
    let steps = reports
        .iter()
        .filter(|r| r.identity_id == "ecc" || r.identity_id == "ecd")
        .count();
    assert_eq!(steps, 4);
    assert!(reports
        .iter()
        .any(|r| r.identity_id == "ecd" && r.skipped.is_some()));
    assert!(reports.iter().any(|r| r.identity_id == "ecf"));
    assert!(reports.iter().any(|r| r.identity_id == "ecg"));
}
