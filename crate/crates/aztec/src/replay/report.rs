//! Verification records and their JSON-lines serialization.

use serde::Serialize;

/// One verified equation instance.
///
/// `elapsed_ms` is diagnostic only and is excluded from serialization so
/// report files are byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl IdentityReport {
    pub fn check(identity_id: &str, params: String, lhs: String, rhs: String) -> Self {
        IdentityReport {
            identity_id: identity_id.to_string(),
            pass: lhs == rhs,
            params,
            lhs,
            rhs,
            skipped: None,
            elapsed_ms: 0,
        }
    }

    pub fn skipped(identity_id: &str, params: String, reason: &str) -> Self {
        IdentityReport {
            identity_id: identity_id.to_string(),
            params,
            lhs: String::new(),
            rhs: String::new(),
            pass: true,
            skipped: Some(reason.to_string()),
            elapsed_ms: 0,
        }
    }

    pub fn and_assert(mut self, ok: bool, note: &str) -> Self {
        if !ok {
            self.pass = false;
            self.rhs = format!("{} [failed: {}]", self.rhs, note);
        }
        self
    }
}

/// Numeric-aware sort key so `n=10` sorts after `n=2`.
fn numeric_key(s: &str) -> Vec<i64> {
    let mut out = Vec::new();
    let mut cur: Option<i64> = None;
    let mut sign = 1i64;
    for ch in s.chars() {
        if let Some(d) = ch.to_digit(10) {
            cur = Some(cur.unwrap_or(0) * 10 + d as i64);
        } else {
            if let Some(v) = cur.take() {
                out.push(sign * v);
            }
            sign = if ch == '-' { -1 } else { 1 };
        }
    }
    if let Some(v) = cur {
        out.push(sign * v);
    }
    out
}

/// Serialize reports as JSON lines, sorted by (identity id, parameters).
pub fn to_jsonl(reports: &[IdentityReport]) -> String {
    let mut sorted: Vec<&IdentityReport> = reports.iter().collect();
    sorted.sort_by(|a, b| {
        (&a.identity_id, numeric_key(&a.params), &a.params).cmp(&(
            &b.identity_id,
            numeric_key(&b.params),
            &b.params,
        ))
    });
    let mut out = String::new();
    for r in sorted {
        out.push_str(&serde_json::to_string(r).expect("report serialization"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_stable() {
        let a = IdentityReport::check("eba", "n=10".into(), "1".into(), "1".into());
        let b = IdentityReport::check("eba", "n=2".into(), "1".into(), "1".into());
        let s = to_jsonl(&[a.clone(), b.clone()]);
        let lines: Vec<&str> = s.lines().collect();
        assert!(lines[0].contains("n=2"));
        assert!(lines[1].contains("n=10"));
        assert!(!s.contains("elapsed"));
        assert_eq!(s, to_jsonl(&[b, a]));
    }
}
