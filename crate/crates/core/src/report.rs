//! Machine-readable verification reports: named comparisons with both
//! operands recorded, JSON and flat-CSV export.

use serde::Serialize;

/// How a verification suite established its result: a full scan of every
/// isomorphism class, checks on explicitly constructed graphs, or seeded
/// random sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationMode {
    Exhaustive,
    Constructed,
    Sampled,
}

impl std::fmt::Display for VerificationMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VerificationMode::Exhaustive => "exhaustive",
            VerificationMode::Constructed => "constructed",
            VerificationMode::Sampled => "sampled",
        };
        f.write_str(s)
    }
}

/// One recorded comparison.  `relation` is drawn from a small fixed
/// vocabulary: `"<="`, `"<"`, `">="`, `">"`, `"=="`, `"~="` (approximate
/// equality), and `"info"` (recorded operands, no claim).
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: String,
    pub pass: bool,
}

impl Check {
    /// `lhs <= rhs` up to an additive tolerance.
    pub fn le(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: "<=".into(),
            pass: lhs <= rhs + tol,
        }
    }

    /// `lhs < rhs` with a strict margin.
    pub fn lt(name: impl Into<String>, lhs: f64, rhs: f64, margin: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: "<".into(),
            pass: lhs < rhs - margin,
        }
    }

    /// `lhs >= rhs` up to an additive tolerance.
    pub fn ge(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: ">=".into(),
            pass: lhs >= rhs - tol,
        }
    }

    /// `lhs > rhs` with a strict margin.
    pub fn gt(name: impl Into<String>, lhs: f64, rhs: f64, margin: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: ">".into(),
            pass: lhs > rhs + margin,
        }
    }

    /// Bitwise-exact equality (used for integer-valued comparisons).
    pub fn eq_exact(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: "==".into(),
            pass: lhs == rhs,
        }
    }

    /// `|lhs - rhs| <= tol`.
    pub fn approx_eq(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: "~=".into(),
            pass: (lhs - rhs).abs() <= tol,
        }
    }

    /// Recorded operands with no pass/fail claim.
    pub fn info(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            relation: "info".into(),
            pass: true,
        }
    }
}

/// A structured verification report: theorem id, parameters, verification
/// mode, every comparison with its operands, witness graphs (graph6), and
/// any warnings (e.g. sub-threshold orders included for information only).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: serde_json::Value,
    pub mode: VerificationMode,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, params: serde_json::Value, mode: VerificationMode) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            params,
            mode,
            checks: Vec::new(),
            witnesses: Vec::new(),
            warnings: Vec::new(),
        }
    }

    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Flat CSV: one row per check, then one row per witness.  Columns:
    /// `theorem,mode,params,name,lhs,rhs,relation,pass,detail` (the `detail`
    /// column carries witness graph6 strings and is empty on check rows).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,mode,params,name,lhs,rhs,relation,pass,detail\n");
        let params = self.params.to_string();
        let prefix = format!(
            "{},{},{}",
            csv_field(&self.theorem),
            self.mode,
            csv_field(&params)
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{},\n",
                prefix,
                csv_field(&c.name),
                c.lhs,
                c.rhs,
                csv_field(&c.relation),
                c.pass
            ));
        }
        for w in &self.witnesses {
            out.push_str(&format!("{prefix},witness,,,graph6,true,{}\n", csv_field(w)));
        }
        out
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new(
            "T21",
            serde_json::json!({"n": [4, 6]}),
            VerificationMode::Exhaustive,
        );
        r.checks.push(Check::le("n=4:edges", 5.0, 6.0, 0.0));
        r.checks.push(Check::approx_eq("n=4:radius", 4.561552812808829, 4.5615528128, 1e-8));
        r.witnesses.push("DR{".into());
        r
    }

    #[test]
    fn pass_aggregation_reflects_every_check() {
        let mut r = sample();
        assert!(r.passed());
        r.checks.push(Check::lt("bad", 2.0, 1.0, 1e-8));
        assert!(!r.passed());
    }

    #[test]
    fn json_shape_has_the_contract_fields() {
        let r = sample();
        let v: serde_json::Value = serde_json::from_str(&r.to_json_pretty()).unwrap();
        assert_eq!(v["theorem"], "T21");
        assert_eq!(v["mode"], "exhaustive");
        assert!(v["params"]["n"].is_array());
        let checks = v["checks"].as_array().unwrap();
        assert_eq!(checks.len(), 2);
        for c in checks {
            for field in ["name", "lhs", "rhs", "relation", "pass"] {
                assert!(!c[field].is_null(), "missing field {field}");
            }
        }
        assert_eq!(v["witnesses"][0], "DR{");
        assert!(v["warnings"].as_array().unwrap().is_empty());
    }

    #[test]
    fn csv_is_flat_with_header_and_witness_rows() {
        let r = sample();
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 2 + 1);
        assert_eq!(lines[0], "theorem,mode,params,name,lhs,rhs,relation,pass,detail");
        assert!(lines[1].starts_with("T21,exhaustive,"));
        // The params blob contains commas, so it must be quoted.
        assert!(lines[1].contains("\"{\"\"n\"\":[4,6]}\""));
        assert!(lines[3].contains("witness"));
        assert!(lines[3].ends_with("DR{"));
    }

    #[test]
    fn relation_vocabulary_behaves() {
        assert!(Check::le("x", 1.0, 1.0, 0.0).pass);
        assert!(!Check::lt("x", 1.0, 1.0, 1e-9).pass);
        assert!(Check::gt("x", 1.0 + 1e-6, 1.0, 1e-8).pass);
        assert!(Check::ge("x", 0.999999999, 1.0, 1e-8).pass);
        assert!(Check::eq_exact("x", 3.0, 3.0).pass);
        assert!(!Check::eq_exact("x", 3.0, 3.0000001).pass);
        assert!(Check::info("x", f64::NAN, 0.0).pass);
    }
}
