//! Check reports and their bit-stable JSON encoding.
//!
//! Reports are emitted with a fixed field order and floats printed with 17
//! significant digits, so repeated runs of the same configuration produce
//! byte-identical files. Non-finite values (sentinels such as the vacuous
//! `+inf` margin) serialize as `null`.

use num_complex::Complex64;

/// A single typed parameter recorded alongside a check result.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    F(f64),
    I(i64),
    S(String),
    B(bool),
}

/// Outcome of one named check: pass/fail, the worst signed margin seen, and
/// the sample point witnessing it.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub worst_margin: f64,
    pub witness: Complex64,
    /// Inputs the check depended on, in insertion order.
    pub params: Vec<(String, ParamValue)>,
}

impl CheckReport {
    pub fn new(check: &str, pass: bool, worst_margin: f64, witness: Complex64) -> Self {
        CheckReport {
            check: check.to_string(),
            pass,
            worst_margin,
            witness,
            params: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: ParamValue) -> Self {
        self.params.push((key.to_string(), value));
        self
    }

    pub fn param(&self, key: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn param_f64(&self, key: &str) -> Option<f64> {
        match self.param(key) {
            Some(ParamValue::F(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = String::with_capacity(256);
        out.push_str("{\n");
        out.push_str(&format!("  \"check\": {},\n", json_string(&self.check)));
        out.push_str(&format!("  \"pass\": {},\n", self.pass));
        out.push_str(&format!(
            "  \"worst_margin\": {},\n",
            json_float(self.worst_margin)
        ));
        out.push_str(&format!(
            "  \"witness\": [{}, {}],\n",
            json_float(self.witness.re),
            json_float(self.witness.im)
        ));
        out.push_str("  \"params\": {");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("\n    {}: {}", json_string(k), json_value(v)));
        }
        if self.params.is_empty() {
            out.push_str("}\n");
        } else {
            out.push_str("\n  }\n");
        }
        out.push('}');
        out.push('\n');
        out
    }
}

/// Format a float as a JSON number with 17 significant digits, or `null` when
/// non-finite.
pub fn json_float(x: f64) -> String {
    if x.is_finite() {
        format!("{:.16e}", x)
    } else {
        "null".to_string()
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_value(v: &ParamValue) -> String {
    match v {
        ParamValue::F(x) => json_float(*x),
        ParamValue::I(n) => n.to_string(),
        ParamValue::S(s) => json_string(s),
        ParamValue::B(b) => b.to_string(),
    }
}

/// Aggregate of a suite run.
#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Report with the smallest margin, if any report carries a finite margin.
    pub worst: Option<(String, f64, Complex64)>,
}

impl SuiteSummary {
    pub fn from_reports<'a>(reports: impl IntoIterator<Item = &'a CheckReport>) -> Self {
        let mut total = 0;
        let mut passed = 0;
        let mut worst: Option<(String, f64, Complex64)> = None;
        for r in reports {
            total += 1;
            if r.pass {
                passed += 1;
            }
            if r.worst_margin.is_finite()
                && worst.as_ref().is_none_or(|(_, m, _)| r.worst_margin < *m)
            {
                worst = Some((r.check.clone(), r.worst_margin, r.witness));
            }
        }
        SuiteSummary {
            total,
            passed,
            failed: total - passed,
            worst,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"total\": {},\n", self.total));
        out.push_str(&format!("  \"passed\": {},\n", self.passed));
        out.push_str(&format!("  \"failed\": {},\n", self.failed));
        match &self.worst {
            Some((check, margin, witness)) => {
                out.push_str("  \"worst\": {\n");
                out.push_str(&format!("    \"check\": {},\n", json_string(check)));
                out.push_str(&format!("    \"margin\": {},\n", json_float(*margin)));
                out.push_str(&format!(
                    "    \"witness\": [{}, {}]\n",
                    json_float(witness.re),
                    json_float(witness.im)
                ));
                out.push_str("  }\n");
            }
            None => out.push_str("  \"worst\": null\n"),
        }
        out.push_str("}\n");
        out
    }
}
