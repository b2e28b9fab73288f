use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use plucker_core::exactpoly::{fmt_rational, Rational, UniPoly};
use serde::{Deserialize, Serialize};

/// One row of output. Indices are JSON integers; every computed number is a
/// decimal string.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Entry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<u32>,
    /// Coefficients ascending in `d`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs_d: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

impl Entry {
    /// `coeffs_d` when `d` is symbolic, `value` when it has been evaluated.
    pub fn with_d_poly(mut self, p: &UniPoly, at: Option<i64>) -> Self {
        match at {
            None => self.coeffs_d = Some(coeffs_strings(p)),
            Some(k) => self.value = Some(fmt_rational(&p.eval_int(k))),
        }
        self
    }

    fn label(&self) -> String {
        let mut parts = Vec::new();
        if let Some(name) = &self.name {
            parts.push(name.clone());
        }
        if let Some(t) = self.xi {
            parts.push(format!("xi^{t}"));
        }
        match (self.k, self.l) {
            (Some(k), Some(0)) => parts.push(format!("s[{k}]")),
            (Some(k), Some(l)) => parts.push(format!("s[{k},{l}]")),
            _ => {}
        }
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        if let Some(j) = self.j {
            parts.push(format!("j={j}"));
        }
        if let Some(z) = self.zeta {
            parts.push(format!("zeta^{z}"));
        }
        parts.join(" ")
    }

    fn text_value(&self) -> String {
        if let Some(c) = &self.coeffs_d {
            let coeffs: Vec<_> = c
                .iter()
                .map(|x| plucker_core::exactpoly::parse_rational(x).expect("own output"))
                .collect();
            return factored(&UniPoly::from_coeffs(coeffs));
        }
        if let Some(v) = &self.value {
            return v.clone();
        }
        self.poly.clone().unwrap_or_default()
    }
}

/// The result of one command, as emitted by `--json`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct OutputDocument {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codim: Option<u32>,
    /// `"symbolic"` or the decimal value of `d`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }
}

/// Compact JSON with keys in sorted order.
pub fn emit_json(doc: &OutputDocument) -> String {
    // serde_json::Value keeps object keys in a BTreeMap
    let value = serde_json::to_value(doc).expect("documents are plain data");
    serde_json::to_string(&value).expect("values serialize")
}

pub fn parse_json(s: &str) -> serde_json::Result<OutputDocument> {
    serde_json::from_str(s)
}

pub fn emit_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    let mut header = doc.command.clone();
    if let Some(p) = &doc.partition {
        let parts: Vec<_> = p.iter().map(u32::to_string).collect();
        let _ = write!(header, " ({})", parts.join(","));
    }
    if let Some(c) = doc.codim {
        let _ = write!(header, "  codim {c}");
    }
    if let Some(d) = doc.d.as_deref().filter(|d| *d != "symbolic") {
        let _ = write!(header, "  d = {d}");
    }
    if let Some(b) = &doc.basis {
        let _ = write!(header, "  basis {b}");
    }
    out.push_str(&header);
    out.push('\n');
    for e in &doc.entries {
        let label = e.label();
        let value = e.text_value();
        if label.is_empty() {
            let _ = writeln!(out, "  {value}");
        } else {
            let _ = writeln!(out, "  {label}: {value}");
        }
        if let Some(x) = &e.expected {
            let _ = writeln!(out, "    expected: {x}");
        }
    }
    if let Some(v) = &doc.value {
        let _ = writeln!(out, "  {v}");
    }
    for n in &doc.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

pub fn coeffs_strings(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(fmt_rational).collect()
}

const ROOT_SEARCH: i64 = 200;

/// `p` with its integer roots pulled out as linear factors.
pub fn factored(p: &UniPoly) -> String {
    if p.degree().unwrap_or(0) == 0 {
        return p.to_string();
    }
    let mut rest = p.clone();
    let mut roots: Vec<(i64, u32)> = Vec::new();
    'outer: while rest.degree().unwrap_or(0) > 0 {
        for r in (0..=ROOT_SEARCH).flat_map(|r| [r, -r]) {
            if rest.eval_int(r).is_zero() {
                rest = rest
                    .exact_div(&UniPoly::linear_root(r))
                    .expect("root divides");
                match roots.iter_mut().find(|(x, _)| *x == r) {
                    Some((_, m)) => *m += 1,
                    None => roots.push((r, 1)),
                }
                continue 'outer;
            }
        }
        break;
    }
    roots.sort_unstable_by_key(|&(r, _)| (r < 0, r.abs()));
    let (lc, primitive) = content(&rest);
    let mut factors = Vec::new();
    for (r, m) in roots {
        let base = match r {
            0 => "d".to_string(),
            r if r > 0 => format!("(d-{r})"),
            r => format!("(d+{})", -r),
        };
        factors.push(if m == 1 { base } else { format!("{base}^{m}") });
    }
    if primitive.degree().unwrap_or(0) > 0 {
        factors.push(format!("({primitive})"));
    }
    let body = factors.join("*");
    let one = plucker_core::exactpoly::int(1);
    if lc == one {
        body
    } else if lc == -one {
        format!("-{body}")
    } else {
        format!("{}*{body}", fmt_rational(&lc))
    }
}

/// `p = c * q` with `q` integral, primitive and with positive leading coefficient.
fn content(p: &UniPoly) -> (Rational, UniPoly) {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero());
    let (g, l) = nonzero.fold((BigInt::zero(), BigInt::one()), |(g, l), c| {
        (g.gcd(c.numer()), l.lcm(c.denom()))
    });
    let mut c = Rational::new(g, l);
    if p.leading().is_some_and(|x| x.is_negative()) {
        c = -c;
    }
    (c.clone(), p.scale(&c.recip()))
}
