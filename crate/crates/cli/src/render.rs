//! Textual output formats and the JSON exchange schema.
//!
//! The JSON layout is fixed and byte-exact: rationals print as "p/q" with
//! the sign on the numerator and integers without the "/1", coefficient
//! lists run ascending from `min_exponent`, and object keys keep their
//! declared order. Ordinary polynomials are padded down to exponent 0 so
//! the list always starts at the constant term.

use hyperappell::{LaurentPoly, Rational};
use serde::{Deserialize, Serialize};

/// Family block of the exchange schema. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub k: u32,
    pub m: String,
}

/// One polynomial together with the family and index it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub family: FamilyJson,
    pub n: u32,
    pub min_exponent: i64,
    pub coeffs: Vec<String>,
}

/// Spec emitted by the reduce command. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReduceJson {
    pub k: u32,
    pub m: String,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

/// Dense coefficient run for emission: starts at min(0, min_exponent) so an
/// ordinary polynomial always lists its constant term first, ends at the
/// degree. The zero polynomial is a single "0" at exponent 0.
pub fn padded_coefficients(p: &LaurentPoly) -> (i64, Vec<Rational>) {
    match p.degree() {
        None => (0, vec![Rational::zero()]),
        Some(deg) => {
            let start = p.min_exponent().min(0);
            (start, (start..=deg).map(|e| p.coeff(e)).collect())
        }
    }
}

pub fn poly_to_json(family: &FamilyJson, n: u32, p: &LaurentPoly) -> String {
    let (min_exponent, coeffs) = padded_coefficients(p);
    let doc = PolyJson {
        family: family.clone(),
        n,
        min_exponent,
        coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
    };
    serde_json::to_string(&doc).expect("schema serializes")
}

/// Ascending "c * x^j" terms, nonzero coefficients only.
pub fn poly_to_plain(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.terms()
        .map(|(e, c)| format!("{c} * x^{e}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Two columns, exponent then coefficient, over the padded dense range.
pub fn poly_to_csv(p: &LaurentPoly) -> String {
    let (start, coeffs) = padded_coefficients(p);
    let mut out = String::from("exponent,coefficient");
    for (offset, c) in coeffs.iter().enumerate() {
        out.push('\n');
        out.push_str(&format!("{},{}", start + offset as i64, c));
    }
    out
}

fn latex_scalar(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        let mag = c.abs();
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

/// Descending powers with explicit signs: "x^{2} - 1", "-\frac{1}{2}x^{3} + x".
pub fn poly_to_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(i64, &Rational)> = p.terms().collect();
    terms.reverse();

    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let body = if *e == 0 {
            latex_scalar(&mag)
        } else {
            let power = if *e == 1 {
                "x".to_string()
            } else {
                format!("x^{{{e}}}")
            };
            if mag.is_one() {
                power
            } else {
                format!("{}{}", latex_scalar(&mag), power)
            }
        };
        out.push_str(&body);
    }
    out
}

/// Compact JSON array of rational strings, e.g. ["1","0","-1/2"].
pub fn scalar_array(values: &[Rational]) -> String {
    let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    serde_json::to_string(&strings).expect("string array serializes")
}
