//! Loader for the checksummed monomial data files embedded in the crate.
//!
//! Each file holds one large polynomial, one monomial per line (exponents in
//! the header's variable order, then an integer coefficient), preceded by a
//! header recording the polynomial name, its variables and a SHA-256 digest
//! of the body. The digest is verified on every load.

use crate::series::Exps;
use crate::vars::VarSet;
use crate::{Rat, Series};
use num::BigInt;
use sha2::{Digest, Sha256};
use smallvec::SmallVec;
use std::str::FromStr;
use std::sync::Arc;

static FILES: &[(&str, &str)] = &[
    ("bimodal2_a", include_str!("../../data/bimodal2_a.poly")),
    ("bimodal2_a_fix", include_str!("../../data/bimodal2_a_fix.poly")),
    ("bimodal2_b", include_str!("../../data/bimodal2_b.poly")),
    ("bimodal2_b_fix", include_str!("../../data/bimodal2_b_fix.poly")),
    ("convex_st_a", include_str!("../../data/convex_st_a.poly")),
    ("two_staircase_a", include_str!("../../data/two_staircase_a.poly")),
    ("two_staircase_b", include_str!("../../data/two_staircase_b.poly")),
    ("two_unimodal_a", include_str!("../../data/two_unimodal_a.poly")),
    ("two_unimodal_b", include_str!("../../data/two_unimodal_b.poly")),
    ("two_convex_a", include_str!("../../data/two_convex_a.poly")),
    ("two_convex_b", include_str!("../../data/two_convex_b.poly")),
];

fn raw(name: &str) -> &'static str {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown data polynomial {name}"))
        .1
}

/// The recorded SHA-256 digest of a data polynomial (hex).
pub fn poly_checksum(name: &str) -> String {
    let (_, _, digest, _) = parse_header(raw(name));
    digest
}

fn parse_header(text: &'static str) -> (String, Vec<String>, String, &'static str) {
    let mut name = String::new();
    let mut vars = Vec::new();
    let mut digest = String::new();
    let mut body_start = 0;
    for line in text.lines() {
        if !line.starts_with('#') {
            break;
        }
        body_start += line.len() + 1;
        let fields: Vec<&str> = line[1..].split_whitespace().collect();
        match fields.first().copied() {
            Some("poly") => name = fields[1].to_string(),
            Some("vars") => vars = fields[1..].iter().map(|s| s.to_string()).collect(),
            Some("sha256") => digest = fields[1].to_string(),
            _ => panic!("malformed data header line: {line}"),
        }
    }
    (name, vars, digest, &text[body_start..])
}

/// Load a data polynomial into the given registry (matching the file's
/// variables by name), truncated to `order`. Panics on checksum mismatch.
pub fn load_poly(name: &str, vars: &Arc<VarSet>, order: u32) -> Series {
    let (fname, fvars, digest, body) = parse_header(raw(name));
    assert_eq!(fname, name, "data file name mismatch");
    let actual = format!("{:x}", Sha256::digest(body.as_bytes()));
    assert_eq!(
        actual, digest,
        "checksum mismatch for data polynomial {name}"
    );
    let map: Vec<usize> = fvars.iter().map(|n| vars.var(n)).collect();
    let terms = body.lines().map(|line| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), map.len() + 1, "malformed monomial: {line}");
        let mut e: Exps = SmallVec::from_elem(0u16, vars.len());
        for (k, f) in fields[..map.len()].iter().enumerate() {
            e[map[k]] = f.parse().unwrap();
        }
        let c = BigInt::from_str(fields[map.len()]).unwrap();
        (e, Rat::from_integer(c))
    });
    Series::from_terms(vars, order, terms)
}
