//! Published n = 3 and n = 4 polynomials in their printed notation, plus a
//! converter to the `*`-separated grammar accepted by `parse_poly`.
#![allow(dead_code)]

use std::sync::Arc;

use redisc_core::{parse_poly, Polynomial, VarTable};

pub const R3: &str = "4a^3c-a^2b^2-18abc+4b^3+27c^2";

pub const R4: &str = "-27a^4d^2+18a^3bcd-4a^3c^3+a^2b^2c^2+144a^2bd^2-4a^2b^3d\
    -6a^2c^2d-80ab^2cd+18abc^3-192acd^2+16b^4d\
    -4b^3c^2-128b^2d^2+144bc^2d-27c^4+256d^3";

/// `(k, constant, a_n exponent, M_k, T_k)` for the quartic.
pub const QUARTIC_FACTORS: [(usize, i64, u32, &str, &str); 4] = [
    (1, 6912, 2, "16b^2d^2-8bc^2d+c^4-64d^3", "3b^4d-b^3c^2+72b^2d^2-108bc^2d+27c^4+432d^3"),
    (2, -4096, 1, "a^2d-c^2", "27a^4d^2-a^3c^3-6a^2c^2d-768acd^2+27c^4+4096d^3"),
    (3, 6912, 1, "a^4-8a^2b+16b^2-64d", "27a^4d-a^2b^3-108a^2bd+3b^4+72b^2d+432d^2"),
    (4, 4096, 0, "a^3-4ab+8c", "27a^3c-9a^2b^2-108abc+32b^3+108c^2"),
];

/// Inserts the implicit products: `4a^3c` becomes `4*a^3*c`.
pub fn to_grammar(printed: &str) -> String {
    let mut out = String::with_capacity(printed.len() * 2);
    let mut prev: Option<char> = None;
    for ch in printed.chars().filter(|c| !c.is_whitespace()) {
        if ch.is_ascii_alphabetic() && prev.is_some_and(|p| p.is_ascii_alphanumeric()) {
            out.push('*');
        }
        out.push(ch);
        prev = Some(ch);
    }
    out
}

pub fn printed(text: &str, table: &Arc<VarTable>) -> Polynomial {
    parse_poly(&to_grammar(text), table).unwrap_or_else(|e| panic!("fixture {text}: {e}"))
}

#[test]
fn converter_inserts_products() {
    assert_eq!(to_grammar("4a^3c-a^2b^2"), "4*a^3*c-a^2*b^2");
    assert_eq!(to_grammar("-192acd^2"), "-192*a*c*d^2");
}
