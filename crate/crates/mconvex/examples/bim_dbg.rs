use mconvex::families::closed::bimodal_closed_2;
use mconvex::vars::VarSet;
use mconvex::{catalog, Rat, Series};
use num::BigInt;
use std::str::FromStr;

fn main() {
    let order = 36;
    let vars = VarSet::xy(order);
    // G on the rectangle W<=22, H<=12, as coefficients of x^W y^(H+2)
    let text = std::fs::read_to_string("/tmp/dp_m2_out.txt").unwrap();
    let mut terms = Vec::new();
    for line in text.lines() {
        let f: Vec<&str> = line.split_whitespace().collect();
        let h: u16 = f[0].parse().unwrap();
        for (i, v) in f[1..].iter().enumerate() {
            let w = i as u16 + 1;
            let c = BigInt::from_str(v).unwrap();
            if c != BigInt::from(0) {
                terms.push((smallvec::smallvec![w, h + 2], Rat::from_integer(c)));
            }
        }
    }
    let g = Series::from_terms(&vars, order, terms.into_iter());
    let c = bimodal_closed_2(order, true);
    let diff = g.sub(&c);
    let omx5 = catalog::poly(order, &[(0, 0, 1), (1, 0, -1)]).pow(5);
    let sd3 = catalog::poly(order, &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1)]).pow(3);
    let t = diff
        .mul(&omx5)
        .mul(&sd3)
        .mul(&catalog::delta(order).pow(3))
        .div_monomial(&[2, 0]);
    // valid window: x<=22, y<=12
    let mut inwin = Vec::new();
    let mut margin = Vec::new();
    for (e, coef) in t.terms() {
        if e[1] > 12 { continue; }
        if e[0] <= 18 {
            inwin.push((e[0], e[1], coef.clone()));
        } else if e[0] <= 22 {
            margin.push((e[0], e[1], coef.clone()));
        }
    }
    println!("margin (x 19..22, should be empty): {} terms", margin.len());
    for (a, b, c) in &margin { println!("  {} {} {}", a, b, c); }
    println!("extension terms (x<=18): {}", inwin.len());
    for (a, b, c) in &inwin { println!("{} {} {}", a, b, c); }
}
