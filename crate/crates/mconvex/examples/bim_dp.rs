// brute transfer DP used to cross-check the indent-class closed form
use num::BigUint;
use std::collections::HashMap;

fn table(hmax: u16, wmax: u16) -> Vec<BigUint> {
    let target = hmax as u32 + 2;
    let mut ivals = Vec::new();
    for lo in 1..=hmax { for hi in lo..=hmax { ivals.push((lo, hi)); } }
    let mut cur: HashMap<(u16, u16, u8, u8, bool, bool, u32), BigUint> = HashMap::new();
    for &(lo, hi) in &ivals {
        let ln = (hi - lo + 1) as u32;
        if ln > target { continue; }
        *cur.entry((lo, hi, 0, 0, lo == 1, hi == hmax, ln)).or_insert(BigUint::ZERO) += 1u32;
    }
    let mut res = vec![BigUint::ZERO; wmax as usize + 1];
    for w in 1..=wmax {
        for (&(_, _, hp, _, minf, maxf, d), c) in &cur {
            if minf && maxf && d == target && hp >= 2 { res[w as usize] += c; }
        }
        if w == wmax { break; }
        let mut nxt: HashMap<(u16, u16, u8, u8, bool, bool, u32), BigUint> = HashMap::new();
        for (&(lo, hi, hp, lp, minf, maxf, d), c) in &cur {
            for &(lo2, hi2) in &ivals {
                if lo.max(lo2) > hi.min(hi2) { continue; }
                let ov = (hi.min(hi2) - lo.max(lo2) + 1) as u32;
                let d2 = d + (hi2 - lo2 + 1) as u32 - ov;
                if d2 > target { continue; }
                let hp2 = if hi2 > hi {
                    match hp { 1 => 2, 0 | 2 => hp, _ => continue }
                } else if hi2 < hi {
                    match hp { 0 => 1, 2 => 3, _ => hp }
                } else { hp };
                let lp2 = if lo2 > lo { 1 } else if lo2 < lo {
                    if lp == 1 { continue } else { 0 }
                } else { lp };
                *nxt.entry((lo2, hi2, hp2, lp2, minf || lo2 == 1, maxf || hi2 == hmax, d2))
                    .or_insert(BigUint::ZERO) += c;
            }
        }
        cur = nxt;
    }
    res
}

fn main() {
    let wmax = 50u16;
    for h in 1..=36u16 {
        let t = table(h, wmax);
        let s: Vec<String> = (1..=wmax as usize).map(|w| t[w].to_string()).collect();
        println!("{} {}", h, s.join(" "));
    }
}
