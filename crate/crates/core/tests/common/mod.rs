//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use burnside_core::gf3::Gf3Vector;
use burnside_core::linkio::PdCode;

/// Number of Fox 3-colorings, by enumerating all `3^arcs` labelings and
/// checking `2 over - under_in - under_out = 0 (mod 3)` at every crossing.
pub fn fox_colorings_brute_force(d: &PdCode) -> usize {
    let m = d.arc_count();
    let total = 3usize.pow(m as u32);
    let mut colors = vec![0i64; m + 1];
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        for slot in colors.iter_mut().skip(1) {
            *slot = (c % 3) as i64;
            c /= 3;
        }
        if d.crossings().iter().all(|x| {
            (2 * colors[x.over] - colors[x.under_in] - colors[x.under_out]).rem_euclid(3) == 0
        }) {
            count += 1;
        }
    }
    count
}

/// Every vector in the span of `rows`, by enumerating all coefficient tuples.
pub fn span_brute_force(len: usize, rows: &[Gf3Vector]) -> Vec<Gf3Vector> {
    let total = 3usize.pow(rows.len() as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let mut v = Gf3Vector::zero(len);
        for r in rows {
            v.add_scaled(r, (c % 3) as u8).unwrap();
            c /= 3;
        }
        out.push(v);
    }
    out.sort();
    out.dedup();
    out
}

pub const TREFOIL_PD: &str = "X 1 3 2\nX 2 1 3\nX 3 2 1\n";
pub const FIGURE_EIGHT_PD: &str = "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]";

pub const Q_TEMPLATE: &str = "x_1x_2^{-1}x_3x_4^{-1}x_5x_1^{-1}x_2x_3^{-1}x_4x_5^{-1} x_i \
     x_5^{-1}x_4x_3^{-1}x_2x_1^{-1}x_5x_4^{-1}x_3x_2^{-1}x_1";
pub const P_TEMPLATE: &str = "x_1x_2^{-1}x_3x_4^{-1}x_1^{-1}x_2x_3^{-1}x_4x_i \
     x_4x_3^{-1}x_2x_1^{-1}x_4^{-1}x_3x_2^{-1}x_1x_i^{-1}";

pub fn printed(template: &str, i: usize) -> burnside_core::words::FreeWord {
    template.replace("x_i", &format!("x_{i}")).parse().unwrap()
}

use std::collections::HashSet;

use burnside_core::burnside::{BurnsideContext, BurnsideElement};

/// All elements of B(n,3), listed by coordinates. Only sensible for tiny n.
pub fn all_elements(ctx: &BurnsideContext) -> Vec<BurnsideElement> {
    let (n, p, t) = (ctx.n(), ctx.pair_count(), ctx.triple_count());
    let d = n + p + t;
    (0..3usize.pow(d as u32))
        .map(|code| {
            let mut c = code;
            let mut digits = Vec::with_capacity(d);
            for _ in 0..d {
                digits.push((c % 3) as i64);
                c /= 3;
            }
            ctx.element(
                Gf3Vector::from_ints(digits[..n].iter().copied()),
                Gf3Vector::from_ints(digits[n..n + p].iter().copied()),
                Gf3Vector::from_ints(digits[n + p..].iter().copied()),
            )
            .unwrap()
        })
        .collect()
}

/// Size of the normal closure of `relators`, by closing the set of all
/// conjugates under multiplication.
pub fn normal_closure_size_brute_force(
    ctx: &BurnsideContext,
    relators: &[BurnsideElement],
) -> usize {
    let everything = all_elements(ctx);
    let conjugates: HashSet<BurnsideElement> = relators
        .iter()
        .flat_map(|r| everything.iter().map(|g| ctx.conjugate(g, r).unwrap()))
        .collect();
    let mut seen: HashSet<BurnsideElement> = HashSet::from([ctx.identity()]);
    let mut frontier = vec![ctx.identity()];
    while let Some(x) = frontier.pop() {
        for c in &conjugates {
            let y = ctx.multiply(&x, c).unwrap();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}
