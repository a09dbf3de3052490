//! The associated graded Lie ring L(n,3) of B(n,3) over GF(3).
//!
//! Weight 1 has basis `x_i`, weight 2 the images of `b_ij = [a_j, a_i]`, and
//! weight 3 the images of `c_ijk = [[a_i, a_j], a_k]`. Products of total weight
//! above 3 vanish.

use serde::Serialize;

use crate::burnside::{BurnsideContext, BurnsideElement};
use crate::gf3::{self, mul_mod3, neg_mod3, DimensionError, Gf3Vector};
use crate::words::FreeWord;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    pub w1: Gf3Vector,
    pub w2: Gf3Vector,
    pub w3: Gf3Vector,
}

impl LieElement {
    pub fn zero(ctx: &BurnsideContext) -> Self {
        LieElement {
            w1: Gf3Vector::zero(ctx.n()),
            w2: Gf3Vector::zero(ctx.pair_count()),
            w3: Gf3Vector::zero(ctx.triple_count()),
        }
    }

    /// The weight-1 generator `x_i` (1-based).
    pub fn generator(ctx: &BurnsideContext, i: usize) -> Self {
        let mut e = Self::zero(ctx);
        e.w1.set(i - 1, 1);
        e
    }

    /// Weight-1 element with the given integer coefficients on `x_1..x_n`.
    pub fn linear(ctx: &BurnsideContext, coefficients: &[i64]) -> Self {
        let mut e = Self::zero(ctx);
        for (i, &c) in coefficients.iter().enumerate() {
            e.w1.set(i, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.w1.is_zero() && self.w2.is_zero() && self.w3.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, DimensionError> {
        Ok(LieElement {
            w1: self.w1.add(&other.w1)?,
            w2: self.w2.add(&other.w2)?,
            w3: self.w3.add(&other.w3)?,
        })
    }

    pub fn scale(&self, factor: u8) -> Self {
        LieElement {
            w1: self.w1.scale(factor),
            w2: self.w2.scale(factor),
            w3: self.w3.scale(factor),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(2)
    }
}

fn check_dims(ctx: &BurnsideContext, a: &LieElement) -> Result<(), DimensionError> {
    for (v, len) in [
        (&a.w1, ctx.n()),
        (&a.w2, ctx.pair_count()),
        (&a.w3, ctx.triple_count()),
    ] {
        if v.len() != len {
            return Err(DimensionError {
                expected: len,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// The Lie bracket, extended bilinearly from the basis.
pub fn bracket(
    ctx: &BurnsideContext,
    a: &LieElement,
    b: &LieElement,
) -> Result<LieElement, DimensionError> {
    check_dims(ctx, a)?;
    check_dims(ctx, b)?;
    let n = ctx.n();
    let mut out = LieElement::zero(ctx);

    // [x_i, x_j] = -b_ij for i < j
    for p in 0..ctx.pair_count() {
        let (i, j) = ctx.pair(p);
        let (i, j) = (i - 1, j - 1);
        let c = gf3::add_mod3(
            mul_mod3(a.w1.get(j), b.w1.get(i)),
            neg_mod3(mul_mod3(a.w1.get(i), b.w1.get(j))),
        );
        out.w2.add_at(p, c);
    }

    // [b_ij, x_k] = [[x_j, x_i], x_k] and [x_k, b_ij] = -[b_ij, x_k]
    for p in 0..ctx.pair_count() {
        let (i, j) = ctx.pair(p);
        let (ap, bp) = (a.w2.get(p), b.w2.get(p));
        if ap == 0 && bp == 0 {
            continue;
        }
        for k in 1..=n {
            let c = gf3::add_mod3(
                mul_mod3(ap, b.w1.get(k - 1)),
                neg_mod3(mul_mod3(a.w1.get(k - 1), bp)),
            );
            if c == 0 {
                continue;
            }
            if let Some(t) = ctx.weight3_bracket(j, i, k).expect("indices in range") {
                out.w3.add_at(t.triple, mul_mod3(c, t.coefficient));
            }
        }
    }
    Ok(out)
}

/// The leading graded piece of `x`: its coordinates in the deepest
/// lower-central layer containing it.
pub fn graded_image(ctx: &BurnsideContext, x: &BurnsideElement) -> LieElement {
    let mut out = LieElement::zero(ctx);
    match x.weight() {
        Some(1) => out.w1 = x.alpha().clone(),
        Some(2) => out.w2 = x.beta().clone(),
        Some(3) => out.w3 = x.gamma().clone(),
        _ => {}
    }
    out
}

/// The basis `e_1 .. e_4` of the weight-3 layer of L(4,3), each given as
/// the left-normed bracket `[[x_a, x_b], x_c]`.
pub const LEMMA7_BASIS: [(usize, usize, usize); 4] = [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3)];

pub fn lemma7_basis_legend() -> String {
    LEMMA7_BASIS
        .iter()
        .enumerate()
        .map(|(m, (a, b, c))| format!("e{}=[[x{a},x{b}],x{c}]", m + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Coordinates of a weight-3 vector of L(4,3) in the `e` basis.
pub fn to_e_basis(ctx: &BurnsideContext, w3: &Gf3Vector) -> Gf3Vector {
    let mut out = Gf3Vector::zero(LEMMA7_BASIS.len());
    for (m, &(a, b, c)) in LEMMA7_BASIS.iter().enumerate() {
        let t = ctx
            .weight3_bracket(a, b, c)
            .expect("n = 4")
            .expect("distinct indices");
        // e_m = coefficient * c_t, and coefficient is its own inverse
        out.set(m, (mul_mod3(w3.get(t.triple), t.coefficient)) as i64);
    }
    out
}

/// `uu' = [x2^-1 x3 x4^-1, x1^-1][x3 x4^-1, x2][x4^-1, x3^-1]` in weight 2.
fn u_ubar(ctx: &BurnsideContext) -> LieElement {
    let terms = [
        ([0, -1, 1, -1], [-1, 0, 0, 0]),
        ([0, 0, 1, -1], [0, 1, 0, 0]),
        ([0, 0, 0, -1], [0, 0, -1, 0]),
    ];
    terms.iter().fold(LieElement::zero(ctx), |acc, (l, r)| {
        let t = bracket(
            ctx,
            &LieElement::linear(ctx, l),
            &LieElement::linear(ctx, r),
        )
        .expect("n = 4");
        acc.add(&t).expect("n = 4")
    })
}

/// Row `i` is the weight-3 image of `P_i = [u u', x_i u']` in the `e` basis,
/// with `u = x1 x2^-1 x3 x4^-1` and `u' = x1^-1 x2 x3^-1 x4`.
pub fn lemma7_matrix() -> Vec<Gf3Vector> {
    let ctx = BurnsideContext::new(4).expect("n = 4");
    let uu = u_ubar(&ctx);
    (1..=4)
        .map(|i| {
            let mut coeffs = vec![-1i64, 1, -1, 1];
            coeffs[i - 1] += 1;
            let right = LieElement::linear(&ctx, &coeffs);
            let p = bracket(&ctx, &uu, &right).expect("n = 4");
            to_e_basis(&ctx, &p.w3)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma7Summary {
    pub basis: Vec<String>,
    /// Rows as balanced residues in `{-1, 0, 1}`.
    pub rows: Vec<Vec<i8>>,
    pub determinant: i8,
    pub rank: usize,
}

pub fn lemma7_summary() -> Lemma7Summary {
    let rows = lemma7_matrix();
    let det = gf3::determinant(&rows).expect("square");
    Lemma7Summary {
        basis: LEMMA7_BASIS
            .iter()
            .map(|(a, b, c)| format!("[[x{a},x{b}],x{c}]"))
            .collect(),
        rows: rows.iter().map(Gf3Vector::to_signed).collect(),
        determinant: if det == 2 { -1 } else { det as i8 },
        rank: gf3::rank_of(4, &rows).expect("length 4"),
    }
}

/// The relator `P_i` of the closed braid `(s1 s2 s3 s4)^10` as a word, built
/// as the group commutator `[u u', x_i u']`.
pub fn lemma7_commutator_word(i: usize) -> FreeWord {
    let u: FreeWord = "x1 x2^-1 x3 x4^-1".parse().expect("literal");
    let ubar: FreeWord = "x1^-1 x2 x3^-1 x4".parse().expect("literal");
    crate::words::commutator_word(&u.concat(&ubar), &FreeWord::generator(i).concat(&ubar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> BurnsideContext {
        BurnsideContext::new(4).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let ctx = ctx4();
        let x: Vec<LieElement> = (1..=4).map(|i| LieElement::generator(&ctx, i)).collect();
        assert!(bracket(&ctx, &x[0], &x[0]).unwrap().is_zero());
        let x23_4 = bracket(&ctx, &bracket(&ctx, &x[1], &x[2]).unwrap(), &x[3]).unwrap();
        assert_eq!(to_e_basis(&ctx, &x23_4.w3).entries(), &[1, 0, 0, 0]);
        let x12_2 = bracket(&ctx, &bracket(&ctx, &x[0], &x[1]).unwrap(), &x[1]).unwrap();
        assert!(x12_2.is_zero());
    }

    #[test]
    fn weight_four_vanishes() {
        let ctx = ctx4();
        let x: Vec<LieElement> = (1..=4).map(|i| LieElement::generator(&ctx, i)).collect();
        let w3 = bracket(&ctx, &bracket(&ctx, &x[0], &x[1]).unwrap(), &x[2]).unwrap();
        assert!(bracket(&ctx, &w3, &x[3]).unwrap().is_zero());
        let w2a = bracket(&ctx, &x[0], &x[1]).unwrap();
        let w2b = bracket(&ctx, &x[2], &x[3]).unwrap();
        assert!(bracket(&ctx, &w2a, &w2b).unwrap().is_zero());
    }

    #[test]
    fn lemma7_rows() {
        let rows: Vec<Vec<i8>> = lemma7_matrix().iter().map(Gf3Vector::to_signed).collect();
        assert_eq!(rows[0], vec![-1, 0, 0, 0]);
        assert_eq!(rows[1], vec![1, 1, 0, 0]);
        assert_eq!(rows[2], vec![1, -1, -1, 0]);
        assert_eq!(rows[3], vec![1, -1, 1, 1]);
        let s = lemma7_summary();
        assert_eq!(s.determinant, 1);
        assert_eq!(s.rank, 4);
    }

    #[test]
    fn graded_image_examples() {
        let ctx = ctx4();
        assert!(graded_image(&ctx, &ctx.identity()).is_zero());
        let w: FreeWord = "x1 x2 x1^-1 x2^-1".parse().unwrap();
        let img = graded_image(&ctx, &ctx.evaluate(&w).unwrap());
        // [a_1, a_2] = b_12^-1
        let p12 = ctx.pair_index(1, 2).unwrap();
        assert_eq!(img.w2, Gf3Vector::unit(ctx.pair_count(), p12).neg());
        let x1 = LieElement::generator(&ctx, 1);
        let x2 = LieElement::generator(&ctx, 2);
        assert_eq!(img, bracket(&ctx, &x1, &x2).unwrap());
    }
}
