//! Exact arithmetic in the free Burnside group B(n,3).
//!
//! B(n,3) is nilpotent of class 3 and is handled through a polycyclic
//! presentation with three elementary abelian layers:
//!
//! * weight 1: `a_1 .. a_n`
//! * weight 2: `b_ij = [a_j, a_i]` for `i < j`
//! * weight 3: `c_ijk = [[a_i, a_j], a_k]` for `i < j < k`
//!
//! with `[x, y] = x y x^-1 y^-1`. Every element has a unique normal form
//! `prod a_i^alpha_i * prod b_ij^beta_ij * prod c_ijk^gamma_ijk`, exponents in
//! GF(3). The defining relations are
//!
//! ```text
//! a_j a_i = a_i a_j b_ij          (i < j)
//! b_ij a_k = a_k b_ij [b_ij, a_k]  [b_ij, a_k] = [[a_j, a_i], a_k]
//! ```
//!
//! where the weight-3 bracket is trilinear and alternating, every weight-4
//! commutator is trivial, and all generators have order 3.

use std::collections::VecDeque;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::gf3::{mul_mod3, neg_mod3, Gf3Basis, Gf3Vector};
use crate::words::FreeWord;

/// Largest generator count the engine accepts.
pub const MAX_GENERATORS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnsideError {
    #[error("generator index {index} out of range 1..={n}")]
    Range { index: usize, n: usize },
    #[error("element has {found} generators but the context has {expected}")]
    Context { expected: usize, found: usize },
    #[error("{n} generators exceeds the engine cap of {max}")]
    Capacity { n: usize, max: usize },
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent `e` with `|B(n,3)| = 3^e`.
pub fn burnside_exponent(n: usize) -> usize {
    n + binomial(n, 2) + binomial(n, 3)
}

/// Sign of the permutation sorting three distinct values, and the sorted triple.
fn sort3(i: usize, j: usize, k: usize) -> (bool, [usize; 3]) {
    let mut t = [i, j, k];
    let mut odd = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                odd = !odd;
            }
        }
    }
    (odd, t)
}

/// A signed weight-3 basis term `sign * c_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedTriple {
    /// Index of the basis element in lexicographic order.
    pub triple: usize,
    /// Coefficient in GF(3): 1 or 2 (= -1).
    pub coefficient: u8,
}

/// Index tables and structure constants for B(n,3).
#[derive(Debug, Clone)]
pub struct BurnsideContext {
    n: usize,
    pairs: Vec<(usize, usize)>,
    pair_index: Vec<usize>,
    triples: Vec<(usize, usize, usize)>,
    triple_index: Vec<usize>,
    // [b_p, a_k] for pair p and generator k, at p * n + k
    pair_gen: Vec<Option<SignedTriple>>,
}

const NONE: usize = usize::MAX;

impl BurnsideContext {
    pub fn new(n: usize) -> Result<Self, BurnsideError> {
        if n > MAX_GENERATORS {
            return Err(BurnsideError::Capacity {
                n,
                max: MAX_GENERATORS,
            });
        }
        let mut pairs = Vec::new();
        let mut pair_index = vec![NONE; n * n];
        for i in 0..n {
            for j in i + 1..n {
                pair_index[i * n + j] = pairs.len();
                pairs.push((i, j));
            }
        }
        let mut triples = Vec::new();
        let mut triple_index = vec![NONE; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triple_index[(i * n + j) * n + k] = triples.len();
                    triples.push((i, j, k));
                }
            }
        }
        let mut ctx = BurnsideContext {
            n,
            pairs,
            pair_index,
            triples,
            triple_index,
            pair_gen: Vec::new(),
        };
        let mut pair_gen = Vec::with_capacity(ctx.pairs.len() * n);
        for &(i, j) in &ctx.pairs {
            for k in 0..n {
                // b_ij = [a_j, a_i]
                pair_gen.push(ctx.bracket3(j, i, k));
            }
        }
        ctx.pair_gen = pair_gen;
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn triple_count(&self) -> usize {
        self.triples.len()
    }

    /// Total layer dimension, the exponent of 3 in the group order.
    pub fn dimension(&self) -> usize {
        self.n + self.pairs.len() + self.triples.len()
    }

    /// Generator pair `(i, j)` (1-based, `i < j`) of the weight-2 basis element `p`.
    pub fn pair(&self, p: usize) -> (usize, usize) {
        let (i, j) = self.pairs[p];
        (i + 1, j + 1)
    }

    /// Generator triple (1-based, increasing) of the weight-3 basis element `t`.
    pub fn triple(&self, t: usize) -> (usize, usize, usize) {
        let (i, j, k) = self.triples[t];
        (i + 1, j + 1, k + 1)
    }

    fn check_index(&self, i: usize) -> Result<usize, BurnsideError> {
        if i == 0 || i > self.n {
            return Err(BurnsideError::Range {
                index: i,
                n: self.n,
            });
        }
        Ok(i - 1)
    }

    /// Index of `b_ij` for 1-based `i < j`.
    pub fn pair_index(&self, i: usize, j: usize) -> Result<usize, BurnsideError> {
        let (i0, j0) = (self.check_index(i)?, self.check_index(j)?);
        match self.pair_index[i0 * self.n + j0] {
            NONE => Err(BurnsideError::Range {
                index: j,
                n: self.n,
            }),
            p => Ok(p),
        }
    }

    /// Index of `c_ijk` for 1-based `i < j < k`.
    pub fn triple_index(&self, i: usize, j: usize, k: usize) -> Result<usize, BurnsideError> {
        let (i0, j0, k0) = (
            self.check_index(i)?,
            self.check_index(j)?,
            self.check_index(k)?,
        );
        match self.triple_index[(i0 * self.n + j0) * self.n + k0] {
            NONE => Err(BurnsideError::Range {
                index: k,
                n: self.n,
            }),
            t => Ok(t),
        }
    }

    // 0-based alternating bracket
    fn bracket3(&self, i: usize, j: usize, k: usize) -> Option<SignedTriple> {
        if i == j || j == k || i == k {
            return None;
        }
        let (odd, [a, b, c]) = sort3(i, j, k);
        Some(SignedTriple {
            triple: self.triple_index[(a * self.n + b) * self.n + c],
            coefficient: if odd { 2 } else { 1 },
        })
    }

    /// `[[a_i, a_j], a_k]` in the weight-3 basis (1-based indices). `None`
    /// means the bracket vanishes.
    pub fn weight3_bracket(
        &self,
        i: usize,
        j: usize,
        k: usize,
    ) -> Result<Option<SignedTriple>, BurnsideError> {
        let (i, j, k) = (
            self.check_index(i)?,
            self.check_index(j)?,
            self.check_index(k)?,
        );
        Ok(self.bracket3(i, j, k))
    }

    pub fn identity(&self) -> BurnsideElement {
        BurnsideElement {
            alpha: Gf3Vector::zero(self.n),
            beta: Gf3Vector::zero(self.pairs.len()),
            gamma: Gf3Vector::zero(self.triples.len()),
        }
    }

    /// The generator `a_i` (1-based).
    pub fn generator(&self, i: usize) -> Result<BurnsideElement, BurnsideError> {
        let i = self.check_index(i)?;
        let mut e = self.identity();
        e.alpha.set(i, 1);
        Ok(e)
    }

    /// `b_ij = [a_j, a_i]` for `i < j`.
    pub fn pair_generator(&self, i: usize, j: usize) -> Result<BurnsideElement, BurnsideError> {
        let p = self.pair_index(i, j)?;
        let mut e = self.identity();
        e.beta.set(p, 1);
        Ok(e)
    }

    /// `c_ijk = [[a_i, a_j], a_k]` for `i < j < k`.
    pub fn triple_generator(
        &self,
        i: usize,
        j: usize,
        k: usize,
    ) -> Result<BurnsideElement, BurnsideError> {
        let t = self.triple_index(i, j, k)?;
        let mut e = self.identity();
        e.gamma.set(t, 1);
        Ok(e)
    }

    /// Element with the given layer coordinates.
    pub fn element(
        &self,
        alpha: Gf3Vector,
        beta: Gf3Vector,
        gamma: Gf3Vector,
    ) -> Result<BurnsideElement, BurnsideError> {
        let e = BurnsideElement { alpha, beta, gamma };
        self.check(&e)?;
        Ok(e)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> BurnsideElement {
        let mut e = self.identity();
        for v in [&mut e.alpha, &mut e.beta, &mut e.gamma] {
            for i in 0..v.len() {
                v.set(i, rng.gen_range(0..3));
            }
        }
        e
    }

    fn check(&self, x: &BurnsideElement) -> Result<(), BurnsideError> {
        if x.alpha.len() != self.n
            || x.beta.len() != self.pairs.len()
            || x.gamma.len() != self.triples.len()
        {
            return Err(BurnsideError::Context {
                expected: self.n,
                found: x.alpha.len(),
            });
        }
        Ok(())
    }

    /// Right-multiplies the normal form in place by `a_k` (0-based).
    ///
    /// With `x = A(alpha) B(beta) C(gamma)`, moving `a_k` left through
    /// `B(beta)` contributes `prod [b_p, a_k]^beta_p`; moving it through
    /// `a_j^alpha_j` (`j > k`) leaves `b_kj^alpha_j`, and each such `b_kj`
    /// passing a later `a_l^alpha_l` contributes `[b_kj, a_l]^(alpha_j alpha_l)`.
    fn mul_generator(&self, x: &mut BurnsideElement, k: usize) {
        let n = self.n;
        let alpha = x.alpha.entries().to_vec();
        for (p, &e) in x.beta.entries().to_vec().iter().enumerate() {
            if e != 0 {
                if let Some(t) = self.pair_gen[p * n + k] {
                    x.gamma.add_at(t.triple, mul_mod3(e, t.coefficient));
                }
            }
        }
        for j in k + 1..n {
            let aj = alpha[j];
            if aj == 0 {
                continue;
            }
            let p = self.pair_index[k * n + j];
            for (l, &al) in alpha.iter().enumerate().skip(j + 1) {
                if al != 0 {
                    let t = self.pair_gen[p * n + l].expect("distinct indices");
                    x.gamma
                        .add_at(t.triple, mul_mod3(mul_mod3(aj, al), t.coefficient));
                }
            }
            x.beta.add_at(p, aj);
        }
        x.alpha.add_at(k, 1);
    }

    /// Product in normal form.
    pub fn multiply(
        &self,
        x: &BurnsideElement,
        y: &BurnsideElement,
    ) -> Result<BurnsideElement, BurnsideError> {
        self.check(x)?;
        self.check(y)?;
        let mut z = x.clone();
        for (k, &e) in y.alpha.entries().iter().enumerate() {
            for _ in 0..e {
                self.mul_generator(&mut z, k);
            }
        }
        z.beta.add_scaled(&y.beta, 1).expect("checked lengths");
        z.gamma.add_scaled(&y.gamma, 1).expect("checked lengths");
        Ok(z)
    }

    /// `x^-1 = x^2`.
    pub fn inverse(&self, x: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
        self.multiply(x, x)
    }

    pub fn power(&self, x: &BurnsideElement, e: i64) -> Result<BurnsideElement, BurnsideError> {
        self.check(x)?;
        let mut z = self.identity();
        for _ in 0..e.rem_euclid(3) {
            z = self.multiply(&z, x)?;
        }
        Ok(z)
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(
        &self,
        x: &BurnsideElement,
        y: &BurnsideElement,
    ) -> Result<BurnsideElement, BurnsideError> {
        let xy = self.multiply(x, y)?;
        let xyx = self.multiply(&xy, &self.inverse(x)?)?;
        self.multiply(&xyx, &self.inverse(y)?)
    }

    /// `g x g^-1`.
    pub fn conjugate(
        &self,
        g: &BurnsideElement,
        x: &BurnsideElement,
    ) -> Result<BurnsideElement, BurnsideError> {
        let gx = self.multiply(g, x)?;
        self.multiply(&gx, &self.inverse(g)?)
    }

    /// Image of a free word under `x_i -> a_i`.
    pub fn evaluate(&self, w: &FreeWord) -> Result<BurnsideElement, BurnsideError> {
        let mut z = self.identity();
        for l in w.letters() {
            let k = self.check_index(l.generator)?;
            self.mul_generator(&mut z, k);
            if l.inverse {
                self.mul_generator(&mut z, k);
            }
        }
        Ok(z)
    }

    /// Checks the polycyclic presentation on its standard test words.
    pub fn consistency_check(&self) -> ConsistencyReport {
        let n = self.n;
        let gens: Vec<BurnsideElement> = (1..=n)
            .map(|i| self.generator(i).expect("in range"))
            .collect();
        let mul =
            |x: &BurnsideElement, y: &BurnsideElement| self.multiply(x, y).expect("same context");
        let mut checks = 0;
        let fail = |checks: usize, witness: String| ConsistencyReport {
            n,
            passed: false,
            checks,
            first_violation: Some(witness),
        };
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    checks += 1;
                    let left = mul(&mul(&gens[k], &gens[j]), &gens[i]);
                    let right = mul(&gens[k], &mul(&gens[j], &gens[i]));
                    if left != right {
                        return fail(
                            checks,
                            format!(
                                "(a{} a{}) a{} != a{} (a{} a{})",
                                k + 1,
                                j + 1,
                                i + 1,
                                k + 1,
                                j + 1,
                                i + 1
                            ),
                        );
                    }
                }
            }
        }
        for j in 0..n {
            let cube = mul(&mul(&gens[j], &gens[j]), &gens[j]);
            let square = mul(&gens[j], &gens[j]);
            for i in 0..n {
                checks += 1;
                let left = mul(&cube, &gens[i]);
                let right = mul(&square, &mul(&gens[j], &gens[i]));
                if left != right || left != gens[i] {
                    return fail(
                        checks,
                        format!(
                            "a{}^3 a{} != a{}^2 (a{} a{})",
                            j + 1,
                            i + 1,
                            j + 1,
                            j + 1,
                            i + 1
                        ),
                    );
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for (ei, ej) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    checks += 1;
                    let x = mul(
                        &self.power(&gens[i], ei).expect("same context"),
                        &self.power(&gens[j], ej).expect("same context"),
                    );
                    let cube = mul(&mul(&x, &x), &x);
                    if !cube.is_identity() {
                        return fail(
                            checks,
                            format!("(a{}^{} a{}^{})^3 != 1", i + 1, ei, j + 1, ej),
                        );
                    }
                }
            }
        }
        ConsistencyReport {
            n,
            passed: true,
            checks,
            first_violation: None,
        }
    }

    /// Normal closure of `relators` in B(n,3).
    pub fn normal_closure(
        &self,
        relators: &[BurnsideElement],
    ) -> Result<GradedSubgroup, BurnsideError> {
        for r in relators {
            self.check(r)?;
        }
        let gens: Vec<BurnsideElement> = (1..=self.n)
            .map(|i| self.generator(i).expect("in range"))
            .collect();
        let mut sub = GradedSubgroup::trivial(self);
        let mut queue: VecDeque<BurnsideElement> = relators.iter().cloned().collect();
        while let Some(g) = queue.pop_front() {
            let residue = sub.sift(self, &g)?;
            let Some((layer, col, coef)) = residue.leading() else {
                continue;
            };
            let witness = if coef == 1 {
                residue
            } else {
                self.inverse(&residue)?
            };
            for a in &gens {
                queue.push_back(self.commutator(&witness, a)?);
            }
            for h in sub.witnesses() {
                queue.push_back(self.commutator(&witness, h)?);
            }
            sub.layers[layer - 1]
                .insert(witness.layer_vector(layer))
                .expect("layer length");
            sub.witnesses[layer - 1][col] = Some(witness);
        }
        sub.closed = true;
        Ok(sub)
    }

    /// Exponent `e` with `|B(n,3) / <<relators>>| = 3^e`.
    pub fn quotient_order_exponent(
        &self,
        relators: &[BurnsideElement],
    ) -> Result<usize, BurnsideError> {
        let sub = self.normal_closure(relators)?;
        Ok(self.dimension() - sub.order_exponent())
    }
}

/// Normal form element of B(n,3), stored as its three exponent layers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BurnsideElement {
    alpha: Gf3Vector,
    beta: Gf3Vector,
    gamma: Gf3Vector,
}

impl BurnsideElement {
    pub fn alpha(&self) -> &Gf3Vector {
        &self.alpha
    }

    pub fn beta(&self) -> &Gf3Vector {
        &self.beta
    }

    pub fn gamma(&self) -> &Gf3Vector {
        &self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    /// Coordinates of weight `layer` (1, 2 or 3).
    pub fn layer_vector(&self, layer: usize) -> &Gf3Vector {
        match layer {
            1 => &self.alpha,
            2 => &self.beta,
            3 => &self.gamma,
            _ => panic!("layer {layer} out of range 1..=3"),
        }
    }

    /// Deepest lower-central term containing the element: 1, 2 or 3, and
    /// `None` for the identity.
    pub fn weight(&self) -> Option<usize> {
        (1..=3).find(|&l| !self.layer_vector(l).is_zero())
    }

    /// `(layer, column, coefficient)` of the first nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, usize, u8)> {
        let layer = self.weight()?;
        let v = self.layer_vector(layer);
        let col = v.leading()?;
        Some((layer, col, v.get(col)))
    }
}

impl std::fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:?} | {:?} | {:?}]", self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub passed: bool,
    pub checks: usize,
    pub first_violation: Option<String>,
}

/// A subgroup of B(n,3) described layer by layer.
///
/// Each stored witness has a leading coordinate equal to 1 in its own layer,
/// at a column no other witness of that layer leads with. The witnesses form
/// an induced polycyclic sequence, so sifting decides membership.
#[derive(Debug, Clone)]
pub struct GradedSubgroup {
    layers: [Gf3Basis; 3],
    witnesses: [Vec<Option<BurnsideElement>>; 3],
    closed: bool,
}

impl GradedSubgroup {
    pub fn trivial(ctx: &BurnsideContext) -> Self {
        let dims = [ctx.n, ctx.pair_count(), ctx.triple_count()];
        GradedSubgroup {
            layers: dims.map(Gf3Basis::new),
            witnesses: dims.map(|d| vec![None; d]),
            closed: false,
        }
    }

    /// Reduced echelon basis of layer `layer` (1, 2 or 3).
    pub fn layer(&self, layer: usize) -> &Gf3Basis {
        &self.layers[layer - 1]
    }

    pub fn ranks(&self) -> [usize; 3] {
        [
            self.layers[0].rank(),
            self.layers[1].rank(),
            self.layers[2].rank(),
        ]
    }

    /// `e` with `|N| = 3^e`.
    pub fn order_exponent(&self) -> usize {
        self.ranks().iter().sum()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &BurnsideElement> {
        self.witnesses.iter().flatten().flatten()
    }

    /// Divides `g` by stored witnesses, layer by layer, until its leading
    /// coordinate has no witness. The residue is the identity iff `g` lies in
    /// the subgroup generated by the witnesses.
    pub fn sift(
        &self,
        ctx: &BurnsideContext,
        g: &BurnsideElement,
    ) -> Result<BurnsideElement, BurnsideError> {
        ctx.check(g)?;
        let mut g = g.clone();
        while let Some((layer, col, coef)) = g.leading() {
            let Some(h) = &self.witnesses[layer - 1][col] else {
                break;
            };
            // g * h^-coef
            let factor = ctx.power(h, neg_mod3(coef) as i64)?;
            g = ctx.multiply(&g, &factor)?;
        }
        Ok(g)
    }

    pub fn contains(
        &self,
        ctx: &BurnsideContext,
        g: &BurnsideElement,
    ) -> Result<bool, BurnsideError> {
        Ok(self.sift(ctx, g)?.is_identity())
    }
}

impl PartialEq for GradedSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.layers == other.layers
    }
}
