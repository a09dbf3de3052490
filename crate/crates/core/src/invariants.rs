//! The link invariant pipeline: `B_L(3)`, the Z/3 homology of the double
//! branched cover, 3-moves on braids, and the reducibility obstruction.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::burnside::{burnside_exponent, BurnsideContext, BurnsideError, MAX_GENERATORS};
use crate::gf3::{rank_of, Gf3Vector};
use crate::linkio::{closed_braid_presentation, BraidWord, LinkPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(
        "presentation has {generators} generators ({arcs} arcs); the engine handles at most {max}"
    )]
    Capacity {
        generators: usize,
        arcs: usize,
        max: usize,
    },
    #[error("3-move out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `|B_L(3)|` differs from `|B(k-1,3)|` for the only trivial link `T_k`
    /// with the same homology, so `L` is not 3-move reducible.
    Obstructed,
    /// Orders agree; the order test cannot tell `L` from `T_k`.
    ConsistentWithTrivial,
    /// The order exceeds that of the candidate trivial link. A 3-group whose
    /// Frattini quotient has rank `r` is a quotient of `B(r,3)`, so this does
    /// not occur for valid input.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::ConsistentWithTrivial => "CONSISTENT_WITH_TRIVIAL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Evidence behind a verdict: the link's order exponent against that of the
/// trivial link with `trivial_components` components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub order_exponent: usize,
    pub trivial_exponent: usize,
    pub trivial_components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub input: Option<String>,
    pub seed: Option<u64>,
    /// `|B(m-1,3)| = 3^ambient_exponent` for the `m - 1` generators used.
    pub ambient_exponent: usize,
    /// Ranks of the relator normal closure in weights 1, 2, 3.
    pub closure_ranks: [usize; 3],
    /// `|B_L(3)| = 3^order_exponent`.
    pub order_exponent: usize,
    /// `H_1(M_L; Z/3) = (Z/3)^h1_rank`.
    pub h1_rank: usize,
    pub component_count: usize,
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl QuotientReport {
    /// The quantities preserved by 3-moves.
    pub fn invariant_part(&self) -> (usize, [usize; 3], usize) {
        (self.order_exponent, self.closure_ranks, self.h1_rank)
    }

    pub fn narrative(&self) -> String {
        let c = &self.certificate;
        let k = c.trivial_components;
        match self.verdict {
            Verdict::Obstructed => format!(
                "|B_L(3)| = 3^{} < |B_T{k}(3)| = 3^{}: not 3-move reducible to a trivial link",
                c.order_exponent, c.trivial_exponent
            ),
            Verdict::ConsistentWithTrivial => format!(
                "|B_L(3)| = |B_T{k}(3)| = 3^{}: the order test does not separate L from T{k}",
                c.order_exponent
            ),
            Verdict::Inconclusive => format!(
                "|B_L(3)| = 3^{} > |B_T{k}(3)| = 3^{}: presentation inconsistent with its homology",
                c.order_exponent, c.trivial_exponent
            ),
        }
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let c = &self.certificate;
        let [r1, r2, r3] = self.closure_ranks;
        let relation = if c.order_exponent == c.trivial_exponent {
            "="
        } else {
            "!="
        };
        format!(
            "input: {}\nseed: {}\nambient_exponent: {}\nclosure_ranks: {} {} {}\norder_exponent: {}\nh1_rank: {}\ncomponent_count: {}\nverdict: {}\ncertificate: {} {} {} (k = {})\n",
            self.input.as_deref().unwrap_or("-"),
            self.seed.map_or("-".to_string(), |s| s.to_string()),
            self.ambient_exponent,
            r1,
            r2,
            r3,
            self.order_exponent,
            self.h1_rank,
            self.component_count,
            self.verdict,
            c.order_exponent,
            relation,
            c.trivial_exponent,
            c.trivial_components,
        )
    }
}

fn check_capacity(p: &LinkPresentation) -> Result<(), InvariantError> {
    if p.generator_count > MAX_GENERATORS {
        return Err(InvariantError::Capacity {
            generators: p.generator_count,
            arcs: p.generator_count + 1,
            max: MAX_GENERATORS,
        });
    }
    Ok(())
}

/// Rank of `H_1(M_L; Z/3)`: generators minus the rank of the abelianized
/// relator matrix mod 3.
pub fn h1_z3(p: &LinkPresentation) -> usize {
    let rows: Vec<Gf3Vector> = p
        .abelianized()
        .into_iter()
        .map(Gf3Vector::from_ints)
        .collect();
    p.generator_count
        - rank_of(p.generator_count, &rows).expect("rows have generator_count entries")
}

/// Compares `order_exponent` against the trivial link with `h1_rank + 1`
/// components.
pub fn obstruction(order_exponent: usize, h1_rank: usize) -> (Verdict, Certificate) {
    let k = h1_rank + 1;
    let trivial = burnside_exponent(k - 1);
    let verdict = match order_exponent.cmp(&trivial) {
        std::cmp::Ordering::Less => Verdict::Obstructed,
        std::cmp::Ordering::Equal => Verdict::ConsistentWithTrivial,
        std::cmp::Ordering::Greater => Verdict::Inconclusive,
    };
    (
        verdict,
        Certificate {
            order_exponent,
            trivial_exponent: trivial,
            trivial_components: k,
        },
    )
}

/// Computes `B_L(3) = pi_1(M_L) / (a^3)` from a presentation and packages
/// its order, closure ranks, homology and verdict.
pub fn burnside_group(p: &LinkPresentation) -> Result<QuotientReport, InvariantError> {
    check_capacity(p)?;
    let ctx = BurnsideContext::new(p.generator_count)?;
    let images = p
        .relators
        .iter()
        .map(|r| ctx.evaluate(r))
        .collect::<Result<Vec<_>, _>>()?;
    let closure = ctx.normal_closure(&images)?;
    let ranks = closure.ranks();
    let order_exponent = ctx.dimension() - closure.order_exponent();
    let h1_rank = h1_z3(p);
    let (verdict, certificate) = obstruction(order_exponent, h1_rank);
    Ok(QuotientReport {
        input: None,
        seed: None,
        ambient_exponent: ctx.dimension(),
        closure_ranks: ranks,
        order_exponent,
        h1_rank,
        component_count: p.component_count,
        verdict,
        certificate,
    })
}

/// Report for the closure of a braid.
pub fn braid_report(b: &BraidWord) -> Result<QuotientReport, InvariantError> {
    let mut r = burnside_group(&closed_braid_presentation(b))?;
    r.input = Some(b.to_string());
    Ok(r)
}

/// Inserts `s_generator^(3 sign)` before letter `position`.
pub fn three_move(
    b: &BraidWord,
    position: usize,
    generator: usize,
    positive: bool,
) -> Result<BraidWord, InvariantError> {
    insert_run(b, position, generator, positive, 3)
}

fn insert_run(
    b: &BraidWord,
    position: usize,
    generator: usize,
    positive: bool,
    count: usize,
) -> Result<BraidWord, InvariantError> {
    if position > b.len() {
        return Err(InvariantError::Range(format!(
            "position {position} beyond word length {}",
            b.len()
        )));
    }
    if generator == 0 || generator >= b.strands() {
        return Err(InvariantError::Range(format!(
            "generator {generator} invalid on {} strands",
            b.strands()
        )));
    }
    let letter = if positive {
        generator as i32
    } else {
        -(generator as i32)
    };
    let mut letters = b.letters().to_vec();
    letters.splice(position..position, std::iter::repeat_n(letter, count));
    Ok(BraidWord::new(b.strands(), letters).expect("validated letter"))
}

/// Removes a run `s_i^(+-3)` starting at `position`.
pub fn undo_three_move(b: &BraidWord, position: usize) -> Result<BraidWord, InvariantError> {
    let run = b
        .letters()
        .get(position..position + 3)
        .ok_or_else(|| InvariantError::Range(format!("no three letters at position {position}")))?;
    if run.iter().any(|&l| l != run[0]) {
        return Err(InvariantError::Range(format!(
            "letters at position {position} are not a cube of one generator"
        )));
    }
    let mut letters = b.letters().to_vec();
    letters.drain(position..position + 3);
    Ok(BraidWord::new(b.strands(), letters).expect("subword of a valid braid"))
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub trials: usize,
    pub max_strands: usize,
    pub max_length: usize,
    pub seed: u64,
    /// Insert `s_i^(+-2)` instead of a 3-move, to check the harness notices.
    pub corrupt: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 500,
            max_strands: 5,
            max_length: 20,
            seed: 1,
            corrupt: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub before: String,
    pub after: String,
    pub strands: usize,
    pub before_invariants: (usize, [usize; 3], usize),
    pub after_invariants: (usize, [usize; 3], usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub trials: usize,
    pub seed: u64,
    pub max_strands: usize,
    pub max_length: usize,
    pub violations: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Random braid with uniform strand count in `2..=max_strands`, uniform
/// length in `0..=max_length`, uniform letters and signs.
pub fn random_braid<R: Rng + ?Sized>(
    rng: &mut R,
    max_strands: usize,
    max_length: usize,
) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands.max(2));
    let len = rng.gen_range(0..=max_length);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

fn run_trial(
    trial: usize,
    rng: &mut ChaCha8Rng,
    config: &SuiteConfig,
) -> Result<Option<Counterexample>, InvariantError> {
    let b = random_braid(rng, config.max_strands, config.max_length);
    let position = rng.gen_range(0..=b.len());
    let generator = rng.gen_range(1..b.strands());
    let positive = rng.gen_bool(0.5);
    let moved = if config.corrupt {
        insert_run(&b, position, generator, positive, 2)?
    } else {
        three_move(&b, position, generator, positive)?
    };
    let before = braid_report(&b)?.invariant_part();
    let after = braid_report(&moved)?.invariant_part();
    Ok((before != after).then(|| Counterexample {
        trial,
        before: b.to_string(),
        after: moved.to_string(),
        strands: b.strands(),
        before_invariants: before,
        after_invariants: after,
    }))
}

/// Checks that random 3-moves leave the order, closure ranks and homology
/// unchanged. Trial `t` draws from its own stream seeded by `(seed, t)`.
pub fn invariance_suite(config: &SuiteConfig) -> Result<SuiteReport, InvariantError> {
    let mut violations = Vec::new();
    for trial in 0..config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(trial as u64);
        if let Some(c) = run_trial(trial, &mut rng, config)? {
            violations.push(c);
        }
    }
    Ok(SuiteReport {
        trials: config.trials,
        seed: config.seed,
        max_strands: config.max_strands,
        max_length: config.max_length,
        violations,
    })
}
