//! Braid words, core-group label transport and closed-braid presentations.

use std::fmt;

use super::{LinkError, LinkPresentation};
use crate::words::{FreeWord, Letter};

/// A braid on `strands` strands. Letter `k > 0` is `s_k`, `k < 0` is `s_|k|^-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::Braid("a braid needs at least one strand".into()));
        }
        for (position, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(LinkError::Parse {
                    position,
                    message: format!("generator {l} invalid on {strands} strands"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`, on the larger strand count.
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Image of strand position `i` (0-based) under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        // perm[start] = current position of the strand starting at `start`
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = perm[t];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Parses whitespace-separated signed generator indices with optional
/// parenthesized groups raised to integer powers, e.g. `(1 2 3 4)^10` or
/// `(1 -2)^3`. The strand count is `max |index| + 1`.
pub fn parse_braid(text: &str) -> Result<BraidWord, LinkError> {
    parse_braid_with_strands(text, None)
}

/// As [`parse_braid`], with an optional explicit strand count.
pub fn parse_braid_with_strands(
    text: &str,
    strands: Option<usize>,
) -> Result<BraidWord, LinkError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let letters = p.sequence(0)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected `)`"));
    }
    let needed = letters
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1);
    let strands = match strands {
        Some(s) if s < needed => {
            return Err(LinkError::Parse {
                position: 0,
                message: format!("braid uses {needed} strands but {s} were declared"),
            })
        }
        Some(s) => s,
        None => needed,
    };
    BraidWord::new(strands, letters)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> LinkError {
        LinkError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<i64, LinkError> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        s.parse().map_err(|_| LinkError::Parse {
            position: start,
            message: format!("integer `{s}` out of range"),
        })
    }

    fn exponent(&mut self) -> Result<i64, LinkError> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn sequence(&mut self, depth: usize) -> Result<Vec<i32>, LinkError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if depth > 0 {
                        return Err(self.error("unclosed `(`"));
                    }
                    return Ok(out);
                }
                Some(b')') => {
                    if depth == 0 {
                        return Err(self.error("unexpected `)`"));
                    }
                    return Ok(out);
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    self.pos += 1; // `)`
                    let k = self.exponent()?;
                    let block: Vec<i32> = if k < 0 {
                        inner.iter().rev().map(|l| -l).collect()
                    } else {
                        inner
                    };
                    for _ in 0..k.unsigned_abs() {
                        out.extend_from_slice(&block);
                    }
                }
                Some(_) => {
                    let start = self.pos;
                    let g = self.integer()?;
                    if g == 0 || g.unsigned_abs() > i32::MAX as u64 {
                        return Err(LinkError::Parse {
                            position: start,
                            message: "generator index must be nonzero".into(),
                        });
                    }
                    let k = self.exponent()?;
                    let letter = if k < 0 { -(g as i32) } else { g as i32 };
                    out.extend(std::iter::repeat_n(letter, k.unsigned_abs() as usize));
                }
            }
        }
    }
}

/// The core-group crossing rule for one braid letter. With over label `a`
/// and incoming under label `b` the outgoing under label is `a b^-1 a`.
/// `s_i` sends `(p, q)` at positions `(i, i+1)` to `(p q^-1 p, p)`; `s_i^-1`
/// is its inverse, `(p, q) -> (q, q p^-1 q)`.
fn apply_letter(labels: &mut [FreeWord], letter: i32) {
    let i = letter.unsigned_abs() as usize - 1;
    let (p, q) = (labels[i].clone(), labels[i + 1].clone());
    if letter > 0 {
        labels[i] = p.concat(&q.invert()).concat(&p);
        labels[i + 1] = p;
    } else {
        labels[i + 1] = q.concat(&p.invert()).concat(&q);
        labels[i] = q;
    }
}

/// Pushes `labels` through the braid from left to right.
pub fn transport_labels(b: &BraidWord, labels: &[FreeWord]) -> Vec<FreeWord> {
    assert_eq!(labels.len(), b.strands(), "one label per strand");
    let mut labels = labels.to_vec();
    for &l in b.letters() {
        apply_letter(&mut labels, l);
    }
    labels
}

/// Labels on the right ends of the braid when the left ends carry `x_1..x_n`.
pub fn core_transport(b: &BraidWord) -> Vec<FreeWord> {
    let start: Vec<FreeWord> = (1..=b.strands()).map(FreeWord::generator).collect();
    transport_labels(b, &start)
}

/// Presentation of pi_1 of the double branched cover of the closure: the
/// relations `Q_i x_i^-1` for `i < n`, with `x_n` set to the identity and the
/// relation for `i = n` dropped.
pub fn closed_braid_presentation(b: &BraidWord) -> LinkPresentation {
    let n = b.strands();
    let q = core_transport(b);
    let relators = (1..n)
        .map(|i| {
            q[i - 1]
                .concat(&FreeWord::from_letters([Letter::neg(i)]))
                .kill_generator(n)
        })
        .collect();
    LinkPresentation {
        generator_count: n - 1,
        relators,
        killed_generator: n,
        component_count: b.component_count(),
    }
}

/// Blackboard 2-parallel: strand `i` becomes strands `2i-1, 2i`, and each
/// `s_i^(+-1)` becomes `(s_2i s_2i-1 s_2i+1 s_2i)^(+-1)`.
pub fn two_cable(b: &BraidWord) -> BraidWord {
    let mut letters = Vec::with_capacity(4 * b.len());
    for &l in b.letters() {
        let i = l.abs();
        let block = [2 * i, 2 * i - 1, 2 * i + 1, 2 * i];
        if l > 0 {
            letters.extend_from_slice(&block);
        } else {
            letters.extend(block.iter().rev().map(|g| -g));
        }
    }
    BraidWord {
        strands: 2 * b.strands(),
        letters,
    }
}
