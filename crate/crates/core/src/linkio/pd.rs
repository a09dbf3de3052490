//! Planar diagram codes with explicit over/under roles.
//!
//! A crossing is stored as `(over, under_in, under_out)` arc labels, where an
//! arc runs from one undercrossing to the next. The text format is one
//! crossing per line:
//!
//! ```text
//! # trefoil
//! X 1 3 2
//! X 2 1 3
//! X 3 2 1
//! ```
//!
//! Standard edge-labelled codes `X[i,j,k,l]` (incoming under edge `i`, then
//! counterclockwise, so `k` is the outgoing under edge and `j`, `l` lie on
//! the over strand) are converted by merging `j` and `l` into one arc.

use std::collections::BTreeMap;

use super::{BraidWord, LinkError, LinkPresentation};
use crate::words::FreeWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<Crossing>,
    arc_count: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Class labels `1..=k`, numbered by smallest member.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let mut ids = BTreeMap::new();
        let out = (0..self.0.len())
            .map(|x| {
                let r = self.find(x);
                let next = ids.len() + 1;
                *ids.entry(r).or_insert(next)
            })
            .collect();
        (out, ids.len())
    }
}

impl PdCode {
    /// Validates arc usage: every label in `1..=arc_count` occurs, and each
    /// arc either starts and ends at exactly one undercrossing or is a closed
    /// loop that only passes over.
    pub fn new(crossings: Vec<Crossing>, arc_count: usize) -> Result<Self, LinkError> {
        let mut used = vec![false; arc_count + 1];
        let mut ins = vec![0usize; arc_count + 1];
        let mut outs = vec![0usize; arc_count + 1];
        for (s, c) in crossings.iter().enumerate() {
            for a in [c.over, c.under_in, c.under_out] {
                if a == 0 || a > arc_count {
                    return Err(LinkError::Diagram(format!(
                        "crossing {} uses arc {a} outside 1..={arc_count}",
                        s + 1
                    )));
                }
                used[a] = true;
            }
            ins[c.under_in] += 1;
            outs[c.under_out] += 1;
        }
        for a in 1..=arc_count {
            if !used[a] {
                return Err(LinkError::Diagram(format!("arc {a} is never used")));
            }
            if !matches!((ins[a], outs[a]), (1, 1) | (0, 0)) {
                return Err(LinkError::Diagram(format!(
                    "arc {a} ends at {} and starts at {} undercrossings",
                    ins[a], outs[a]
                )));
            }
        }
        Ok(PdCode {
            crossings,
            arc_count,
        })
    }

    /// Converts edge-labelled 4-tuples `[i, j, k, l]` into arc form.
    pub fn from_standard(tuples: &[[usize; 4]]) -> Result<Self, LinkError> {
        let max = tuples.iter().flatten().copied().max().unwrap_or(0);
        let mut uf = UnionFind::new(max + 1);
        for t in tuples {
            uf.union(t[1], t[3]);
        }
        let (labels, _) = uf.labels();
        // relabel the arcs that occur, in order of first appearance by edge
        let mut arc_of = BTreeMap::new();
        let mut present: Vec<usize> = tuples.iter().flatten().copied().collect();
        present.sort_unstable();
        present.dedup();
        for e in present {
            let next = arc_of.len() + 1;
            arc_of.entry(labels[e]).or_insert(next);
        }
        let arc = |e: usize| arc_of[&labels[e]];
        let crossings = tuples
            .iter()
            .map(|t| Crossing {
                over: arc(t[1]),
                under_in: arc(t[0]),
                under_out: arc(t[2]),
            })
            .collect();
        PdCode::new(crossings, arc_of.len())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Number of link components, following each arc into the arc it
    /// continues as at its undercrossing.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.under_in - 1, c.under_out - 1);
        }
        uf.labels().1
    }

    /// Text form accepted by [`parse_pd`].
    pub fn to_text(&self) -> String {
        self.crossings
            .iter()
            .map(|c| format!("X {} {} {}\n", c.over, c.under_in, c.under_out))
            .collect()
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, LinkError> {
    tok.trim().parse().map_err(|_| LinkError::Parse {
        position: line,
        message: format!("expected a positive arc label, found `{tok}`"),
    })
}

/// Parses a PD file. Lines are `X over under_in under_out`; `#` starts a
/// comment. Files whose crossings are written `X[i,j,k,l]` (optionally
/// wrapped in `PD[...]`) are read as standard edge-labelled codes.
/// Parse error positions are 1-based line numbers.
pub fn parse_pd(text: &str) -> Result<PdCode, LinkError> {
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    if body.contains('[') {
        return parse_standard(&body);
    }
    let mut crossings = Vec::new();
    let mut max = 0;
    for (idx, line) in body.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] != "X" || toks.len() != 4 {
            return Err(LinkError::Parse {
                position: idx + 1,
                message: "expected `X over under_in under_out`".into(),
            });
        }
        let c = Crossing {
            over: parse_usize(toks[1], idx + 1)?,
            under_in: parse_usize(toks[2], idx + 1)?,
            under_out: parse_usize(toks[3], idx + 1)?,
        };
        max = max.max(c.over).max(c.under_in).max(c.under_out);
        crossings.push(c);
    }
    PdCode::new(crossings, max)
}

fn parse_standard(body: &str) -> Result<PdCode, LinkError> {
    let mut tuples = Vec::new();
    let mut rest = body;
    let mut offset = 0;
    while let Some(start) = rest.find("X[") {
        let open = start + 2;
        let close = rest[open..].find(']').ok_or_else(|| LinkError::Parse {
            position: offset + start,
            message: "unclosed `X[`".into(),
        })? + open;
        let fields: Vec<&str> = rest[open..close].split(',').collect();
        if fields.len() != 4 {
            return Err(LinkError::Parse {
                position: offset + start,
                message: "a crossing needs four edge labels".into(),
            });
        }
        let mut t = [0usize; 4];
        for (slot, f) in t.iter_mut().zip(&fields) {
            *slot = parse_usize(f, offset + start)?;
        }
        tuples.push(t);
        offset += close + 1;
        rest = &rest[close + 1..];
    }
    PdCode::from_standard(&tuples)
}

/// Core-group presentation: one generator per arc and the relator
/// `over under_in^-1 over under_out^-1` per crossing; then arc 1 is set to the
/// identity (remaining arcs renumbered down by one) and the last relator is
/// dropped.
pub fn pd_presentation(d: &PdCode) -> LinkPresentation {
    pd_presentation_choosing(d, 1, d.crossings().len().saturating_sub(1))
        .expect("default choices are in range")
}

/// As [`pd_presentation`], killing arc `killed` and dropping the relator of
/// crossing `dropped` (0-based).
pub fn pd_presentation_choosing(
    d: &PdCode,
    killed: usize,
    dropped: usize,
) -> Result<LinkPresentation, LinkError> {
    if d.arc_count() > 0 && (killed == 0 || killed > d.arc_count()) {
        return Err(LinkError::Diagram(format!("no arc {killed} to kill")));
    }
    if !d.crossings().is_empty() && dropped >= d.crossings().len() {
        return Err(LinkError::Diagram(format!("no crossing {dropped} to drop")));
    }
    let y = FreeWord::generator;
    let relators = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(s, _)| s != dropped)
        .map(|(_, c)| {
            y(c.over)
                .concat(&y(c.under_in).invert())
                .concat(&y(c.over))
                .concat(&y(c.under_out).invert())
                .substitute_with(|g| {
                    Some(match g.cmp(&killed) {
                        std::cmp::Ordering::Less => FreeWord::generator(g),
                        std::cmp::Ordering::Equal => FreeWord::identity(),
                        std::cmp::Ordering::Greater => FreeWord::generator(g - 1),
                    })
                })
                .expect("total image map")
        })
        .collect();
    Ok(LinkPresentation {
        generator_count: d.arc_count().saturating_sub(1),
        relators,
        killed_generator: killed,
        component_count: d.component_count(),
    })
}

/// Arc-form diagram of a braid closure, using the same crossing convention
/// as the label transport.
pub fn braid_closure_pd(b: &BraidWord) -> Result<PdCode, LinkError> {
    let n = b.strands();
    let mut current: Vec<usize> = (0..n).collect();
    let mut next = n;
    let mut raw = Vec::with_capacity(b.len());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (p, q) = (current[i], current[i + 1]);
        let fresh = next;
        next += 1;
        if l > 0 {
            raw.push((p, q, fresh));
            current[i] = fresh;
            current[i + 1] = p;
        } else {
            raw.push((q, p, fresh));
            current[i] = q;
            current[i + 1] = fresh;
        }
    }
    let mut uf = UnionFind::new(next);
    for (start, &end) in current.iter().enumerate() {
        uf.union(start, end);
    }
    let (labels, _) = uf.labels();
    let mut arc_of = BTreeMap::new();
    for &(o, u, v) in &raw {
        for e in [o, u, v] {
            let k = arc_of.len() + 1;
            arc_of.entry(labels[e]).or_insert(k);
        }
    }
    for (s, label) in labels.iter().enumerate().take(n) {
        if !arc_of.contains_key(label) {
            return Err(LinkError::Diagram(format!(
                "strand {} closes up without crossings",
                s + 1
            )));
        }
    }
    let arc = |e: usize| arc_of[&labels[e]];
    let crossings = raw
        .iter()
        .map(|&(o, u, v)| Crossing {
            over: arc(o),
            under_in: arc(u),
            under_out: arc(v),
        })
        .collect();
    PdCode::new(crossings, arc_of.len())
}
