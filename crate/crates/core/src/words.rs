//! Freely reduced words in a free group on generators `x1, x2, ...`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A generator (1-based) raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        debug_assert!(generator >= 1);
        Letter { generator, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Self::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Self::new(generator, true)
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("no image given for generator x{0}")]
    UndefinedGenerator(usize),
    #[error("malformed word at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: usize) -> Self {
        FreeWord {
            letters: vec![Letter::pos(g)],
        }
    }

    /// Reduces an arbitrary letter sequence with a single stack pass.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2, 3]`.
    pub fn from_signed(indices: &[i64]) -> Self {
        Self::from_letters(
            indices
                .iter()
                .map(|&i| Letter::new(i.unsigned_abs() as usize, i < 0)),
        )
    }

    /// Right-multiplies by one letter, cancelling if possible.
    pub fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring, 0 for the identity.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Applies the homomorphism `x_g -> images[g]`.
    pub fn substitute(&self, images: &HashMap<usize, FreeWord>) -> Result<FreeWord, WordError> {
        self.substitute_with(|g| images.get(&g).cloned())
    }

    /// Like [`FreeWord::substitute`] with images supplied by a closure.
    pub fn substitute_with<F>(&self, mut image: F) -> Result<FreeWord, WordError>
    where
        F: FnMut(usize) -> Option<FreeWord>,
    {
        let mut out = FreeWord::identity();
        for &l in &self.letters {
            let img = image(l.generator).ok_or(WordError::UndefinedGenerator(l.generator))?;
            let img = if l.inverse { img.invert() } else { img };
            out = out.concat(&img);
        }
        Ok(out)
    }

    /// Sends `x_g` to the identity and fixes every other generator.
    pub fn kill_generator(&self, g: usize) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().copied().filter(|l| l.generator != g))
    }

    /// Exponent sum of each generator `1..=n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n];
        for l in &self.letters {
            if l.generator <= n {
                sums[l.generator - 1] += l.exponent() as i64;
            }
        }
        sums
    }
}

/// `[a, b] = a b a^-1 b^-1`.
pub fn commutator_word(a: &FreeWord, b: &FreeWord) -> FreeWord {
    a.concat(b).concat(&a.invert()).concat(&b.invert())
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.generator)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

impl FromStr for FreeWord {
    type Err = WordError;

    /// Parses `x1 x2^-1 x3`. Also accepts `x_1`, `x_{12}`, `^{-1}`, integer
    /// powers such as `x1^3`, and `1` for the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut w = FreeWord::identity();
        let err = |position: usize, message: &str| WordError::Parse {
            position,
            message: message.to_string(),
        };
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let read_int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if *i < bytes.len() && bytes[*i] == b'-' {
                *i += 1;
            }
            let digits = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            if *i == digits {
                *i = start;
                return None;
            }
            s[start..*i].parse().ok()
        };
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                break;
            }
            let start = i;
            match bytes[i] {
                b'1' if bytes.get(i + 1).is_none_or(|b| b.is_ascii_whitespace()) => {
                    i += 1;
                    continue;
                }
                b'x' => i += 1,
                _ => return Err(err(i, "expected generator `x<k>`")),
            }
            if i < bytes.len() && bytes[i] == b'_' {
                i += 1;
            }
            let braced = i < bytes.len() && bytes[i] == b'{';
            if braced {
                i += 1;
            }
            let g = match read_int(&mut i) {
                Some(g) if g >= 1 => g as usize,
                _ => return Err(err(start, "generator index must be a positive integer")),
            };
            if braced {
                if i >= bytes.len() || bytes[i] != b'}' {
                    return Err(err(i, "expected `}`"));
                }
                i += 1;
            }
            let mut power = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let braced = i < bytes.len() && bytes[i] == b'{';
                if braced {
                    i += 1;
                }
                power = read_int(&mut i).ok_or_else(|| err(i, "expected integer exponent"))?;
                if braced {
                    if i >= bytes.len() || bytes[i] != b'}' {
                        return Err(err(i, "expected `}`"));
                    }
                    i += 1;
                }
            }
            w = w.concat(&FreeWord::generator(g).pow(power));
        }
        Ok(w)
    }
}
