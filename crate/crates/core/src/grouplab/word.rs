use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

/// A generator `g_gen` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "g{}^-1", self.gen)
        } else {
            write!(f, "g{}", self.gen)
        }
    }
}

/// A reduced word in the free group on `g_0, g_1, ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(gen: u32) -> Self {
        FreeWord(vec![Letter::new(gen, false)])
    }

    /// Free reduction with a stack.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    /// `g_i^-1 g_j`, the label of an edge from vertex `i` to vertex `j`.
    pub fn quotient(i: u32, j: u32) -> Self {
        Self::reduce([Letter::new(i, true), Letter::new(j, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = FreeWord::identity();
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Strips matching first and last letters that are mutually inverse. The
    /// result is conjugate to `self`.
    pub fn cyclically_reduced(&self) -> Self {
        let mut s = 0;
        let mut e = self.0.len();
        while e - s >= 2 && self.0[s] == self.0[e - 1].inv() {
            s += 1;
            e -= 1;
        }
        FreeWord(self.0[s..e].to_vec())
    }

    pub fn generators(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|l| l.gen)
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        FreeWord::reduce(self.0.iter().chain(rhs.0.iter()).copied())
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWordError(pub String);

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad word token {:?}", self.0)
    }
}

impl std::error::Error for ParseWordError {}

/// Accepts the `Display` form: `1`, or tokens `gK` / `gK^-1` separated by
/// whitespace.
impl FromStr for FreeWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(FreeWord::identity());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || ParseWordError(tok.to_string());
            let body = tok.strip_prefix('g').ok_or_else(bad)?;
            let (num, inverse) = match body.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (body, false),
            };
            let gen = num.parse().map_err(|_| bad())?;
            letters.push(Letter::new(gen, inverse));
        }
        Ok(FreeWord::reduce(letters))
    }
}
