use std::fmt;

use crate::words::{Token, Word};
use crate::Error;

/// The splitting generator u φ_{a,b} v : u r_{a+b} v → u r_a r_b v.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryUp {
    prefix: Word,
    a: usize,
    b: usize,
    suffix: Word,
}

/// The contraction generator u θ_{a,b} v : u r_a r_d^{-1} r_b v → u r_{a+b−d} v.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryDown {
    prefix: Word,
    a: usize,
    b: usize,
    suffix: Word,
}

impl ElementaryUp {
    pub fn new(prefix: Word, a: usize, b: usize, suffix: Word) -> Result<Self, Error> {
        let d = prefix.d();
        if suffix.d() != d {
            return Err(Error::DimensionMismatch(d, suffix.d()));
        }
        if a == 0 || b == 0 || a + b > d {
            return Err(Error::InvalidGenerator(format!(
                "phi_{{{a},{b}}} needs a,b >= 1 and a+b <= {d}"
            )));
        }
        Ok(ElementaryUp {
            prefix,
            a,
            b,
            suffix,
        })
    }

    pub(crate) fn of(prefix: Word, a: usize, b: usize, suffix: Word) -> Self {
        debug_assert!(a >= 1 && b >= 1 && a + b <= prefix.d());
        ElementaryUp {
            prefix,
            a,
            b,
            suffix,
        }
    }

    pub fn d(&self) -> usize {
        self.prefix.d()
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn suffix(&self) -> &Word {
        &self.suffix
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Index of the letter r_a inside the target.
    pub fn position(&self) -> usize {
        self.prefix.len()
    }

    pub fn source(&self) -> Word {
        Word::concat(
            self.d(),
            &[
                self.prefix.tokens(),
                &[Token::Pos(self.a + self.b)],
                self.suffix.tokens(),
            ],
        )
    }

    pub fn target(&self) -> Word {
        Word::concat(
            self.d(),
            &[
                self.prefix.tokens(),
                &[Token::Pos(self.a), Token::Pos(self.b)],
                self.suffix.tokens(),
            ],
        )
    }

    /// (u φ_{a,b} v)* = v* θ_{d−b,d−a} r_d^{-1} u*.
    pub fn dual_right(&self) -> ElementaryDown {
        let d = self.d();
        let suffix = Word::concat(d, &[&[Token::NegD], self.prefix.dual_right().tokens()]);
        ElementaryDown::of(self.suffix.dual_right(), d - self.b, d - self.a, suffix)
    }

    /// *(u φ_{a,b} v) = *v r_d^{-1} θ_{d−b,d−a} *u.
    pub fn dual_left(&self) -> ElementaryDown {
        let d = self.d();
        let prefix = Word::concat(d, &[self.suffix.dual_left().tokens(), &[Token::NegD]]);
        ElementaryDown::of(prefix, d - self.b, d - self.a, self.prefix.dual_left())
    }
}

impl ElementaryDown {
    pub fn new(prefix: Word, a: usize, b: usize, suffix: Word) -> Result<Self, Error> {
        let d = prefix.d();
        if suffix.d() != d {
            return Err(Error::DimensionMismatch(d, suffix.d()));
        }
        if a == 0 || b == 0 || a >= d || b >= d || a + b < d {
            return Err(Error::InvalidGenerator(format!(
                "theta_{{{a},{b}}} needs 1 <= a,b <= {} and a+b >= {d}",
                d - 1
            )));
        }
        Ok(ElementaryDown {
            prefix,
            a,
            b,
            suffix,
        })
    }

    pub(crate) fn of(prefix: Word, a: usize, b: usize, suffix: Word) -> Self {
        let d = prefix.d();
        debug_assert!(a >= 1 && b >= 1 && a < d && b < d && a + b >= d);
        ElementaryDown {
            prefix,
            a,
            b,
            suffix,
        }
    }

    pub fn d(&self) -> usize {
        self.prefix.d()
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn suffix(&self) -> &Word {
        &self.suffix
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Index of the letter r_a inside the source.
    pub fn position(&self) -> usize {
        self.prefix.len()
    }

    pub fn source(&self) -> Word {
        Word::concat(
            self.d(),
            &[
                self.prefix.tokens(),
                &[Token::Pos(self.a), Token::NegD, Token::Pos(self.b)],
                self.suffix.tokens(),
            ],
        )
    }

    pub fn target(&self) -> Word {
        let d = self.d();
        let c = self.a + self.b - d;
        let mid: Vec<Token> = (c > 0).then_some(Token::Pos(c)).into_iter().collect();
        Word::concat(d, &[self.prefix.tokens(), &mid, self.suffix.tokens()])
    }

    /// (u θ_{a,b} v)* = v* φ_{d−b,d−a} r_d^{-1} u*.
    pub fn dual_right(&self) -> ElementaryUp {
        let d = self.d();
        let suffix = Word::concat(d, &[&[Token::NegD], self.prefix.dual_right().tokens()]);
        ElementaryUp::of(self.suffix.dual_right(), d - self.b, d - self.a, suffix)
    }

    /// *(u θ_{a,b} v) = *v r_d^{-1} φ_{d−b,d−a} *u.
    pub fn dual_left(&self) -> ElementaryUp {
        let d = self.d();
        let prefix = Word::concat(d, &[self.suffix.dual_left().tokens(), &[Token::NegD]]);
        ElementaryUp::of(prefix, d - self.b, d - self.a, self.prefix.dual_left())
    }
}

impl fmt::Display for ElementaryUp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi({};{},{};{})",
            self.prefix, self.a, self.b, self.suffix
        )
    }
}

impl fmt::Display for ElementaryDown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theta({};{},{};{})",
            self.prefix, self.a, self.b, self.suffix
        )
    }
}

/// Either kind of generator, for mixed composable sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Up(ElementaryUp),
    Down(ElementaryDown),
}

impl Generator {
    pub fn source(&self) -> Word {
        match self {
            Generator::Up(g) => g.source(),
            Generator::Down(g) => g.source(),
        }
    }

    pub fn target(&self) -> Word {
        match self {
            Generator::Up(g) => g.target(),
            Generator::Down(g) => g.target(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Up(g) => g.fmt(f),
            Generator::Down(g) => g.fmt(f),
        }
    }
}

/// All splitting generators with target λ, one per adjacent pair r_a r_b
/// with a+b ≤ d, in order of position.
pub fn up_generators_into(lambda: &Word) -> Vec<ElementaryUp> {
    let d = lambda.d();
    let t = lambda.tokens();
    let mut out = Vec::new();
    for i in 0..t.len().saturating_sub(1) {
        if let (Token::Pos(a), Token::Pos(b)) = (t[i], t[i + 1]) {
            if a + b <= d {
                out.push(ElementaryUp::of(
                    lambda.slice(0..i),
                    a,
                    b,
                    lambda.slice(i + 2..t.len()),
                ));
            }
        }
    }
    out
}

/// All contraction generators with source λ, one per letter triple
/// r_a r_d^{-1} r_b with a, b < d and a+b ≥ d, in order of position.
pub fn down_generators_outof(lambda: &Word) -> Vec<ElementaryDown> {
    let d = lambda.d();
    let t = lambda.tokens();
    let mut out = Vec::new();
    for i in 0..t.len().saturating_sub(2) {
        if let (Token::Pos(a), Token::NegD, Token::Pos(b)) = (t[i], t[i + 1], t[i + 2]) {
            if a < d && b < d && a + b >= d {
                out.push(ElementaryDown::of(
                    lambda.slice(0..i),
                    a,
                    b,
                    lambda.slice(i + 3..t.len()),
                ));
            }
        }
    }
    out
}

/// Parses `phi(u;a,b;v)` or `theta(u;a,b;v)`.
pub fn parse_generator(text: &str, d: usize) -> Result<Generator, Error> {
    let t = text.trim();
    let bad = || Error::InvalidGenerator(format!("cannot parse '{t}'"));
    let (kind, rest) = if let Some(r) = t.strip_prefix("phi(") {
        (true, r)
    } else if let Some(r) = t.strip_prefix("theta(") {
        (false, r)
    } else {
        return Err(bad());
    };
    let body = rest.strip_suffix(')').ok_or_else(bad)?;
    let parts: Vec<&str> = body.split(';').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let (a, b) = parts[1].split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    let u = Word::parse(parts[0], d)?;
    let v = Word::parse(parts[2], d)?;
    Ok(if kind {
        Generator::Up(ElementaryUp::new(u, a, b, v)?)
    } else {
        Generator::Down(ElementaryDown::new(u, a, b, v)?)
    })
}
