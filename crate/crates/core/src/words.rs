//! The object monoid Λ = ⟨r_1, …, r_{d−1}, r_d^{±1}⟩: reduced words, degrees,
//! the two dualities, the partial products ∧ and ∨, and the partial order ≤.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::Error;

/// A letter of a word: `Pos(a)` is r_a, `NegD` is r_d^{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Pos(usize),
    NegD,
}

/// A reduced word of Λ. Ordered by (d, length, token stream).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    d: usize,
    tokens: Vec<Token>,
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, self.tokens.len(), &self.tokens).cmp(&(other.d, other.tokens.len(), &other.tokens))
    }
}

fn is_d_token(t: Token, d: usize) -> bool {
    matches!(t, Token::NegD) || t == Token::Pos(d)
}

/// Cancels adjacent r_d r_d^{-1} and r_d^{-1} r_d pairs.
fn reduce(d: usize, tokens: impl IntoIterator<Item = Token>) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::new();
    for t in tokens {
        match (out.last(), t) {
            (Some(&Token::Pos(a)), Token::NegD) if a == d => {
                out.pop();
            }
            (Some(&Token::NegD), Token::Pos(a)) if a == d => {
                out.pop();
            }
            _ => out.push(t),
        }
    }
    out
}

impl Word {
    pub fn unit(d: usize) -> Word {
        Word {
            d,
            tokens: Vec::new(),
        }
    }

    /// Validates indices and reduces.
    pub fn new(d: usize, tokens: Vec<Token>) -> Result<Word, Error> {
        if d == 0 {
            return Err(Error::MalformedWord("d must be positive".into()));
        }
        for t in &tokens {
            if let Token::Pos(a) = t {
                if *a == 0 || *a > d {
                    return Err(Error::MalformedWord(format!(
                        "index {a} out of range 1..={d}"
                    )));
                }
            }
        }
        Ok(Word {
            d,
            tokens: reduce(d, tokens),
        })
    }

    /// Builds from tokens already known to be valid; reduces.
    pub(crate) fn from_valid(d: usize, tokens: impl IntoIterator<Item = Token>) -> Word {
        Word {
            d,
            tokens: reduce(d, tokens),
        }
    }

    /// The generator r_a (r_0 is the unit).
    pub fn r(d: usize, a: usize) -> Word {
        assert!(a <= d);
        Word::from_valid(d, (a > 0).then_some(Token::Pos(a)))
    }

    /// The generator r_d^{-1}.
    pub fn r_inv(d: usize) -> Word {
        Word {
            d,
            tokens: vec![Token::NegD],
        }
    }

    pub fn parse(text: &str, d: usize) -> Result<Word, Error> {
        parse_word(text, d)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Product in Λ.
    pub fn mul(&self, other: &Word) -> Word {
        assert_eq!(self.d, other.d, "words with different d");
        Word::from_valid(self.d, self.tokens.iter().chain(&other.tokens).copied())
    }

    /// Product of a token list (valid for this d) with reduction.
    pub(crate) fn concat(d: usize, parts: &[&[Token]]) -> Word {
        Word::from_valid(d, parts.iter().flat_map(|p| p.iter().copied()))
    }

    /// Subword of the token list (reduced since it is a factor of a reduced word).
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            d: self.d,
            tokens: self.tokens[range].to_vec(),
        }
    }

    /// d↑: r_i ↦ 1, r_d^{-1} ↦ −1.
    pub fn degree_up(&self) -> i64 {
        self.tokens
            .iter()
            .map(|t| if *t == Token::NegD { -1 } else { 1 })
            .sum()
    }

    /// d↓(w) = −d↑(w*).
    pub fn degree_down(&self) -> i64 {
        self.tokens
            .iter()
            .map(|t| match t {
                Token::NegD => -1,
                Token::Pos(a) if *a == self.d => 1,
                Token::Pos(_) => 0,
            })
            .sum()
    }

    /// Image in the abelianization: total degree in V, with r_a ↦ a and r_d^{-1} ↦ −d.
    pub fn abelian_degree(&self) -> i64 {
        let d = self.d as i64;
        self.tokens
            .iter()
            .map(|t| if let Token::Pos(a) = t { *a as i64 } else { -d })
            .sum()
    }

    /// w ↦ w*, with r_a* = r_{d−a} r_d^{-1} and (r_d^{-1})* = r_d, order reversed.
    pub fn dual_right(&self) -> Word {
        let d = self.d;
        let mut out = Vec::new();
        for t in self.tokens.iter().rev() {
            match *t {
                Token::NegD => out.push(Token::Pos(d)),
                Token::Pos(a) if a == d => out.push(Token::NegD),
                Token::Pos(a) => out.extend([Token::Pos(d - a), Token::NegD]),
            }
        }
        Word::from_valid(d, out)
    }

    /// w ↦ *w, with *r_a = r_d^{-1} r_{d−a} and *(r_d^{-1}) = r_d, order reversed.
    pub fn dual_left(&self) -> Word {
        let d = self.d;
        let mut out = Vec::new();
        for t in self.tokens.iter().rev() {
            match *t {
                Token::NegD => out.push(Token::Pos(d)),
                Token::Pos(a) if a == d => out.push(Token::NegD),
                Token::Pos(a) => out.extend([Token::NegD, Token::Pos(d - a)]),
            }
        }
        Word::from_valid(d, out)
    }

    /// u = w r_a r_d^e with a < d and e the exponent of the maximal trailing
    /// block of d-letters. Returns (w, a, e).
    fn split_tail(&self) -> Option<(Word, usize, i64)> {
        let n = self.tokens.len();
        let block = self
            .tokens
            .iter()
            .rev()
            .take_while(|t| is_d_token(**t, self.d))
            .count();
        let e = exponent(&self.tokens[n - block..]);
        if block == n {
            return None;
        }
        let Token::Pos(a) = self.tokens[n - block - 1] else {
            unreachable!()
        };
        Some((self.slice(0..n - block - 1), a, e))
    }

    /// v = r_d^e r_b w′ with b < d. Returns (e, b, w′).
    fn split_head(&self) -> Option<(i64, usize, Word)> {
        let n = self.tokens.len();
        let block = self
            .tokens
            .iter()
            .take_while(|t| is_d_token(**t, self.d))
            .count();
        if block == n {
            return None;
        }
        let e = exponent(&self.tokens[..block]);
        let Token::Pos(b) = self.tokens[block] else {
            unreachable!()
        };
        Some((e, b, self.slice(block + 1..n)))
    }

    /// u∧v = w r_{a+b} w′ for u = w r_a r_d^{−x}, v = r_d^x r_b w′, a+b ≤ d.
    pub fn wedge(&self, v: &Word) -> Option<Word> {
        let (w, a, eu) = self.split_tail()?;
        let (ev, b, w2) = v.split_head()?;
        (eu + ev == 0 && a + b <= self.d)
            .then(|| Word::concat(self.d, &[&w.tokens, &[Token::Pos(a + b)], &w2.tokens]))
    }

    /// u∨v = w r_{a+b−d} w′ for u = w r_a r_d^{−x−1}, v = r_d^x r_b w′, a+b ≥ d.
    pub fn vee(&self, v: &Word) -> Option<Word> {
        let (w, a, eu) = self.split_tail()?;
        let (ev, b, w2) = v.split_head()?;
        if eu + ev != -1 || a + b < self.d {
            return None;
        }
        let mid: Vec<Token> = (a + b > self.d)
            .then_some(Token::Pos(a + b - self.d))
            .into_iter()
            .collect();
        Some(Word::concat(self.d, &[&w.tokens, &mid, &w2.tokens]))
    }

    /// All words one elementary down-move below `self`: an occurrence of
    /// r_a r_b (a+b ≤ d) contracted to r_{a+b}, or an occurrence of
    /// r_a r_d^{-1} r_{d−a} deleted.
    pub fn down_moves(&self) -> Vec<Word> {
        let d = self.d;
        let t = &self.tokens;
        let mut out = BTreeSet::new();
        for i in 0..t.len() {
            if let (Token::Pos(a), Some(Token::Pos(b))) = (t[i], t.get(i + 1)) {
                if a + b <= d {
                    out.insert(Word::concat(
                        d,
                        &[&t[..i], &[Token::Pos(a + b)], &t[i + 2..]],
                    ));
                }
            }
            if let (Token::Pos(a), Some(Token::NegD), Some(Token::Pos(b))) =
                (t[i], t.get(i + 1), t.get(i + 2))
            {
                if a < d && a + b == d {
                    out.insert(Word::concat(d, &[&t[..i], &t[i + 3..]]));
                }
            }
        }
        out.into_iter().collect()
    }

    /// All words one elementary up-move above `self` whose length is at most
    /// `max_len`. Factorizations w = x·u·y are taken in Λ: the reduced word is
    /// split at every position and up to `max_len` cancelling r_d^{±1} pairs
    /// are inserted at the split.
    pub fn up_moves(&self, max_len: usize) -> Vec<Word> {
        let d = self.d;
        let t = &self.tokens;
        let mut out = BTreeSet::new();
        for i in 0..t.len() {
            if let Token::Pos(s) = t[i] {
                if s < d {
                    for a in 1..s {
                        out.insert(Word::concat(
                            d,
                            &[&t[..i], &[Token::Pos(a), Token::Pos(s - a)], &t[i + 1..]],
                        ));
                    }
                }
            }
        }
        let k_max = max_len as i64;
        for i in 0..=t.len() {
            for k in -k_max..=k_max {
                let x = Word::concat(d, &[&t[..i], &power(d, k)]);
                // x · r_d · y = w
                let y = Word::concat(d, &[&power(d, -k - 1), &t[i..]]);
                for a in 1..d {
                    out.insert(Word::concat(
                        d,
                        &[&x.tokens, &[Token::Pos(a), Token::Pos(d - a)], &y.tokens],
                    ));
                }
                // x · y = w
                let y = Word::concat(d, &[&power(d, -k), &t[i..]]);
                for a in 1..d {
                    out.insert(Word::concat(
                        d,
                        &[
                            &x.tokens,
                            &[Token::Pos(a), Token::NegD, Token::Pos(d - a)],
                            &y.tokens,
                        ],
                    ));
                }
            }
        }
        out.into_iter()
            .filter(|w| {
                debug_assert!(w.len() > self.len());
                debug_assert_eq!(w.abelian_degree(), self.abelian_degree());
                w.len() <= max_len
            })
            .collect()
    }
}

fn exponent(block: &[Token]) -> i64 {
    block
        .iter()
        .map(|t| if *t == Token::NegD { -1 } else { 1 })
        .sum()
}

fn power(d: usize, k: i64) -> Vec<Token> {
    let t = if k >= 0 { Token::Pos(d) } else { Token::NegD };
    vec![t; k.unsigned_abs() as usize]
}

/// Parses the word grammar: tokens `r<k>` or `r<d>^-1` separated by `*`; the
/// empty string (or `1`) is the unit.
pub fn parse_word(text: &str, d: usize) -> Result<Word, Error> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Word::new(d, Vec::new());
    }
    let mut tokens = Vec::new();
    for raw in text.split('*') {
        let tok = raw.trim();
        let body = tok
            .strip_prefix('r')
            .ok_or_else(|| Error::MalformedWord(format!("bad token '{tok}'")))?;
        let (num, inverse) = match body.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (body, false),
        };
        let k: usize = num
            .parse()
            .map_err(|_| Error::MalformedWord(format!("bad token '{tok}'")))?;
        if k == 0 || k > d {
            return Err(Error::MalformedWord(format!(
                "index {k} out of range 1..={d}"
            )));
        }
        if inverse {
            if k != d {
                return Err(Error::MalformedWord(format!(
                    "only r{d} may be inverted, got '{tok}'"
                )));
            }
            tokens.push(Token::NegD);
        } else {
            tokens.push(Token::Pos(k));
        }
    }
    Word::new(d, tokens)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match t {
                Token::Pos(a) => write!(f, "r{a}")?,
                Token::NegD => write!(f, "r{}^-1", self.d)?,
            }
        }
        Ok(())
    }
}

impl Word {
    /// Display form for tables, where the unit prints as `1`.
    pub fn display(&self) -> String {
        if self.is_unit() {
            "1".to_string()
        } else {
            self.to_string()
        }
    }
}

fn check_d(a: &Word, b: &Word) -> Result<(), Error> {
    if a.d != b.d {
        return Err(Error::DimensionMismatch(a.d, b.d));
    }
    Ok(())
}

/// μ ≤ λ in the minimal left and right invariant order with
/// r_{a+b} < r_a r_b and 1 < r_a r_d^{-1} r_{d−a}.
pub fn leq(mu: &Word, lambda: &Word) -> Result<bool, Error> {
    check_d(mu, lambda)?;
    if mu == lambda {
        return Ok(true);
    }
    if mu.len() >= lambda.len() || mu.abelian_degree() != lambda.abelian_degree() {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(w) = queue.pop_front() {
        for v in w.down_moves() {
            if v == *mu {
                return Ok(true);
            }
            if v.len() > mu.len() && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(false)
}

/// {μ : μ ≤ λ}, including λ.
pub fn down_set(lambda: &Word) -> SaturatedSet {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(w) = queue.pop_front() {
        for v in w.down_moves() {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    SaturatedSet {
        d: lambda.d,
        elements: seen,
    }
}

/// All reduced words of length at most `max_len`, sorted by length then token stream.
pub fn all_words(d: usize, max_len: usize) -> Vec<Word> {
    let mut alphabet: Vec<Token> = (1..=d).map(Token::Pos).collect();
    alphabet.push(Token::NegD);
    let mut out = vec![Word::unit(d)];
    let mut frontier = vec![Word::unit(d)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &t in &alphabet {
                let last = w.tokens.last().copied();
                let cancels = matches!((last, t), (Some(Token::NegD), Token::Pos(a)) if a == d)
                    || matches!((last, t), (Some(Token::Pos(a)), Token::NegD) if a == d);
                if !cancels {
                    let mut tokens = w.tokens.clone();
                    tokens.push(t);
                    next.push(Word { d, tokens });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// A downward closed finite subset of Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedSet {
    d: usize,
    elements: BTreeSet<Word>,
}

impl SaturatedSet {
    pub fn new(d: usize, words: impl IntoIterator<Item = Word>) -> Result<Self, Error> {
        let elements: BTreeSet<Word> = words.into_iter().collect();
        for w in &elements {
            if w.d != d {
                return Err(Error::DimensionMismatch(d, w.d));
            }
            for m in down_set(w).elements {
                if !elements.contains(&m) {
                    return Err(Error::NotSaturated(m.display()));
                }
            }
        }
        Ok(SaturatedSet { d, elements })
    }

    /// The union of the down-sets of the given words.
    pub fn closure(d: usize, words: impl IntoIterator<Item = Word>) -> Self {
        let mut elements = BTreeSet::new();
        for w in words {
            elements.extend(down_set(&w).elements);
        }
        SaturatedSet { d, elements }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn elements(&self) -> impl Iterator<Item = &Word> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.elements.contains(w)
    }
}

impl fmt::Display for SaturatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Parses `{w1,w2,...}`; an empty item denotes the unit.
pub fn parse_word_set(text: &str, d: usize) -> Result<Vec<Word>, Error> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::MalformedWord(format!("set must be braced: '{text}'")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|w| parse_word(w, d)).collect()
}

pub fn is_saturated(set: &[Word]) -> bool {
    let members: HashSet<&Word> = set.iter().collect();
    set.iter()
        .all(|w| down_set(w).elements.iter().all(|m| members.contains(m)))
}

pub fn is_antichain(set: &[Word]) -> bool {
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if a != b && (leq(a, b).unwrap_or(false) || leq(b, a).unwrap_or(false)) {
                return false;
            }
        }
    }
    true
}
