use std::fmt;

use crate::words::{Token, Word};
use crate::Error;

use super::generators::{parse_generator, ElementaryDown, ElementaryUp, Generator};
use super::rewrite::normal_form_up;

fn check_composable(seq: &[Generator]) -> Result<(), Error> {
    for w in seq.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(Error::EndpointMismatch(format!("{} then {}", w[0], w[1])));
        }
    }
    Ok(())
}

/// Normal form of a composable sequence of contraction generators, obtained
/// by transporting the problem along the left duality to splitting
/// generators and back along the right duality.
pub fn normal_form_down(seq: &[ElementaryDown]) -> Result<Vec<ElementaryDown>, Error> {
    for w in seq.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(Error::EndpointMismatch(format!("{} then {}", w[0], w[1])));
        }
    }
    let ups: Vec<ElementaryUp> = seq.iter().rev().map(ElementaryDown::dual_left).collect();
    let nf = normal_form_up(&ups)?;
    Ok(nf.iter().rev().map(ElementaryUp::dual_right).collect())
}

/// Moves a split P followed by a contraction Q past each other. Returns the
/// contractions and splits that replace the pair (in application order).
pub(crate) fn interchange(
    p: &ElementaryUp,
    q: &ElementaryDown,
) -> (Vec<ElementaryDown>, Vec<ElementaryUp>) {
    let d = p.d();
    let i = p.position();
    let j = q.position();
    let (pu, pv) = (p.prefix().tokens(), p.suffix().tokens());
    let (qu, qv) = (q.prefix().tokens(), q.suffix().tokens());
    let (a, b) = (p.a(), p.b());
    let (c, e) = (q.a(), q.b());
    let pos = |x: usize| -> Vec<Token> { (x > 0).then_some(Token::Pos(x)).into_iter().collect() };
    if j >= i + 2 {
        // Contraction to the right of both new letters.
        let k = j - i - 2;
        let v1 = &pv[..k];
        let down = ElementaryDown::of(
            Word::concat(d, &[pu, &[Token::Pos(a + b)], v1]),
            c,
            e,
            q.suffix().clone(),
        );
        let up = ElementaryUp::of(
            p.prefix().clone(),
            a,
            b,
            Word::concat(d, &[v1, &pos(c + e - d), qv]),
        );
        (vec![down], vec![up])
    } else if j + 3 <= i {
        let v1 = &pu[j + 3..];
        let down = ElementaryDown::of(
            q.prefix().clone(),
            c,
            e,
            Word::concat(d, &[v1, &[Token::Pos(a + b)], pv]),
        );
        let up = ElementaryUp::of(
            Word::concat(d, &[qu, &pos(c + e - d), v1]),
            a,
            b,
            p.suffix().clone(),
        );
        (vec![down], vec![up])
    } else if j == i + 1 {
        // r_{a+b} → r_a r_b, then r_b r_d^{-1} r_e contracted.
        debug_assert_eq!(c, b);
        let mut downs = Vec::new();
        let mut ups = Vec::new();
        if a + b < d {
            downs.push(ElementaryDown::of(
                p.prefix().clone(),
                a + b,
                e,
                q.suffix().clone(),
            ));
        }
        if b + e > d {
            ups.push(ElementaryUp::of(
                p.prefix().clone(),
                a,
                b + e - d,
                q.suffix().clone(),
            ));
        }
        (downs, ups)
    } else if j + 2 == i {
        // r_x r_d^{-1} r_{a+b} → r_x r_d^{-1} r_a r_b, then r_x r_d^{-1} r_a contracted.
        debug_assert_eq!(e, a);
        let x = c;
        let mut downs = Vec::new();
        let mut ups = Vec::new();
        if a + b < d {
            downs.push(ElementaryDown::of(
                q.prefix().clone(),
                x,
                a + b,
                p.suffix().clone(),
            ));
        }
        if x + a > d {
            ups.push(ElementaryUp::of(
                q.prefix().clone(),
                x + a - d,
                b,
                p.suffix().clone(),
            ));
        }
        (downs, ups)
    } else {
        unreachable!("split output cannot meet a contraction in any other way")
    }
}

/// A morphism of U in normal form: contractions first, then splits, each
/// part a normal sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    source: Word,
    target: Word,
    downs: Vec<ElementaryDown>,
    ups: Vec<ElementaryUp>,
}

impl Morphism {
    pub fn identity(w: &Word) -> Morphism {
        Morphism {
            source: w.clone(),
            target: w.clone(),
            downs: Vec::new(),
            ups: Vec::new(),
        }
    }

    /// Normalizes an arbitrary composable sequence starting at `source`.
    pub fn from_generators(source: &Word, gens: &[Generator]) -> Result<Morphism, Error> {
        if let Some(g) = gens.first() {
            if g.source() != *source {
                return Err(Error::EndpointMismatch(format!(
                    "{g} does not start at {}",
                    source.display()
                )));
            }
        }
        check_composable(gens)?;
        let mut seq = gens.to_vec();
        // Bubble contractions to the front.
        'outer: loop {
            for k in 0..seq.len().saturating_sub(1) {
                if let (Generator::Up(p), Generator::Down(q)) = (&seq[k], &seq[k + 1]) {
                    let (downs, ups) = interchange(p, q);
                    let replacement: Vec<Generator> = downs
                        .into_iter()
                        .map(Generator::Down)
                        .chain(ups.into_iter().map(Generator::Up))
                        .collect();
                    seq.splice(k..k + 2, replacement);
                    continue 'outer;
                }
            }
            break;
        }
        let downs: Vec<ElementaryDown> = seq
            .iter()
            .filter_map(|g| match g {
                Generator::Down(x) => Some(x.clone()),
                _ => None,
            })
            .collect();
        let ups: Vec<ElementaryUp> = seq
            .iter()
            .filter_map(|g| match g {
                Generator::Up(x) => Some(x.clone()),
                _ => None,
            })
            .collect();
        let target = seq.last().map_or_else(|| source.clone(), Generator::target);
        Ok(Morphism {
            source: source.clone(),
            target,
            downs: normal_form_down(&downs)?,
            ups: normal_form_up(&ups)?,
        })
    }

    pub fn from_up(g: &ElementaryUp) -> Morphism {
        Morphism {
            source: g.source(),
            target: g.target(),
            downs: Vec::new(),
            ups: vec![g.clone()],
        }
    }

    pub fn from_down(g: &ElementaryDown) -> Morphism {
        Morphism {
            source: g.source(),
            target: g.target(),
            downs: vec![g.clone()],
            ups: Vec::new(),
        }
    }

    /// Wraps sequences that are already normal; no checks beyond endpoints.
    pub(crate) fn from_normal(
        source: Word,
        target: Word,
        downs: Vec<ElementaryDown>,
        ups: Vec<ElementaryUp>,
    ) -> Self {
        Morphism {
            source,
            target,
            downs,
            ups,
        }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn downs(&self) -> &[ElementaryDown] {
        &self.downs
    }

    pub fn ups(&self) -> &[ElementaryUp] {
        &self.ups
    }

    pub fn is_identity(&self) -> bool {
        self.downs.is_empty() && self.ups.is_empty()
    }

    /// The middle object: target of the contractions, source of the splits.
    pub fn middle(&self) -> Word {
        self.downs
            .last()
            .map_or_else(|| self.source.clone(), ElementaryDown::target)
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.downs
            .iter()
            .cloned()
            .map(Generator::Down)
            .chain(self.ups.iter().cloned().map(Generator::Up))
            .collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism, Error> {
        if self.target != other.source {
            return Err(Error::EndpointMismatch(format!(
                "target {} differs from source {}",
                self.target.display(),
                other.source.display()
            )));
        }
        let mut gens = self.generators();
        gens.extend(other.generators());
        Morphism::from_generators(&self.source, &gens)
    }

    /// The image under the right duality, a morphism target* → source*.
    pub fn dual_right(&self) -> Morphism {
        let gens: Vec<Generator> = self
            .generators()
            .iter()
            .rev()
            .map(|g| match g {
                Generator::Up(x) => Generator::Down(x.dual_right()),
                Generator::Down(x) => Generator::Up(x.dual_right()),
            })
            .collect();
        Morphism::from_generators(&self.target.dual_right(), &gens)
            .expect("duality preserves composability")
    }

    /// The image under the left duality, a morphism *target → *source.
    pub fn dual_left(&self) -> Morphism {
        let gens: Vec<Generator> = self
            .generators()
            .iter()
            .rev()
            .map(|g| match g {
                Generator::Up(x) => Generator::Down(x.dual_left()),
                Generator::Down(x) => Generator::Up(x.dual_left()),
            })
            .collect();
        Morphism::from_generators(&self.target.dual_left(), &gens)
            .expect("duality preserves composability")
    }

    /// Parses a whitespace separated list of generators applied to `source`.
    pub fn parse(source: &Word, text: &str) -> Result<Morphism, Error> {
        let gens = text
            .split_whitespace()
            .map(|t| parse_generator(t, source.d()))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::from_generators(source, &gens)
    }
}

/// `g ∘ f`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism, Error> {
    f.then(g)
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let downs: Vec<String> = self.downs.iter().map(|g| g.to_string()).collect();
        let ups: Vec<String> = self.ups.iter().map(|g| g.to_string()).collect();
        write!(f, "[{};{}]", downs.join(" "), ups.join(" "))
    }
}
