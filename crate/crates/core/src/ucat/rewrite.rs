//! Normal forms for composable sequences of splitting generators.
//!
//! Sequences are listed in application order: `seq[0]` is applied first.
//! Two rewriting rules act on adjacent pairs (g1 then g2):
//!
//! - split associativity: g1 splits r_{a+b} into r_a r_b, g2 then splits
//!   that r_b into r_c r_e. Rewritten to split r_{a+b} as r_{a+c} r_e first.
//! - commutation: g2 acts strictly to the right of both outputs of g1.
//!   Rewritten so the right-hand split is applied first.
//!
//! With the standard orientation the system terminates and is confluent,
//! so every composite has exactly one normal form.

use crate::words::{Token, Word};
use crate::Error;

use super::generators::ElementaryUp;

/// Which way each rule is oriented. Only `Standard` yields a convergent
/// system; the others exist as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Standard,
    FlippedAssociativity,
    FlippedCommutation,
}

fn starts_with(w: &[Token], p: &[Token]) -> bool {
    w.len() >= p.len() && &w[..p.len()] == p
}

fn ends_with(w: &[Token], s: &[Token]) -> bool {
    w.len() >= s.len() && &w[w.len() - s.len()..] == s
}

/// g1 = (U, a, b, V), g2 = (U r_a, c, e, V) with c+e = b.
fn assoc_upper(g1: &ElementaryUp, g2: &ElementaryUp) -> Option<[ElementaryUp; 2]> {
    let d = g1.d();
    let p1 = g1.prefix().tokens();
    let p2 = g2.prefix().tokens();
    if p2.len() != p1.len() + 1 || !starts_with(p2, p1) || p2[p1.len()] != Token::Pos(g1.a()) {
        return None;
    }
    if g2.suffix() != g1.suffix() || g2.a() + g2.b() != g1.b() {
        return None;
    }
    let (a, c, e) = (g1.a(), g2.a(), g2.b());
    let first = ElementaryUp::of(g1.prefix().clone(), a + c, e, g1.suffix().clone());
    let second = ElementaryUp::of(
        g1.prefix().clone(),
        a,
        c,
        Word::concat(d, &[&[Token::Pos(e)], g1.suffix().tokens()]),
    );
    Some([first, second])
}

/// g1 = (U, a+b, c, V), g2 = (U, a, b, r_c V).
fn assoc_lower(g1: &ElementaryUp, g2: &ElementaryUp) -> Option<[ElementaryUp; 2]> {
    let d = g1.d();
    if g2.prefix() != g1.prefix() || g2.a() + g2.b() != g1.a() {
        return None;
    }
    let s2 = g2.suffix().tokens();
    let s1 = g1.suffix().tokens();
    if s2.len() != s1.len() + 1 || s2[0] != Token::Pos(g1.b()) || &s2[1..] != s1 {
        return None;
    }
    let (a, b, c) = (g2.a(), g2.b(), g1.b());
    let first = ElementaryUp::of(g1.prefix().clone(), a, b + c, g1.suffix().clone());
    let second = ElementaryUp::of(
        Word::concat(d, &[g1.prefix().tokens(), &[Token::Pos(a)]]),
        b,
        c,
        g1.suffix().clone(),
    );
    Some([first, second])
}

/// g2 acts to the right of the outputs of g1: its prefix is U r_a r_b V.
fn comm_upper(g1: &ElementaryUp, g2: &ElementaryUp) -> Option<[ElementaryUp; 2]> {
    let d = g1.d();
    let p1 = g1.prefix().tokens();
    let p2 = g2.prefix().tokens();
    let n = p1.len();
    if p2.len() < n + 2
        || !starts_with(p2, p1)
        || p2[n] != Token::Pos(g1.a())
        || p2[n + 1] != Token::Pos(g1.b())
    {
        return None;
    }
    let v = &p2[n + 2..];
    let first = ElementaryUp::of(
        Word::concat(d, &[p1, &[Token::Pos(g1.a() + g1.b())], v]),
        g2.a(),
        g2.b(),
        g2.suffix().clone(),
    );
    let second = ElementaryUp::of(
        g1.prefix().clone(),
        g1.a(),
        g1.b(),
        Word::concat(
            d,
            &[
                v,
                &[Token::Pos(g2.a()), Token::Pos(g2.b())],
                g2.suffix().tokens(),
            ],
        ),
    );
    Some([first, second])
}

/// g2 acts to the left of the outputs of g1: its suffix is V r_c r_e W.
fn comm_lower(g1: &ElementaryUp, g2: &ElementaryUp) -> Option<[ElementaryUp; 2]> {
    let d = g1.d();
    let s1 = g1.suffix().tokens();
    let s2 = g2.suffix().tokens();
    let tail: Vec<Token> = [Token::Pos(g1.a()), Token::Pos(g1.b())]
        .into_iter()
        .chain(s1.iter().copied())
        .collect();
    if !ends_with(s2, &tail) {
        return None;
    }
    let v = &s2[..s2.len() - tail.len()];
    let first = ElementaryUp::of(
        g2.prefix().clone(),
        g2.a(),
        g2.b(),
        Word::concat(d, &[v, &[Token::Pos(g1.a() + g1.b())], s1]),
    );
    let second = ElementaryUp::of(
        Word::concat(
            d,
            &[
                g2.prefix().tokens(),
                &[Token::Pos(g2.a()), Token::Pos(g2.b())],
                v,
            ],
        ),
        g1.a(),
        g1.b(),
        g1.suffix().clone(),
    );
    Some([first, second])
}

/// The rewrite of the adjacent pair (g1 then g2), if it is a left-hand side.
pub fn rewrite_pair(
    orientation: Orientation,
    g1: &ElementaryUp,
    g2: &ElementaryUp,
) -> Option<[ElementaryUp; 2]> {
    let assoc = if orientation == Orientation::FlippedAssociativity {
        assoc_lower(g1, g2)
    } else {
        assoc_upper(g1, g2)
    };
    if assoc.is_some() {
        return assoc;
    }
    if orientation == Orientation::FlippedCommutation {
        comm_lower(g1, g2)
    } else {
        comm_upper(g1, g2)
    }
}

pub fn is_normal(orientation: Orientation, seq: &[ElementaryUp]) -> bool {
    seq.windows(2)
        .all(|w| rewrite_pair(orientation, &w[0], &w[1]).is_none())
}

/// Rewrites leftmost redexes until none remain or `max_steps` rewrites
/// have been done. `None` means the cap was hit.
pub fn normalize_with(
    orientation: Orientation,
    seq: &[ElementaryUp],
    max_steps: usize,
) -> Option<Vec<ElementaryUp>> {
    let mut seq = seq.to_vec();
    let mut steps = 0;
    'outer: loop {
        for i in 0..seq.len().saturating_sub(1) {
            if let Some([x, y]) = rewrite_pair(orientation, &seq[i], &seq[i + 1]) {
                if steps == max_steps {
                    return None;
                }
                steps += 1;
                seq[i] = x;
                seq[i + 1] = y;
                continue 'outer;
            }
        }
        return Some(seq);
    }
}

pub(crate) fn check_composable_up(seq: &[ElementaryUp]) -> Result<(), Error> {
    for w in seq.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(Error::EndpointMismatch(format!("{} then {}", w[0], w[1])));
        }
    }
    Ok(())
}

/// The unique normal form of a composable sequence of splitting generators.
pub fn normal_form_up(seq: &[ElementaryUp]) -> Result<Vec<ElementaryUp>, Error> {
    check_composable_up(seq)?;
    Ok(normalize_with(Orientation::Standard, seq, usize::MAX)
        .expect("standard rewriting terminates"))
}
