use std::collections::HashSet;

use crate::words::{all_words, Token, Word};

use super::generators::ElementaryUp;
use super::rewrite::{normalize_with, rewrite_pair, Orientation};

/// Outcome of the overlap analysis for one orientation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    /// Adjacent redex pairs examined.
    pub redexes: usize,
    /// Composable triples in which both adjacent pairs are redexes.
    pub overlaps: usize,
    /// Overlaps whose two cascades end in different normal forms.
    pub divergent: usize,
    /// Overlaps where a cascade did not stop within the step cap.
    pub cyclic: usize,
    /// A few offending triples, printed.
    pub examples: Vec<String>,
}

impl ConfluenceReport {
    pub fn is_convergent(&self) -> bool {
        self.divergent == 0 && self.cyclic == 0
    }
}

/// Rewrites applied to a single overlap before it is declared cyclic.
const STEP_CAP: usize = 10_000;

fn cat(d: usize, parts: &[&[Token]]) -> Word {
    Word::concat(d, parts)
}

/// Pairs (g1, g2) of both associativity shapes and both commutation shapes,
/// with every context word of length at most `max_prefix`.
fn candidate_pairs(d: usize, max_prefix: usize) -> Vec<(ElementaryUp, ElementaryUp)> {
    let ctx = all_words(d, max_prefix);
    let mut out = Vec::new();
    for u in &ctx {
        let ut = u.tokens();
        for v in &ctx {
            let vt = v.tokens();
            for a in 1..d {
                for b in 1..=d - a {
                    // r_{a+b} → r_a r_b, then r_b → r_c r_e.
                    for c in 1..b {
                        out.push((
                            ElementaryUp::of(u.clone(), a, b, v.clone()),
                            ElementaryUp::of(cat(d, &[ut, &[Token::Pos(a)]]), c, b - c, v.clone()),
                        ));
                    }
                    // r_{a+b+c} → r_{a+b} r_c, then r_{a+b} → r_a r_b.
                    for c in 1..=d - a - b {
                        out.push((
                            ElementaryUp::of(u.clone(), a + b, c, v.clone()),
                            ElementaryUp::of(u.clone(), a, b, cat(d, &[&[Token::Pos(c)], vt])),
                        ));
                    }
                    for w in &ctx {
                        let wt = w.tokens();
                        for c in 1..d {
                            for e in 1..=d - c {
                                // Split on the left, then on the right of it.
                                out.push((
                                    ElementaryUp::of(
                                        u.clone(),
                                        a,
                                        b,
                                        cat(d, &[vt, &[Token::Pos(c + e)], wt]),
                                    ),
                                    ElementaryUp::of(
                                        cat(d, &[ut, &[Token::Pos(a), Token::Pos(b)], vt]),
                                        c,
                                        e,
                                        w.clone(),
                                    ),
                                ));
                                // Split on the right, then on the left of it.
                                out.push((
                                    ElementaryUp::of(
                                        cat(d, &[ut, &[Token::Pos(a + b)], vt]),
                                        c,
                                        e,
                                        w.clone(),
                                    ),
                                    ElementaryUp::of(
                                        u.clone(),
                                        a,
                                        b,
                                        cat(d, &[vt, &[Token::Pos(c), Token::Pos(e)], wt]),
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every splitting generator with source `t`, where a hidden letter r_d
/// is written as r_d^k r_d r_d^{-k-1} with |k| ≤ 1.
fn splits_of(t: &Word) -> Vec<ElementaryUp> {
    let d = t.d();
    let tok = t.tokens();
    let mut out = HashSet::new();
    for (i, &x) in tok.iter().enumerate() {
        if let Token::Pos(s) = x {
            if s < d {
                for a in 1..s {
                    out.insert(ElementaryUp::of(
                        t.slice(0..i),
                        a,
                        s - a,
                        t.slice(i + 1..tok.len()),
                    ));
                }
            }
        }
    }
    for i in 0..=tok.len() {
        for k in -1..=1 {
            let pre = cat(d, &[&tok[..i], &power(d, k)]);
            let post = cat(d, &[&power(d, -k - 1), &tok[i..]]);
            for a in 1..d {
                out.insert(ElementaryUp::of(pre.clone(), a, d - a, post.clone()));
            }
        }
    }
    let mut v: Vec<ElementaryUp> = out.into_iter().filter(|g| g.source() == *t).collect();
    v.sort();
    v
}

fn power(d: usize, k: i64) -> Vec<Token> {
    let t = if k >= 0 { Token::Pos(d) } else { Token::NegD };
    vec![t; k.unsigned_abs() as usize]
}

/// Enumerates all length-3 overlaps g1 g2 g3 (both adjacent pairs
/// redexes) built from redex pairs with context words of length at most
/// `max_prefix`, and checks that the two rewrite cascades starting at the
/// overlap end in the same normal form.
pub fn confluence_check(d: usize, max_prefix: usize, orientation: Orientation) -> ConfluenceReport {
    let mut report = ConfluenceReport::default();
    for (g1, g2) in candidate_pairs(d, max_prefix) {
        if rewrite_pair(orientation, &g1, &g2).is_none() {
            continue;
        }
        report.redexes += 1;
        for g3 in splits_of(&g2.target()) {
            if rewrite_pair(orientation, &g2, &g3).is_none() {
                continue;
            }
            let triple = [g1.clone(), g2.clone(), g3];
            report.overlaps += 1;
            // Both one-step rewrites of the overlap, each normalized.
            let [x, y] = rewrite_pair(orientation, &triple[0], &triple[1]).expect("redex");
            let left = normalize_with(orientation, &[x, y, triple[2].clone()], STEP_CAP);
            let [x, y] = rewrite_pair(orientation, &triple[1], &triple[2]).expect("redex");
            let right = normalize_with(orientation, &[triple[0].clone(), x, y], STEP_CAP);
            let bad = match (&left, &right) {
                (Some(l), Some(r)) => {
                    if l != r {
                        report.divergent += 1;
                    }
                    l != r
                }
                _ => {
                    report.cyclic += 1;
                    true
                }
            };
            if bad && report.examples.len() < 5 {
                let s: Vec<String> = triple.iter().map(|g| g.to_string()).collect();
                report.examples.push(s.join(" ; "));
            }
        }
    }
    report
}
