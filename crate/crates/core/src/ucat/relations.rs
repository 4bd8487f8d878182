use crate::words::{all_words, Token, Word};

use super::generators::{ElementaryDown, ElementaryUp, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// (φ_{a,b} r_c)(φ_{a+b,c}) = (r_a φ_{b,c})(φ_{a,b+c}).
    SplitAssociativity,
    /// Splits at disjoint letters commute.
    DisjointSplits,
    /// Two ways of contracting r_a r_d^{-1} r_b r_d^{-1} r_c.
    ContractionAssociativity,
    /// A split whose right output is contracted with a letter to its right.
    SplitThenContractRight,
    /// A split whose left output is contracted with a letter to its left.
    SplitThenContractLeft,
    /// Zig-zag identities between θ and φ.
    Snake,
}

/// Two composable generator paths with the same endpoints that must agree.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub source: Word,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
}

fn cat(d: usize, parts: &[&[Token]]) -> Word {
    Word::concat(d, parts)
}

fn up(p: Word, a: usize, b: usize, s: Word) -> Generator {
    Generator::Up(ElementaryUp::of(p, a, b, s))
}

fn down(p: Word, a: usize, b: usize, s: Word) -> Generator {
    Generator::Down(ElementaryDown::of(p, a, b, s))
}

/// All defining relation instances of U for letters placed between context
/// words of length at most `context_len`.
pub fn relation_instances(d: usize, context_len: usize) -> Vec<RelationInstance> {
    let ctx = all_words(d, context_len);
    let mut out = Vec::new();
    for u in &ctx {
        for v in &ctx {
            let (ut, vt) = (u.tokens(), v.tokens());
            // Split associativity.
            for a in 1..d {
                for b in 1..d {
                    for c in 1..d {
                        if a + b + c > d {
                            continue;
                        }
                        let source = cat(d, &[ut, &[Token::Pos(a + b + c)], vt]);
                        out.push(RelationInstance {
                            kind: RelationKind::SplitAssociativity,
                            source,
                            lhs: vec![
                                up(u.clone(), a, b + c, v.clone()),
                                up(cat(d, &[ut, &[Token::Pos(a)]]), b, c, v.clone()),
                            ],
                            rhs: vec![
                                up(u.clone(), a + b, c, v.clone()),
                                up(u.clone(), a, b, cat(d, &[&[Token::Pos(c)], vt])),
                            ],
                        });
                    }
                }
            }
            // Disjoint splits: u r_{a+b} v r_{c+e}, split both letters.
            for a in 1..d {
                for b in 1..=d - a {
                    for c in 1..d {
                        for e in 1..=d - c {
                            let s1 = [Token::Pos(a + b)];
                            let s2 = [Token::Pos(c + e)];
                            let source = cat(d, &[ut, &s1, vt, &s2]);
                            if source.len() != ut.len() + vt.len() + 2 {
                                continue;
                            }
                            let lhs = vec![
                                up(u.clone(), a, b, cat(d, &[vt, &s2])),
                                up(
                                    cat(d, &[ut, &[Token::Pos(a), Token::Pos(b)], vt]),
                                    c,
                                    e,
                                    Word::unit(d),
                                ),
                            ];
                            let rhs = vec![
                                up(cat(d, &[ut, &s1, vt]), c, e, Word::unit(d)),
                                up(
                                    u.clone(),
                                    a,
                                    b,
                                    cat(d, &[vt, &[Token::Pos(c), Token::Pos(e)]]),
                                ),
                            ];
                            out.push(RelationInstance {
                                kind: RelationKind::DisjointSplits,
                                source,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
            // Contraction associativity.
            for a in 1..d {
                for b in 1..d {
                    for c in 1..d {
                        if a + b <= d || b + c <= d || a + b + c < 2 * d {
                            continue;
                        }
                        let source = cat(
                            d,
                            &[
                                ut,
                                &[
                                    Token::Pos(a),
                                    Token::NegD,
                                    Token::Pos(b),
                                    Token::NegD,
                                    Token::Pos(c),
                                ],
                                vt,
                            ],
                        );
                        if source.len() != ut.len() + vt.len() + 5 {
                            continue;
                        }
                        let lhs = vec![
                            down(
                                u.clone(),
                                a,
                                b,
                                cat(d, &[&[Token::NegD, Token::Pos(c)], vt]),
                            ),
                            down(u.clone(), a + b - d, c, v.clone()),
                        ];
                        let rhs = vec![
                            down(
                                cat(d, &[ut, &[Token::Pos(a), Token::NegD]]),
                                b,
                                c,
                                v.clone(),
                            ),
                            down(u.clone(), a, b + c - d, v.clone()),
                        ];
                        out.push(RelationInstance {
                            kind: RelationKind::ContractionAssociativity,
                            source,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
            // Split then contract on the right: u r_{a+b} r_d^{-1} r_e v.
            for a in 1..d {
                for b in 1..d {
                    for e in 1..d {
                        if a + b > d || b + e < d {
                            continue;
                        }
                        let source = cat(
                            d,
                            &[ut, &[Token::Pos(a + b), Token::NegD, Token::Pos(e)], vt],
                        );
                        let lhs = vec![
                            up(
                                u.clone(),
                                a,
                                b,
                                cat(d, &[&[Token::NegD, Token::Pos(e)], vt]),
                            ),
                            down(cat(d, &[ut, &[Token::Pos(a)]]), b, e, v.clone()),
                        ];
                        let mut rhs = Vec::new();
                        if a + b < d {
                            rhs.push(down(u.clone(), a + b, e, v.clone()));
                        }
                        if b + e > d {
                            rhs.push(up(u.clone(), a, b + e - d, v.clone()));
                        }
                        out.push(RelationInstance {
                            kind: RelationKind::SplitThenContractRight,
                            source,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
            // Split then contract on the left: u r_x r_d^{-1} r_{a+b} v.
            for x in 1..d {
                for a in 1..d {
                    for b in 1..d {
                        if a + b > d || x + a < d {
                            continue;
                        }
                        let source = cat(
                            d,
                            &[ut, &[Token::Pos(x), Token::NegD, Token::Pos(a + b)], vt],
                        );
                        let lhs = vec![
                            up(
                                cat(d, &[ut, &[Token::Pos(x), Token::NegD]]),
                                a,
                                b,
                                v.clone(),
                            ),
                            down(u.clone(), x, a, cat(d, &[&[Token::Pos(b)], vt])),
                        ];
                        let mut rhs = Vec::new();
                        if a + b < d {
                            rhs.push(down(u.clone(), x, a + b, v.clone()));
                        }
                        if x + a > d {
                            rhs.push(up(u.clone(), x + a - d, b, v.clone()));
                        }
                        out.push(RelationInstance {
                            kind: RelationKind::SplitThenContractLeft,
                            source,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(consistent));
    out
}

/// The two zig-zag identities for each 1 ≤ a ≤ d−1:
/// r_a → r_a r_d^{-1} r_{d−a} r_a → r_a and
/// r_d^{-1} r_{d-a} → r_d^{-1} r_{d−a} r_a r_d^{-1} r_{d−a} → r_d^{-1} r_{d−a}.
pub fn snake_instances(d: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let e = Word::unit(d);
    for a in 1..d {
        let b = d - a;
        // r_a = r_a r_d^{-1} r_d → r_a r_d^{-1} r_b r_a → r_a.
        out.push(RelationInstance {
            kind: RelationKind::Snake,
            source: Word::r(d, a),
            lhs: vec![
                up(cat(d, &[&[Token::Pos(a), Token::NegD]]), b, a, e.clone()),
                down(e.clone(), a, b, Word::r(d, a)),
            ],
            rhs: vec![],
        });
        // r_d^{-1} r_b = r_d^{-1} r_d r_d^{-1} r_b → r_d^{-1} r_b r_a r_d^{-1} r_b → r_d^{-1} r_b.
        out.push(RelationInstance {
            kind: RelationKind::Snake,
            source: cat(d, &[&[Token::NegD, Token::Pos(b)]]),
            lhs: vec![
                up(
                    Word::r_inv(d),
                    b,
                    a,
                    cat(d, &[&[Token::NegD, Token::Pos(b)]]),
                ),
                down(cat(d, &[&[Token::NegD, Token::Pos(b)]]), a, b, e.clone()),
            ],
            rhs: vec![],
        });
    }
    debug_assert!(out.iter().all(consistent));
    out
}

fn path_end(source: &Word, path: &[Generator]) -> Option<Word> {
    let mut cur = source.clone();
    for g in path {
        if g.source() != cur {
            return None;
        }
        cur = g.target();
    }
    Some(cur)
}

fn consistent(r: &RelationInstance) -> bool {
    match (path_end(&r.source, &r.lhs), path_end(&r.source, &r.rhs)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}
