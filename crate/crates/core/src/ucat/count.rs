use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::words::{leq, Token, Word};
use crate::Error;

use super::generators::{up_generators_into, ElementaryDown, ElementaryUp};
use super::morphism::Morphism;
use super::rewrite::{rewrite_pair, Orientation};

/// Merges the adjacent letters at each cut in `cuts` (cut i joins letters
/// i and i+1). `None` if some cut is not between two positive letters or a
/// merged run exceeds d.
pub fn coarsen(lambda: &Word, cuts: &[usize]) -> Option<Word> {
    let d = lambda.d();
    let t = lambda.tokens();
    let mut is_cut = vec![false; t.len()];
    for &c in cuts {
        if c + 1 >= t.len() {
            return None;
        }
        is_cut[c] = true;
    }
    let mut out = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.len() {
        if !is_cut[i] {
            out.push(t[i]);
            i += 1;
            continue;
        }
        let mut total = 0;
        loop {
            match t[i] {
                Token::Pos(a) => total += a,
                Token::NegD => return None,
            }
            if !is_cut[i] {
                break;
            }
            i += 1;
        }
        if total > d {
            return None;
        }
        out.push(Token::Pos(total));
        i += 1;
    }
    Some(Word::concat(d, &[&out]))
}

/// Cut positions of λ that carry a splitting generator.
fn mergeable_cuts(lambda: &Word) -> Vec<usize> {
    up_generators_into(lambda)
        .iter()
        .map(ElementaryUp::position)
        .collect()
}

/// Every μ with a splitting morphism μ → λ, including λ.
pub fn up_sources(lambda: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(w) = queue.pop_front() {
        for g in up_generators_into(&w) {
            let s = g.source();
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

/// Every ν with a contraction morphism μ → ν, including μ.
pub fn down_targets(mu: &Word) -> BTreeSet<Word> {
    up_sources(&mu.dual_left())
        .iter()
        .map(Word::dual_right)
        .collect()
}

/// Memoized Hom counts. The splitting slice over λ is a thin poset whose
/// covers are the single merges, so counts follow by inclusion–exclusion
/// over sets of merged cuts.
#[derive(Default)]
pub struct HomCounter {
    memo: HashMap<(Word, Word), u64>,
}

impl HomCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count_up(&mut self, mu: &Word, lambda: &Word) -> u64 {
        if mu == lambda {
            return 1;
        }
        if mu.len() >= lambda.len()
            || mu.d() != lambda.d()
            || mu.abelian_degree() != lambda.abelian_degree()
            || lambda.degree_up() <= mu.degree_up()
        {
            return 0;
        }
        let key = (mu.clone(), lambda.clone());
        if let Some(&n) = self.memo.get(&key) {
            return n;
        }
        let cuts = mergeable_cuts(lambda);
        let mut total: i128 = 0;
        for mask in 1u32..(1 << cuts.len()) {
            let chosen: Vec<usize> = (0..cuts.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| cuts[k])
                .collect();
            if let Some(w) = coarsen(lambda, &chosen) {
                let n = self.count_up(mu, &w) as i128;
                if mask.count_ones() % 2 == 1 {
                    total += n;
                } else {
                    total -= n;
                }
            }
        }
        let n = u64::try_from(total).expect("inclusion-exclusion gives a nonnegative count");
        self.memo.insert(key, n);
        n
    }

    pub fn count_down(&mut self, mu: &Word, nu: &Word) -> u64 {
        self.count_up(&nu.dual_left(), &mu.dual_left())
    }

    pub fn hom_count(&mut self, mu: &Word, nu: &Word) -> u64 {
        down_targets(mu)
            .iter()
            .map(|lambda| {
                let down = self.count_down(mu, lambda);
                if down == 0 {
                    0
                } else {
                    down * self.count_up(lambda, nu)
                }
            })
            .sum()
    }
}

pub fn count_up(mu: &Word, lambda: &Word) -> u64 {
    HomCounter::new().count_up(mu, lambda)
}

pub fn count_down(mu: &Word, nu: &Word) -> u64 {
    HomCounter::new().count_down(mu, nu)
}

/// |Hom_U(μ, ν)|.
pub fn hom_count(mu: &Word, nu: &Word) -> Result<u64, Error> {
    if mu.d() != nu.d() {
        return Err(Error::DimensionMismatch(mu.d(), nu.d()));
    }
    Ok(HomCounter::new().hom_count(mu, nu))
}

/// All normal sequences of splitting generators from μ to λ, built
/// backwards from λ. Independent of the counting formula.
pub fn enumerate_up(mu: &Word, lambda: &Word) -> Vec<Vec<ElementaryUp>> {
    let mut out = Vec::new();
    if mu.d() != lambda.d() || !leq(mu, lambda).unwrap_or(false) {
        return out;
    }
    let steps = lambda.degree_up() - mu.degree_up();
    if steps < 0 {
        return out;
    }
    let mut acc = Vec::new();
    walk_back(mu, lambda, None, steps as usize, &mut acc, &mut out);
    out.sort();
    out
}

fn walk_back(
    mu: &Word,
    current: &Word,
    next: Option<&ElementaryUp>,
    remaining: usize,
    acc: &mut Vec<ElementaryUp>,
    out: &mut Vec<Vec<ElementaryUp>>,
) {
    if remaining == 0 {
        if current == mu {
            out.push(acc.iter().rev().cloned().collect());
        }
        return;
    }
    for g in up_generators_into(current) {
        if let Some(n) = next {
            if rewrite_pair(Orientation::Standard, &g, n).is_some() {
                continue;
            }
        }
        let s = g.source();
        if !leq(mu, &s).unwrap_or(false) {
            continue;
        }
        acc.push(g.clone());
        walk_back(mu, &s, Some(&g), remaining - 1, acc, out);
        acc.pop();
    }
}

/// All normal sequences of contraction generators from μ to ν.
pub fn enumerate_down(mu: &Word, nu: &Word) -> Vec<Vec<ElementaryDown>> {
    let mut out: Vec<Vec<ElementaryDown>> = enumerate_up(&nu.dual_left(), &mu.dual_left())
        .iter()
        .map(|seq| seq.iter().rev().map(ElementaryUp::dual_right).collect())
        .collect();
    out.sort();
    out
}

/// All morphisms μ → ν in normal form, sorted.
pub fn hom_enumerate(mu: &Word, nu: &Word) -> Result<Vec<Morphism>, Error> {
    if mu.d() != nu.d() {
        return Err(Error::DimensionMismatch(mu.d(), nu.d()));
    }
    let mut out = Vec::new();
    for lambda in down_targets(mu) {
        let ups = enumerate_up(&lambda, nu);
        if ups.is_empty() {
            continue;
        }
        for downs in enumerate_down(mu, &lambda) {
            for u in &ups {
                out.push(Morphism::from_normal(
                    mu.clone(),
                    nu.clone(),
                    downs.clone(),
                    u.clone(),
                ));
            }
        }
    }
    out.sort();
    Ok(out)
}
