use std::collections::HashMap;

use num::Zero;

use super::matrix::rref_rows;
use super::subspace::split_blocks;
use super::{intersect, Rational, Subspace};
use crate::Error;

/// Homology dimensions of the alternating intersection complex
/// `0 → ⋂_s V_s → … → ⊕_{|T|=2} V_T → ⊕_t V_t → V`, listed for the terms
/// `C_1, …, C_n` (the rightmost term `C_0 = V` is left out).
pub fn complex_homology(spaces: &[Subspace]) -> Result<Vec<usize>, Error> {
    let n = spaces
        .first()
        .map(|s| s.ambient_dim())
        .ok_or(Error::EmptyCollection)?;
    if spaces.iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::AmbientMismatch);
    }
    let mut total = vec![0; spaces.len()];
    for (_, parts) in split_blocks(spaces, n) {
        let mut cache = IntersectionCache::new(&parts);
        let full = (1u32 << parts.len()) - 1;
        for (t, h) in total.iter_mut().zip(homology(&mut cache, full)) {
            *t += h;
        }
    }
    Ok(total)
}

/// Distributivity test: a collection is distributive iff every proper
/// subcollection is, and its alternating intersection complex is exact
/// everywhere except at the rightmost term. Collections of at most two
/// subspaces are always distributive.
pub fn is_distributive(spaces: &[Subspace]) -> Result<bool, Error> {
    let n = spaces
        .first()
        .map(|s| s.ambient_dim())
        .ok_or(Error::EmptyCollection)?;
    if spaces.iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::AmbientMismatch);
    }
    if spaces.len() <= 2 {
        return Ok(true);
    }
    // The complex splits as a direct sum over coordinate blocks.
    for (_, parts) in split_blocks(spaces, n) {
        let mut cache = IntersectionCache::new(&parts);
        let full: u32 = (1u32 << parts.len()) - 1;
        let mut masks: Vec<u32> = (1..=full).filter(|m| m.count_ones() >= 3).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            if homology(&mut cache, mask).iter().any(|&h| h != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct IntersectionCache<'a> {
    spaces: &'a [Subspace],
    ambient: usize,
    memo: HashMap<u32, Subspace>,
}

impl<'a> IntersectionCache<'a> {
    fn new(spaces: &'a [Subspace]) -> Self {
        let ambient = spaces[0].ambient_dim();
        IntersectionCache {
            spaces,
            ambient,
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, mask: u32) -> Subspace {
        if mask == 0 {
            return Subspace::full(self.ambient);
        }
        if let Some(s) = self.memo.get(&mask) {
            return s.clone();
        }
        let top = 31 - mask.leading_zeros();
        let rest = mask & !(1 << top);
        let s = if rest == 0 {
            self.spaces[top as usize].clone()
        } else {
            let r = self.get(rest);
            intersect(&[r, self.spaces[top as usize].clone()]).expect("same ambient")
        };
        self.memo.insert(mask, s.clone());
        s
    }
}

fn submasks_of_size(mask: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut sub = mask;
    loop {
        if sub.count_ones() == k {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out.sort_unstable();
    out
}

/// Rank of the differential `C_k → C_{k-1}` of the complex attached to `mask`,
/// written in the RREF bases of the intersections.
fn differential_rank(cache: &mut IntersectionCache, mask: u32, k: u32) -> usize {
    let sources = submasks_of_size(mask, k);
    let targets = submasks_of_size(mask, k - 1);
    let mut offsets = HashMap::new();
    let mut width = 0;
    let mut target_pivots = HashMap::new();
    for &t in &targets {
        let s = cache.get(t);
        offsets.insert(t, width);
        width += s.dim();
        target_pivots.insert(t, s.pivots().to_vec());
    }
    let mut rows = Vec::new();
    for &s in &sources {
        let space = cache.get(s);
        let members: Vec<u32> = (0..32).filter(|i| s & (1 << i) != 0).collect();
        for x in space.basis_rows() {
            let mut row = vec![Rational::zero(); width];
            for (j, &m) in members.iter().enumerate() {
                let t = s & !(1 << m);
                let off = offsets[&t];
                for (c, &p) in target_pivots[&t].iter().enumerate() {
                    if x[p].is_zero() {
                        continue;
                    }
                    row[off + c] = if j % 2 == 0 {
                        x[p].clone()
                    } else {
                        -x[p].clone()
                    };
                }
            }
            rows.push(row);
        }
    }
    rref_rows(rows, width).1.len()
}

fn homology(cache: &mut IntersectionCache, mask: u32) -> Vec<usize> {
    let m = mask.count_ones();
    let ranks: Vec<usize> = (1..=m).map(|k| differential_rank(cache, mask, k)).collect();
    (1..=m)
        .map(|k| {
            let dim: usize = submasks_of_size(mask, k)
                .iter()
                .map(|&t| cache.get(t).dim())
                .sum();
            let out = ranks[(k - 1) as usize];
            let inc = if k < m { ranks[k as usize] } else { 0 };
            dim - out - inc
        })
        .collect()
}
