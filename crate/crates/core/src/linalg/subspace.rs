use num::{One, Zero};

use super::matrix::rref_rows;
use super::{Matrix, Rational};
use crate::Error;

/// A subspace of k^n stored by its reduced row-echelon basis. The RREF is
/// canonical, so equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Self {
        for r in &rows {
            assert_eq!(
                r.len(),
                ambient,
                "vector length differs from ambient dimension"
            );
        }
        let (rows, pivots) = rref_rows(rows, ambient);
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    /// Trusts that `rows` is already in reduced row-echelon form.
    pub(crate) fn from_rref(ambient: usize, rows: Vec<Vec<Rational>>, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn basis(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.rows.clone())
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` in the RREF basis, or `None` if `v` is not in the space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (coef, row) in c.iter().zip(&self.rows) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= coef * y;
                }
            }
        }
        rest.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// Restriction to the coordinates `coords` (listed increasingly), keeping
    /// only basis rows supported there. Exact when every basis row lives
    /// either inside or outside `coords`.
    fn restrict(&self, coords: &[usize]) -> Subspace {
        let rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .filter(|r| coords.iter().any(|&c| !r[c].is_zero()))
            .map(|r| coords.iter().map(|&c| r[c].clone()).collect())
            .collect();
        // RREF is preserved: pivots stay increasing and remain unit columns.
        let pivots = rows
            .iter()
            .map(|r: &Vec<Rational>| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        Subspace {
            ambient: coords.len(),
            rows,
            pivots,
        }
    }
}

fn check_ambient(spaces: &[Subspace]) -> Result<usize, Error> {
    let n = spaces
        .first()
        .map(|s| s.ambient)
        .ok_or(Error::EmptyCollection)?;
    if spaces.iter().any(|s| s.ambient != n) {
        return Err(Error::AmbientMismatch);
    }
    Ok(n)
}

/// Groups coordinates that are linked through the support of some basis row.
/// Every basis row lies inside one group, so each space splits as a direct
/// sum over the groups. Coordinates not touched by any row are omitted.
pub(crate) fn coordinate_blocks(spaces: &[Subspace], ambient: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..ambient).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut touched = vec![false; ambient];
    for s in spaces {
        for r in &s.rows {
            let mut first = None;
            for (j, x) in r.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                touched[j] = true;
                match first {
                    None => first = Some(j),
                    Some(f) => {
                        let (a, b) = (find(&mut parent, f), find(&mut parent, j));
                        if a != b {
                            parent[b] = a;
                        }
                    }
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for j in (0..ambient).filter(|&j| touched[j]) {
        let root = find(&mut parent, j);
        groups.entry(root).or_default().push(j);
    }
    groups.into_values().collect()
}

pub(crate) fn split_blocks(
    spaces: &[Subspace],
    ambient: usize,
) -> Vec<(Vec<usize>, Vec<Subspace>)> {
    coordinate_blocks(spaces, ambient)
        .into_iter()
        .map(|coords| {
            let parts = spaces.iter().map(|s| s.restrict(&coords)).collect();
            (coords, parts)
        })
        .collect()
}

/// Reassembles per-block RREF rows into one RREF subspace.
fn lift(ambient: usize, blocks: Vec<(Vec<usize>, Subspace)>) -> Subspace {
    let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (coords, s) in blocks {
        for (r, &p) in s.rows.into_iter().zip(&s.pivots) {
            let mut v = vec![Rational::zero(); ambient];
            for (x, &c) in r.into_iter().zip(&coords) {
                v[c] = x;
            }
            rows.push((coords[p], v));
        }
    }
    rows.sort_by_key(|(p, _)| *p);
    let pivots = rows.iter().map(|(p, _)| *p).collect();
    Subspace::from_rref(ambient, rows.into_iter().map(|(_, v)| v).collect(), pivots)
}

fn annihilator_dense(w: &Subspace) -> Subspace {
    w.basis().kernel()
}

fn intersect_dense(spaces: &[Subspace], ambient: usize) -> Subspace {
    if spaces.iter().any(|s| s.dim() == 0) {
        return Subspace::zero(ambient);
    }
    let mut nontrivial: Vec<&Subspace> = spaces.iter().filter(|s| s.dim() < ambient).collect();
    if nontrivial.is_empty() {
        return Subspace::full(ambient);
    }
    if nontrivial.len() == 1 {
        return nontrivial.pop().unwrap().clone();
    }
    let mut rows = Vec::new();
    for s in nontrivial {
        rows.extend(annihilator_dense(s).rows);
    }
    annihilator_dense(&Subspace::from_rows(ambient, rows))
}

/// Exact intersection of subspaces sharing an ambient space.
pub fn intersect(spaces: &[Subspace]) -> Result<Subspace, Error> {
    let n = check_ambient(spaces)?;
    let blocks = split_blocks(spaces, n)
        .into_iter()
        .map(|(coords, parts)| {
            let m = coords.len();
            let s = intersect_dense(&parts, m);
            (coords, s)
        })
        .collect();
    Ok(lift(n, blocks))
}

/// Exact sum of subspaces sharing an ambient space.
pub fn sum(spaces: &[Subspace]) -> Result<Subspace, Error> {
    let n = check_ambient(spaces)?;
    let blocks = split_blocks(spaces, n)
        .into_iter()
        .map(|(coords, parts)| {
            let m = coords.len();
            let rows = parts.into_iter().flat_map(|p| p.rows).collect();
            (coords, Subspace::from_rows(m, rows))
        })
        .collect();
    Ok(lift(n, blocks))
}

/// The annihilator under the standard pairing of k^n with itself.
pub fn annihilator(w: &Subspace) -> Subspace {
    annihilator_dense(w)
}

/// `A ⊗ B` inside k^(m·n). The Kronecker product of RREF bases is again in
/// RREF, so no elimination is needed.
pub fn tensor(a: &Subspace, b: &Subspace) -> Subspace {
    let n = b.ambient;
    let mut rows = Vec::with_capacity(a.dim() * b.dim());
    let mut pivots = Vec::with_capacity(a.dim() * b.dim());
    for (ra, &pa) in a.rows.iter().zip(&a.pivots) {
        for (rb, &pb) in b.rows.iter().zip(&b.pivots) {
            let mut v = vec![Rational::zero(); a.ambient * n];
            for (i, x) in ra.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in rb.iter().enumerate() {
                    if !y.is_zero() {
                        v[i * n + j] = x * y;
                    }
                }
            }
            rows.push(v);
            pivots.push(pa * n + pb);
        }
    }
    Subspace::from_rref(a.ambient * n, rows, pivots)
}
