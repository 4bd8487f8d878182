//! The fiber functor M: U → Vect as exact matrices, with M(r_a) = R_a,
//! M(r_d^{-1}) = R_d^* (basis ω^* dual to the RREF generator ω of R_d),
//! and the comodules ∇(λ), Δ(λ), L(λ) computed inside M(λ).
//!
//! Tensor factors follow token order with Kronecker indexing. Cancelled
//! pairs r_d r_d^{-1} have one-dimensional factors and are identified with
//! k through ω ⊗ ω^* ↦ 1, so the matrix of u g v is I ⊗ M(g) ⊗ I.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};

use crate::algebra::QuadraticAlgebra;
use crate::linalg::{intersect, is_distributive, sum, tensor, Matrix, Rational, Subspace};
use crate::ucat::{
    count_up, down_generators_outof, hom_count, hom_enumerate, up_generators_into, up_sources,
    ElementaryDown, ElementaryUp, Generator, Morphism,
};
use crate::words::{SaturatedSet, Token, Word};
use crate::Error;

/// M(λ) described by its tensor factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpace {
    pub word: Word,
    pub factor_dims: Vec<usize>,
    pub total_dim: usize,
}

impl fmt::Display for RepSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.factor_dims.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "M({}) = {} [{}]",
            self.word.display(),
            self.total_dim,
            dims.join("x")
        )
    }
}

/// A linear map between evaluated objects; `matrix` is codomain × domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub domain: RepSpace,
    pub codomain: RepSpace,
    pub matrix: Matrix,
}

/// M for a fixed algebra and d. Basic matrices are computed up front.
#[derive(Clone, Debug)]
pub struct FiberFunctor {
    algebra: QuadraticAlgebra,
    d: usize,
    dims: Vec<usize>,
    phi: HashMap<(usize, usize), Matrix>,
    theta: HashMap<(usize, usize), Matrix>,
}

impl FiberFunctor {
    /// Requires the AS conditions in degrees up to d+1.
    pub fn new(algebra: &QuadraticAlgebra, d: usize) -> Result<Self, Error> {
        let profile = algebra.as_regular_check(d, d + 1);
        if !profile.is_regular() {
            return Err(Error::NotCertified(format!(
                "{} is not AS-regular of dimension {d}",
                algebra.label()
            )));
        }
        let mut m = Self::positive(algebra, d)?;
        for a in 1..d {
            let w = algebra.pairing_matrix(d, d - a).ok_or(Error::Singular)?;
            let winv = w.inverse().ok_or(Error::Singular)?;
            // ε_a(α_q ⊗ ω^* ⊗ β_p) = (W^{-1})_{qp}, W the coefficients of ω in R_{d−a} ⊗ R_a.
            let (na, nb) = (m.dims[a], m.dims[d - a]);
            let mut eps = Matrix::zeros(1, na * nb);
            for q in 0..na {
                for p in 0..nb {
                    eps.set(0, q * nb + p, winv.get(q, p).clone());
                }
            }
            for b in d - a..d {
                let c = a + b - d;
                let mat = if c == 0 {
                    eps.clone()
                } else {
                    let split = m.phi[&(d - a, c)].pad_identity(na, 1);
                    &eps.pad_identity(1, m.dims[c]) * &split
                };
                m.theta.insert((a, b), mat);
            }
        }
        Ok(m)
    }

    /// M on positive words only: no AS requirement, no contractions.
    pub fn positive(algebra: &QuadraticAlgebra, d: usize) -> Result<Self, Error> {
        let dims: Vec<usize> = (0..=d).map(|n| algebra.r_n(n).dim()).collect();
        let mut phi = HashMap::new();
        for a in 1..d {
            for b in 1..=d - a {
                let ra = algebra.r_n(a);
                let rb = algebra.r_n(b);
                let rab = algebra.r_n(a + b);
                let prod = tensor(&ra, &rb);
                let mut mat = Matrix::zeros(ra.dim() * rb.dim(), rab.dim());
                for (j, v) in rab.basis_rows().iter().enumerate() {
                    let c = prod.coordinates(v).ok_or_else(|| {
                        Error::NotContained(format!("R_{} in R_{a} ⊗ R_{b}", a + b))
                    })?;
                    for (i, x) in c.into_iter().enumerate() {
                        mat.set(i, j, x);
                    }
                }
                phi.insert((a, b), mat);
            }
        }
        Ok(FiberFunctor {
            algebra: algebra.clone(),
            d,
            dims,
            phi,
            theta: HashMap::new(),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn algebra(&self) -> &QuadraticAlgebra {
        &self.algebra
    }

    fn has_duals(&self) -> bool {
        self.d == 1 || !self.theta.is_empty()
    }

    fn factor_dim(&self, t: Token) -> usize {
        match t {
            Token::Pos(a) => self.dims[a],
            Token::NegD => 1,
        }
    }

    fn check_word(&self, w: &Word) -> Result<(), Error> {
        if w.d() != self.d {
            return Err(Error::DimensionMismatch(self.d, w.d()));
        }
        if !self.has_duals() && w.tokens().contains(&Token::NegD) {
            return Err(Error::NotCertified(
                "contractions need an AS-regular algebra".into(),
            ));
        }
        Ok(())
    }

    pub fn dim(&self, w: &Word) -> usize {
        w.tokens().iter().map(|&t| self.factor_dim(t)).product()
    }

    pub fn eval_object(&self, w: &Word) -> Result<RepSpace, Error> {
        self.check_word(w)?;
        let factor_dims: Vec<usize> = w.tokens().iter().map(|&t| self.factor_dim(t)).collect();
        let total_dim = factor_dims.iter().product();
        Ok(RepSpace {
            word: w.clone(),
            factor_dims,
            total_dim,
        })
    }

    /// M(φ_{a,b}): R_{a+b} → R_a ⊗ R_b.
    pub fn phi_matrix(&self, a: usize, b: usize) -> &Matrix {
        &self.phi[&(a, b)]
    }

    /// M(θ_{a,b}): R_a ⊗ R_d^* ⊗ R_b → R_{a+b−d}.
    pub fn theta_matrix(&self, a: usize, b: usize) -> Result<&Matrix, Error> {
        self.theta
            .get(&(a, b))
            .ok_or_else(|| Error::NotCertified("contractions need an AS-regular algebra".into()))
    }

    pub fn up_matrix(&self, g: &ElementaryUp) -> Matrix {
        self.phi_matrix(g.a(), g.b())
            .pad_identity(self.dim(g.prefix()), self.dim(g.suffix()))
    }

    pub fn down_matrix(&self, g: &ElementaryDown) -> Result<Matrix, Error> {
        Ok(self
            .theta_matrix(g.a(), g.b())?
            .pad_identity(self.dim(g.prefix()), self.dim(g.suffix())))
    }

    pub fn generator_matrix(&self, g: &Generator) -> Result<Matrix, Error> {
        match g {
            Generator::Up(x) => Ok(self.up_matrix(x)),
            Generator::Down(x) => self.down_matrix(x),
        }
    }

    pub fn eval_phi(&self, g: &ElementaryUp) -> Result<LinMap, Error> {
        Ok(LinMap {
            domain: self.eval_object(&g.source())?,
            codomain: self.eval_object(&g.target())?,
            matrix: self.up_matrix(g),
        })
    }

    pub fn eval_theta(&self, g: &ElementaryDown) -> Result<LinMap, Error> {
        Ok(LinMap {
            domain: self.eval_object(&g.source())?,
            codomain: self.eval_object(&g.target())?,
            matrix: self.down_matrix(g)?,
        })
    }

    /// Product of generator matrices along a composable path.
    pub fn eval_path(&self, source: &Word, path: &[Generator]) -> Result<Matrix, Error> {
        self.check_word(source)?;
        let mut m = Matrix::identity(self.dim(source));
        let mut cur = source.clone();
        for g in path {
            if g.source() != cur {
                return Err(Error::EndpointMismatch(format!(
                    "{g} does not start at {}",
                    cur.display()
                )));
            }
            m = &self.generator_matrix(g)? * &m;
            cur = g.target();
        }
        Ok(m)
    }

    pub fn eval_morphism(&self, f: &Morphism) -> Result<LinMap, Error> {
        Ok(LinMap {
            domain: self.eval_object(f.source())?,
            codomain: self.eval_object(f.target())?,
            matrix: self.eval_path(f.source(), &f.generators())?,
        })
    }

    /// Images of M(g) for the splitting generators into λ.
    pub fn up_images(&self, lambda: &Word) -> Vec<Subspace> {
        up_generators_into(lambda)
            .iter()
            .map(|g| self.up_matrix(g).image())
            .collect()
    }

    /// ∇(λ) = M(λ) / Σ im M(φ); the projection uses the non-pivot
    /// coordinates of the RREF of the sum as basis of the quotient.
    pub fn nabla(&self, lambda: &Word) -> Result<(usize, LinMap), Error> {
        let space = self.eval_object(lambda)?;
        let n = space.total_dim;
        let images = self.up_images(lambda);
        let sub = if images.is_empty() {
            Subspace::zero(n)
        } else {
            sum(&images)?
        };
        let mut is_pivot = vec![false; n];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut proj = Matrix::zeros(free.len(), n);
        for (r, &c) in free.iter().enumerate() {
            proj.set(r, c, Rational::one());
            for (row, &p) in sub.basis_rows().iter().zip(sub.pivots()) {
                if !row[c].is_zero() {
                    proj.set(r, p, -row[c].clone());
                }
            }
        }
        let quotient = RepSpace {
            word: lambda.clone(),
            factor_dims: vec![free.len()],
            total_dim: free.len(),
        };
        Ok((
            free.len(),
            LinMap {
                domain: space,
                codomain: quotient,
                matrix: proj,
            },
        ))
    }

    /// Δ(λ) = ⋂ ker M(θ) over contraction generators out of λ, with the
    /// RREF kernel basis as columns of the inclusion.
    pub fn delta(&self, lambda: &Word) -> Result<(usize, LinMap), Error> {
        let space = self.eval_object(lambda)?;
        let n = space.total_dim;
        let gens = down_generators_outof(lambda);
        let sub = if gens.is_empty() {
            Subspace::full(n)
        } else {
            let mut kernels = Vec::new();
            for g in &gens {
                kernels.push(self.down_matrix(g)?.kernel());
            }
            intersect(&kernels)?
        };
        let incl = sub.basis().transpose();
        let k = sub.dim();
        let sub_space = RepSpace {
            word: lambda.clone(),
            factor_dims: vec![k],
            total_dim: k,
        };
        Ok((
            k,
            LinMap {
                domain: sub_space,
                codomain: space,
                matrix: incl,
            },
        ))
    }

    pub fn nabla_dim(&self, lambda: &Word) -> Result<usize, Error> {
        Ok(self.nabla(lambda)?.0)
    }

    pub fn delta_dim(&self, lambda: &Word) -> Result<usize, Error> {
        Ok(self.delta(lambda)?.0)
    }

    /// dim L(λ) = rank of Δ(λ) ↪ M(λ) ↠ ∇(λ).
    pub fn simple_dim(&self, lambda: &Word) -> Result<usize, Error> {
        let (_, p) = self.nabla(lambda)?;
        let (_, i) = self.delta(lambda)?;
        if p.matrix.rows() == 0 || i.matrix.cols() == 0 {
            return Ok(0);
        }
        Ok((&p.matrix * &i.matrix).rank())
    }

    /// Dimension of the commutant {(φ_u)_{u∈π} : φ_v M(g) = M(g) φ_u} over
    /// all generators g: u → v between members of π.
    pub fn end_algebra_dim(&self, pi: &SaturatedSet) -> Result<usize, Error> {
        let words: Vec<&Word> = pi.elements().collect();
        let mut offset = HashMap::new();
        let mut unknowns = 0;
        for w in &words {
            self.check_word(w)?;
            offset.insert((*w).clone(), unknowns);
            let n = self.dim(w);
            unknowns += n * n;
        }
        let mut gens: Vec<Generator> = Vec::new();
        for w in &words {
            for g in up_generators_into(w) {
                if pi.contains(&g.source()) {
                    gens.push(Generator::Up(g));
                }
            }
            for g in down_generators_outof(w) {
                if pi.contains(&g.target()) {
                    gens.push(Generator::Down(g));
                }
            }
        }
        let mut rows = Vec::new();
        for g in &gens {
            let m = self.generator_matrix(g)?;
            let (u, v) = (g.source(), g.target());
            let (du, dv) = (self.dim(&u), self.dim(&v));
            let (ou, ov) = (offset[&u], offset[&v]);
            for i in 0..dv {
                for j in 0..du {
                    let mut row = vec![Rational::zero(); unknowns];
                    // (φ_v M)_{ij} − (M φ_u)_{ij}
                    for k in 0..dv {
                        let x = m.get(k, j);
                        if !x.is_zero() {
                            row[ov + i * dv + k] += x;
                        }
                    }
                    for k in 0..du {
                        let x = m.get(i, k);
                        if !x.is_zero() {
                            row[ou + k * du + j] -= x;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(unknowns, rows).rank()
        };
        Ok(unknowns - rank)
    }

    /// Compares |U(μ,ν)| with the rank of the span of the evaluated morphisms.
    pub fn schur_weyl_check(&self, mu: &Word, nu: &Word) -> Result<SchurWeyl, Error> {
        let count = hom_count(mu, nu)? as usize;
        let maps = hom_enumerate(mu, nu)?;
        let (dm, dn) = (self.dim(mu), self.dim(nu));
        let mut rows = Vec::with_capacity(maps.len());
        for f in &maps {
            let m = self.eval_path(f.source(), &f.generators())?;
            let mut flat = Vec::with_capacity(dm * dn);
            for i in 0..dn {
                flat.extend_from_slice(m.row(i));
            }
            rows.push(flat);
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(dm * dn, rows).rank()
        };
        Ok(SchurWeyl {
            count,
            enumerated: maps.len(),
            rank,
        })
    }

    /// dim∇(u)·dim∇(v) = dim∇(u∧v) + dim∇(uv) and
    /// dimΔ(u)·dimΔ(v) = dimΔ(uv) + dimΔ(u∨v).
    pub fn tensor_sequence_check(&self, u: &Word, v: &Word) -> Result<bool, Error> {
        let uv = u.mul(v);
        let wedge = match u.wedge(v) {
            Some(w) => self.nabla_dim(&w)?,
            None => 0,
        };
        let vee = match u.vee(v) {
            Some(w) => self.delta_dim(&w)?,
            None => 0,
        };
        let nabla_ok = self.nabla_dim(u)? * self.nabla_dim(v)? == wedge + self.nabla_dim(&uv)?;
        let delta_ok = self.delta_dim(u)? * self.delta_dim(v)? == self.delta_dim(&uv)? + vee;
        Ok(nabla_ok && delta_ok)
    }

    /// Alternating sum of the intersections of the images of the splitting
    /// generators into λ.
    pub fn nabla_euler_sum(&self, lambda: &Word) -> Result<i64, Error> {
        let images = self.up_images(lambda);
        let n = self.dim(lambda);
        let mut total = 0i64;
        for mask in 0u32..(1 << images.len()) {
            let chosen: Vec<Subspace> = (0..images.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| images[i].clone())
                .collect();
            let dim = if chosen.is_empty() {
                n
            } else {
                intersect(&chosen)?.dim()
            };
            if mask.count_ones() % 2 == 0 {
                total += dim as i64;
            } else {
                total -= dim as i64;
            }
        }
        Ok(total)
    }

    pub fn euler_nabla_check(&self, lambda: &Word) -> Result<bool, Error> {
        Ok(self.nabla_euler_sum(lambda)? == self.nabla_dim(lambda)? as i64)
    }

    /// Whether the images of the splitting generators into λ generate a
    /// distributive lattice in M(λ).
    pub fn image_lattice_distributive(&self, lambda: &Word) -> Result<bool, Error> {
        let images = self.up_images(lambda);
        if images.is_empty() {
            return Ok(true);
        }
        is_distributive(&images)
    }

    /// Σ_μ |U↑(μ,λ)|·dim∇(μ), to compare with dim M(λ).
    pub fn nabla_filtration_dim(&self, lambda: &Word) -> Result<usize, Error> {
        let mut total = 0;
        for (mu, k) in nabla_multiplicities(lambda) {
            total += k as usize * self.nabla_dim(&mu)?;
        }
        Ok(total)
    }
}

/// Outcome of a Schur–Weyl comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurWeyl {
    pub count: usize,
    pub enumerated: usize,
    pub rank: usize,
}

impl SchurWeyl {
    pub fn ok(&self) -> bool {
        self.count == self.enumerated && self.count == self.rank
    }
}

/// {μ ↦ |U↑(μ,λ)|} over μ with a nonzero count.
pub fn nabla_multiplicities(lambda: &Word) -> BTreeMap<Word, u64> {
    up_sources(lambda)
        .into_iter()
        .map(|mu| {
            let n = count_up(&mu, lambda);
            (mu, n)
        })
        .filter(|(_, n)| *n > 0)
        .collect()
}
