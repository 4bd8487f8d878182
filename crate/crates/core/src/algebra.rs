//! Quadratic algebras `A = TV/(R)`: the spaces R_n, Hilbert dimensions,
//! Koszulity via distributivity, and AS-regularity via the pairings
//! R_a ⊗ R_{d−a} ← R_d.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{
    format_rational, intersect, is_distributive, parse_rational, rat, sum, tensor, Matrix,
    Rational, Subspace,
};
use crate::Error;

/// `TV/(R)` with `R ⊆ V ⊗ V`. Degree-n data is cached.
pub struct QuadraticAlgebra {
    label: String,
    dim_v: usize,
    relations: Subspace,
    /// The relation vectors as given, kept for exact serialization.
    given: Vec<Vec<Rational>>,
    cache: Mutex<HashMap<usize, Subspace>>,
}

impl Clone for QuadraticAlgebra {
    fn clone(&self) -> Self {
        QuadraticAlgebra {
            label: self.label.clone(),
            dim_v: self.dim_v,
            relations: self.relations.clone(),
            given: self.given.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for QuadraticAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadraticAlgebra")
            .field("label", &self.label)
            .field("dim_v", &self.dim_v)
            .field("relations", &self.given)
            .finish()
    }
}

impl PartialEq for QuadraticAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.dim_v == other.dim_v && self.given == other.given
    }
}

/// Result of the AS-regularity battery for a presumed global dimension d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASProfile {
    pub d: usize,
    /// dim R_0, …, dim R_N.
    pub dims_r: Vec<usize>,
    /// Degree up to which distributivity was verified (0 if not run).
    pub koszul_checked_to: usize,
    /// Highest degree inspected for vanishing of R_n.
    pub checked_to: usize,
    /// Invertibility of the pairing R_a ⊗ R_{d−a} ← R_d for a = 1 … d−1.
    pub pairing_ok: Vec<bool>,
}

impl ASProfile {
    pub fn top_is_line(&self) -> bool {
        self.dims_r.get(self.d) == Some(&1)
    }

    pub fn vanishes_above(&self) -> bool {
        self.dims_r.iter().skip(self.d + 1).all(|&x| x == 0)
    }

    pub fn is_regular(&self) -> bool {
        self.top_is_line() && self.vanishes_above() && self.pairing_ok.iter().all(|&b| b)
    }

    pub fn is_certified(&self) -> bool {
        self.is_regular() && self.koszul_checked_to >= self.checked_to
    }
}

impl QuadraticAlgebra {
    pub fn new(label: &str, dim_v: usize, relations: Vec<Vec<Rational>>) -> Result<Self, Error> {
        if dim_v == 0 {
            return Err(Error::Format("dimV must be positive".into()));
        }
        let n = dim_v * dim_v;
        if let Some(r) = relations.iter().find(|r| r.len() != n) {
            return Err(Error::Format(format!(
                "relation has {} entries, expected {n}",
                r.len()
            )));
        }
        Ok(QuadraticAlgebra {
            label: label.to_string(),
            dim_v,
            relations: Subspace::from_rows(n, relations.clone()),
            given: relations,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// dim V^{⊗n}.
    pub fn tensor_dim(&self, n: usize) -> usize {
        self.dim_v.pow(n as u32)
    }

    /// V^{⊗i} ⊗ R ⊗ V^{⊗j}.
    pub fn r_ij(&self, i: usize, j: usize) -> Subspace {
        let left = Subspace::full(self.tensor_dim(i));
        let right = Subspace::full(self.tensor_dim(j));
        tensor(&left, &tensor(&self.relations, &right))
    }

    /// The copies V^{⊗i} ⊗ R ⊗ V^{⊗j} with i+j+2 = n.
    pub fn relation_copies(&self, n: usize) -> Vec<Subspace> {
        (0..=n.saturating_sub(2))
            .map(|i| self.r_ij(i, n - 2 - i))
            .collect()
    }

    /// R_n = ⋂_{i+j+2=n} V^{⊗i} ⊗ R ⊗ V^{⊗j}, with R_0 = k and R_1 = V.
    pub fn r_n(&self, n: usize) -> Subspace {
        if n <= 1 {
            return Subspace::full(self.tensor_dim(n));
        }
        if let Some(s) = self.cache.lock().unwrap().get(&n) {
            return s.clone();
        }
        let s = if n == 2 {
            self.relations.clone()
        } else {
            // R_n = (R_{n−1} ⊗ V) ∩ (V^{⊗(n−2)} ⊗ R).
            let prev = tensor(&self.r_n(n - 1), &Subspace::full(self.dim_v));
            if prev.dim() == 0 {
                prev
            } else {
                intersect(&[prev, self.r_ij(n - 2, 0)]).expect("same ambient")
            }
        };
        self.cache.lock().unwrap().insert(n, s.clone());
        s
    }

    /// dim A_n = dim V^{⊗n} − dim Σ_{i+j+2=n} V^{⊗i} ⊗ R ⊗ V^{⊗j}.
    pub fn hilbert_dim(&self, n: usize) -> usize {
        if n < 2 {
            return self.tensor_dim(n);
        }
        let ideal = sum(&self.relation_copies(n)).expect("same ambient");
        self.tensor_dim(n) - ideal.dim()
    }

    /// Σ_k (−1)^k dim R_k · dim A_{m−k}, which is δ_{m,0} when A is Koszul.
    pub fn koszul_euler(&self, m: usize) -> i64 {
        (0..=m)
            .map(|k| {
                let t = (self.r_n(k).dim() * self.hilbert_dim(m - k)) as i64;
                if k % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    /// Distributivity of the relation copies in every degree 3 ≤ n ≤ N.
    pub fn koszul_check(&self, max_degree: usize) -> bool {
        self.koszul_degree(max_degree) >= max_degree
    }

    /// Largest n ≤ N such that every degree up to n is distributive.
    pub fn koszul_degree(&self, max_degree: usize) -> usize {
        let mut ok = max_degree.min(2);
        for n in 3..=max_degree {
            if !is_distributive(&self.relation_copies(n)).expect("same ambient") {
                break;
            }
            ok = n;
        }
        ok
    }

    /// Matrix of coefficients W with ω = Σ W_{pq} α_p ⊗ β_q, where ω is the
    /// RREF basis vector of R_d and α, β are the RREF bases of R_a, R_{d−a}.
    /// `None` unless R_d is a line.
    pub fn pairing_matrix(&self, d: usize, a: usize) -> Option<Matrix> {
        let top = self.r_n(d);
        if top.dim() != 1 || a == 0 || a >= d {
            return None;
        }
        let ra = self.r_n(a);
        let rb = self.r_n(d - a);
        let coords = tensor(&ra, &rb).coordinates(&top.basis_rows()[0])?;
        let mut w = Matrix::zeros(ra.dim(), rb.dim());
        for p in 0..ra.dim() {
            for q in 0..rb.dim() {
                w.set(p, q, coords[p * rb.dim() + q].clone());
            }
        }
        Some(w)
    }

    /// Dimensions, vanishing and pairing checks; Koszulity is not run.
    pub fn as_regular_check(&self, d: usize, max_degree: usize) -> ASProfile {
        let top = max_degree.max(d);
        let dims_r = (0..=top).map(|n| self.r_n(n).dim()).collect();
        let pairing_ok = (1..d)
            .map(|a| {
                self.pairing_matrix(d, a)
                    .and_then(|w| w.inverse())
                    .is_some()
            })
            .collect();
        ASProfile {
            d,
            dims_r,
            koszul_checked_to: 0,
            checked_to: top,
            pairing_ok,
        }
    }

    /// The full battery: AS checks plus distributivity up to degree N.
    pub fn certify(&self, d: usize, max_degree: usize) -> ASProfile {
        let mut p = self.as_regular_check(d, max_degree);
        p.koszul_checked_to = self.koszul_degree(p.checked_to);
        p
    }

    /// Smallest d ≤ `limit` with dim R_d = 1 and R_{d+1} = 0.
    pub fn infer_d(&self, limit: usize) -> Option<usize> {
        (1..=limit).find(|&n| self.r_n(n).dim() == 1 && self.r_n(n + 1).dim() == 0)
    }

    /// Serializes to the TOML algebra format.
    pub fn to_toml(&self) -> String {
        let file = AlgebraFile {
            label: self.label.clone(),
            dim_v: self.dim_v,
            relations: self
                .given
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        };
        toml::to_string(&file).expect("serializable")
    }

    pub fn from_toml(text: &str) -> Result<Self, Error> {
        let file: AlgebraFile = toml::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let rows = file
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        parse_rational(x)
                            .ok_or_else(|| Error::Format(format!("bad rational '{x}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        QuadraticAlgebra::new(&file.label, file.dim_v, rows)
    }
}

/// On-disk layout:
///
/// ```toml
/// label = "k[x,y]"
/// dimV = 2
/// relations = [["0", "1", "-1", "0"]]
/// ```
///
/// Each relation lists the dimV² coefficients of e_i ⊗ e_j at index
/// i·dimV + j, as integers or fractions `p/q`.
#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    label: String,
    #[serde(rename = "dimV")]
    dim_v: usize,
    relations: Vec<Vec<String>>,
}

fn unit_relation(n: usize, terms: &[(usize, usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n * n];
    for (i, j, c) in terms {
        v[i * n + j] += c;
    }
    v
}

/// k[x_1, …, x_d].
pub fn polynomial(d: usize) -> QuadraticAlgebra {
    let rows = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .map(|(i, j)| unit_relation(d, &[(i, j, rat(1)), (j, i, rat(-1))]))
        .collect();
    QuadraticAlgebra::new(&format!("polynomial({d})"), d, rows).expect("well formed")
}

/// k⟨x, y⟩/(xy − q·yx).
pub fn quantum_plane(q: &Rational) -> Result<QuadraticAlgebra, Error> {
    if q.is_zero() {
        return Err(Error::DegenerateParameters("q must be nonzero".into()));
    }
    let row = unit_relation(2, &[(0, 1, rat(1)), (1, 0, -q.clone())]);
    QuadraticAlgebra::new(
        &format!("quantum_plane({})", format_rational(q)),
        2,
        vec![row],
    )
}

/// x_i x_j − q_ij x_j x_i for i < j; `q` lists q_12, q_13, …, q_{d−1,d}.
pub fn multiparam_quantum(d: usize, q: &[Rational]) -> Result<QuadraticAlgebra, Error> {
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    if q.len() != pairs.len() {
        return Err(Error::DegenerateParameters(format!(
            "expected {} parameters, got {}",
            pairs.len(),
            q.len()
        )));
    }
    if q.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateParameters(
            "parameters must be nonzero".into(),
        ));
    }
    let rows = pairs
        .iter()
        .zip(q)
        .map(|(&(i, j), c)| unit_relation(d, &[(i, j, rat(1)), (j, i, -c.clone())]))
        .collect();
    let label = format!(
        "multiparam_quantum({d};{})",
        q.iter().map(format_rational).collect::<Vec<_>>().join(",")
    );
    QuadraticAlgebra::new(&label, d, rows)
}

/// k⟨x, y⟩/(xy − yx − y²).
pub fn jordan_plane() -> QuadraticAlgebra {
    let row = unit_relation(2, &[(0, 1, rat(1)), (1, 0, rat(-1)), (1, 1, rat(-1))]);
    QuadraticAlgebra::new("jordan_plane", 2, vec![row]).expect("well formed")
}

/// Three-dimensional Sklyanin algebra: a·x_i x_{i+1} + b·x_{i+1} x_i + c·x_{i+2}² (indices mod 3).
pub fn sklyanin3(a: &Rational, b: &Rational, c: &Rational) -> Result<QuadraticAlgebra, Error> {
    let zeros = [a, b, c].iter().filter(|x| x.is_zero()).count();
    let cube = |x: &Rational| x * x * x;
    if zeros >= 2 || (cube(a) == cube(b) && cube(b) == cube(c)) {
        return Err(Error::DegenerateParameters(
            "Sklyanin parameters in the degenerate locus".into(),
        ));
    }
    let rows = (0..3)
        .map(|i| {
            unit_relation(
                3,
                &[
                    (i, (i + 1) % 3, a.clone()),
                    ((i + 1) % 3, i, b.clone()),
                    ((i + 2) % 3, (i + 2) % 3, c.clone()),
                ],
            )
        })
        .collect();
    let label = format!(
        "sklyanin3({},{},{})",
        format_rational(a),
        format_rational(b),
        format_rational(c)
    );
    QuadraticAlgebra::new(&label, 3, rows)
}

/// Parses `name` or `name(params)`: `polynomial(3)`, `quantum_plane(2)`,
/// `multiparam_quantum(3;2,3,5)`, `jordan_plane`, `sklyanin3(1,2,3)`.
pub fn builtin(text: &str) -> Result<QuadraticAlgebra, Error> {
    let text = text.trim();
    let (name, args) = match text.split_once('(') {
        Some((n, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownBuiltin(text.to_string()))?;
            (n.trim(), inner)
        }
        None => (text, ""),
    };
    let rationals = |s: &str| -> Result<Vec<Rational>, Error> {
        s.split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| parse_rational(x).ok_or_else(|| Error::Format(format!("bad parameter '{x}'"))))
            .collect()
    };
    let int = |s: &str| -> Result<usize, Error> {
        s.trim()
            .parse()
            .map_err(|_| Error::Format(format!("bad integer '{s}'")))
    };
    match name {
        "polynomial" => {
            let d = int(args)?;
            if d == 0 {
                return Err(Error::DegenerateParameters(
                    "need at least one variable".into(),
                ));
            }
            Ok(polynomial(d))
        }
        "quantum_plane" => match rationals(args)?.as_slice() {
            [q] => quantum_plane(q),
            _ => Err(Error::Format("quantum_plane takes one parameter".into())),
        },
        "multiparam_quantum" => {
            let (d, qs) = args
                .split_once(';')
                .ok_or_else(|| Error::Format("expected d;q_12,...".into()))?;
            multiparam_quantum(int(d)?, &rationals(qs)?)
        }
        "jordan_plane" if args.trim().is_empty() => Ok(jordan_plane()),
        "sklyanin3" => match rationals(args)?.as_slice() {
            [a, b, c] => sklyanin3(a, b, c),
            _ => Err(Error::Format("sklyanin3 takes three parameters".into())),
        },
        _ => Err(Error::UnknownBuiltin(text.to_string())),
    }
}

/// The generic Sklyanin triple used by the test battery.
pub fn sklyanin_generic() -> QuadraticAlgebra {
    sklyanin3(&rat(1), &rat(2), &rat(3)).expect("nondegenerate")
}

/// k[x]/(x²): Koszul but not AS-regular.
pub fn dual_numbers() -> QuadraticAlgebra {
    QuadraticAlgebra::new("dual_numbers", 1, vec![vec![rat(1)]]).expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn relation_dimensions() {
        let p2 = polynomial(2);
        assert_eq!((p2.r_n(2).dim(), p2.r_n(3).dim()), (1, 0));
        let p3 = polynomial(3);
        assert_eq!(
            (p3.r_n(2).dim(), p3.r_n(3).dim(), p3.r_n(4).dim()),
            (3, 1, 0)
        );
        let q = quantum_plane(&rat(2)).unwrap();
        assert_eq!((q.r_n(2).dim(), q.r_n(3).dim()), (1, 0));
    }

    #[test]
    fn hilbert_dims_match_symmetric_powers() {
        let p = polynomial(3);
        for n in 0..=5 {
            // dim S^n(k^3) = C(n+2, 2)
            assert_eq!(p.hilbert_dim(n), (n + 2) * (n + 1) / 2);
        }
        let q = quantum_plane(&rat(2)).unwrap();
        assert_eq!(
            (0..=4).map(|n| q.hilbert_dim(n)).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn koszul_and_regular() {
        let p = polynomial(2);
        assert!(p.koszul_check(5));
        assert!(p.certify(2, 4).is_certified());
        let dn = dual_numbers();
        assert!(dn.koszul_check(4));
        assert!(!dn.as_regular_check(2, 4).is_regular());
        assert!(jordan_plane().as_regular_check(2, 4).is_regular());
    }

    #[test]
    fn random_relations_fail_koszul() {
        // Two generic relations in two variables.
        let a = QuadraticAlgebra::new(
            "generic",
            2,
            vec![
                vec![rat(1), rat(2), rat(3), rat(5)],
                vec![rat(7), rat(-1), rat(4), rat(2)],
            ],
        )
        .unwrap();
        assert!(!a.koszul_check(4));
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(
            builtin("quantum_plane(1)").unwrap().relations(),
            polynomial(2).relations()
        );
        assert!(builtin("quantum_plane(0)").is_err());
        assert!(builtin("nonsense").is_err());
        assert!(builtin("sklyanin3(1,1,1)").is_err());
        assert!(builtin("sklyanin3(0,0,1)").is_err());
        assert_eq!(
            builtin("multiparam_quantum(3;2,3,1/5)")
                .unwrap()
                .relations()
                .dim(),
            3
        );
        assert_eq!(builtin("polynomial(3)").unwrap().infer_d(5), Some(3));
    }

    #[test]
    fn toml_round_trip() {
        let a = multiparam_quantum(3, &[rat(2), frac(-3, 7), rat(5)]).unwrap();
        let text = a.to_toml();
        let b = QuadraticAlgebra::from_toml(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_toml(), text);
        assert!(
            QuadraticAlgebra::from_toml("label = \"x\"\ndimV = 2\nrelations = [[\"1\"]]\n")
                .is_err()
        );
    }
}
