//! Noncommutative polynomials in the entries z_ij of a d×d Manin matrix
//! and δ^{-1}, and the presentation of aut(k[x_1, …, x_d]) by Manin
//! relations, δδ^{-1} = 1 = δ^{-1}δ and the complementary-minor family.
//!
//! Determinants are column-ordered: |X_{I,J}| = Σ_π sgn(π) x_{I_π(1),J_1} ⋯ x_{I_π(k),J_k}.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use crate::Error;

/// z_ij (1-based) or δ^{-1}. Every z precedes δ^{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Z(usize, usize),
    DeltaInv,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Z(i, j) => write!(f, "z{i}{j}"),
            Letter::DeltaInv => f.write_str("dinv"),
        }
    }
}

impl Letter {
    pub fn parse(text: &str) -> Result<Letter, Error> {
        let bad = || Error::Format(format!("bad letter '{text}'"));
        if text == "dinv" {
            return Ok(Letter::DeltaInv);
        }
        let digits = text.strip_prefix('z').ok_or_else(bad)?;
        let b = digits.as_bytes();
        if b.len() != 2 || !b.iter().all(u8::is_ascii_digit) {
            return Err(bad());
        }
        let (i, j) = ((b[0] - b'0') as usize, (b[1] - b'0') as usize);
        if i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(Letter::Z(i, j))
    }
}

/// A word in the letters, ordered by degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<Letter>);

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

/// A rational combination of monomials with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialOrd for NCPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares term lists from the greatest monomial down.
impl Ord for NCPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.iter().rev().cmp(other.terms.iter().rev())
    }
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Rational::one(), vec![l])
    }

    pub fn z(i: usize, j: usize) -> Self {
        Self::letter(Letter::Z(i, j))
    }

    pub fn dinv() -> Self {
        Self::letter(Letter::DeltaInv)
    }

    pub fn term(c: Rational, letters: Vec<Letter>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial(letters), c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        let mut p = NCPoly::zero();
        for (m, x) in &self.terms {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = m1.0.clone();
                w.extend_from_slice(&m2.0);
                p.add_term(Monomial(w), c1 * c2);
            }
        }
        p
    }

    /// Scaled so the greatest monomial has coefficient 1.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&(Rational::one() / c)),
            None => NCPoly::zero(),
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flat_map(|m| m.0.iter().copied())
    }

    /// Value after substituting commuting scalars for the letters.
    pub fn evaluate(&self, value: &dyn Fn(Letter) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &l in &m.0 {
                t *= value(l);
            }
            total += t;
        }
        total
    }

    /// Machine form: `c m + c m + …` with monomials as `z11.z21` and `1`.
    pub fn to_machine(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let word = if m.0.is_empty() {
                    "1".to_string()
                } else {
                    m.0.iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                };
                format!("{} {}", format_rational(c), word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn from_machine(text: &str) -> Result<NCPoly, Error> {
        let text = text.trim();
        let mut p = NCPoly::zero();
        if text == "0" {
            return Ok(p);
        }
        for part in text.split(" + ") {
            let (c, word) = part
                .trim()
                .split_once(' ')
                .ok_or_else(|| Error::Format(format!("bad term '{part}'")))?;
            let c =
                parse_rational(c).ok_or_else(|| Error::Format(format!("bad coefficient '{c}'")))?;
            let letters = if word == "1" {
                Vec::new()
            } else {
                word.split('.')
                    .map(Letter::parse)
                    .collect::<Result<Vec<_>, _>>()?
            };
            p.add_term(Monomial(letters), c);
        }
        Ok(p)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

/// The three relations of every 2×2 submatrix (rows i<j, columns k<l):
/// with a = z_ik, b = z_il, c = z_jk, d = z_jl,
/// ac − ca, bd − db and ad − cb − da + bc.
pub fn manin_relations(d: usize) -> Vec<NCPoly> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            for k in 1..=d {
                for l in k + 1..=d {
                    let (a, b, c, e) = (
                        NCPoly::z(i, k),
                        NCPoly::z(i, l),
                        NCPoly::z(j, k),
                        NCPoly::z(j, l),
                    );
                    out.push(a.mul(&c).sub(&c.mul(&a)));
                    out.push(b.mul(&e).sub(&e.mul(&b)));
                    out.push(a.mul(&e).sub(&c.mul(&b)).sub(&e.mul(&a)).add(&b.mul(&c)));
                }
            }
        }
    }
    out
}

/// Permutations of 0..n with their signs, in lexicographic order.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut all = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut all);
    all.into_iter()
        .map(|p| {
            let even = sign_is_positive(&p);
            (p, even)
        })
        .collect()
}

/// Sign of a sequence of distinct integers, by counting inversions.
fn sign_is_positive(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// Column-ordered determinant of the submatrix on `rows` × `cols` (1-based).
pub fn manin_det(rows: &[usize], cols: &[usize]) -> Result<NCPoly, Error> {
    if rows.len() != cols.len() {
        return Err(Error::Format(
            "row and column index lists differ in length".into(),
        ));
    }
    let mut p = NCPoly::zero();
    for (pi, even) in permutations(rows.len()) {
        let letters = pi
            .iter()
            .zip(cols)
            .map(|(&r, &c)| Letter::Z(rows[r], c))
            .collect();
        let c = if even {
            Rational::one()
        } else {
            -Rational::one()
        };
        p.add_term(Monomial(letters), c);
    }
    Ok(p)
}

/// Strictly increasing sequences of length k from 1..=d.
fn increasing(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=d {
            cur.push(x);
            go(x + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, d, k, &mut Vec::new(), &mut out);
    out
}

/// The complementary-minor relation for block size b and σ given by its
/// two strictly increasing blocks:
/// Σ_τ sgn(τ) |X_{σ₁,τ₁}| δ^{-1} |X_{σ₂,τ₂}| − ε(σ).
pub fn complementary_minor_relation(d: usize, first: &[usize], second: &[usize]) -> NCPoly {
    let b = first.len();
    let mut lhs = NCPoly::zero();
    for t1 in increasing(d, b) {
        let t2: Vec<usize> = (1..=d).filter(|x| !t1.contains(x)).collect();
        let tau: Vec<usize> = t1.iter().chain(&t2).copied().collect();
        let m1 = manin_det(first, &t1).expect("equal lengths");
        let m2 = manin_det(second, &t2).expect("equal lengths");
        let mut term = m1.mul(&NCPoly::dinv()).mul(&m2);
        if !sign_is_positive(&tau) {
            term = term.scale(&-Rational::one());
        }
        lhs = lhs.add(&term);
    }
    let sigma: Vec<usize> = first.iter().chain(second).copied().collect();
    let mut sorted = sigma.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let eps = if sorted.len() == d {
        if sign_is_positive(&sigma) {
            Rational::one()
        } else {
            -Rational::one()
        }
    } else {
        Rational::zero()
    };
    lhs.sub(&NCPoly::constant(eps))
}

/// Generators, relations (each = 0), comultiplication and counit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub d: usize,
    pub generators: Vec<Letter>,
    pub relations: Vec<NCPoly>,
    pub comult: BTreeMap<Letter, Vec<(Letter, Letter)>>,
    pub counit: BTreeMap<Letter, Rational>,
}

/// The presentation of aut(k[x_1, …, x_d]).
pub fn uaut_presentation(d: usize) -> Presentation {
    let mut relations = manin_relations(d);
    let all: Vec<usize> = (1..=d).collect();
    let delta = manin_det(&all, &all).expect("square");
    relations.push(delta.mul(&NCPoly::dinv()).sub(&NCPoly::one()));
    relations.push(NCPoly::dinv().mul(&delta).sub(&NCPoly::one()));
    for b in 1..d {
        for first in all_maps_increasing(d, b) {
            for second in all_maps_increasing(d, d - b) {
                relations.push(complementary_minor_relation(d, &first, &second));
            }
        }
    }
    let mut relations: Vec<NCPoly> = relations
        .iter()
        .filter(|r| !r.is_zero())
        .map(NCPoly::monic)
        .collect();
    relations.sort();
    relations.dedup();

    let mut generators: Vec<Letter> = all
        .iter()
        .flat_map(|&i| all.iter().map(move |&j| Letter::Z(i, j)))
        .collect();
    generators.push(Letter::DeltaInv);
    let mut comult = BTreeMap::new();
    let mut counit = BTreeMap::new();
    for &i in &all {
        for &j in &all {
            comult.insert(
                Letter::Z(i, j),
                all.iter()
                    .map(|&p| (Letter::Z(i, p), Letter::Z(p, j)))
                    .collect(),
            );
            counit.insert(
                Letter::Z(i, j),
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                },
            );
        }
    }
    comult.insert(Letter::DeltaInv, vec![(Letter::DeltaInv, Letter::DeltaInv)]);
    counit.insert(Letter::DeltaInv, Rational::one());
    Presentation {
        d,
        generators,
        relations,
        comult,
        counit,
    }
}

/// Strictly increasing maps {1..k} → {1..d}.
fn all_maps_increasing(d: usize, k: usize) -> Vec<Vec<usize>> {
    increasing(d, k)
}

/// Result of substituting a commutative matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub relations: usize,
    pub nonzero: usize,
    pub max_abs: Rational,
}

/// Substitutes z_ij ↦ X0_ij and δ^{-1} ↦ 1/det X0 into every relation.
pub fn specialize_commutative(
    p: &Presentation,
    x0: &Matrix,
) -> Result<SpecializationReport, Error> {
    if x0.rows() != p.d || x0.cols() != p.d {
        return Err(Error::DimensionMismatch(p.d, x0.rows()));
    }
    let det = x0.determinant();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let inv = Rational::one() / det;
    let value = |l: Letter| match l {
        Letter::Z(i, j) => x0.get(i - 1, j - 1).clone(),
        Letter::DeltaInv => inv.clone(),
    };
    let mut nonzero = 0;
    let mut max_abs = Rational::zero();
    for r in &p.relations {
        let v = r.evaluate(&value).abs();
        if !v.is_zero() {
            nonzero += 1;
        }
        if v > max_abs {
            max_abs = v;
        }
    }
    Ok(SpecializationReport {
        relations: p.relations.len(),
        nonzero,
        max_abs,
    })
}

/// The counit applied to every relation; all values must vanish.
pub fn counit_check(p: &Presentation) -> bool {
    let value = |l: Letter| p.counit[&l].clone();
    p.relations.iter().all(|r| r.evaluate(&value).is_zero())
}

/// (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on generators, as formal sums of triples.
pub fn coassociativity_check(p: &Presentation) -> bool {
    p.generators.iter().all(|g| {
        let mut left: Vec<(Letter, Letter, Letter)> = Vec::new();
        let mut right = Vec::new();
        for &(x, y) in &p.comult[g] {
            for &(x1, x2) in &p.comult[&x] {
                left.push((x1, x2, y));
            }
            for &(y1, y2) in &p.comult[&y] {
                right.push((x, y1, y2));
            }
        }
        left.sort();
        right.sort();
        left == right
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Machine,
}

/// Deterministic serialization.
///
/// Machine grammar, one item per line:
/// `d <n>`, `gen <letter>`, `rel <poly>`, `comult <letter> <x.y> <x.y> …`,
/// `counit <letter> <rational>`; polynomials as in [`NCPoly::to_machine`].
pub fn emit(p: &Presentation, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Machine => {
            s.push_str(&format!("d {}\n", p.d));
            for g in &p.generators {
                s.push_str(&format!("gen {g}\n"));
            }
            for r in &p.relations {
                s.push_str(&format!("rel {}\n", r.to_machine()));
            }
            for (g, terms) in &p.comult {
                let t: Vec<String> = terms.iter().map(|(x, y)| format!("{x}.{y}")).collect();
                s.push_str(&format!("comult {g} {}\n", t.join(" ")));
            }
            for (g, c) in &p.counit {
                s.push_str(&format!("counit {g} {}\n", format_rational(c)));
            }
        }
        Format::Table => {
            let gens: Vec<String> = p.generators.iter().map(|g| g.to_string()).collect();
            s.push_str(&format!("generators: {}\n", gens.join(" ")));
            s.push_str(&format!("relations ({}):\n", p.relations.len()));
            for r in &p.relations {
                s.push_str(&format!("  {r} = 0\n"));
            }
            s.push_str("comultiplication:\n");
            for (g, terms) in &p.comult {
                let t: Vec<String> = terms.iter().map(|(x, y)| format!("{x} (x) {y}")).collect();
                s.push_str(&format!("  {g} -> {}\n", t.join(" + ")));
            }
            s.push_str("counit:\n");
            for (g, c) in &p.counit {
                s.push_str(&format!("  {g} -> {}\n", format_rational(c)));
            }
        }
    }
    s
}

/// Inverse of `emit(_, Format::Machine)`.
pub fn parse_machine(text: &str) -> Result<Presentation, Error> {
    let mut d = None;
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    let mut comult = BTreeMap::new();
    let mut counit = BTreeMap::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let (key, rest) = line
            .split_once(' ')
            .ok_or_else(|| Error::Format(format!("bad line '{line}'")))?;
        match key {
            "d" => {
                d = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::Format(format!("bad d '{rest}'")))?,
                )
            }
            "gen" => generators.push(Letter::parse(rest.trim())?),
            "rel" => relations.push(NCPoly::from_machine(rest)?),
            "comult" => {
                let mut parts = rest.split_whitespace();
                let g = Letter::parse(parts.next().unwrap_or(""))?;
                let terms = parts
                    .map(|t| {
                        let (x, y) = t
                            .split_once('.')
                            .ok_or_else(|| Error::Format(format!("bad pair '{t}'")))?;
                        Ok((Letter::parse(x)?, Letter::parse(y)?))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                comult.insert(g, terms);
            }
            "counit" => {
                let (g, c) = rest
                    .trim()
                    .split_once(' ')
                    .ok_or_else(|| Error::Format(format!("bad line '{line}'")))?;
                let c = parse_rational(c)
                    .ok_or_else(|| Error::Format(format!("bad rational '{c}'")))?;
                counit.insert(Letter::parse(g)?, c);
            }
            _ => return Err(Error::Format(format!("unknown key '{key}'"))),
        }
    }
    let d = d.ok_or_else(|| Error::Format("missing d".into()))?;
    let p = Presentation {
        d,
        generators,
        relations,
        comult,
        counit,
    };
    if let Some(l) = p
        .relations
        .iter()
        .flat_map(|r| r.letters())
        .find(|l| !p.generators.contains(l))
    {
        return Err(Error::Format(format!(
            "relation uses undeclared generator {l}"
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn relation_counts() {
        assert_eq!(manin_relations(2).len(), 3);
        assert_eq!(manin_relations(3).len(), 27);
        assert_eq!(uaut_presentation(2).relations.len(), 9);
        // 27 Manin relations of which 9 are repeated column commutations.
        assert_eq!(uaut_presentation(3).relations.len(), 38);
    }

    #[test]
    fn small_determinants() {
        assert_eq!(manin_det(&[2], &[3]).unwrap(), NCPoly::z(2, 3));
        let det = manin_det(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(
            det,
            NCPoly::z(1, 1)
                .mul(&NCPoly::z(2, 2))
                .sub(&NCPoly::z(2, 1).mul(&NCPoly::z(1, 2)))
        );
    }

    #[test]
    fn non_bijective_sigma_has_zero_constant() {
        let r = complementary_minor_relation(2, &[1], &[1]);
        assert!(r.terms().all(|(m, _)| !m.0.is_empty()));
    }

    #[test]
    fn identity_specialization() {
        for d in 2..=3 {
            let p = uaut_presentation(d);
            let rep = specialize_commutative(&p, &Matrix::identity(d)).unwrap();
            assert_eq!(rep.nonzero, 0);
            assert!(counit_check(&p));
            assert!(coassociativity_check(&p));
        }
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(specialize_commutative(&uaut_presentation(2), &singular).is_err());
    }

    #[test]
    fn machine_round_trip() {
        let p = uaut_presentation(3);
        let text = emit(&p, Format::Machine);
        assert_eq!(parse_machine(&text).unwrap(), p);
        let q = NCPoly::from_machine("1/2 z11.dinv.z22 + -3 1").unwrap();
        assert_eq!(NCPoly::from_machine(&q.to_machine()).unwrap(), q);
        assert_eq!(q.to_string(), "1/2*z11*dinv*z22 - 3");
        assert_eq!(rat(0), NCPoly::zero().evaluate(&|_| rat(1)));
    }
}
