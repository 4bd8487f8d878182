use proptest::prelude::*;

use uaut::linalg::{
    annihilator, complex_homology, intersect, is_distributive, rat, sum, Matrix, Subspace,
};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
        let mut m = Matrix::zeros(rows, cols);
        for (k, x) in xs.into_iter().enumerate() {
            m.set(k / cols, k % cols, rat(x));
        }
        m
    })
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
    (0..=ambient)
        .prop_flat_map(move |k| matrix(k, ambient))
        .prop_map(move |m| Subspace::from_rows(ambient, m.row_vecs()))
}

/// For three subspaces the generated lattice is distributive iff
/// A ∩ (B + C) = A ∩ B + A ∩ C.
fn triple_distributive(a: &Subspace, b: &Subspace, c: &Subspace) -> bool {
    let lhs = intersect(&[a.clone(), sum(&[b.clone(), c.clone()]).unwrap()]).unwrap();
    let ab = intersect(&[a.clone(), b.clone()]).unwrap();
    let ac = intersect(&[a.clone(), c.clone()]).unwrap();
    lhs == sum(&[ab, ac]).unwrap()
}

proptest! {
    #[test]
    fn rank_nullity(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_rows() {
            prop_assert!(m.apply(v).iter().all(|x| *x == rat(0)));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn double_annihilator(w in subspace(4)) {
        let ann = annihilator(&w);
        prop_assert_eq!(ann.dim() + w.dim(), 4);
        prop_assert_eq!(annihilator(&ann), w);
    }

    #[test]
    fn sum_intersection_dimensions(a in subspace(4), b in subspace(4)) {
        let s = sum(&[a.clone(), b.clone()]).unwrap();
        let i = intersect(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a) && a.is_subspace_of(&s));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!((&a * &b).determinant(), a.determinant() * b.determinant());
        match a.inverse() {
            Some(inv) => prop_assert_eq!(&inv * &a, Matrix::identity(3)),
            None => prop_assert_eq!(a.determinant(), rat(0)),
        }
    }

    #[test]
    fn kronecker_mixed_product(a in matrix(2, 2), b in matrix(2, 3), c in matrix(2, 2), e in matrix(3, 2)) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&e), (&a * &c).kron(&(&b * &e)));
    }

    #[test]
    fn triples_match_modular_criterion(a in subspace(3), b in subspace(3), c in subspace(3)) {
        let spaces = [a.clone(), b.clone(), c.clone()];
        prop_assert_eq!(is_distributive(&spaces).unwrap(), triple_distributive(&a, &b, &c));
    }
}

#[test]
fn three_lines_in_a_plane() {
    let line = |x: i64, y: i64| Subspace::from_rows(2, vec![vec![rat(x), rat(y)]]);
    let lines = [line(1, 0), line(0, 1), line(1, 1)];
    assert!(!is_distributive(&lines).unwrap());
    assert!(complex_homology(&lines).unwrap().iter().any(|&h| h > 0));
    assert!(is_distributive(&lines[..2]).unwrap());
}

#[test]
fn coordinate_subspaces_are_distributive() {
    let span = |idx: &[usize]| {
        Subspace::from_rows(
            4,
            idx.iter()
                .map(|&i| (0..4).map(|j| rat(i64::from(i == j))).collect())
                .collect(),
        )
    };
    let spaces = [
        span(&[0, 1]),
        span(&[1, 2]),
        span(&[2, 3]),
        span(&[0, 3]),
        span(&[1]),
    ];
    assert!(is_distributive(&spaces).unwrap());
    assert!(complex_homology(&spaces).unwrap().iter().all(|&h| h == 0));
}

#[test]
fn mismatched_ambients_are_rejected() {
    assert!(is_distributive(&[]).is_err());
    assert!(intersect(&[Subspace::zero(2), Subspace::zero(3)]).is_err());
}

#[test]
fn text_round_trip() {
    let m = Matrix::from_i64(&[&[1, -2, 0], &[3, 4, 5]]);
    assert_eq!(Matrix::from_text(&m.to_text()).unwrap(), m);
}
