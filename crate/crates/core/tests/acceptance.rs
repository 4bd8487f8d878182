//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uaut::algebra::{
    dual_numbers, jordan_plane, multiparam_quantum, polynomial, quantum_plane, sklyanin3,
    QuadraticAlgebra,
};
use uaut::fiber::FiberFunctor;
use uaut::linalg::{frac, is_distributive, rat, Matrix, Rational, Subspace};
use uaut::presentation::{
    emit, manin_det, specialize_commutative, uaut_presentation, Format, Letter, NCPoly,
};
use uaut::ucat::{
    confluence_check, count_down, count_up, hom_count, hom_enumerate, relation_instances,
    snake_instances, HomCounter, Orientation, RelationInstance, RelationKind,
};
use uaut::words::{all_words, is_antichain, parse_word, SaturatedSet, Word};

const SEED: u64 = 20240611;

type Verdict = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn qp2() -> QuadraticAlgebra {
    quantum_plane(&rat(2)).unwrap()
}

fn qp3() -> QuadraticAlgebra {
    multiparam_quantum(3, &[rat(2), rat(3), rat(5)]).unwrap()
}

fn sklyanin() -> QuadraticAlgebra {
    sklyanin3(&rat(1), &rat(2), &rat(3)).unwrap()
}

fn w(s: &str, d: usize) -> Word {
    parse_word(s, d).unwrap()
}

fn c1_confluence() -> Verdict {
    let mut notes = Vec::new();
    for d in [2, 3] {
        let r = confluence_check(d, 2, Orientation::Standard);
        ensure(r.overlaps > 0, || format!("d={d}: no overlaps examined"))?;
        ensure(r.is_convergent(), || format!("d={d}: {r:?}"))?;
        notes.push(format!("d={d}: {} overlaps", r.overlaps));
    }
    Ok(notes.join(", "))
}

fn c2_normal_forms() -> Verdict {
    let d = 2;
    let words = all_words(d, 3);
    let mut counter = HomCounter::new();
    let (mut pairs, mut maps) = (0, 0);
    for mu in &words {
        for nu in &words {
            let n = counter.hom_count(mu, nu);
            maps += n;
            let listed = hom_enumerate(mu, nu).map_err(err)?;
            let distinct: BTreeSet<_> = listed.iter().collect();
            // Down parts never lengthen a word, so every middle object is short.
            let factored: u64 = words
                .iter()
                .map(|l| count_down(mu, l) * count_up(l, nu))
                .sum();
            let dual = counter.hom_count(&nu.dual_right(), &mu.dual_right());
            ensure(
                listed.len() as u64 == n
                    && distinct.len() == listed.len()
                    && factored == n
                    && dual == n,
                || {
                    format!(
                        "{} -> {}: count {n}, listed {}, factored {factored}, dual {dual}",
                        mu,
                        nu,
                        listed.len()
                    )
                },
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {maps} morphisms"))
}

fn c3_two_morphisms() -> Verdict {
    let d = 2;
    let (mu, lambda) = (w("r1*r1", d), w("r1*r1*r2^-1*r1*r1", d));
    let n = hom_count(&mu, &lambda).map_err(err)?;
    let listed = hom_enumerate(&mu, &lambda).map_err(err)?.len();
    ensure(n == 2 && listed == 2, || {
        format!("count {n}, listed {listed}")
    })?;
    Ok("2 morphisms".into())
}

fn c4_koszul_battery() -> Verdict {
    let cases: Vec<(QuadraticAlgebra, usize)> = vec![
        (polynomial(2), 2),
        (polynomial(3), 3),
        (polynomial(4), 4),
        (qp2(), 2),
        (jordan_plane(), 2),
        (sklyanin(), 3),
    ];
    for (alg, d) in &cases {
        let n = d + 2;
        ensure(alg.koszul_check(n), || {
            format!("{} not Koszul through {n}", alg.label())
        })?;
        let p = alg.as_regular_check(*d, n);
        ensure(p.is_regular(), || {
            format!("{} AS profile {p:?}", alg.label())
        })?;
        if alg.label().starts_with("polynomial") {
            for k in 0..=n {
                ensure(
                    alg.hilbert_dim(k) == binom(k + d - 1, d - 1)
                        && alg.r_n(k).dim() == binom(*d, k),
                    || format!("{} degree {k}", alg.label()),
                )?;
            }
        }
    }
    let dual = dual_numbers();
    ensure(dual.koszul_check(4), || "k[x]/(x^2) not Koszul".into())?;
    for d in 1..=3 {
        ensure(!dual.as_regular_check(d, 4).is_regular(), || {
            format!("k[x]/(x^2) passes AS at d={d}")
        })?;
    }
    let m = FiberFunctor::positive(&dual, 2).map_err(err)?;
    let nabla = m.nabla_dim(&w("r1*r1", 2)).map_err(err)?;
    ensure(nabla == 0, || {
        format!("nabla(r1 r1) = {nabla} for k[x]/(x^2)")
    })?;
    Ok(format!(
        "{} AS-regular algebras, k[x]/(x^2) Koszul but not AS",
        cases.len()
    ))
}

fn c5_euler() -> Verdict {
    let cases: Vec<(QuadraticAlgebra, usize)> = vec![
        (polynomial(2), 2),
        (polynomial(3), 3),
        (polynomial(4), 4),
        (qp2(), 2),
        (jordan_plane(), 2),
        (sklyanin(), 3),
    ];
    for (alg, d) in &cases {
        for m in 0..=d + 2 {
            let mut total = 0i64;
            for k in 0..=m {
                let t = (alg.r_n(k).dim() * alg.hilbert_dim(m - k)) as i64;
                total += if k % 2 == 0 { t } else { -t };
            }
            ensure(total == i64::from(m == 0), || {
                format!("{} degree {m}: {total}", alg.label())
            })?;
        }
    }
    Ok(format!("{} algebras", cases.len()))
}

fn functor_cases() -> Vec<(QuadraticAlgebra, usize)> {
    vec![
        (polynomial(2), 2),
        (qp2(), 2),
        (polynomial(3), 3),
        (qp3(), 3),
    ]
}

fn holds(m: &FiberFunctor, r: &RelationInstance) -> Result<bool, String> {
    Ok(m.eval_path(&r.source, &r.lhs).map_err(err)?
        == m.eval_path(&r.source, &r.rhs).map_err(err)?)
}

fn c6_snakes() -> Verdict {
    let mut n = 0;
    for (alg, d) in functor_cases() {
        let m = FiberFunctor::new(&alg, d).map_err(err)?;
        for r in snake_instances(d) {
            let lhs = m.eval_path(&r.source, &r.lhs).map_err(err)?;
            ensure(lhs == Matrix::identity(m.dim(&r.source)), || {
                format!("{} snake at {}", alg.label(), r.source)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} snake identities"))
}

fn c7_relations() -> Verdict {
    let mut n = 0;
    for (alg, d) in functor_cases() {
        let m = FiberFunctor::new(&alg, d).map_err(err)?;
        let mut kinds = BTreeSet::new();
        for r in relation_instances(d, 1) {
            ensure(holds(&m, &r)?, || {
                format!("{} {:?} at {}", alg.label(), r.kind, r.source)
            })?;
            kinds.insert(format!("{:?}", r.kind));
            n += 1;
        }
        let expected = if d >= 3 { 5 } else { 3 };
        ensure(kinds.len() >= expected, || {
            format!("{} only {kinds:?}", alg.label())
        })?;
        ensure(
            !kinds.contains(&format!("{:?}", RelationKind::Snake)),
            || "snakes mixed in".into(),
        )?;
    }
    Ok(format!("{n} instances"))
}

fn dim_m(alg_dims: &[usize], lambda: &Word) -> usize {
    lambda
        .tokens()
        .iter()
        .map(|t| match t {
            uaut::words::Token::Pos(a) => alg_dims[*a],
            uaut::words::Token::NegD => 1,
        })
        .product()
}

fn c8_costandard_arithmetic() -> Verdict {
    let d = 2;
    let m = FiberFunctor::new(&polynomial(2), d).map_err(err)?;
    for n in 0..=4 {
        let word = Word::new(d, vec![uaut::words::Token::Pos(1); n]).map_err(err)?;
        let got = m.nabla_dim(&word).map_err(err)?;
        ensure(got == n + 1, || format!("dim nabla(r1^{n}) = {got}"))?;
    }
    let short = all_words(d, 2);
    for u in &short {
        for v in &short {
            ensure(m.tensor_sequence_check(u, v).map_err(err)?, || {
                format!("tensor sequence {u} {v}")
            })?;
        }
    }
    let words = all_words(d, 3);
    let dims_r = [1, 2, 1];
    for lambda in &words {
        ensure(m.euler_nabla_check(lambda).map_err(err)?, || {
            format!("Euler sum at {lambda}")
        })?;
        let mut total = 0;
        for mu in &words {
            let k = count_up(mu, lambda) as usize;
            if k > 0 {
                total += k * m.nabla_dim(mu).map_err(err)?;
            }
        }
        let expect = dim_m(&dims_r, lambda);
        ensure(total == expect, || {
            format!("filtration at {}: {total} vs {expect}", lambda.display())
        })?;
    }
    Ok(format!("{} words", words.len()))
}

fn c9_simples() -> Verdict {
    let d = 2;
    let words = all_words(d, 3);
    for alg in [polynomial(2), qp2()] {
        let m = FiberFunctor::new(&alg, d).map_err(err)?;
        for lambda in &words {
            let l = m.simple_dim(lambda).map_err(err)?;
            ensure(l >= 1, || {
                format!("{}: L({}) = 0", alg.label(), lambda.display())
            })?;
        }
    }
    Ok(format!("{} words, 2 algebras", words.len()))
}

fn c10_heredity() -> Verdict {
    let d = 2;
    let m = FiberFunctor::new(&polynomial(2), d).map_err(err)?;
    // Sorting by length is a linear extension of the order.
    let words = all_words(d, 2);
    let end = |set: &[Word]| -> Result<usize, String> {
        m.end_algebra_dim(&SaturatedSet::new(d, set.iter().cloned()).map_err(err)?)
            .map_err(err)
    };
    let layer = |set: &[Word]| -> Result<usize, String> {
        let mut t = 0;
        for l in set {
            t += m.nabla_dim(l).map_err(err)? * m.delta_dim(l).map_err(err)?;
        }
        Ok(t)
    };
    let mut steps = 0;
    let mut chains: Vec<Vec<usize>> = vec![(0..=words.len()).collect()];
    let by_len: Vec<usize> = (0..=2)
        .map(|k| words.iter().filter(|x| x.len() <= k).count())
        .collect();
    chains.push(std::iter::once(0).chain(by_len).collect());
    for chain in chains {
        for pair in chain.windows(2) {
            let (small, big) = (&words[..pair[0]], &words[..pair[1]]);
            let diff = &words[pair[0]..pair[1]];
            ensure(is_antichain(diff), || format!("not an antichain: {diff:?}"))?;
            let lhs = end(big)? as i64 - end(small)? as i64;
            let rhs = layer(diff)? as i64;
            ensure(lhs == rhs, || format!("adding {diff:?}: {lhs} vs {rhs}"))?;
            steps += 1;
        }
    }
    let five = end(&[Word::unit(d), w("r1", d)])?;
    ensure(five == 5, || format!("dim End({{1, r1}}) = {five}"))?;
    Ok(format!("{steps} steps, dim End({{1,r1}}) = 5"))
}

fn c11_schur_weyl() -> Verdict {
    let d = 2;
    let words = all_words(d, 3);
    let (mut pairs, mut maps) = (0, 0);
    for alg in [polynomial(2), qp2()] {
        let m = FiberFunctor::new(&alg, d).map_err(err)?;
        let mut counter = HomCounter::new();
        for mu in &words {
            for nu in &words {
                let n = counter.hom_count(mu, nu) as usize;
                maps += n;
                let rows: Vec<Vec<Rational>> = hom_enumerate(mu, nu)
                    .map_err(err)?
                    .iter()
                    .map(|f| {
                        let mat = m
                            .eval_path(f.source(), &f.generators())
                            .expect("composable");
                        mat.row_vecs().concat()
                    })
                    .collect();
                let cols = m.dim(mu) * m.dim(nu);
                let rank = if rows.is_empty() {
                    0
                } else {
                    Matrix::from_rows(cols, rows).rank()
                };
                ensure(rank == n, || {
                    format!("{}: {} -> {}: rank {rank}, count {n}", alg.label(), mu, nu)
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, {maps} morphisms"))
}

fn random_matrix(d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m.set(i, j, frac(rng.gen_range(-6..=6), rng.gen_range(1..=3)));
        }
    }
    m
}

fn c12_presentation() -> Verdict {
    let poly = |t: &str| NCPoly::from_machine(t).map_err(err);
    // a = z11, b = z12, c = z21, d = z22, δ = ad − cb; ad − cb − δ vanishes.
    let by_hand = [
        "1 z11.z21 + -1 z21.z11",
        "1 z12.z22 + -1 z22.z12",
        "1 z22.z11 + -1 z12.z21 + -1 z11.z22 + 1 z21.z12",
        "1 z11.z22.dinv + -1 z21.z12.dinv + -1 1",
        "1 dinv.z11.z22 + -1 dinv.z21.z12 + -1 1",
        "1 z11.dinv.z22 + -1 z12.dinv.z21 + -1 1",
        "1 z22.dinv.z11 + -1 z21.dinv.z12 + -1 1",
        "1 z12.dinv.z11 + -1 z11.dinv.z12",
        "1 z21.dinv.z22 + -1 z22.dinv.z21",
    ];
    let mut expected = BTreeSet::new();
    for t in by_hand {
        expected.insert(poly(t)?.monic());
    }
    let p2 = uaut_presentation(2);
    let got: BTreeSet<NCPoly> = p2.relations.iter().cloned().collect();
    ensure(got == expected, || {
        "d=2 relations differ from the hand-written set".into()
    })?;
    ensure(
        emit(&p2, Format::Machine) == include_str!("golden/uaut_d2.txt"),
        || "golden file differs".into(),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for d in [2, 3] {
        let p = uaut_presentation(d);
        let mut trials = 0;
        while trials < 100 {
            let x = random_matrix(d, &mut rng);
            if x.determinant() == rat(0) {
                continue;
            }
            let rep = specialize_commutative(&p, &x).map_err(err)?;
            ensure(rep.max_abs == rat(0), || {
                format!("d={d}: {rep:?} at {}", x.to_text())
            })?;
            trials += 1;
        }
    }
    for d in 1..=4 {
        let idx: Vec<usize> = (1..=d).collect();
        let det = manin_det(&idx, &idx).map_err(err)?;
        for _ in 0..50 {
            let x = random_matrix(d, &mut rng);
            let v = det.evaluate(&|l| match l {
                Letter::Z(i, j) => x.get(i - 1, j - 1).clone(),
                Letter::DeltaInv => unreachable!(),
            });
            ensure(v == x.determinant(), || {
                format!("d={d}: Manin determinant {v} vs {}", x.determinant())
            })?;
        }
    }
    Ok("hand set, golden file, 200 specializations, 200 determinants".into())
}

fn c13_three_lines() -> Verdict {
    let line = |x: i64, y: i64| Subspace::from_rows(2, vec![vec![rat(x), rat(y)]]);
    let lines = [line(1, 0), line(0, 1), line(1, 1)];
    ensure(!is_distributive(&lines).map_err(err)?, || {
        "three lines reported distributive".into()
    })?;
    Ok("not distributive".into())
}

type Criterion = (u32, &'static str, Option<u64>, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 13] = [
        (
            1,
            "confluence, d in {2,3}, max_prefix 2",
            Some(60),
            c1_confluence,
        ),
        (
            2,
            "hom enumerate = count = factorization = dual count, d=2, length <= 3",
            Some(120),
            c2_normal_forms,
        ),
        (
            3,
            "two morphisms r1r1 -> r1r1r2^-1r1r1",
            None,
            c3_two_morphisms,
        ),
        (4, "Koszul and AS battery", Some(120), c4_koszul_battery),
        (5, "Koszul Euler characteristic", None, c5_euler),
        (6, "snake identities", None, c6_snakes),
        (7, "functor relations", None, c7_relations),
        (
            8,
            "costandard arithmetic for k[x,y]",
            None,
            c8_costandard_arithmetic,
        ),
        (9, "simple comodules nonzero", None, c9_simples),
        (10, "heredity sequence dimensions", Some(120), c10_heredity),
        (11, "Schur-Weyl rank = count", Some(300), c11_schur_weyl),
        (
            12,
            "presentation of aut(k[x_1..x_d])",
            None,
            c12_presentation,
        ),
        (
            13,
            "three lines are not distributive",
            None,
            c13_three_lines,
        ),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let mut verdict = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(secs)) = (&verdict, limit) {
            if elapsed > Duration::from_secs(secs) {
                verdict = Err(format!(
                    "took {:.1} s, limit {secs} s",
                    elapsed.as_secs_f64()
                ));
            }
        }
        match verdict {
            Ok(detail) => println!(
                "[PASS] {n:>2} {name}: {detail} ({:.2} s)",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "[FAIL] {n:>2} {name}: {why} ({:.2} s)",
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
