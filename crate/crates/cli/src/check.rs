//! The property suite behind `uaut check`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uaut::algebra::{polynomial, QuadraticAlgebra};
use uaut::fiber::FiberFunctor;
use uaut::linalg::{rat, Matrix};
use uaut::presentation::{
    coassociativity_check, counit_check, emit, parse_machine, specialize_commutative,
    uaut_presentation, Format,
};
use uaut::ucat::{
    confluence_check, down_targets, hom_enumerate, relation_instances, snake_instances, HomCounter,
    Morphism, Orientation,
};
use uaut::words::{all_words, Word};
use uaut::Error;

use crate::{Config, Failure, Outcome};

struct Suite {
    lines: Vec<String>,
    failed: usize,
}

impl Suite {
    fn record(&mut self, name: String, result: Result<Option<String>, Error>) {
        match result {
            Ok(None) => self.lines.push(format!("[ok]   {name}")),
            Ok(Some(why)) => {
                self.failed += 1;
                self.lines.push(format!("[FAIL] {name}: {why}"));
            }
            Err(e) => {
                self.failed += 1;
                self.lines.push(format!("[FAIL] {name}: {e}"));
            }
        }
    }
}

fn first_bad<T>(
    items: impl IntoIterator<Item = T>,
    mut bad: impl FnMut(&T) -> Result<Option<String>, Error>,
) -> Result<Option<String>, Error> {
    for x in items {
        if let Some(why) = bad(&x)? {
            return Ok(Some(why));
        }
    }
    Ok(None)
}

/// A random invertible integer matrix with entries in −4..=4.
pub fn random_invertible(d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, rat(rng.gen_range(-4..=4)));
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn hom_checks(d: usize, len: usize) -> Result<Option<String>, Error> {
    let words = all_words(d, len);
    let mut counter = HomCounter::new();
    for mu in &words {
        for nu in &words {
            let n = counter.hom_count(mu, nu);
            let listed = hom_enumerate(mu, nu)?.len() as u64;
            let factored: u64 = down_targets(mu)
                .iter()
                .map(|l| counter.count_down(mu, l) * counter.count_up(l, nu))
                .sum();
            let dual = counter.hom_count(&nu.dual_right(), &mu.dual_right());
            if n != listed || n != factored || n != dual {
                return Ok(Some(format!(
                    "{} -> {}: count {n}, enumerated {listed}, factored {factored}, dual {dual}",
                    mu.display(),
                    nu.display()
                )));
            }
        }
    }
    Ok(None)
}

fn run_for(suite: &mut Suite, alg: &QuadraticAlgebra, d: usize, n: usize, len: usize, seed: u64) {
    let tag = format!("{} d={d}", alg.label());
    let small = len.min(2);

    let r = confluence_check(d, 2, Orientation::Standard);
    suite.record(
        format!("{tag} confluence ({} overlaps)", r.overlaps),
        Ok((!r.is_convergent()).then(|| r.examples.join(" | "))),
    );
    let hom_len = if d == 2 { len } else { small };
    suite.record(
        format!("{tag} hom counts, length <= {hom_len}"),
        hom_checks(d, hom_len),
    );

    let p = alg.certify(d, n);
    suite.record(
        format!("{tag} Koszul and AS through degree {n}"),
        Ok((!p.is_certified()).then(|| format!("{p:?}"))),
    );
    suite.record(
        format!("{tag} Koszul Euler characteristic"),
        first_bad(0..=n, |&m| {
            let e = alg.koszul_euler(m);
            Ok((e != i64::from(m == 0)).then(|| format!("degree {m}: {e}")))
        }),
    );

    let m = match FiberFunctor::new(alg, d) {
        Ok(m) => m,
        Err(e) => {
            suite.record(format!("{tag} fiber functor"), Err(e));
            return;
        }
    };
    let mut instances = relation_instances(d, 1);
    instances.extend(snake_instances(d));
    suite.record(
        format!("{tag} relations in U and under M ({})", instances.len()),
        first_bad(&instances, |r| {
            let l = Morphism::from_generators(&r.source, &r.lhs)?;
            let rr = Morphism::from_generators(&r.source, &r.rhs)?;
            let same = m.eval_path(&r.source, &r.lhs)? == m.eval_path(&r.source, &r.rhs)?;
            Ok((l != rr || !same).then(|| format!("{:?} at {}", r.kind, r.source.display())))
        }),
    );

    let words = all_words(d, len);
    suite.record(
        format!("{tag} nabla, delta and L, length <= {len}"),
        first_bad(&words, |w| {
            let why = if m.simple_dim(w)? == 0 {
                "L vanishes"
            } else if !m.euler_nabla_check(w)? {
                "Euler sum differs from dim nabla"
            } else if m.nabla_filtration_dim(w)? != m.dim(w) {
                "nabla filtration does not fill M"
            } else {
                return Ok(None);
            };
            Ok(Some(format!("{}: {why}", w.display())))
        }),
    );
    let short: Vec<Word> = all_words(d, small);
    let pairs: Vec<(&Word, &Word)> = short
        .iter()
        .flat_map(|u| short.iter().map(move |v| (u, v)))
        .collect();
    suite.record(
        format!("{tag} tensor sequences, length <= {small}"),
        first_bad(&pairs, |(u, v)| {
            Ok((!m.tensor_sequence_check(u, v)?)
                .then(|| format!("{} {}", u.display(), v.display())))
        }),
    );
    suite.record(
        format!("{tag} Schur-Weyl, length <= {small}"),
        first_bad(&pairs, |(u, v)| {
            let s = m.schur_weyl_check(u, v)?;
            Ok((!s.ok()).then(|| format!("{} -> {}: {s:?}", u.display(), v.display())))
        }),
    );

    let pres = uaut_presentation(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suite.record(
        format!("presentation d={d}: 20 commutative specializations"),
        first_bad(0..20, |_| {
            let rep = specialize_commutative(&pres, &random_invertible(d, &mut rng))?;
            Ok((rep.nonzero > 0).then(|| format!("{rep:?}")))
        }),
    );
    let round = parse_machine(&emit(&pres, Format::Machine)).map(|q| q == pres);
    suite.record(
        format!("presentation d={d}: counit, coassociativity, round trip"),
        Ok(
            (!(counit_check(&pres) && coassociativity_check(&pres) && round.unwrap_or(false)))
                .then(|| "mismatch".into()),
        ),
    );
}

pub fn cmd_check(cfg: &Config) -> Outcome {
    let len = cfg.max_len()?;
    let targets: Vec<(QuadraticAlgebra, usize)> =
        if cfg.algebra.is_some() || cfg.builtin.is_some() || cfg.d.is_some() {
            vec![cfg.algebra_and_d()?]
        } else {
            vec![(polynomial(2), 2), (polynomial(3), 3)]
        };
    let mut suite = Suite {
        lines: Vec::new(),
        failed: 0,
    };
    for (alg, d) in &targets {
        let n = cfg.resolve_n(*d)?;
        run_for(&mut suite, alg, *d, n, len, cfg.seed);
    }
    let total = suite.lines.len();
    let mut out = suite.lines.join("\n");
    out.push_str(&format!(
        "\n{} of {total} checks passed\n",
        total - suite.failed
    ));
    if suite.failed == 0 {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
