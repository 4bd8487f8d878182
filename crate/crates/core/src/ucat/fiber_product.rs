use crate::words::{Token, Word};
use crate::Error;

use super::generators::ElementaryUp;
use super::morphism::Morphism;

/// The pullback of two splitting generators with a common target.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum FiberProduct {
    /// No common refinement exists; the pullback is the adjoined terminal object.
    Star,
    /// `source` with legs to the sources of the first and second generator.
    Square {
        source: Word,
        first_leg: Morphism,
        second_leg: Morphism,
    },
}

/// Pullback of f and g inside the splitting subcategory.
pub fn fiber_product_up(f: &ElementaryUp, g: &ElementaryUp) -> Result<FiberProduct, Error> {
    let lambda = f.target();
    if lambda != g.target() {
        return Err(Error::EndpointMismatch(format!(
            "{f} and {g} have different targets"
        )));
    }
    let (i, j) = (f.position(), g.position());
    if i == j {
        let s = f.source();
        return Ok(FiberProduct::Square {
            source: s.clone(),
            first_leg: Morphism::identity(&s),
            second_leg: Morphism::identity(&s),
        });
    }
    if i > j {
        return Ok(match fiber_product_up(g, f)? {
            FiberProduct::Square {
                source,
                first_leg,
                second_leg,
            } => FiberProduct::Square {
                source,
                first_leg: second_leg,
                second_leg: first_leg,
            },
            FiberProduct::Star => FiberProduct::Star,
        });
    }
    let d = lambda.d();
    let t = lambda.tokens();
    let n = t.len();
    if j == i + 1 {
        // x y z with f merging x y and g merging y z.
        let (x, y, z) = (f.a(), f.b(), g.b());
        if x + y + z > d {
            return Ok(FiberProduct::Star);
        }
        let pre = lambda.slice(0..i);
        let post = lambda.slice(i + 3..n);
        let p = ElementaryUp::of(pre.clone(), x + y, z, post.clone());
        let q = ElementaryUp::of(pre, x, y + z, post);
        return Ok(FiberProduct::Square {
            source: p.source(),
            first_leg: Morphism::from_up(&p),
            second_leg: Morphism::from_up(&q),
        });
    }
    let (a, b, c, e) = (f.a(), f.b(), g.a(), g.b());
    let p = ElementaryUp::of(
        Word::concat(d, &[&t[..i], &[Token::Pos(a + b)], &t[i + 2..j]]),
        c,
        e,
        lambda.slice(j + 2..n),
    );
    let q = ElementaryUp::of(
        lambda.slice(0..i),
        a,
        b,
        Word::concat(d, &[&t[i + 2..j], &[Token::Pos(c + e)], &t[j + 2..]]),
    );
    Ok(FiberProduct::Square {
        source: p.source(),
        first_leg: Morphism::from_up(&p),
        second_leg: Morphism::from_up(&q),
    })
}
