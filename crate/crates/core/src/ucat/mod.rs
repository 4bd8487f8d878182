//! The category U: splitting generators φ, contraction generators θ,
//! normal forms, Hom counting and enumeration, and the dualities.

mod confluence;
mod count;
mod fiber_product;
mod generators;
mod morphism;
mod relations;
mod rewrite;

pub use confluence::{confluence_check, ConfluenceReport};
pub use count::{
    coarsen, count_down, count_up, down_targets, enumerate_down, enumerate_up, hom_count,
    hom_enumerate, up_sources, HomCounter,
};
pub use fiber_product::{fiber_product_up, FiberProduct};
pub use generators::{
    down_generators_outof, parse_generator, up_generators_into, ElementaryDown, ElementaryUp,
    Generator,
};
pub use morphism::{compose, normal_form_down, Morphism};
pub use relations::{relation_instances, snake_instances, RelationInstance, RelationKind};
pub use rewrite::{is_normal, normal_form_up, normalize_with, rewrite_pair, Orientation};

#[cfg(test)]
mod tests;
