//! Word calculus in finitely generated free groups.
//!
//! Words are freely reduced on construction. Conjugacy is decided by
//! comparing cyclic reductions up to rotation. Subgroups are represented by
//! their Stallings core graphs, whose first Betti number is the subgroup
//! rank.
//!
//! Injectivity of a homomorphism `F_k -> F` given by the images of a basis is
//! decided by `rank(fold(images)) == k`. The images generate a subgroup `H`,
//! which is free of rank `r`, and the homomorphism is a surjection
//! `F_k -> H`. If `r < k` it cannot be injective. If `r == k` then
//! `H ≅ F_k`, and a surjection of a finitely generated free group onto
//! itself is an isomorphism because free groups are Hopfian.

mod claims;
mod fold;
mod word;

use thiserror::Error;

pub use claims::{
    claim_suite, family_words, ClaimReport, ClaimResult, ConjugacyCheck, ConsistencyCheck, ImageFamily,
    SubstitutionCheck, FAMILIES, SUBSTITUTED_G2_IMAGE,
};
pub use fold::{LabelledEdge, SubgroupGraph};
pub use word::{raw_length, Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("unknown generator symbol '{0}'")]
    UnknownGenerator(char),
    #[error("generator symbol '{0}' is not a letter")]
    BadAlphabet(char),
    #[error("generator symbol '{0}' declared twice")]
    DuplicateSymbol(char),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

pub fn reduce(alphabet: &Alphabet, raw: &[Letter]) -> Result<Word, FreeGroupError> {
    Word::reduce(alphabet, raw.iter().copied())
}

pub fn cyclic_reduce(w: &Word) -> Word {
    w.cyclic_reduce()
}

pub fn conjugate_test(u: &Word, v: &Word) -> bool {
    u.is_conjugate_to(v)
}

pub fn fold(generators: &[Word]) -> SubgroupGraph {
    SubgroupGraph::fold(generators)
}

pub fn rank(g: &SubgroupGraph) -> usize {
    g.rank()
}

/// Whether the map sending the i-th basis element of a free group of rank
/// `images.len()` to `images[i]` is injective.
pub fn verify_injectivity(images: &[Word]) -> bool {
    !images.is_empty() && fold(images).rank() == images.len()
}
