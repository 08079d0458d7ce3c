//! Green biset functors over the exact coefficient rings.
//!
//! A [`GreenFunctor`] evaluates at every finite group and exposes the biset
//! action, the cross product `×: A(G) ⊗ A(H) → A(G×H)`, the internal product
//! and the unit `ε_A ∈ A(1)`. Three instances are provided: the Burnside
//! functor, square matrices over a Green functor, and the opposite functor.

mod burnside;
mod checks;
mod matrix;
mod morphism;
mod opposite;

pub use burnside::Burnside;
pub use checks::{
    commutant_check, cross_via_mul, frobenius_check, initial_morphism, mul_via_cross,
    res_is_algebra_hom_check,
};
pub use matrix::{MatrixElement, MatrixFunctor};
pub use morphism::GreenMorphism;
pub use opposite::Opposite;

use std::fmt::Debug;

use crate::biset::{one_point, BurnsideElement};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::scalar::{Ring, Scalar};

/// A vector in some evaluation `A(G)`.
pub trait Linear: Clone + PartialEq + Debug + Send + Sync {
    fn add(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn ring(&self) -> Ring;

    fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }
}

impl Linear for BurnsideElement {
    fn add(&self, other: &Self) -> Result<Self> {
        BurnsideElement::add(self, other)
    }

    fn neg(&self) -> Self {
        BurnsideElement::neg(self)
    }

    fn scale(&self, c: &Scalar) -> Result<Self> {
        BurnsideElement::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        BurnsideElement::is_zero(self)
    }

    fn ring(&self) -> Ring {
        BurnsideElement::ring(self)
    }
}

pub trait GreenFunctor: Clone + Send + Sync {
    type Elem: Linear;

    /// Short display tag, e.g. `B`, `M2(B)`, `Bop`.
    fn tag(&self) -> String;

    /// The group `G` with `a ∈ A(G)`.
    fn group_of(&self, a: &Self::Elem) -> FiniteGroup;

    fn zero(&self, g: &FiniteGroup, ring: Ring) -> Self::Elem;

    /// The ordered basis of `A(G)`.
    fn basis(&self, g: &FiniteGroup, ring: Ring) -> Vec<Self::Elem>;

    fn coords(&self, a: &Self::Elem) -> Vec<Scalar>;

    #[allow(clippy::wrong_self_convention)]
    fn from_coords(&self, g: &FiniteGroup, ring: Ring, coords: &[Scalar]) -> Result<Self::Elem>;

    /// `A(x)(a)` for `x ∈ B(H, G)` and `a ∈ A(G)`.
    fn act(&self, x: &BurnsideElement, a: &Self::Elem) -> Result<Self::Elem>;

    /// `a × b ∈ A(G×H)`.
    fn cross(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// The algebra product of `A(G)`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// `ε_A ∈ A(1)`.
    fn epsilon(&self, ring: Ring) -> Self::Elem;

    /// `1 = A(Inf_1^G)(ε_A)`.
    fn one(&self, g: &FiniteGroup, ring: Ring) -> Result<Self::Elem> {
        self.act(
            &one_point(g, &FiniteGroup::trivial()).with_ring(ring)?,
            &self.epsilon(ring),
        )
    }

    fn dim(&self, g: &FiniteGroup) -> usize {
        self.basis(g, Ring::Integers).len()
    }
}
