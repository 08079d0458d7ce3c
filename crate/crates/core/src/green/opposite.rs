use super::GreenFunctor;
use crate::biset::{iso, BurnsideElement};
use crate::error::Result;
use crate::group::{swap, FiniteGroup};
use crate::scalar::{Ring, Scalar};

/// `A^op`: the same biset functor with reversed multiplication, and cross
/// product `a ×̊ b = A(Iso(τ_{H,G}))(b × a)`.
#[derive(Clone, Debug)]
pub struct Opposite<A> {
    base: A,
}

impl<A: GreenFunctor> Opposite<A> {
    pub fn new(base: A) -> Self {
        Opposite { base }
    }

    pub fn base(&self) -> &A {
        &self.base
    }
}

impl<A: GreenFunctor> GreenFunctor for Opposite<A> {
    type Elem = A::Elem;

    fn tag(&self) -> String {
        format!("{}op", self.base.tag())
    }

    fn group_of(&self, a: &A::Elem) -> FiniteGroup {
        self.base.group_of(a)
    }

    fn zero(&self, g: &FiniteGroup, ring: Ring) -> A::Elem {
        self.base.zero(g, ring)
    }

    fn basis(&self, g: &FiniteGroup, ring: Ring) -> Vec<A::Elem> {
        self.base.basis(g, ring)
    }

    fn coords(&self, a: &A::Elem) -> Vec<Scalar> {
        self.base.coords(a)
    }

    fn from_coords(&self, g: &FiniteGroup, ring: Ring, coords: &[Scalar]) -> Result<A::Elem> {
        self.base.from_coords(g, ring, coords)
    }

    fn act(&self, x: &BurnsideElement, a: &A::Elem) -> Result<A::Elem> {
        self.base.act(x, a)
    }

    fn cross(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        let (g, h) = (self.base.group_of(a), self.base.group_of(b));
        let tau = iso(&swap(&h, &g))?;
        self.base.act(&tau, &self.base.cross(b, a)?)
    }

    fn mul(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        self.base.mul(b, a)
    }

    fn epsilon(&self, ring: Ring) -> A::Elem {
        self.base.epsilon(ring)
    }
}
