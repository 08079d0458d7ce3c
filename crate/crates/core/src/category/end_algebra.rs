use serde_json::{json, Value};

use super::{cat_compose, cat_identity, hom_basis, CatMorphism};
use crate::error::Result;
use crate::green::GreenFunctor;
use crate::group::{direct_product, FiniteGroup};
use crate::linalg::StructureConstants;
use crate::scalar::{to_exact_string, Ring, Scalar};

/// `End_{P_A}(G) = A(G×G)` with its composition table in coordinates.
#[derive(Clone, Debug)]
pub struct EndAlgebra<A: GreenFunctor> {
    functor: A,
    group: FiniteGroup,
    constants: StructureConstants,
}

impl<A: GreenFunctor> EndAlgebra<A> {
    pub fn new(f: &A, g: &FiniteGroup, ring: Ring) -> Result<Self> {
        let basis = hom_basis(f, g, g, ring);
        let table = basis
            .iter()
            .map(|bi| {
                basis
                    .iter()
                    .map(|bj| Ok(f.coords(cat_compose(f, bi, bj)?.value())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let identity = f.coords(cat_identity(f, g, ring)?.value());
        Ok(EndAlgebra {
            functor: f.clone(),
            group: g.clone(),
            constants: StructureConstants { table, one: identity, ring },
        })
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.constants.ring
    }

    pub fn identity_coords(&self) -> &[Scalar] {
        &self.constants.one
    }

    pub fn coords(&self, alpha: &CatMorphism<A::Elem>) -> Vec<Scalar> {
        self.functor.coords(alpha.value())
    }

    pub fn element(&self, coords: &[Scalar]) -> Result<CatMorphism<A::Elem>> {
        let gg = direct_product(&[self.group.clone(), self.group.clone()]);
        let value = self.functor.from_coords(&gg, self.constants.ring, coords)?;
        CatMorphism::new(&self.functor, &self.group, &self.group, value)
    }

    /// Coordinates of `x∘y`.
    pub fn compose_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.constants.mul(x, y)
    }

    pub fn inverse_coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.constants.inverse(x)
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn inverse(&self, alpha: &CatMorphism<A::Elem>) -> Result<Option<CatMorphism<A::Elem>>> {
        match self.inverse_coords(&self.coords(alpha)) {
            Some(c) => Ok(Some(self.element(&c)?)),
            None => Ok(None),
        }
    }

    /// `{ "group", "functor", "dim", "compositionTable" }`.
    pub fn to_json(&self) -> Value {
        let table: Vec<Vec<Vec<String>>> = self
            .constants
            .table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(to_exact_string).collect()).collect())
            .collect();
        json!({
            "group": self.group.name(),
            "functor": self.functor.tag(),
            "dim": self.dim(),
            "compositionTable": table,
        })
    }
}

/// The two-sided inverse of an endomorphism, if it exists over its ring.
pub fn endo_inverse<A: GreenFunctor>(
    f: &A,
    alpha: &CatMorphism<A::Elem>,
) -> Result<Option<CatMorphism<A::Elem>>> {
    if alpha.source() != alpha.target() {
        return Ok(None);
    }
    EndAlgebra::new(f, alpha.source(), alpha.ring())?.inverse(alpha)
}
