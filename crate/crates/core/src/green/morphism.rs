use std::fmt;
use std::sync::Arc;

use super::{Burnside, GreenFunctor, MatrixFunctor};
use crate::biset::BurnsideElement;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::scalar::Ring;

type MapFn<A, C> =
    Arc<dyn Fn(&<A as GreenFunctor>::Elem) -> Result<<C as GreenFunctor>::Elem> + Send + Sync>;

/// A family of maps `f_G: A(G) → C(G)`, meant to be a morphism of Green
/// functors. Nothing is assumed: [`check`](Self::check) tests naturality and
/// the algebra-map conditions over a window.
#[derive(Clone)]
pub struct GreenMorphism<A: GreenFunctor, C: GreenFunctor> {
    name: String,
    source: A,
    target: C,
    map: MapFn<A, C>,
}

impl<A: GreenFunctor, C: GreenFunctor> fmt::Debug for GreenMorphism<A, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.name, self.source.tag(), self.target.tag())
    }
}

impl<A: GreenFunctor, C: GreenFunctor> GreenMorphism<A, C> {
    pub fn new(
        name: impl Into<String>,
        source: A,
        target: C,
        map: impl Fn(&A::Elem) -> Result<C::Elem> + Send + Sync + 'static,
    ) -> Self {
        GreenMorphism {
            name: name.into(),
            source,
            target,
            map: Arc::new(map),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &A {
        &self.source
    }

    pub fn target(&self) -> &C {
        &self.target
    }

    pub fn apply(&self, a: &A::Elem) -> Result<C::Elem> {
        (self.map)(a)
    }

    /// First failure of naturality (against every transitive biset between
    /// window groups), unitality or multiplicativity on basis pairs.
    pub fn check(&self, window: &[FiniteGroup], ring: Ring) -> Result<Option<String>> {
        for g in window {
            let basis = self.source.basis(g, ring);
            let one = self.apply(&self.source.one(g, ring)?)?;
            if one != self.target.one(g, ring)? {
                return Ok(Some(format!("{}: f_{g}(1) ≠ 1", self.name)));
            }
            for (i, a) in basis.iter().enumerate() {
                let fa = self.apply(a)?;
                for (j, b) in basis.iter().enumerate() {
                    let lhs = self.apply(&self.source.mul(a, b)?)?;
                    let rhs = self.target.mul(&fa, &self.apply(b)?)?;
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "{}: f_{g}(b{i}·b{j}) ≠ f(b{i})·f(b{j})",
                            self.name
                        )));
                    }
                }
                for h in window {
                    for x in BurnsideElement::basis_elements(h, g, ring) {
                        let lhs = self.apply(&self.source.act(&x, a)?)?;
                        let rhs = self.target.act(&x, &fa)?;
                        if lhs != rhs {
                            return Ok(Some(format!(
                                "{}: not natural for {x:?} at basis {i} of {g}",
                                self.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

impl<A: GreenFunctor + 'static> GreenMorphism<A, A> {
    pub fn identity(a: A) -> Self {
        GreenMorphism::new("id", a.clone(), a, |x| Ok(x.clone()))
    }
}

impl<A: GreenFunctor + 'static> GreenMorphism<A, MatrixFunctor<A>> {
    /// `a ↦ diag(a, …, a)`.
    pub fn diagonal(a: A, n: usize) -> Result<Self> {
        let m = MatrixFunctor::new(a.clone(), n)?;
        let mm = m.clone();
        Ok(GreenMorphism::new(format!("diag{n}"), a, m, move |x| Ok(mm.scalar_matrix(x))))
    }
}

impl<C: GreenFunctor + 'static> GreenMorphism<Burnside, C> {
    /// The initial morphism `e: B_k → C`, `e_G(x) = C(x)(ε_C)` with `x ∈ B(G, 1)`.
    pub fn initial(target: C) -> Self {
        let t = target.clone();
        GreenMorphism::new("e", Burnside, target, move |x: &BurnsideElement| {
            t.act(x, &t.epsilon(x.ring()))
        })
    }
}
