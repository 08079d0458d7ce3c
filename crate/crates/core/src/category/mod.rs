//! The category `P_A` of a Green biset functor `A`: objects are finite
//! groups and `Hom(G, H) = A(H×G)`.

mod end_algebra;

pub use end_algebra::{endo_inverse, EndAlgebra};

use crate::biset::{contraction, ind, iso, right_arrow, BurnsideElement};
use crate::error::{Error, Result};
use crate::green::{GreenFunctor, GreenMorphism, Linear};
use crate::group::{diagonal, direct_product, swap, FiniteGroup};
use crate::scalar::Ring;

/// A morphism `G → H` of `P_A`, with value in `A(H×G)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CatMorphism<E> {
    source: FiniteGroup,
    target: FiniteGroup,
    value: E,
}

impl<E: Linear> CatMorphism<E> {
    pub fn new<A: GreenFunctor<Elem = E>>(
        f: &A,
        source: &FiniteGroup,
        target: &FiniteGroup,
        value: E,
    ) -> Result<Self> {
        let hg = direct_product(&[target.clone(), source.clone()]);
        let found = f.group_of(&value);
        if found != hg {
            return Err(Error::GroupMismatch {
                expected: hg.to_string(),
                found: found.to_string(),
            });
        }
        Ok(CatMorphism {
            source: source.clone(),
            target: target.clone(),
            value,
        })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn value(&self) -> &E {
        &self.value
    }

    pub fn ring(&self) -> Ring {
        self.value.ring()
    }

    fn with_value(&self, value: E) -> Self {
        CatMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            value,
        }
    }

    fn same_hom_set(&self, other: &Self) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::GroupMismatch {
                expected: format!("{} → {}", self.source, self.target),
                found: format!("{} → {}", other.source, other.target),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_hom_set(other)?;
        Ok(self.with_value(self.value.add(&other.value)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_hom_set(other)?;
        Ok(self.with_value(self.value.sub(&other.value)?))
    }

    pub fn neg(&self) -> Self {
        self.with_value(self.value.neg())
    }

    pub fn scale(&self, c: &crate::scalar::Scalar) -> Result<Self> {
        Ok(self.with_value(self.value.scale(c)?))
    }
}

/// The basis of `Hom(G, H)`.
pub fn hom_basis<A: GreenFunctor>(
    f: &A,
    source: &FiniteGroup,
    target: &FiniteGroup,
    ring: Ring,
) -> Vec<CatMorphism<A::Elem>> {
    let hg = direct_product(&[target.clone(), source.clone()]);
    f.basis(&hg, ring)
        .into_iter()
        .map(|value| CatMorphism {
            source: source.clone(),
            target: target.clone(),
            value,
        })
        .collect()
}

pub fn zero_morphism<A: GreenFunctor>(
    f: &A,
    source: &FiniteGroup,
    target: &FiniteGroup,
    ring: Ring,
) -> CatMorphism<A::Elem> {
    let hg = direct_product(&[target.clone(), source.clone()]);
    CatMorphism {
        source: source.clone(),
        target: target.clone(),
        value: f.zero(&hg, ring),
    }
}

/// `α∘β = A(K×←H×G)(α×β)` for `β: G → H`, `α: H → K`.
pub fn cat_compose<A: GreenFunctor>(
    f: &A,
    alpha: &CatMorphism<A::Elem>,
    beta: &CatMorphism<A::Elem>,
) -> Result<CatMorphism<A::Elem>> {
    if alpha.source != beta.target {
        return Err(Error::GroupMismatch {
            expected: beta.target.to_string(),
            found: alpha.source.to_string(),
        });
    }
    let (k, h, g) = (&alpha.target, &alpha.source, &beta.source);
    let value = f.act(&contraction(k, h, g), &f.cross(&alpha.value, &beta.value)?)?;
    Ok(CatMorphism {
        source: g.clone(),
        target: k.clone(),
        value,
    })
}

/// `Id_G = A(→G)(ε_A)`.
pub fn cat_identity<A: GreenFunctor>(f: &A, g: &FiniteGroup, ring: Ring) -> Result<CatMorphism<A::Elem>> {
    Ok(CatMorphism {
        source: g.clone(),
        target: g.clone(),
        value: f.act(&right_arrow(g), &f.epsilon(ring))?,
    })
}

/// `ã = A(Ind(Δ))(a)`, an endomorphism of `G`.
pub fn tilde<A: GreenFunctor>(f: &A, a: &A::Elem) -> Result<CatMorphism<A::Elem>> {
    let g = f.group_of(a);
    Ok(CatMorphism {
        value: f.act(&ind(&diagonal(&g)), a)?,
        source: g.clone(),
        target: g,
    })
}

/// `ã∘(b×ε) = ab×ε` in `A(G×1)`.
pub fn tilde_cross_check<A: GreenFunctor>(f: &A, a: &A::Elem, b: &A::Elem) -> Result<bool> {
    let g = f.group_of(a);
    let eps = f.epsilon(a.ring());
    let point = CatMorphism::new(f, &FiniteGroup::trivial(), &g, f.cross(b, &eps)?)?;
    let lhs = cat_compose(f, &tilde(f, a)?, &point)?;
    Ok(lhs.value == f.cross(&f.mul(a, b)?, &eps)?)
}

/// `E_A(x)(α) = e(→x)∘α∘e(→x^op)` for an actual biset `x ∈ B(H, G)` and
/// `α: G → G`.
pub fn double_algebra<A: GreenFunctor>(
    f: &A,
    x: &BurnsideElement,
    alpha: &CatMorphism<A::Elem>,
) -> Result<CatMorphism<A::Elem>> {
    if x.terms().values().any(|c| !c.is_integer() || *c < crate::scalar::zero()) {
        return Err(Error::InvalidArgument(
            "double-algebra maps take actual bisets, not virtual ones".into(),
        ));
    }
    let (h, g) = (x.left(), x.right());
    if alpha.source != *g || alpha.target != *g {
        return Err(Error::GroupMismatch {
            expected: format!("{g} → {g}"),
            found: format!("{} → {}", alpha.source, alpha.target),
        });
    }
    let ring = alpha.ring();
    let e = |y: BurnsideElement| f.act(&y, &f.epsilon(ring));
    let left = CatMorphism::new(f, g, h, e(x.arrow())?)?;
    let right = CatMorphism::new(f, h, g, e(x.opposite().arrow())?)?;
    cat_compose(f, &cat_compose(f, &left, alpha)?, &right)
}

/// `T_{G,H} = A(Iso(τ_{H,G}))`: a morphism `G → H` of `P_{A^op}` becomes a
/// morphism `H → G` of `P_A`.
pub fn t_iso<A: GreenFunctor>(f: &A, alpha: &CatMorphism<A::Elem>) -> Result<CatMorphism<A::Elem>> {
    let (g, h) = (&alpha.source, &alpha.target);
    Ok(CatMorphism {
        value: f.act(&iso(&swap(h, g))?, &alpha.value)?,
        source: h.clone(),
        target: g.clone(),
    })
}

pub fn t_iso_inverse<A: GreenFunctor>(f: &A, alpha: &CatMorphism<A::Elem>) -> Result<CatMorphism<A::Elem>> {
    let (h, g) = (&alpha.source, &alpha.target);
    Ok(CatMorphism {
        value: f.act(&iso(&swap(g, h))?, &alpha.value)?,
        source: g.clone(),
        target: h.clone(),
    })
}

/// `P_f(α) = f_{H×G}(α)`.
pub fn induced_functor<A: GreenFunctor, C: GreenFunctor>(
    f: &GreenMorphism<A, C>,
    alpha: &CatMorphism<A::Elem>,
) -> Result<CatMorphism<C::Elem>> {
    Ok(CatMorphism {
        source: alpha.source.clone(),
        target: alpha.target.clone(),
        value: f.apply(&alpha.value)?,
    })
}

/// `A(x)` on morphisms: `x ∈ B(L×K, H×G)` sends `Hom(G, H)` to `Hom(K, L)`.
pub fn act_on_morphism<A: GreenFunctor>(
    f: &A,
    x: &BurnsideElement,
    alpha: &CatMorphism<A::Elem>,
) -> Result<CatMorphism<A::Elem>> {
    let lk = x.left().factors();
    if lk.len() != 2 {
        return Err(Error::InvalidArgument(format!("{} is not a product of two groups", x.left())));
    }
    Ok(CatMorphism {
        value: f.act(x, &alpha.value)?,
        source: lk[1].clone(),
        target: lk[0].clone(),
    })
}

/// Pairs `(G, H)` of window groups with `|H×G| ≤ max_order`.
pub fn hom_pairs(groups: &[FiniteGroup], max_order: usize) -> Vec<(FiniteGroup, FiniteGroup)> {
    let mut out = Vec::new();
    for g in groups {
        for h in groups {
            if g.order() * h.order() <= max_order {
                out.push((g.clone(), h.clone()));
            }
        }
    }
    out
}

/// First failure of `F(A(x)(α)) = C(x)(F(α))` and `F(G) = G`, over every
/// transitive `x ∈ B(L×K, H×G)` between the given hom-sets and every basis
/// morphism `α: G → H`.
pub fn lift_criterion_check<A, C, F>(
    a: &A,
    c: &C,
    map: F,
    homs: &[(FiniteGroup, FiniteGroup)],
    ring: Ring,
) -> Result<Option<String>>
where
    A: GreenFunctor,
    C: GreenFunctor,
    F: Fn(&CatMorphism<A::Elem>) -> Result<CatMorphism<C::Elem>>,
{
    for (g, h) in homs {
        let hg = direct_product(&[h.clone(), g.clone()]);
        let basis = hom_basis(a, g, h, ring);
        let images: Vec<_> = basis.iter().map(&map).collect::<Result<_>>()?;
        for (i, fa) in images.iter().enumerate() {
            if fa.source != *g || fa.target != *h {
                return Ok(Some(format!("F moves objects at basis {i} of Hom({g},{h})")));
            }
        }
        for (k, l) in homs {
            let lk = direct_product(&[l.clone(), k.clone()]);
            for x in BurnsideElement::basis_elements(&lk, &hg, ring) {
                for (i, (alpha, fa)) in basis.iter().zip(&images).enumerate() {
                    let lhs = map(&act_on_morphism(a, &x, alpha)?)?;
                    let rhs = act_on_morphism(c, &x, fa)?;
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "F(A(x)(α)) ≠ C(x)(F(α)) for x = {x:?}, α = basis {i} of Hom({g},{h})"
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
