//! Anti-involutions on Green functors and the bullet duality on `P_A`.

mod dainf;
mod orthogonal;

pub use dainf::{dainf, dainf_transitivity_check, star_morphism_diagrams};
pub use orthogonal::{
    orthogonal_automorphisms, orthogonal_units, orthogonal_units_burnside, restrict_unit,
    restriction_transfer_check, FiniteAlgebra, OrthogonalReport, SEARCH_LIMIT,
};

use std::fmt;
use std::sync::Arc;

use crate::biset::{iso, BurnsideElement};
use crate::category::{hom_basis, hom_pairs, lift_criterion_check, t_iso_inverse, CatMorphism};
use crate::error::{Error, Result};
use crate::green::{Burnside, GreenFunctor, GreenMorphism, Linear, MatrixFunctor};
use crate::group::{builtin_catalog, direct_product, swap, FiniteGroup};
use crate::scalar::{Ring, Scalar};

type StarFn<A> = Arc<dyn Fn(&<A as GreenFunctor>::Elem) -> Result<<A as GreenFunctor>::Elem> + Send + Sync>;

/// A Green functor with an anti-involution `a ↦ a^⋆`.
#[derive(Clone)]
pub struct StarGreenFunctor<A: GreenFunctor> {
    base: A,
    tag: String,
    star: StarFn<A>,
}

impl<A: GreenFunctor> fmt::Debug for StarGreenFunctor<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ⋆)", self.tag)
    }
}

/// Groups over which constructors validate the star.
pub fn validation_window() -> Vec<FiniteGroup> {
    let cat = builtin_catalog();
    vec![
        FiniteGroup::trivial(),
        cat.require("C2").expect("builtin"),
        cat.require("C3").expect("builtin"),
    ]
}

impl<A: GreenFunctor> StarGreenFunctor<A> {
    /// Validates every star invariant over [`validation_window`].
    pub fn new(
        base: A,
        star: impl Fn(&A::Elem) -> Result<A::Elem> + Send + Sync + 'static,
    ) -> Result<Self> {
        let s = Self::new_unchecked(base, star);
        match s.validate(&validation_window(), Ring::Integers)? {
            None => Ok(s),
            Some(w) => Err(Error::InvalidArgument(format!("not an anti-involution on {}: {w}", s.tag))),
        }
    }

    pub fn new_unchecked(
        base: A,
        star: impl Fn(&A::Elem) -> Result<A::Elem> + Send + Sync + 'static,
    ) -> Self {
        StarGreenFunctor {
            tag: base.tag(),
            base,
            star: Arc::new(star),
        }
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn star(&self, a: &A::Elem) -> Result<A::Elem> {
        (self.star)(a)
    }

    /// First failure among: involution, anti-multiplicativity, `1^⋆ = 1`,
    /// naturality with transitive bisets between window groups, and
    /// `(a×b)^⋆ = Iso(τ_{H,G})(b^⋆×a^⋆)`.
    pub fn validate(&self, window: &[FiniteGroup], ring: Ring) -> Result<Option<String>> {
        let f = &self.base;
        for g in window {
            let basis = f.basis(g, ring);
            let stars: Vec<A::Elem> = basis.iter().map(|b| self.star(b)).collect::<Result<_>>()?;
            if self.star(&f.one(g, ring)?)? != f.one(g, ring)? {
                return Ok(Some(format!("1^⋆ ≠ 1 at {g}")));
            }
            for (i, (b, sb)) in basis.iter().zip(&stars).enumerate() {
                if &self.star(sb)? != b {
                    return Ok(Some(format!("b{i}^⋆⋆ ≠ b{i} at {g}")));
                }
                for (j, (c, sc)) in basis.iter().zip(&stars).enumerate() {
                    if self.star(&f.mul(b, c)?)? != f.mul(sc, sb)? {
                        return Ok(Some(format!("(b{i}·b{j})^⋆ ≠ b{j}^⋆·b{i}^⋆ at {g}")));
                    }
                }
                for h in window {
                    for x in BurnsideElement::basis_elements(h, g, ring) {
                        if self.star(&f.act(&x, b)?)? != f.act(&x, sb)? {
                            return Ok(Some(format!("star not natural for {x:?} at b{i} of {g}")));
                        }
                    }
                    for (j, c) in f.basis(h, ring).iter().enumerate() {
                        let lhs = self.star(&f.cross(b, c)?)?;
                        let rhs = f.act(&iso(&swap(h, g))?, &f.cross(&self.star(c)?, sb)?)?;
                        if lhs != rhs {
                            return Ok(Some(format!(
                                "(b{i}×c{j})^⋆ ≠ Iso(τ)(c{j}^⋆×b{i}^⋆) for {g}, {h}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// The same functor with the star negated on basis vector `k` of every
    /// evaluation that has one. Never an anti-involution; used to exercise
    /// failure reporting.
    pub fn corrupted(&self, k: usize) -> Self
    where
        A: 'static,
    {
        let (s, f) = (self.clone(), self.base.clone());
        let mut out = Self::new_unchecked(self.base.clone(), move |a: &A::Elem| {
            let sa = s.star(a)?;
            let g = f.group_of(a);
            let coords = f.coords(a);
            match (coords.get(k), f.basis(&g, a.ring()).get(k)) {
                (Some(c), Some(b)) => sa.sub(&s.star(b)?.scale(&(c * Scalar::from_integer(2)))?),
                _ => Ok(sa),
            }
        });
        out.tag = format!("{}~{k}", self.tag);
        out
    }
}

/// `B` with the identity star.
pub fn make_star_burnside() -> Result<StarGreenFunctor<Burnside>> {
    StarGreenFunctor::new(Burnside, |a: &BurnsideElement| Ok(a.clone()))
}

/// `M_n(A)` with `[a_ij]^⋆ = [a_ij^⋆]^T`.
pub fn make_star_matrix<A: GreenFunctor + 'static>(
    s: &StarGreenFunctor<A>,
    n: usize,
) -> Result<StarGreenFunctor<MatrixFunctor<A>>> {
    let m = MatrixFunctor::new(s.base.clone(), n)?;
    let s = s.clone();
    StarGreenFunctor::new(m, move |a: &crate::green::MatrixElement<A::Elem>| {
        Ok(a.map(|e| s.star(e))?.transpose())
    })
}

/// `α^• = A(Iso(τ_{H,G}))(α^⋆)` for `α: G → H`; a morphism `H → G`.
pub fn bullet<A: GreenFunctor>(s: &StarGreenFunctor<A>, alpha: &CatMorphism<A::Elem>) -> Result<CatMorphism<A::Elem>> {
    let (g, h) = (alpha.source(), alpha.target());
    let value = s.base.act(&iso(&swap(h, g))?, &s.star(alpha.value())?)?;
    CatMorphism::new(&s.base, h, g, value)
}

/// `(a + a^⋆)/2`; rational coefficients only.
pub fn re_part<A: GreenFunctor>(s: &StarGreenFunctor<A>, a: &A::Elem) -> Result<A::Elem> {
    if a.ring() != Ring::Rationals {
        return Err(Error::RequiresRationals);
    }
    a.add(&s.star(a)?)?.scale(&Scalar::new(1, 2))
}

/// `(a − a^⋆)/2`; rational coefficients only.
pub fn im_part<A: GreenFunctor>(s: &StarGreenFunctor<A>, a: &A::Elem) -> Result<A::Elem> {
    if a.ring() != Ring::Rationals {
        return Err(Error::RequiresRationals);
    }
    a.sub(&s.star(a)?)?.scale(&Scalar::new(1, 2))
}

/// Outcome of the two equivalent conditions on a star.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EquivalenceReport {
    pub involution_checked: usize,
    pub contravariance_checked: usize,
    pub equivariance_homs: usize,
    pub failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Condition (a): `α^•• = α` and `Id^• = Id` on every hom-set basis between
/// window groups, and `(β∘α)^• = α^•∘β^•` on composable basis pairs whose
/// hom-sets have order at most `max_order`. Condition (b): `T^{-1}∘•` commutes
/// with every transitive `x ∈ B(L×K, H×G)` for `|H×G|, |L×K| ≤ max_order`.
pub fn theorem_equivalence_check<A: GreenFunctor>(
    s: &StarGreenFunctor<A>,
    window: &[FiniteGroup],
    max_order: usize,
    ring: Ring,
) -> Result<EquivalenceReport> {
    let f = &s.base;
    let mut report = EquivalenceReport::default();
    for g in window {
        let id = crate::category::cat_identity(f, g, ring)?;
        if bullet(s, &id)? != id {
            report.failures.push(format!("Id^• ≠ Id at {g}"));
        }
        for h in window {
            for (i, alpha) in hom_basis(f, g, h, ring).iter().enumerate() {
                report.involution_checked += 1;
                if &bullet(s, &bullet(s, alpha)?)? != alpha {
                    report.failures.push(format!("α^•• ≠ α for basis {i} of Hom({g},{h})"));
                }
            }
        }
    }
    let homs = hom_pairs(window, max_order);
    for (g, h) in &homs {
        for (h2, k) in &homs {
            if h2 != h {
                continue;
            }
            let betas = hom_basis(f, g, h, ring);
            for (i, alpha) in hom_basis(f, h, k, ring).iter().enumerate() {
                for (j, beta) in betas.iter().enumerate() {
                    report.contravariance_checked += 1;
                    let lhs = bullet(s, &crate::category::cat_compose(f, alpha, beta)?)?;
                    let rhs = crate::category::cat_compose(f, &bullet(s, beta)?, &bullet(s, alpha)?)?;
                    if lhs != rhs {
                        report.failures.push(format!(
                            "(α{i}∘β{j})^• ≠ β{j}^•∘α{i}^• for {g} → {h} → {k}"
                        ));
                    }
                }
            }
        }
    }
    report.equivariance_homs = homs.len();
    let map = |alpha: &CatMorphism<A::Elem>| t_iso_inverse(f, &bullet(s, alpha)?);
    if let Some(w) = lift_criterion_check(f, f, map, &homs, ring)? {
        report.failures.push(w);
    }
    Ok(report)
}

/// `e_G(x)^⋆ = e_G(x)` on window bases, and `e(x)^• = T(e(x))` on hom-set
/// bases with `|H×G| ≤ max_order`. `e` is normally the initial morphism.
pub fn e_fixed_check<A: GreenFunctor>(
    s: &StarGreenFunctor<A>,
    e: &GreenMorphism<Burnside, A>,
    window: &[FiniteGroup],
    max_order: usize,
    ring: Ring,
) -> Result<Option<String>> {
    let f = &s.base;
    for g in window {
        for (i, x) in Burnside.basis(g, ring).iter().enumerate() {
            let ex = e.apply(x)?;
            if s.star(&ex)? != ex {
                return Ok(Some(format!("e(b{i})^⋆ ≠ e(b{i}) at {g}")));
            }
        }
    }
    for (g, h) in hom_pairs(window, max_order) {
        let hg = direct_product(&[h.clone(), g.clone()]);
        for (i, x) in Burnside.basis(&hg, ring).iter().enumerate() {
            let ex = CatMorphism::new(f, &g, &h, e.apply(x)?)?;
            let t = CatMorphism::new(f, &h, &g, f.act(&iso(&swap(&h, &g))?, ex.value())?)?;
            if bullet(s, &ex)? != t {
                return Ok(Some(format!("e(b{i})^• ≠ T(e(b{i})) on Hom({g},{h})")));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
