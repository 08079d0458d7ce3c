use serde_json::{json, Value};

use super::{bullet, StarGreenFunctor};
use crate::biset::{burnside_units, res};
use crate::category::{hom_basis, CatMorphism, EndAlgebra};
use crate::error::{Error, Result};
use crate::green::{Burnside, GreenFunctor};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::StructureConstants;
use crate::scalar::{int, max_abs, to_exact_string, zero, Ring, Scalar};

/// Largest number of coordinate vectors a bounded search will visit.
pub const SEARCH_LIMIT: u128 = 4_000_000;

/// A finite-rank algebra with an anti-involution, in coordinates.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub constants: StructureConstants,
    /// `star[j]` = coordinates of `b_j^⋆`.
    pub star: Vec<Vec<Scalar>>,
}

impl FiniteAlgebra {
    /// `A(G)` with its product and `⋆`.
    pub fn evaluation<A: GreenFunctor>(s: &StarGreenFunctor<A>, g: &FiniteGroup, ring: Ring) -> Result<Self> {
        let f = s.base();
        let basis = f.basis(g, ring);
        let table = basis
            .iter()
            .map(|a| basis.iter().map(|b| Ok(f.coords(&f.mul(a, b)?))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let star = basis.iter().map(|b| Ok(f.coords(&s.star(b)?))).collect::<Result<_>>()?;
        let one = f.coords(&f.one(g, ring)?);
        Ok(FiniteAlgebra {
            constants: StructureConstants { table, one, ring },
            star,
        })
    }

    /// `End_{P_A}(G)` with composition and `•`.
    pub fn endomorphisms<A: GreenFunctor>(s: &StarGreenFunctor<A>, g: &FiniteGroup, ring: Ring) -> Result<Self> {
        let end = EndAlgebra::new(s.base(), g, ring)?;
        let star = hom_basis(s.base(), g, g, ring)
            .iter()
            .map(|b| Ok(end.coords(&bullet(s, b)?)))
            .collect::<Result<_>>()?;
        Ok(FiniteAlgebra {
            constants: end.constants().clone(),
            star,
        })
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn star_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![zero(); self.dim()];
        for (xj, sj) in x.iter().zip(&self.star) {
            for (o, c) in out.iter_mut().zip(sj) {
                *o += xj * c;
            }
        }
        out
    }

    /// `x·x^⋆ = x^⋆·x = 1`.
    pub fn is_orthogonal(&self, x: &[Scalar]) -> bool {
        let sx = self.star_of(x);
        self.constants.mul(x, &sx) == self.constants.one && self.constants.mul(&sx, x) == self.constants.one
    }

    /// Every orthogonal element with coordinates in `[-bound, bound]`, in
    /// lexicographic order.
    pub fn bounded_orthogonal(&self, bound: u32) -> Result<Vec<Vec<Scalar>>> {
        let d = self.dim();
        let width = 2 * bound as u128 + 1;
        let total = width.checked_pow(d as u32).unwrap_or(u128::MAX);
        if total > SEARCH_LIMIT {
            return Err(Error::SearchTooLarge(total));
        }
        let b = bound as i64;
        let mut digits = vec![-b; d];
        let mut out = Vec::new();
        loop {
            let x: Vec<Scalar> = digits.iter().map(|&v| int(v)).collect();
            if self.is_orthogonal(&x) {
                out.push(x);
            }
            let mut i = d;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if digits[i] < b {
                    digits[i] += 1;
                    break;
                }
                digits[i] = -b;
            }
        }
    }

    /// Group check for the orthogonal elements inside a coordinate box:
    /// contains `1`, closed under `⋆`, every product is orthogonal, and every
    /// product inside the box belongs to the set. The second value says
    /// whether the set is closed under all products.
    pub fn group_within_bound(&self, set: &[Vec<Scalar>], bound: Option<u32>) -> (bool, bool) {
        let limit = bound.map(|b| int(b as i64));
        let mut ok = set.contains(&self.constants.one) && set.iter().all(|x| set.contains(&self.star_of(x)));
        let mut closed = true;
        for x in set {
            for y in set {
                let p = self.constants.mul(x, y);
                if set.contains(&p) {
                    continue;
                }
                closed = false;
                let inside = limit.is_none_or(|l| max_abs(&p) <= l);
                if inside || !self.is_orthogonal(&p) {
                    ok = false;
                }
            }
        }
        (ok, closed)
    }
}

/// Result of an orthogonal-unit or orthogonal-automorphism search.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalReport {
    pub group: String,
    pub functor: String,
    pub bound: u32,
    /// The search visited every coordinate vector within the bound.
    pub complete_within_bound: bool,
    /// Completeness does not depend on the bound.
    pub exact: bool,
    pub elements: Vec<Vec<Scalar>>,
    /// See [`FiniteAlgebra::group_within_bound`].
    pub group_table_verified: bool,
    pub closed_under_products: bool,
}

impl OrthogonalReport {
    pub fn to_json(&self) -> Value {
        let elements: Vec<Vec<String>> = self
            .elements
            .iter()
            .map(|v| v.iter().map(to_exact_string).collect())
            .collect();
        json!({
            "group": self.group,
            "functor": self.functor,
            "bound": self.bound,
            "completeWithinBound": self.complete_within_bound,
            "exact": self.exact,
            "elements": elements,
            "groupTableVerified": self.group_table_verified,
            "closedUnderProducts": self.closed_under_products,
        })
    }
}

/// Orthogonal units of `A(G)` with coordinates in `[-bound, bound]`.
pub fn orthogonal_units<A: GreenFunctor>(
    s: &StarGreenFunctor<A>,
    g: &FiniteGroup,
    bound: u32,
    ring: Ring,
) -> Result<OrthogonalReport> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let alg = FiniteAlgebra::evaluation(s, g, ring)?;
    let elements = alg.bounded_orthogonal(bound)?;
    let (verified, closed) = alg.group_within_bound(&elements, Some(bound));
    Ok(OrthogonalReport {
        group: g.name().to_string(),
        functor: s.tag().to_string(),
        bound,
        complete_within_bound: true,
        exact: false,
        elements,
        group_table_verified: verified,
        closed_under_products: closed,
    })
}

/// All orthogonal units of `B(G)`: the units (found exactly through marks)
/// with `u·u^⋆ = 1`.
pub fn orthogonal_units_burnside(s: &StarGreenFunctor<Burnside>, g: &FiniteGroup, bound: u32) -> Result<OrthogonalReport> {
    let alg = FiniteAlgebra::evaluation(s, g, Ring::Integers)?;
    let mut elements: Vec<Vec<Scalar>> = burnside_units(g)?
        .iter()
        .map(|u| u.coords())
        .filter(|c| alg.is_orthogonal(c))
        .collect();
    elements.sort();
    let (verified, closed) = alg.group_within_bound(&elements, None);
    Ok(OrthogonalReport {
        group: g.name().to_string(),
        functor: s.tag().to_string(),
        bound,
        complete_within_bound: true,
        exact: true,
        elements,
        group_table_verified: verified,
        closed_under_products: closed,
    })
}

/// Orthogonal automorphisms `ω^• = ω^{-1}` of `G` in `P_A` with coordinates
/// in `[-bound, bound]`.
pub fn orthogonal_automorphisms<A: GreenFunctor>(
    s: &StarGreenFunctor<A>,
    g: &FiniteGroup,
    bound: u32,
    ring: Ring,
) -> Result<(OrthogonalReport, Vec<CatMorphism<A::Elem>>)> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let alg = FiniteAlgebra::endomorphisms(s, g, ring)?;
    let elements = alg.bounded_orthogonal(bound)?;
    let end = EndAlgebra::new(s.base(), g, ring)?;
    let morphisms = elements.iter().map(|c| end.element(c)).collect::<Result<_>>()?;
    let (verified, closed) = alg.group_within_bound(&elements, Some(bound));
    let report = OrthogonalReport {
        group: g.name().to_string(),
        functor: s.tag().to_string(),
        bound,
        complete_within_bound: true,
        exact: false,
        elements,
        group_table_verified: verified,
        closed_under_products: closed,
    };
    Ok((report, morphisms))
}

/// `A(Res(φ))(u)` for a unit `u ∈ A(H)`, `φ: G → H`.
pub fn restrict_unit<A: GreenFunctor>(s: &StarGreenFunctor<A>, phi: &GroupHom, u: &A::Elem) -> Result<A::Elem> {
    let f = s.base();
    let h = phi.target();
    if f.group_of(u) != *h {
        return Err(Error::GroupMismatch {
            expected: h.to_string(),
            found: f.group_of(u).to_string(),
        });
    }
    let alg = FiniteAlgebra::evaluation(s, h, crate::green::Linear::ring(u))?;
    if alg.constants.inverse(&f.coords(u)).is_none() {
        return Err(Error::NotInvertible);
    }
    f.act(&res(phi), u)
}

/// Restriction along `φ` on the given units of `A(H)`: lands in units,
/// is multiplicative and star-compatible, preserves orthogonality, and for
/// surjective `φ` is injective and reflects orthogonality.
pub fn restriction_transfer_check<A: GreenFunctor>(
    s: &StarGreenFunctor<A>,
    phi: &GroupHom,
    units: &[A::Elem],
    ring: Ring,
) -> Result<Option<String>> {
    let f = s.base();
    let (g, h) = (phi.source(), phi.target());
    let alg_g = FiniteAlgebra::evaluation(s, g, ring)?;
    let alg_h = FiniteAlgebra::evaluation(s, h, ring)?;
    let r = res(phi);
    let images: Vec<A::Elem> = units.iter().map(|u| restrict_unit(s, phi, u)).collect::<Result<_>>()?;
    let coords: Vec<Vec<Scalar>> = images.iter().map(|x| f.coords(x)).collect();
    for (i, (u, ru)) in units.iter().zip(&images).enumerate() {
        let c = &coords[i];
        if alg_g.constants.inverse(c).is_none() {
            return Ok(Some(format!("image of unit {i} is not a unit of A({g})")));
        }
        if f.act(&r, &s.star(u)?)? != s.star(ru)? {
            return Ok(Some(format!("restriction does not commute with ⋆ at unit {i}")));
        }
        let (orth_u, orth_r) = (alg_h.is_orthogonal(&f.coords(u)), alg_g.is_orthogonal(c));
        if orth_u && !orth_r {
            return Ok(Some(format!("orthogonal unit {i} restricts to a non-orthogonal unit")));
        }
        if phi.is_surjective() && orth_r && !orth_u {
            return Ok(Some(format!("unit {i} is not orthogonal but its restriction is")));
        }
        for (j, v) in units.iter().enumerate() {
            if f.act(&r, &f.mul(u, v)?)? != f.mul(ru, &images[j])? {
                return Ok(Some(format!("restriction not multiplicative on units {i}, {j}")));
            }
            if phi.is_surjective() && i < j && coords[i] == coords[j] {
                return Ok(Some(format!("units {i} and {j} have the same restriction")));
            }
        }
    }
    Ok(None)
}
