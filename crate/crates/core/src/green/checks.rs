use super::GreenFunctor;
use crate::biset::{ind, iso, res, BurnsideElement};
use crate::error::Result;
use crate::group::{diagonal, direct_product, projection, swap, GroupHom};
use crate::scalar::Ring;

/// `e_G(x) = A(x)(ε_A)` for `x ∈ B(G, 1)`.
pub fn initial_morphism<A: GreenFunctor>(a: &A, x: &BurnsideElement) -> Result<A::Elem> {
    a.act(x, &a.epsilon(x.ring()))
}

/// Both Frobenius identities for `φ: G → H`, `a ∈ A(H)`, `b ∈ A(G)`.
pub fn frobenius_check<A: GreenFunctor>(
    f: &A,
    phi: &GroupHom,
    a: &A::Elem,
    b: &A::Elem,
) -> Result<bool> {
    let (i, r) = (ind(phi), res(phi));
    let ind_b = f.act(&i, b)?;
    let res_a = f.act(&r, a)?;
    let left = f.mul(a, &ind_b)? == f.act(&i, &f.mul(&res_a, b)?)?;
    let right = f.mul(&ind_b, a)? == f.act(&i, &f.mul(b, &res_a)?)?;
    Ok(left && right)
}

/// `A(Res(φ))` is unital and multiplicative on basis pairs of `A(H)`.
pub fn res_is_algebra_hom_check<A: GreenFunctor>(f: &A, phi: &GroupHom, ring: Ring) -> Result<bool> {
    let r = res(phi);
    let (g, h) = (phi.source(), phi.target());
    if f.act(&r, &f.one(h, ring)?)? != f.one(g, ring)? {
        return Ok(false);
    }
    let basis = f.basis(h, ring);
    let images: Vec<A::Elem> = basis.iter().map(|a| f.act(&r, a)).collect::<Result<_>>()?;
    for (a, ra) in basis.iter().zip(&images) {
        for (b, rb) in basis.iter().zip(&images) {
            if f.act(&r, &f.mul(a, b)?)? != f.mul(ra, rb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `a × b = A(Inf_G^{G×H})(a) · A(Inf_H^{G×H})(b)`.
pub fn cross_via_mul<A: GreenFunctor>(f: &A, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
    let (g, h) = (f.group_of(a), f.group_of(b));
    let gh = direct_product(&[g, h]);
    let inf_g = res(&projection(&gh, 0)?);
    let inf_h = res(&projection(&gh, 1)?);
    f.mul(&f.act(&inf_g, a)?, &f.act(&inf_h, b)?)
}

/// `ab = A(Res(Δ))(a × b)`.
pub fn mul_via_cross<A: GreenFunctor>(f: &A, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
    let g = f.group_of(a);
    f.act(&res(&diagonal(&g)), &f.cross(a, b)?)
}

/// `a × b = A(Iso(τ_{H,G}))(b × a)` for every witness `b`. Necessary for
/// membership of `a` in the commutant, not sufficient.
pub fn commutant_check<A: GreenFunctor>(f: &A, a: &A::Elem, witnesses: &[A::Elem]) -> Result<bool> {
    let g = f.group_of(a);
    for b in witnesses {
        let h = f.group_of(b);
        let lhs = f.cross(a, b)?;
        let rhs = f.act(&iso(&swap(&h, &g))?, &f.cross(b, a)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
