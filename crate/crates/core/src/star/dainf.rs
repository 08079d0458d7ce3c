use super::{bullet, orthogonal_automorphisms, orthogonal_units, StarGreenFunctor};
use crate::biset::{iso, res};
use crate::category::{
    cat_identity, double_algebra, endo_inverse, hom_basis, hom_pairs, induced_functor, tilde, CatMorphism,
};
use crate::error::{Error, Result};
use crate::green::{GreenFunctor, GreenMorphism};
use crate::group::{quotient, FiniteGroup, GroupHom, Subgroup};
use crate::scalar::Ring;

/// `dAInf_{G/N}^G(ω) = Id_G + E_A(Inf_{G/N}^G)(ω − Id_{G/N})` for an
/// automorphism `ω` of `G/N` in `P_A`.
pub fn dainf<A: GreenFunctor>(
    f: &A,
    g: &FiniteGroup,
    n: &Subgroup,
    omega: &CatMorphism<A::Elem>,
) -> Result<CatMorphism<A::Elem>> {
    let (q, pi) = quotient(g, n)?;
    if omega.source() != &q || omega.target() != &q {
        return Err(Error::GroupMismatch {
            expected: format!("{q} → {q}"),
            found: format!("{} → {}", omega.source(), omega.target()),
        });
    }
    if endo_inverse(f, omega)?.is_none() {
        return Err(Error::NotInvertible);
    }
    let ring = omega.ring();
    let shifted = omega.sub(&cat_identity(f, &q, ring)?)?;
    let correction = double_algebra(f, &res(&pi), &shifted)?;
    cat_identity(f, g, ring)?.add(&correction)
}

/// `dAInf_{G/N}^G ∘ dAInf_{G/M}^{G/N} = dAInf_{G/M}^G` for `N ≤ M` normal,
/// with `G/M` identified with `(G/N)/(M/N)`.
pub fn dainf_transitivity_check<A: GreenFunctor>(
    f: &A,
    g: &FiniteGroup,
    n: &Subgroup,
    m: &Subgroup,
    omega: &CatMorphism<A::Elem>,
) -> Result<bool> {
    if !n.is_subgroup_of(m) {
        return Err(Error::InvalidArgument("expected N ≤ M".into()));
    }
    let (qn, pn) = quotient(g, n)?;
    let (qm, pm) = quotient(g, m)?;
    let mut mbar: Vec<u32> = m.elements().iter().map(|&x| pn.apply(x)).collect();
    mbar.sort_unstable();
    mbar.dedup();
    let mbar = Subgroup::new(&qn, mbar)?;
    let (qnm, pnm) = quotient(&qn, &mbar)?;
    let mut theta = vec![0u32; qm.order()];
    for x in g.elements() {
        theta[pm.apply(x) as usize] = pnm.apply(pn.apply(x));
    }
    let theta = GroupHom::new(&qm, &qnm, theta)?;
    let moved = double_algebra(f, &iso(&theta)?, omega)?;
    let inner = dainf(f, &qn, &mbar, &moved)?;
    Ok(dainf(f, g, n, &inner)? == dainf(f, g, m, omega)?)
}

/// Compatibility of a morphism `f: A → C` of star functors with the star
/// constructions: `f(a^⋆) = f(a)^⋆` on window bases, `P_f(α^•) = P_f(α)^•`
/// on hom-set bases with `|H×G| ≤ max_order`, tilde on bounded orthogonal
/// units of each window group, and dAInf on bounded orthogonal automorphisms
/// of each `G/N` in `quotients`. Returns every failure.
#[allow(clippy::too_many_arguments)]
pub fn star_morphism_diagrams<A: GreenFunctor, C: GreenFunctor>(
    sa: &StarGreenFunctor<A>,
    sc: &StarGreenFunctor<C>,
    fm: &GreenMorphism<A, C>,
    window: &[FiniteGroup],
    quotients: &[(FiniteGroup, Subgroup)],
    max_order: usize,
    bound: u32,
    ring: Ring,
) -> Result<Vec<String>> {
    let (a, c) = (sa.base(), sc.base());
    let mut failures = Vec::new();
    for g in window {
        for (i, x) in a.basis(g, ring).iter().enumerate() {
            if fm.apply(&sa.star(x)?)? != sc.star(&fm.apply(x)?)? {
                failures.push(format!("{}: f(b{i}^⋆) ≠ f(b{i})^⋆ at {g}", fm.name()));
            }
        }
        let units = orthogonal_units(sa, g, bound, ring)?;
        for (i, coords) in units.elements.iter().enumerate() {
            let u = a.from_coords(g, ring, coords)?;
            let lhs = induced_functor(fm, &tilde(a, &u)?)?;
            if lhs != tilde(c, &fm.apply(&u)?)? {
                failures.push(format!("{}: tilde square fails at orthogonal unit {i} of {g}", fm.name()));
            }
        }
    }
    for (g, h) in hom_pairs(window, max_order) {
        for (i, alpha) in hom_basis(a, &g, &h, ring).iter().enumerate() {
            let lhs = induced_functor(fm, &bullet(sa, alpha)?)?;
            if lhs != bullet(sc, &induced_functor(fm, alpha)?)? {
                failures.push(format!("{}: P_f(α^•) ≠ P_f(α)^• at basis {i} of Hom({g},{h})", fm.name()));
            }
        }
    }
    for (g, n) in quotients {
        let (q, _) = quotient(g, n)?;
        let (_, auts) = orthogonal_automorphisms(sa, &q, bound, ring)?;
        for (i, omega) in auts.iter().enumerate() {
            let lhs = induced_functor(fm, &dainf(a, g, n, omega)?)?;
            if lhs != dainf(c, g, n, &induced_functor(fm, omega)?)? {
                failures.push(format!("{}: dAInf square fails at automorphism {i} of {q}", fm.name()));
            }
        }
    }
    Ok(failures)
}
