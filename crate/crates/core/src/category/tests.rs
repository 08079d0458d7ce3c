use super::*;
use crate::biset::{identity_element, res, BurnsideElement};
use crate::green::{Burnside, MatrixFunctor, Opposite};
use crate::group::{builtin_catalog, projection, quotient, GroupHom, Subgroup};
use crate::scalar::int;

fn g(name: &str) -> FiniteGroup {
    builtin_catalog().require(name).unwrap()
}

fn m2() -> MatrixFunctor<Burnside> {
    MatrixFunctor::new(Burnside, 2).unwrap()
}

fn small() -> Vec<FiniteGroup> {
    vec![FiniteGroup::trivial(), g("C2"), g("C3")]
}

fn as_biset(a: &CatMorphism<BurnsideElement>) -> BurnsideElement {
    a.value().arrow_inverse(a.target(), a.source()).unwrap()
}

#[test]
fn burnside_composition_matches_mackey() {
    let groups = small();
    for gg in &groups {
        for h in &groups {
            for k in &groups {
                let betas = hom_basis(&Burnside, gg, h, Ring::Integers);
                for alpha in hom_basis(&Burnside, h, k, Ring::Integers) {
                    for beta in &betas {
                        let c = cat_compose(&Burnside, &alpha, beta).unwrap();
                        assert_eq!(as_biset(&c), as_biset(&alpha).compose(&as_biset(beta)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn identities() {
    for grp in [FiniteGroup::trivial(), g("C2"), g("S3")] {
        let id = cat_identity(&Burnside, &grp, Ring::Integers).unwrap();
        assert_eq!(as_biset(&id), identity_element(&grp));
        let delta = diagonal(&grp).image_subgroup();
        let class = BurnsideElement::transitive(&grp, &grp, &delta, Ring::Integers).unwrap();
        assert_eq!(id.value(), &class.arrow());
        assert_eq!(cat_compose(&Burnside, &id, &id).unwrap(), id);
        let mid = cat_identity(&m2(), &grp, Ring::Integers).unwrap();
        assert_eq!(mid.value(), &m2().scalar_matrix(id.value()));
    }
    let c2 = g("C2");
    let id = cat_identity(&m2(), &c2, Ring::Integers).unwrap();
    for beta in hom_basis(&m2(), &FiniteGroup::trivial(), &c2, Ring::Integers) {
        assert_eq!(cat_compose(&m2(), &id, &beta).unwrap(), beta);
    }
}

#[test]
fn matrix_composition_is_associative() {
    let (one, c2) = (FiniteGroup::trivial(), g("C2"));
    let f = m2();
    let a: Vec<_> = hom_basis(&f, &c2, &one, Ring::Integers).into_iter().step_by(3).collect();
    let b: Vec<_> = hom_basis(&f, &c2, &c2, Ring::Integers).into_iter().step_by(7).collect();
    let c: Vec<_> = hom_basis(&f, &one, &c2, Ring::Integers).into_iter().step_by(2).collect();
    for x in &a {
        for y in &b {
            for z in &c {
                let l = cat_compose(&f, &cat_compose(&f, x, y).unwrap(), z).unwrap();
                let r = cat_compose(&f, x, &cat_compose(&f, y, z).unwrap()).unwrap();
                assert_eq!(f.coords(l.value()), f.coords(r.value()));
            }
        }
    }
}

#[test]
fn tilde_is_an_injective_algebra_map() {
    for grp in [g("C2"), g("C3"), g("S3")] {
        let one = Burnside.one(&grp, Ring::Integers).unwrap();
        assert_eq!(tilde(&Burnside, &one).unwrap(), cat_identity(&Burnside, &grp, Ring::Integers).unwrap());
        let gg = direct_product(&[grp.clone(), grp.clone()]);
        let retract = ind(&projection(&gg, 0).unwrap());
        let basis = Burnside.basis(&grp, Ring::Integers);
        for a in &basis {
            let ta = tilde(&Burnside, a).unwrap();
            assert_eq!(&Burnside.act(&retract, ta.value()).unwrap(), a);
            for b in &basis {
                let ab = Burnside.mul(a, b).unwrap();
                let tb = tilde(&Burnside, b).unwrap();
                assert_eq!(cat_compose(&Burnside, &ta, &tb).unwrap(), tilde(&Burnside, &ab).unwrap());
                assert_eq!(Burnside.act(&as_biset(&ta), b).unwrap(), ab);
                assert!(tilde_cross_check(&Burnside, a, b).unwrap());
            }
        }
    }
    let c2 = g("C2");
    let free = BurnsideElement::basis(&c2, &FiniteGroup::trivial(), 0, Ring::Integers).unwrap();
    let t = tilde(&Burnside, &free).unwrap();
    assert_eq!(
        cat_compose(&Burnside, &t, &t).unwrap(),
        tilde(&Burnside, &free.scale(&int(2)).unwrap()).unwrap()
    );
    let f = m2();
    let basis: Vec<_> = f.basis(&c2, Ring::Integers).into_iter().step_by(3).collect();
    for a in &basis {
        for b in &basis {
            let lhs = cat_compose(&f, &tilde(&f, a).unwrap(), &tilde(&f, b).unwrap()).unwrap();
            assert_eq!(lhs, tilde(&f, &f.mul(a, b).unwrap()).unwrap());
            assert!(tilde_cross_check(&f, a, b).unwrap());
        }
    }
}

fn window_homs() -> Vec<GroupHom> {
    let (c2, c4, s3) = (g("C2"), g("C4"), g("S3"));
    let incl = GroupHom::new(&c2, &c4, vec![0, 2]).unwrap();
    let (_, surj) = quotient(&c4, &Subgroup::new(&c4, [0, 2]).unwrap()).unwrap();
    let (_, sign) = quotient(&s3, &Subgroup::new(&s3, [0, 3, 4]).unwrap()).unwrap();
    vec![incl, surj, sign, GroupHom::identity(&c2)]
}

#[test]
fn double_algebra_maps() {
    let c2 = g("C2");
    let id2 = identity_element(&c2);
    for alpha in hom_basis(&Burnside, &c2, &c2, Ring::Integers) {
        assert_eq!(double_algebra(&Burnside, &id2, &alpha).unwrap(), alpha);
    }
    for phi in window_homs() {
        let x = ind(&phi);
        for a in Burnside.basis(phi.source(), Ring::Integers) {
            let lhs = tilde(&Burnside, &Burnside.act(&x, &a).unwrap()).unwrap();
            let rhs = double_algebra(&Burnside, &x, &tilde(&Burnside, &a).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{phi:?}");
        }
        let f = m2();
        for a in f.basis(phi.source(), Ring::Integers).into_iter().step_by(3) {
            let lhs = tilde(&f, &f.act(&x, &a).unwrap()).unwrap();
            assert_eq!(lhs, double_algebra(&f, &x, &tilde(&f, &a).unwrap()).unwrap());
        }
    }
    let virtual_x = id2.neg();
    let alpha = cat_identity(&Burnside, &c2, Ring::Integers).unwrap();
    assert!(double_algebra(&Burnside, &virtual_x, &alpha).is_err());
}

#[test]
fn double_algebra_is_functorial() {
    let (one, c2) = (FiniteGroup::trivial(), g("C2"));
    let groups = [one.clone(), c2.clone()];
    for gg in &groups {
        let alphas = hom_basis(&Burnside, gg, gg, Ring::Integers);
        for h in &groups {
            for k in &groups {
                for x in BurnsideElement::basis_elements(h, gg, Ring::Integers) {
                    for y in BurnsideElement::basis_elements(k, h, Ring::Integers) {
                        let yx = y.compose(&x).unwrap();
                        for alpha in &alphas {
                            let lhs = double_algebra(&Burnside, &yx, alpha).unwrap();
                            let inner = double_algebra(&Burnside, &x, alpha).unwrap();
                            assert_eq!(lhs, double_algebra(&Burnside, &y, &inner).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_double_algebra_is_injective_and_multiplicative() {
    let c4 = g("C4");
    let (q, pi) = quotient(&c4, &Subgroup::new(&c4, [0, 2]).unwrap()).unwrap();
    let x = res(&pi);
    let basis = hom_basis(&Burnside, &q, &q, Ring::Integers);
    let images: Vec<_> = basis.iter().map(|a| double_algebra(&Burnside, &x, a).unwrap()).collect();
    let rows: Vec<Vec<_>> = images.iter().map(|i| Burnside.coords(i.value())).collect();
    assert_eq!(crate::linalg::rank(&rows), basis.len());
    for (a, ea) in basis.iter().zip(&images) {
        for (b, eb) in basis.iter().zip(&images) {
            let ab = double_algebra(&Burnside, &x, &cat_compose(&Burnside, a, b).unwrap()).unwrap();
            assert_eq!(ab, cat_compose(&Burnside, ea, eb).unwrap());
        }
    }
}

#[test]
fn end_algebra_inverses() {
    let c2 = g("C2");
    let end = EndAlgebra::new(&Burnside, &c2, Ring::Integers).unwrap();
    assert_eq!(end.dim(), 5);
    let id = cat_identity(&Burnside, &c2, Ring::Integers).unwrap();
    assert_eq!(endo_inverse(&Burnside, &id).unwrap(), Some(id.clone()));
    let free = BurnsideElement::basis(&c2, &FiniteGroup::trivial(), 0, Ring::Integers).unwrap();
    let u = free.sub(&Burnside.one(&c2, Ring::Integers).unwrap()).unwrap();
    let tu = tilde(&Burnside, &u).unwrap();
    assert_eq!(cat_compose(&Burnside, &tu, &tu).unwrap(), id);
    assert_eq!(end.inverse(&tu).unwrap(), Some(tu.clone()));
    assert_eq!(end.inverse(&zero_morphism(&Burnside, &c2, &c2, Ring::Integers)).unwrap(), None);
    let two = id.scale(&int(2)).unwrap();
    assert_eq!(end.inverse(&two).unwrap(), None);
    let rat = EndAlgebra::new(&Burnside, &c2, Ring::Rationals).unwrap();
    let two_q = cat_identity(&Burnside, &c2, Ring::Rationals).unwrap().scale(&int(2)).unwrap();
    let half = rat.inverse(&two_q).unwrap().unwrap();
    assert_eq!(cat_compose(&Burnside, &half, &two_q).unwrap(), cat_identity(&Burnside, &c2, Ring::Rationals).unwrap());
    let json = end.to_json();
    assert_eq!(json["dim"], 5);
    assert_eq!(json["compositionTable"].as_array().unwrap().len(), 5);
}

#[test]
fn t_reverses_composition() {
    let groups = small();
    let f = m2();
    let bop = Opposite::new(Burnside);
    let mop = Opposite::new(f.clone());
    for gg in &groups {
        let id = cat_identity(&bop, gg, Ring::Integers).unwrap();
        assert_eq!(t_iso(&Burnside, &id).unwrap(), cat_identity(&Burnside, gg, Ring::Integers).unwrap());
        for h in &groups {
            for alpha in hom_basis(&Burnside, gg, h, Ring::Integers) {
                assert_eq!(t_iso_inverse(&Burnside, &t_iso(&Burnside, &alpha).unwrap()).unwrap(), alpha);
            }
            for k in &groups {
                let betas = hom_basis(&Burnside, gg, h, Ring::Integers);
                for alpha in hom_basis(&Burnside, h, k, Ring::Integers) {
                    for beta in &betas {
                        let lhs = t_iso(&Burnside, &cat_compose(&bop, &alpha, beta).unwrap()).unwrap();
                        let rhs = cat_compose(
                            &Burnside,
                            &t_iso(&Burnside, beta).unwrap(),
                            &t_iso(&Burnside, &alpha).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                let betas: Vec<_> = hom_basis(&f, gg, h, Ring::Integers).into_iter().step_by(3).collect();
                for alpha in hom_basis(&f, h, k, Ring::Integers).into_iter().step_by(2) {
                    for beta in &betas {
                        let lhs = t_iso(&f, &cat_compose(&mop, &alpha, beta).unwrap()).unwrap();
                        let rhs = cat_compose(&f, &t_iso(&f, beta).unwrap(), &t_iso(&f, &alpha).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn induced_functors() {
    let groups = small();
    let diag = GreenMorphism::diagonal(Burnside, 2).unwrap();
    let idm = GreenMorphism::identity(Burnside);
    for gg in &groups {
        let id = cat_identity(&Burnside, gg, Ring::Integers).unwrap();
        assert_eq!(induced_functor(&diag, &id).unwrap(), cat_identity(&m2(), gg, Ring::Integers).unwrap());
        for h in &groups {
            for beta in hom_basis(&Burnside, gg, h, Ring::Integers) {
                assert_eq!(induced_functor(&idm, &beta).unwrap(), beta);
                for alpha in hom_basis(&Burnside, h, &groups[1], Ring::Integers) {
                    let lhs = induced_functor(&diag, &cat_compose(&Burnside, &alpha, &beta).unwrap()).unwrap();
                    let rhs = cat_compose(
                        &m2(),
                        &induced_functor(&diag, &alpha).unwrap(),
                        &induced_functor(&diag, &beta).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn lift_criterion() {
    let homs = hom_pairs(&[FiniteGroup::trivial(), g("C2")], 2);
    let diag = GreenMorphism::diagonal(Burnside, 2).unwrap();
    let pf = |a: &CatMorphism<BurnsideElement>| induced_functor(&diag, a);
    assert_eq!(lift_criterion_check(&Burnside, &m2(), pf, &homs, Ring::Integers).unwrap(), None);
    let c2 = g("C2");
    let scaled = |a: &CatMorphism<BurnsideElement>| {
        if a.source() == &c2 {
            a.scale(&int(2))
        } else {
            Ok(a.clone())
        }
    };
    assert!(lift_criterion_check(&Burnside, &Burnside, scaled, &homs, Ring::Integers)
        .unwrap()
        .is_some());
}
