use super::*;
use crate::biset::{burnside_units, res};
use crate::category::{cat_compose, cat_identity, double_algebra, endo_inverse, tilde};
use crate::green::MatrixElement;
use crate::group::{quotient, GroupHom, Subgroup};
use crate::scalar::int;

fn g(name: &str) -> FiniteGroup {
    builtin_catalog().require(name).unwrap()
}

fn sb() -> StarGreenFunctor<Burnside> {
    make_star_burnside().unwrap()
}

fn sm2() -> StarGreenFunctor<MatrixFunctor<Burnside>> {
    make_star_matrix(&sb(), 2).unwrap()
}

fn c2_unit() -> BurnsideElement {
    let c2 = g("C2");
    let free = BurnsideElement::basis(&c2, &FiniteGroup::trivial(), 0, Ring::Integers).unwrap();
    free.sub(&Burnside.one(&c2, Ring::Integers).unwrap()).unwrap()
}

#[test]
fn matrix_star_is_transpose() {
    let s = sm2();
    let one = FiniteGroup::trivial();
    let eps = Burnside.epsilon(Ring::Integers);
    let m = s.base().clone();
    assert_eq!(s.star(&m.elementary(0, 1, &eps)).unwrap(), m.elementary(1, 0, &eps));
    for a in m.basis(&one, Ring::Integers) {
        assert_eq!(s.star(&a).unwrap(), a.transpose());
    }
}

#[test]
fn constructors_reject_non_involutions() {
    let m2 = sm2().base().clone();
    let entrywise = StarGreenFunctor::new(m2.clone(), |a: &MatrixElement<BurnsideElement>| Ok(a.clone()));
    assert!(entrywise.is_err());
    let mm = MatrixFunctor::new(m2, 2).unwrap();
    let plain_transpose =
        StarGreenFunctor::new(mm, |a: &MatrixElement<MatrixElement<BurnsideElement>>| Ok(a.transpose()));
    let err = plain_transpose.unwrap_err().to_string();
    assert!(err.contains("not an anti-involution"), "{err}");
    assert!(make_star_matrix(&sm2(), 2).is_ok());
}

#[test]
fn literal_cross_identity_needs_commuting_factors() {
    // a^⋆×b = (a×b^⋆)^⋆ holds for B but not for M2(B).
    let (c2, c3) = (g("C2"), g("C3"));
    let b = sb();
    for x in Burnside.basis(&c2, Ring::Integers) {
        for y in Burnside.basis(&c3, Ring::Integers) {
            let lhs = Burnside.cross(&b.star(&x).unwrap(), &y).unwrap();
            let rhs = b.star(&Burnside.cross(&x, &b.star(&y).unwrap()).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    let s = sm2();
    let m = s.base().clone();
    let eps = Burnside.epsilon(Ring::Integers);
    let (a, b) = (m.elementary(0, 0, &eps), m.elementary(0, 1, &eps));
    let lhs = m.cross(&s.star(&a).unwrap(), &b).unwrap();
    let rhs = s.star(&m.cross(&a, &s.star(&b).unwrap()).unwrap()).unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn bullet_properties() {
    let s = sb();
    let groups = [FiniteGroup::trivial(), g("C2"), g("C3")];
    for x in &groups {
        let id = cat_identity(&Burnside, x, Ring::Integers).unwrap();
        assert_eq!(bullet(&s, &id).unwrap(), id);
        for y in &groups {
            for alpha in hom_basis(&Burnside, x, y, Ring::Integers) {
                let b = bullet(&s, &alpha).unwrap();
                let as_biset = alpha.value().arrow_inverse(y, x).unwrap();
                assert_eq!(b.value().arrow_inverse(x, y).unwrap(), as_biset.opposite());
            }
        }
        for a in Burnside.basis(x, Ring::Integers) {
            assert_eq!(tilde(&Burnside, &s.star(&a).unwrap()).unwrap(), bullet(&s, &tilde(&Burnside, &a).unwrap()).unwrap());
        }
    }
    let s = sm2();
    let m = s.base().clone();
    for a in m.basis(&g("C2"), Ring::Integers).into_iter().step_by(3) {
        let lhs = tilde(&m, &s.star(&a).unwrap()).unwrap();
        assert_eq!(lhs, bullet(&s, &tilde(&m, &a).unwrap()).unwrap());
    }
}

#[test]
fn theorem_conditions() {
    let window = [FiniteGroup::trivial(), g("C2"), g("C3")];
    let rb = theorem_equivalence_check(&sb(), &window, 4, Ring::Integers).unwrap();
    assert!(rb.passed(), "{:?}", rb.failures);
    assert!(rb.involution_checked > 0 && rb.contravariance_checked > 0);
    let small = [FiniteGroup::trivial(), g("C2")];
    let rm = theorem_equivalence_check(&sm2(), &small, 2, Ring::Integers).unwrap();
    assert!(rm.passed(), "{:?}", rm.failures);
    let bad = sb().corrupted(0);
    assert!(bad.validate(&window, Ring::Integers).unwrap().is_some());
    let rbad = theorem_equivalence_check(&bad, &small, 2, Ring::Integers).unwrap();
    assert!(!rbad.passed());
}

#[test]
fn real_and_imaginary_parts() {
    let s = sm2();
    let m = s.base().clone();
    let c2 = g("C2");
    let a = m.basis(&c2, Ring::Integers)[1].clone();
    assert_eq!(re_part(&s, &a), Err(Error::RequiresRationals));
    for a in m.basis(&c2, Ring::Rationals) {
        let (re, im) = (re_part(&s, &a).unwrap(), im_part(&s, &a).unwrap());
        assert_eq!(re.add(&im).unwrap(), a);
        assert_eq!(s.star(&re).unwrap(), re);
        assert_eq!(s.star(&im).unwrap(), im.neg());
        assert_eq!(re_part(&s, &re).unwrap(), re);
        assert!(re_part(&s, &im).unwrap().is_zero());
    }
    let eps = Burnside.epsilon(Ring::Rationals);
    let e01 = m.elementary(0, 1, &eps);
    let half = e01.add(&m.elementary(1, 0, &eps)).unwrap().scale(&Scalar::new(1, 2)).unwrap();
    assert_eq!(re_part(&s, &e01).unwrap(), half);
    let b = sb();
    for x in Burnside.basis(&c2, Ring::Rationals) {
        assert_eq!(re_part(&b, &x).unwrap(), x);
        assert!(im_part(&b, &x).unwrap().is_zero());
    }
}

#[test]
fn initial_morphism_lands_in_real_part() {
    let window = [FiniteGroup::trivial(), g("C2")];
    let e = GreenMorphism::initial(Burnside);
    assert_eq!(e_fixed_check(&sb(), &e, &window, 2, Ring::Integers).unwrap(), None);
    let s = sm2();
    let em = GreenMorphism::initial(s.base().clone());
    assert_eq!(e_fixed_check(&s, &em, &window, 2, Ring::Integers).unwrap(), None);
    let m = s.base().clone();
    let bad = GreenMorphism::new("e'", Burnside, m.clone(), move |x: &BurnsideElement| Ok(m.elementary(0, 1, x)));
    assert!(e_fixed_check(&s, &bad, &window, 2, Ring::Integers).unwrap().is_some());
}

#[test]
fn orthogonal_units_examples() {
    let s = sb();
    let one = FiniteGroup::trivial();
    let r = orthogonal_units_burnside(&s, &one, 1).unwrap();
    assert_eq!(r.elements, vec![vec![int(-1)], vec![int(1)]]);
    let c2 = g("C2");
    let r = orthogonal_units_burnside(&s, &c2, 2).unwrap();
    assert_eq!(r.elements.len(), 4);
    assert!(r.elements.contains(&c2_unit().coords()));
    assert!(r.group_table_verified);
    let m1 = make_star_matrix(&s, 1).unwrap();
    for grp in [one, c2, g("C3"), g("C4"), g("V4"), g("S3")] {
        let exact = orthogonal_units_burnside(&s, &grp, 2).unwrap();
        let bounded = orthogonal_units(&m1, &grp, 2, Ring::Integers).unwrap();
        let generic = orthogonal_units(&s, &grp, 2, Ring::Integers).unwrap();
        assert_eq!(bounded.elements, generic.elements);
        let within: Vec<_> = exact
            .elements
            .iter()
            .filter(|c| crate::scalar::max_abs(c) <= int(2))
            .cloned()
            .collect();
        assert_eq!(bounded.elements, within, "{grp}");
        assert!(bounded.group_table_verified);
    }
    let json = orthogonal_units(&s, &g("C2"), 1, Ring::Integers).unwrap().to_json();
    assert_eq!(json["completeWithinBound"], true);
    assert_eq!(json["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn orthogonal_automorphism_search() {
    let s = sb();
    let one = FiniteGroup::trivial();
    let (r, _) = orthogonal_automorphisms(&s, &one, 1, Ring::Integers).unwrap();
    assert_eq!(r.elements, vec![vec![int(-1)], vec![int(1)]]);
    let c2 = g("C2");
    let (r, auts) = orthogonal_automorphisms(&s, &c2, 2, Ring::Integers).unwrap();
    assert!(r.group_table_verified);
    // products of these leave the coefficient box
    assert!(!r.closed_under_products);
    assert_eq!(r.elements.len(), 12);
    let id = cat_identity(&Burnside, &c2, Ring::Integers).unwrap();
    let tu = tilde(&Burnside, &c2_unit()).unwrap();
    for w in [id.clone(), id.neg(), tu.clone(), tu.neg()] {
        assert!(auts.contains(&w));
    }
    for u in burnside_units(&c2).unwrap() {
        assert!(auts.contains(&tilde(&Burnside, &u).unwrap()));
    }
    for w in &auts {
        let inv = endo_inverse(&Burnside, w).unwrap().unwrap();
        assert_eq!(inv, bullet(&s, w).unwrap());
        for v in &auts {
            let wv = cat_compose(&Burnside, w, v).unwrap();
            assert_eq!(endo_inverse(&Burnside, &wv).unwrap().unwrap(), bullet(&s, &wv).unwrap());
        }
    }
}

#[test]
fn restriction_of_units() {
    let s = sb();
    let s3 = g("S3");
    let (q, sign) = quotient(&s3, &Subgroup::new(&s3, [0, 3, 4]).unwrap()).unwrap();
    let units = burnside_units(&q).unwrap();
    assert_eq!(restriction_transfer_check(&s, &sign, &units, Ring::Integers).unwrap(), None);
    let images: Vec<_> = units.iter().map(|u| restrict_unit(&s, &sign, u).unwrap()).collect();
    let s3_units = burnside_units(&s3).unwrap();
    for (u, r) in units.iter().zip(&images) {
        assert!(s3_units.contains(r));
        assert_eq!(r, &Burnside.act(&res(&sign), u).unwrap());
    }
    let c2 = g("C2");
    let id = GroupHom::identity(&c2);
    for u in burnside_units(&c2).unwrap() {
        assert_eq!(restrict_unit(&s, &id, &u).unwrap(), u);
    }
    let not_unit = BurnsideElement::basis(&c2, &FiniteGroup::trivial(), 0, Ring::Integers).unwrap();
    assert_eq!(restrict_unit(&s, &id, &not_unit), Err(Error::NotInvertible));
}

#[test]
fn dainf_properties() {
    let s = sb();
    let c4 = g("C4");
    let c2sub = Subgroup::new(&c4, [0, 2]).unwrap();
    let triv = Subgroup::trivial(&c4);
    let (q, _) = quotient(&c4, &c2sub).unwrap();
    let id_q = cat_identity(&Burnside, &q, Ring::Integers).unwrap();
    let id_g = cat_identity(&Burnside, &c4, Ring::Integers).unwrap();
    assert_eq!(dainf(&Burnside, &c4, &c2sub, &id_q).unwrap(), id_g);
    let minus = dainf(&Burnside, &c4, &c2sub, &id_q.neg()).unwrap();
    assert!(endo_inverse(&Burnside, &minus).unwrap().is_some());
    assert_eq!(cat_compose(&Burnside, &minus, &minus).unwrap(), id_g);
    assert!(dainf(&Burnside, &c4, &c2sub, &zero_like(&id_q)).is_err());

    let (_, auts) = orthogonal_automorphisms(&s, &q, 2, Ring::Integers).unwrap();
    let images: Vec<_> = auts.iter().map(|w| dainf(&Burnside, &c4, &c2sub, w).unwrap()).collect();
    for (w, d) in auts.iter().zip(&images) {
        assert_eq!(dainf(&Burnside, &c4, &c2sub, &bullet(&s, w).unwrap()).unwrap(), bullet(&s, d).unwrap());
        let inv = endo_inverse(&Burnside, d).unwrap().unwrap();
        assert_eq!(inv, bullet(&s, d).unwrap());
        assert!(dainf_transitivity_check(&Burnside, &c4, &triv, &c2sub, w).unwrap());
        for (v, e) in auts.iter().zip(&images) {
            let wv = cat_compose(&Burnside, w, v).unwrap();
            assert_eq!(dainf(&Burnside, &c4, &c2sub, &wv).unwrap(), cat_compose(&Burnside, d, e).unwrap());
        }
    }
    for (i, a) in images.iter().enumerate() {
        for b in &images[i + 1..] {
            assert_ne!(a, b);
        }
    }
    let c2 = g("C2");
    let (q1, p1) = quotient(&c2, &Subgroup::trivial(&c2)).unwrap();
    for w in orthogonal_automorphisms(&s, &q1, 2, Ring::Integers).unwrap().1 {
        assert_eq!(
            dainf(&Burnside, &c2, &Subgroup::trivial(&c2), &w).unwrap(),
            double_algebra(&Burnside, &res(&p1), &w).unwrap()
        );
    }
}

fn zero_like(a: &CatMorphism<BurnsideElement>) -> CatMorphism<BurnsideElement> {
    a.sub(a).unwrap()
}

#[test]
fn star_morphism_squares() {
    let window = [FiniteGroup::trivial(), g("C2")];
    let c4 = g("C4");
    let quotients = vec![(c4.clone(), Subgroup::new(&c4, [0, 2]).unwrap())];
    let s = sb();
    let idm = GreenMorphism::identity(Burnside);
    let f = star_morphism_diagrams(&s, &s, &idm, &window, &quotients, 2, 2, Ring::Integers).unwrap();
    assert!(f.is_empty(), "{f:?}");
    let diag = GreenMorphism::diagonal(Burnside, 2).unwrap();
    let f = star_morphism_diagrams(&s, &sm2(), &diag, &window, &quotients, 2, 2, Ring::Integers).unwrap();
    assert!(f.is_empty(), "{f:?}");
    let m = sm2().base().clone();
    let broken = GreenMorphism::new("diag'", Burnside, m.clone(), move |x: &BurnsideElement| {
        let d = m.scalar_matrix(x);
        d.add(&m.elementary(0, 1, x))
    });
    let f = star_morphism_diagrams(&s, &sm2(), &broken, &window, &[], 2, 1, Ring::Integers).unwrap();
    assert!(!f.is_empty());
}
