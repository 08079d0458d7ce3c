use rand::seq::SliceRandom;

use super::{attempt, run_check, CheckResult, Coverage, VerifyConfig};
use crate::biset::{identity_element, iso, marks, BurnsideElement};
use crate::green::{
    commutant_check, cross_via_mul, frobenius_check, mul_via_cross, res_is_algebra_hom_check,
    Burnside, GreenFunctor, GreenMorphism, MatrixFunctor, Opposite,
};
use crate::group::{all_homomorphisms, direct_product, regroup, FiniteGroup, GroupHom};
use crate::scalar::Ring;

const Z: Ring = Ring::Integers;

/// Every homomorphism between window groups.
pub(super) fn window_homs(w: &[FiniteGroup]) -> Vec<GroupHom> {
    w.iter()
        .flat_map(|g| w.iter().flat_map(move |h| all_homomorphisms(g, h)))
        .collect()
}

pub(super) fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let m2 = MatrixFunctor::new(Burnside, 2).expect("n = 2");
    functor_checks(&mut out, &Burnside, cfg, 10);
    functor_checks(&mut out, &m2, cfg, 20);
    functor_checks(&mut out, &Opposite::new(Burnside), cfg, 30);
    functor_checks(&mut out, &Opposite::new(m2.clone()), cfg, 40);
    let w = &cfg.window;

    run_check(&mut out, "B: marks-multiplicative", Coverage::Exhaustive, |t| {
        for g in w {
            let basis = Burnside.basis(g, Z);
            for (i, a) in basis.iter().enumerate() {
                let ma = marks(a)?;
                for (j, b) in basis.iter().enumerate() {
                    let mb = marks(b)?;
                    let prod: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| x * y).collect();
                    let ok = attempt(|| Ok(marks(&Burnside.mul(a, b)?)? == prod));
                    t.try_case(ok, || format!("b{i}·b{j} in B({g})"));
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "opposite-reverses-multiplication", Coverage::Exhaustive, |t| {
        let bop = Opposite::new(Burnside);
        let bopop = Opposite::new(bop.clone());
        let mop = Opposite::new(m2.clone());
        for g in w {
            let basis = Burnside.basis(g, Z);
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let ok = attempt(|| {
                        let ab = Burnside.mul(a, b)?;
                        Ok(bop.mul(a, b)? == ab && bopop.mul(a, b)? == ab)
                    });
                    t.try_case(ok, || format!("B^op at b{i}, b{j} of {g}"));
                }
            }
            let mb = m2.basis(g, Z);
            for (i, a) in mb.iter().enumerate() {
                for (j, b) in mb.iter().enumerate() {
                    let ok = attempt(|| Ok(mop.mul(a, b)? == m2.mul(b, a)?));
                    t.try_case(ok, || format!("M2(B)^op at b{i}, b{j} of {g}"));
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "M2(B): non-commutative-at-trivial-group", Coverage::Exhaustive, |t| {
        let one = FiniteGroup::trivial();
        let u = Burnside.one(&one, Z)?;
        let (e11, e12) = (m2.elementary(0, 0, &u), m2.elementary(0, 1, &u));
        let ok = attempt(|| Ok(m2.mul(&e11, &e12)? != m2.mul(&e12, &e11)?));
        t.try_case(ok, || "E11·E12 = E12·E11".into());
        Ok(())
    });

    run_check(&mut out, "commutant-necessary-condition", Coverage::Exhaustive, |t| {
        for g in w {
            let witnesses: Vec<BurnsideElement> = w.iter().flat_map(|h| Burnside.basis(h, Z)).collect();
            for (i, a) in Burnside.basis(g, Z).iter().enumerate() {
                t.try_case(commutant_check(&Burnside, a, &witnesses), || {
                    format!("basis {i} of B({g}) fails against the window")
                });
            }
            let one = m2.one(g, Z)?;
            t.try_case(commutant_check(&m2, &one, &m2.basis(g, Z)), || format!("1 ∈ M2(B)({g})"));
        }
        let one = FiniteGroup::trivial();
        let u = Burnside.one(&one, Z)?;
        let (e12, e21) = (m2.elementary(0, 1, &u), m2.elementary(1, 0, &u));
        let detected = commutant_check(&m2, &e12, &[e21]).map(|ok| !ok);
        t.try_case(detected, || "E12 passes against E21 at 1".into());
        Ok(())
    });

    out
}

fn functor_checks<F: GreenFunctor + 'static>(out: &mut Vec<CheckResult>, f: &F, cfg: &VerifyConfig, salt: u64) {
    let w = &cfg.window;
    let small = cfg.groups_upto(cfg.max_order);
    let tag = f.tag();
    let name = |s: &str| format!("{tag}: {s}");
    let eps = f.epsilon(Z);
    let one_g = FiniteGroup::trivial();

    run_check(out, &name("identity-acts-trivially"), Coverage::Exhaustive, |t| {
        for g in w {
            let id = identity_element(g);
            for (i, a) in f.basis(g, Z).iter().enumerate() {
                t.try_case(f.act(&id, a).map(|x| &x == a), || format!("basis {i} of {g}"));
            }
        }
        Ok(())
    });

    run_check(out, &name("action-functorial"), Coverage::Exhaustive, |t| {
        for k in &small {
            for h in &small {
                let ys = BurnsideElement::basis_elements(k, h, Z);
                for g in &small {
                    let xs = BurnsideElement::basis_elements(h, g, Z);
                    let avs = f.basis(g, Z);
                    for (j, y) in ys.iter().enumerate() {
                        for (i, x) in xs.iter().enumerate() {
                            let yx = y.compose(x)?;
                            for (l, a) in avs.iter().enumerate() {
                                let ok = attempt(|| Ok(f.act(&yx, a)? == f.act(y, &f.act(x, a)?)?));
                                t.try_case(ok, || format!("y = b{j} of B({k},{h}), x = b{i} of B({h},{g}), a = b{l}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });

    run_check(out, &name("cross-and-product-determine-each-other"), Coverage::Exhaustive, |t| {
        for g in w {
            let bg = f.basis(g, Z);
            for h in w {
                for (i, a) in bg.iter().enumerate() {
                    for (j, b) in f.basis(h, Z).iter().enumerate() {
                        let ok = attempt(|| Ok(f.cross(a, b)? == cross_via_mul(f, a, b)?));
                        t.try_case(ok, || format!("b{i} of {g} × b{j} of {h}"));
                    }
                }
            }
            for (i, a) in bg.iter().enumerate() {
                for (j, b) in bg.iter().enumerate() {
                    let ok = attempt(|| Ok(f.mul(a, b)? == mul_via_cross(f, a, b)?));
                    t.try_case(ok, || format!("b{i}·b{j} in {g}"));
                }
            }
        }
        Ok(())
    });

    run_check(out, &name("unit-laws"), Coverage::Exhaustive, |t| {
        for g in w {
            let one = f.one(g, Z)?;
            let (left, right) = (direct_product(&[one_g.clone(), g.clone()]), direct_product(&[g.clone(), one_g.clone()]));
            let (to_g_l, to_g_r) = (iso(&regroup(&left, g)?)?, iso(&regroup(&right, g)?)?);
            for (i, a) in f.basis(g, Z).iter().enumerate() {
                let ok = attempt(|| {
                    Ok(f.mul(&one, a)? == *a
                        && f.mul(a, &one)? == *a
                        && f.act(&to_g_l, &f.cross(&eps, a)?)? == *a
                        && f.act(&to_g_r, &f.cross(a, &eps)?)? == *a)
                });
                t.try_case(ok, || format!("basis {i} of {g}"));
            }
        }
        Ok(())
    });

    run_check(out, &name("product-associative"), Coverage::Exhaustive, |t| {
        for g in w {
            let basis = f.basis(g, Z);
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let ab = f.mul(a, b)?;
                    for (k, c) in basis.iter().enumerate() {
                        let ok = attempt(|| Ok(f.mul(&ab, c)? == f.mul(a, &f.mul(b, c)?)?));
                        t.try_case(ok, || format!("b{i}, b{j}, b{k} of {g}"));
                    }
                }
            }
        }
        Ok(())
    });

    run_check(out, &name("cross-associative"), Coverage::Sampled, |t| {
        let mut rng = cfg.rng(salt);
        for _ in 0..cfg.samples {
            let gs: Vec<&FiniteGroup> = (0..3).map(|_| w.choose(&mut rng).expect("nonempty window")).collect();
            let pick = |rng: &mut rand_chacha::ChaCha8Rng, g: &FiniteGroup| f.basis(g, Z).choose(rng).expect("nonempty").clone();
            let (a, b, c) = (pick(&mut rng, gs[0]), pick(&mut rng, gs[1]), pick(&mut rng, gs[2]));
            let ok = attempt(|| {
                let lhs = f.cross(&f.cross(&a, &b)?, &c)?;
                let rhs = f.cross(&a, &f.cross(&b, &c)?)?;
                let re = iso(&regroup(&f.group_of(&lhs), &f.group_of(&rhs))?)?;
                Ok(f.act(&re, &lhs)? == rhs)
            });
            t.try_case(ok, || format!("groups {}, {}, {}", gs[0], gs[1], gs[2]));
        }
        Ok(())
    });

    let homs = window_homs(w);
    run_check(out, &name("frobenius-identities"), Coverage::Exhaustive, |t| {
        for phi in &homs {
            let (g, h) = (phi.source(), phi.target());
            let bg = f.basis(g, Z);
            for (i, a) in f.basis(h, Z).iter().enumerate() {
                for (j, b) in bg.iter().enumerate() {
                    t.try_case(frobenius_check(f, phi, a, b), || {
                        format!("φ: {g} → {h} {:?}, a = b{i}, b = b{j}", phi.images())
                    });
                }
            }
        }
        Ok(())
    });

    run_check(out, &name("restriction-is-algebra-map"), Coverage::Exhaustive, |t| {
        for phi in &homs {
            t.try_case(res_is_algebra_hom_check(f, phi, Z), || {
                format!("φ: {} → {} {:?}", phi.source(), phi.target(), phi.images())
            });
        }
        Ok(())
    });

    run_check(out, &name("initial-morphism-natural-and-unital"), Coverage::Exhaustive, |t| {
        let e = GreenMorphism::initial(f.clone());
        t.witness_case(e.check(w, Z));
        for g in w {
            let top = BurnsideElement::basis(g, &one_g, Burnside.dim(g) - 1, Z)?;
            t.try_case(attempt(|| Ok(e.apply(&top)? == f.one(g, Z)?)), || format!("e([{g}/{g}]) ≠ 1"));
        }
        Ok(())
    });

}
