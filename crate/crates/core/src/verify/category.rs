use rand::seq::SliceRandom;

use super::green::window_homs;
use super::{attempt, run_check, CheckResult, Coverage, VerifyConfig};
use crate::biset::{identity_element, ind, left_arrow, BurnsideElement};
use crate::category::{
    cat_compose, cat_identity, double_algebra, hom_basis, hom_pairs, t_iso, t_iso_inverse, tilde,
    tilde_cross_check, CatMorphism,
};
use crate::error::Result;
use crate::green::{Burnside, GreenFunctor, MatrixFunctor, Opposite};
use crate::group::{diagonal, direct_product, projection, FiniteGroup};
use crate::scalar::Ring;

const Z: Ring = Ring::Integers;

/// `(G×←G)∘(Ind(Δ)×G) ∈ B(G, G×G)`.
fn tilde_action_biset(g: &FiniteGroup) -> Result<BurnsideElement> {
    let ggg = direct_product(&[g.clone(), g.clone(), g.clone()]);
    let gg = direct_product(&[g.clone(), g.clone()]);
    let left = identity_element(g)
        .external(&left_arrow(g))?
        .relabel(g, &ggg)?;
    let right = ind(&diagonal(g)).external(&identity_element(g))?.relabel(&ggg, &gg)?;
    left.compose(&right)
}

pub(super) fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let m2 = MatrixFunctor::new(Burnside, 2).expect("n = 2");
    let homs = hom_pairs(&cfg.window, cfg.hom_order);

    run_check(&mut out, "B: composition-is-mackey-composition", Coverage::Exhaustive, |t| {
        for (g, h) in &homs {
            let betas = hom_basis(&Burnside, g, h, Z);
            for (h2, k) in &homs {
                if h2 != h {
                    continue;
                }
                for (i, alpha) in hom_basis(&Burnside, h, k, Z).iter().enumerate() {
                    for (j, beta) in betas.iter().enumerate() {
                        let ok = attempt(|| {
                            let a = alpha.value().arrow_inverse(k, h)?;
                            let b = beta.value().arrow_inverse(h, g)?;
                            Ok(cat_compose(&Burnside, alpha, beta)?.value() == &a.compose(&b)?.arrow())
                        });
                        t.try_case(ok, || format!("α{i}: {h} → {k}, β{j}: {g} → {h}"));
                    }
                }
            }
        }
        Ok(())
    });

    category_checks(&mut out, &Burnside, cfg, &homs, 100);
    category_checks(&mut out, &m2, cfg, &homs, 200);
    tilde_checks(&mut out, &Burnside, &cfg.window);
    tilde_checks(&mut out, &m2, &cfg.window);

    let small = cfg.groups_upto(2);
    run_check(&mut out, "B: double-algebra-functorial", Coverage::Exhaustive, |t| {
        for g in &small {
            let alphas = hom_basis(&Burnside, g, g, Z);
            let id = identity_element(g);
            for (i, alpha) in alphas.iter().enumerate() {
                t.try_case(attempt(|| Ok(double_algebra(&Burnside, &id, alpha)? == *alpha)), || {
                    format!("E(Id_{g}) moves basis {i}")
                });
            }
            for h in &small {
                for k in &small {
                    for x in BurnsideElement::basis_elements(h, g, Z) {
                        for y in BurnsideElement::basis_elements(k, h, Z) {
                            let yx = y.compose(&x)?;
                            for (i, alpha) in alphas.iter().enumerate() {
                                let ok = attempt(|| {
                                    let inner = double_algebra(&Burnside, &x, alpha)?;
                                    Ok(double_algebra(&Burnside, &yx, alpha)? == double_algebra(&Burnside, &y, &inner)?)
                                });
                                t.try_case(ok, || format!("{g} → {h} → {k} at basis {i}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });

    out
}

fn category_checks<F: GreenFunctor + 'static>(
    out: &mut Vec<CheckResult>,
    f: &F,
    cfg: &VerifyConfig,
    homs: &[(FiniteGroup, FiniteGroup)],
    salt: u64,
) {
    let tag = f.tag();
    let name = |s: &str| format!("{tag}: {s}");
    let fop = Opposite::new(f.clone());

    run_check(out, &name("identity-is-neutral"), Coverage::Exhaustive, |t| {
        for (g, h) in homs {
            let (ig, ih) = (cat_identity(f, g, Z)?, cat_identity(f, h, Z)?);
            for (i, alpha) in hom_basis(f, g, h, Z).iter().enumerate() {
                let ok = attempt(|| Ok(cat_compose(f, &ih, alpha)? == *alpha && cat_compose(f, alpha, &ig)? == *alpha));
                t.try_case(ok, || format!("basis {i} of Hom({g},{h})"));
            }
        }
        Ok(())
    });

    run_check(out, &name("composition-associative"), Coverage::Sampled, |t| {
        let mut rng = cfg.rng(salt);
        for _ in 0..cfg.samples {
            let (g, h) = homs.choose(&mut rng).expect("nonempty hom pairs");
            let next: Vec<_> = homs.iter().filter(|(a, _)| a == h).collect();
            let (_, k) = next.choose(&mut rng).expect("Hom(H,H) is allowed");
            let last: Vec<_> = homs.iter().filter(|(a, _)| a == k).collect();
            let (_, l) = last.choose(&mut rng).expect("Hom(K,K) is allowed");
            let pick = |rng: &mut rand_chacha::ChaCha8Rng, s: &FiniteGroup, d: &FiniteGroup| {
                hom_basis(f, s, d, Z).choose(rng).expect("nonempty hom-set").clone()
            };
            let (a, b, c) = (pick(&mut rng, g, h), pick(&mut rng, h, k), pick(&mut rng, k, l));
            let ok = attempt(|| {
                Ok(cat_compose(f, &c, &cat_compose(f, &b, &a)?)? == cat_compose(f, &cat_compose(f, &c, &b)?, &a)?)
            });
            t.try_case(ok, || format!("{g} → {h} → {k} → {l}"));
        }
        Ok(())
    });

    run_check(out, &name("opposite-category-via-swap"), Coverage::Exhaustive, |t| {
        for (g, h) in homs {
            let idg = cat_identity(&fop, g, Z)?;
            t.try_case(attempt(|| Ok(t_iso(f, &idg)? == cat_identity(f, g, Z)?)), || format!("T(Id_{g})"));
            let betas = hom_basis(f, g, h, Z);
            for (i, beta) in betas.iter().enumerate() {
                t.try_case(attempt(|| Ok(t_iso_inverse(f, &t_iso(f, beta)?)? == *beta)), || {
                    format!("T⁻¹T at basis {i} of Hom({g},{h})")
                });
            }
            for (h2, k) in homs {
                if h2 != h {
                    continue;
                }
                for (i, alpha) in hom_basis(f, h, k, Z).iter().enumerate() {
                    for (j, beta) in betas.iter().enumerate() {
                        let ok = attempt(|| {
                            let lhs = t_iso(f, &cat_compose(&fop, alpha, beta)?)?;
                            Ok(lhs == cat_compose(f, &t_iso(f, beta)?, &t_iso(f, alpha)?)?)
                        });
                        t.try_case(ok, || format!("α{i}: {h} → {k}, β{j}: {g} → {h}"));
                    }
                }
            }
        }
        Ok(())
    });
}

fn tilde_checks<F: GreenFunctor + 'static>(out: &mut Vec<CheckResult>, f: &F, groups: &[FiniteGroup]) {
    let tag = f.tag();
    let name = |s: &str| format!("{tag}: {s}");

    run_check(out, &name("tilde-unital-and-multiplicative"), Coverage::Exhaustive, |t| {
        for g in groups {
            let one = f.one(g, Z)?;
            t.try_case(attempt(|| Ok(tilde(f, &one)? == cat_identity(f, g, Z)?)), || format!("1~ ≠ Id_{g}"));
            let basis = f.basis(g, Z);
            let tildes: Vec<CatMorphism<F::Elem>> = basis.iter().map(|a| tilde(f, a)).collect::<Result<_>>()?;
            for (i, (a, ta)) in basis.iter().zip(&tildes).enumerate() {
                for (j, (b, tb)) in basis.iter().zip(&tildes).enumerate() {
                    let ok = attempt(|| Ok(cat_compose(f, ta, tb)? == tilde(f, &f.mul(a, b)?)?));
                    t.try_case(ok, || format!("b{i}, b{j} of {g}"));
                }
            }
        }
        Ok(())
    });

    run_check(out, &name("tilde-retraction"), Coverage::Exhaustive, |t| {
        for g in groups {
            let gg = direct_product(&[g.clone(), g.clone()]);
            let retract = ind(&projection(&gg, 0)?);
            for (i, a) in f.basis(g, Z).iter().enumerate() {
                t.try_case(attempt(|| Ok(f.act(&retract, tilde(f, a)?.value())? == *a)), || {
                    format!("basis {i} of {g}")
                });
            }
        }
        Ok(())
    });

    run_check(out, &name("tilde-acts-by-left-multiplication"), Coverage::Exhaustive, |t| {
        for g in groups {
            let x = tilde_action_biset(g)?;
            let basis = f.basis(g, Z);
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let ok = attempt(|| {
                        let ab = f.mul(a, b)?;
                        Ok(f.act(&x, &f.cross(a, b)?)? == ab && tilde_cross_check(f, a, b)?)
                    });
                    t.try_case(ok, || format!("a = b{i}, b = b{j} of {g}"));
                }
            }
        }
        Ok(())
    });

    let homs: Vec<_> = window_homs(groups)
        .into_iter()
        .filter(|p| p.is_surjective() || p.is_injective())
        .collect();
    run_check(out, &name("tilde-of-induction-is-double-algebra-map"), Coverage::Exhaustive, |t| {
        for phi in &homs {
            let x = ind(phi);
            for (i, a) in f.basis(phi.source(), Z).iter().enumerate() {
                let ok = attempt(|| Ok(tilde(f, &f.act(&x, a)?)? == double_algebra(f, &x, &tilde(f, a)?)?));
                t.try_case(ok, || {
                    format!("φ: {} → {} {:?} at basis {i}", phi.source(), phi.target(), phi.images())
                });
            }
        }
        Ok(())
    });
}
