use rand::seq::SliceRandom;
use rand::Rng;

use super::{attempt, run_check, CheckResult, Coverage, VerifyConfig};
use crate::biset::{
    contraction, identity_element, ind, iso, left_arrow, res, right_arrow, BurnsideElement,
    ConcreteBiset,
};
use crate::error::Result;
use crate::group::{
    diagonal, direct_product, inclusion, projection, reversal, subgroup_classes, swap,
    FiniteGroup,
};
use crate::scalar::Ring;

const Z: Ring = Ring::Integers;

fn basis(h: &FiniteGroup, g: &FiniteGroup) -> Vec<BurnsideElement> {
    BurnsideElement::basis_elements(h, g, Z)
}

fn flat(gs: &[&FiniteGroup]) -> FiniteGroup {
    direct_product(&gs.iter().map(|&g| g.clone()).collect::<Vec<_>>())
}

/// `G × ←H × K ∈ B(G×K, G×H×H×K)`, built from external products.
fn middle_contraction(g: &FiniteGroup, h: &FiniteGroup, k: &FiniteGroup) -> Result<BurnsideElement> {
    let e = identity_element(g)
        .external(&left_arrow(h))?
        .external(&identity_element(k))?;
    e.relabel(&flat(&[g, k]), &flat(&[g, h, h, k]))
}

pub(super) fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let w = &cfg.window;
    let small = cfg.groups_upto(cfg.max_order);
    let mut out = Vec::new();

    run_check(&mut out, "mackey-matches-concrete-composition", Coverage::Exhaustive, |t| {
        for k in w {
            for h in w {
                let ys: Vec<(ConcreteBiset, BurnsideElement)> = transitive(k, h)?;
                for g in w {
                    let xs = transitive(h, g)?;
                    for (i, (cy, y)) in ys.iter().enumerate() {
                        for (j, (cx, x)) in xs.iter().enumerate() {
                            let ok = ConcreteBiset::compose(cy, cx).map(|c| c.classify())
                                .and_then(|c| Ok(c == y.compose(x)?));
                            t.try_case(ok, || format!("basis {i} of B({k},{h}) ∘ basis {j} of B({h},{g})"));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "composition-associative", Coverage::Sampled, |t| {
        let mut rng = cfg.rng(1);
        for _ in 0..cfg.samples {
            let gs: Vec<&FiniteGroup> = (0..4).map(|_| w.choose(&mut rng).expect("nonempty window")).collect();
            let pick = |rng: &mut rand_chacha::ChaCha8Rng, l: &FiniteGroup, r: &FiniteGroup| {
                let b = basis(l, r);
                let i = rng.gen_range(0..b.len());
                (i, b[i].clone())
            };
            let (i, x) = pick(&mut rng, gs[1], gs[0]);
            let (j, y) = pick(&mut rng, gs[2], gs[1]);
            let (k, z) = pick(&mut rng, gs[3], gs[2]);
            let ok = attempt(|| Ok(z.compose(&y.compose(&x)?)? == z.compose(&y)?.compose(&x)?));
            t.try_case(ok, || {
                format!("bases {k}, {j}, {i} over {} ← {} ← {} ← {}", gs[3], gs[2], gs[1], gs[0])
            });
        }
        Ok(())
    });

    run_check(&mut out, "opposite-involutive-and-contravariant", Coverage::Exhaustive, |t| {
        for g in w {
            let id = identity_element(g);
            t.case(id.opposite() == id, || format!("Id_{g}^op ≠ Id_{g}"));
            for h in w {
                let xs = basis(h, g);
                for (i, x) in xs.iter().enumerate() {
                    t.case(x.opposite().opposite() == *x, || format!("basis {i} of B({h},{g})"));
                }
                for k in w {
                    for (j, y) in basis(k, h).iter().enumerate() {
                        for (i, x) in xs.iter().enumerate() {
                            let ok = attempt(|| Ok(y.compose(x)?.opposite() == x.opposite().compose(&y.opposite())?));
                            t.try_case(ok, || format!("basis {j} of B({k},{h}), basis {i} of B({h},{g})"));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "external-product-bifunctorial", Coverage::Sampled, |t| {
        let mut rng = cfg.rng(2);
        let pool = cfg.groups_upto(4);
        for _ in 0..cfg.samples {
            let gs: Vec<&FiniteGroup> = (0..6).map(|_| pool.choose(&mut rng).expect("nonempty pool")).collect();
            let pick = |rng: &mut rand_chacha::ChaCha8Rng, l: &FiniteGroup, r: &FiniteGroup| {
                basis(l, r).choose(rng).expect("nonempty basis").clone()
            };
            let alpha = pick(&mut rng, gs[1], gs[0]);
            let beta = pick(&mut rng, gs[2], gs[1]);
            let gamma = pick(&mut rng, gs[4], gs[3]);
            let delta = pick(&mut rng, gs[5], gs[4]);
            let ok = attempt(|| {
                let lhs = beta.compose(&alpha)?.external(&delta.compose(&gamma)?)?;
                let rhs = beta.external(&delta)?.compose(&alpha.external(&gamma)?)?;
                Ok(lhs == rhs)
            });
            t.try_case(ok, || format!("groups {:?}", gs));
        }
        Ok(())
    });

    run_check(&mut out, "swap-is-involutive", Coverage::Exhaustive, |t| {
        for g in w {
            for h in w {
                let ok = attempt(|| {
                    let lhs = iso(&swap(g, h))?.compose(&iso(&swap(h, g))?)?;
                    Ok(lhs == identity_element(&flat(&[h, g])))
                });
                t.try_case(ok, || format!("G = {g}, H = {h}"));
            }
        }
        Ok(())
    });

    run_check(&mut out, "reversal-factors-through-swaps", Coverage::Exhaustive, |t| {
        for g in &small {
            for h in &small {
                for k in &small {
                    for l in &small {
                        let ok = attempt(|| {
                            let (src, dst) = (flat(&[g, h, k, l]), flat(&[l, k, h, g]));
                            let rho = iso(&reversal(&[g.clone(), h.clone(), k.clone(), l.clone()]))?;
                            let (gh, kl) = (flat(&[g, h]), flat(&[k, l]));
                            let (hg, lk) = (flat(&[h, g]), flat(&[l, k]));
                            let first = iso(&swap(&hg, &lk))?
                                .compose(&iso(&swap(g, h))?.external(&iso(&swap(k, l))?)?)?
                                .relabel(&dst, &src)?;
                            let second = iso(&swap(k, l))?
                                .external(&iso(&swap(g, h))?)?
                                .compose(&iso(&swap(&gh, &kl))?)?
                                .relabel(&dst, &src)?;
                            Ok(rho == first && rho == second)
                        });
                        t.try_case(ok, || format!("(G,H,K,L) = ({g},{h},{k},{l})"));
                    }
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "swap-commutes-with-inflation-and-restriction", Coverage::Exhaustive, |t| {
        for g in w {
            for h in w {
                let ok = attempt(|| {
                    let (gh, hg) = (flat(&[g, h]), flat(&[h, g]));
                    let tau = iso(&swap(g, h))?;
                    let inf_ok = tau.compose(&res(&projection(&gh, 0)?))? == res(&projection(&hg, 1)?);
                    let res_ok = res(&inclusion(&hg, 1)?).compose(&tau)? == res(&inclusion(&gh, 0)?);
                    Ok(inf_ok && res_ok)
                });
                t.try_case(ok, || format!("G = {g}, H = {h}"));
            }
        }
        Ok(())
    });

    run_check(&mut out, "swap-fixes-diagonal-bisets", Coverage::Exhaustive, |t| {
        for g in w {
            let ok = attempt(|| {
                let tau = iso(&swap(g, g))?;
                let d = diagonal(g);
                Ok(tau.compose(&ind(&d))? == ind(&d) && res(&d).compose(&tau)? == res(&d))
            });
            t.try_case(ok, || format!("G = {g}"));
        }
        Ok(())
    });

    run_check(&mut out, "swap-moves-middle-contraction", Coverage::Exhaustive, |t| {
        for g in &small {
            for h in &small {
                for k in &small {
                    let ok = attempt(|| {
                        let lhs = iso(&swap(g, k))?.compose(&middle_contraction(g, h, k)?)?;
                        let rho = iso(&reversal(&[g.clone(), h.clone(), h.clone(), k.clone()]))?;
                        let rhs = middle_contraction(k, h, g)?.compose(&rho)?;
                        Ok(lhs == rhs)
                    });
                    t.try_case(ok, || format!("(G,H,K) = ({g},{h},{k})"));
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "swap-fixes-right-arrow", Coverage::Exhaustive, |t| {
        for g in w {
            let ok = attempt(|| Ok(iso(&swap(g, g))?.compose(&right_arrow(g))? == right_arrow(g)));
            t.try_case(ok, || format!("G = {g}"));
        }
        Ok(())
    });

    run_check(&mut out, "contraction-matches-external-construction", Coverage::Exhaustive, |t| {
        for k in &small {
            for h in &small {
                for g in &small {
                    let ok = attempt(|| {
                        let right = direct_product(&[flat(&[k, h]), flat(&[h, g])]);
                        Ok(contraction(k, h, g) == middle_contraction(k, h, g)?.relabel(&flat(&[k, g]), &right)?)
                    });
                    t.try_case(ok, || format!("(K,H,G) = ({k},{h},{g})"));
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "arrow-of-composite", Coverage::Exhaustive, |t| {
        let one = FiniteGroup::trivial();
        for k in w {
            for h in w {
                let ys = basis(k, h);
                for g in w {
                    let xs = basis(h, g);
                    if xs.is_empty() || ys.is_empty() {
                        continue;
                    }
                    let c = contraction(k, h, g);
                    let mid = direct_product(&[flat(&[k, h]), flat(&[h, g])]);
                    for (j, y) in ys.iter().enumerate() {
                        for (i, x) in xs.iter().enumerate() {
                            let ok = attempt(|| {
                                let ext = y.arrow().external(&x.arrow())?.relabel(&mid, &one)?;
                                Ok(y.compose(x)?.arrow() == c.compose(&ext)?)
                            });
                            t.try_case(ok, || format!("basis {j} of B({k},{h}), basis {i} of B({h},{g})"));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, "arrow-of-identity", Coverage::Exhaustive, |t| {
        let point = identity_element(&FiniteGroup::trivial());
        for g in w {
            let ok = attempt(|| Ok(identity_element(g).arrow() == right_arrow(g).compose(&point)?));
            t.try_case(ok, || format!("G = {g}"));
        }
        Ok(())
    });

    run_check(&mut out, "arrow-of-opposite", Coverage::Exhaustive, |t| {
        for h in w {
            for g in w {
                let tau = iso(&swap(h, g))?;
                for (i, x) in basis(h, g).iter().enumerate() {
                    let ok = attempt(|| Ok(x.opposite().arrow() == tau.compose(&x.arrow())?));
                    t.try_case(ok, || format!("basis {i} of B({h},{g})"));
                }
            }
        }
        Ok(())
    });

    out
}

fn transitive(h: &FiniteGroup, g: &FiniteGroup) -> Result<Vec<(ConcreteBiset, BurnsideElement)>> {
    let hg = direct_product(&[h.clone(), g.clone()]);
    subgroup_classes(&hg)
        .iter()
        .map(|c| {
            Ok((
                ConcreteBiset::transitive(h, g, &c.representative)?,
                BurnsideElement::transitive(h, g, &c.representative, Z)?,
            ))
        })
        .collect()
}
