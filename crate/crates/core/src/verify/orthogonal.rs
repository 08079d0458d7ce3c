use super::green::window_homs;
use super::star::{burnside_star, matrix_star};
use super::{attempt, run_check, CheckResult, Coverage, VerifyConfig};
use crate::biset::{burnside_units, BurnsideElement};
use crate::category::{cat_compose, cat_identity, tilde, CatMorphism, EndAlgebra};
use crate::error::Result;
use crate::green::{Burnside, GreenFunctor, GreenMorphism};
use crate::group::{quotient, subgroup_classes, FiniteGroup, Subgroup};
use crate::scalar::{max_abs, Ring, Scalar};
use crate::star::{
    bullet, dainf, dainf_transitivity_check, make_star_burnside, make_star_matrix,
    orthogonal_automorphisms, orthogonal_units, orthogonal_units_burnside,
    restriction_transfer_check, star_morphism_diagrams, StarGreenFunctor, SEARCH_LIMIT,
};

const Z: Ring = Ring::Integers;

/// Whether a box search of dimension `dim` stays under the limit.
fn searchable(dim: usize, bound: u32) -> bool {
    (2 * bound as u128 + 1).checked_pow(dim as u32).is_some_and(|n| n <= SEARCH_LIMIT)
}

/// Normal subgroups of `g`: the singleton conjugacy classes.
fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    subgroup_classes(g)
        .iter()
        .map(|c| c.representative.clone())
        .filter(Subgroup::is_normal)
        .collect()
}

/// `(G, N)` over the window with `End_{P_B}(G/N)` small enough to search.
fn searchable_quotients(cfg: &VerifyConfig) -> Vec<(FiniteGroup, Subgroup)> {
    let mut out = Vec::new();
    for g in &cfg.window {
        for n in normal_subgroups(g) {
            let Ok((q, _)) = quotient(g, &n) else { continue };
            if q.order() <= 3 && searchable(end_dim(&q), cfg.bound) {
                out.push((g.clone(), n));
            }
        }
    }
    out
}

fn end_dim(g: &FiniteGroup) -> usize {
    Burnside.dim(&crate::group::direct_product(&[g.clone(), g.clone()]))
}

/// `ω^•∘ω = ω∘ω^• = Id`.
fn is_orthogonal_aut<A: GreenFunctor>(s: &StarGreenFunctor<A>, w: &CatMorphism<A::Elem>) -> Result<bool> {
    let id = cat_identity(s.base(), w.source(), w.ring())?;
    let b = bullet(s, w)?;
    Ok(cat_compose(s.base(), &b, w)? == id && cat_compose(s.base(), w, &b)? == id)
}

pub(super) fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sb = burnside_star(cfg);
    let sm = matrix_star();
    let w = &cfg.window;
    let tag = sb.tag().to_string();
    let name = |x: &str| format!("{tag}: {x}");

    run_check(&mut out, &name("orthogonal-units-are-all-units"), Coverage::Exhaustive, |t| {
        for g in w {
            let report = orthogonal_units_burnside(&sb, g, cfg.bound)?;
            let units = burnside_units(g)?;
            t.case(report.elements.len() == units.len(), || {
                format!("{g}: {} orthogonal units among {} units", report.elements.len(), units.len())
            });
            t.case(report.group_table_verified && report.closed_under_products, || {
                format!("{g}: orthogonal units do not form a group")
            });
        }
        if let Some(c2) = w.iter().find(|g| g.name() == "C2") {
            let units = burnside_units(c2)?;
            let free = BurnsideElement::basis(c2, &FiniteGroup::trivial(), 0, Z)?;
            let u = free.sub(&Burnside.one(c2, Z)?)?;
            t.case(units.len() == 4 && units.contains(&u), || "units of B(C2)".into());
        }
        Ok(())
    });

    run_check(&mut out, "M1(B)-orthogonal-units-agree-with-B", Coverage::Exhaustive, |t| {
        let plain = make_star_burnside()?;
        let m1 = make_star_matrix(&plain, 1)?;
        for g in w.iter().filter(|g| searchable(Burnside.dim(g), cfg.bound)) {
            let a = orthogonal_units(&plain, g, cfg.bound, Z)?;
            let b = orthogonal_units(&m1, g, cfg.bound, Z)?;
            t.case(a.elements == b.elements, || format!("{g}: bounded searches differ"));
        }
        Ok(())
    });

    run_check(&mut out, &name("orthogonal-automorphisms-within-bound"), Coverage::Exhaustive, |t| {
        let one = FiniteGroup::trivial();
        let (r1, _) = orthogonal_automorphisms(&sb, &one, 1, Z)?;
        let id1 = EndAlgebra::new(&Burnside, &one, Z)?.identity_coords().to_vec();
        let neg: Vec<Scalar> = id1.iter().map(|c| -c).collect();
        t.case(r1.elements == vec![neg, id1], || format!("Aut(1) = {:?}", r1.elements));
        for g in w.iter().filter(|g| searchable(end_dim(g), cfg.bound)) {
            let (report, auts) = orthogonal_automorphisms(&sb, g, cfg.bound, Z)?;
            let end = EndAlgebra::new(&Burnside, g, Z)?;
            t.case(report.group_table_verified, || format!("{g}: not a group within the bound"));
            let id = cat_identity(&Burnside, g, Z)?;
            for x in [id.clone(), id.neg()] {
                t.case(report.elements.contains(&end.coords(&x)), || format!("{g}: ±Id missing"));
            }
            for (i, omega) in auts.iter().enumerate() {
                t.try_case(is_orthogonal_aut(&sb, omega), || format!("{g}: automorphism {i}"));
            }
            for u in orthogonal_units_burnside(&sb, g, cfg.bound)?.elements {
                let ok = attempt(|| {
                    let tu = end.coords(&tilde(&Burnside, &Burnside.from_coords(g, Z, &u)?)?);
                    let inside = max_abs(&tu) <= Scalar::from_integer(cfg.bound as i64);
                    Ok(!inside || report.elements.contains(&tu))
                });
                t.try_case(ok, || format!("{g}: tilde of unit {u:?} missing"));
            }
        }
        Ok(())
    });

    run_check(&mut out, "tilde-sends-orthogonal-units-to-orthogonal-automorphisms", Coverage::Exhaustive, |t| {
        for g in w {
            let units = orthogonal_units_burnside(&sb, g, cfg.bound)?.elements;
            let mut images = Vec::new();
            for u in &units {
                let ok = attempt(|| {
                    let tu = tilde(&Burnside, &Burnside.from_coords(g, Z, u)?)?;
                    images.push(tu.clone());
                    is_orthogonal_aut(&sb, &tu)
                });
                t.try_case(ok, || format!("{}: unit {u:?} of {g}", sb.tag()));
            }
            for i in 0..images.len() {
                for j in 0..i {
                    t.case(images[i] != images[j], || format!("{g}: units {j}, {i} collide"));
                }
            }
        }
        for g in w.iter().filter(|g| searchable(sm.base().dim(g), cfg.bound)) {
            let report = orthogonal_units(&sm, g, cfg.bound, Z)?;
            for (i, u) in report.elements.iter().enumerate() {
                let ok = attempt(|| is_orthogonal_aut(&sm, &tilde(sm.base(), &sm.base().from_coords(g, Z, u)?)?));
                t.try_case(ok, || format!("{}: unit {i} of {g}", sm.tag()));
            }
        }
        Ok(())
    });

    run_check(&mut out, &name("restriction-along-surjections"), Coverage::Exhaustive, |t| {
        for phi in window_homs(w).iter().filter(|p| p.is_surjective()) {
            let units = burnside_units(phi.target())?;
            t.witness_case(restriction_transfer_check(&sb, phi, &units, Z));
        }
        Ok(())
    });

    let quotients = searchable_quotients(cfg);
    run_check(&mut out, &name("deflation-inflation-is-a-monomorphism"), Coverage::Exhaustive, |t| {
        for (g, n) in &quotients {
            let (q, _) = quotient(g, n)?;
            let (_, auts) = orthogonal_automorphisms(&sb, &q, cfg.bound, Z)?;
            let images: Vec<_> = auts.iter().map(|a| dainf(&Burnside, g, n, a)).collect::<Result<_>>()?;
            let label = |i: usize| format!("G = {g}, |N| = {}, automorphism {i}", n.order());
            for (i, (a, da)) in auts.iter().zip(&images).enumerate() {
                t.try_case(is_orthogonal_aut(&sb, da), || label(i));
                let ok = attempt(|| Ok(dainf(&Burnside, g, n, &bullet(&sb, a)?)? == bullet(&sb, da)?));
                t.try_case(ok, || format!("bullet: {}", label(i)));
                for (j, (b, db)) in auts.iter().zip(&images).enumerate() {
                    let ok = attempt(|| {
                        let ab = dainf(&Burnside, g, n, &cat_compose(&Burnside, a, b)?)?;
                        Ok(ab == cat_compose(&Burnside, da, db)? && (i == j || da != db))
                    });
                    t.try_case(ok, || format!("{} with {j}", label(i)));
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, &name("deflation-inflation-transitive"), Coverage::Exhaustive, |t| {
        for g in w {
            let normals = normal_subgroups(g);
            for m in &normals {
                let (qm, _) = quotient(g, m)?;
                if qm.order() > 3 || !searchable(end_dim(&qm), cfg.bound) {
                    continue;
                }
                let (_, auts) = orthogonal_automorphisms(&sb, &qm, cfg.bound, Z)?;
                for n in normals.iter().filter(|n| n.order() < m.order() && n.is_subgroup_of(m)) {
                    for (i, omega) in auts.iter().enumerate() {
                        t.try_case(dainf_transitivity_check(&Burnside, g, n, m, omega), || {
                            format!("G = {g}, |N| = {}, |M| = {}, automorphism {i}", n.order(), m.order())
                        });
                    }
                }
            }
        }
        Ok(())
    });

    run_check(&mut out, &name("diagonal-morphism-diagrams"), Coverage::Exhaustive, |t| {
        let diag = GreenMorphism::diagonal(Burnside, 2)?;
        let groups: Vec<_> = w.iter().filter(|g| searchable(Burnside.dim(g), cfg.bound)).cloned().collect();
        let failures = star_morphism_diagrams(&sb, &sm, &diag, &groups, &quotients, cfg.hom_order, cfg.bound, Z)?;
        t.bulk(groups.len() + quotients.len(), failures);
        Ok(())
    });

    out
}
