use super::{attempt, run_check, CheckResult, Coverage, Fault, VerifyConfig};
use crate::category::{hom_basis, hom_pairs, tilde};
use crate::green::{Burnside, GreenFunctor, GreenMorphism, Linear, MatrixFunctor};
use crate::linalg::rank;
use crate::scalar::Ring;
use crate::star::{
    bullet, e_fixed_check, im_part, make_star_burnside, make_star_matrix, re_part,
    theorem_equivalence_check, StarGreenFunctor,
};

const Z: Ring = Ring::Integers;
const Q: Ring = Ring::Rationals;

/// The Burnside star, corrupted if the configuration asks for it.
pub(super) fn burnside_star(cfg: &VerifyConfig) -> StarGreenFunctor<Burnside> {
    let s = make_star_burnside().expect("identity star is valid");
    match cfg.fault {
        Some(Fault::CorruptStar) => s.corrupted(0),
        None => s,
    }
}

pub(super) fn matrix_star() -> StarGreenFunctor<MatrixFunctor<Burnside>> {
    let s = make_star_burnside().expect("identity star is valid");
    make_star_matrix(&s, 2).expect("transpose star is valid")
}

pub(super) fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sb = burnside_star(cfg);
    star_checks(&mut out, &sb, cfg);
    star_checks(&mut out, &matrix_star(), cfg);

    let name = format!("{}: bullet-is-opposite-biset", sb.tag());
    run_check(&mut out, &name, Coverage::Exhaustive, |t| {
        for (g, h) in hom_pairs(&cfg.window, cfg.hom_order) {
            for (i, alpha) in hom_basis(&Burnside, &g, &h, Z).iter().enumerate() {
                let ok = attempt(|| {
                    let op = alpha.value().arrow_inverse(&h, &g)?.opposite().arrow();
                    Ok(bullet(&sb, alpha)?.value() == &op)
                });
                t.try_case(ok, || format!("basis {i} of Hom({g},{h})"));
            }
        }
        Ok(())
    });
    out
}

fn star_checks<A: GreenFunctor + 'static>(out: &mut Vec<CheckResult>, s: &StarGreenFunctor<A>, cfg: &VerifyConfig) {
    let f = s.base();
    let w = &cfg.window;
    let name = |x: &str| format!("{}: {x}", s.tag());

    run_check(out, &name("anti-involution-axioms"), Coverage::Exhaustive, |t| {
        t.witness_case(s.validate(w, Z));
        Ok(())
    });

    run_check(out, &name("bullet-conditions-equivalent"), Coverage::Exhaustive, |t| {
        let r = theorem_equivalence_check(s, w, cfg.hom_order, Z)?;
        t.bulk(r.involution_checked + r.contravariance_checked + r.equivariance_homs, r.failures);
        Ok(())
    });

    run_check(out, &name("initial-morphism-image-is-fixed"), Coverage::Exhaustive, |t| {
        let e = GreenMorphism::initial(f.clone());
        t.witness_case(e_fixed_check(s, &e, w, cfg.hom_order, Z));
        t.witness_case(e_fixed_check(s, &e, w, 1, Q));
        for g in w {
            for (i, x) in Burnside.basis(g, Q).iter().enumerate() {
                let ok = attempt(|| Ok(im_part(s, &e.apply(x)?)?.is_zero()));
                t.try_case(ok, || format!("Im e(b{i}) ≠ 0 at {g}"));
            }
        }
        Ok(())
    });

    run_check(out, &name("tilde-of-star-is-bullet-of-tilde"), Coverage::Exhaustive, |t| {
        for g in w {
            for (i, a) in f.basis(g, Z).iter().enumerate() {
                let ok = attempt(|| Ok(tilde(f, &s.star(a)?)? == bullet(s, &tilde(f, a)?)?));
                t.try_case(ok, || format!("basis {i} of {g}"));
            }
        }
        Ok(())
    });

    run_check(out, &name("real-imaginary-decomposition"), Coverage::Exhaustive, |t| {
        for g in w {
            let basis = f.basis(g, Q);
            let mut re_rows = Vec::new();
            let mut im_rows = Vec::new();
            for (i, a) in basis.iter().enumerate() {
                let ok = attempt(|| {
                    let (re, im) = (re_part(s, a)?, im_part(s, a)?);
                    re_rows.push(f.coords(&re));
                    im_rows.push(f.coords(&im));
                    Ok(re.add(&im)? == *a
                        && re_part(s, &re)? == re
                        && im_part(s, &im)? == im
                        && im_part(s, &re)?.is_zero()
                        && re_part(s, &im)?.is_zero()
                        && s.star(&re)? == re
                        && s.star(&im)? == im.neg())
                });
                t.try_case(ok, || format!("basis {i} of {g}"));
            }
            let (rr, ri) = (rank(&re_rows), rank(&im_rows));
            t.case(rr + ri == basis.len(), || format!("dim Re + dim Im = {rr} + {ri} ≠ {} at {g}", basis.len()));
        }
        let integral = f.one(&w[0], Z)?;
        t.case(re_part(s, &integral).is_err(), || "Re accepted integer coefficients".into());
        Ok(())
    });
}
