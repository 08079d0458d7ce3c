use num_traits::ToPrimitive;

use super::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{subgroup_classes, ClassKey, FiniteGroup};
use crate::scalar::{int, Ring};

/// `|(G/V)^U| = #{g : g⁻¹Ug ⊆ V} / |V|`.
fn fixed_points(g: &FiniteGroup, u: &[u32], v: &ClassKey) -> i64 {
    if !v.order().is_multiple_of(u.len()) {
        return 0;
    }
    let vs = v.elements();
    let count = g
        .elements()
        .filter(|&x| {
            let xi = g.inv(x);
            u.iter()
                .all(|&y| vs.binary_search(&g.mul(g.mul(xi, y), x)).is_ok())
        })
        .count();
    (count / v.order()) as i64
}

/// Rows are the transitive `G`-sets `[G/V]`, columns the subgroups `U`, both
/// in canonical class order. Lower triangular.
pub fn table_of_marks(g: &FiniteGroup) -> Vec<Vec<i64>> {
    let classes = subgroup_classes(g);
    classes
        .iter()
        .map(|v| {
            classes
                .iter()
                .map(|u| fixed_points(g, u.representative.elements(), &v.key()))
                .collect()
        })
        .collect()
}

fn check_one_sided(alpha: &BurnsideElement) -> Result<()> {
    if !alpha.right().is_trivial() {
        return Err(Error::GroupMismatch {
            expected: format!("B({},1)", alpha.left()),
            found: format!("B({},{})", alpha.left(), alpha.right()),
        });
    }
    Ok(())
}

/// Fixed-point counts of `α ∈ B(G, 1)` at each class of subgroups of `G`.
pub fn marks(alpha: &BurnsideElement) -> Result<Vec<i64>> {
    check_one_sided(alpha)?;
    let g = alpha.left();
    let classes = subgroup_classes(g);
    let mut out = vec![0i64; classes.len()];
    for (v, c) in alpha.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!("coefficient {c} in marks")));
        }
        let c = c.to_integer();
        for (slot, u) in out.iter_mut().zip(classes.iter()) {
            *slot += c * fixed_points(g, u.representative.elements(), v);
        }
    }
    Ok(out)
}

/// The element of `B(G)` with the given marks, if it is integral.
pub fn from_marks(g: &FiniteGroup, target: &[i64]) -> Option<BurnsideElement> {
    let tom = table_of_marks(g);
    solve_marks(&tom, target).map(|c| {
        let coords: Vec<_> = c.into_iter().map(int).collect();
        BurnsideElement::from_coords(g, &FiniteGroup::trivial(), Ring::Integers, &coords)
            .expect("coordinate count")
    })
}

/// Solves `c · tom = s` by back substitution; `None` unless integral.
fn solve_marks(tom: &[Vec<i64>], s: &[i64]) -> Option<Vec<i64>> {
    let n = tom.len();
    let mut c = vec![0i128; n];
    for u in (0..n).rev() {
        let mut rest = s[u] as i128;
        for v in u + 1..n {
            rest -= c[v] * tom[v][u] as i128;
        }
        let d = tom[u][u] as i128;
        if rest % d != 0 {
            return None;
        }
        c[u] = rest / d;
    }
    c.into_iter().map(|x| x.to_i64()).collect()
}

/// Units of `B(G)`: the integral elements whose marks are all `±1`, sorted by
/// coordinates.
pub fn burnside_units(g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
    let tom = table_of_marks(g);
    let n = tom.len();
    if n > 24 {
        return Err(Error::SearchTooLarge(1u128 << n));
    }
    let mut found: Vec<Vec<i64>> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        if let Some(c) = solve_marks(&tom, &s) {
            found.push(c);
        }
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|c| {
            let coords: Vec<_> = c.into_iter().map(int).collect();
            BurnsideElement::from_coords(g, &FiniteGroup::trivial(), Ring::Integers, &coords)
                .expect("coordinate count")
        })
        .collect())
}
