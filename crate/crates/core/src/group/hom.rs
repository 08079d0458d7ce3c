use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{direct_product, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A group homomorphism given by its values on every element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    image: Arc<[u32]>,
}

impl GroupHom {
    /// Validates the homomorphism property on all pairs.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, image: Vec<u32>) -> Result<Self> {
        let h = Self::new_unchecked(source, target, image)?;
        h.verify()?;
        Ok(h)
    }

    /// Checks only the shape; used for maps that are homomorphisms by
    /// construction (coordinate permutations, diagonals, projections).
    pub(crate) fn new_unchecked(
        source: &FiniteGroup,
        target: &FiniteGroup,
        image: Vec<u32>,
    ) -> Result<Self> {
        if image.len() != source.order() || image.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::NotAHomomorphism(format!(
                "map {source} -> {target} has the wrong shape"
            )));
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            image: image.into(),
        })
    }

    pub fn from_fn(
        source: &FiniteGroup,
        target: &FiniteGroup,
        f: impl Fn(u32) -> u32,
    ) -> Result<Self> {
        Self::new(source, target, source.elements().map(f).collect())
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            image: g.elements().collect::<Vec<_>>().into(),
        }
    }

    pub fn verify(&self) -> Result<()> {
        if self.image[0] != 0 {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for a in self.source.elements() {
            for b in self.source.elements() {
                let lhs = self.apply(self.source.mul(a, b));
                let rhs = self.target.mul(self.apply(a), self.apply(b));
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({a}·{b}) != f({a})·f({b}) for {} -> {}",
                        self.source, self.target
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.image[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target != other.source {
            return Err(Error::GroupMismatch {
                expected: self.target.name().into(),
                found: other.source.name().into(),
            });
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            image: self.image.iter().map(|&x| other.apply(x)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in self.image.iter() {
            hit[y as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel(&self) -> Subgroup {
        let els: Vec<u32> = self.source.elements().filter(|&x| self.apply(x) == 0).collect();
        Subgroup::from_sorted_unchecked(&self.source, els.into())
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let mut els: Vec<u32> = self.image.to_vec();
        els.sort_unstable();
        els.dedup();
        Subgroup::from_sorted_unchecked(&self.target, els.into())
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::InvalidArgument("homomorphism is not bijective".into()));
        }
        let mut inv = vec![0u32; self.target.order()];
        for x in self.source.elements() {
            inv[self.apply(x) as usize] = x;
        }
        GroupHom::new_unchecked(&self.target, &self.source, inv)
    }
}

/// `Δ: G → G×G, g ↦ (g, g)`.
pub fn diagonal(g: &FiniteGroup) -> GroupHom {
    let gg = direct_product(&[g.clone(), g.clone()]);
    let image = g.elements().map(|x| gg.compose_components(&[x, x])).collect();
    GroupHom::new_unchecked(g, &gg, image).expect("diagonal shape")
}

/// `τ_{G,H}: G×H → H×G`.
pub fn swap(g: &FiniteGroup, h: &FiniteGroup) -> GroupHom {
    reversal(&[g.clone(), h.clone()])
}

/// Coordinate reversal `G₁×…×Gₙ → Gₙ×…×G₁`.
pub fn reversal(gs: &[FiniteGroup]) -> GroupHom {
    let src = direct_product(gs);
    let rev: Vec<FiniteGroup> = gs.iter().rev().cloned().collect();
    let dst = direct_product(&rev);
    if gs.len() == 1 {
        return GroupHom::identity(&src);
    }
    let image = src
        .elements()
        .map(|x| {
            let mut c = src.components(x);
            c.reverse();
            dst.compose_components(&c)
        })
        .collect();
    GroupHom::new_unchecked(&src, &dst, image).expect("reversal shape")
}

/// Projection of a product onto its `i`-th immediate factor.
pub fn projection(p: &FiniteGroup, i: usize) -> Result<GroupHom> {
    let f = p
        .factors()
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("{p} has no factor {i}")))?;
    let image = p.elements().map(|x| p.components(x)[i]).collect();
    GroupHom::new_unchecked(p, f, image)
}

/// Inclusion of the `i`-th immediate factor into a product.
pub fn inclusion(p: &FiniteGroup, i: usize) -> Result<GroupHom> {
    let f = p
        .factors()
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("{p} has no factor {i}")))?;
    let k = p.factors().len();
    let image = f
        .elements()
        .map(|x| {
            let mut c = vec![0u32; k];
            c[i] = x;
            p.compose_components(&c)
        })
        .collect();
    GroupHom::new_unchecked(f, p, image)
}

/// The canonical identification between two groupings of the same product,
/// e.g. `(G×H)×K → G×(H×K)`, or `1×G → G`. Element indices are preserved.
pub fn regroup(src: &FiniteGroup, dst: &FiniteGroup) -> Result<GroupHom> {
    let strip = |g: &FiniteGroup| -> Vec<u64> {
        g.leaves()
            .iter()
            .filter(|l| !l.is_trivial())
            .map(|l| l.id())
            .collect()
    };
    if strip(src) != strip(dst) || src.order() != dst.order() {
        return Err(Error::GroupMismatch {
            expected: src.name().into(),
            found: dst.name().into(),
        });
    }
    GroupHom::new_unchecked(src, dst, src.elements().collect())
}

type QuotientRegistry = Mutex<HashMap<(u64, Vec<u32>), (FiniteGroup, GroupHom)>>;

fn quotient_registry() -> &'static QuotientRegistry {
    static REG: OnceLock<QuotientRegistry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `G/N` with the canonical projection. Cosets are indexed by increasing
/// least element, so the identity coset is `0`.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if n.group() != g {
        return Err(Error::NotASubgroup(g.name().to_string()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal(g.name().to_string()));
    }
    let key = (g.id(), n.elements().to_vec());
    if let Some(found) = quotient_registry().lock().expect("registry").get(&key) {
        return Ok(found.clone());
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(x, m) as usize] = id;
        }
    }
    let q = reps.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mul.push(coset_of[g.mul(a, b) as usize]);
        }
    }
    let inv = reps.iter().map(|&a| coset_of[g.inv(a) as usize]).collect();
    let label = if n.order() == 1 {
        "1".to_string()
    } else if n.order() == g.order() {
        g.name().to_string()
    } else {
        format!("N{}", n.order())
    };
    let qg = FiniteGroup::from_trusted_table(format!("{}/{}", g.name(), label), mul, inv);
    let proj = GroupHom::new_unchecked(g, &qg, coset_of)?;
    quotient_registry()
        .lock()
        .expect("registry")
        .insert(key, (qg.clone(), proj.clone()));
    Ok((qg, proj))
}

/// `G → G/N`.
pub fn inflation_hom(g: &FiniteGroup, n: &Subgroup) -> Result<GroupHom> {
    quotient(g, n).map(|(_, p)| p)
}

/// Every homomorphism `G → H`, by extending generator images along the
/// Cayley graph. Deterministic order (lexicographic in generator images).
pub fn all_homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<GroupHom> {
    let gens = Subgroup::whole(g).generators();
    let r = gens.len();
    let m = h.order() as u32;
    let mut out = Vec::new();
    let mut imgs = vec![0u32; r];
    loop {
        if let Some(map) = extend(g, h, &gens, &imgs) {
            out.push(GroupHom::new_unchecked(g, h, map).expect("shape"));
        }
        // next assignment
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            imgs[i] += 1;
            if imgs[i] < m {
                break;
            }
            imgs[i] = 0;
        }
    }
}

fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], imgs: &[u32]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; g.order()];
    map[0] = 0;
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x as usize], t);
            match map[y as usize] {
                u32::MAX => {
                    map[y as usize] = fy;
                    queue.push(y);
                }
                v if v != fy => return None,
                _ => {}
            }
        }
        i += 1;
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_catalog;

    fn grp(name: &str) -> FiniteGroup {
        builtin_catalog().get(name).unwrap().clone()
    }

    #[test]
    fn diagonal_of_involution() {
        let c2 = grp("C2");
        let d = diagonal(&c2);
        d.verify().unwrap();
        assert_eq!(d.target().components(d.apply(1)), vec![1, 1]);
    }

    #[test]
    fn swap_is_an_involution() {
        let (g, h) = (grp("S3"), grp("C4"));
        let a = swap(&h, &g);
        let b = swap(&g, &h);
        a.verify().unwrap();
        let round = a.then(&b).unwrap();
        assert_eq!(round, GroupHom::identity(&direct_product(&[h, g])));
    }

    #[test]
    fn four_fold_reversal_factors_through_swaps() {
        let (g, h, k, l) = (grp("C2"), grp("C3"), grp("1"), grp("C2"));
        let rho = reversal(&[g.clone(), h.clone(), k.clone(), l.clone()]);
        rho.verify().unwrap();
        // ρ = τ_{H×G, L×K} ∘ (τ_{G,H} × τ_{K,L}) after regrouping.
        let gh = direct_product(&[g.clone(), h.clone()]);
        let kl = direct_product(&[k.clone(), l.clone()]);
        let hg = direct_product(&[h.clone(), g.clone()]);
        let lk = direct_product(&[l.clone(), k.clone()]);
        let t1 = swap(&g, &h);
        let t2 = swap(&k, &l);
        let outer = swap(&hg, &lk);
        let src = direct_product(&[gh.clone(), kl.clone()]);
        for x in rho.source().elements() {
            let c = src.components(x);
            let mid = direct_product(&[hg.clone(), lk.clone()])
                .compose_components(&[t1.apply(c[0]), t2.apply(c[1])]);
            let y = outer.apply(mid);
            assert_eq!(y, rho.apply(x));
        }
    }

    #[test]
    fn quotients() {
        let s3 = grp("S3");
        let triv = Subgroup::trivial(&s3);
        let (q, p) = quotient(&s3, &triv).unwrap();
        assert_eq!(q.order(), 6);
        assert!(p.is_bijective());
        let (q, p) = quotient(&s3, &Subgroup::whole(&s3)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(p.images().iter().all(|&x| x == 0));
        let c3 = crate::group::subgroup_classes(&s3)[2].representative.clone();
        let (q, p) = quotient(&s3, &c3).unwrap();
        assert_eq!(q.order(), 2);
        p.verify().unwrap();
        assert!(p.is_surjective());
        assert_eq!(p.kernel(), c3);
        let c2 = crate::group::subgroup_classes(&s3)[1].representative.clone();
        assert!(matches!(quotient(&s3, &c2), Err(Error::NotNormal(_))));
        // interned
        assert_eq!(quotient(&s3, &c3).unwrap().0, q);
    }

    #[test]
    fn hom_enumeration_counts() {
        // |Hom(C4, C2)| = 2, |Hom(V4, V4)| = 16, |Hom(S3, C2)| = 2, |Hom(C2, S3)| = 4
        assert_eq!(all_homomorphisms(&grp("C4"), &grp("C2")).len(), 2);
        assert_eq!(all_homomorphisms(&grp("V4"), &grp("V4")).len(), 16);
        assert_eq!(all_homomorphisms(&grp("S3"), &grp("C2")).len(), 2);
        assert_eq!(all_homomorphisms(&grp("C2"), &grp("S3")).len(), 4);
        for f in all_homomorphisms(&grp("S3"), &grp("S3")) {
            f.verify().unwrap();
        }
    }

    #[test]
    fn projections_and_inclusions() {
        let p = direct_product(&[grp("C2"), grp("C3")]);
        let p0 = projection(&p, 0).unwrap();
        let i1 = inclusion(&p, 1).unwrap();
        p0.verify().unwrap();
        i1.verify().unwrap();
        assert!(i1.then(&p0).unwrap().images().iter().all(|&x| x == 0));
        assert!(projection(&p, 2).is_err());
        let one = FiniteGroup::trivial();
        let g1 = direct_product(&[one, grp("C3")]);
        assert!(regroup(&g1, &grp("C3")).is_ok());
        assert!(regroup(&g1, &grp("C2")).is_err());
    }
}
