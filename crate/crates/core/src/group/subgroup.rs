use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Canonical name of a conjugacy class of subgroups: the lexicographically
/// least element set among all conjugates. Ordered by (order, lex).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassKey(Arc<[u32]>);

impl ClassKey {
    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl Ord for ClassKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ClassKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// A subgroup, stored as a sorted element set of its parent.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    elements: Arc<[u32]>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}≥{:?}", self.group, &self.elements[..])
    }
}

/// Subgroup generated by `gens`, as a sorted element list.
pub(crate) fn closure(group: &FiniteGroup, gens: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut out = vec![0u32];
    let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &s in &gens {
            let y = group.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

impl Subgroup {
    /// Validates that `elements` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut els: Vec<u32> = elements.into_iter().collect();
        els.sort_unstable();
        els.dedup();
        let name = || Error::NotASubgroup(group.name().to_string());
        if els.first() != Some(&0) || els.iter().any(|&x| x as usize >= group.order()) {
            return Err(name());
        }
        for &a in &els {
            if els.binary_search(&group.inv(a)).is_err() {
                return Err(name());
            }
            for &b in &els {
                if els.binary_search(&group.mul(a, b)).is_err() {
                    return Err(name());
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            elements: els.into(),
        })
    }

    pub(crate) fn from_sorted_unchecked(group: &FiniteGroup, elements: Arc<[u32]>) -> Self {
        Subgroup {
            group: group.clone(),
            elements,
        }
    }

    pub fn generated(group: &FiniteGroup, gens: &[u32]) -> Self {
        Self::from_sorted_unchecked(group, closure(group, gens).into())
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(group, vec![0].into())
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(group, group.elements().collect::<Vec<_>>().into())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn conjugate(&self, g: u32) -> Subgroup {
        let mut v: Vec<u32> = self.elements.iter().map(|&x| self.group.conj(g, x)).collect();
        v.sort_unstable();
        Self::from_sorted_unchecked(&self.group, v.into())
    }

    pub fn is_normal(&self) -> bool {
        self.group
            .elements()
            .all(|g| self.elements.iter().all(|&x| self.contains(self.group.conj(g, x))))
    }

    /// Canonical key of this subgroup's conjugacy class.
    pub fn class_key(&self) -> ClassKey {
        canonical_key(&self.group, &self.elements)
    }

    /// A small generating set, chosen greedily by least element.
    pub fn generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = vec![0u32];
        for &x in self.elements.iter() {
            if current.binary_search(&x).is_err() {
                gens.push(x);
                current = closure(&self.group, &gens);
                if current.len() == self.order() {
                    break;
                }
            }
        }
        gens
    }
}

fn lex_less(a: &[u32], b: &[u32]) -> bool {
    a < b
}

/// Lexicographically least conjugate of the sorted subgroup `elements`.
pub fn canonical_key(group: &FiniteGroup, elements: &[u32]) -> ClassKey {
    let data = group.data();
    if let Some(k) = data.canon.lock().expect("canon cache poisoned").get(elements) {
        return k.clone();
    }
    let mut best: Vec<u32> = elements.to_vec();
    let mut buf: Vec<u32> = Vec::with_capacity(elements.len());
    if elements.len() != group.order() && elements.len() > 1 {
        for g in group.elements().skip(1) {
            let gi = group.inv(g);
            buf.clear();
            buf.extend(elements.iter().map(|&x| group.mul(group.mul(g, x), gi)));
            buf.sort_unstable();
            if lex_less(&buf, &best) {
                std::mem::swap(&mut buf, &mut best);
            }
        }
    }
    let key = ClassKey(best.into());
    let mut cache = data.canon.lock().expect("canon cache poisoned");
    cache.insert(elements.to_vec().into(), key.clone());
    cache.insert(key.0.clone(), key.clone());
    key
}

pub fn are_conjugate(u: &Subgroup, v: &Subgroup) -> bool {
    u.group == v.group && u.order() == v.order() && u.class_key() == v.class_key()
}

pub fn normalizer(u: &Subgroup) -> Subgroup {
    let g = &u.group;
    let els: Vec<u32> = g
        .elements()
        .filter(|&x| u.elements.iter().all(|&y| u.contains(g.conj(x, y))))
        .collect();
    Subgroup::from_sorted_unchecked(g, els.into())
}

/// One conjugacy class of subgroups in the canonical ordering.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub index: usize,
    pub representative: Subgroup,
    pub generators: Vec<u32>,
    /// Number of conjugates.
    pub size: usize,
}

impl SubgroupClass {
    pub fn key(&self) -> ClassKey {
        ClassKey(self.representative.elements.clone())
    }

    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// All conjugacy classes of subgroups, sorted by (order, lex of the least
/// conjugate). Cached per group.
pub fn subgroup_classes(group: &FiniteGroup) -> Arc<[SubgroupClass]> {
    group
        .data()
        .classes
        .get_or_init(|| enumerate_classes(group).into())
        .clone()
}

fn enumerate_classes(group: &FiniteGroup) -> Vec<SubgroupClass> {
    let n = group.order();
    let mut seen: HashSet<ClassKey> = HashSet::new();
    let trivial = ClassKey(vec![0u32].into());
    seen.insert(trivial.clone());
    let mut found: Vec<(ClassKey, Vec<u32>)> = vec![(trivial, Vec::new())];
    let mut i = 0;
    while i < found.len() {
        let (key, gens) = found[i].clone();
        let mut covered = vec![false; n];
        for &x in key.elements() {
            covered[x as usize] = true;
        }
        for g in group.elements() {
            if covered[g as usize] {
                continue;
            }
            // ⟨S, g⟩ = ⟨S, sg⟩ for s ∈ S.
            for &s in key.elements() {
                covered[group.mul(s, g) as usize] = true;
            }
            let mut new_gens = gens.clone();
            new_gens.push(g);
            let sub = closure(group, &new_gens);
            let canon = canonical_key(group, &sub);
            if seen.insert(canon.clone()) {
                let rep = Subgroup::from_sorted_unchecked(group, canon.0.clone());
                found.push((canon, rep.generators()));
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
        .into_iter()
        .enumerate()
        .map(|(index, (key, generators))| {
            let rep = Subgroup::from_sorted_unchecked(group, key.0.clone());
            let size = n / normalizer(&rep).order();
            SubgroupClass {
                index,
                representative: rep,
                generators,
                size,
            }
        })
        .collect()
}

/// Position of a canonical key in `subgroup_classes(group)`.
pub fn class_index(group: &FiniteGroup, key: &ClassKey) -> Option<usize> {
    let classes = subgroup_classes(group);
    classes.binary_search_by(|c| c.key().cmp(key)).ok()
}

/// Minimal representatives of the double cosets `U\G/V`, in increasing order.
pub fn double_cosets(group: &FiniteGroup, u: &Subgroup, v: &Subgroup) -> Result<Vec<u32>> {
    for s in [u, v] {
        if s.group() != group {
            return Err(Error::NotASubgroup(group.name().to_string()));
        }
    }
    Ok(double_coset_reps(group, u.elements(), v.elements()))
}

pub(crate) fn double_coset_reps(group: &FiniteGroup, u: &[u32], v: &[u32]) -> Vec<u32> {
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    for x in group.elements() {
        if covered[x as usize] {
            continue;
        }
        reps.push(x);
        for &a in u {
            let ax = group.mul(a, x);
            for &b in v {
                covered[group.mul(ax, b) as usize] = true;
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_catalog, direct_product};

    fn grp(name: &str) -> FiniteGroup {
        builtin_catalog().get(name).unwrap().clone()
    }

    /// Oracle: close every subset of size ≤ 3 (enough generators for these
    /// groups), then group the subgroups by brute-force conjugacy.
    fn oracle_class_count(g: &FiniteGroup) -> (usize, usize) {
        let n = g.order() as u32;
        let mut subs: HashSet<Vec<u32>> = HashSet::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    subs.insert(closure(g, &[a, b, c]));
                }
            }
        }
        let subs: Vec<Vec<u32>> = subs.into_iter().collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for (i, s) in subs.iter().enumerate() {
            for cls in classes.iter_mut() {
                let t = &subs[cls[0]];
                if t.len() == s.len()
                    && g.elements().any(|x| {
                        let mut c: Vec<u32> = s.iter().map(|&y| g.conj(x, y)).collect();
                        c.sort_unstable();
                        &c == t
                    })
                {
                    cls.push(i);
                    continue 'outer;
                }
            }
            classes.push(vec![i]);
        }
        (classes.len(), subs.len())
    }

    #[test]
    fn class_counts_match_oracle() {
        assert_eq!(subgroup_classes(&grp("C2")).len(), 2);
        for (name, expected) in [("S3", 4), ("V4", 5), ("C4", 3), ("D8", 8), ("Q8", 6)] {
            let g = grp(name);
            let (count, _) = oracle_class_count(&g);
            assert_eq!(count, expected, "{name}");
            assert_eq!(subgroup_classes(&g).len(), expected, "{name}");
        }
    }

    #[test]
    fn classes_are_canonical_and_exhaustive() {
        for name in ["S3", "D8", "C6"] {
            let g = grp(name);
            let classes = subgroup_classes(&g);
            let (_, total) = oracle_class_count(&g);
            assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), total, "{name}");
            for w in classes.windows(2) {
                assert!(w[0].key() < w[1].key());
                assert!(!are_conjugate(&w[0].representative, &w[1].representative));
            }
            for c in classes.iter() {
                let rep = &c.representative;
                for x in g.elements() {
                    assert!(rep.elements() <= rep.conjugate(x).elements());
                }
                assert_eq!(Subgroup::generated(&g, &c.generators), *rep);
            }
        }
    }

    #[test]
    fn product_class_count() {
        let c2 = grp("C2");
        let v = direct_product(&[c2.clone(), c2]);
        assert_eq!(subgroup_classes(&v).len(), 5);
    }

    #[test]
    fn double_cosets_partition() {
        let s3 = grp("S3");
        let classes = subgroup_classes(&s3);
        let c2 = classes[1].representative.clone();
        let c3 = classes[2].representative.clone();
        assert_eq!(c2.order(), 2);
        assert_eq!(c3.order(), 3);
        assert_eq!(double_cosets(&s3, &c2, &c3).unwrap().len(), 1);
        let c2g = grp("C2");
        let t = Subgroup::trivial(&c2g);
        let w = Subgroup::whole(&c2g);
        assert_eq!(double_cosets(&c2g, &w, &w).unwrap(), vec![0]);
        assert_eq!(double_cosets(&c2g, &t, &t).unwrap(), vec![0, 1]);
        assert!(double_cosets(&s3, &t, &w).is_err());

        for name in ["S3", "D8", "Q8"] {
            let g = grp(name);
            let cls = subgroup_classes(&g);
            for a in cls.iter() {
                for b in cls.iter() {
                    let (u, v) = (&a.representative, &b.representative);
                    let reps = double_cosets(&g, u, v).unwrap();
                    let mut hit = vec![0usize; g.order()];
                    for &x in &reps {
                        let mut set: Vec<u32> = u
                            .elements()
                            .iter()
                            .flat_map(|&p| v.elements().iter().map(move |&q| (p, q)))
                            .map(|(p, q)| g.mul(g.mul(p, x), q))
                            .collect();
                        set.sort_unstable();
                        set.dedup();
                        for y in set {
                            hit[y as usize] += 1;
                        }
                    }
                    assert!(hit.iter().all(|&h| h == 1));
                }
            }
        }
    }

    #[test]
    fn conjugacy_utilities() {
        let s3 = grp("S3");
        let c3 = subgroup_classes(&s3)[2].representative.clone();
        assert_eq!(normalizer(&c3).order(), 6);
        assert!(c3.is_normal());
        let twos: Vec<Subgroup> = s3
            .elements()
            .filter(|&x| s3.element_order(x) == 2)
            .map(|x| Subgroup::generated(&s3, &[x]))
            .collect();
        assert_eq!(twos.len(), 3);
        for a in &twos {
            assert!(are_conjugate(a, a));
            for b in &twos {
                assert!(are_conjugate(a, b));
            }
        }
        assert!(Subgroup::new(&s3, c3.elements().iter().copied()).is_ok());
        assert!(Subgroup::new(&s3, [1]).is_err());
        assert!(Subgroup::new(&s3, [0, twos[0].elements()[1], twos[1].elements()[1]]).is_err());
    }
}
