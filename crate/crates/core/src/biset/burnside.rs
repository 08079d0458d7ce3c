use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{
    canonical_key, class_index, direct_product, double_coset_reps, regroup, subgroup_classes,
    ClassKey, FiniteGroup, Subgroup,
};
use crate::scalar::{int, to_exact_string, Ring, Scalar};

/// A `k`-linear combination of transitive `(H, G)`-bisets, i.e. an element of
/// `B_k(H, G)`. Terms are keyed by the canonical class of the stabilizer in
/// `H×G`; zero coefficients are never stored.
#[derive(Clone)]
pub struct BurnsideElement {
    left: FiniteGroup,
    right: FiniteGroup,
    product: FiniteGroup,
    ring: Ring,
    terms: BTreeMap<ClassKey, Scalar>,
}

/// Equality of groups and coefficients; the coefficient ring is not compared.
impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right && self.terms == other.terms
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})[", self.left, self.right)?;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{:?}", to_exact_string(c), k)?;
        }
        write!(f, "]")
    }
}

impl BurnsideElement {
    pub fn zero(left: &FiniteGroup, right: &FiniteGroup, ring: Ring) -> Self {
        BurnsideElement {
            left: left.clone(),
            right: right.clone(),
            product: direct_product(&[left.clone(), right.clone()]),
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// Builds an element from terms whose keys must already be canonical in
    /// `left × right`.
    pub(crate) fn from_terms(
        left: &FiniteGroup,
        right: &FiniteGroup,
        ring: Ring,
        terms: BTreeMap<ClassKey, Scalar>,
    ) -> Result<Self> {
        let mut e = Self::zero(left, right, ring);
        for (k, c) in terms {
            ring.check(&c)?;
            if c != int(0) {
                e.terms.insert(k, c);
            }
        }
        Ok(e)
    }

    /// `c·[(H×G)/L]`.
    pub fn transitive(left: &FiniteGroup, right: &FiniteGroup, l: &Subgroup, ring: Ring) -> Result<Self> {
        let mut e = Self::zero(left, right, ring);
        if l.group() != &e.product {
            return Err(Error::NotASubgroup(e.product.name().to_string()));
        }
        e.terms.insert(l.class_key(), int(1));
        Ok(e)
    }

    /// The basis element at position `index` of `subgroup_classes(H×G)`.
    pub fn basis(left: &FiniteGroup, right: &FiniteGroup, index: usize, ring: Ring) -> Result<Self> {
        let mut e = Self::zero(left, right, ring);
        let classes = subgroup_classes(&e.product);
        let class = classes.get(index).ok_or_else(|| {
            Error::InvalidArgument(format!("class index {index} out of range for {}", e.product))
        })?;
        e.terms.insert(class.key(), int(1));
        Ok(e)
    }

    /// All basis elements of `B(H, G)` in canonical order.
    pub fn basis_elements(left: &FiniteGroup, right: &FiniteGroup, ring: Ring) -> Vec<Self> {
        let p = direct_product(&[left.clone(), right.clone()]);
        (0..subgroup_classes(&p).len())
            .map(|i| Self::basis(left, right, i, ring).expect("index in range"))
            .collect()
    }

    pub fn left(&self) -> &FiniteGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteGroup {
        &self.right
    }

    /// `H×G`.
    pub fn product_group(&self) -> &FiniteGroup {
        &self.product
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ClassKey, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, key: &ClassKey) -> Scalar {
        self.terms.get(key).copied().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same element over another coefficient ring.
    pub fn with_ring(&self, ring: Ring) -> Result<Self> {
        for c in self.terms.values() {
            ring.check(c)?;
        }
        Ok(BurnsideElement {
            ring,
            ..self.clone()
        })
    }

    fn check_same_space(&self, other: &Self) -> Result<Ring> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::GroupMismatch {
                expected: format!("B({},{})", self.left, self.right),
                found: format!("B({},{})", other.left, other.right),
            });
        }
        self.ring.ensure_same(other.ring)
    }

    fn insert_add(terms: &mut BTreeMap<ClassKey, Scalar>, k: &ClassKey, c: Scalar) {
        let slot = terms.entry(k.clone()).or_insert_with(|| int(0));
        *slot += c;
        if *slot == int(0) {
            terms.remove(k);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            Self::insert_add(&mut out.terms, k, *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        self.ring.check(c)?;
        let mut out = Self::zero(&self.left, &self.right, self.ring);
        if *c != int(0) {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        Ok(out)
    }

    /// Coordinates over `subgroup_classes(H×G)`.
    pub fn coords(&self) -> Vec<Scalar> {
        let n = subgroup_classes(&self.product).len();
        let mut v = vec![int(0); n];
        for (k, c) in &self.terms {
            let i = class_index(&self.product, k).expect("canonical key");
            v[i] = *c;
        }
        v
    }

    pub fn from_coords(left: &FiniteGroup, right: &FiniteGroup, ring: Ring, coords: &[Scalar]) -> Result<Self> {
        let mut e = Self::zero(left, right, ring);
        let classes = subgroup_classes(&e.product);
        if coords.len() != classes.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates for B({left},{right}), got {}",
                classes.len(),
                coords.len()
            )));
        }
        for (c, class) in coords.iter().zip(classes.iter()) {
            ring.check(c)?;
            if *c != int(0) {
                e.terms.insert(class.key(), *c);
            }
        }
        Ok(e)
    }

    /// Mackey composition `self ∘ alpha` for `self ∈ B(K,H)`, `alpha ∈ B(H,G)`.
    pub fn compose(&self, alpha: &BurnsideElement) -> Result<BurnsideElement> {
        if self.right != alpha.left {
            return Err(Error::GroupMismatch {
                expected: self.right.name().to_string(),
                found: alpha.left.name().to_string(),
            });
        }
        let ring = self.ring.ensure_same(alpha.ring)?;
        let mut out = Self::zero(&self.left, &alpha.right, ring);
        for (l, a) in &self.terms {
            for (m, b) in &alpha.terms {
                let part = mackey(&self.left, &self.right, &alpha.right, l, m);
                let ab = a * b;
                for (k, n) in part.iter() {
                    Self::insert_add(&mut out.terms, k, ab * int(*n));
                }
            }
        }
        Ok(out)
    }

    /// `[X] ↦ [X^op]`, an element of `B(G, H)`.
    pub fn opposite(&self) -> BurnsideElement {
        let mut out = Self::zero(&self.right, &self.left, self.ring);
        let (hn, gn) = (self.left.order() as u32, self.right.order() as u32);
        for (k, c) in &self.terms {
            let mut els: Vec<u32> = k
                .elements()
                .iter()
                .map(|&e| (e % gn) * hn + e / gn)
                .collect();
            els.sort_unstable();
            out.terms.insert(canonical_key(&out.product, &els), *c);
        }
        out
    }

    /// External product: `self ∈ B(H,G)`, `beta ∈ B(L,K)` give an element of
    /// `B(H×L, G×K)`.
    pub fn external(&self, beta: &BurnsideElement) -> Result<BurnsideElement> {
        let ring = self.ring.ensure_same(beta.ring)?;
        let hl = direct_product(&[self.left.clone(), beta.left.clone()]);
        let gk = direct_product(&[self.right.clone(), beta.right.clone()]);
        let mut out = Self::zero(&hl, &gk, ring);
        let (gn, ln, kn) = (
            self.right.order() as u32,
            beta.left.order() as u32,
            beta.right.order() as u32,
        );
        let gkn = gn * kn;
        for (s, a) in &self.terms {
            for (t, b) in &beta.terms {
                let mut els = Vec::with_capacity(s.order() * t.order());
                for &x in s.elements() {
                    let (h, g) = (x / gn, x % gn);
                    for &y in t.elements() {
                        let (l, k) = (y / kn, y % kn);
                        els.push((h * ln + l) * gkn + g * kn + k);
                    }
                }
                els.sort_unstable();
                let key = canonical_key(&out.product, &els);
                Self::insert_add(&mut out.terms, &key, a * b);
            }
        }
        Ok(out)
    }

    /// `B(H,G) → B(H×G) = B(H×G, 1)`: the biset as an `H×G`-set.
    pub fn arrow(&self) -> BurnsideElement {
        let mut out = Self::zero(&self.product, &FiniteGroup::trivial(), self.ring);
        // Subgroups of (H×G)×1 carry the same indices and conjugation.
        out.terms = self.terms.clone();
        out
    }

    /// Inverse of [`arrow`](Self::arrow) for `H×G = left`.
    pub fn arrow_inverse(&self, h: &FiniteGroup, g: &FiniteGroup) -> Result<BurnsideElement> {
        let hg = direct_product(&[h.clone(), g.clone()]);
        if self.left != hg || !self.right.is_trivial() {
            return Err(Error::GroupMismatch {
                expected: format!("B({hg},1)"),
                found: format!("B({},{})", self.left, self.right),
            });
        }
        let mut out = Self::zero(h, g, self.ring);
        out.terms = self.terms.clone();
        Ok(out)
    }

    /// Reinterprets the element along index-preserving identifications of
    /// the two groups (e.g. `1×1` with `1`).
    pub fn relabel(&self, left: &FiniteGroup, right: &FiniteGroup) -> Result<BurnsideElement> {
        regroup(&self.left, left)?;
        regroup(&self.right, right)?;
        let mut out = Self::zero(left, right, self.ring);
        for (k, c) in &self.terms {
            out.terms.insert(canonical_key(&out.product, k.elements()), *c);
        }
        Ok(out)
    }

    /// `{ "left", "right", "terms": [{ "classIndex", "subgroupOrder", "coeff" }] }`
    /// with terms in class-index order.
    pub fn to_json(&self) -> Value {
        let mut terms: Vec<(usize, &ClassKey, &Scalar)> = self
            .terms
            .iter()
            .map(|(k, c)| (class_index(&self.product, k).expect("canonical key"), k, c))
            .collect();
        terms.sort_by_key(|t| t.0);
        json!({
            "left": self.left.name(),
            "right": self.right.name(),
            "terms": terms
                .into_iter()
                .map(|(i, k, c)| json!({
                    "classIndex": i,
                    "subgroupOrder": k.order(),
                    "coeff": to_exact_string(c),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

type MackeyKey = (u64, u64, u64, ClassKey, ClassKey);
type MackeyTerms = Arc<Vec<(ClassKey, i64)>>;

fn mackey_cache() -> &'static Mutex<HashMap<MackeyKey, MackeyTerms>> {
    static CACHE: OnceLock<Mutex<HashMap<MackeyKey, MackeyTerms>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `[(K×H)/L] ∘ [(H×G)/M] = Σ_x [(K×G)/(L ∗ ^(x,1)M)]` over
/// `x ∈ p₂(L)\H/p₁(M)`.
fn mackey(
    k: &FiniteGroup,
    h: &FiniteGroup,
    g: &FiniteGroup,
    l: &ClassKey,
    m: &ClassKey,
) -> MackeyTerms {
    let key = (k.id(), h.id(), g.id(), l.clone(), m.clone());
    if let Some(t) = mackey_cache().lock().expect("mackey cache poisoned").get(&key) {
        return t.clone();
    }
    let (hn, gn) = (h.order() as u32, g.order() as u32);
    let kg = direct_product(&[k.clone(), g.clone()]);
    let mut p2l: Vec<u32> = l.elements().iter().map(|&e| e % hn).collect();
    p2l.sort_unstable();
    p2l.dedup();
    let mut p1m: Vec<u32> = m.elements().iter().map(|&e| e / gn).collect();
    p1m.sort_unstable();
    p1m.dedup();

    let mut counts: BTreeMap<ClassKey, i64> = BTreeMap::new();
    let mut by_h: Vec<Vec<u32>> = vec![Vec::new(); hn as usize];
    let mut mark = vec![false; kg.order()];
    for x in double_coset_reps(h, &p2l, &p1m) {
        for v in by_h.iter_mut() {
            v.clear();
        }
        for &e in m.elements() {
            by_h[h.conj(x, e / gn) as usize].push(e % gn);
        }
        mark.iter_mut().for_each(|b| *b = false);
        for &e in l.elements() {
            let (kk, hh) = (e / hn, e % hn);
            for &gg in &by_h[hh as usize] {
                mark[(kk * gn + gg) as usize] = true;
            }
        }
        let star: Vec<u32> = (0..kg.order() as u32).filter(|&i| mark[i as usize]).collect();
        *counts.entry(canonical_key(&kg, &star)).or_insert(0) += 1;
    }
    let terms: MackeyTerms = Arc::new(counts.into_iter().collect());
    mackey_cache()
        .lock()
        .expect("mackey cache poisoned")
        .insert(key, terms.clone());
    terms
}
