//! Finite groups given by closed multiplication tables.
//!
//! A [`FiniteGroup`] is a cheap handle (an `Arc`) with identity semantics:
//! two handles are equal iff they come from the same construction. Direct
//! products and quotients are interned, so building `G x H` twice returns the
//! same object, while `(G x H) x K` and `G x (H x K)` remain distinct objects
//! whose element indices happen to agree.
//!
//! Elements are `u32` indices with the identity at `0`. Product elements use
//! tuple-lexicographic indexing (first factor most significant).

mod catalog;
mod hom;
mod subgroup;

pub use catalog::{builtin_catalog, Catalog, CatalogEntry};
pub use hom::{
    all_homomorphisms, diagonal, inclusion, inflation_hom, projection, quotient, regroup,
    reversal, swap, GroupHom,
};
pub use subgroup::{
    are_conjugate, canonical_key, class_index, double_cosets, normalizer, subgroup_classes, ClassKey,
    Subgroup, SubgroupClass,
};
pub(crate) use subgroup::double_coset_reps;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Products up to this order get an explicit Cayley table.
const TABLE_LIMIT: usize = 512;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

pub(crate) struct GroupData {
    id: u64,
    name: String,
    order: usize,
    mul: Option<Vec<u32>>,
    inv: Vec<u32>,
    factors: Vec<FiniteGroup>,
    /// Flattened non-product factors; these always carry a table.
    leaves: Vec<FiniteGroup>,
    pub(crate) classes: OnceLock<Arc<[SubgroupClass]>>,
    pub(crate) canon: Mutex<HashMap<Arc<[u32]>, ClassKey>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for FiniteGroup {}

impl Hash for FiniteGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

fn new_data(
    name: String,
    order: usize,
    mul: Option<Vec<u32>>,
    inv: Vec<u32>,
    factors: Vec<FiniteGroup>,
    leaves: Vec<FiniteGroup>,
) -> FiniteGroup {
    FiniteGroup(Arc::new(GroupData {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        name,
        order,
        mul,
        inv,
        factors,
        leaves,
        classes: OnceLock::new(),
        canon: Mutex::new(HashMap::new()),
    }))
}

impl FiniteGroup {
    /// Builds a group from an `n x n` table, validating the group axioms.
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |reason: String| Error::InvalidTable {
            group: name.clone(),
            reason,
        };
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(bad("table too large".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(bad(format!("entry ({a},{b}) = {c} is out of range")));
                }
                flat.push(c as u32);
            }
        }
        for a in 0..n {
            if flat[a] as usize != a || flat[a * n] as usize != a {
                return Err(bad(format!("index 0 is not a two-sided identity at element {a}")));
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if flat[a * n + b] == 0 && flat[b * n + a] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(bad(format!("element {a} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let bc = flat[b * n + c] as usize;
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(bad(format!("associativity fails at triple ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(Self::from_trusted_table(name, flat, inv))
    }

    pub(crate) fn from_trusted_table(name: String, mul: Vec<u32>, inv: Vec<u32>) -> Self {
        let order = inv.len();
        new_data(name, order, Some(mul), inv, Vec::new(), Vec::new())
    }

    /// The trivial group `1` shared by every `B(G, 1)` identification.
    pub fn trivial() -> FiniteGroup {
        static TRIVIAL: OnceLock<FiniteGroup> = OnceLock::new();
        TRIVIAL
            .get_or_init(|| Self::from_trusted_table("1".into(), vec![0], vec![0]))
            .clone()
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    pub fn is_product(&self) -> bool {
        !self.0.factors.is_empty()
    }

    /// Immediate factors; empty for a non-product group.
    pub fn factors(&self) -> &[FiniteGroup] {
        &self.0.factors
    }

    /// The flattened non-product factors (the group itself if not a product).
    pub fn leaves(&self) -> Vec<FiniteGroup> {
        if self.is_product() {
            self.0.leaves.clone()
        } else {
            vec![self.clone()]
        }
    }

    pub(crate) fn data(&self) -> &GroupData {
        &self.0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.mul {
            Some(t) => t[a as usize * self.0.order + b as usize],
            None => self.mul_by_leaves(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inv[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.order as u32
    }

    fn mul_by_leaves(&self, mut a: u32, mut b: u32) -> u32 {
        let leaves = &self.0.leaves;
        let mut out = 0u32;
        let mut place = 1u32;
        for leaf in leaves.iter().rev() {
            let r = leaf.order() as u32;
            let (da, db) = (a % r, b % r);
            a /= r;
            b /= r;
            out += leaf.mul(da, db) * place;
            place *= r;
        }
        out
    }

    /// Splits a product element into its immediate factor components.
    pub fn components(&self, mut x: u32) -> Vec<u32> {
        let fs = &self.0.factors;
        let mut out = vec![0; fs.len()];
        for (i, f) in fs.iter().enumerate().rev() {
            let r = f.order() as u32;
            out[i] = x % r;
            x /= r;
        }
        out
    }

    /// Inverse of [`components`](Self::components).
    pub fn compose_components(&self, parts: &[u32]) -> u32 {
        let mut x = 0u32;
        for (f, &p) in self.0.factors.iter().zip(parts) {
            x = x * f.order() as u32 + p;
        }
        x
    }

    /// Human-readable element label: factor tuples for products.
    pub fn element_label(&self, x: u32) -> String {
        if self.is_product() {
            let parts: Vec<String> = self
                .components(x)
                .into_iter()
                .zip(self.factors())
                .map(|(p, f)| f.element_label(p))
                .collect();
            format!("({})", parts.join(","))
        } else {
            x.to_string()
        }
    }

    /// Explicit `n x n` table (materialized on demand for large products).
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n as u32)
            .map(|a| (0..n as u32).map(|b| self.mul(a, b) as usize).collect())
            .collect()
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn center(&self) -> Vec<u32> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Full triple-loop associativity check.
    pub fn check_associative(&self) -> std::result::Result<(), (u32, u32, u32)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Group structure relabelled as a fresh non-product group with the same
    /// element indices.
    pub fn flattened(&self, name: impl Into<String>) -> FiniteGroup {
        let n = self.order();
        let mut mul = Vec::with_capacity(n * n);
        for a in self.elements() {
            for b in self.elements() {
                mul.push(self.mul(a, b));
            }
        }
        Self::from_trusted_table(name.into(), mul, self.0.inv.clone())
    }
}

fn product_registry() -> &'static Mutex<HashMap<Vec<u64>, FiniteGroup>> {
    static REG: OnceLock<Mutex<HashMap<Vec<u64>, FiniteGroup>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

fn factor_name(g: &FiniteGroup) -> String {
    if g.is_product() {
        format!("({})", g.name())
    } else {
        g.name().to_string()
    }
}

/// Direct product with tuple-lexicographic indexing. A single factor is
/// returned unchanged.
pub fn direct_product(gs: &[FiniteGroup]) -> FiniteGroup {
    assert!(!gs.is_empty(), "direct_product of an empty sequence");
    if gs.len() == 1 {
        return gs[0].clone();
    }
    let key: Vec<u64> = gs.iter().map(|g| g.id()).collect();
    let mut reg = product_registry().lock().expect("product registry poisoned");
    if let Some(g) = reg.get(&key) {
        return g.clone();
    }
    let order: usize = gs.iter().map(|g| g.order()).product();
    assert!(order <= u32::MAX as usize, "product order overflows u32");
    let leaves: Vec<FiniteGroup> = gs.iter().flat_map(|g| g.leaves()).collect();
    let name = gs.iter().map(factor_name).collect::<Vec<_>>().join("x");

    let mut skeleton = new_data(name.clone(), order, None, Vec::new(), gs.to_vec(), leaves);
    // Inverse table via leaves.
    let inv: Vec<u32> = (0..order as u32)
        .map(|x| {
            let mut rest = x;
            let mut out = 0u32;
            let mut place = 1u32;
            for leaf in skeleton.0.leaves.iter().rev() {
                let r = leaf.order() as u32;
                out += leaf.inv(rest % r) * place;
                rest /= r;
                place *= r;
            }
            out
        })
        .collect();
    let data = Arc::get_mut(&mut skeleton.0).expect("fresh product is unshared");
    data.inv = inv;
    if order <= TABLE_LIMIT {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order as u32 {
            for b in 0..order as u32 {
                mul.push(skeleton.mul_by_leaves(a, b));
            }
        }
        Arc::get_mut(&mut skeleton.0).expect("unshared").mul = Some(mul);
    }
    reg.insert(key, skeleton.clone());
    skeleton
}

/// Cyclic group of order `n` with `k ↦ k` additive indexing.
pub fn cyclic(n: usize, name: impl Into<String>) -> FiniteGroup {
    let mul = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
        .collect();
    let inv = (0..n).map(|a| ((n - a) % n) as u32).collect();
    FiniteGroup::from_trusted_table(name.into(), mul, inv)
}
