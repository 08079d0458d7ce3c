use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::GreenFunctor;
use crate::biset::{one_point, BurnsideElement};
use crate::error::{Error, Result};
use crate::group::{canonical_key, direct_product, double_coset_reps, ClassKey, FiniteGroup};
use crate::scalar::{int, Ring, Scalar};

/// The Burnside functor `B_k`, with `B_k(G) = B_k(G, 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Burnside;

fn check_one_sided(a: &BurnsideElement) -> Result<()> {
    if !a.right().is_trivial() {
        return Err(Error::GroupMismatch {
            expected: format!("B({},1)", a.left()),
            found: format!("B({},{})", a.left(), a.right()),
        });
    }
    Ok(())
}

type MulKey = (u64, ClassKey, ClassKey);
type MulCache = Mutex<HashMap<MulKey, Arc<Vec<(ClassKey, i64)>>>>;

fn mul_cache() -> &'static MulCache {
    static CACHE: OnceLock<MulCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `[G/U]·[G/V] = Σ_{g ∈ U\G/V} [G/(U ∩ gVg⁻¹)]`, keyed in `G×1`.
fn basis_mul(g: &FiniteGroup, gt: &FiniteGroup, u: &ClassKey, v: &ClassKey) -> Arc<Vec<(ClassKey, i64)>> {
    let key = (gt.id(), u.clone(), v.clone());
    if let Some(t) = mul_cache().lock().expect("mul cache poisoned").get(&key) {
        return t.clone();
    }
    let mut counts: BTreeMap<ClassKey, i64> = BTreeMap::new();
    let mut in_u = vec![false; g.order()];
    for &x in u.elements() {
        in_u[x as usize] = true;
    }
    for x in double_coset_reps(g, u.elements(), v.elements()) {
        let mut meet: Vec<u32> = v
            .elements()
            .iter()
            .map(|&y| g.conj(x, y))
            .filter(|&y| in_u[y as usize])
            .collect();
        meet.sort_unstable();
        *counts.entry(canonical_key(gt, &meet)).or_insert(0) += 1;
    }
    let out = Arc::new(counts.into_iter().collect::<Vec<_>>());
    mul_cache()
        .lock()
        .expect("mul cache poisoned")
        .insert(key, out.clone());
    out
}

impl GreenFunctor for Burnside {
    type Elem = BurnsideElement;

    fn tag(&self) -> String {
        "B".into()
    }

    fn group_of(&self, a: &BurnsideElement) -> FiniteGroup {
        a.left().clone()
    }

    fn zero(&self, g: &FiniteGroup, ring: Ring) -> BurnsideElement {
        BurnsideElement::zero(g, &FiniteGroup::trivial(), ring)
    }

    fn basis(&self, g: &FiniteGroup, ring: Ring) -> Vec<BurnsideElement> {
        BurnsideElement::basis_elements(g, &FiniteGroup::trivial(), ring)
    }

    fn coords(&self, a: &BurnsideElement) -> Vec<Scalar> {
        a.coords()
    }

    fn from_coords(&self, g: &FiniteGroup, ring: Ring, coords: &[Scalar]) -> Result<BurnsideElement> {
        BurnsideElement::from_coords(g, &FiniteGroup::trivial(), ring, coords)
    }

    fn act(&self, x: &BurnsideElement, a: &BurnsideElement) -> Result<BurnsideElement> {
        check_one_sided(a)?;
        if x.ring() != a.ring() {
            return x.with_ring(a.ring())?.compose(a);
        }
        x.compose(a)
    }

    fn cross(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        check_one_sided(a)?;
        check_one_sided(b)?;
        let ring = a.ring().ensure_same(b.ring())?;
        let gh = direct_product(&[a.left().clone(), b.left().clone()]);
        let one = FiniteGroup::trivial();
        let target = direct_product(&[gh.clone(), one.clone()]);
        let hn = b.left().order() as u32;
        let mut terms: BTreeMap<ClassKey, Scalar> = BTreeMap::new();
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                let mut els: Vec<u32> = u
                    .elements()
                    .iter()
                    .flat_map(|&x| v.elements().iter().map(move |&y| x * hn + y))
                    .collect();
                els.sort_unstable();
                *terms.entry(canonical_key(&target, &els)).or_insert_with(|| int(0)) += c * d;
            }
        }
        BurnsideElement::from_terms(&gh, &one, ring, terms)
    }

    fn mul(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        check_one_sided(a)?;
        if a.left() != b.left() {
            return Err(Error::GroupMismatch {
                expected: a.left().name().into(),
                found: b.left().name().into(),
            });
        }
        let ring = a.ring().ensure_same(b.ring())?;
        let g = a.left();
        let gt = a.product_group();
        let mut terms: BTreeMap<ClassKey, Scalar> = BTreeMap::new();
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                for (k, n) in basis_mul(g, gt, u, v).iter() {
                    *terms.entry(k.clone()).or_insert_with(|| int(0)) += c * d * int(*n);
                }
            }
        }
        BurnsideElement::from_terms(g, &FiniteGroup::trivial(), ring, terms)
    }

    fn epsilon(&self, ring: Ring) -> BurnsideElement {
        let one = FiniteGroup::trivial();
        one_point(&one, &one).with_ring(ring).expect("integral")
    }
}
