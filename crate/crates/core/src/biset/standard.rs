//! The standard bisets, each obtained by classifying an explicit concrete
//! biset. Results are memoized per input.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{BurnsideElement, ConcreteBiset};
use crate::error::{Error, Result};
use crate::group::{direct_product, inflation_hom, FiniteGroup, GroupHom, Subgroup};

#[derive(Clone, PartialEq, Eq, Hash)]
enum StdKey {
    Ind(u64, u64, Arc<[u32]>),
    Res(u64, u64, Arc<[u32]>),
    Arrow(u64),
    OnePoint(u64, u64),
    Contraction(u64, u64, u64),
}

fn memo(key: StdKey, build: impl FnOnce() -> Result<BurnsideElement>) -> Result<BurnsideElement> {
    static CACHE: OnceLock<Mutex<HashMap<StdKey, BurnsideElement>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("biset cache poisoned").get(&key) {
        return Ok(e.clone());
    }
    let e = build()?;
    cache
        .lock()
        .expect("biset cache poisoned")
        .insert(key, e.clone());
    Ok(e)
}

fn hom_key(phi: &GroupHom) -> (u64, u64, Arc<[u32]>) {
    (phi.source().id(), phi.target().id(), phi.images().into())
}

/// `H` as an `(H, G)`-biset: `h·x·g = h x φ(g)`.
pub fn ind_concrete(phi: &GroupHom) -> ConcreteBiset {
    let (g, h) = (phi.source(), phi.target());
    ConcreteBiset::new(h, g, h.order(), |a, x| h.mul(a, x), |x, b| h.mul(x, phi.apply(b)))
        .expect("induction biset")
}

/// `H` as a `(G, H)`-biset: `g·x·h = φ(g) x h`.
pub fn res_concrete(phi: &GroupHom) -> ConcreteBiset {
    let (g, h) = (phi.source(), phi.target());
    ConcreteBiset::new(g, h, h.order(), |a, x| h.mul(phi.apply(a), x), |x, b| h.mul(x, b))
        .expect("restriction biset")
}

/// `Ind(φ) ∈ B(H, G)` for `φ: G → H`.
pub fn ind(phi: &GroupHom) -> BurnsideElement {
    let (s, t, im) = hom_key(phi);
    memo(StdKey::Ind(s, t, im), || Ok(ind_concrete(phi).classify())).expect("infallible")
}

/// `Res(φ) ∈ B(G, H)` for `φ: G → H`.
pub fn res(phi: &GroupHom) -> BurnsideElement {
    let (s, t, im) = hom_key(phi);
    memo(StdKey::Res(s, t, im), || Ok(res_concrete(phi).classify())).expect("infallible")
}

/// `Iso(φ)` for a bijective `φ`.
pub fn iso(phi: &GroupHom) -> Result<BurnsideElement> {
    if !phi.is_bijective() {
        return Err(Error::InvalidArgument(format!(
            "Iso needs a bijection, got {} → {}",
            phi.source(),
            phi.target()
        )));
    }
    Ok(ind(phi))
}

/// `Inf_{G/N}^G ∈ B(G, G/N)`.
pub fn inf(g: &FiniteGroup, n: &Subgroup) -> Result<BurnsideElement> {
    Ok(res(&inflation_hom(g, n)?))
}

/// `Def_{G/N}^G ∈ B(G/N, G)`.
pub fn deflate(g: &FiniteGroup, n: &Subgroup) -> Result<BurnsideElement> {
    Ok(ind(&inflation_hom(g, n)?))
}

/// The regular `(G, G)`-biset.
pub fn identity_element(g: &FiniteGroup) -> BurnsideElement {
    ind(&GroupHom::identity(g))
}

/// `G` as a `(G×G, 1)`-biset: `(g₁, g₂)·x = g₁ x g₂⁻¹`.
pub fn right_arrow_concrete(g: &FiniteGroup) -> ConcreteBiset {
    let gg = direct_product(&[g.clone(), g.clone()]);
    let n = g.order() as u32;
    ConcreteBiset::new(
        &gg,
        &FiniteGroup::trivial(),
        g.order(),
        |p, x| g.mul(g.mul(p / n, x), g.inv(p % n)),
        |x, _| x,
    )
    .expect("arrow biset")
}

/// `→G ∈ B(G×G, 1)`.
pub fn right_arrow(g: &FiniteGroup) -> BurnsideElement {
    memo(StdKey::Arrow(g.id()), || Ok(right_arrow_concrete(g).classify())).expect("infallible")
}

/// `←G ∈ B(1, G×G)`, the opposite of `→G`.
pub fn left_arrow(g: &FiniteGroup) -> BurnsideElement {
    right_arrow(g).opposite()
}

/// The one-point `(H, G)`-biset.
pub fn one_point(h: &FiniteGroup, g: &FiniteGroup) -> BurnsideElement {
    memo(StdKey::OnePoint(h.id(), g.id()), || {
        Ok(ConcreteBiset::new(h, g, 1, |_, x| x, |x, _| x)?.classify())
    })
    .expect("infallible")
}

/// `K × ←H × G` as an element of `B(K×G, (K×H)×(H×G))`: points `K×H×G` with
/// `(k', g')·(k, h, g)·((k₁, h₁), (h₂, g₁)) = (k'k k₁, h₁⁻¹ h h₂, g'g g₁)`.
pub fn contraction_concrete(k: &FiniteGroup, h: &FiniteGroup, g: &FiniteGroup) -> ConcreteBiset {
    let kg = direct_product(&[k.clone(), g.clone()]);
    let kh = direct_product(&[k.clone(), h.clone()]);
    let hg = direct_product(&[h.clone(), g.clone()]);
    let right = direct_product(&[kh, hg.clone()]);
    let (hn, gn) = (h.order() as u32, g.order() as u32);
    let hgn = hg.order() as u32;
    let split = |p: u32| (p / (hn * gn), (p / gn) % hn, p % gn);
    let join = |a: u32, b: u32, c: u32| (a * hn + b) * gn + c;
    ConcreteBiset::new(
        &kg,
        &right,
        k.order() * h.order() * g.order(),
        |l, p| {
            let (a, b, c) = split(p);
            join(k.mul(l / gn, a), b, g.mul(l % gn, c))
        },
        |p, r| {
            let (a, b, c) = split(p);
            let (kh_el, hg_el) = (r / hgn, r % hgn);
            let (k1, h1) = (kh_el / hn, kh_el % hn);
            let (h2, g1) = (hg_el / gn, hg_el % gn);
            join(k.mul(a, k1), h.mul(h.mul(h.inv(h1), b), h2), g.mul(c, g1))
        },
    )
    .expect("contraction biset")
}

/// `K × ←H × G ∈ B(K×G, (K×H)×(H×G))`.
pub fn contraction(k: &FiniteGroup, h: &FiniteGroup, g: &FiniteGroup) -> BurnsideElement {
    memo(StdKey::Contraction(k.id(), h.id(), g.id()), || {
        Ok(contraction_concrete(k, h, g).classify())
    })
    .expect("infallible")
}
