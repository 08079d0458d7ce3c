use std::collections::BTreeMap;

use crate::biset::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{canonical_key, direct_product, FiniteGroup, Subgroup};
use crate::scalar::{int, Ring};

/// An explicit finite `(H, G)`-biset: points `0..size` with a left `H`-action
/// and a commuting right `G`-action.
#[derive(Clone, Debug)]
pub struct ConcreteBiset {
    left: FiniteGroup,
    right: FiniteGroup,
    size: usize,
    /// `left_act[h * size + x] = h·x`
    left_act: Vec<u32>,
    /// `right_act[x * |G| + g] = x·g`
    right_act: Vec<u32>,
}

impl ConcreteBiset {
    /// Tabulates and validates the two actions.
    pub fn new(
        left: &FiniteGroup,
        right: &FiniteGroup,
        size: usize,
        left_fn: impl Fn(u32, u32) -> u32,
        right_fn: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        let mut left_act = Vec::with_capacity(left.order() * size);
        for h in left.elements() {
            for x in 0..size as u32 {
                left_act.push(left_fn(h, x));
            }
        }
        let mut right_act = Vec::with_capacity(size * right.order());
        for x in 0..size as u32 {
            for g in right.elements() {
                right_act.push(right_fn(x, g));
            }
        }
        let b = ConcreteBiset {
            left: left.clone(),
            right: right.clone(),
            size,
            left_act,
            right_act,
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let n = self.size as u32;
        let fail = |msg: String| Err(Error::InvalidAction(msg));
        if self.left_act.iter().chain(&self.right_act).any(|&p| p >= n) {
            return fail("action leaves the point set".into());
        }
        for x in 0..n {
            if self.lact(0, x) != x || self.ract(x, 0) != x {
                return fail(format!("identity moves point {x}"));
            }
        }
        for h1 in self.left.elements() {
            for h2 in self.left.elements() {
                let h = self.left.mul(h1, h2);
                for x in 0..n {
                    if self.lact(h, x) != self.lact(h1, self.lact(h2, x)) {
                        return fail(format!("left action: ({h1}·{h2})·{x}"));
                    }
                }
            }
        }
        for g1 in self.right.elements() {
            for g2 in self.right.elements() {
                let g = self.right.mul(g1, g2);
                for x in 0..n {
                    if self.ract(x, g) != self.ract(self.ract(x, g1), g2) {
                        return fail(format!("right action: {x}·({g1}·{g2})"));
                    }
                }
            }
        }
        for h in self.left.elements() {
            for g in self.right.elements() {
                for x in 0..n {
                    if self.ract(self.lact(h, x), g) != self.lact(h, self.ract(x, g)) {
                        return fail(format!("actions do not commute at ({h},{x},{g})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &FiniteGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteGroup {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn lact(&self, h: u32, x: u32) -> u32 {
        self.left_act[h as usize * self.size + x as usize]
    }

    #[inline]
    pub fn ract(&self, x: u32, g: u32) -> u32 {
        self.right_act[x as usize * self.right.order() + g as usize]
    }

    /// `h·x·g`
    pub fn act(&self, h: u32, x: u32, g: u32) -> u32 {
        self.ract(self.lact(h, x), g)
    }

    /// The coset biset `(H×G)/L` with `h·(yL)·g = ((h, g⁻¹)·y)L`.
    pub fn transitive(h: &FiniteGroup, g: &FiniteGroup, l: &Subgroup) -> Result<Self> {
        let p = direct_product(&[h.clone(), g.clone()]);
        if l.group() != &p {
            return Err(Error::NotASubgroup(p.name().to_string()));
        }
        let mut coset_of = vec![u32::MAX; p.order()];
        let mut reps = Vec::new();
        for y in p.elements() {
            if coset_of[y as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(y);
            for &s in l.elements() {
                coset_of[p.mul(y, s) as usize] = id;
            }
        }
        let gn = g.order() as u32;
        Self::new(
            h,
            g,
            reps.len(),
            |hh, c| coset_of[p.mul(hh * gn, reps[c as usize]) as usize],
            |c, gg| coset_of[p.mul(g.inv(gg), reps[c as usize]) as usize],
        )
    }

    /// `Y ×_H X`: pairs modulo `(y·h, x) ~ (y, h·x)`.
    pub fn compose(y: &ConcreteBiset, x: &ConcreteBiset) -> Result<Self> {
        if y.right != x.left {
            return Err(Error::GroupMismatch {
                expected: y.right.name().into(),
                found: x.left.name().into(),
            });
        }
        let (ny, nx) = (y.size, x.size);
        let mut uf = UnionFind::new(ny * nx);
        for a in 0..ny as u32 {
            for b in 0..nx as u32 {
                for h in y.right.elements() {
                    let lhs = y.ract(a, h) as usize * nx + b as usize;
                    let rhs = a as usize * nx + x.lact(h, b) as usize;
                    uf.union(lhs, rhs);
                }
            }
        }
        let mut class = vec![u32::MAX; ny * nx];
        let mut count = 0u32;
        for i in 0..ny * nx {
            let r = uf.find(i);
            if class[r] == u32::MAX {
                class[r] = count;
                count += 1;
            }
            class[i] = class[r];
        }
        let mut rep = vec![0usize; count as usize];
        for i in (0..ny * nx).rev() {
            rep[class[i] as usize] = i;
        }
        Self::new(
            &y.left,
            &x.right,
            count as usize,
            |k, c| {
                let i = rep[c as usize];
                let (a, b) = ((i / nx) as u32, (i % nx) as u32);
                class[y.lact(k, a) as usize * nx + b as usize]
            },
            |c, g| {
                let i = rep[c as usize];
                let (a, b) = ((i / nx) as u32, (i % nx) as u32);
                class[a as usize * nx + x.ract(b, g) as usize]
            },
        )
    }

    /// `X^op`: `g·x·h = h⁻¹·x·g⁻¹`.
    pub fn opposite(&self) -> Self {
        let b = Self::new(
            &self.right,
            &self.left,
            self.size,
            |g, x| self.ract(x, self.right.inv(g)),
            |x, h| self.lact(self.left.inv(h), x),
        );
        b.expect("opposite of a valid biset")
    }

    /// External product `X × Y` as an `(H×L, G×K)`-biset.
    pub fn cartesian(x: &ConcreteBiset, y: &ConcreteBiset) -> Self {
        let hl = direct_product(&[x.left.clone(), y.left.clone()]);
        let gk = direct_product(&[x.right.clone(), y.right.clone()]);
        let ny = y.size as u32;
        let (ln, kn) = (y.left.order() as u32, y.right.order() as u32);
        Self::new(
            &hl,
            &gk,
            x.size * y.size,
            |hl_el, p| {
                let (h, l) = (hl_el / ln, hl_el % ln);
                x.lact(h, p / ny) * ny + y.lact(l, p % ny)
            },
            |p, gk_el| {
                let (g, k) = (gk_el / kn, gk_el % kn);
                x.ract(p / ny, g) * ny + y.ract(p % ny, k)
            },
        )
        .expect("product of valid bisets")
    }

    pub fn disjoint_union(x: &ConcreteBiset, y: &ConcreteBiset) -> Result<Self> {
        if x.left != y.left || x.right != y.right {
            return Err(Error::GroupMismatch {
                expected: format!("({},{})", x.left, x.right),
                found: format!("({},{})", y.left, y.right),
            });
        }
        let nx = x.size as u32;
        Self::new(
            &x.left,
            &x.right,
            x.size + y.size,
            |h, p| if p < nx { x.lact(h, p) } else { nx + y.lact(h, p - nx) },
            |p, g| if p < nx { x.ract(p, g) } else { nx + y.ract(p - nx, g) },
        )
    }

    /// Reinterprets the biset over isomorphic groups along index-preserving
    /// identifications (e.g. `K×1×G` as `K×G`).
    pub fn relabel(&self, left: &FiniteGroup, right: &FiniteGroup) -> Result<Self> {
        if left.order() != self.left.order() || right.order() != self.right.order() {
            return Err(Error::GroupMismatch {
                expected: format!("({},{})", self.left, self.right),
                found: format!("({left},{right})"),
            });
        }
        Ok(ConcreteBiset {
            left: left.clone(),
            right: right.clone(),
            ..self.clone()
        })
    }

    /// Orbit representatives and their stabilizers under
    /// `(h, g)·x = h·x·g⁻¹`.
    pub fn orbits(&self) -> Vec<(u32, Vec<u32>)> {
        let p = direct_product(&[self.left.clone(), self.right.clone()]);
        let gn = self.right.order() as u32;
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size as u32 {
            if seen[x as usize] {
                continue;
            }
            let mut stab = Vec::new();
            for e in p.elements() {
                let (h, g) = (e / gn, e % gn);
                let y = self.ract(self.lact(h, x), self.right.inv(g));
                seen[y as usize] = true;
                if y == x {
                    stab.push(e);
                }
            }
            out.push((x, stab));
        }
        out
    }

    /// Decomposition into transitive bisets: one class per orbit, located by
    /// the canonical conjugacy-class key of its point stabilizer.
    pub fn classify(&self) -> BurnsideElement {
        let p = direct_product(&[self.left.clone(), self.right.clone()]);
        let mut terms = BTreeMap::new();
        for (_, stab) in self.orbits() {
            let key = canonical_key(&p, &stab);
            *terms.entry(key).or_insert_with(|| int(0)) += int(1);
        }
        BurnsideElement::from_terms(&self.left, &self.right, Ring::Integers, terms)
            .expect("integral multiplicities")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
