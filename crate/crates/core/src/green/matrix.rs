use super::{GreenFunctor, Linear};
use crate::biset::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::{Ring, Scalar};

/// An `n×n` matrix over `A(G)`, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixElement<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Linear> MatrixElement<E> {
    pub fn new(n: usize, entries: Vec<E>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "a {n}×{n} matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(MatrixElement { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&E) -> Result<E>) -> Result<Self> {
        Ok(MatrixElement {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        MatrixElement {
            n,
            entries: (0..n * n).map(|p| self.entries[(p % n) * n + p / n].clone()).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&E, &E) -> Result<E>) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "matrix sizes {} and {} differ",
                self.n, other.n
            )));
        }
        Ok(MatrixElement {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }
}

impl<E: Linear> Linear for MatrixElement<E> {
    fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.add(b))
    }

    fn neg(&self) -> Self {
        MatrixElement {
            n: self.n,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    fn scale(&self, c: &Scalar) -> Result<Self> {
        self.map(|e| e.scale(c))
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn ring(&self) -> Ring {
        self.entries[0].ring()
    }
}

/// `M_n(A)`: matrices over `A` with entrywise biset action. The basis of
/// `M_n(A)(G)` is (basis of `A(G)`) × (positions in row-major order), the
/// base index varying slowest.
#[derive(Clone, Debug)]
pub struct MatrixFunctor<A> {
    base: A,
    n: usize,
}

impl<A: GreenFunctor> MatrixFunctor<A> {
    pub fn new(base: A, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix size must be at least 1".into()));
        }
        Ok(MatrixFunctor { base, n })
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a` at position `(i, j)`, zeros elsewhere.
    pub fn elementary(&self, i: usize, j: usize, a: &A::Elem) -> MatrixElement<A::Elem> {
        let g = self.base.group_of(a);
        let z = self.base.zero(&g, a.ring());
        let mut entries = vec![z; self.n * self.n];
        entries[i * self.n + j] = a.clone();
        MatrixElement { n: self.n, entries }
    }

    /// `diag(a, …, a)`.
    pub fn scalar_matrix(&self, a: &A::Elem) -> MatrixElement<A::Elem> {
        let g = self.base.group_of(a);
        let z = self.base.zero(&g, a.ring());
        let n = self.n;
        MatrixElement {
            n,
            entries: (0..n * n)
                .map(|p| if p / n == p % n { a.clone() } else { z.clone() })
                .collect(),
        }
    }

    fn product(
        &self,
        a: &MatrixElement<A::Elem>,
        b: &MatrixElement<A::Elem>,
        op: impl Fn(&A::Elem, &A::Elem) -> Result<A::Elem>,
    ) -> Result<MatrixElement<A::Elem>> {
        let n = self.n;
        if a.n != n || b.n != n {
            return Err(Error::InvalidArgument(format!("expected {n}×{n} matrices")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = op(a.get(i, 0), b.get(0, j))?;
                for k in 1..n {
                    acc = acc.add(&op(a.get(i, k), b.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(MatrixElement { n, entries })
    }
}

impl<A: GreenFunctor> GreenFunctor for MatrixFunctor<A> {
    type Elem = MatrixElement<A::Elem>;

    fn tag(&self) -> String {
        format!("M{}({})", self.n, self.base.tag())
    }

    fn group_of(&self, a: &Self::Elem) -> FiniteGroup {
        self.base.group_of(&a.entries[0])
    }

    fn zero(&self, g: &FiniteGroup, ring: Ring) -> Self::Elem {
        MatrixElement {
            n: self.n,
            entries: vec![self.base.zero(g, ring); self.n * self.n],
        }
    }

    fn basis(&self, g: &FiniteGroup, ring: Ring) -> Vec<Self::Elem> {
        let n = self.n;
        self.base
            .basis(g, ring)
            .iter()
            .flat_map(|b| (0..n * n).map(move |p| (b.clone(), p)))
            .map(|(b, p)| self.elementary(p / n, p % n, &b))
            .collect()
    }

    fn coords(&self, a: &Self::Elem) -> Vec<Scalar> {
        let per: Vec<Vec<Scalar>> = a.entries.iter().map(|e| self.base.coords(e)).collect();
        let d = per[0].len();
        (0..d)
            .flat_map(|b| per.iter().map(move |v| v[b]))
            .collect()
    }

    fn from_coords(&self, g: &FiniteGroup, ring: Ring, coords: &[Scalar]) -> Result<Self::Elem> {
        let nn = self.n * self.n;
        let d = self.base.dim(g);
        if coords.len() != d * nn {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates for {}({g}), got {}",
                d * nn,
                self.tag(),
                coords.len()
            )));
        }
        let entries = (0..nn)
            .map(|p| {
                let v: Vec<Scalar> = (0..d).map(|b| coords[b * nn + p]).collect();
                self.base.from_coords(g, ring, &v)
            })
            .collect::<Result<_>>()?;
        Ok(MatrixElement { n: self.n, entries })
    }

    fn act(&self, x: &BurnsideElement, a: &Self::Elem) -> Result<Self::Elem> {
        a.map(|e| self.base.act(x, e))
    }

    /// `(a × b)_{ij} = Σ_k a_{ik} × b_{kj}`.
    fn cross(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.product(a, b, |x, y| self.base.cross(x, y))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.product(a, b, |x, y| self.base.mul(x, y))
    }

    fn epsilon(&self, ring: Ring) -> Self::Elem {
        self.scalar_matrix(&self.base.epsilon(ring))
    }
}
