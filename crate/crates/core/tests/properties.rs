use proptest::prelude::*;

use greenbiset::biset::{from_marks, marks, BurnsideElement};
use greenbiset::green::{Burnside, GreenFunctor, Linear, MatrixFunctor};
use greenbiset::group::{builtin_catalog, FiniteGroup};
use greenbiset::scalar::{int, parse_exact, to_exact_string, Ring, Scalar};
use greenbiset::star::{im_part, make_star_burnside, make_star_matrix, re_part};

const Z: Ring = Ring::Integers;
const Q: Ring = Ring::Rationals;

fn group(name: &str) -> FiniteGroup {
    builtin_catalog().require(name).unwrap()
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(vec!["1", "C2", "C3", "C4", "V4", "S3"]).prop_map(group)
}

fn tiny_group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(vec!["1", "C2", "C3"]).prop_map(group)
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-3i64..=3).prop_map(int), n)
}

/// An element of `B(H,G)` with small integer coefficients.
fn biset(h: FiniteGroup, g: FiniteGroup) -> impl Strategy<Value = BurnsideElement> {
    let n = BurnsideElement::basis_elements(&h, &g, Z).len();
    coeffs(n).prop_map(move |c| BurnsideElement::from_coords(&h, &g, Z, &c).unwrap())
}

fn ring_elem<A: GreenFunctor + Clone + 'static>(f: A, g: FiniteGroup, ring: Ring) -> impl Strategy<Value = A::Elem>
where
    A::Elem: std::fmt::Debug,
{
    coeffs(f.dim(&g)).prop_map(move |c| f.from_coords(&g, ring, &c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn marks_are_a_ring_homomorphism(
        (a, b) in small_group().prop_flat_map(|g| (ring_elem(Burnside, g.clone(), Z), ring_elem(Burnside, g, Z)))
    ) {
        let (ma, mb) = (marks(&a).unwrap(), marks(&b).unwrap());
        let ab = marks(&Burnside.mul(&a, &b).unwrap()).unwrap();
        let sum = marks(&a.add(&b).unwrap()).unwrap();
        for i in 0..ma.len() {
            prop_assert_eq!(ab[i], ma[i] * mb[i]);
            prop_assert_eq!(sum[i], ma[i] + mb[i]);
        }
    }

    #[test]
    fn marks_round_trip(a in small_group().prop_flat_map(|g| ring_elem(Burnside, g, Z))) {
        let g = Burnside.group_of(&a);
        prop_assert_eq!(from_marks(&g, &marks(&a).unwrap()), Some(a));
    }

    #[test]
    fn composition_is_associative_and_bilinear(
        (z, y, y2, x) in (tiny_group(), tiny_group(), tiny_group(), tiny_group()).prop_flat_map(|(l, k, h, g)| {
            (biset(l, k.clone()), biset(k.clone(), h.clone()), biset(k, h.clone()), biset(h, g))
        })
    ) {
        let left = z.compose(&y).unwrap().compose(&x).unwrap();
        let right = z.compose(&y.compose(&x).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let sum = y.add(&y2).unwrap().compose(&x).unwrap();
        prop_assert_eq!(sum, y.compose(&x).unwrap().add(&y2.compose(&x).unwrap()).unwrap());
    }

    #[test]
    fn opposite_reverses_composition(
        (y, x) in (tiny_group(), tiny_group(), tiny_group()).prop_flat_map(|(k, h, g)| (biset(k, h.clone()), biset(h, g)))
    ) {
        prop_assert_eq!(y.opposite().opposite(), y.clone());
        prop_assert_eq!(y.compose(&x).unwrap().opposite(), x.opposite().compose(&y.opposite()).unwrap());
    }

    #[test]
    fn arrow_round_trips(x in (tiny_group(), tiny_group()).prop_flat_map(|(h, g)| biset(h, g))) {
        let (h, g) = (x.left().clone(), x.right().clone());
        prop_assert_eq!(x.arrow().arrow_inverse(&h, &g).unwrap(), x);
    }

    #[test]
    fn matrix_star_is_an_anti_involution(
        (a, b) in tiny_group().prop_flat_map(|g| {
            let m = MatrixFunctor::new(Burnside, 2).unwrap();
            (ring_elem(m.clone(), g.clone(), Z), ring_elem(m, g, Z))
        })
    ) {
        let s = make_star_matrix(&make_star_burnside().unwrap(), 2).unwrap();
        let f = s.base();
        prop_assert_eq!(s.star(&s.star(&a).unwrap()).unwrap(), a.clone());
        let lhs = s.star(&f.mul(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, f.mul(&s.star(&b).unwrap(), &s.star(&a).unwrap()).unwrap());
    }

    #[test]
    fn real_and_imaginary_parts_split(
        a in tiny_group().prop_flat_map(|g| ring_elem(MatrixFunctor::new(Burnside, 2).unwrap(), g, Q))
    ) {
        let s = make_star_matrix(&make_star_burnside().unwrap(), 2).unwrap();
        let (re, im) = (re_part(&s, &a).unwrap(), im_part(&s, &a).unwrap());
        prop_assert_eq!(re.add(&im).unwrap(), a);
        prop_assert_eq!(s.star(&re).unwrap(), re);
        prop_assert_eq!(s.star(&im).unwrap(), im.neg());
    }

    #[test]
    fn exact_scalars_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let c = Scalar::new(n, d);
        prop_assert_eq!(parse_exact(&to_exact_string(&c)).unwrap(), c);
    }
}
