use motsym::algebra::{Elem, Field, MPoly, Mat};
use motsym::milnor::{invariant, weil_reciprocity_check, FunctionElement, MilnorElement};
use motsym::random::{self, Gen};
use motsym::symbols::{k0_class, k0_class_tuple, Chain, Context, SymbolTuple};
use motsym::text::{parse_chain, parse_tuple};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![Field::rational(), Field::prime(7).unwrap(), Field::prime(11).unwrap()]
}

fn field(i: usize) -> Field {
    fields()[i % 3].clone()
}

fn gen(seed: u64) -> Gen {
    random::rng(seed)
}

fn lift(k: &Field, m: &Mat<Elem>) -> Mat<MPoly> {
    m.map(|e| MPoly::constant(k, e.clone()))
}

/// `θ(a x + b y + c x y)` for a random `d = 1` tuple `θ`.
fn square(g: &mut Gen, k: &Field, l: usize, abc: (i64, i64, i64)) -> SymbolTuple {
    let t = random::tuple_d1(g, k, l);
    let x = MPoly::var0(k);
    let y = MPoly::var1(k);
    let s = x
        .scale(&k.from_int(abc.0), k)
        .add(&y.scale(&k.from_int(abc.1), k), k)
        .add(&x.mul(&y, k).scale(&k.from_int(abc.2), k), k);
    t.substitute(&s, &MPoly::zero(), 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn k0_is_conjugation_invariant(seed in any::<u64>(), fi in 0usize..3, n in 1usize..4, l in 1usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let t = random::tuple(&mut g, &k, n, l);
        let (u, _) = random::elementary_product(&mut g, &k, n, 4);
        let c = t.conjugate(&lift(&k, &u)).unwrap();
        prop_assert_eq!(k0_class_tuple(&t).unwrap(), k0_class_tuple(&c).unwrap());
    }

    #[test]
    fn k0_is_additive_on_direct_sums(seed in any::<u64>(), fi in 0usize..3, l in 1usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let a = random::tuple(&mut g, &k, 2, l);
        let b = random::tuple(&mut g, &k, 1, l);
        let s = a.direct_sum(&b).unwrap();
        let lhs = k0_class_tuple(&s).unwrap();
        let rhs = k0_class_tuple(&a).unwrap().add(&k0_class_tuple(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundary_of_square_boundary_vanishes(
        seed in any::<u64>(),
        fi in 0usize..3,
        abc in (-2i64..3, -2i64..3, -2i64..3),
    ) {
        let k = field(fi);
        let mut g = gen(seed);
        let w = square(&mut g, &k, 2, abc);
        let dd = Chain::single(w).boundary2().unwrap().boundary().unwrap();
        prop_assert!(k0_class(&dd).unwrap().is_empty());
    }

    #[test]
    fn constant_paths_are_cycles(seed in any::<u64>(), fi in 0usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let t = random::tuple(&mut g, &k, 2, 2).with_degree(1).unwrap();
        prop_assert!(Chain::single(t).boundary().unwrap().collect().is_empty());
    }

    #[test]
    fn tuple_text_round_trip(seed in any::<u64>(), fi in 0usize..3, l in 1usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let t = random::tuple_d1(&mut g, &k, l);
        prop_assert_eq!(&parse_tuple(&t.format()).unwrap(), &t);
        let ctx = Context { field: k.clone(), d: 1, l };
        let c = Chain::new(&ctx, vec![(3, t.clone()), (-1, t.reflect())]).unwrap();
        prop_assert!(parse_chain(&c.format(), None).unwrap().same_as(&c));
    }

    #[test]
    fn milnor_invariant_is_bilinear(seed in any::<u64>(), fi in 0usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let a = random::nonzero(&mut g, &k, 9);
        let b = random::nonzero(&mut g, &k, 9);
        let c = random::nonzero(&mut g, &k, 9);
        let ab = MilnorElement::symbol(&k, vec![k.mul(&a, &b), c.clone()]).unwrap();
        let split = MilnorElement::symbol(&k, vec![a, c.clone()])
            .unwrap()
            .add(&MilnorElement::symbol(&k, vec![b, c]).unwrap())
            .unwrap();
        prop_assert_eq!(invariant(&ab).unwrap(), invariant(&split).unwrap());
    }

    #[test]
    fn weil_reciprocity(seed in any::<u64>(), fi in 0usize..3) {
        let k = field(fi);
        let mut g = gen(seed);
        let f = random::ratfunc(&mut g, &k, 3);
        let h = random::ratfunc(&mut g, &k, 3);
        let w = FunctionElement::symbol(&k, vec![f, h]).unwrap();
        prop_assert!(weil_reciprocity_check(&w).unwrap().holds);
    }
}
