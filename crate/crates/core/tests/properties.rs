use proptest::prelude::*;

use symchar_core::characters::{rational_convert, thibon_inner, RationalDirection};
use symchar_core::inner::inner_mul;
use symchar_core::partition::partitions_up_to;
use symchar_core::sym::{self, antipode, coproduct, outer_mul, scalar, skew, tensor_mul};
use symchar_core::{Composition, Partition, SymFunc, TensorSymFunc};

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn symfunc(max: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(max), -3i128..=3), 0..4)
        .prop_map(|terms| terms.into_iter().collect())
}

fn homogeneous(n: u32) -> impl Strategy<Value = SymFunc> {
    let all = symchar_core::partition::partitions_of(n);
    prop::collection::vec((0..all.len(), -3i128..=3), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(i, c)| (all[i].clone(), c))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
    }

    #[test]
    fn partitions_are_standard(p in partition(8)) {
        let theta = p.parts().iter().map(|&x| x as i64).collect();
        prop_assert_eq!(Composition::new(theta).standardize(), (1, p));
    }

    #[test]
    fn symfunc_text_round_trips(f in symfunc(6)) {
        prop_assert_eq!(f.to_string().parse::<SymFunc>().unwrap(), f);
    }

    #[test]
    fn outer_product_commutes(f in symfunc(4), g in symfunc(4)) {
        prop_assert_eq!(outer_mul(&f, &g), outer_mul(&g, &f));
    }

    #[test]
    fn antipode_is_multiplicative(f in symfunc(4), g in symfunc(3)) {
        prop_assert_eq!(antipode(&outer_mul(&f, &g)), outer_mul(&antipode(&f), &antipode(&g)));
        prop_assert_eq!(antipode(&antipode(&f)), f);
    }

    #[test]
    fn coproduct_is_multiplicative(f in symfunc(3), g in symfunc(3)) {
        prop_assert_eq!(coproduct(&outer_mul(&f, &g)), tensor_mul(&coproduct(&f), &coproduct(&g)));
    }

    #[test]
    fn skew_is_adjoint(f in symfunc(6), g in symfunc(3), h in symfunc(3)) {
        prop_assert_eq!(scalar(&skew(&f, &g), &h), scalar(&f, &outer_mul(&g, &h)));
    }

    #[test]
    fn inner_product_units((n, f) in (0u32..=5).prop_flat_map(|n| (Just(n), homogeneous(n)))) {
        // h_n is the unit in degree n, e_n acts as ω.
        prop_assert_eq!(inner_mul(&sym::h(n), &f), f.clone());
        let omega: SymFunc = f.iter().map(|(p, c)| (p.conjugate(), c)).collect();
        prop_assert_eq!(inner_mul(&sym::e(n), &f), omega);
    }

    #[test]
    fn inner_product_commutes(n in 0u32..=5, a in 0usize..8, b in 0usize..8) {
        let all = symchar_core::partition::partitions_of(n);
        let x = SymFunc::basis(all[a % all.len()].clone());
        let y = SymFunc::basis(all[b % all.len()].clone());
        prop_assert_eq!(inner_mul(&x, &y), inner_mul(&y, &x));
    }

    #[test]
    fn thibon_hash_is_associative(a in partition(2), b in partition(2), c in partition(2)) {
        let (x, y, z) = (SymFunc::basis(a), SymFunc::basis(b), SymFunc::basis(c));
        prop_assert_eq!(thibon_inner(&thibon_inner(&x, &y), &z), thibon_inner(&x, &thibon_inner(&y, &z)));
    }

    #[test]
    fn rational_conversion_round_trips(terms in prop::collection::vec((partition(4), partition(4), -2i128..=2), 0..4)) {
        let x: TensorSymFunc = terms.into_iter().map(|(a, b, c)| ((a, b), c)).collect();
        let back = rational_convert(&rational_convert(&x, RationalDirection::ToReducible), RationalDirection::ToIrreducible);
        prop_assert_eq!(back, x);
    }
}
