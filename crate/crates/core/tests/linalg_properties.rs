use leavitt_kmod::linalg::{
    brute_force_mod_oracle, cokernel_int, cokernel_mod, kernel_mod, smith_normal_form,
};
use leavitt_kmod::{FinAbGroup, IntMatrix, Modulus};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

fn modulus() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![2u64, 3, 4, 5, 8, 9, 16]).prop_map(|m| Modulus::new(m).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn group() -> impl Strategy<Value = FinAbGroup> {
    (0usize..3, prop::collection::vec(0i64..30, 0..4)).prop_map(|(free, orders)| {
        FinAbGroup::free(free).direct_sum(&FinAbGroup::from_cyclic_orders(
            orders.into_iter().map(BigInt::from),
        ))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_certificate(m in matrix(4, 9)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag: Vec<BigInt> = (0..m.rows().min(m.cols())).map(|i| s.d.get(i, i).clone()).collect();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn modular_quotients_match_enumeration(m in matrix(3, 5), md in modulus()) {
        let oracle = brute_force_mod_oracle(&m, &md).unwrap();
        prop_assert_eq!(kernel_mod(&m, &md), oracle.kernel.clone());
        prop_assert_eq!(cokernel_mod(&m, &md), oracle.cokernel.clone());
        let mv = BigInt::from(md.value());
        let image = BigInt::from(oracle.image_order);
        prop_assert_eq!(oracle.kernel.order().unwrap() * &image, mv.pow(m.cols() as u32));
        prop_assert_eq!(oracle.cokernel.order().unwrap() * &image, mv.pow(m.rows() as u32));
    }

    #[test]
    fn quotients_invariant_under_permutation_and_negation(
        (m, rp, cp) in matrix(4, 9).prop_flat_map(|m| {
            let (r, c) = m.shape();
            (Just(m), permutation(r), permutation(c))
        }),
        md in modulus(),
    ) {
        let p = m.permute_rows(&rp).permute_cols(&cp);
        let neg = -&m;
        for other in [&p, &neg] {
            prop_assert_eq!(cokernel_mod(other, &md), cokernel_mod(&m, &md));
            prop_assert_eq!(kernel_mod(other, &md), kernel_mod(&m, &md));
            prop_assert_eq!(cokernel_int(other), cokernel_int(&m));
        }
    }

    #[test]
    fn cokernel_of_block_sum(a in matrix(3, 9), b in matrix(3, 9)) {
        prop_assert_eq!(cokernel_int(&a.direct_sum(&b)), cokernel_int(&a).direct_sum(&cokernel_int(&b)));
    }

    #[test]
    fn group_sum_laws(a in group(), b in group(), c in group()) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&FinAbGroup::trivial()), a.clone());
        prop_assert_eq!(a.to_string().parse::<FinAbGroup>().unwrap(), a);
    }
}
