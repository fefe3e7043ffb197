mod common;

use common::*;
use proptest::prelude::*;
use xbwt_core::oracle::naive_class_list;
use xbwt_core::*;

fn word(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop::sample::select(b"abcd".to_vec()), 1..=max)
}

fn word_list() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(word(6), 1..12)
}

proptest! {
    #![proptest_config(proptest_config())]

    #[test]
    fn standard_permutation_is_stable_sort(l in word(40)) {
        let pi = standard_permutation(&l, &id()).unwrap();
        let images = pi.to_one_based();
        // Row i holds the i-th smallest letter; equal letters keep text order.
        for pair in images.windows(2) {
            let (a, b) = (l[pair[0] - 1], l[pair[1] - 1]);
            prop_assert!(a < b || (a == b && pair[0] < pair[1]));
        }
        // It is the k = 1 standard permutation of the single letters.
        let letters: Vec<Vec<u8>> = l.iter().map(|&b| vec![b]).collect();
        prop_assert_eq!(k_order_standard_permutation(&letters, 1, &id()).unwrap(), pi);
    }

    #[test]
    fn cycles_round_trip(l in word(40)) {
        let pi = standard_permutation(&l, &id()).unwrap();
        let cycles = cycle_decomposition(&pi);
        prop_assert_eq!(cycles.to_permutation(), pi.clone());
        prop_assert_eq!(cycles.cycles().iter().map(Vec::len).sum::<usize>(), l.len());
        for c in cycles.cycles() {
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
        }
        for pair in cycles.cycles().windows(2) {
            prop_assert!(pair[0][0] < pair[1][0]);
        }
    }

    #[test]
    fn powers_and_inverse(l in word(30), t in 0usize..70) {
        let pi = standard_permutation(&l, &id()).unwrap();
        let pt = pi.pow(t);
        for i in 1..=l.len() {
            prop_assert_eq!(pt.apply(i), pi.iterate(i, t));
            prop_assert_eq!(pi.inverse().apply(pi.apply(i)), i);
        }
    }

    #[test]
    fn large_orders_are_stationary(list in word_list()) {
        let longest = list.iter().map(Vec::len).max().unwrap();
        let settled = k_order_standard_permutation(&list, 2 * longest, &id()).unwrap();
        for k in [2 * longest + 1, 40, 1000] {
            prop_assert_eq!(&k_order_standard_permutation(&list, k, &id()).unwrap(), &settled);
        }
    }

    #[test]
    fn rows_have_sorted_contexts(list in word_list(), k in 0usize..50) {
        let nu = k_order_standard_permutation(&list, k, &id()).unwrap();
        let contexts: Vec<Vec<u8>> =
            nu.to_one_based().iter().map(|&i| context_of_order(&list[i - 1], k).unwrap()).collect();
        for (row, pair) in contexts.windows(2).enumerate() {
            prop_assert!(pair[0] <= pair[1]);
            if pair[0] == pair[1] {
                // Ties keep list order.
                prop_assert!(nu.apply(row + 1) < nu.apply(row + 2));
            }
        }
    }

    #[test]
    fn class_list_orders_agree_with_lst(w in word(24), k in 0usize..10) {
        // Reading V through ν and taking last letters is LST_k.
        let list = naive_class_list(&w, &id());
        let nu = k_order_standard_permutation(&list, k, &id()).unwrap();
        let last: Vec<u8> = nu.to_one_based().iter().map(|&i| *list[i - 1].last().unwrap()).collect();
        prop_assert_eq!(last, lst_forward(&w, k, &id()));
    }
}

#[test]
fn invalid_permutations() {
    assert!(Permutation::from_one_based(&[1, 1]).is_err());
    assert!(Permutation::from_one_based(&[0, 1]).is_err());
    assert!(Permutation::from_one_based(&[3, 1]).is_err());
    assert_eq!(Permutation::from_one_based(&[2, 1]).unwrap().inverse().to_one_based(), [2, 1]);
    assert!(standard_permutation(b"", &id()).is_err());
    assert!(k_order_standard_permutation(&[b"a".to_vec(), Vec::new()], 2, &id()).is_err());
    assert!(Permutation::identity(0).cycles().is_empty());
}
