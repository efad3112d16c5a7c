mod common;

use matroid_decomp::builders::k4_minus_edge;
use matroid_decomp::connectivity::{del, enumerate_2separations, phi, separation_of};
use matroid_decomp::fixtures::corpus;
use matroid_decomp::separation::good_2separations;
use matroid_decomp::{Matroid, Subset};

use common::set;

#[test]
fn phi_matches_brute_rank() {
    for f in corpus() {
        let m = &f.matroid;
        let n = m.len();
        let r = common::ranks(m);
        for x in 0..1u64 << n {
            assert_eq!(phi(m, Subset(x)), common::phi(&r, n, x), "{} {x:b}", f.name);
            assert_eq!(m.rank(Subset(x)), r[x as usize], "{} {x:b}", f.name);
        }
    }
}

#[test]
fn two_separations_match_brute_force() {
    for f in corpus() {
        let m = &f.matroid;
        let listed: Vec<u64> = enumerate_2separations(m)
            .unwrap()
            .iter()
            .map(|s| s.side_a.0)
            .collect();
        let mut sorted = listed.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, common::two_separations(m), "{}", f.name);
        if m.is_connected() {
            let mut good: Vec<u64> = good_2separations(m)
                .unwrap()
                .iter()
                .map(|s| s.side_a.0)
                .collect();
            good.sort_unstable();
            assert_eq!(good, common::good_separations(m), "{}", f.name);
        }
    }
}

#[test]
fn k4e_values() {
    let m = k4_minus_edge();
    assert_eq!(phi(&m, set(&[0, 1])), 1);
    assert_eq!(phi(&m, set(&[0, 3])), 2);
    assert_eq!(phi(&m, Subset::EMPTY), 0);
    assert_eq!(separation_of(&m, set(&[0, 1])).map(|s| s.order), Some(2));
    assert_eq!(separation_of(&m, set(&[0, 3])), None);
    // {0,1} and {2,3} are bases of their sides; one element must go
    assert_eq!(del(&m, set(&[0, 1]), set(&[2, 3])).unwrap(), 1);
}

#[test]
fn u24_has_no_two_separations() {
    let m = Matroid::uniform(2, 4).unwrap();
    let r = common::ranks(&m);
    assert!((0..16u64).all(|x| {
        let k = x.count_ones() as usize;
        !(k >= 2 && 4 - k >= 2 && common::phi(&r, 4, x) == 1)
    }));
    assert!(enumerate_2separations(&m).unwrap().is_empty());
}
