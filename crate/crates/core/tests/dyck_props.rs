use std::collections::BTreeMap;

use compshuffle::dyck::{combinatorial_side, enumerate_paths, DyckPath, Flavor, PathFilter, Side};
use compshuffle::macdonald::nabla;
use compshuffle::{Composition, Scalar, Sym};
use proptest::prelude::*;

/// Arm sequences built by the same local rule the type enforces.
fn path() -> impl Strategy<Value = DyckPath> {
    prop::collection::vec(0u32..100, 1..10).prop_map(|steps| {
        let mut arm = vec![0u32];
        for s in &steps[1..] {
            let prev = *arm.last().unwrap();
            arm.push(s % (prev + 2));
        }
        DyckPath::new(arm).unwrap()
    })
}

proptest! {
    #[test]
    fn touch_is_consistent(d in path()) {
        let touch = d.touch();
        prop_assert_eq!(touch.size() as usize, d.size());
        prop_assert_eq!(d.doff(&touch).unwrap(), {
            let l = touch.len() as u64;
            l * (l - 1) / 2
        });
        prop_assert_eq!(d.doff(&Composition::new(vec![d.size() as u32]).unwrap()).unwrap(), 0);
        prop_assert!(d.leq(&d).unwrap());
        let listed = enumerate_paths(d.size() as u32, &PathFilter::TouchEq(touch)).unwrap();
        prop_assert!(listed.contains(&d));
    }

    #[test]
    fn word_dinv_bounds(d in path()) {
        let n = d.size() as u32;
        let decreasing: Vec<u32> = (1..=n).rev().collect();
        if d.arm().iter().all(|&a| a == 0) {
            prop_assert_eq!(d.dinv_word(&decreasing).unwrap(), 0);
        }
    }
}

#[test]
fn staircase_doff() {
    for n in 1..=7 {
        for a in Composition::all(n) {
            let l = a.len() as u64;
            assert_eq!(DyckPath::dp_of(&a).doff(&a).unwrap(), l * (l - 1) / 2);
        }
    }
}

#[test]
fn parking_words_give_nabla_e3() {
    let mut total: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for a in Composition::all(3) {
        let Side::Monomials(m) = combinatorial_side(&a, Flavor::CMonomial).unwrap() else { panic!() };
        for (k, v) in m {
            let slot = total.entry(k).or_insert_with(|| Scalar::from_int(0));
            *slot = slot.clone() + v;
        }
    }
    total.retain(|_, v| *v != Scalar::from_int(0));
    let want = nabla(&Sym::e(3)).to_monomials(3).unwrap();
    assert_eq!(total, want);
}

#[test]
fn example_table() {
    let d = DyckPath::new(vec![0, 1, 2, 2, 1]).unwrap();
    assert_eq!((d.area(), d.dinv()), (6, 4));
    assert_eq!(d.to_string(), "(0,1,2,2,1)");
    assert!(d.leq(&DyckPath::new(vec![0, 1]).unwrap()).is_err());
}
