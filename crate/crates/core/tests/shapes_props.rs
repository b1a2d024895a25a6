use compshuffle::{Composition, Partition};

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn refinement_is_a_partial_order() {
    for n in 1..=8 {
        let all = Composition::all(n);
        let leq: Vec<Vec<bool>> = all.iter().map(|a| all.iter().map(|b| a.refines(b).unwrap()).collect()).collect();
        for i in 0..all.len() {
            assert!(leq[i][i]);
            for j in 0..all.len() {
                if i != j && leq[i][j] {
                    assert!(!leq[j][i], "{} and {}", all[i], all[j]);
                }
                if leq[i][j] {
                    for k in 0..all.len() {
                        if leq[j][k] {
                            assert!(leq[i][k]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn conjugate_n_statistic() {
    for n in 0..=8 {
        for lam in Partition::all(n) {
            let want: u64 = lam.parts().iter().map(|&p| binom(p as u64, 2)).sum();
            assert_eq!(lam.conjugate().n_stat(), want, "{lam}");
        }
    }
}

#[test]
fn composition_counts() {
    for n in 1..=9u32 {
        assert_eq!(Composition::all(n).len() as u64, 1 << (n - 1));
        for k in 1..=n {
            assert_eq!(Composition::all_with_length(n, k as usize).len() as u64, binom(n as u64 - 1, k as u64 - 1));
        }
    }
}

#[test]
fn enumeration_is_complete_and_ordered() {
    let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22];
    for (n, &c) in counts.iter().enumerate() {
        let parts = Partition::all(n as u32);
        assert_eq!(parts.len(), c);
        // reverse-lexicographic: strictly decreasing
        assert!(parts.windows(2).all(|w| w[0] > w[1]));
        let comps = Composition::all(n as u32);
        assert!(comps.windows(2).all(|w| w[0] < w[1]));
    }
}
