use compshuffle::creation::hall_littlewood_qp;
use compshuffle::macdonald::{check_orthogonality, macd_basis, nabla, nabla_eigenvalue, nabla_inverse};
use compshuffle::{Basis, Partition, Scalar, Sym};
use num_traits::Zero;
use proptest::prelude::*;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn degree_one_and_small_eigen() {
    assert_eq!(macd_basis(1).get(&part(&[1])).unwrap(), Sym::s(part(&[1])));
    assert_eq!(nabla(&Sym::e(1)), Sym::e(1));
    let h21 = macd_basis(3).get(&part(&[2, 1])).unwrap();
    assert_eq!(nabla(&h21), h21.scale(&(Scalar::q() * Scalar::t())));
}

#[test]
fn orthogonality_and_normalization() {
    for n in 1..=6 {
        let table = macd_basis(n);
        check_orthogonality(&table).unwrap();
        for (mu, h) in table.rows() {
            assert_eq!(h.hall_inner(&Sym::h(n as i64)), Scalar::from_int(1), "{mu}");
        }
    }
}

#[test]
fn hall_littlewood_orthogonality() {
    let twist = Scalar::from_int(1) - Scalar::q();
    for n in 1..=5 {
        let qps: Vec<(Partition, Sym)> = Partition::all(n).into_iter().map(|l| (l.clone(), hall_littlewood_qp(&l))).collect();
        for (lam, a) in &qps {
            let ta = a.scale_alphabet(&twist);
            for (mu, b) in &qps {
                if lam != mu {
                    assert!(ta.hall_inner(b).is_zero(), "{lam} {mu}");
                }
            }
        }
    }
}

#[test]
fn eigenvalues_are_monomials() {
    assert_eq!(nabla_eigenvalue(&part(&[2, 1])), Scalar::q() * Scalar::t());
    assert_eq!(nabla_eigenvalue(&part(&[1, 1, 1])), Scalar::t().pow(3));
    assert_eq!(nabla_eigenvalue(&part(&[3])), Scalar::q().pow(3));
}

fn random_sym() -> impl Strategy<Value = Sym> {
    let coeff = prop::sample::select(vec!["1", "-2", "q", "t - 1", "q^2*t", "1/(1 - q)", "3*q*t^-1"]);
    (1u32..=5).prop_flat_map(move |n| {
        let parts = Partition::all(n);
        let len = parts.len();
        prop::collection::vec((0..len, coeff.clone()), 1..4).prop_map(move |terms| {
            Sym::from_terms(Basis::S, terms.into_iter().map(|(i, c)| (parts[i].clone(), c.parse::<Scalar>().unwrap())))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nabla_is_invertible(f in random_sym()) {
        prop_assert_eq!(nabla_inverse(&nabla(&f)).unwrap(), f.clone());
        prop_assert_eq!(nabla(&nabla_inverse(&f).unwrap()), f);
    }

    #[test]
    fn expansion_reconstructs(f in random_sym()) {
        let n = f.degree().unwrap();
        let table = macd_basis(n);
        let coords = table.expand(&f).unwrap();
        let back = coords.iter().fold(Sym::zero(), |acc, (mu, c)| acc + table.get(mu).unwrap().scale(c));
        prop_assert_eq!(back, f);
    }
}
