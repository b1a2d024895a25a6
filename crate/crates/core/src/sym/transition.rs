//! Per-degree transition matrices between the power-sum basis and the
//! m, e, h, s bases. Computed on first use and shared process-wide.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::linalg::Matrix;
use crate::shapes::Partition;

/// Sparse rows: `rows[i]` lists `(j, c)` with nonzero `c`.
pub(crate) type SparseRows = Vec<Vec<(usize, BigRational)>>;

pub(crate) struct Table {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `B_λ = Σ_μ to_p[λ][μ] p_μ`.
    pub to_p: SparseRows,
    /// `p_μ = Σ_λ from_p[μ][λ] B_λ`.
    pub from_p: SparseRows,
}

type Cache = RwLock<HashMap<(Basis, u32), Arc<Table>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn table(basis: Basis, n: u32) -> Arc<Table> {
    if let Some(t) = cache().read().expect("transition cache poisoned").get(&(basis, n)) {
        return t.clone();
    }
    let built = Arc::new(build(basis, n));
    let mut w = cache().write().expect("transition cache poisoned");
    w.entry((basis, n)).or_insert(built).clone()
}

fn sparse(m: &Matrix<BigRational>) -> SparseRows {
    (0..m.rows())
        .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect())
        .collect()
}

fn build(basis: Basis, n: u32) -> Table {
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let k = parts.len();
    let z: Vec<BigRational> = parts.iter().map(|p| BigRational::from_integer(p.z())).collect();
    let (to_p, from_p) = match basis {
        Basis::P => (Matrix::identity(k), Matrix::identity(k)),
        Basis::S => {
            let chi = character_table(&parts);
            let to_p = Matrix::from_fn(k, k, |l, m| BigRational::from_integer(chi[l][m].clone()) / &z[m]);
            let from_p = Matrix::from_fn(k, k, |m, l| BigRational::from_integer(chi[l][m].clone()));
            (to_p, from_p)
        }
        Basis::H | Basis::E => {
            let to_p = product_matrix(&parts, &index, basis == Basis::E);
            let from_p = to_p.inverse().expect("h/e transition is invertible");
            (to_p, from_p)
        }
        Basis::M => {
            // p_μ = Σ_λ ⟨p_μ, h_λ⟩ m_λ and ⟨p_μ, h_λ⟩ = z_μ [p_μ] h_λ.
            let h = product_matrix(&parts, &index, false);
            let from_p = Matrix::from_fn(k, k, |m, l| h.get(l, m) * &z[m]);
            let to_p = from_p.inverse().expect("m transition is invertible");
            (to_p, from_p)
        }
    };
    Table { parts, index, to_p: sparse(&to_p), from_p: sparse(&from_p) }
}

/// Power-sum expansion of `h_n` (or `e_n` when `signed`): `Σ_μ ±p_μ / z_μ`.
fn single_row(n: u32, signed: bool) -> BTreeMap<Partition, BigRational> {
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let mut c = BigRational::new(BigInt::one(), mu.z());
            if signed && (n as usize - mu.len()) % 2 == 1 {
                c = -c;
            }
            (mu, c)
        })
        .collect()
}

fn product_matrix(parts: &[Partition], index: &HashMap<Partition, usize>, signed: bool) -> Matrix<BigRational> {
    let k = parts.len();
    let mut m = Matrix::zeros(k, k);
    for (l, lam) in parts.iter().enumerate() {
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::from([(Partition::empty(), BigRational::one())]);
        for &part in lam.parts() {
            let row = single_row(part, signed);
            let mut next = BTreeMap::new();
            for (a, ca) in &acc {
                for (b, cb) in &row {
                    let key = merge(a, b);
                    *next.entry(key).or_insert_with(BigRational::zero) += ca * cb;
                }
            }
            acc = next;
        }
        for (mu, c) in acc {
            m.set(l, index[&mu], c);
        }
    }
    m
}

/// Multiset union of the parts of two partitions.
pub(crate) fn merge(a: &Partition, b: &Partition) -> Partition {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let (x, y) = (a.parts(), b.parts());
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i] >= y[j] {
            out.push(x[i]);
            i += 1;
        } else {
            out.push(y[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    Partition::new(out).expect("merge of partitions is a partition")
}

/// `chi[l][m]` is the irreducible character `χ^{parts[l]}` at cycle type `parts[m]`.
pub(crate) fn character_table(parts: &[Partition]) -> Vec<Vec<BigInt>> {
    let mut memo = HashMap::new();
    parts.iter().map(|l| parts.iter().map(|m| character(l, m.parts(), &mut memo)).collect()).collect()
}

/// Murnaghan–Nakayama rule on beta-sets, removing one rim hook per part of `mu`.
fn character(lam: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), BigInt>) -> BigInt {
    if mu.is_empty() {
        return if lam.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (lam.clone(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = mu[0];
    let l = lam.len();
    let beta: Vec<u32> = lam.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i) as u32).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = nb;
        new_beta.sort_unstable_by(|x, y| y.cmp(x));
        let len = new_beta.len();
        let parts: Vec<u32> = new_beta.iter().enumerate().map(|(j, &x)| x - (len - 1 - j) as u32).filter(|&p| p > 0).collect();
        let sub = Partition::new(parts).expect("rim hook removal leaves a partition");
        let c = character(&sub, &mu[1..], memo);
        if height % 2 == 1 {
            total -= c;
        } else {
            total += c;
        }
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_table_s3() {
        let parts = Partition::all(3);
        let chi = character_table(&parts);
        // rows (3),(2,1),(1,1,1); columns likewise
        let expect = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
        for l in 0..3 {
            for m in 0..3 {
                assert_eq!(chi[l][m], BigInt::from(expect[l][m]), "chi[{l}][{m}]");
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let parts = Partition::all(n);
            let chi = character_table(&parts);
            for a in 0..parts.len() {
                for b in 0..parts.len() {
                    let s: BigInt = (0..parts.len()).map(|l| &chi[l][a] * &chi[l][b]).sum();
                    let expect = if a == b { parts[a].z() } else { BigInt::zero() };
                    assert_eq!(s, expect);
                }
            }
            assert!(chi.iter().all(|row| *row.last().unwrap() > BigInt::zero()));
        }
    }
}
