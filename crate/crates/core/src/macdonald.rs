//! Modified Macdonald polynomials `H̃_μ[X;q,t]`, the operator ∇ and its
//! `q = 1` specialization.
//!
//! `H̃_μ` is pinned down by three linear conditions:
//!
//! * `H̃_μ[X(1−q)]` lies in the span of `s_λ` with `λ ≥ μ` (dominance),
//! * `H̃_μ[X(1−t)]` lies in the span of `s_λ` with `λ ≥ μ′`,
//! * `⟨H̃_μ, s_(n)⟩ = 1`.
//!
//! Its Schur coefficients are integer polynomials in `q, t` of degree at most
//! `n(μ′)` in `q` and `n(μ)` in `t`. They are recovered by solving the
//! conditions at integer points with fraction-free elimination and
//! interpolating; the result is then checked symbolically against the
//! conditions, and the orthogonality
//! `⟨H̃_μ[X(1−1/t)], H̃_λ[X(1−q)]⟩ = 0` (`λ ≠ μ`) is checked on top.
//! The matrix of ∇ in the Schur basis is obtained the same way and verified
//! exactly against `H N = D H`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{bareiss_solve, interpolate_grid, solve, Matrix};
use crate::poly::{Monomial, Poly, Var};
use crate::scalar::Scalar;
use crate::shapes::Partition;
use crate::sym::{Basis, SymFunc};

pub type Sym = SymFunc<Scalar>;

/// All `H̃_μ` for `μ ⊢ n`, in the Schur basis.
#[derive(Clone, Debug)]
pub struct MacdonaldTable {
    degree: u32,
    parts: Vec<Partition>,
    /// `coeffs[i][j]`: coefficient of `s_{parts[j]}` in `H̃_{parts[i]}`.
    coeffs: Vec<Vec<Poly>>,
}

impl MacdonaldTable {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Partitions of the degree, in the row/column order of [`Self::coeffs`].
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn coeffs(&self) -> &[Vec<Poly>] {
        &self.coeffs
    }

    fn index(&self, mu: &Partition) -> Option<usize> {
        self.parts.iter().position(|p| p == mu)
    }

    /// `H̃_μ` in the Schur basis.
    pub fn get(&self, mu: &Partition) -> Option<Sym> {
        let i = self.index(mu)?;
        Some(Sym::from_terms(
            Basis::S,
            self.parts.iter().zip(&self.coeffs[i]).map(|(l, c)| (l.clone(), Scalar::from_poly(c.clone()))),
        ))
    }

    /// All rows as symmetric functions, keyed by `μ`.
    pub fn rows(&self) -> BTreeMap<Partition, Sym> {
        self.parts.iter().map(|mu| (mu.clone(), self.get(mu).expect("own partition"))).collect()
    }

    /// Coordinates of a homogeneous `f` of this degree in the `H̃` basis.
    pub fn expand(&self, f: &Sym) -> Result<BTreeMap<Partition, Scalar>> {
        if f.is_zero() {
            return Ok(BTreeMap::new());
        }
        if !f.is_homogeneous() || f.degree() != Some(self.degree) {
            return Err(Error::SizeMismatch(format!("expected a homogeneous function of degree {}", self.degree)));
        }
        let s = f.to_basis(Basis::S);
        let k = self.parts.len();
        // a = c H  <=>  Hᵀ cᵀ = aᵀ
        let ht = Matrix::from_fn(k, k, |i, j| Scalar::from_poly(self.coeffs[j][i].clone()));
        let a = Matrix::from_fn(k, 1, |i, _| s.coeff(&self.parts[i]));
        let c = solve(&ht, &a)?;
        Ok(self.parts.iter().enumerate().filter(|(i, _)| !c.get(*i, 0).is_zero()).map(|(i, p)| (p.clone(), c.get(i, 0).clone())).collect())
    }
}

/// `t^{n(μ)} q^{n(μ′)}`.
pub fn nabla_eigenvalue(mu: &Partition) -> Scalar {
    Scalar::from_poly(eigen_poly(mu))
}

fn eigen_poly(mu: &Partition) -> Poly {
    Poly::term(Monomial::new(mu.conjugate().n_stat() as u32, mu.n_stat() as u32, 0), 1)
}

type TableCache = RwLock<HashMap<u32, Arc<MacdonaldTable>>>;
type NablaCache = RwLock<HashMap<u32, Arc<NablaMatrix>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn nabla_cache() -> &'static NablaCache {
    static CACHE: OnceLock<NablaCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The table of `H̃_μ`, `μ ⊢ n`; built once per degree.
pub fn macd_basis(n: u32) -> Arc<MacdonaldTable> {
    if let Some(t) = table_cache().read().expect("Macdonald cache poisoned").get(&n) {
        return t.clone();
    }
    let table = Arc::new(build_table(n));
    table_cache().write().expect("Macdonald cache poisoned").entry(n).or_insert(table).clone()
}

/// Small primes, alternately assigned to `q` and `t` so that no power of a
/// `q` node equals a power of a `t` node.
fn nodes(count: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut primes = Vec::new();
    let mut c = 2u64;
    while primes.len() < 2 * count {
        if (2..c).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
            primes.push(c);
        }
        c += 1;
    }
    let qs = primes.iter().step_by(2).take(count).map(|&p| BigInt::from(p)).collect();
    let ts = primes.iter().skip(1).step_by(2).take(count).map(|&p| BigInt::from(p)).collect();
    (qs, ts)
}

/// Interpolates `k` integer polynomials in `q, t` of degrees `≤ (dq, dt)` from
/// their values on a grid. `None` when a point is degenerate or a
/// coefficient is not an integer.
fn interpolate_family<F>(dq: u32, dt: u32, k: usize, eval: F) -> Option<Vec<Poly>>
where
    F: Fn(&BigInt, &BigInt) -> Option<Vec<BigRational>> + Sync,
{
    let (qs, ts) = nodes((dq.max(dt) + 1) as usize);
    let qs = &qs[..=dq as usize];
    let ts = &ts[..=dt as usize];
    let grid: Vec<Vec<Vec<BigRational>>> = qs
        .par_iter()
        .map(|q0| ts.iter().map(|t0| eval(q0, t0)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let qr: Vec<BigRational> = qs.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let tr: Vec<BigRational> = ts.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    (0..k)
        .into_par_iter()
        .map(|idx| {
            let values: Vec<Vec<BigRational>> = grid.iter().map(|row| row.iter().map(|v| v[idx].clone()).collect()).collect();
            let c = interpolate_grid(&qr, &tr, &values);
            let mut terms = Vec::new();
            for (a, row) in c.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    if !v.is_integer() {
                        return None;
                    }
                    terms.push((Monomial::new(a as u32, b as u32, 0), v.to_integer()));
                }
            }
            Some(Poly::from_terms(terms))
        })
        .collect()
}

/// `phi[λ][ν]`: coefficient of `s_ν` in `s_λ[X(1−x)]`, a polynomial in `x`.
fn twist_matrix(parts: &[Partition], x: Var) -> Vec<Vec<Poly>> {
    let twist = Scalar::one() - Scalar::param(x);
    parts
        .par_iter()
        .map(|lam| {
            let f = Sym::s(lam.clone()).scale_alphabet(&twist).to_basis(Basis::S);
            parts
                .iter()
                .map(|nu| {
                    let c = f.coeff(nu);
                    assert!(c.is_polynomial(), "plethystic twist of a Schur function is polynomial");
                    c.numer().clone()
                })
                .collect()
        })
        .collect()
}

fn build_table(n: u32) -> MacdonaldTable {
    let parts = Partition::all(n);
    let k = parts.len();
    let phi_q = twist_matrix(&parts, Var::Q);
    let phi_t = twist_matrix(&parts, Var::T);
    let top = parts.iter().position(|p| *p == Partition::row(n)).expect("(n) is a partition of n");

    let coeffs: Vec<Vec<Poly>> = parts
        .par_iter()
        .map(|mu| {
            let conj = mu.conjugate();
            let q_rows: Vec<usize> = (0..k).filter(|&j| !parts[j].dominates(mu)).collect();
            let t_rows: Vec<usize> = (0..k).filter(|&j| !parts[j].dominates(&conj)).collect();
            let eval = |q0: &BigInt, t0: &BigInt| -> Option<Vec<BigRational>> {
                let qp = [q0.clone(), BigInt::zero(), BigInt::zero()];
                let tp = [BigInt::zero(), t0.clone(), BigInt::zero()];
                let mut a = Vec::new();
                let mut b = Vec::new();
                for &j in &q_rows {
                    a.push((0..k).map(|l| phi_q[l][j].eval_int(&qp)).collect::<Vec<_>>());
                    b.push(vec![BigInt::zero()]);
                }
                for &j in &t_rows {
                    a.push((0..k).map(|l| phi_t[l][j].eval_int(&tp)).collect::<Vec<_>>());
                    b.push(vec![BigInt::zero()]);
                }
                a.push((0..k).map(|l| if l == top { BigInt::one() } else { BigInt::zero() }).collect());
                b.push(vec![BigInt::one()]);
                let (x, det) = bareiss_solve(&a, &b).ok()?;
                Some(x.into_iter().map(|v| BigRational::new(v[0].clone(), det.clone())).collect())
            };
            let satisfies = |row: &[Poly]| -> bool {
                let pinned = |phi: &[Vec<Poly>], rows: &[usize]| {
                    rows.iter().all(|&j| {
                        let mut acc = Poly::zero();
                        for l in 0..k {
                            acc = acc.add(&row[l].mul(&phi[l][j]));
                        }
                        acc.is_zero()
                    })
                };
                row[top].is_one() && pinned(&phi_q, &q_rows) && pinned(&phi_t, &t_rows)
            };
            let bounds = [
                (mu.conjugate().n_stat() as u32, mu.n_stat() as u32),
                (binom2(n), binom2(n)),
            ];
            for (dq, dt) in bounds {
                if let Some(row) = interpolate_family(dq, dt, k, eval) {
                    if satisfies(&row) {
                        return row;
                    }
                }
            }
            panic!("could not determine the modified Macdonald polynomial for {mu}");
        })
        .collect();

    let table = MacdonaldTable { degree: n, parts, coeffs };
    if let Err(e) = check_orthogonality(&table) {
        panic!("modified Macdonald table for n={n} fails orthogonality: {e}");
    }
    table
}

fn binom2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// `⟨H̃_μ[X(1−1/t)], H̃_λ[X(1−q)]⟩ = 0` for `λ ≠ μ` and `⟨H̃_μ, h_n⟩ = 1`.
pub fn check_orthogonality(table: &MacdonaldTable) -> Result<()> {
    let rows = table.rows();
    let t_twist = Scalar::one() - Scalar::t().inv()?;
    let q_twist = Scalar::one() - Scalar::q();
    let left: Vec<(Partition, Sym)> = rows.iter().map(|(mu, f)| (mu.clone(), f.scale_alphabet(&t_twist))).collect();
    let right: Vec<(Partition, Sym)> = rows.iter().map(|(mu, f)| (mu.clone(), f.scale_alphabet(&q_twist))).collect();
    let h_n = Sym::h(table.degree as i64);
    for (mu, f) in &rows {
        let v = f.hall_inner(&h_n);
        if !v.is_one() {
            return Err(Error::Internal(format!("<H~{mu}, h_n> = {v}")));
        }
    }
    let failures: Vec<String> = left
        .par_iter()
        .flat_map(|(mu, a)| {
            right
                .iter()
                .filter(|(lam, _)| lam != mu)
                .filter_map(|(lam, b)| {
                    let v = a.hall_inner(b);
                    (!v.is_zero()).then(|| format!("<H~{mu}[X(1-1/t)], H~{lam}[X(1-q)]> = {v}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    match failures.into_iter().next() {
        Some(f) => Err(Error::Internal(f)),
        None => Ok(()),
    }
}

/// The matrix of ∇ on Schur functions of one degree.
#[derive(Clone, Debug)]
pub struct NablaMatrix {
    parts: Vec<Partition>,
    /// `rows[i][j]`: coefficient of `s_{parts[j]}` in `∇ s_{parts[i]}`.
    rows: Vec<Vec<Poly>>,
    /// The same matrix with `q = 1`.
    rows_q1: Vec<Vec<Poly>>,
}

impl NablaMatrix {
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    fn apply_rows(&self, rows: &[Vec<Poly>], f: &Sym) -> Sym {
        let s = f.to_basis(Basis::S);
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); self.parts.len()];
        for (i, lam) in self.parts.iter().enumerate() {
            let c = s.coeff(lam);
            if c.is_zero() {
                continue;
            }
            for (j, entry) in rows[i].iter().enumerate() {
                if !entry.is_zero() {
                    acc[j] += &(&c * &Scalar::from_poly(entry.clone()));
                }
            }
        }
        Sym::from_terms(Basis::S, self.parts.iter().cloned().zip(acc))
    }
}

/// The ∇ matrix of degree `n`; built once per degree.
pub fn nabla_matrix(n: u32) -> Arc<NablaMatrix> {
    if let Some(t) = nabla_cache().read().expect("nabla cache poisoned").get(&n) {
        return t.clone();
    }
    let m = Arc::new(build_nabla(n));
    nabla_cache().write().expect("nabla cache poisoned").entry(n).or_insert(m).clone()
}

fn build_nabla(n: u32) -> NablaMatrix {
    let table = macd_basis(n);
    let parts = table.parts.clone();
    let k = parts.len();
    let h = &table.coeffs;
    let eig: Vec<Poly> = parts.iter().map(eigen_poly).collect();
    let eval = |q0: &BigInt, t0: &BigInt| -> Option<Vec<BigRational>> {
        let pt = [q0.clone(), t0.clone(), BigInt::zero()];
        let hv: Vec<Vec<BigInt>> = h.iter().map(|row| row.iter().map(|c| c.eval_int(&pt)).collect()).collect();
        let dh: Vec<Vec<BigInt>> =
            hv.iter().zip(&eig).map(|(row, d)| { let d = d.eval_int(&pt); row.iter().map(|v| v * &d).collect() }).collect();
        let (x, det) = bareiss_solve(&hv, &dh).ok()?;
        Some(x.into_iter().flatten().map(|v| BigRational::new(v, det.clone())).collect())
    };
    let verified = |flat: &[Poly]| -> bool {
        (0..k).all(|i| {
            (0..k).all(|j| {
                let mut lhs = Poly::zero();
                for l in 0..k {
                    lhs = lhs.add(&h[i][l].mul(&flat[l * k + j]));
                }
                lhs == eig[i].mul(&h[i][j])
            })
        })
    };
    let mut bound = binom2(n);
    let flat = loop {
        if let Some(flat) = interpolate_family(bound, bound, k * k, eval) {
            if verified(&flat) {
                break flat;
            }
        }
        assert!(bound <= 4 * binom2(n) + 4, "nabla matrix for n={n} did not stabilise");
        bound += n.max(1);
    };
    let rows: Vec<Vec<Poly>> = flat.chunks(k).map(<[Poly]>::to_vec).collect();
    let one = Scalar::one();
    let rows_q1 = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| Scalar::from_poly(c.clone()).subs(Var::Q, &one).expect("polynomial").numer().clone())
                .collect()
        })
        .collect();
    NablaMatrix { parts, rows, rows_q1 }
}

/// ∇ applied degree by degree; the result is in the Schur basis.
pub fn nabla(f: &Sym) -> Sym {
    graded_apply(f, |m, g| m.apply_rows(&m.rows, g))
}

/// ∇ with `q = 1` everywhere: in the coefficients of `f` and in the operator.
pub fn nabla_q1(f: &Sym) -> Result<Sym> {
    let f = f.subs(Var::Q, &Scalar::one())?;
    Ok(graded_apply(&f, |m, g| m.apply_rows(&m.rows_q1, g)))
}

/// The inverse of ∇, by solving against the ∇ matrix.
pub fn nabla_inverse(f: &Sym) -> Result<Sym> {
    let mut acc = Sym::zero();
    for d in degrees(f) {
        let part = f.homogeneous_part(d).to_basis(Basis::S);
        if d == 0 {
            acc = acc + part;
            continue;
        }
        let m = nabla_matrix(d);
        let k = m.parts.len();
        // x N = a  <=>  Nᵀ xᵀ = aᵀ
        let nt = Matrix::from_fn(k, k, |i, j| Scalar::from_poly(m.rows[j][i].clone()));
        let a = Matrix::from_fn(k, 1, |i, _| part.coeff(&m.parts[i]));
        let x = solve(&nt, &a)?;
        acc = acc + Sym::from_terms(Basis::S, m.parts.iter().cloned().enumerate().map(|(i, p)| (p, x.get(i, 0).clone())));
    }
    Ok(acc.to_basis(Basis::S))
}

fn degrees(f: &Sym) -> Vec<u32> {
    let mut ds: Vec<u32> = f.terms().keys().map(Partition::size).collect();
    ds.sort_unstable();
    ds.dedup();
    ds
}

fn graded_apply(f: &Sym, op: impl Fn(&NablaMatrix, &Sym) -> Sym) -> Sym {
    let mut acc = Sym::zero();
    for d in degrees(f) {
        let part = f.homogeneous_part(d);
        acc = acc + if d == 0 { part } else { op(&nabla_matrix(d), &part) };
    }
    acc.to_basis(Basis::S)
}

/// `H̃_λ[X; 0, 1/q] · q^{n(λ)}`, the Hall–Littlewood slice of the Macdonald table.
pub fn hall_littlewood_from_macdonald(lambda: &Partition) -> Result<Sym> {
    let table = macd_basis(lambda.size());
    let h = table.get(lambda).ok_or_else(|| Error::InvalidShape(lambda.to_string()))?;
    let q_inv = Scalar::q().inv()?;
    let slice = h.subs(Var::Q, &Scalar::zero())?.subs(Var::T, &q_inv)?;
    Ok(slice.scale(&Scalar::q().pow(lambda.n_stat() as i64)))
}

/// `⟨∇ f, g⟩` helper used throughout the checks.
pub fn nabla_pair(f: &Sym, g: &Sym) -> Scalar {
    nabla(f).hall_inner(g)
}

/// `f[X(1−x)]` for a parameter `x`.
pub fn twist(f: &Sym, x: Var) -> Sym {
    f.scale_alphabet(&(Scalar::one() - Scalar::param(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn degree_two() {
        let t = macd_basis(2);
        let q = Scalar::q();
        let tt = Scalar::t();
        assert_eq!(t.get(&part(&[2])).unwrap(), Sym::s(part(&[2])) + Sym::s(part(&[1, 1])).scale(&q));
        assert_eq!(t.get(&part(&[1, 1])).unwrap(), Sym::s(part(&[2])) + Sym::s(part(&[1, 1])).scale(&tt));
    }

    #[test]
    fn nabla_e3_catalan() {
        let v = nabla_pair(&Sym::e(3), &Sym::e(3));
        assert_eq!(v.to_string(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
    }

    #[test]
    fn eigen_and_inverse() {
        for n in 1..=4 {
            let table = macd_basis(n);
            for (mu, h) in table.rows() {
                assert_eq!(nabla(&h), h.scale(&nabla_eigenvalue(&mu)), "mu = {mu}");
            }
            let f = Sym::e(n as i64) + Sym::h(n as i64).scale(&Scalar::q());
            assert_eq!(nabla_inverse(&nabla(&f)).unwrap(), f);
        }
    }

    #[test]
    fn expand_roundtrip() {
        let table = macd_basis(3);
        let f = Sym::e(3);
        let coords = table.expand(&f).unwrap();
        let back = coords.iter().fold(Sym::zero(), |acc, (mu, c)| acc + table.get(mu).unwrap().scale(c));
        assert_eq!(back, f);
    }

    #[test]
    fn hall_littlewood_slice() {
        for n in 1..=4 {
            for lam in Partition::all(n) {
                assert_eq!(hall_littlewood_from_macdonald(&lam).unwrap(), crate::creation::hall_littlewood_qp(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn nabla_q1_matches_subs() {
        let f = Sym::e(4);
        let one = Scalar::one();
        assert_eq!(nabla_q1(&f).unwrap(), nabla(&f).subs(Var::Q, &one).unwrap());
        let e21 = Sym::e(2).multiply(&Sym::e(1));
        assert_eq!(nabla_q1(&e21).unwrap(), nabla_q1(&Sym::e(2)).unwrap().multiply(&nabla_q1(&Sym::e(1)).unwrap()));
        // the two paths with touch (3) have areas 2 and 3
        let touch3: Scalar = "t^2 + t^3".parse().unwrap();
        assert_eq!(nabla_q1(&Sym::h(3)).unwrap().hall_inner(&Sym::e(3)), touch3);
        assert_eq!(nabla_q1(&Sym::one()).unwrap(), Sym::one());
    }
}
