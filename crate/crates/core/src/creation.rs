//! Creation operators ℍ_m, 𝕊_m, 𝔹_m, ℂ_m and the families built from them.
//!
//! Every operator is applied through its finite summation form
//!
//! ```text
//! ℍ_m f = Σ_r (−1)^r h_{m+r} · e_r[X(1−Q)]⊥ f
//! 𝔹_m f = Σ_r (−1)^r e_{m+r} · h_r[X(1−Q)]⊥ f
//! ℂ_m f = (−1/Q)^{m−1} Σ_r Q^{−r} h_{m+r} · h_r[X(1−Q)]⊥ f
//! 𝕊_m f = Σ_r (−1)^r h_{m+r} · e_r⊥ f
//! ```
//!
//! where `r` runs up to the degree of `f`. `Q` is the parameter `q` for the
//! standard operators; other values (notably `1/q`) are available through
//! [`Creation::with_param`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Var;
use crate::scalar::{pochhammer, q_binomial, Scalar};
use crate::shapes::{Composition, Partition};
use crate::sym::{Alphabet, Basis, SymFunc};

pub type Sym = SymFunc<Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorKind {
    H,
    S,
    B,
    C,
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::H => "H",
            OperatorKind::S => "S",
            OperatorKind::B => "B",
            OperatorKind::C => "C",
        })
    }
}

/// One operator with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Operator {
    pub kind: OperatorKind,
    pub m: i64,
}

impl Operator {
    pub fn new(kind: OperatorKind, m: i64) -> Self {
        Operator { kind, m }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.m)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Piece {
    /// `h_r[X(1−Q)]`
    HTwisted,
    /// `e_r[X(1−Q)]`
    ETwisted,
    /// `e_r`
    E,
    /// `h_r`
    H,
}

/// Operator family for a fixed value of the internal parameter `Q`.
pub struct Creation {
    param: Scalar,
    pieces: RwLock<HashMap<(Piece, u32), Arc<Sym>>>,
}

impl Creation {
    pub fn with_param(param: Scalar) -> Self {
        Creation { param, pieces: RwLock::new(HashMap::new()) }
    }

    /// The operators with `Q = q`, shared process-wide.
    pub fn standard() -> &'static Creation {
        static STD: OnceLock<Creation> = OnceLock::new();
        STD.get_or_init(|| Creation::with_param(Scalar::q()))
    }

    pub fn param(&self) -> &Scalar {
        &self.param
    }

    fn piece(&self, piece: Piece, r: u32) -> Arc<Sym> {
        if let Some(v) = self.pieces.read().expect("operator cache poisoned").get(&(piece, r)) {
            return v.clone();
        }
        let value = Arc::new(match piece {
            Piece::H => Sym::h(r as i64).to_basis(Basis::P),
            Piece::E => Sym::e(r as i64).to_basis(Basis::P),
            Piece::HTwisted | Piece::ETwisted => {
                // p_μ[X(1−Q)] = p_μ Π_i (1 − Q^{μ_i})
                let base = if piece == Piece::HTwisted { Sym::h(r as i64) } else { Sym::e(r as i64) };
                let p = base.to_basis(Basis::P);
                let terms = p.terms().iter().map(|(mu, c)| {
                    let mut k = c.clone();
                    for &part in mu.parts() {
                        k = &k * &(Scalar::one() - self.param.adams(part));
                    }
                    (mu.clone(), k)
                });
                Sym::from_terms(Basis::P, terms)
            }
        });
        self.pieces.write().expect("operator cache poisoned").entry((piece, r)).or_insert(value).clone()
    }

    fn graded(&self, piece: Piece, k: i64) -> Option<Arc<Sym>> {
        if k < 0 {
            None
        } else {
            Some(self.piece(piece, k as u32))
        }
    }

    /// Applies one operator to `f`. The result is in the power-sum basis.
    pub fn apply(&self, op: Operator, f: &Sym) -> Sym {
        let m = op.m;
        let deg = match f.degree() {
            Some(d) => d,
            None => return Sym::zero(),
        };
        let f = f.to_basis(Basis::P);
        let (skew_piece, mult_piece) = match op.kind {
            OperatorKind::H => (Piece::ETwisted, Piece::H),
            OperatorKind::B => (Piece::HTwisted, Piece::E),
            OperatorKind::C => (Piece::HTwisted, Piece::H),
            OperatorKind::S => (Piece::E, Piece::H),
        };
        let q_inv = if op.kind == OperatorKind::C {
            Some(self.param.inv().expect("operator parameter is nonzero"))
        } else {
            None
        };
        let mut acc = Sym::zero();
        for r in 0..=deg {
            let Some(mult) = self.graded(mult_piece, m + r as i64) else {
                continue;
            };
            let skewed = self.piece(skew_piece, r).perp(&f);
            if skewed.is_zero() {
                continue;
            }
            let coeff = match &q_inv {
                Some(qi) => qi.pow(r as i64),
                None if r % 2 == 1 => Scalar::from_int(-1),
                None => Scalar::one(),
            };
            acc = acc + mult.multiply(&skewed).scale(&coeff);
        }
        if let Some(qi) = q_inv {
            acc = acc.scale(&(-qi).pow(m - 1));
        }
        acc
    }

    /// Applies `ops[0] ops[1] … ops[last]` to `f`: the last operator acts first.
    pub fn apply_word(&self, ops: &[Operator], f: &Sym) -> Sym {
        ops.iter().rev().fold(f.clone(), |acc, op| self.apply(*op, &acc))
    }

    /// `B_α = 𝔹_{α_ℓ} ⋯ 𝔹_{α_1}(1)`.
    pub fn b_family(&self, alpha: &Composition) -> Sym {
        alpha.parts().iter().fold(Sym::one(), |acc, &a| self.apply(Operator::new(OperatorKind::B, a as i64), &acc))
    }

    /// `C_α = ℂ_{α_1} ⋯ ℂ_{α_ℓ}(1)`.
    pub fn c_family(&self, alpha: &Composition) -> Sym {
        alpha.parts().iter().rev().fold(Sym::one(), |acc, &a| self.apply(Operator::new(OperatorKind::C, a as i64), &acc))
    }

    /// `Q′_λ = ℍ_{λ_1} ⋯ ℍ_{λ_ℓ}(1)`.
    pub fn hall_littlewood_qp(&self, lambda: &Partition) -> Sym {
        lambda.parts().iter().rev().fold(Sym::one(), |acc, &a| self.apply(Operator::new(OperatorKind::H, a as i64), &acc))
    }

    /// ℂ_a through its plethystic series form
    /// `(−1/Q)^{a−1} P[X − (1 − 1/Q)/z] Ω[zX] |_{z^a}`, with `Ω[zX]`
    /// truncated at the only degrees that can contribute.
    pub fn c_series_form(&self, a: i64, f: &Sym) -> Result<Sym> {
        let deg = match f.degree() {
            Some(d) => d as i64,
            None => return Ok(Sym::zero()),
        };
        if self.param.uses(Var::Z) {
            return Err(Error::Internal("series form needs a z-free parameter".into()));
        }
        let q_inv = self.param.inv()?;
        let shift = Alphabet::X - Alphabet::Const(Scalar::one() - q_inv.clone()).div(Alphabet::param(Var::Z));
        let shifted = f.plethysm(&shift)?;
        let mut acc = Sym::zero();
        // [z^a] Σ_k [z^{-k}]P · z^j h_j with j = a + k
        for k in 0..=deg {
            let j = a + k;
            if j < 0 {
                continue;
            }
            let part = shifted.z_coeff(-k)?;
            if part.is_zero() {
                continue;
            }
            acc = acc + part.multiply(&Sym::h(j));
        }
        Ok(acc.scale(&(-q_inv).pow(a - 1)))
    }
}

/// Applies an operator with the standard parameter `q`.
pub fn apply(op: Operator, f: &Sym) -> Sym {
    Creation::standard().apply(op, f)
}

pub fn build_b(alpha: &Composition) -> Sym {
    Creation::standard().b_family(alpha)
}

pub fn build_c(alpha: &Composition) -> Sym {
    Creation::standard().c_family(alpha)
}

pub fn hall_littlewood_qp(lambda: &Partition) -> Sym {
    Creation::standard().hall_littlewood_qp(lambda)
}

type EnkCache = RwLock<HashMap<u32, Arc<Vec<Sym>>>>;

fn enk_cache() -> &'static EnkCache {
    static CACHE: OnceLock<EnkCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `E_{n,k}` for `1 ≤ k ≤ n` (and `E_{0,0} = 1`), defined by
/// `e_n[X(1−z)/(1−q)] = Σ_k (z;q)_k/(q;q)_k E_{n,k}`.
pub fn e_nk(n: u32, k: u32) -> Result<Sym> {
    if n == 0 && k == 0 {
        return Ok(Sym::one());
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("E_{{n,k}} needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(e_n_pieces(n)?[k as usize].clone())
}

/// All `E_{n,0..=n}`; slot 0 is zero for `n ≥ 1`.
fn e_n_pieces(n: u32) -> Result<Arc<Vec<Sym>>> {
    if let Some(v) = enk_cache().read().expect("E_nk cache poisoned").get(&n) {
        return Ok(v.clone());
    }
    let q = Scalar::q();
    let twist = (Scalar::one() - Scalar::z()).checked_div(&(Scalar::one() - q.clone()))?;
    let full = Sym::e(n as i64).plethysm(&Alphabet::x_times(twist))?;
    let coeffs: Vec<Sym> = (0..=n as i64).map(|j| full.z_coeff(j)).collect::<Result<_>>()?;
    // (z;q)_k = Σ_j (−1)^j q^{C(j,2)} [k,j]_q z^j
    let zq = |k: u32, j: u32| -> Scalar {
        let sign = if j % 2 == 1 { -Scalar::one() } else { Scalar::one() };
        sign * q.pow((j as i64) * (j as i64 - 1) / 2) * q_binomial(k, j as i64)
    };
    let qq: Vec<Scalar> = (0..=n).map(|k| pochhammer(&q, k)).collect();
    let mut pieces = vec![Sym::zero(); n as usize + 1];
    for j in (0..=n).rev() {
        let mut rhs = coeffs[j as usize].clone();
        for k in j + 1..=n {
            let c = zq(k, j).checked_div(&qq[k as usize])?;
            rhs = rhs - pieces[k as usize].scale(&c);
        }
        let lead = zq(j, j).checked_div(&qq[j as usize])?;
        pieces[j as usize] = rhs.scale(&lead.inv()?);
    }
    if n >= 1 && !pieces[0].is_zero() {
        return Err(Error::Internal(format!("E_{{{n},0}} extracted as nonzero: {}", pieces[0])));
    }
    let pieces = Arc::new(pieces);
    enk_cache().write().expect("E_nk cache poisoned").insert(n, pieces.clone());
    Ok(pieces)
}
