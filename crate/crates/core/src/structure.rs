//! The isomorphism onto affine-type coordinates, the index-2 subgroup `H_n`,
//! and the structure decomposition `GT(K^(n)) = Aff(Z/n0) x (Z_2 or H~_alpha)`
//! with order formulas and the arithmetic lower bound.

use num_integer::Integer;
use serde_json::json;

use crate::error::ShadowError;
use crate::poset::canonicalize;
use crate::shadow::{mod_inverse, Shadow};

/// `nu(u)`: `(u-1)/4` if `u = 1 mod 4`, `(u+1)/4` if `u = 3 mod 4`.
pub fn nu(u: i64) -> Result<i64, ShadowError> {
    if u.rem_euclid(2) == 0 {
        return Err(ShadowError::NotAUnit(u, 4));
    }
    Ok(if u.rem_euclid(4) == 1 { (u - 1) / 4 } else { (u + 1) / 4 })
}

/// Element `(k, u)` of `Z/n1 x| (Z/2n)^x` with `n1 = n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffCoord {
    n: u32,
    k: i64,
    u: i64,
}

impl AffCoord {
    pub fn new(n: u32, k: i64, u: i64) -> Result<Self, ShadowError> {
        let n = canonicalize(n)?;
        let two_n = 2 * n as i64;
        let u = u.rem_euclid(two_n);
        if u.gcd(&two_n) != 1 {
            return Err(ShadowError::NotAUnit(u, two_n));
        }
        Ok(AffCoord { n, k: k.rem_euclid(n as i64 / 2), u })
    }

    pub fn identity(n: u32) -> Result<Self, ShadowError> {
        AffCoord::new(n, 0, 1)
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    /// `(k1, u1) (k2, u2) = (k1 + u1 k2, u1 u2)`.
    pub fn mul(&self, other: &AffCoord) -> Result<AffCoord, ShadowError> {
        if self.n != other.n {
            return Err(ShadowError::TargetMismatch(self.n, other.n));
        }
        AffCoord::new(self.n, self.k + self.u * other.k, self.u * other.u)
    }

    pub fn inv(&self) -> AffCoord {
        let u_inv = mod_inverse(self.u, 2 * self.n as i64).expect("unit");
        AffCoord::new(self.n, -u_inv * self.k, u_inv).expect("unit inverse")
    }
}

/// `rho`: `(m, k) -> (k, 2m+1)`.
pub fn rho(s: &Shadow) -> AffCoord {
    AffCoord::new(s.target(), s.k(), s.u()).expect("2m+1 is a unit")
}

/// Inverse of `rho`; rejects coordinates outside `H_n` when `4 | n`.
pub fn rho_inv(a: &AffCoord) -> Result<Shadow, ShadowError> {
    let n = a.modulus();
    if n % 4 == 0 && !hn_membership(a)? {
        return Err(ShadowError::NotInHn { k: a.k(), u: a.u(), n });
    }
    let m = (a.u() - 1) / 2; // u is odd
    Shadow::new(n, m, a.k())
}

/// `H_n` membership for `4 | n`: `k = nu(u) mod 2`.
pub fn hn_membership(a: &AffCoord) -> Result<bool, ShadowError> {
    let n = a.modulus();
    if n % 4 != 0 {
        return Err(ShadowError::NotTwoPower(n));
    }
    Ok((a.k() - nu(a.u())?).rem_euclid(2) == 0)
}

/// Decomposition data of `GT(K^(n))` per the CRT splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDescriptor {
    pub n: u32,
    /// odd part of the canonical modulus
    pub n0: u32,
    /// 2-adic valuation of the canonical modulus
    pub alpha: u32,
    pub factors: Vec<String>,
    pub order: u64,
    /// CRT idempotent pair for `Z/2n = Z/2^{alpha+1} x Z/n0`
    idem: (i64, i64),
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

pub fn structure_of(n: u32) -> Result<StructureDescriptor, ShadowError> {
    let n = canonicalize(n)?;
    let alpha = n.trailing_zeros();
    let n0 = n >> alpha;
    let phi0 = euler_phi(n0 as u64);
    let (factors, order) = if alpha < 2 {
        (
            vec![format!("Aff(Z/{n0})"), "Z2".to_string()],
            2 * n0 as u64 * phi0,
        )
    } else {
        (
            vec![format!("Aff(Z/{n0})"), format!("Htilde({alpha})")],
            n0 as u64 * phi0 * (1u64 << (2 * alpha - 2)),
        )
    };
    // explicit idempotents: e2 = 1 mod 2^{alpha+1}, 0 mod n0; e0 = 1 - e2
    let two_n = 2 * n as i64;
    let pow2 = 1i64 << (alpha + 1);
    let e2 = if n0 == 1 {
        0
    } else {
        let inv = mod_inverse(pow2, n0 as i64).expect("coprime");
        (pow2 * inv).rem_euclid(two_n)
    };
    // e2 is 1 mod n0 and 0 mod 2^{alpha+1}; its complement picks out the
    // two-power part.
    let e_odd = e2;
    let e_two = (1 - e_odd).rem_euclid(two_n);
    Ok(StructureDescriptor { n, n0, alpha, factors, order, idem: (e_two, e_odd) })
}

impl StructureDescriptor {
    /// Splits a coordinate into its `Aff(Z/n0)` and 2-power components:
    /// `((k mod n0, u mod n0), (k mod 2^{alpha-1}, u mod 2^{alpha+1}))`.
    pub fn components(&self, a: &AffCoord) -> ((i64, i64), (i64, i64)) {
        let n0 = self.n0 as i64;
        let pow_k = 1i64 << self.alpha.saturating_sub(1);
        let pow_u = 1i64 << (self.alpha + 1);
        ((a.k().rem_euclid(n0), a.u().rem_euclid(n0)), (a.k().rem_euclid(pow_k), a.u().rem_euclid(pow_u)))
    }

    /// Reassembles a unit mod `2n` from its CRT components via the stored
    /// idempotents.
    pub fn recombine_unit(&self, u_two: i64, u_odd: i64) -> i64 {
        let two_n = 2 * self.n as i64;
        (u_two * self.idem.0 + u_odd * self.idem.1).rem_euclid(two_n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "n0": self.n0,
            "alpha": self.alpha,
            "factors": self.factors,
            "order": self.order,
        })
    }
}

/// `|PB_3 : K^(n)| = 4 n^3` for odd `n`, `4 (n/2)^3` for even `n`.
pub fn index_pb3(n: u32) -> u64 {
    crate::dihedral::gn_order(n)
}

/// Lower bound on the order of the arithmetical subgroup:
/// `2 phi(n0)` for `alpha < 2`, `2^{2 alpha - 2} phi(n0)` for `alpha >= 2`.
pub fn arith_lower_bound(n: u32) -> Result<u64, ShadowError> {
    let n = canonicalize(n)?;
    let alpha = n.trailing_zeros();
    let n0 = n >> alpha;
    let phi0 = euler_phi(n0 as u64);
    Ok(if alpha < 2 { 2 * phi0 } else { (1u64 << (2 * alpha - 2)) * phi0 })
}
