//! Truncations of `Aff(Z_2)` at finite 2-adic levels: the groups
//! `F(alpha) = Z/2^{alpha-1} x| (Z/2^{alpha+1})^x`, the index-2 subgroup
//! `F~(alpha)` cut out by `k = b mod 2` (with `u = (-1)^a 5^b`), the bit map
//! whose kernel it is, and projection-compatible towers standing in for
//! elements of the inverse limit.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{ProfiniteError, ShadowError};
use crate::shadow::Shadow;

pub const DEFAULT_LEVEL_BOUND: u32 = 10;

/// Element `(k mod 2^{alpha-1}, u mod 2^{alpha+1})` of `F(alpha)`, `alpha >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffTrunc {
    alpha: u32,
    k: i64,
    u: i64,
}

impl AffTrunc {
    pub fn new(alpha: u32, k: i64, u: i64) -> Result<Self, ProfiniteError> {
        if alpha < 2 {
            return Err(ProfiniteError::LevelTooSmall(alpha));
        }
        if u.rem_euclid(2) == 0 {
            return Err(ProfiniteError::EvenUnit(u, alpha + 1));
        }
        let k_mod = 1i64 << (alpha - 1);
        let u_mod = 1i64 << (alpha + 1);
        Ok(AffTrunc { alpha, k: k.rem_euclid(k_mod), u: u.rem_euclid(u_mod) })
    }

    pub fn identity(alpha: u32) -> Result<Self, ProfiniteError> {
        AffTrunc::new(alpha, 0, 1)
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn u(&self) -> i64 {
        self.u
    }
}

impl std::fmt::Display for AffTrunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})@{}", self.k, self.u, self.alpha)
    }
}

/// `(k1, u1) (k2, u2) = (k1 + u1 k2, u1 u2)` at a common level.
pub fn aff_mul(a: &AffTrunc, b: &AffTrunc) -> Result<AffTrunc, ProfiniteError> {
    if a.alpha != b.alpha {
        return Err(ProfiniteError::LevelMismatch(a.alpha, b.alpha));
    }
    AffTrunc::new(a.alpha, a.k + a.u * b.k, a.u * b.u)
}

pub fn aff_inv(a: &AffTrunc) -> AffTrunc {
    // u is odd, hence a unit mod 2^{alpha+1}; its inverse is u^{ord-1} but a
    // small extended-gcd is simpler.
    let u_mod = 1i64 << (a.alpha + 1);
    let u_inv = crate::shadow::mod_inverse(a.u, u_mod).expect("odd residues are units");
    AffTrunc::new(a.alpha, -u_inv * a.k, u_inv).expect("inverse stays a unit")
}

/// Reduces to a lower level `2 <= target <= alpha`.
pub fn project(a: &AffTrunc, target: u32) -> Result<AffTrunc, ProfiniteError> {
    if target > a.alpha {
        return Err(ProfiniteError::LevelMismatch(a.alpha, target));
    }
    AffTrunc::new(target, a.k, a.u)
}

/// Writes a unit mod `2^{alpha+1}` as `(-1)^a 5^b`, `a` a bit and
/// `b mod 2^{alpha-1}`; lookup over a precomputed powers-of-5 table.
pub fn unit_decompose(u: i64, alpha: u32) -> Result<(u8, i64), ProfiniteError> {
    if alpha < 2 {
        return Err(ProfiniteError::LevelTooSmall(alpha));
    }
    if u.rem_euclid(2) == 0 {
        return Err(ProfiniteError::EvenUnit(u, alpha + 1));
    }
    let u_mod = 1i64 << (alpha + 1);
    let u = u.rem_euclid(u_mod);
    let mut pow = 1i64;
    for b in 0..(1i64 << (alpha - 1)) {
        if pow == u {
            return Ok((0, b));
        }
        if (u_mod - pow).rem_euclid(u_mod) == u {
            return Ok((1, b));
        }
        pow = (pow * 5).rem_euclid(u_mod);
    }
    unreachable!("<-1> x <5> exhausts the odd residues mod 2^(alpha+1)")
}

/// The bit `(k mod 2) + b mod 2` computed at level 2; kernel membership iff 0.
pub fn psi_map(a: &AffTrunc) -> u8 {
    let a2 = project(a, 2).expect("alpha >= 2 by construction");
    let (_, b) = unit_decompose(a2.u, 2).expect("u is odd");
    ((a2.k + b).rem_euclid(2)) as u8
}

/// `F~(alpha)` membership: `k = b mod 2` for `u = (-1)^a 5^b`.
pub fn ftilde_membership(a: &AffTrunc) -> bool {
    let (_, b) = unit_decompose(a.u, a.alpha).expect("u is odd");
    (a.k - b).rem_euclid(2) == 0
}

/// BFS closure of the truncations of `(2,1)`, `(1,5)`, `(0,-1)` at the given
/// level. Equals the `F~(alpha)` membership set, of size `2^{2 alpha - 2}`.
pub fn generator_closure(alpha: u32, bound: u32) -> Result<BTreeSet<AffTrunc>, ProfiniteError> {
    if alpha > bound {
        return Err(ProfiniteError::BoundExceeded(alpha, bound));
    }
    let gens = [
        AffTrunc::new(alpha, 2, 1)?,
        AffTrunc::new(alpha, 1, 5)?,
        AffTrunc::new(alpha, 0, -1)?,
    ];
    let mut seen: BTreeSet<AffTrunc> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = AffTrunc::identity(alpha)?;
    seen.insert(id);
    queue.push_back(id);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = aff_mul(&cur, g).expect("levels match");
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// `(m, k)` at `n = 2^alpha` maps to `(k, 2m+1)`; a group isomorphism onto
/// `F~(alpha)`.
pub fn shadow_to_trunc(s: &Shadow) -> Result<AffTrunc, ShadowError> {
    let n = s.target();
    if !n.is_power_of_two() || n < 4 {
        return Err(ShadowError::NotTwoPower(n));
    }
    let alpha = n.trailing_zeros();
    Ok(AffTrunc::new(alpha, s.k(), s.u()).expect("2m+1 is odd"))
}

/// A compatible prefix of an element of the inverse limit: one entry per
/// level `2..=top`, consecutive entries agreeing under projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    entries: Vec<AffTrunc>,
}

impl Tower {
    pub fn top(&self) -> u32 {
        self.entries.last().expect("nonempty by construction").alpha
    }

    pub fn entries(&self) -> &[AffTrunc] {
        &self.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "levels": self
                .entries
                .iter()
                .map(|e| serde_json::json!({"alpha": e.alpha, "k": e.k, "u": e.u}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Assembles and validates a tower from per-level entries (level 2 upward).
pub fn tower_build(entries: Vec<AffTrunc>) -> Result<Tower, ProfiniteError> {
    if entries.is_empty() {
        return Err(ProfiniteError::LevelTooSmall(0));
    }
    for (i, e) in entries.iter().enumerate() {
        let want = 2 + i as u32;
        if e.alpha != want {
            return Err(ProfiniteError::LevelMismatch(e.alpha, want));
        }
    }
    let t = Tower { entries };
    match tower_check(&t) {
        Ok(()) => Ok(t),
        Err(e) => Err(e),
    }
}

/// Verifies projection-compatibility, reporting the first failing pair.
pub fn tower_check(t: &Tower) -> Result<(), ProfiniteError> {
    for w in t.entries.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        if project(hi, lo.alpha)? != *lo {
            return Err(ProfiniteError::Incompatible { upper: hi.alpha, lower: lo.alpha });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_examples() {
        let id = AffTrunc::identity(3).unwrap();
        let a = AffTrunc::new(3, 1, 5).unwrap();
        assert_eq!(aff_mul(&id, &a).unwrap(), a);
        let sq = aff_mul(&a, &a).unwrap();
        assert_eq!((sq.k(), sq.u()), (2, 9));
        assert_eq!(aff_mul(&a, &aff_inv(&a)).unwrap(), id);
        assert!(aff_mul(&a, &AffTrunc::identity(2).unwrap()).is_err());
    }

    #[test]
    fn project_examples() {
        let a = AffTrunc::new(3, 1, 5).unwrap();
        let p = project(&a, 2).unwrap();
        assert_eq!((p.k(), p.u()), (1, 5));
        // projection commutes with multiplication
        let b = AffTrunc::new(3, 3, 11).unwrap();
        assert_eq!(
            project(&aff_mul(&a, &b).unwrap(), 2).unwrap(),
            aff_mul(&project(&a, 2).unwrap(), &project(&b, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn unit_decompose_examples() {
        assert_eq!(unit_decompose(7, 2).unwrap(), (1, 0));
        assert_eq!(unit_decompose(3, 2).unwrap(), (1, 1));
        assert_eq!(unit_decompose(9, 3).unwrap(), (0, 2));
        assert!(unit_decompose(4, 2).is_err());
    }

    #[test]
    fn unit_decompose_roundtrip() {
        for alpha in 2..=6u32 {
            let u_mod = 1i64 << (alpha + 1);
            for u in (1..u_mod).step_by(2) {
                let (a, b) = unit_decompose(u, alpha).unwrap();
                let mut v = 1i64;
                for _ in 0..b {
                    v = (v * 5).rem_euclid(u_mod);
                }
                if a == 1 {
                    v = (u_mod - v).rem_euclid(u_mod);
                }
                assert_eq!(v, u);
            }
        }
    }

    #[test]
    fn psi_map_examples() {
        assert_eq!(psi_map(&AffTrunc::new(4, 0, -1).unwrap()), 0);
        assert_eq!(psi_map(&AffTrunc::new(4, 1, 5).unwrap()), 0);
        assert_eq!(psi_map(&AffTrunc::new(4, 1, 1).unwrap()), 1);
    }

    #[test]
    fn ftilde_examples() {
        assert!(ftilde_membership(&AffTrunc::new(3, 1, 5).unwrap()));
        assert!(!ftilde_membership(&AffTrunc::new(3, 1, 9).unwrap()));
        assert!(ftilde_membership(&AffTrunc::new(2, 0, 7).unwrap()));
    }

    #[test]
    fn ftilde_is_kernel() {
        for alpha in 2..=5u32 {
            let u_mod = 1i64 << (alpha + 1);
            for k in 0..(1i64 << (alpha - 1)) {
                for u in (1..u_mod).step_by(2) {
                    let a = AffTrunc::new(alpha, k, u).unwrap();
                    assert_eq!(ftilde_membership(&a), psi_map(&a) == 0);
                }
            }
        }
    }

    #[test]
    fn closure_examples() {
        let c = generator_closure(2, DEFAULT_LEVEL_BOUND).unwrap();
        let expect: BTreeSet<_> = [(0, 1), (0, 7), (1, 5), (1, 3)]
            .into_iter()
            .map(|(k, u)| AffTrunc::new(2, k, u).unwrap())
            .collect();
        assert_eq!(c, expect);
        assert_eq!(generator_closure(3, 10).unwrap().len(), 16);
        assert_eq!(generator_closure(4, 10).unwrap().len(), 64);
        assert!(generator_closure(11, 10).is_err());
    }

    #[test]
    fn shadow_to_trunc_examples() {
        let s = Shadow::identity(4).unwrap();
        let t = shadow_to_trunc(&s).unwrap();
        assert_eq!((t.k(), t.u()), (0, 1));
        let t = shadow_to_trunc(&Shadow::new(4, 3, 0).unwrap()).unwrap();
        assert_eq!((t.k(), t.u()), (0, 7));
        assert!(ftilde_membership(&t));
        let t = shadow_to_trunc(&Shadow::new(8, 1, 1).unwrap()).unwrap();
        assert_eq!((t.k(), t.u()), (1, 3));
        assert!(shadow_to_trunc(&Shadow::identity(6).unwrap()).is_err());
    }

    #[test]
    fn towers() {
        let id: Vec<_> = (2..=5).map(|a| AffTrunc::identity(a).unwrap()).collect();
        assert!(tower_build(id).is_ok());
        let fives: Vec<_> = (2..=6).map(|a| AffTrunc::new(a, 1, 5).unwrap()).collect();
        assert!(tower_build(fives).is_ok());
        let bad = vec![AffTrunc::new(2, 0, 5).unwrap(), AffTrunc::new(3, 1, 5).unwrap()];
        assert_eq!(
            tower_build(bad).unwrap_err(),
            ProfiniteError::Incompatible { upper: 3, lower: 2 }
        );
    }
}
