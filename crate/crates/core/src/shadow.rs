//! The group of GT-shadows with a dihedral target: hexagon verification,
//! enumeration (brute-force and closed-form), composition, inversion, and
//! the finite virtual cyclotomic characters.

use num_integer::Integer;
use serde_json::json;

use crate::dihedral::{
    self, comm_membership, gn_tau, gn_theta, psi_eval, CommTriple, DihTriple,
};
use crate::error::ShadowError;
use crate::poset::canonicalize;
use crate::word::{Gen, Word};

/// `kappa(m)`: `m+1` for odd `m`, `-m` for even `m`; always even.
pub fn kappa(m: i64) -> i64 {
    if m.rem_euclid(2) == 1 { m + 1 } else { -m }
}

/// Canonical GT-shadow with target `K^(n)`: `n` even `>= 4`, `m` mod `n`,
/// `k` mod `n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shadow {
    n: u32,
    m: u32,
    k: u32,
}

impl Shadow {
    /// Validates the charming unit condition and, for `4 | n`, the parity
    /// clause `k = kappa(m)/2 mod 2`. Odd `n` is canonicalized to `2n`.
    pub fn new(n: u32, m: i64, k: i64) -> Result<Self, ShadowError> {
        let n = canonicalize(n)?;
        let m = m.rem_euclid(n as i64);
        let k = k.rem_euclid(n as i64 / 2);
        if (2 * m + 1).gcd(&(n as i64)) != 1 {
            return Err(ShadowError::CharmingUnit { m, n });
        }
        if n % 4 == 0 && (k - kappa(m) / 2).rem_euclid(2) != 0 {
            return Err(ShadowError::KappaParity { m, k, n });
        }
        Ok(Shadow { n: n as u32, m: m as u32, k: k as u32 })
    }

    pub fn identity(n: u32) -> Result<Self, ShadowError> {
        Shadow::new(n, 0, 0)
    }

    pub fn target(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m as i64
    }

    pub fn k(&self) -> i64 {
        self.k as i64
    }

    /// `u = 2m+1` as a unit mod `2n`.
    pub fn u(&self) -> i64 {
        (2 * self.m() + 1).rem_euclid(2 * self.n as i64)
    }

    /// The associated commutator triple `g = (r^{2k}, r^{-2k}, r^{kappa(m)})`.
    pub fn comm_triple(&self) -> CommTriple {
        CommTriple::new(self.n, [self.k(), -self.k(), kappa(self.m()) / 2])
            .expect("shadow invariant")
    }

    /// Canonical representative word `x^{2k} y^{-2k} z^{kappa(m)}`.
    pub fn rep_word(&self) -> Word {
        Word::gen_pow(Gen::X, 2 * self.k())
            .concat(&Word::gen_pow(Gen::Y, -2 * self.k()))
            .concat(&Word::z().pow(kappa(self.m())))
    }

    /// Virtual cyclotomic character: `2m+1` mod `K_ord = n`.
    pub fn chi_vir_n(&self) -> i64 {
        (2 * self.m() + 1).rem_euclid(self.n as i64)
    }

    /// The lift of the character to a unit mod `2n`.
    pub fn chi_2n(&self) -> i64 {
        self.u()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "u": self.u(),
            "word": self.rep_word().to_string(),
        })
    }

    /// Coordinate label `m.k` used in Cayley tables.
    pub fn label(&self) -> String {
        format!("{}.{}", self.m, self.k)
    }
}

/// Both simplified hexagon identities, evaluated in `G_n`:
/// `g theta(g) = 1` and `tau^2(y^m g) tau(y^m g) y^m g = 1`.
pub fn hexagon_check(n: u32, m: i64, g: &CommTriple) -> Result<bool, ShadowError> {
    if g.modulus() != n {
        return Err(ShadowError::TargetMismatch(g.modulus(), n));
    }
    let gt = g.triple();
    let id = DihTriple::identity(n);
    let hex1 = gt.mul(&gn_theta(&gt).map_err(ShadowError::Group)?) == id;
    if !hex1 {
        return Ok(false);
    }
    let w = DihTriple::y_bar(n).pow(m).mul(&gt);
    let tw = gn_tau(&w).map_err(ShadowError::Group)?;
    let ttw = gn_tau(&tw).map_err(ShadowError::Group)?;
    Ok(ttw.mul(&tw).mul(&w) == id)
}

/// Charming condition: `gcd(2m+1, lcm(n,2)) = 1` and `g` in `[G_n, G_n]`.
pub fn charming_check(n: u32, m: i64, g: &DihTriple) -> bool {
    let k_ord = (n as i64).lcm(&2);
    (2 * m + 1).gcd(&k_ord) == 1 && comm_membership(g).is_ok()
}

pub const DEFAULT_BOUND: u32 = 24;

/// All `(m, g)` passing the charming and hexagon checks, converted to
/// `(m, k)` form. Iterates `g` over the commutator-triple parameter space.
pub fn enumerate_brute(n: u32, bound: u32) -> Result<Vec<Shadow>, ShadowError> {
    let n = canonicalize(n)?;
    if n > bound {
        return Err(ShadowError::BoundExceeded(n, bound));
    }
    let q = dihedral::ord_r2(n) as i64;
    let mut out = Vec::new();
    for m in 0..n as i64 {
        if (2 * m + 1).gcd(&(n as i64)) != 1 {
            continue;
        }
        for e0 in 0..q {
            for e1 in 0..q {
                for e2 in 0..q {
                    let Ok(g) = CommTriple::new(n, [e0, e1, e2]) else { continue };
                    if !charming_check(n, m, &g.triple()) {
                        continue;
                    }
                    if !hexagon_check(n, m, &g)? {
                        continue;
                    }
                    // solutions have the form (r^{2k}, r^{-2k}, r^{kappa(m)})
                    let k = e0;
                    let s = Shadow::new(n, m, k)?;
                    assert_eq!(s.comm_triple(), g, "brute solution not in canonical form");
                    out.push(s);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Closed-form enumeration: `gcd(2m+1, n) = 1`, `k` in `Z/(n/2)`, and the
/// parity clause when `4 | n`.
pub fn enumerate_closed(n: u32) -> Result<Vec<Shadow>, ShadowError> {
    let n = canonicalize(n)?;
    let mut out = Vec::new();
    for m in 0..n as i64 {
        for k in 0..n as i64 / 2 {
            if let Ok(s) = Shadow::new(n, m, k) {
                out.push(s);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Word-level composition: representative words through `E_{m1,f1}`, then
/// `psi_n`, re-extracted as `(m, k)`. Cross-checked against the semidirect
/// law `k' = k1 + (2 m1 + 1) k2`.
pub fn compose(s1: &Shadow, s2: &Shadow) -> Result<Shadow, ShadowError> {
    if s1.target() != s2.target() {
        return Err(ShadowError::TargetMismatch(s1.target(), s2.target()));
    }
    let n = s1.target();
    let m = 2 * s1.m() * s2.m() + s1.m() + s2.m();

    let f1 = s1.rep_word();
    let f = f1.concat(&s2.rep_word().endo_e(s1.m(), &f1));
    let g = psi_eval(n, &f);
    let c = comm_membership(&g).map_err(ShadowError::Group)?;
    // first slot is r^{2k}
    let k = c.exps()[0];
    let out = Shadow::new(n, m, k)?;
    debug_assert_eq!(
        k.rem_euclid(n as i64 / 2),
        (s1.k() + s1.u() * s2.k()).rem_euclid(n as i64 / 2),
        "word-level and semidirect composition disagree"
    );
    debug_assert_eq!(out.comm_triple(), c);
    Ok(out)
}

/// Groupoid inverse, computed in semidirect coordinates:
/// `(k, u)^-1 = (-u^-1 k, u^-1)`.
pub fn inverse(s: &Shadow) -> Shadow {
    let n = s.target() as i64;
    let u_inv = mod_inverse(s.u(), 2 * n).expect("u is a unit mod 2n");
    let k = (-u_inv * s.k()).rem_euclid(n / 2);
    let m = (u_inv - 1) / 2; // u_inv is odd
    Shadow::new(s.target(), m, k).expect("inverse of a valid shadow is valid")
}

pub fn mod_inverse(a: i64, modulus: i64) -> Option<i64> {
    let e = a.extended_gcd(&modulus);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(modulus))
}

/// Checks that the endomorphism of `G_n` sending `x-bar` to `x-bar^{2m+1}`
/// and `y-bar` to `g^-1 y-bar^{2m+1} g` is an automorphism: the closure of
/// the two images has full order `|G_n|`.
pub fn is_isolated_witness(s: &Shadow) -> bool {
    let n = s.target();
    let u = 2 * s.m() + 1;
    let g = s.comm_triple().triple();
    let ix = DihTriple::x_bar(n).pow(u);
    let iy = g.inv().mul(&DihTriple::y_bar(n).pow(u)).mul(&g);
    let gens = [ix, iy, ix.inv(), iy.inv()];
    dihedral::bfs_closure(n, &gens).len() as u64 == dihedral::gn_order(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shadows(n: u32) -> Vec<Shadow> {
        enumerate_closed(n).unwrap()
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(0), 0);
        assert_eq!(kappa(1), 2);
        assert_eq!(kappa(2), -2);
    }

    #[test]
    fn hexagon_examples() {
        let g = |e| CommTriple::new(6, e).unwrap();
        assert!(hexagon_check(6, 0, &g([0, 0, 0])).unwrap());
        assert!(hexagon_check(6, 0, &g([1, -1, 0])).unwrap());
        assert!(!hexagon_check(6, 0, &g([1, 1, 0])).unwrap());
    }

    #[test]
    fn charming_examples() {
        let g = CommTriple::new(6, [1, -1, 1]).unwrap();
        assert!(!charming_check(6, 1, &g.triple())); // gcd(3, 6) = 3
        assert!(charming_check(6, 0, &DihTriple::identity(6)));
        let g = CommTriple::new(4, [1, 1, 1]).unwrap();
        assert!(charming_check(4, 1, &g.triple()));
    }

    #[test]
    fn enumerate_examples() {
        let s4: Vec<(i64, i64)> = shadows(4).iter().map(|s| (s.m(), s.k())).collect();
        assert_eq!(s4, vec![(0, 0), (1, 1), (2, 1), (3, 0)]);
        assert_eq!(shadows(6).len(), 12);
        assert_eq!(shadows(8).len(), 16);
        // K^(3) = K^(6)
        assert_eq!(shadows(3), shadows(6));
    }

    #[test]
    fn brute_equals_closed_small() {
        for n in [3, 4, 5, 6, 8] {
            assert_eq!(enumerate_brute(n, DEFAULT_BOUND).unwrap(), shadows(n), "n={n}");
        }
    }

    #[test]
    fn compose_examples() {
        let id = Shadow::identity(4).unwrap();
        let s = Shadow::new(4, 1, 1).unwrap();
        assert_eq!(compose(&id, &s).unwrap(), s);
        assert_eq!(compose(&s, &s).unwrap(), id);
        let c = Shadow::new(4, 3, 0).unwrap();
        assert_eq!(compose(&c, &c).unwrap(), id);
    }

    #[test]
    fn inverse_examples() {
        let id = Shadow::identity(6).unwrap();
        assert_eq!(inverse(&id), id);
        let c = Shadow::new(4, 3, 0).unwrap();
        assert_eq!(inverse(&c), c);
        let s = Shadow::new(6, 2, 1).unwrap();
        assert_eq!(inverse(&s), Shadow::new(6, 2, 1).unwrap());
        for n in [4, 6, 8] {
            for s in shadows(n) {
                assert_eq!(compose(&s, &inverse(&s)).unwrap(), Shadow::identity(n).unwrap());
            }
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(Shadow::identity(6).unwrap().chi_2n(), 1);
        let s = Shadow::new(4, 3, 0).unwrap();
        assert_eq!(s.chi_vir_n(), 3);
        assert_eq!(s.chi_2n(), 7);
        let s = Shadow::new(6, 2, 0).unwrap();
        assert_eq!(s.chi_2n(), 5);
    }

    #[test]
    fn chi_is_homomorphism() {
        for n in [4, 6, 8] {
            for a in shadows(n) {
                for b in shadows(n) {
                    let c = compose(&a, &b).unwrap();
                    assert_eq!(c.chi_2n(), (a.chi_2n() * b.chi_2n()).rem_euclid(2 * n as i64));
                }
            }
        }
    }

    #[test]
    fn isolated_witness_small() {
        for n in [4, 6, 8] {
            for s in shadows(n) {
                assert!(is_isolated_witness(&s), "n={n} s={s:?}");
            }
        }
    }

    #[test]
    fn json_record() {
        let s = Shadow::new(6, 2, 1).unwrap();
        let v = s.to_json();
        assert_eq!(v["n"], 6);
        assert_eq!(v["u"], 5);
        // word is the expanded representative (z spelled out in x, y)
        let w: Word = v["word"].as_str().unwrap().parse().unwrap();
        assert_eq!(psi_eval(6, &w), psi_eval(6, &s.rep_word()));
    }
}
