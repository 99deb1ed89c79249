//! Constructive witnesses for the two coset conditions
//! `psi(f) = psi(theta(g)^-1 g)` and `psi(f x^m) = psi(tau(h)^-1 h)` (or with
//! an extra `xy` inserted), plus a brute-force solvability tester that works
//! directly in `G_n` and does not trust the constructions.

use crate::dihedral::{bfs_closure, gn_tau, gn_theta, psi_eval, CommTriple, DihTriple};
use crate::error::ShadowError;
use crate::shadow::{kappa, Shadow};
use crate::word::{Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsCase {
    TrivialCoset,
    XyCoset,
}

impl std::fmt::Display for LsCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LsCase::TrivialCoset => write!(f, "trivial-coset"),
            LsCase::XyCoset => write!(f, "xy-coset"),
        }
    }
}

fn case_of(m: i64) -> Result<LsCase, ShadowError> {
    match m.rem_euclid(3) {
        0 => Ok(LsCase::TrivialCoset),
        2 => Ok(LsCase::XyCoset),
        _ => Err(ShadowError::NotDivisibleBy3(0)),
    }
}

/// Witness words `(g, h)` for the shadow's coset conditions; only defined for
/// `3 | n` (where `m = 1 mod 3` cannot occur).
pub fn ls_witness(s: &Shadow) -> Result<(Word, Word, LsCase), ShadowError> {
    let n = s.target();
    if n % 3 != 0 {
        return Err(ShadowError::NotDivisibleBy3(n));
    }
    let (m, k) = (s.m(), s.k());
    let case = case_of(m)?;
    let half_kappa = kappa(m) / 2;
    let g = if kappa(m).rem_euclid(4) == 0 {
        Word::gen_pow(Gen::X, 2 * k).concat(&Word::z().pow(half_kappa))
    } else {
        Word::gen_pow(Gen::Y, 2 * k + 2).concat(&Word::z().pow(half_kappa))
    };
    let h = match m.rem_euclid(6) {
        0 => Word::gen_pow(Gen::X, 2 * k + m).concat(&Word::gen_pow(Gen::Y, m)),
        2 => Word::gen_pow(Gen::X, 2 * k - 1).concat(&Word::z().pow(-m - 2)),
        3 => Word::gen_pow(Gen::X, -2 * k - m + 1).concat(&Word::gen_pow(Gen::Y, -m)),
        5 => Word::gen_pow(Gen::X, -2 * k).concat(&Word::z().pow(-m)),
        _ => unreachable!("m = 1 mod 3 rejected above"),
    };
    Ok((g, h, case))
}

/// Checks the two conditions through `psi_n`, independently of how `g`, `h`
/// were produced.
pub fn ls_verify(s: &Shadow, g: &Word, h: &Word) -> Result<bool, ShadowError> {
    let n = s.target();
    if n % 3 != 0 {
        return Err(ShadowError::NotDivisibleBy3(n));
    }
    let case = case_of(s.m())?;
    let f = s.rep_word();
    let first = psi_eval(n, &f) == psi_eval(n, &g.apply_theta().invert().concat(g));
    let lhs = psi_eval(n, &f.concat(&Word::gen_pow(Gen::X, s.m())));
    let tau_h_inv = h.apply_tau().invert();
    let rhs = match case {
        LsCase::TrivialCoset => tau_h_inv.concat(h),
        LsCase::XyCoset => tau_h_inv.concat(&Word::x()).concat(&Word::y()).concat(h),
    };
    Ok(first && lhs == psi_eval(n, &rhs))
}

/// Solvability of the two equations for the datum `(m, g)` by exhaustive
/// search over `G_n`. Returns true iff both equations have a solution.
pub fn ls_exists_brute(n: u32, m: i64, g: &CommTriple) -> Result<bool, ShadowError> {
    if n % 3 != 0 {
        return Err(ShadowError::NotDivisibleBy3(n));
    }
    let f_bar: DihTriple = g.triple();
    let gn: Vec<DihTriple> = bfs_closure(n, &[DihTriple::x_bar(n), DihTriple::y_bar(n)])
        .into_iter()
        .collect();
    let first = gn
        .iter()
        .any(|c| gn_theta(c).expect("closure stays in G_n").inv().mul(c) == f_bar);
    let target = f_bar.mul(&DihTriple::x_bar(n).pow(m));
    let xy = DihTriple::x_bar(n).mul(&DihTriple::y_bar(n));
    let want_xy = m.rem_euclid(3) == 2;
    let second = gn.iter().any(|c| {
        let t = gn_tau(c).expect("closure stays in G_n").inv();
        let t = if want_xy { t.mul(&xy) } else { t };
        t.mul(c) == target
    });
    Ok(first && second)
}
