//! Arithmetic in `D_n` and `D_n^3`, the evaluation homomorphism onto the
//! subgroup `G_n` generated by the images of `x` and `y`, and the commutator
//! subgroup of `G_n` with constructive witness words.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::error::GroupError;
use crate::word::{Gen, Word};

/// Element of the dihedral group `D_n`, written `r^rot s^flip` with the
/// relation `s r s^-1 = r^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihElt {
    n: u32,
    rot: i64,
    flip: bool,
}

impl DihElt {
    pub fn new(n: u32, rot: i64, flip: bool) -> Self {
        assert!(n >= 3, "dihedral modulus must be >= 3");
        DihElt { n, rot: rot.rem_euclid(n as i64), flip }
    }

    pub fn identity(n: u32) -> Self {
        DihElt::new(n, 0, false)
    }

    pub fn r(n: u32) -> Self {
        DihElt::new(n, 1, false)
    }

    pub fn s(n: u32) -> Self {
        DihElt::new(n, 0, true)
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn mul(&self, other: &DihElt) -> DihElt {
        assert_eq!(self.n, other.n, "modulus mismatch");
        let b = if self.flip { -other.rot } else { other.rot };
        DihElt::new(self.n, self.rot + b, self.flip ^ other.flip)
    }

    pub fn inv(&self) -> DihElt {
        if self.flip {
            *self // reflections are involutions
        } else {
            DihElt::new(self.n, -self.rot, false)
        }
    }

    pub fn pow(&self, e: i64) -> DihElt {
        if self.flip {
            if e.rem_euclid(2) == 0 { DihElt::identity(self.n) } else { *self }
        } else {
            DihElt::new(self.n, self.rot * (e % self.n as i64), false)
        }
    }
}

impl fmt::Display for DihElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.flip) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "s"),
            (a, false) => write!(f, "r^{a}"),
            (a, true) => write!(f, "r^{a} s"),
        }
    }
}

/// Element of `D_n^3`, componentwise group laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihTriple(pub [DihElt; 3]);

impl DihTriple {
    pub fn identity(n: u32) -> Self {
        DihTriple([DihElt::identity(n); 3])
    }

    pub fn modulus(&self) -> u32 {
        self.0[0].modulus()
    }

    pub fn mul(&self, other: &DihTriple) -> DihTriple {
        DihTriple([
            self.0[0].mul(&other.0[0]),
            self.0[1].mul(&other.0[1]),
            self.0[2].mul(&other.0[2]),
        ])
    }

    pub fn inv(&self) -> DihTriple {
        DihTriple([self.0[0].inv(), self.0[1].inv(), self.0[2].inv()])
    }

    pub fn pow(&self, e: i64) -> DihTriple {
        let base = if e < 0 { self.inv() } else { *self };
        let mut out = DihTriple::identity(self.modulus());
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `x-bar = (r, s, s)`.
    pub fn x_bar(n: u32) -> Self {
        DihTriple([DihElt::r(n), DihElt::s(n), DihElt::s(n)])
    }

    /// `y-bar = (rs, r, rs)`.
    pub fn y_bar(n: u32) -> Self {
        let rs = DihElt::new(n, 1, true);
        DihTriple([rs, DihElt::r(n), rs])
    }

    /// `z-bar = (r^2 s, r^-1 s, r)`.
    pub fn z_bar(n: u32) -> Self {
        DihTriple::y_bar(n).inv().mul(&DihTriple::x_bar(n).inv())
    }
}

impl fmt::Display for DihTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Homomorphic image of a word under `x -> (r,s,s)`, `y -> (rs,r,rs)`.
pub fn psi_eval(n: u32, w: &Word) -> DihTriple {
    let x = DihTriple::x_bar(n);
    let y = DihTriple::y_bar(n);
    let mut out = DihTriple::identity(n);
    for &(g, e) in w.letters() {
        let base = match g {
            Gen::X => x,
            Gen::Y => y,
        };
        out = out.mul(&base.pow(e));
    }
    out
}

/// `ord(r^2)` in `D_n`: `n` for odd `n`, `n/2` for even.
pub fn ord_r2(n: u32) -> u32 {
    if n % 2 == 0 { n / 2 } else { n }
}

/// `|G_n| = 4 n^3` for odd `n`, `4 (n/2)^3` for even `n`.
pub fn gn_order(n: u32) -> u64 {
    4 * (ord_r2(n) as u64).pow(3)
}

/// Coset representative of `G_n / J` where `J = <r^2>^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eps {
    One,
    X,
    Y,
    XY,
}

impl Eps {
    pub fn triple(self, n: u32) -> DihTriple {
        match self {
            Eps::One => DihTriple::identity(n),
            Eps::X => DihTriple::x_bar(n),
            Eps::Y => DihTriple::y_bar(n),
            Eps::XY => DihTriple::x_bar(n).mul(&DihTriple::y_bar(n)),
        }
    }

    fn from_flips(flips: [bool; 3]) -> Option<Eps> {
        match flips {
            [false, false, false] => Some(Eps::One),
            [false, true, true] => Some(Eps::X),
            [true, false, true] => Some(Eps::Y),
            [true, true, false] => Some(Eps::XY),
            _ => None,
        }
    }
}

/// Rotation triple `(r^{2 e_1}, r^{2 e_2}, r^{2 e_3})` in `J = <r^2>^3`,
/// exponents mod `ord(r^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CommJ {
    pub n: u32,
    pub e: [i64; 3],
}

impl CommJ {
    pub fn new(n: u32, e: [i64; 3]) -> Self {
        let q = ord_r2(n) as i64;
        CommJ { n, e: [e[0].rem_euclid(q), e[1].rem_euclid(q), e[2].rem_euclid(q)] }
    }

    pub fn triple(&self) -> DihTriple {
        DihTriple([
            DihElt::new(self.n, 2 * self.e[0], false),
            DihElt::new(self.n, 2 * self.e[1], false),
            DihElt::new(self.n, 2 * self.e[2], false),
        ])
    }
}

// Rotation `a` lies in `<r^2>` iff it is even (n even) or always (n odd);
// returns the exponent e with 2e = a mod n, reduced mod ord(r^2).
fn rot_half(n: u32, a: i64) -> Option<i64> {
    let q = ord_r2(n) as i64;
    if n % 2 == 0 {
        if a % 2 != 0 {
            return None;
        }
        Some((a / 2).rem_euclid(q))
    } else {
        let inv2 = (n as i64 + 1) / 2;
        Some((a * inv2).rem_euclid(q))
    }
}

/// Unique decomposition `t = j * eps` with `j` in `J` and `eps` one of the
/// four coset representatives, or NotMember.
pub fn gn_decompose(t: &DihTriple) -> Result<(CommJ, Eps), GroupError> {
    let n = t.modulus();
    let flips = [t.0[0].flip(), t.0[1].flip(), t.0[2].flip()];
    let eps = Eps::from_flips(flips).ok_or(GroupError::NotMember)?;
    let j = t.mul(&eps.triple(n).inv());
    let mut e = [0i64; 3];
    for i in 0..3 {
        debug_assert!(!j.0[i].flip());
        e[i] = rot_half(n, j.0[i].rot()).ok_or(GroupError::NotMember)?;
    }
    Ok((CommJ { n, e }, eps))
}

pub fn gn_membership(t: &DihTriple) -> bool {
    gn_decompose(t).is_ok()
}

/// Element of `[G_n, G_n]` as an exponent triple mod `ord(r^2)`; when
/// `4 | n` the exponents must share parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommTriple {
    n: u32,
    e: [i64; 3],
}

impl CommTriple {
    pub fn new(n: u32, e: [i64; 3]) -> Result<Self, GroupError> {
        if n < 3 {
            return Err(GroupError::ModulusTooSmall(n));
        }
        let q = ord_r2(n) as i64;
        let e = [e[0].rem_euclid(q), e[1].rem_euclid(q), e[2].rem_euclid(q)];
        if n % 4 == 0 && !(e[0] % 2 == e[1] % 2 && e[1] % 2 == e[2] % 2) {
            return Err(GroupError::BadParity);
        }
        Ok(CommTriple { n, e })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn exps(&self) -> [i64; 3] {
        self.e
    }

    pub fn triple(&self) -> DihTriple {
        CommJ { n: self.n, e: self.e }.triple()
    }
}

impl fmt::Display for CommTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]@{}", self.e[0], self.e[1], self.e[2], self.n)
    }
}

/// Membership test for `[G_n, G_n]`: all flips zero, all rotations in
/// `<r^2>`, and shared exponent parity exactly when `4 | n`.
pub fn comm_membership(t: &DihTriple) -> Result<CommTriple, GroupError> {
    let n = t.modulus();
    let mut e = [0i64; 3];
    for i in 0..3 {
        if t.0[i].flip() {
            return Err(GroupError::NotCommutator);
        }
        e[i] = rot_half(n, t.0[i].rot()).ok_or(GroupError::NotCommutator)?;
    }
    CommTriple::new(n, e).map_err(|_| GroupError::NotCommutator)
}

// Halves an exponent mod q = ord(r^2): exact division when the exponent is
// even, multiplication by the inverse of 2 when q is odd.
fn half_mod(e: i64, q: i64) -> i64 {
    let e = e.rem_euclid(q);
    if e % 2 == 0 {
        e / 2
    } else {
        debug_assert!(q % 2 == 1);
        (e * (q + 1) / 2).rem_euclid(q)
    }
}

// Building blocks of the commutator subgroup, as words:
//   w1(a) = [x^{2a}, y]    -> exponents (2a, 0, 0)
//   w2(b) = [x, y^{-2b}]   -> exponents (0, 2b, 0)
//   v(c)  = [x,y]^{-2c} w1(c) w2(-c) -> exponents (0, 0, 2c)
fn w1(a: i64) -> Word {
    Word::commutator(&Word::gen_pow(Gen::X, 2 * a), &Word::y())
}

fn w2(b: i64) -> Word {
    Word::commutator(&Word::x(), &Word::gen_pow(Gen::Y, -2 * b))
}

fn v(c: i64) -> Word {
    let xy = Word::commutator(&Word::x(), &Word::y());
    xy.pow(-2 * c).concat(&w1(c)).concat(&w2(-c))
}

/// Constructive witness: a word in `[F_2, F_2]` whose image under `psi_n`
/// is the given commutator triple.
pub fn comm_word(c: &CommTriple) -> Word {
    let n = c.n;
    let q = ord_r2(n) as i64;
    let e = c.e;
    let (head, rem) = if e[0].rem_euclid(2) == 1 {
        // odd parity: peel off [x,y] -> (1, -1, -1)
        let xy = Word::commutator(&Word::x(), &Word::y());
        (xy, [e[0] - 1, e[1] + 1, e[2] + 1])
    } else {
        (Word::empty(), e)
    };
    head.concat(&w1(half_mod(rem[0], q)))
        .concat(&w2(half_mod(rem[1], q)))
        .concat(&v(half_mod(rem[2], q)))
}

/// Induced action of `theta` on `G_n`: on the `J`-part,
/// `(e1, e2, e3) -> (e2, e1, -e3)`; on the coset representative, `x <-> y`.
pub fn gn_theta(t: &DihTriple) -> Result<DihTriple, GroupError> {
    let n = t.modulus();
    let (j, eps) = gn_decompose(t)?;
    let jt = CommJ::new(n, [j.e[1], j.e[0], -j.e[2]]).triple();
    let et = match eps {
        Eps::One => DihTriple::identity(n),
        Eps::X => DihTriple::y_bar(n),
        Eps::Y => DihTriple::x_bar(n),
        // theta(xy) = theta(x) theta(y) = y x
        Eps::XY => DihTriple::y_bar(n).mul(&DihTriple::x_bar(n)),
    };
    Ok(jt.mul(&et))
}

/// Induced action of `tau` on `G_n`: cyclic shift `(e3, e1, e2)` on the
/// `J`-part; `x -> y`, `y -> z` on the coset representative.
pub fn gn_tau(t: &DihTriple) -> Result<DihTriple, GroupError> {
    let n = t.modulus();
    let (j, eps) = gn_decompose(t)?;
    let jt = CommJ::new(n, [j.e[2], j.e[0], j.e[1]]).triple();
    let et = match eps {
        Eps::One => DihTriple::identity(n),
        Eps::X => DihTriple::y_bar(n),
        Eps::Y => DihTriple::z_bar(n),
        // tau(xy) = tau(x) tau(y) = y z
        Eps::XY => DihTriple::y_bar(n).mul(&DihTriple::z_bar(n)),
    };
    Ok(jt.mul(&et))
}

/// BFS closure of a generating set inside `D_n^3`, capped at `|D_n^3|`.
pub fn bfs_closure(n: u32, gens: &[DihTriple]) -> HashSet<DihTriple> {
    let cap = (2 * n as usize).pow(3);
    let mut seen: HashSet<DihTriple> = HashSet::new();
    let mut frontier = vec![DihTriple::identity(n)];
    seen.insert(DihTriple::identity(n));
    while let Some(t) = frontier.pop() {
        for g in gens {
            let next = t.mul(g);
            if seen.insert(next) {
                assert!(seen.len() <= cap, "closure exceeded |D_n^3|: modulus bug");
                frontier.push(next);
            }
        }
    }
    seen
}

/// Permutation of `Z/nZ`, stored as images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    fn from_fn(n: u32, f: impl Fn(i64) -> i64) -> Self {
        Perm((0..n as i64).map(|j| f(j).rem_euclid(n as i64) as usize).collect())
    }

    fn from_dih(d: &DihElt) -> Self {
        // r(j) = j + 1, s(j) = -j
        let rot = d.rot();
        let flip = d.flip();
        Perm::from_fn(d.modulus(), |j| if flip { -j + rot } else { j + rot })
    }

    /// `self` after `other`.
    fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    fn inv(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (j, &img) in self.0.iter().enumerate() {
            out[img] = j;
        }
        Perm(out)
    }

    fn conjugate(&self, sigma: &Perm) -> Perm {
        self.compose(sigma).compose(&self.inv())
    }
}

/// The permutation triple `(h_1, h_2, h_3)` conjugating `x-bar` to
/// `x-bar^{2m+1}` and `y-bar` to `g^-1 y-bar^{2m+1} g` inside `S_n^3`,
/// for the shadow datum `(m, k)` with `g = (r^{2k}, r^{-2k}, r^{kappa(m)})`.
pub fn lemma_witness(n: u32, m: i64, k: i64) -> Result<[Perm; 3], GroupError> {
    let nn = n as i64;
    let u = 2 * m + 1;
    if u.gcd(&nn) != 1 {
        return Err(GroupError::NotAUnit { m, n });
    }
    let b = Perm::from_fn(n, |j| u * j);
    let rot = Perm::from_dih(&DihElt::new(n, -2 * k - m, false));
    let s = Perm::from_dih(&DihElt::s(n));
    let h1 = rot.compose(&b);
    let h2 = b.clone();
    let h3 = if m % 2 == 0 { b.clone() } else { b.compose(&s) };
    let h = [h1, h2, h3];

    // verify both conjugation identities
    let kap = crate::shadow::kappa(m);
    let g = DihTriple([
        DihElt::new(n, 2 * k, false),
        DihElt::new(n, -2 * k, false),
        DihElt::new(n, kap, false),
    ]);
    let x = DihTriple::x_bar(n);
    let y = DihTriple::y_bar(n);
    let lhs_x = x.pow(u);
    let lhs_y = g.inv().mul(&y.pow(u)).mul(&g);
    for i in 0..3 {
        if h[i].conjugate(&Perm::from_dih(&x.0[i])) != Perm::from_dih(&lhs_x.0[i]) {
            return Err(GroupError::NotMember);
        }
        if h[i].conjugate(&Perm::from_dih(&y.0[i])) != Perm::from_dih(&lhs_y.0[i]) {
            return Err(GroupError::NotMember);
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn psi_generator_images() {
        let n = 6;
        assert_eq!(psi_eval(n, &Word::x()), DihTriple::x_bar(n));
        // z-bar = (r^2 s, r^-1 s, r)
        let z = psi_eval(n, &w("y^-1*x^-1"));
        assert_eq!(z, DihTriple::z_bar(n));
        assert_eq!(z.0[0], DihElt::new(n, 2, true));
        assert_eq!(z.0[1], DihElt::new(n, -1, true));
        assert_eq!(z.0[2], DihElt::new(n, 1, false));
        // x^2 = (r^2, 1, 1)
        let x2 = psi_eval(n, &w("x^2"));
        assert_eq!(x2.0[0], DihElt::new(n, 2, false));
        assert_eq!(x2.0[1], DihElt::identity(n));
    }

    #[test]
    fn psi_is_homomorphism() {
        for n in [3, 4, 5, 8] {
            for (a, b) in [("x*y", "y^-2*x"), ("x^3*y^-1", "y*x*y"), ("1", "x^-2")] {
                let (a, b) = (w(a), w(b));
                assert_eq!(
                    psi_eval(n, &a.concat(&b)),
                    psi_eval(n, &a).mul(&psi_eval(n, &b))
                );
            }
        }
    }

    #[test]
    fn gn_order_values() {
        assert_eq!(gn_order(3), 108);
        assert_eq!(gn_order(4), 32);
        assert_eq!(gn_order(6), 108);
    }

    #[test]
    fn decompose_examples() {
        let n = 4;
        let t = psi_eval(n, &w("x^2"));
        let (j, eps) = gn_decompose(&t).unwrap();
        assert_eq!(eps, Eps::One);
        assert_eq!(j.e, [1, 0, 0]); // rotations (r^2, 1, 1)

        let bad = DihTriple([DihElt::r(n), DihElt::identity(n), DihElt::identity(n)]);
        assert!(gn_decompose(&bad).is_err());

        let x = DihTriple::x_bar(7);
        let (j, eps) = gn_decompose(&x).unwrap();
        assert_eq!(eps, Eps::X);
        assert_eq!(j.e, [0, 0, 0]);
    }

    #[test]
    fn comm_membership_examples() {
        let r2 = |n: u32| DihElt::new(n, 2, false);
        let one = DihElt::identity;
        let t = DihTriple([r2(8), r2(8), r2(8)]);
        assert_eq!(comm_membership(&t).unwrap().exps(), [1, 1, 1]);
        let t = DihTriple([r2(8), one(8), one(8)]);
        assert_eq!(comm_membership(&t), Err(GroupError::NotCommutator));
        let t = DihTriple([r2(6), one(6), one(6)]);
        assert!(comm_membership(&t).is_ok());
    }

    #[test]
    fn comm_word_examples() {
        let c = CommTriple::new(8, [0, 0, 0]).unwrap();
        assert_eq!(comm_word(&c), Word::empty());

        let c = CommTriple::new(8, [1, -1, -1]).unwrap();
        assert_eq!(comm_word(&c), Word::commutator(&Word::x(), &Word::y()));

        let c = CommTriple::new(8, [2, 0, 0]).unwrap();
        assert_eq!(comm_word(&c), Word::commutator(&w("x^2"), &Word::y()));
    }

    #[test]
    fn comm_word_hits_target() {
        for n in [3, 4, 6, 8, 12] {
            let q = ord_r2(n) as i64;
            for e0 in 0..q {
                for e1 in 0..q {
                    for e2 in 0..q {
                        let Ok(c) = CommTriple::new(n, [e0, e1, e2]) else { continue };
                        let word = comm_word(&c);
                        assert_eq!(word.abelianize(), (0, 0));
                        assert_eq!(psi_eval(n, &word), c.triple(), "n={n} e={:?}", c.exps());
                    }
                }
            }
        }
    }

    #[test]
    fn theta_tau_nice_formulas() {
        let n = 8;
        let t = CommJ::new(n, [1, -1, 1]).triple();
        assert_eq!(gn_theta(&t).unwrap(), CommJ::new(n, [-1, 1, -1]).triple());
        let t = CommJ::new(n, [1, -1, 0]).triple();
        assert_eq!(gn_tau(&t).unwrap(), CommJ::new(n, [0, 1, -1]).triple());
        assert_eq!(gn_theta(&DihTriple::x_bar(n)).unwrap(), DihTriple::y_bar(n));
    }

    #[test]
    fn induced_maps_agree_with_word_maps() {
        for n in [3, 4, 6, 8, 9] {
            for s in ["x", "y", "x*y", "y^-1*x^-1", "x^2*y^3*x^-1", "y*x*y*x^-2"] {
                let word = w(s);
                let t = psi_eval(n, &word);
                assert_eq!(gn_theta(&t).unwrap(), psi_eval(n, &word.apply_theta()), "theta n={n} w={s}");
                assert_eq!(gn_tau(&t).unwrap(), psi_eval(n, &word.apply_tau()), "tau n={n} w={s}");
            }
        }
    }

    #[test]
    fn closure_matches_order() {
        for n in [3, 4, 5, 6] {
            let gens = [
                DihTriple::x_bar(n),
                DihTriple::y_bar(n),
                DihTriple::x_bar(n).inv(),
                DihTriple::y_bar(n).inv(),
            ];
            let set = bfs_closure(n, &gens);
            assert_eq!(set.len() as u64, gn_order(n), "n={n}");
            assert!(set.iter().all(gn_membership));
        }
    }

    #[test]
    fn lemma_witness_examples() {
        // identity shadow: b = id
        let h = lemma_witness(6, 0, 0).unwrap();
        assert_eq!(h[0], Perm((0..6).collect()));
        // n=4, (m=1, k=1): b = (j -> 3j mod 4)
        let h = lemma_witness(4, 1, 1).unwrap();
        assert_eq!(h[1], Perm(vec![0, 3, 2, 1]));
        // n=6, (m=2, k=0): h3 = b since m even
        let h = lemma_witness(6, 2, 0).unwrap();
        assert_eq!(h[2], h[1]);
        // gcd(2m+1, n) != 1 is rejected
        assert_eq!(lemma_witness(6, 1, 0), Err(GroupError::NotAUnit { m: 1, n: 6 }));
    }

    #[test]
    fn flip_parity_law() {
        let n = 5;
        let gens = [DihTriple::x_bar(n), DihTriple::y_bar(n), DihTriple::x_bar(n).inv(), DihTriple::y_bar(n).inv()];
        for t in bfs_closure(n, &gens) {
            let parity = t.0.iter().filter(|d| d.flip()).count();
            assert_eq!(parity % 2, 0);
        }
    }
}
