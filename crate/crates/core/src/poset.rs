//! Order structure of the dihedral poset `{K^(n)}` and the reduction
//! homomorphisms between shadow groups.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::ShadowError;
use crate::shadow::{enumerate_closed, Shadow};

/// `K^(n) = K^(2n)` for odd `n`; canonical moduli are even.
pub fn canonicalize(n: u32) -> Result<u32, ShadowError> {
    if n < 3 {
        return Err(ShadowError::Group(crate::error::GroupError::ModulusTooSmall(n)));
    }
    Ok(if n % 2 == 0 { n } else { 2 * n })
}

/// `K^(q)` contained in `K^(n)` iff `n | lcm(q, 2)`.
pub fn poset_leq(q: u32, n: u32) -> Result<bool, ShadowError> {
    if q < 3 || n < 3 {
        return Err(ShadowError::Group(crate::error::GroupError::ModulusTooSmall(q.min(n))));
    }
    Ok(q.lcm(&2) % n == 0)
}

/// Reduction `GT(K^(q)) -> GT(K^(n))`: in canonical coordinates,
/// `(m, k) -> (m mod n, k mod n/2)`.
pub fn reduce_shadow(s: &Shadow, n: u32) -> Result<Shadow, ShadowError> {
    let q = s.target();
    let n = canonicalize(n)?;
    if !poset_leq(q, n)? {
        return Err(ShadowError::NotComparable { q, n });
    }
    Shadow::new(n, s.m(), s.k())
}

/// Fiber sizes of the reduction `GT(K^(q)) -> GT(K^(n))`, keyed by target
/// shadow. Surjectivity means every fiber is nonempty.
pub fn fiber_report(q: u32, n: u32) -> Result<BTreeMap<Shadow, usize>, ShadowError> {
    let qc = canonicalize(q)?;
    let nc = canonicalize(n)?;
    if !poset_leq(qc, nc)? {
        return Err(ShadowError::NotComparable { q: qc, n: nc });
    }
    let mut fibers: BTreeMap<Shadow, usize> = BTreeMap::new();
    for t in enumerate_closed(nc)? {
        fibers.insert(t, 0);
    }
    for s in enumerate_closed(qc)? {
        let t = reduce_shadow(&s, nc)?;
        *fibers.get_mut(&t).expect("reduction lands in the target group") += 1;
    }
    Ok(fibers)
}
