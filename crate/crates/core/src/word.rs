//! Reduced words in the free group on two generators `x`, `y`.
//!
//! Words are stored run-length-encoded as `(generator, exponent)` pairs with
//! adjacent entries carrying distinct generators, so cancellation during
//! concatenation only ever happens at the seam. The derived letter
//! `z := y^-1 x^-1` is never stored; it is expanded on input.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseWordError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    X,
    Y,
}

/// A fully reduced word. The empty sequence is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("word exponent overflow")
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn gen_pow(g: Gen, e: i64) -> Self {
        let mut w = Word::empty();
        w.push(g, e);
        w
    }

    pub fn x() -> Self {
        Word::gen_pow(Gen::X, 1)
    }

    pub fn y() -> Self {
        Word::gen_pow(Gen::Y, 1)
    }

    /// `z = y^-1 x^-1`.
    pub fn z() -> Self {
        let mut w = Word::gen_pow(Gen::Y, -1);
        w.push(Gen::X, -1);
        w
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    /// Appends `g^e`, cancelling at the seam.
    pub fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(&mut (lg, ref mut le)) if lg == g => {
                *le = add_exp(*le, e);
                if *le == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    /// Reduced product `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out
    }

    pub fn invert(&self) -> Word {
        let mut out = Word::empty();
        for &(g, e) in self.letters.iter().rev() {
            out.push(g, -e);
        }
        out
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Image under the substitution `x -> wx`, `y -> wy`.
    fn substitute(&self, wx: &Word, wy: &Word) -> Word {
        let mut out = Word::empty();
        for &(g, e) in &self.letters {
            let img = match g {
                Gen::X => wx,
                Gen::Y => wy,
            };
            // (w)^e letter by letter; e is desk-scale here.
            out = out.concat(&img.pow(e));
        }
        out
    }

    /// The automorphism `theta`: x -> y, y -> x.
    pub fn apply_theta(&self) -> Word {
        let mut out = Word::empty();
        for &(g, e) in &self.letters {
            let g2 = match g {
                Gen::X => Gen::Y,
                Gen::Y => Gen::X,
            };
            out.push(g2, e);
        }
        out
    }

    /// The automorphism `tau`: x -> y, y -> z = y^-1 x^-1.
    pub fn apply_tau(&self) -> Word {
        self.substitute(&Word::y(), &Word::z())
    }

    /// The endomorphism `E_{m,f}`: x -> x^{2m+1}, y -> f^-1 y^{2m+1} f.
    pub fn endo_e(&self, m: i64, f: &Word) -> Word {
        let u = add_exp(m.checked_mul(2).expect("word exponent overflow"), 1);
        let finv = f.invert();
        let mut out = Word::empty();
        for &(g, e) in &self.letters {
            let ue = u.checked_mul(e).expect("word exponent overflow");
            match g {
                Gen::X => out.push(Gen::X, ue),
                Gen::Y => {
                    out = out.concat(&finv);
                    out.push(Gen::Y, ue);
                    out = out.concat(f);
                }
            }
        }
        out
    }

    /// Exponent sums `(sum over x, sum over y)`; the image in Z^2.
    pub fn abelianize(&self) -> (i64, i64) {
        let mut sx = 0i64;
        let mut sy = 0i64;
        for &(g, e) in &self.letters {
            match g {
                Gen::X => sx = add_exp(sx, e),
                Gen::Y => sy = add_exp(sy, e),
            }
        }
        (sx, sy)
    }

    /// Commutator `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.invert()).concat(&b.invert())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(g, e) in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = match g {
                Gen::X => "x",
                Gen::Y => "y",
            };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut out = Word::empty();
        for tok in s.split('*') {
            let tok = tok.trim();
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| ParseWordError::BadExponent(tok.to_string()))?;
                    (n.trim(), e)
                }
                None => (tok, 1),
            };
            match name {
                "x" => out.push(Gen::X, exp),
                "y" => out.push(Gen::Y, exp),
                "z" => out = out.concat(&Word::z().pow(exp)),
                _ => return Err(ParseWordError::BadLetter(tok.to_string())),
            }
        }
        Ok(out)
    }
}
