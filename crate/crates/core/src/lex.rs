//! Element arithmetic in the infinite MV-chain `Γ(Z ⊗lex Z, (n, 0))`.
//!
//! Elements are pairs `(a, r)` ordered lexicographically, between `(0, 0)`
//! and `(n, 0)`. Only element-level operations are offered; the algebra is
//! infinite, so none of the filter or structure analyses apply.

use std::fmt;

use thiserror::Error;

use crate::terms::Interpretation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexError {
    #[error("({a},{r}) is not an element of the chain with n = {n}")]
    InvalidElement { n: i64, a: i64, r: i64 },
    #[error("ambient n must be at least 1, got {0}")]
    InvalidAmbient(i64),
}

/// Field order gives the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexElement {
    pub a: i64,
    pub r: i64,
}

impl LexElement {
    pub const fn new(a: i64, r: i64) -> Self {
        LexElement { a, r }
    }

    pub fn is_valid(self, n: i64) -> bool {
        (0..=n).contains(&self.a) && (self.a != 0 || self.r >= 0) && (self.a != n || self.r <= 0)
    }
}

impl fmt::Display for LexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.r)
    }
}

/// The chain for a fixed ambient `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexChain {
    n: i64,
}

impl LexChain {
    pub fn new(n: i64) -> Result<Self, LexError> {
        if n < 1 {
            return Err(LexError::InvalidAmbient(n));
        }
        Ok(LexChain { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn check(&self, p: LexElement) -> Result<LexElement, LexError> {
        if p.is_valid(self.n) {
            Ok(p)
        } else {
            Err(LexError::InvalidElement {
                n: self.n,
                a: p.a,
                r: p.r,
            })
        }
    }
}

impl Interpretation for LexChain {
    type Value = LexElement;

    fn top(&self) -> LexElement {
        LexElement::new(self.n, 0)
    }

    fn bot(&self) -> LexElement {
        LexElement::new(0, 0)
    }

    fn mult(&self, p: LexElement, q: LexElement) -> LexElement {
        LexElement::new(p.a + q.a - self.n, p.r + q.r).max(self.bot())
    }

    fn arrow(&self, p: LexElement, q: LexElement) -> LexElement {
        LexElement::new(self.n - p.a + q.a, q.r - p.r).min(self.top())
    }

    fn meet(&self, p: LexElement, q: LexElement) -> LexElement {
        p.min(q)
    }

    fn join(&self, p: LexElement, q: LexElement) -> LexElement {
        p.max(q)
    }

    fn neg(&self, p: LexElement) -> LexElement {
        LexElement::new(self.n - p.a, -p.r)
    }
}

fn chain(n: i64, ps: &[LexElement]) -> Result<LexChain, LexError> {
    let c = LexChain::new(n)?;
    for &p in ps {
        c.check(p)?;
    }
    Ok(c)
}

pub fn lex_mult(n: i64, p: LexElement, q: LexElement) -> Result<LexElement, LexError> {
    Ok(chain(n, &[p, q])?.mult(p, q))
}

pub fn lex_arrow(n: i64, p: LexElement, q: LexElement) -> Result<LexElement, LexError> {
    Ok(chain(n, &[p, q])?.arrow(p, q))
}

pub fn lex_neg(n: i64, p: LexElement) -> Result<LexElement, LexError> {
    Ok(chain(n, &[p])?.neg(p))
}

pub fn lex_power(n: i64, p: LexElement, k: u32) -> Result<LexElement, LexError> {
    Ok(chain(n, &[p])?.power(p, k))
}

pub fn lex_multiple(n: i64, k: u32, p: LexElement) -> Result<LexElement, LexError> {
    Ok(chain(n, &[p])?.multiple(k, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(a: i64, r: i64) -> LexElement {
        LexElement::new(a, r)
    }

    #[test]
    fn witness_for_n_2() {
        let sq = lex_power(2, p(1, 1), 2).unwrap();
        assert_eq!(sq, p(0, 2));
        assert_eq!(lex_multiple(2, 2, sq).unwrap(), p(0, 4));
    }

    #[test]
    fn product_example() {
        assert_eq!(lex_mult(3, p(2, 1), p(2, -1)).unwrap(), p(1, 0));
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            lex_neg(2, p(0, -1)),
            Err(LexError::InvalidElement { n: 2, a: 0, r: -1 })
        );
        assert!(lex_mult(2, p(2, 1), p(1, 0)).is_err());
        assert!(lex_mult(2, p(3, 0), p(1, 0)).is_err());
        assert_eq!(lex_neg(0, p(0, 0)), Err(LexError::InvalidAmbient(0)));
    }

    fn arb_elem() -> impl Strategy<Value = (i64, LexElement)> {
        (1i64..6).prop_flat_map(|n| {
            (Just(n), 0..=n, -50i64..50).prop_map(|(n, a, r)| {
                let r = if a == 0 { r.abs() } else if a == n { -r.abs() } else { r };
                (n, LexElement::new(a, r))
            })
        })
    }

    proptest! {
        #[test]
        fn closed_and_involutive((n, x) in arb_elem(), k in 0u32..6) {
            let c = LexChain::new(n).unwrap();
            prop_assert!(c.neg(x).is_valid(n));
            prop_assert_eq!(c.neg(c.neg(x)), x);
            prop_assert!(c.power(x, k).is_valid(n));
            prop_assert!(c.multiple(k, x).is_valid(n));
            prop_assert_eq!(c.arrow(x, x), c.top());
        }

        #[test]
        fn residuation((n, x) in arb_elem(), a in 0i64..6, r in -5i64..5, b in 0i64..6, s in -5i64..5) {
            let c = LexChain::new(n).unwrap();
            let y = LexElement::new(a.min(n), r);
            let z = LexElement::new(b.min(n), s);
            prop_assume!(y.is_valid(n) && z.is_valid(n));
            prop_assert_eq!(c.mult(x, y) <= z, x <= c.arrow(y, z));
        }
    }
}
