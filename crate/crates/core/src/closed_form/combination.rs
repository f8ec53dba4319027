use std::collections::BTreeMap;
use std::fmt;

use crate::exact_arith::Rational;

/// A finite sum `Σ_s c_s · ζ(s) / π^(s-1)` with exact rational coefficients.
///
/// Keys are odd integers `s >= 3`; zero coefficients are never stored, so
/// structural equality is value equality.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ZetaCombination {
    terms: BTreeMap<u32, Rational>,
}

impl ZetaCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c · ζ(s)/π^(s-1)`, dropping the key if the total cancels.
    ///
    /// Panics if `s` is even or below 3.
    pub fn add_term(&mut self, s: u32, c: Rational) {
        assert!(s >= 3 && s % 2 == 1, "zeta argument must be odd and >= 3, got {s}");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn coefficient(&self, s: u32) -> Rational {
        self.terms.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending order of `s`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(u32, Rational)> for ZetaCombination {
    fn from_iter<I: IntoIterator<Item = (u32, Rational)>>(iter: I) -> Self {
        let mut zc = ZetaCombination::new();
        for (s, c) in iter {
            zc.add_term(s, c);
        }
        zc
    }
}

impl fmt::Debug for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(s, c)| (s, c.to_string()))).finish()
    }
}

/// Plain-text rendering, e.g. `-7·ζ(3)/π^2 + 186·ζ(5)/π^4`.
impl fmt::Display for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if mag.is_integer() {
                write!(f, "{mag}·ζ({s})/π^{}", s - 1)?;
            } else {
                write!(f, "({mag})·ζ({s})/π^{}", s - 1)?;
            }
        }
        Ok(())
    }
}
