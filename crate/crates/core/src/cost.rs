//! Costs extended with a symbolic "arbitrarily large" constant `M`.
//!
//! Sentinel weights of the form `2^e * M` are kept as exponents, so sums of
//! sentinels compare exactly no matter how large `e` gets.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign};

use smallvec::SmallVec;

use crate::Scalar;

/// Nonnegative integer coefficient of `M`, stored in sparse binary form:
/// the set of exponents `e` whose bit `2^e` is set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BigM {
    // ascending, distinct
    bits: SmallVec<[u32; 2]>,
}

impl BigM {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pow2(exp: u32) -> Self {
        let mut bits = SmallVec::new();
        bits.push(exp);
        Self { bits }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    /// Set bits, ascending.
    pub fn exponents(&self) -> &[u32] {
        &self.bits
    }

    /// Adds `2^exp` with carry propagation.
    pub fn add_pow2(&mut self, mut exp: u32) {
        loop {
            match self.bits.binary_search(&exp) {
                Ok(pos) => {
                    self.bits.remove(pos);
                    exp += 1;
                }
                Err(pos) => {
                    self.bits.insert(pos, exp);
                    return;
                }
            }
        }
    }

    /// Lossy conversion, for display only.
    pub fn approx_f64(&self) -> f64 {
        self.bits.iter().map(|&e| 2f64.powi(e as i32)).sum()
    }
}

impl Ord for BigM {
    fn cmp(&self, other: &Self) -> Ordering {
        // compare highest bits first; with distinct bits this is the
        // numeric order
        let mut a = self.bits.iter().rev();
        let mut b = other.bits.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for BigM {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&BigM> for BigM {
    fn add_assign(&mut self, rhs: &BigM) {
        if self.is_zero() {
            self.bits.clone_from(&rhs.bits);
            return;
        }
        for &e in &rhs.bits {
            self.add_pow2(e);
        }
    }
}

/// `mcoef * M + finite`, ordered lexicographically.
#[derive(Debug, Clone, Default)]
pub struct ExtendedCost<T> {
    pub mcoef: BigM,
    pub finite: T,
}

impl<T: Scalar> ExtendedCost<T> {
    #[inline]
    pub fn finite(value: T) -> Self {
        Self {
            mcoef: BigM::zero(),
            finite: value,
        }
    }

    /// `2^exp * M`.
    #[inline]
    pub fn sentinel(exp: u32) -> Self {
        Self {
            mcoef: BigM::pow2(exp),
            finite: T::zero(),
        }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.mcoef.is_zero()
    }

    /// The finite value, if there is no `M` component.
    pub fn as_finite(&self) -> Option<T> {
        self.is_finite().then_some(self.finite)
    }
}

impl<T: Scalar> PartialEq for ExtendedCost<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for ExtendedCost<T> {}

impl<T: Scalar> Ord for ExtendedCost<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mcoef
            .cmp(&other.mcoef)
            .then_with(|| self.finite.total_cmp(&other.finite))
    }
}

impl<T: Scalar> PartialOrd for ExtendedCost<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> AddAssign<&ExtendedCost<T>> for ExtendedCost<T> {
    #[inline]
    fn add_assign(&mut self, rhs: &ExtendedCost<T>) {
        if !rhs.mcoef.is_zero() {
            self.mcoef += &rhs.mcoef;
        }
        self.finite = self.finite + rhs.finite;
    }
}

impl<T: Scalar> Add<&ExtendedCost<T>> for ExtendedCost<T> {
    type Output = ExtendedCost<T>;

    #[inline]
    fn add(mut self, rhs: &ExtendedCost<T>) -> ExtendedCost<T> {
        self += rhs;
        self
    }
}

impl<T: Scalar> Add for ExtendedCost<T> {
    type Output = ExtendedCost<T>;

    #[inline]
    fn add(self, rhs: ExtendedCost<T>) -> ExtendedCost<T> {
        self + &rhs
    }
}
