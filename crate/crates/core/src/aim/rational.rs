//! Rational functions N(s) / (s^p (1−s)^q) with a dense polynomial numerator.

use num_traits::{FromPrimitive, Num};

#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn<T> {
    numer: Vec<T>,
    p: u32,
    q: u32,
}

impl<T: Clone + Num + FromPrimitive> RationalFn<T> {
    /// Coefficients in ascending powers of s. Trailing zeros are trimmed.
    pub fn new(numer: Vec<T>, p: u32, q: u32) -> Self {
        let mut f = Self { numer, p, q };
        f.trim();
        f
    }

    pub fn zero(p: u32, q: u32) -> Self {
        Self { numer: Vec::new(), p, q }
    }

    fn trim(&mut self) {
        while self.numer.last().is_some_and(|c| c.is_zero()) {
            self.numer.pop();
        }
    }

    pub fn numer(&self) -> &[T] {
        &self.numer
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    /// Degree of the numerator; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.numer.len().checked_sub(1)
    }

    pub fn eval_numer(&self, s: &T) -> T {
        self.numer
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * s.clone() + c.clone())
    }

    pub fn eval(&self, s: &T) -> T {
        let one_minus = T::one() - s.clone();
        let mut den = T::one();
        for _ in 0..self.p {
            den = den * s.clone();
        }
        for _ in 0..self.q {
            den = den * one_minus.clone();
        }
        self.eval_numer(s) / den
    }

    /// Same function written over s^{p+dp} (1−s)^{q+dq}.
    pub fn raised(&self, dp: u32, dq: u32) -> Self {
        let mut numer = self.numer.clone();
        if !numer.is_empty() {
            for _ in 0..dp {
                numer.insert(0, T::zero());
            }
            for _ in 0..dq {
                numer = mul_one_minus_s(&numer);
            }
        }
        Self::new(numer, self.p + dp, self.q + dq)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let p = self.p.max(other.p);
        let q = self.q.max(other.q);
        (
            self.raised(p - self.p, q - self.q),
            other.raised(p - other.p, q - other.q),
        )
    }

    /// Removes factors of s and (1 − s) shared by numerator and denominator.
    pub fn cancel_common_factors(&self) -> Self {
        let mut numer = self.numer.clone();
        let (mut p, mut q) = (self.p, self.q);
        if numer.is_empty() {
            return self.clone();
        }
        while p > 0 && numer[0].is_zero() {
            numer.remove(0);
            p -= 1;
        }
        while q > 0 {
            match div_one_minus_s(&numer) {
                Some(quotient) => {
                    numer = quotient;
                    q -= 1;
                }
                None => break,
            }
        }
        Self::new(numer, p, q)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let len = a.numer.len().max(b.numer.len());
        let numer = (0..len)
            .map(|i| {
                let x = a.numer.get(i).cloned().unwrap_or_else(T::zero);
                let y = b.numer.get(i).cloned().unwrap_or_else(T::zero);
                x + y
            })
            .collect();
        Self::new(numer, a.p, a.q)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&(T::zero() - T::one())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p + other.p;
        let q = self.q + other.q;
        if self.is_zero() || other.is_zero() {
            return Self::zero(p, q);
        }
        let mut numer = vec![T::zero(); self.numer.len() + other.numer.len() - 1];
        for (i, a) in self.numer.iter().enumerate() {
            for (j, b) in other.numer.iter().enumerate() {
                numer[i + j] = numer[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(numer, p, q)
    }

    pub fn scaled(&self, factor: &T) -> Self {
        Self::new(
            self.numer.iter().map(|c| c.clone() * factor.clone()).collect(),
            self.p,
            self.q,
        )
    }

    /// d/ds [N / (s^p (1−s)^q)] = [N′ s(1−s) + N(−p + (p+q)s)] / (s^{p+1} (1−s)^{q+1}).
    pub fn derivative(&self) -> Self {
        let (p, q) = (self.p, self.q);
        if self.is_zero() {
            return Self::zero(p + 1, q + 1);
        }
        let n = &self.numer;
        let mut out = vec![T::zero(); n.len() + 1];
        // N′ s (1 − s)
        for (i, c) in n.iter().enumerate().skip(1) {
            let d = c.clone() * from_u64::<T>(i as u64);
            out[i] = out[i].clone() + d.clone();
            out[i + 1] = out[i + 1].clone() - d;
        }
        // N (−p + (p+q) s)
        let fp = from_u64::<T>(u64::from(p));
        let fpq = from_u64::<T>(u64::from(p) + u64::from(q));
        for (i, c) in n.iter().enumerate() {
            out[i] = out[i].clone() - c.clone() * fp.clone();
            out[i + 1] = out[i + 1].clone() + c.clone() * fpq.clone();
        }
        Self::new(out, p + 1, q + 1)
    }
}

impl RationalFn<f64> {
    pub fn max_abs_coefficient(&self) -> f64 {
        self.numer.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Σ |a_i| s^i: magnitude scale of the numerator at s ∈ (0, 1).
    pub fn eval_numer_abs(&self, s: f64) -> f64 {
        self.numer.iter().rev().fold(0.0, |acc, c| acc * s + c.abs())
    }

    pub fn is_finite(&self) -> bool {
        self.numer.iter().all(|c| c.is_finite())
    }
}

fn from_u64<T: FromPrimitive>(v: u64) -> T {
    T::from_u64(v).expect("small integer is representable")
}

fn mul_one_minus_s<T: Clone + Num>(numer: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); numer.len() + 1];
    for (i, c) in numer.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
        out[i + 1] = out[i + 1].clone() - c.clone();
    }
    out
}

/// N / (1 − s) when the division is exact.
fn div_one_minus_s<T: Clone + Num>(numer: &[T]) -> Option<Vec<T>> {
    if numer.len() < 2 {
        return None;
    }
    // N = (1 − s) Q  ⇔  q_i = Σ_{j≤i} a_j and the full sum vanishes
    let mut out = Vec::with_capacity(numer.len() - 1);
    let mut acc = T::zero();
    for c in &numer[..numer.len() - 1] {
        acc = acc + c.clone();
        out.push(acc.clone());
    }
    let total = acc + numer[numer.len() - 1].clone();
    total.is_zero().then_some(out)
}
