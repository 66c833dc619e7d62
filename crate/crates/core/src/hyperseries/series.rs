use crate::error::{Error, Result};
use crate::scalar::Field;

/// Where a truncated series may be evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validity {
    Entire,
    /// Only `|x| < 1` (the `t = s + 1` case).
    UnitDisk,
}

/// Coefficients `c_0..c_M` of a power series in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<F: Field> {
    coeffs: Vec<F>,
    label: String,
    tail_note: Option<String>,
    validity: Validity,
}

impl<F: Field> TruncatedSeries<F> {
    /// Panics on an empty coefficient list; every series has `c_0`.
    pub fn new(coeffs: Vec<F>, label: impl Into<String>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries {
            coeffs,
            label: label.into(),
            tail_note: None,
            validity: Validity::Entire,
        }
    }

    pub fn zeros(order: usize, like: &F, label: impl Into<String>) -> Self {
        Self::new(vec![like.zero(); order + 1], label)
    }

    /// `1 + 0 x + ...`, the unit of the Cauchy product.
    pub fn one(order: usize, like: &F) -> Self {
        let mut s = Self::zeros(order, like, "1");
        s.coeffs[0] = like.one();
        s
    }

    pub fn with_tail_note(mut self, note: impl Into<String>) -> Self {
        self.tail_note = Some(note.into());
        self
    }

    pub fn with_validity(mut self, validity: Validity) -> Self {
        self.validity = validity;
        self
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &F {
        &self.coeffs[n]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn tail_note(&self) -> Option<&str> {
        self.tail_note.as_deref()
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    pub fn is_identically_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    fn combined_validity(&self, other: &Self) -> Validity {
        if self.validity == Validity::UnitDisk || other.validity == Validity::UnitDisk {
            Validity::UnitDisk
        } else {
            Validity::Entire
        }
    }

    fn zip_with(&self, other: &Self, label: String, f: impl Fn(&F, &F) -> F) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        let mut s = Self::new(coeffs, label).with_validity(self.combined_validity(other));
        s.tail_note = self.tail_note.clone().or_else(|| other.tail_note.clone());
        s
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, format!("({}) + ({})", self.label, other.label), |a, b| {
            a.clone() + b
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, format!("({}) - ({})", self.label, other.label), |a, b| {
            a.clone() - b
        })
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = c.clone() * k;
        }
        s
    }

    /// `(AB)_m = sum_{k<=m} A_k B_{m-k}`, truncated to the smaller order.
    pub fn cauchy_product(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|m| {
                let mut acc = self.coeffs[0].zero();
                for k in 0..=m {
                    acc = acc + &(self.coeffs[k].clone() * &other.coeffs[m - k]);
                }
                acc
            })
            .collect();
        let label = format!("({}) * ({})", self.label, other.label);
        let mut s = Self::new(coeffs, label).with_validity(self.combined_validity(other));
        s.tail_note = self.tail_note.clone().or_else(|| other.tail_note.clone());
        s
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: &F) -> Result<F> {
        if self.validity == Validity::UnitDisk && x.abs() >= x.one() {
            return Err(Error::Divergent(format!(
                "{} converges only for |x| < 1, got x = {x}",
                self.label
            )));
        }
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(order.min(self.order()) + 1);
        s
    }
}
