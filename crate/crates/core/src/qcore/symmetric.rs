use crate::error::{Error, Result};
use crate::scalar::Field;

/// A vector of parameter exponents such as `a_1..a_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamVector<F: Field> {
    entries: Vec<F>,
    nonneg_required: bool,
}

impl<F: Field> ParamVector<F> {
    pub fn new(entries: Vec<F>) -> Self {
        ParamVector {
            entries,
            nonneg_required: false,
        }
    }

    /// A vector whose entries must all be `>= 0`.
    pub fn nonneg(entries: Vec<F>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| e.signum() < 0) {
            return Err(Error::Hypothesis(format!("parameter {bad} must be nonnegative")));
        }
        Ok(ParamVector {
            entries,
            nonneg_required: true,
        })
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nonneg_required(&self) -> bool {
        self.nonneg_required
    }

    /// Every entry shifted by `mu`.
    pub fn shifted(&self, mu: &F) -> Self {
        ParamVector {
            entries: self.entries.iter().map(|e| e.clone() + mu).collect(),
            nonneg_required: self.nonneg_required,
        }
    }
}

/// `e_0..e_r` of the entries, by the one-pass recurrence
/// `e_k <- e_k + c_j e_{k-1}`.
pub fn elementary_symmetric<F: Field>(c: &[F], like: &F) -> Vec<F> {
    let mut e = vec![like.zero(); c.len() + 1];
    e[0] = like.one();
    for (j, cj) in c.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let add = e[k - 1].clone() * cj;
            e[k] = e[k].clone() + &add;
        }
    }
    e
}

/// Weak supermajorization `d <_W c`: with both vectors sorted ascending,
/// every partial sum of `c` is at most the matching partial sum of `d`.
pub fn weak_supermajorizes<F: Field>(d: &[F], c: &[F]) -> Result<bool> {
    if d.len() != c.len() {
        return Err(Error::DimensionMismatch(format!(
            "weak supermajorization needs equal sizes, got {} and {}",
            d.len(),
            c.len()
        )));
    }
    if let Some(bad) = d.iter().chain(c).find(|x| x.signum() <= 0) {
        return Err(Error::Domain(format!("majorization entries must be positive, got {bad}")));
    }
    let sorted = |v: &[F]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| a.partial_cmp(b).expect("ordered field"));
        v
    };
    let (d, c) = (sorted(d), sorted(c));
    let mut sd = d[0].zero();
    let mut sc = d[0].zero();
    for (di, ci) in d.iter().zip(&c) {
        sd = sd + di;
        sc = sc + ci;
        if sc > sd {
            return Ok(false);
        }
    }
    Ok(true)
}
