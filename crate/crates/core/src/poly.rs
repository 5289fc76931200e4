//! Sparse multivariate polynomials, just enough to expand a determinant of
//! a matrix whose entries are linear forms.

use std::collections::BTreeMap;

use crate::linalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly {
    field: Field,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(field);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// `Σ coeffs[i] · x_i`.
    pub fn linear(field: Field, coeffs: &[Scalar]) -> Poly {
        let mut p = Poly::zero(field);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u16; coeffs.len()];
            e[i] = 1;
            p.terms.insert(e, c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u16>, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, sign: &Scalar) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * sign);
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Determinant of `Σ_i x_i · mats[i]` as a polynomial in the `x_i`.
///
/// Laplace expansion along rows, memoised over column subsets.
pub(crate) fn generic_determinant(field: Field, n: usize, mats: &[Matrix]) -> Poly {
    let nvars = mats.len();
    if n == 0 {
        return Poly::constant(field, nvars, field.one());
    }
    assert!(n <= 20, "symbolic determinant only for small matrices");
    let entry = |i: usize, j: usize| -> Poly {
        let coeffs: Vec<Scalar> = mats.iter().map(|m| m.get(i, j).clone()).collect();
        Poly::linear(field, &coeffs)
    };
    // minors[S] = det of rows 0..|S| and columns S
    let mut minors: Vec<Option<Poly>> = vec![None; 1 << n];
    minors[0] = Some(Poly::constant(field, nvars, field.one()));
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = Poly::zero(field);
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let rest = mask & !(1 << j);
            if let Some(m) = &minors[rest] {
                if !m.is_zero() {
                    let e = entry(row, j);
                    if !e.is_zero() {
                        // expanding along the last row: sign from columns of `mask` after j
                        let after = (mask >> (j + 1)).count_ones() as usize;
                        let sign = if after % 2 == 0 { field.one() } else { -field.one() };
                        acc.add_scaled(&e.mul(m), &sign);
                    }
                }
            }
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_constant_matrix_matches_numeric() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, 3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 1]);
        let p = generic_determinant(q, 3, &[m.clone()]);
        // det(x·m) = det(m)·x^3
        let mut expect = Poly::zero(q);
        expect.add_term(vec![3], m.det());
        assert_eq!(p, expect);
    }

    #[test]
    fn identically_zero_determinant() {
        let q = Field::Rational;
        // x·E11 + y·E12 is always singular
        let a = Matrix::from_i64(q, 2, 2, &[1, 0, 0, 0]);
        let b = Matrix::from_i64(q, 2, 2, &[0, 1, 0, 0]);
        assert!(generic_determinant(q, 2, &[a, b]).is_zero());
        let c = Matrix::from_i64(q, 2, 2, &[1, 0, 0, 0]);
        let d = Matrix::from_i64(q, 2, 2, &[0, 0, 0, 1]);
        assert!(!generic_determinant(q, 2, &[c, d]).is_zero());
    }
}
