//! Exact scalars and dense matrices over ℚ or a prime field.
//!
//! A linear map `X -> Y` is stored as a `dim Y × dim X` matrix acting on
//! column vectors. Every routine is exact and deterministic: pivots are
//! always chosen as the lowest available index.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!("F{p}: modulus must be a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q` or `F<p>` / `Fp<p>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp")
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidField(format!("unknown field `{t}`")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unknown field `{t}`")))?;
        Field::prime(p)
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den`; `None` when the denominator vanishes in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(BigRational::new(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let n = reduce_bigint(num, &m);
                let d = reduce_bigint(den, &m);
                let d = Scalar::Fp { value: d, modulus: p };
                let n = Scalar::Fp { value: n, modulus: p };
                d.inv().map(|di| &n * &di)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn reduce_bigint(v: &BigInt, m: &BigInt) -> u32 {
    let r = ((v % m) + m) % m;
    r.to_u32().expect("residue fits in u32")
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Mixing elements of different fields is a logic error
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Integer view used by the report writer; `None` for proper fractions.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { value, .. } => Some(*value as i64),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

fn check_same(a: u32, b: u32) {
    assert_eq!(a, b, "mixed prime fields");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                check_same(*p, *q);
                Scalar::Fp {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                check_same(*p, *q);
                Scalar::Fp {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                check_same(*p, *q);
                Scalar::Fp {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Whether a rational scalar is strictly negative; prime-field values never are.
pub fn is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Q(q) if q.is_negative())
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: r, cols, data })
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.try_add(&rhs.scale(&-self.field.one()))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut m = Matrix::zeros(a.field, a.rows + c.rows, a.cols + b.cols);
        m.paste(0, 0, a);
        m.paste(0, a.cols, b);
        m.paste(a.rows, 0, c);
        m.paste(a.rows, a.cols, d);
        m
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let f = a.field;
        Matrix::block2(
            a,
            &Matrix::zeros(f, a.rows, b.cols),
            &Matrix::zeros(f, b.rows, a.cols),
            b,
        )
    }

    pub fn paste(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut r = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            m.paste(r, 0, p);
            r += p.rows;
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let field = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            vectors.push(v);
        }
        SubspaceBasis {
            field,
            ambient_dim: self.cols,
            vectors,
        }
    }

    /// Basis of the column space.
    pub fn image_basis(&self) -> SubspaceBasis {
        let columns: Vec<Vec<Scalar>> = (0..self.cols).map(|j| self.column(j)).collect();
        SubspaceBasis::span(self.field, self.rows, columns)
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a {}x{} system",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        aug.paste(0, 0, self);
        for (i, v) in b.iter().enumerate() {
            aug.set(i, self.cols, v.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        aug.paste(0, 0, self);
        aug.paste(0, n, &Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if (0..n).any(|i| pivots.get(i) != Some(&i)) {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Entries as nested string arrays (exact, deterministic).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|s| s.to_string()).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " ;")?;
            }
            for v in self.row(i) {
                write!(f, " {v}")?;
            }
        }
        write!(f, " ]")
    }
}

/// Linearly independent vectors spanning a subspace of `field^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient_dim: usize) -> SubspaceBasis {
        SubspaceBasis {
            field,
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> SubspaceBasis {
        let id = Matrix::identity(field, ambient_dim);
        SubspaceBasis {
            field,
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| id.row(i).to_vec()).collect(),
        }
    }

    /// Independent subset of `vectors` (greedy, in order) spanning the same space.
    pub fn span(field: Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> SubspaceBasis {
        let mut echelon = Echelon::new();
        let mut kept = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector does not fit the ambient space");
            if echelon.insert(&v) {
                kept.push(v);
            }
        }
        SubspaceBasis {
            field,
            ambient_dim,
            vectors: kept,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// Matrix whose columns are the basis vectors (`ambient × dim`).
    pub fn as_columns(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.vectors)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        quotient(self.ambient_dim, self).reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        let q = quotient(other.ambient_dim, other);
        self.vectors.iter().all(|v| q.reduce(v).iter().all(Scalar::is_zero))
    }

    /// `Σ c_i v_i` for coefficient vector `c`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![self.field.zero(); self.ambient_dim];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o = &*o + &(c * x);
            }
        }
        out
    }
}

/// Incremental reduced row echelon form used for rank growth tests.
#[derive(Clone, Debug)]
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        w
    }

    /// Returns whether `v` was independent of the current rows.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        let w: Vec<Scalar> = w.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        self.rows.push((p, w));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

/// `field^ambient_dim / subspace` with a canonical coset reducer.
///
/// The reducer clears the pivot coordinates of the subspace's RREF, so
/// it is linear, idempotent, and vanishes exactly on the subspace.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: Field,
    ambient_dim: usize,
    subspace: SubspaceBasis,
    echelon: Vec<(usize, Vec<Scalar>)>,
    free: Vec<usize>,
}

pub fn quotient(ambient_dim: usize, sub: &SubspaceBasis) -> QuotientSpace {
    assert_eq!(sub.ambient_dim, ambient_dim, "subspace does not fit the ambient space");
    let field = sub.field;
    let (echelon, pivots) = if sub.dim() == 0 {
        (Vec::new(), Vec::new())
    } else {
        let m = Matrix::from_rows(field, sub.vectors.clone(), ambient_dim).expect("shape");
        let (r, pivots) = m.rref();
        let rows = pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, r.row(i).to_vec()))
            .collect();
        (rows, pivots)
    };
    let free = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    QuotientSpace {
        field,
        ambient_dim,
        subspace: sub.clone(),
        echelon,
        free,
    }
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn subspace(&self) -> &SubspaceBasis {
        &self.subspace
    }

    /// Canonical coset representative of `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector does not fit the ambient space");
        let mut w = v.to_vec();
        for (p, row) in &self.echelon {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        w
    }

    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of the class of `v` in the quotient (a `dim()`-vector).
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    /// Matrix of `v ↦ coordinates(v)`, `dim() × ambient_dim`.
    pub fn coordinate_matrix(&self) -> Matrix {
        let id = Matrix::identity(self.field, self.ambient_dim);
        let cols: Vec<Vec<Scalar>> = (0..self.ambient_dim)
            .map(|j| self.coordinates(id.row(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 3, 4).rank(), 0);
        assert_eq!(Matrix::from_i64(Q, 2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel_basis().dim(), 3);
        let k = Matrix::from_i64(Q, 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.vectors()[0], vec![Q.from_i64(-1), Q.from_i64(1)]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q.from_i64(3), Q.from_i64(-2)];
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&b).unwrap(), None);
        let m = Matrix::from_i64(Q, 1, 2, &[1, 1]);
        let x = m.solve(&[Q.from_i64(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![Q.from_i64(2)]);
        assert!(m.solve(&b).is_err());
    }

    #[test]
    fn quotient_examples() {
        let full = SubspaceBasis::full(Q, 3);
        assert_eq!(quotient(3, &full).dim(), 0);
        let zero = SubspaceBasis::zero(Q, 3);
        let q = quotient(3, &zero);
        let v = vec![Q.from_i64(1), Q.from_i64(2), Q.from_i64(3)];
        assert_eq!(q.reduce(&v), v);
        let line = SubspaceBasis::span(Q, 3, vec![vec![Q.from_i64(1), Q.from_i64(1), Q.zero()]]);
        assert_eq!(quotient(3, &line).dim(), 2);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(100));
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(101)).is_none());
        assert!(Field::prime(100).is_err());
        assert_eq!(Field::parse("F101").unwrap(), f);
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(Q, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.try_mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert_eq!(m.det(), Q.one());
        assert!(Matrix::from_i64(Q, 2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert!(Matrix::identity(Q, 0).inverse().is_some());
    }

    fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |e| Matrix::from_i64(field, r, c, &e))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(Q)) {
            prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
            for v in m.kernel_basis().vectors() {
                prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn rank_nullity_mod_p(m in small_matrix(Field::Prime(5))) {
            prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
        }

        #[test]
        fn reducer_is_idempotent_linear_and_exact(
            gens in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 0..4),
            v in proptest::collection::vec(-5i64..=5, 4),
            w in proptest::collection::vec(-5i64..=5, 4),
        ) {
            let to = |x: &Vec<i64>| x.iter().map(|&a| Q.from_i64(a)).collect::<Vec<_>>();
            let sub = SubspaceBasis::span(Q, 4, gens.iter().map(to).collect());
            let q = quotient(4, &sub);
            let (v, w) = (to(&v), to(&w));
            let rv = q.reduce(&v);
            prop_assert_eq!(q.reduce(&rv), rv.clone());
            let sum: Vec<Scalar> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
            let rw = q.reduce(&w);
            let rs: Vec<Scalar> = rv.iter().zip(&rw).map(|(a, b)| a + b).collect();
            prop_assert_eq!(q.reduce(&sum), rs);
            prop_assert_eq!(q.is_zero_class(&v), sub.contains(&v));
            for g in sub.vectors() {
                prop_assert!(q.is_zero_class(g));
            }
            prop_assert_eq!(q.dim() + sub.dim(), 4);
        }

        #[test]
        fn solve_residual(m in small_matrix(Q), seed in proptest::collection::vec(-3i64..=3, 5)) {
            let x0: Vec<Scalar> = seed.iter().take(m.cols()).map(|&a| Q.from_i64(a)).chain(std::iter::repeat(Q.zero())).take(m.cols()).collect();
            let b = m.mul_vec(&x0);
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }
}
