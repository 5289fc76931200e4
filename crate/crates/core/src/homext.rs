//! Representations, Hom spaces and the cocycle model of Ext¹.
//!
//! For modules `V`, `U` the cochain spaces are
//! `𝕍^{V,U} = ∏_x Hom(V_x, U_x)`, `𝔸^{V,U} = ∏_α Hom(V_{sα}, U_{tα})` and
//! `ℝ^{V,U} = ∏_ρ Hom(V_{sρ}, U_{tρ})`. Cocycles `ℤ^{V,U}` are the arrow
//! cochains whose Leibniz evaluation kills every relation; coboundaries
//! `𝔹^{V,U}` are `U_α h_{sα} − h_{tα} V_α`. Ext¹(V, U) is `ℤ/𝔹`, and
//! classes are always carried as canonical coset representatives.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{quotient, Field, Matrix, QuotientSpace, Scalar, SubspaceBasis};
use crate::poly::generic_determinant;
use crate::quiver::{Algebra, Path, Relation};
use crate::sample::random_coefficients;

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.algebra.quiver();
        write!(f, "Representation(dim {:?}", self.dims)?;
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            write!(f, ", {} = {m}", a.name)?;
        }
        write!(f, ")")
    }
}

impl Representation {
    /// Checks matrix shapes (`d_{tα} × d_{sα}`) and that every relation vanishes.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let rep = Representation::unchecked(algebra, dims, maps)?;
        if let Some(r) = rep.violated_relation() {
            return Err(Error::RelationViolated {
                relation: r.to_string(),
                module: "<anonymous>".into(),
            });
        }
        Ok(rep)
    }

    /// Shape-checked but relations are not verified.
    pub fn unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            let want = (dims[a.target], dims[a.source]);
            if m.shape() != want {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} has entries in {}, expected {}",
                    a.name,
                    m.field(),
                    algebra.field()
                )));
            }
        }
        Ok(Representation { algebra, dims, maps })
    }

    pub fn zero(algebra: Arc<Algebra>) -> Representation {
        let dims = vec![0; algebra.vertex_count()];
        Representation::semisimple(algebra, dims)
    }

    /// All arrow maps zero.
    pub fn semisimple(algebra: Arc<Algebra>, dims: Vec<usize>) -> Representation {
        let f = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation { algebra, dims, maps }
    }

    /// Simple module at vertex `x`.
    pub fn simple(algebra: Arc<Algebra>, x: usize) -> Representation {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[x] = 1;
        Representation::semisimple(algebra, dims)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn field(&self) -> Field {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `M_σ = M_{α₁} ⋯ M_{αₙ}`; the trivial path gives the identity.
    pub fn eval_path(&self, path: &Path) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::identity(f, self.dims[path.source()]);
        for &a in path.arrows().iter().rev() {
            acc = self.maps[a].try_mul(&acc).expect("composable path");
        }
        acc
    }

    pub fn eval_relation(&self, rel: &Relation) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dims[rel.target()], self.dims[rel.source()]);
        for (c, p) in rel.terms() {
            acc = acc.try_add(&self.eval_path(p).scale(c)).expect("parallel paths");
        }
        acc
    }

    /// Name of the first relation not annihilated, if any.
    pub fn violated_relation(&self) -> Option<&str> {
        self.algebra
            .relations()
            .iter()
            .find(|r| !self.eval_relation(r).is_zero())
            .map(|r| r.name.as_str())
    }

    pub(crate) fn with_maps(&self, maps: Vec<Matrix>) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            dims: self.dims.clone(),
            maps,
        }
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &Representation, b: &Representation) -> Representation {
    let dims = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let maps = a
        .maps
        .iter()
        .zip(&b.maps)
        .map(|(x, y)| Matrix::block_diag(x, y))
        .collect();
    Representation {
        algebra: a.algebra.clone(),
        dims,
        maps,
    }
}

macro_rules! cochain_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name(pub Vec<Matrix>);

        impl $name {
            pub fn zero(field: Field, shapes: &[(usize, usize)]) -> Self {
                $name(shapes.iter().map(|&(r, c)| Matrix::zeros(field, r, c)).collect())
            }

            pub fn from_vector(field: Field, shapes: &[(usize, usize)], v: &[Scalar]) -> Self {
                $name(unflatten(field, shapes, v))
            }

            pub fn to_vector(&self) -> Vec<Scalar> {
                flatten(&self.0)
            }

            pub fn components(&self) -> &[Matrix] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Matrix::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                $name(
                    self.0
                        .iter()
                        .zip(&other.0)
                        .map(|(a, b)| a.try_add(b).expect("same shapes"))
                        .collect(),
                )
            }

            pub fn scale(&self, s: &Scalar) -> Self {
                $name(self.0.iter().map(|m| m.scale(s)).collect())
            }
        }
    };
}

cochain_type!(
    /// Per-vertex maps `h_x : V_x → U_x`; morphisms are vertex cochains.
    VertexCochain
);
cochain_type!(
    /// Per-arrow maps `Z_α : V_{sα} → U_{tα}`.
    ArrowCochain
);
cochain_type!(
    /// Per-relation maps `V_{sρ} → U_{tρ}`.
    RelationCochain
);

pub(crate) fn flatten(parts: &[Matrix]) -> Vec<Scalar> {
    parts.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

pub(crate) fn unflatten(field: Field, shapes: &[(usize, usize)], v: &[Scalar]) -> Vec<Matrix> {
    let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
    assert_eq!(v.len(), total, "cochain vector has the wrong length");
    let mut out = Vec::with_capacity(shapes.len());
    let mut k = 0;
    for &(r, c) in shapes {
        let rows = (0..r)
            .map(|i| v[k + i * c..k + (i + 1) * c].to_vec())
            .collect();
        out.push(Matrix::from_rows(field, rows, c).expect("shape"));
        k += r * c;
    }
    out
}

pub fn vertex_shapes(v: &Representation, u: &Representation) -> Vec<(usize, usize)> {
    (0..v.dims.len()).map(|x| (u.dims[x], v.dims[x])).collect()
}

pub fn arrow_shapes(v: &Representation, u: &Representation) -> Vec<(usize, usize)> {
    v.algebra
        .quiver()
        .arrows()
        .iter()
        .map(|a| (u.dims[a.target], v.dims[a.source]))
        .collect()
}

pub fn relation_shapes(v: &Representation, u: &Representation) -> Vec<(usize, usize)> {
    v.algebra
        .relations()
        .iter()
        .map(|r| (u.dims[r.target()], v.dims[r.source()]))
        .collect()
}

pub(crate) fn shapes_len(shapes: &[(usize, usize)]) -> usize {
    shapes.iter().map(|(r, c)| r * c).sum()
}

/// Matrix of a linear map on a cochain space, assembled column by column
/// from its values on unit cochains.
pub(crate) fn matrix_of<F>(field: Field, in_shapes: &[(usize, usize)], out_len: usize, f: F) -> Matrix
where
    F: Fn(&[Matrix]) -> Vec<Scalar>,
{
    let n = shapes_len(in_shapes);
    let mut cols = Vec::with_capacity(n);
    let mut unit = vec![field.zero(); n];
    for k in 0..n {
        unit[k] = field.one();
        let out = f(&unflatten(field, in_shapes, &unit));
        assert_eq!(out.len(), out_len);
        cols.push(out);
        unit[k] = field.zero();
    }
    Matrix::from_columns(field, out_len, &cols)
}

/// `Z_σ^{V,U} = Σ_i U_{α₁⋯α_{i−1}} Z_{αᵢ} V_{α_{i+1}⋯αₙ}`; zero on trivial paths.
pub fn z_path(z: &[Matrix], v: &Representation, u: &Representation, path: &Path) -> Matrix {
    let q = v.algebra.quiver();
    let f = v.field();
    let n = path.len();
    let mut acc = Matrix::zeros(f, u.dims[path.target()], v.dims[path.source()]);
    for i in 0..n {
        let left = u.eval_path(&path.slice(q, 0, i));
        let right = v.eval_path(&path.slice(q, i + 1, n));
        let term = left
            .try_mul(&z[path.arrows()[i]])
            .and_then(|m| m.try_mul(&right))
            .expect("cochain shapes");
        acc = acc.try_add(&term).expect("shape");
    }
    acc
}

/// Leibniz evaluation `Z_ρ^{V,U}` of an arrow cochain on a relation.
pub fn z_rho(z: &ArrowCochain, v: &Representation, u: &Representation, rel: &Relation) -> Matrix {
    let f = v.field();
    let mut acc = Matrix::zeros(f, u.dims[rel.target()], v.dims[rel.source()]);
    for (c, p) in rel.terms() {
        acc = acc.try_add(&z_path(&z.0, v, u, p).scale(c)).expect("shape");
    }
    acc
}

/// `𝔸^{V,U} → ℝ^{V,U}`, `Z ↦ (Z_ρ^{V,U})_ρ`.
pub fn relation_boundary_matrix(v: &Representation, u: &Representation) -> Matrix {
    let out = shapes_len(&relation_shapes(v, u));
    let rels = v.algebra.relations();
    matrix_of(v.field(), &arrow_shapes(v, u), out, |z| {
        let z = ArrowCochain(z.to_vec());
        let parts: Vec<Matrix> = rels.iter().map(|r| z_rho(&z, v, u, r)).collect();
        flatten(&parts)
    })
}

/// `𝕍^{V,U} → 𝔸^{V,U}`, `h ↦ (U_α h_{sα} − h_{tα} V_α)_α`.
pub fn boundary_matrix(v: &Representation, u: &Representation) -> Matrix {
    let out = shapes_len(&arrow_shapes(v, u));
    matrix_of(v.field(), &vertex_shapes(v, u), out, |h| {
        flatten(&boundary(v, u, h))
    })
}

pub(crate) fn boundary(v: &Representation, u: &Representation, h: &[Matrix]) -> Vec<Matrix> {
    v.algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let lhs = u.maps[i].try_mul(&h[a.source]).expect("shape");
            let rhs = h[a.target].try_mul(&v.maps[i]).expect("shape");
            lhs.try_sub(&rhs).expect("shape")
        })
        .collect()
}

/// Basis of `Hom(M, N)` as vertex cochains `h_x : M_x → N_x`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<VertexCochain> {
    let shapes = vertex_shapes(m, n);
    boundary_matrix(m, n)
        .kernel_basis()
        .vectors()
        .iter()
        .map(|v| VertexCochain::from_vector(m.field(), &shapes, v))
        .collect()
}

/// `[M, N]`.
pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    let d = boundary_matrix(m, n);
    d.cols() - d.rank()
}

pub fn is_morphism(m: &Representation, n: &Representation, h: &VertexCochain) -> bool {
    h.0.len() == m.dims.len()
        && h.0.iter().enumerate().all(|(x, hx)| hx.shape() == (n.dims[x], m.dims[x]))
        && boundary(m, n, &h.0).iter().all(Matrix::is_zero)
}

/// `ℤ^{V,U}` in arrow-cochain coordinates.
pub fn z_space(v: &Representation, u: &Representation) -> SubspaceBasis {
    relation_boundary_matrix(v, u).kernel_basis()
}

/// `𝔹^{V,U}` in arrow-cochain coordinates.
pub fn b_space(v: &Representation, u: &Representation) -> SubspaceBasis {
    boundary_matrix(v, u).image_basis()
}

/// `Ext¹(V, U) = ℤ^{V,U} / 𝔹^{V,U}`.
#[derive(Clone, Debug)]
pub struct ExtSpace1 {
    field: Field,
    shapes: Vec<(usize, usize)>,
    z: SubspaceBasis,
    b: SubspaceBasis,
    quotient: QuotientSpace,
}

pub fn ext1(v: &Representation, u: &Representation) -> ExtSpace1 {
    let shapes = arrow_shapes(v, u);
    let z = z_space(v, u);
    let b = b_space(v, u);
    let quotient = quotient(shapes_len(&shapes), &b);
    ExtSpace1 {
        field: v.field(),
        shapes,
        z,
        b,
        quotient,
    }
}

impl ExtSpace1 {
    /// `[V, U]¹`.
    pub fn dim(&self) -> usize {
        self.z.dim() - self.b.dim()
    }
    pub fn z(&self) -> &SubspaceBasis {
        &self.z
    }
    pub fn b(&self) -> &SubspaceBasis {
        &self.b
    }
    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.shapes
    }
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn is_cocycle(&self, z: &ArrowCochain) -> bool {
        self.z.contains(&z.to_vector())
    }

    /// Canonical coset representative.
    pub fn class_of(&self, z: &ArrowCochain) -> ArrowCochain {
        ArrowCochain::from_vector(self.field, &self.shapes, &self.quotient.reduce(&z.to_vector()))
    }

    pub fn is_zero_class(&self, z: &ArrowCochain) -> bool {
        self.quotient.is_zero_class(&z.to_vector())
    }

    pub fn cocycle(&self, coeffs: &[Scalar]) -> ArrowCochain {
        ArrowCochain::from_vector(self.field, &self.shapes, &self.z.combine(coeffs))
    }

    pub fn z_basis(&self) -> Vec<ArrowCochain> {
        self.z
            .vectors()
            .iter()
            .map(|v| ArrowCochain::from_vector(self.field, &self.shapes, v))
            .collect()
    }

    /// Cocycles whose classes form a basis of Ext¹.
    pub fn class_basis(&self) -> Vec<ArrowCochain> {
        let reduced: Vec<Vec<Scalar>> = self.z.vectors().iter().map(|v| self.quotient.reduce(v)).collect();
        let ambient = shapes_len(&self.shapes);
        let mut picked = Vec::new();
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for (orig, red) in self.z.vectors().iter().zip(&reduced) {
            let mut trial = span.clone();
            trial.push(red.clone());
            if SubspaceBasis::span(self.field, ambient, trial.clone()).dim() == trial.len() {
                span = trial;
                picked.push(ArrowCochain::from_vector(self.field, &self.shapes, orig));
            }
        }
        picked
    }
}

/// The extension `0 → U → W^Z → V → 0` with its structure maps.
#[derive(Clone, Debug)]
pub struct MiddleTerm {
    pub w: Representation,
    /// Canonical injection `U → W^Z`.
    pub f: VertexCochain,
    /// Canonical projection `W^Z → V`.
    pub g: VertexCochain,
}

/// `W_x = U_x ⊕ V_x`, `W_α = [[U_α, Z_α], [0, V_α]]`.
pub fn middle_term(v: &Representation, u: &Representation, z: &ArrowCochain) -> Result<MiddleTerm> {
    let rels = v.algebra.relations();
    if let Some(r) = rels.iter().find(|r| !z_rho(z, v, u, r).is_zero()) {
        return Err(Error::NotACocycle(r.name.clone()));
    }
    let field = v.field();
    let q = v.algebra.quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            Matrix::block2(
                &u.maps[i],
                &z.0[i],
                &Matrix::zeros(field, v.dims[a.target], u.dims[a.source]),
                &v.maps[i],
            )
        })
        .collect();
    let dims: Vec<usize> = u.dims.iter().zip(&v.dims).map(|(a, b)| a + b).collect();
    let w = Representation::new(v.algebra.clone(), dims, maps)?;
    let f = VertexCochain(
        (0..u.dims.len())
            .map(|x| {
                Matrix::vstack(
                    field,
                    u.dims[x],
                    &[Matrix::identity(field, u.dims[x]), Matrix::zeros(field, v.dims[x], u.dims[x])],
                )
            })
            .collect(),
    );
    let g = VertexCochain(
        (0..u.dims.len())
            .map(|x| {
                let mut m = Matrix::zeros(field, v.dims[x], u.dims[x] + v.dims[x]);
                m.paste(0, u.dims[x], &Matrix::identity(field, v.dims[x]));
                m
            })
            .collect(),
    );
    Ok(MiddleTerm { w, f, g })
}

/// Push `[Z] ∈ Ext¹(V, U)` along `h : U → M`: the class of `(h_{tα} Z_α)` in Ext¹(V, M).
pub fn pushout_class(
    v: &Representation,
    m: &Representation,
    h: &VertexCochain,
    z: &ArrowCochain,
) -> ArrowCochain {
    let q = v.algebra.quiver();
    let pushed = ArrowCochain(
        q.arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| h.0[a.target].try_mul(&z.0[i]).expect("shape"))
            .collect(),
    );
    ext1(v, m).class_of(&pushed)
}

/// Pull `[Z] ∈ Ext¹(V, U)` back along `h : M → V`: the class of `(Z_α h_{sα})` in Ext¹(M, U).
pub fn pullback_class(
    m: &Representation,
    u: &Representation,
    z: &ArrowCochain,
    h: &VertexCochain,
) -> ArrowCochain {
    let q = m.algebra.quiver();
    let pulled = ArrowCochain(
        q.arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| z.0[i].try_mul(&h.0[a.source]).expect("shape"))
            .collect(),
    );
    ext1(m, u).class_of(&pulled)
}

/// Whether the extension given by `Z ∈ ℤ^{V,U}` splits, i.e. `Z ∈ 𝔹^{V,U}`.
pub fn is_split(v: &Representation, u: &Representation, z: &ArrowCochain) -> bool {
    b_space(v, u).contains(&z.to_vector())
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsoCertificate {
    /// An explicit isomorphism `M → N`, verified.
    Yes(VertexCochain),
    No(String),
    Unknown,
}

impl IsoCertificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoCertificate::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoCertificate::No(_))
    }
}

pub const ISO_SAMPLE_BOUND: i64 = 1_000_000;
pub const ISO_TRIALS: usize = 20;
pub const ISO_SYMBOLIC_MAX_DIM: usize = 12;

/// Decides `M ≅ N` with a verified certificate where possible.
///
/// Random elements of `Hom(M, N)` are tried first; a `No` comes from a
/// dimension-vector or Hom-fingerprint mismatch, or from a generic
/// determinant that vanishes identically at some vertex.
pub fn iso_test(m: &Representation, n: &Representation, seed: u64) -> IsoCertificate {
    if m.dims != n.dims {
        return IsoCertificate::No(format!(
            "dimension vectors differ: {:?} vs {:?}",
            m.dims, n.dims
        ));
    }
    let (mm, nn, mn, nm) = (hom_dim(m, m), hom_dim(n, n), hom_dim(m, n), hom_dim(n, m));
    if !(mm == nn && nn == mn && mn == nm) {
        return IsoCertificate::No(format!(
            "hom fingerprint: [M,M]={mm}, [N,N]={nn}, [M,N]={mn}, [N,M]={nm}"
        ));
    }
    let basis = hom_basis(m, n);
    let field = m.field();
    let shapes = vertex_shapes(m, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIALS {
        let coeffs = random_coefficients(field, &mut rng, basis.len(), ISO_SAMPLE_BOUND);
        let mut f = VertexCochain::zero(field, &shapes);
        for (c, h) in coeffs.iter().zip(&basis) {
            f = f.add(&h.scale(c));
        }
        if f.0.iter().all(Matrix::is_invertible) && is_morphism(m, n, &f) {
            return IsoCertificate::Yes(f);
        }
    }
    if m.total_dim() <= ISO_SYMBOLIC_MAX_DIM {
        for x in 0..m.dims.len() {
            let mats: Vec<Matrix> = basis.iter().map(|h| h.0[x].clone()).collect();
            if generic_determinant(field, m.dims[x], &mats).is_zero() {
                return IsoCertificate::No(format!(
                    "every morphism is singular at vertex {}",
                    m.algebra.quiver().vertices()[x]
                ));
            }
        }
    }
    IsoCertificate::Unknown
}

/// Verifies an isomorphism certificate exactly.
pub fn verify_iso(m: &Representation, n: &Representation, h: &VertexCochain) -> bool {
    is_morphism(m, n, h) && h.0.iter().all(Matrix::is_invertible)
}
