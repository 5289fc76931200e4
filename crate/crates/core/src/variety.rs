//! Module varieties at rational points: the group action, orbits, tangent
//! spaces, the tangent-pair criteria, the Ψ map, degeneration witnesses and
//! the regularity certificate.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ext2::{compose_cocycles, ext2_model_unchecked, ext2_via_omega, proj_presentation, require_small_model};
use crate::homext::{
    arrow_shapes, boundary, direct_sum, ext1, hom_basis, hom_dim, iso_test, middle_term, relation_boundary_matrix,
    shapes_len, vertex_shapes, z_space, ArrowCochain, IsoCertificate, MiddleTerm, Representation, VertexCochain,
};
use crate::linalg::{Field, Matrix, Scalar, SubspaceBasis};
use crate::quiver::{a_of_d, gl_dim, Algebra};
use crate::sample::random_coefficients;

/// `(g · M)_α = g_{tα} M_α g_{sα}⁻¹`.
pub fn gl_action(g: &[Matrix], m: &Representation) -> Result<Representation> {
    let q = m.algebra().quiver();
    if g.len() != m.dims().len() {
        return Err(Error::DimensionMismatch(format!(
            "{} group components for {} vertices",
            g.len(),
            m.dims().len()
        )));
    }
    let mut inv = Vec::with_capacity(g.len());
    for (x, gx) in g.iter().enumerate() {
        if gx.shape() != (m.dim(x), m.dim(x)) {
            return Err(Error::DimensionMismatch(format!(
                "group component at {} must be {}x{}",
                q.vertices()[x],
                m.dim(x),
                m.dim(x)
            )));
        }
        inv.push(gx.inverse().ok_or_else(|| Error::NotInvertible(q.vertices()[x].clone()))?);
    }
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| g[a.target].try_mul(m.map(i)).and_then(|x| x.try_mul(&inv[a.source])))
        .collect::<Result<Vec<_>>>()?;
    Ok(m.with_maps(maps))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    /// `dim GL_d = Σ d_x²`.
    pub group_dim: usize,
    /// `[M, M]`.
    pub end_dim: usize,
    pub orbit_dim: usize,
}

pub fn orbit_dim(m: &Representation) -> OrbitInfo {
    let group_dim = gl_dim(m.dims()) as usize;
    let end_dim = hom_dim(m, m);
    OrbitInfo {
        group_dim,
        end_dim,
        orbit_dim: group_dim - end_dim,
    }
}

/// Tangent space `ℤ^{N,N}` of the module variety at `N`.
#[derive(Clone, Debug)]
pub struct TangentSpace {
    pub basis: SubspaceBasis,
}

impl TangentSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

pub fn tangent_module_variety(n: &Representation) -> TangentSpace {
    TangentSpace { basis: z_space(n, n) }
}

/// Dimensions of the four blocks of `ℤ^{N,N}` at `N = U ⊕ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentBlocks {
    pub uu: usize,
    pub vv: usize,
    pub uv: usize,
    pub vu: usize,
    /// `dim ℤ^{U⊕V, U⊕V}`, computed directly.
    pub total: usize,
}

impl TangentBlocks {
    pub fn sum(&self) -> usize {
        self.uu + self.vv + self.uv + self.vu
    }
}

pub fn tangent_block_decomposition(u: &Representation, v: &Representation) -> TangentBlocks {
    let n = direct_sum(u, v);
    TangentBlocks {
        uu: z_space(u, u).dim(),
        vv: z_space(v, v).dim(),
        uv: z_space(u, v).dim(),
        vu: z_space(v, u).dim(),
        total: z_space(&n, &n).dim(),
    }
}

/// Matrix of a linear map on `field^n` from its values on unit vectors.
pub(crate) fn linear_matrix<F>(field: Field, n: usize, out_len: usize, f: F) -> Matrix
where
    F: Fn(&[Scalar]) -> Vec<Scalar>,
{
    let mut unit = vec![field.zero(); n];
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        unit[k] = field.one();
        cols.push(f(&unit));
        unit[k] = field.zero();
    }
    Matrix::from_columns(field, out_len, &cols)
}

/// A subspace of `ℤ^{U,U} × ℤ^{V,V}` in coordinates over fixed bases of the factors.
#[derive(Clone, Debug)]
pub struct PairSpace {
    field: Field,
    uu_shapes: Vec<(usize, usize)>,
    vv_shapes: Vec<(usize, usize)>,
    pub zuu: SubspaceBasis,
    pub zvv: SubspaceBasis,
    pub pairs: SubspaceBasis,
}

impl PairSpace {
    pub fn dim(&self) -> usize {
        self.pairs.dim()
    }
    pub fn domain_dim(&self) -> usize {
        self.zuu.dim() + self.zvv.dim()
    }
    pub fn contains(&self, coeffs: &[Scalar]) -> bool {
        self.pairs.contains(coeffs)
    }
    /// The pair `(Z′, Z″)` with the given coordinates.
    pub fn split(&self, coeffs: &[Scalar]) -> (ArrowCochain, ArrowCochain) {
        let k = self.zuu.dim();
        (
            ArrowCochain::from_vector(self.field, &self.uu_shapes, &self.zuu.combine(&coeffs[..k])),
            ArrowCochain::from_vector(self.field, &self.vv_shapes, &self.zvv.combine(&coeffs[k..])),
        )
    }
}

struct PairDomain {
    field: Field,
    uu_shapes: Vec<(usize, usize)>,
    vv_shapes: Vec<(usize, usize)>,
    zuu: SubspaceBasis,
    zvv: SubspaceBasis,
}

impl PairDomain {
    fn new(u: &Representation, v: &Representation) -> PairDomain {
        PairDomain {
            field: u.field(),
            uu_shapes: arrow_shapes(u, u),
            vv_shapes: arrow_shapes(v, v),
            zuu: z_space(u, u),
            zvv: z_space(v, v),
        }
    }

    fn dim(&self) -> usize {
        self.zuu.dim() + self.zvv.dim()
    }

    fn split(&self, c: &[Scalar]) -> (ArrowCochain, ArrowCochain) {
        let k = self.zuu.dim();
        (
            ArrowCochain::from_vector(self.field, &self.uu_shapes, &self.zuu.combine(&c[..k])),
            ArrowCochain::from_vector(self.field, &self.vv_shapes, &self.zvv.combine(&c[k..])),
        )
    }

    fn finish(self, constraints: Vec<Matrix>) -> PairSpace {
        let n = self.dim();
        let pairs = if constraints.is_empty() {
            SubspaceBasis::full(self.field, n)
        } else {
            Matrix::vstack(self.field, n, &constraints).kernel_basis()
        };
        PairSpace {
            field: self.field,
            uu_shapes: self.uu_shapes,
            vv_shapes: self.vv_shapes,
            zuu: self.zuu,
            zvv: self.zvv,
            pairs,
        }
    }
}

/// Rows expressing `(Z′_α f_{sα} − f_{tα} Z″_α) ∈ 𝔹^{V,U}` for each `f` in a basis of Hom(V, U).
fn hom_constraints(dom: &PairDomain, u: &Representation, v: &Representation) -> Vec<Matrix> {
    let q = u.algebra().quiver();
    let e = ext1(v, u);
    let coord = e.quotient().coordinate_matrix();
    hom_basis(v, u)
        .iter()
        .map(|f| {
            linear_matrix(dom.field, dom.dim(), e.quotient().dim(), |c| {
                let (z1, z2) = dom.split(c);
                let parts: Vec<Matrix> = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let l = z1.0[i].try_mul(&f.0[a.source]).expect("shape");
                        let r = f.0[a.target].try_mul(&z2.0[i]).expect("shape");
                        l.try_sub(&r).expect("shape")
                    })
                    .collect();
                coord.mul_vec(&ArrowCochain(parts).to_vector())
            })
        })
        .collect()
}

/// Pairs `(Z′, Z″) ∈ ℤ^{U,U} × ℤ^{V,V}` with `Z′_α f_{sα} − f_{tα} Z″_α ∈ 𝔹^{V,U}` for all `f ∈ Hom(V, U)`.
pub fn hom_tangent_pairs(u: &Representation, v: &Representation) -> PairSpace {
    let dom = PairDomain::new(u, v);
    let rows = hom_constraints(&dom, u, v);
    dom.finish(rows)
}

/// Pairs in `hom_tangent_pairs` with `Z′ ∘ Z + Z ∘ Z″ ∈ 𝔹′^{V,U}` for every `Z ∈ ℤ^{V,U}`.
pub fn ext_tangent_pairs(u: &Representation, v: &Representation) -> Result<PairSpace> {
    require_small_model(u.algebra())?;
    let dom = PairDomain::new(u, v);
    let mut rows = hom_constraints(&dom, u, v);
    let model = ext2_model_unchecked(v, u);
    let coord = model.quotient().coordinate_matrix();
    for z in ext1(v, u).z_basis() {
        rows.push(linear_matrix(dom.field, dom.dim(), model.dim(), |c| {
            let (z1, z2) = dom.split(c);
            let r = compose_cocycles(&z1, &z, u, u, v).add(&compose_cocycles(&z, &z2, u, v, v));
            coord.mul_vec(&r.to_vector())
        }));
    }
    Ok(dom.finish(rows))
}

/// `Ψ : ℤ^{U,U} × ℤ^{V,V} → Ext²(V, U)`, `(Z′, Z″) ↦ [Z′ ∘ Z_ξ] + [Z_ξ ∘ Z″]`.
#[derive(Clone, Debug)]
pub struct PsiReport {
    pub matrix: Matrix,
    pub domain_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel: SubspaceBasis,
}

impl PsiReport {
    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }
    pub fn kernel_dim(&self) -> usize {
        self.domain_dim - self.rank
    }
}

pub fn psi_map(zxi: &ArrowCochain, u: &Representation, v: &Representation) -> Result<PsiReport> {
    require_small_model(u.algebra())?;
    let dom = PairDomain::new(u, v);
    let model = ext2_model_unchecked(v, u);
    let coord = model.quotient().coordinate_matrix();
    let matrix = linear_matrix(dom.field, dom.dim(), model.dim(), |c| {
        let (z1, z2) = dom.split(c);
        let r = compose_cocycles(&z1, zxi, u, u, v).add(&compose_cocycles(zxi, &z2, u, v, v));
        coord.mul_vec(&r.to_vector())
    });
    let rank = matrix.rank();
    let kernel = matrix.kernel_basis();
    Ok(PsiReport {
        domain_dim: dom.dim(),
        target_dim: model.dim(),
        rank,
        kernel,
        matrix,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjectivity {
    pub domain_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl Surjectivity {
    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }
}

/// Rank of `Ext¹(V, V) → Ext²(V, U)`, `[ξ′] ↦ [ξ ∘ ξ′]`.
pub fn left_comp_surjectivity(zxi: &ArrowCochain, u: &Representation, v: &Representation) -> Result<Surjectivity> {
    require_small_model(u.algebra())?;
    let model = ext2_model_unchecked(v, u);
    let classes = ext1(v, v).class_basis();
    let field = u.field();
    let cols: Vec<Vec<Scalar>> = classes
        .iter()
        .map(|z| model.coordinates(&compose_cocycles(zxi, z, u, v, v)))
        .collect();
    let rank = Matrix::from_columns(field, model.dim(), &cols).rank();
    Ok(Surjectivity {
        domain_dim: classes.len(),
        target_dim: model.dim(),
        rank,
    })
}

/// `pd M ≤ 1` iff `Ext²(M, S) = 0` for every simple `S` (Ω model).
pub fn pd_le1(m: &Representation) -> bool {
    let pres = proj_presentation(m).expect("presentation");
    (0..m.dims().len()).all(|x| {
        let s = Representation::simple(m.algebra().clone(), x);
        ext1(&pres.omega, &s).dim() == 0
    })
}

/// The opposite algebra and the dual module over it (transposed matrices).
pub fn dual_module(m: &Representation) -> Result<Representation> {
    let alg = m.algebra();
    let op = Arc::new(Algebra::new(alg.bound().opposite(), alg.truncation_cap())?);
    let maps = m.maps().iter().map(Matrix::transpose).collect();
    Representation::new(op, m.dims().to_vec(), maps)
}

/// `id M ≤ 1` via `pd DM ≤ 1` over the opposite algebra.
pub fn id_le1(m: &Representation) -> Result<bool> {
    Ok(pd_le1(&dual_module(m)?))
}

/// `W^{tZ}`, with the conjugation `g = diag(id_U, t·id_V)` satisfying
/// `g · W^{tZ} = W^Z` when `t ≠ 0`.
#[derive(Clone, Debug)]
pub struct ScalingFamily {
    pub t: Scalar,
    pub w: Representation,
    pub g: Option<Vec<Matrix>>,
}

pub fn scaling_family(v: &Representation, u: &Representation, z: &ArrowCochain, t: &Scalar) -> Result<ScalingFamily> {
    let w = middle_term(v, u, &z.scale(t))?.w;
    let g = if t.is_zero() {
        None
    } else {
        Some(scaling_element(u, v, t))
    };
    Ok(ScalingFamily { t: t.clone(), w, g })
}

/// `diag(id_U, t·id_V)` at every vertex.
pub fn scaling_element(u: &Representation, v: &Representation, t: &Scalar) -> Vec<Matrix> {
    let field = u.field();
    (0..u.dims().len())
        .map(|x| Matrix::block_diag(&Matrix::identity(field, u.dim(x)), &Matrix::scalar(field, v.dim(x), t)))
        .collect()
}

/// An exact sequence `0 → U → M → V → 0` given by `Z` with a verified
/// isomorphism `W^Z → M`.
#[derive(Clone, Debug)]
pub struct SesWitness {
    pub z: ArrowCochain,
    pub middle: MiddleTerm,
    pub iso: VertexCochain,
}

#[derive(Clone, Debug)]
pub struct WitnessSearch {
    pub witness: Option<SesWitness>,
    pub candidates_tried: usize,
    /// True when every middle term is split, so a negative answer is final.
    pub exhaustive: bool,
}

pub const WITNESS_GRID_MAX_DIM: usize = 4;
pub const WITNESS_RANDOM_TRIALS: usize = 200;

/// `{-2..2}^dim`, small coefficients first.
fn grid(dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                [0, 1, -1, 2, -2].into_iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn degeneration_witness_search(
    m: &Representation,
    u: &Representation,
    v: &Representation,
    seed: u64,
) -> Result<WitnessSearch> {
    let sum: Vec<usize> = u.dims().iter().zip(v.dims()).map(|(a, b)| a + b).collect();
    if sum != m.dims() {
        return Err(Error::DimensionMismatch(format!(
            "bdim U + bdim V = {sum:?} but bdim M = {:?}",
            m.dims()
        )));
    }
    let field = m.field();
    let e = ext1(v, u);
    let end_m = hom_dim(m, m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = 0;
    let attempt = |coeffs: &[Scalar], tried: &mut usize| -> Result<Option<SesWitness>> {
        *tried += 1;
        let z = e.cocycle(coeffs);
        let middle = middle_term(v, u, &z)?;
        if hom_dim(&middle.w, &middle.w) != end_m {
            return Ok(None);
        }
        match iso_test(&middle.w, m, seed) {
            IsoCertificate::Yes(iso) => Ok(Some(SesWitness { z, middle, iso })),
            _ => Ok(None),
        }
    };
    let b = e.z().dim();
    if b <= WITNESS_GRID_MAX_DIM {
        for p in grid(b) {
            let c: Vec<Scalar> = p.iter().map(|&x| field.from_i64(x)).collect();
            if let Some(w) = attempt(&c, &mut tried)? {
                return Ok(WitnessSearch {
                    witness: Some(w),
                    candidates_tried: tried,
                    exhaustive: true,
                });
            }
        }
    }
    let exhaustive = e.dim() == 0;
    if !exhaustive {
        for _ in 0..WITNESS_RANDOM_TRIALS {
            let c = random_coefficients(field, &mut rng, b, 100);
            if let Some(w) = attempt(&c, &mut tried)? {
                return Ok(WitnessSearch {
                    witness: Some(w),
                    candidates_tried: tried,
                    exhaustive: true,
                });
            }
        }
    } else if b > WITNESS_GRID_MAX_DIM {
        let c = vec![field.zero(); b];
        if let Some(w) = attempt(&c, &mut tried)? {
            return Ok(WitnessSearch {
                witness: Some(w),
                candidates_tried: tried,
                exhaustive: true,
            });
        }
    }
    Ok(WitnessSearch {
        witness: None,
        candidates_tried: tried,
        exhaustive,
    })
}

/// Re-checks a witness from scratch.
pub fn verify_witness(m: &Representation, u: &Representation, v: &Representation, w: &SesWitness) -> bool {
    match middle_term(v, u, &w.z) {
        Ok(mt) => mt.w == w.middle.w && crate::homext::verify_iso(&mt.w, m, &w.iso),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisFlags {
    pub mm_ext1_zero: bool,
    pub mm_ext2_zero: bool,
    pub vu_hom_zero: bool,
    pub uv_ext1_zero: bool,
    pub uv_ext2_zero: bool,
    pub pd_m_le1: bool,
    pub small_model: bool,
}

impl HypothesisFlags {
    pub fn all(&self) -> bool {
        self.mm_ext1_zero
            && self.mm_ext2_zero
            && self.vu_hom_zero
            && self.uv_ext1_zero
            && self.uv_ext2_zero
            && self.pd_m_le1
            && self.small_model
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    RegularTangent,
    TangentExcess,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::RegularTangent => "regular-tangent",
            Verdict::TangentExcess => "tangent-excess",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub a_d1: i64,
    pub a_d2: i64,
    pub a_d: i64,
    pub vu_hom: usize,
    pub vu_ext1: usize,
    pub vu_ext2: usize,
    pub uv_hom: usize,
    pub uv_ext1: usize,
    pub uv_ext2: usize,
    pub z_uv: usize,
    pub z_vu: usize,
    pub ext_tangent_dim: Option<usize>,
    /// `dim ext_tangent_pairs + dim ℤ^{U,V} + dim ℤ^{V,U}`.
    pub bound: Option<usize>,
    pub z_nn: usize,
    pub orbit_dim_n: usize,
    pub flags: HypothesisFlags,
    pub verdict: Option<Verdict>,
}

pub fn regularity_certificate(
    m: &Representation,
    u: &Representation,
    v: &Representation,
    witness: &SesWitness,
) -> Result<RegularityReport> {
    if !verify_witness(m, u, v, witness) {
        return Err(Error::UnverifiedWitness(
            "middle term of the witness is not isomorphic to M".into(),
        ));
    }
    let bound_quiver = m.algebra().bound();
    let small_model = require_small_model(m.algebra()).is_ok();
    let n = direct_sum(u, v);
    let mm_ext1 = ext1(m, m).dim();
    let mm_ext2 = ext2_via_omega(m, m)?.dim();
    let (vu_hom, vu_ext1, vu_ext2) = (hom_dim(v, u), ext1(v, u).dim(), ext2_via_omega(v, u)?.dim());
    let (uv_hom, uv_ext1, uv_ext2) = (hom_dim(u, v), ext1(u, v).dim(), ext2_via_omega(u, v)?.dim());
    let z_uv = z_space(u, v).dim();
    let z_vu = z_space(v, u).dim();
    let ext_tangent_dim = if small_model {
        Some(ext_tangent_pairs(u, v)?.dim())
    } else {
        None
    };
    let z_nn = z_space(&n, &n).dim();
    let a_d = a_of_d(bound_quiver, m.dims());
    let flags = HypothesisFlags {
        mm_ext1_zero: mm_ext1 == 0,
        mm_ext2_zero: mm_ext2 == 0,
        vu_hom_zero: vu_hom == 0,
        uv_ext1_zero: uv_ext1 == 0,
        uv_ext2_zero: uv_ext2 == 0,
        pd_m_le1: pd_le1(m),
        small_model,
    };
    let verdict = flags.all().then(|| {
        if z_nn as i64 == a_d {
            Verdict::RegularTangent
        } else {
            Verdict::TangentExcess
        }
    });
    Ok(RegularityReport {
        a_d1: a_of_d(bound_quiver, u.dims()),
        a_d2: a_of_d(bound_quiver, v.dims()),
        a_d,
        vu_hom,
        vu_ext1,
        vu_ext2,
        uv_hom,
        uv_ext1,
        uv_ext2,
        z_uv,
        z_vu,
        bound: ext_tangent_dim.map(|e| e + z_uv + z_vu),
        ext_tangent_dim,
        z_nn,
        orbit_dim_n: orbit_dim(&n).orbit_dim,
        flags,
        verdict,
    })
}

/// Dimensions over the dual numbers `R₀ = k[ε]/ε²` for the deformations
/// `M = U + εM̄` and `N = V + εN̄`, realised as block-doubled representations
/// `D(M)_α = [[U_α, M̄_α], [0, U_α]]` with `ε = [[0, 1], [0, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNumberReport {
    /// `[N, M]` over `R₀`, counted over `k`.
    pub hom_dim: usize,
    pub vu_hom: usize,
    /// `dim_k ℤ^{N,M}`.
    pub z_dim: usize,
    pub vu_z: usize,
}

impl DualNumberReport {
    pub fn hom_condition(&self) -> bool {
        self.hom_dim == 2 * self.vu_hom
    }
    pub fn ext_condition(&self) -> bool {
        self.z_dim == 2 * self.vu_z
    }
    pub fn member(&self) -> bool {
        self.hom_condition() && self.ext_condition()
    }
}

/// `[[a, b], [0, a]]` blocks from a pair of cochains.
fn toeplitz(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    a.iter()
        .zip(b)
        .map(|(x, y)| Matrix::block2(x, y, &Matrix::zeros(x.field(), x.rows(), x.cols()), x))
        .collect()
}

pub fn dual_number_oracle(
    u: &Representation,
    mbar: &ArrowCochain,
    v: &Representation,
    nbar: &ArrowCochain,
) -> Result<DualNumberReport> {
    let dm = middle_term(u, u, mbar)?.w;
    let dn = middle_term(v, v, nbar)?.w;
    let field = u.field();

    // R₀-linear maps D(N) → D(M) are [[f⁰, f¹], [0, f⁰]]
    let vs = vertex_shapes(v, u);
    let vlen = shapes_len(&vs);
    let hom = linear_matrix(field, 2 * vlen, shapes_len(&arrow_shapes(&dn, &dm)), |c| {
        let f0 = crate::homext::unflatten(field, &vs, &c[..vlen]);
        let f1 = crate::homext::unflatten(field, &vs, &c[vlen..]);
        crate::homext::flatten(&boundary(&dn, &dm, &toeplitz(&f0, &f1)))
    });
    let dual_hom = 2 * vlen - hom.rank();

    let as_ = arrow_shapes(v, u);
    let alen = shapes_len(&as_);
    let rel = relation_boundary_matrix(&dn, &dm);
    let big_shapes = arrow_shapes(&dn, &dm);
    let z = linear_matrix(field, 2 * alen, rel.rows(), |c| {
        let z0 = crate::homext::unflatten(field, &as_, &c[..alen]);
        let z1 = crate::homext::unflatten(field, &as_, &c[alen..]);
        let big = ArrowCochain(toeplitz(&z0, &z1));
        debug_assert_eq!(
            big.0.iter().map(Matrix::shape).collect::<Vec<_>>(),
            big_shapes
        );
        rel.mul_vec(&big.to_vector())
    });
    let z_dim = 2 * alen - z.rank();

    Ok(DualNumberReport {
        hom_dim: dual_hom,
        vu_hom: hom_dim(v, u),
        z_dim,
        vu_z: z_space(v, u).dim(),
    })
}
