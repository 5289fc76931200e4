//! Projective presentations, the two models of Ext², and Yoneda composition.
//!
//! `Ext²(N, M)` is modelled unconditionally as `Ext¹(Ω^N, M)` through the
//! presentation `0 → Ω^N → P^N → N → 0`, and, for acyclic algebras of
//! global dimension at most two, as the small model `ℝ^{N,M} / 𝔹′^{N,M}`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homext::{
    boundary, ext1, matrix_of, relation_boundary_matrix, relation_shapes, shapes_len, z_path,
    ArrowCochain, ExtSpace1, RelationCochain, Representation, VertexCochain,
};
use crate::linalg::{quotient, Field, Matrix, QuotientSpace, Scalar, SubspaceBasis};
use crate::quiver::{is_acyclic, Algebra, Path};

/// Coordinates of a path of positive length over `rad_basis(t, s)`.
pub(crate) fn rad_coords(alg: &Algebra, path: &Path) -> Vec<Scalar> {
    let b = alg.basis();
    let mut c = b.reduce(path);
    let (t, s) = (path.target(), path.source());
    if b.basis(t, s).first().is_some_and(Path::is_empty) {
        debug_assert!(c[0].is_zero(), "ideal inside rad²");
        c.remove(0);
    }
    c
}

/// A basis element `σ ⊗ n` with `σ` a basis path from `vertex` and `n` the
/// `vector`-th standard basis vector of `N_vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub vertex: usize,
    pub path: Path,
    pub vector: usize,
}

/// `0 → Ω^N → P^N → N → 0` over labelled bases.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub n: Representation,
    pub p: Representation,
    pub omega: Representation,
    /// `Ω^N → P^N`.
    pub f: VertexCochain,
    /// `P^N → N`.
    pub g: VertexCochain,
    p_labels: Vec<Vec<BasisLabel>>,
    omega_labels: Vec<Vec<BasisLabel>>,
    p_offsets: Vec<Vec<usize>>,
    omega_offsets: Vec<Vec<usize>>,
}

impl ProjPresentation {
    pub fn p_labels(&self, x: usize) -> &[BasisLabel] {
        &self.p_labels[x]
    }
    pub fn omega_labels(&self, x: usize) -> &[BasisLabel] {
        &self.omega_labels[x]
    }

    /// The vector `σ ⊗ e_n ∈ Ω_{tσ}` for a path `σ` of positive length from `y`,
    /// reduced in the radical basis.
    pub fn omega_vector(&self, path: &Path, n: usize) -> Vec<Scalar> {
        let alg = self.n.algebra();
        let (x, y) = (path.target(), path.source());
        let dy = self.n.dim(y);
        let mut v = vec![alg.field().zero(); self.omega.dim(x)];
        for (k, c) in rad_coords(alg, path).into_iter().enumerate() {
            v[self.omega_offsets[x][y] + k * dy + n] = c;
        }
        v
    }

    /// Index of `τ ⊗ e_n` in `P_x`, `τ` the `k`-th basis path `y → x`.
    pub fn p_index(&self, x: usize, y: usize, k: usize, n: usize) -> usize {
        self.p_offsets[x][y] + k * self.n.dim(y) + n
    }

    /// Index of `τ ⊗ e_n` in `Ω_x`, `τ` the `k`-th radical basis path `y → x`.
    pub fn omega_index(&self, x: usize, y: usize, k: usize, n: usize) -> usize {
        self.omega_offsets[x][y] + k * self.n.dim(y) + n
    }
}

fn labels_and_offsets(
    n: &Representation,
    paths: impl Fn(usize, usize) -> Vec<Path>,
) -> (Vec<Vec<BasisLabel>>, Vec<Vec<usize>>) {
    let nv = n.dims().len();
    let mut labels = Vec::with_capacity(nv);
    let mut offsets = Vec::with_capacity(nv);
    for x in 0..nv {
        let mut l = Vec::new();
        let mut o = Vec::with_capacity(nv);
        for y in 0..nv {
            o.push(l.len());
            for p in paths(x, y) {
                for v in 0..n.dim(y) {
                    l.push(BasisLabel {
                        vertex: y,
                        path: p.clone(),
                        vector: v,
                    });
                }
            }
        }
        labels.push(l);
        offsets.push(o);
    }
    (labels, offsets)
}

/// `P_x = ⊕_y xΛy ⊗ N_y`, `Ω_x = ⊕_y x(rad Λ)y ⊗ N_y` with the structure maps
/// `P_α(σ⊗n) = ασ⊗n`, `Ω_α(σ⊗n) = ασ⊗n − α⊗N_σ n`,
/// `f_x(σ⊗n) = σ⊗n − x⊗N_σ n`, `g_x(σ⊗n) = N_σ n`. Exactness is verified.
pub fn proj_presentation(n: &Representation) -> Result<ProjPresentation> {
    let alg = n.algebra().clone();
    let field = alg.field();
    let q = alg.quiver();
    let b = alg.basis();
    let nv = q.vertex_count();
    let (p_labels, p_offsets) = labels_and_offsets(n, |x, y| b.basis(x, y).to_vec());
    let (omega_labels, omega_offsets) = labels_and_offsets(n, |x, y| b.rad_basis(x, y).to_vec());
    let p_dims: Vec<usize> = p_labels.iter().map(Vec::len).collect();
    let o_dims: Vec<usize> = omega_labels.iter().map(Vec::len).collect();

    let mut p_maps = Vec::with_capacity(q.arrows().len());
    let mut o_maps = Vec::with_capacity(q.arrows().len());
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let alpha = Path::arrow(q, ai);
        let mut pm = Matrix::zeros(field, p_dims[t], p_dims[s]);
        for (col, l) in p_labels[s].iter().enumerate() {
            let ap = alpha.compose(&l.path).expect("composable");
            let dy = n.dim(l.vertex);
            for (k, c) in b.reduce(&ap).into_iter().enumerate() {
                if !c.is_zero() {
                    pm.set(p_offsets[t][l.vertex] + k * dy + l.vector, col, c);
                }
            }
        }
        p_maps.push(pm);

        let alpha_rad = rad_coords(&alg, &alpha);
        let mut om = Matrix::zeros(field, o_dims[t], o_dims[s]);
        for (col, l) in omega_labels[s].iter().enumerate() {
            let ap = alpha.compose(&l.path).expect("composable");
            let dy = n.dim(l.vertex);
            for (k, c) in rad_coords(&alg, &ap).into_iter().enumerate() {
                if !c.is_zero() {
                    let r = omega_offsets[t][l.vertex] + k * dy + l.vector;
                    let cur = om.get(r, col) + &c;
                    om.set(r, col, cur);
                }
            }
            let nv_ = n.eval_path(&l.path).column(l.vector);
            let ds = n.dim(s);
            for (k, d) in alpha_rad.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                for (i, vi) in nv_.iter().enumerate() {
                    if vi.is_zero() {
                        continue;
                    }
                    let r = omega_offsets[t][s] + k * ds + i;
                    let cur = om.get(r, col) - &(d * vi);
                    om.set(r, col, cur);
                }
            }
        }
        o_maps.push(om);
    }

    let mut f_parts = Vec::with_capacity(nv);
    let mut g_parts = Vec::with_capacity(nv);
    for x in 0..nv {
        let mut fx = Matrix::zeros(field, p_dims[x], o_dims[x]);
        for (col, l) in omega_labels[x].iter().enumerate() {
            let pos = b
                .basis(x, l.vertex)
                .iter()
                .position(|p| *p == l.path)
                .expect("rad basis inside basis");
            fx.set(p_offsets[x][l.vertex] + pos * n.dim(l.vertex) + l.vector, col, field.one());
            let v = n.eval_path(&l.path).column(l.vector);
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() {
                    // trivial path e_x sits at position 0 of basis(x, x)
                    let r = p_offsets[x][x] + i;
                    let cur = fx.get(r, col) - vi;
                    fx.set(r, col, cur);
                }
            }
        }
        f_parts.push(fx);
        let cols: Vec<Vec<Scalar>> = p_labels[x]
            .iter()
            .map(|l| n.eval_path(&l.path).column(l.vector))
            .collect();
        g_parts.push(Matrix::from_columns(field, n.dim(x), &cols));
    }

    let p = Representation::new(alg.clone(), p_dims, p_maps)?;
    let omega = Representation::new(alg.clone(), o_dims, o_maps)?;
    let pres = ProjPresentation {
        n: n.clone(),
        p,
        omega,
        f: VertexCochain(f_parts),
        g: VertexCochain(g_parts),
        p_labels,
        omega_labels,
        p_offsets,
        omega_offsets,
    };
    check_exact(&pres)?;
    Ok(pres)
}

fn check_exact(pres: &ProjPresentation) -> Result<()> {
    use crate::homext::is_morphism;
    let bad = |what: &str| Err(Error::InvalidRepresentation(format!("presentation: {what}")));
    if !is_morphism(&pres.omega, &pres.p, &pres.f) {
        return bad("f is not a morphism");
    }
    if !is_morphism(&pres.p, &pres.n, &pres.g) {
        return bad("g is not a morphism");
    }
    for x in 0..pres.n.dims().len() {
        let (f, g) = (&pres.f.0[x], &pres.g.0[x]);
        if f.rank() != f.cols() || g.rank() != g.rows() || !g.try_mul(f)?.is_zero() {
            return bad("sequence is not exact");
        }
        if f.cols() + g.rows() != f.rows() {
            return bad("dimensions do not add up");
        }
    }
    Ok(())
}

/// `Ext²(N, M)` as `Ext¹(Ω^N, M)`.
#[derive(Clone, Debug)]
pub struct OmegaExt2 {
    pub presentation: ProjPresentation,
    pub ext: ExtSpace1,
}

impl OmegaExt2 {
    pub fn dim(&self) -> usize {
        self.ext.dim()
    }
}

pub fn ext2_via_omega(n: &Representation, m: &Representation) -> Result<OmegaExt2> {
    let presentation = proj_presentation(n)?;
    let ext = ext1(&presentation.omega, m);
    Ok(OmegaExt2 { presentation, ext })
}

/// `Φ^{N,M}(Z)_ρ(n) = Σ_i Σ_{j<mᵢ} λᵢ M_{α_{i,1}⋯α_{i,j−1}} Z_{α_{i,j}}(α_{i,j+1}⋯α_{i,mᵢ} ⊗ n)`.
pub fn phi(pres: &ProjPresentation, m: &Representation, z: &ArrowCochain) -> RelationCochain {
    let n = &pres.n;
    let alg = n.algebra();
    let q = alg.quiver();
    let field = alg.field();
    let parts = alg
        .relations()
        .iter()
        .map(|rel| {
            let y = rel.source();
            let mut out = Matrix::zeros(field, m.dim(rel.target()), n.dim(y));
            for (lambda, path) in rel.terms() {
                let len = path.len();
                for j in 0..len.saturating_sub(1) {
                    let a = path.arrows()[j];
                    let prefix = m.eval_path(&path.slice(q, 0, j));
                    let rest = path.slice(q, j + 1, len);
                    let cols: Vec<Vec<Scalar>> = (0..n.dim(y))
                        .map(|v| z.0[a].mul_vec(&pres.omega_vector(&rest, v)))
                        .collect();
                    let zcol = Matrix::from_columns(field, m.dim(q.arrow(a).target), &cols);
                    let term = prefix.try_mul(&zcol).expect("shape").scale(lambda);
                    out = out.try_add(&term).expect("shape");
                }
            }
            out
        })
        .collect();
    RelationCochain(parts)
}

/// Matrix of `Φ^{N,M}` on all of `𝔸^{Ω^N,M}`.
pub fn phi_matrix(pres: &ProjPresentation, m: &Representation) -> Matrix {
    let shapes = crate::homext::arrow_shapes(&pres.omega, m);
    let out = shapes_len(&relation_shapes(&pres.n, m));
    matrix_of(m.field(), &shapes, out, |z| phi(pres, m, &ArrowCochain(z.to_vec())).to_vector())
}

/// `𝔹′^{N,M}`: image of `𝔸^{N,M} → ℝ^{N,M}`, `Z ↦ (Z_ρ^{N,M})`.
pub fn b_prime(n: &Representation, m: &Representation) -> SubspaceBasis {
    relation_boundary_matrix(n, m).image_basis()
}

/// `ℝ^{N,M} / 𝔹′^{N,M}`.
#[derive(Clone, Debug)]
pub struct Ext2Model {
    field: Field,
    shapes: Vec<(usize, usize)>,
    b_prime: SubspaceBasis,
    quotient: QuotientSpace,
}

impl Ext2Model {
    /// `[N, M]²`.
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
    pub fn ambient_dim(&self) -> usize {
        shapes_len(&self.shapes)
    }
    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.shapes
    }
    pub fn b_prime(&self) -> &SubspaceBasis {
        &self.b_prime
    }
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }
    pub fn class_of(&self, r: &RelationCochain) -> RelationCochain {
        RelationCochain::from_vector(self.field, &self.shapes, &self.quotient.reduce(&r.to_vector()))
    }
    pub fn is_zero_class(&self, r: &RelationCochain) -> bool {
        self.quotient.is_zero_class(&r.to_vector())
    }
    pub fn coordinates(&self, r: &RelationCochain) -> Vec<Scalar> {
        self.quotient.coordinates(&r.to_vector())
    }
}

/// Fails unless the quiver is acyclic and `gldim Λ ≤ 2`.
pub fn require_small_model(alg: &Arc<Algebra>) -> Result<()> {
    if !is_acyclic(alg.quiver()) {
        return Err(Error::HypothesesNotSatisfied("the quiver has an oriented cycle".into()));
    }
    if !gldim_le2_check(alg) {
        return Err(Error::HypothesesNotSatisfied("global dimension exceeds 2".into()));
    }
    Ok(())
}

pub fn ext2_small_model(n: &Representation, m: &Representation) -> Result<Ext2Model> {
    require_small_model(n.algebra())?;
    Ok(ext2_model_unchecked(n, m))
}

pub(crate) fn ext2_model_unchecked(n: &Representation, m: &Representation) -> Ext2Model {
    let shapes = relation_shapes(n, m);
    let b = b_prime(n, m);
    let quotient = quotient(shapes_len(&shapes), &b);
    Ext2Model {
        field: n.field(),
        shapes,
        b_prime: b,
        quotient,
    }
}

/// `(Z′ ∘ Z″)_ρ = Σ_i λᵢ Σ_{j₁<j₂} U_{…} Z′_{α_{j₁}} V_{…} Z″_{α_{j₂}} W_{…}` for
/// `Z′ ∈ ℤ^{V,U}`, `Z″ ∈ ℤ^{W,V}`; the result lies in `ℝ^{W,U}`.
pub fn compose_cocycles(
    z1: &ArrowCochain,
    z2: &ArrowCochain,
    u: &Representation,
    v: &Representation,
    w: &Representation,
) -> RelationCochain {
    let alg = u.algebra();
    let q = alg.quiver();
    let field = alg.field();
    let parts = alg
        .relations()
        .iter()
        .map(|rel| {
            let mut out = Matrix::zeros(field, u.dim(rel.target()), w.dim(rel.source()));
            for (lambda, path) in rel.terms() {
                let len = path.len();
                for j1 in 0..len {
                    let left = u
                        .eval_path(&path.slice(q, 0, j1))
                        .try_mul(&z1.0[path.arrows()[j1]])
                        .expect("shape");
                    for j2 in j1 + 1..len {
                        let term = left
                            .try_mul(&v.eval_path(&path.slice(q, j1 + 1, j2)))
                            .and_then(|x| x.try_mul(&z2.0[path.arrows()[j2]]))
                            .and_then(|x| x.try_mul(&w.eval_path(&path.slice(q, j2 + 1, len))))
                            .expect("shape");
                        out = out.try_add(&term.scale(lambda)).expect("shape");
                    }
                }
            }
            out
        })
        .collect();
    RelationCochain(parts)
}

/// `[Z′] ↦ [Z ∘ Z′]` from `Ext¹(V, U)` to `Ext²(V, M)` for `Z ∈ ℤ^{U,M}`.
pub fn yoneda_left(
    z: &ArrowCochain,
    zp: &ArrowCochain,
    m: &Representation,
    u: &Representation,
    v: &Representation,
) -> Result<RelationCochain> {
    let model = ext2_small_model(v, m)?;
    Ok(model.class_of(&compose_cocycles(z, zp, m, u, v)))
}

/// `[Z′] ↦ [Z′ ∘ Z]` from `Ext¹(V, U)` to `Ext²(M, U)` for `Z ∈ ℤ^{M,V}`.
pub fn yoneda_right(
    zp: &ArrowCochain,
    z: &ArrowCochain,
    u: &Representation,
    v: &Representation,
    m: &Representation,
) -> Result<RelationCochain> {
    let model = ext2_small_model(m, u)?;
    Ok(model.class_of(&compose_cocycles(zp, z, u, v, m)))
}

/// `Z″_α(σ ⊗ e) = A_α B_σ e` over the radical basis labels of `Ω_{sα}`.
fn omega_cochain(
    pres: &ProjPresentation,
    outer: &ArrowCochain,
    inner: &ArrowCochain,
    inner_src: &Representation,
    inner_tgt: &Representation,
) -> ArrowCochain {
    let alg = pres.n.algebra();
    let q = alg.quiver();
    let field = alg.field();
    ArrowCochain(
        q.arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let cols: Vec<Vec<Scalar>> = pres
                    .omega_labels(a.source)
                    .iter()
                    .map(|l| {
                        let zs = z_path(&inner.0, inner_src, inner_tgt, &l.path);
                        outer.0[ai].mul_vec(&zs.column(l.vector))
                    })
                    .collect();
                Matrix::from_columns(field, outer.0[ai].rows(), &cols)
            })
            .collect(),
    )
}

/// Ω-model image of `[Z′] ↦ [ξ^Z ∘ ξ']` in `Ext¹(Ω^V, M)`, `Z ∈ ℤ^{U,M}`, `Z′ ∈ ℤ^{V,U}`.
pub fn yoneda_left_omega(
    z: &ArrowCochain,
    zp: &ArrowCochain,
    pres_v: &ProjPresentation,
    u: &Representation,
    m: &Representation,
) -> ArrowCochain {
    let raw = omega_cochain(pres_v, z, zp, &pres_v.n, u);
    ext1(&pres_v.omega, m).class_of(&raw)
}

/// Ω-model image of `[Z′] ↦ [ξ' ∘ ξ^Z]` in `Ext¹(Ω^M, U)`, `Z′ ∈ ℤ^{V,U}`, `Z ∈ ℤ^{M,V}`.
pub fn yoneda_right_omega(
    zp: &ArrowCochain,
    z: &ArrowCochain,
    pres_m: &ProjPresentation,
    v: &Representation,
    u: &Representation,
) -> ArrowCochain {
    let raw = omega_cochain(pres_m, zp, z, &pres_m.n, v);
    ext1(&pres_m.omega, u).class_of(&raw)
}

/// For `Z ∈ Ker Φ^{N,M}`, the vertex cochain `h` with `Z_α = M_α h_{sα} − h_{tα} Ω_α`,
/// built recursively: `h(α⊗n) = 0`, `h(ασ′⊗n) = M_α h(σ′⊗n) − Z_α(σ′⊗n)`.
/// Returns `None` when the recursion cannot be carried out or `h` fails to
/// reproduce `Z`.
pub fn kernel_containment_h(pres: &ProjPresentation, m: &Representation, z: &ArrowCochain) -> Option<VertexCochain> {
    let alg = pres.n.algebra();
    let q = alg.quiver();
    let b = alg.basis();
    let field = alg.field();
    let nv = q.vertex_count();
    let mut h: Vec<Matrix> = (0..nv)
        .map(|x| Matrix::zeros(field, m.dim(x), pres.omega.dim(x)))
        .collect();
    // labels sorted by path length so suffixes are filled first
    let mut order: Vec<(usize, usize)> = (0..nv)
        .flat_map(|x| (0..pres.omega_labels(x).len()).map(move |i| (x, i)))
        .collect();
    order.sort_by_key(|&(x, i)| pres.omega_labels(x)[i].path.len());
    for (x, i) in order {
        let l = &pres.omega_labels(x)[i];
        if l.path.len() == 1 {
            continue;
        }
        let a = l.path.arrows()[0];
        let s = q.arrow(a).source;
        let rest = l.path.slice(q, 1, l.path.len());
        let k = b.rad_basis(s, l.vertex).iter().position(|p| *p == rest)?;
        let idx = pres.omega_index(s, l.vertex, k, l.vector);
        let hs = h[s].column(idx);
        let mh = m.map(a).mul_vec(&hs);
        let zc = z.0[a].column(idx);
        for (r, (p, zz)) in mh.iter().zip(&zc).enumerate() {
            h[x].set(r, i, p - zz);
        }
    }
    let rebuilt = boundary(&pres.omega, m, &h);
    (rebuilt == z.0).then_some(VertexCochain(h))
}

/// Generators of `M / rad M` at each vertex, as vectors of `M_x` completing a
/// basis of `rad M_x = Σ_{tα = x} Im M_α`.
pub fn top_generators(m: &Representation) -> Vec<Vec<Vec<Scalar>>> {
    let alg = m.algebra();
    let q = alg.quiver();
    let field = alg.field();
    (0..q.vertex_count())
        .map(|x| {
            let d = m.dim(x);
            let mut span: Vec<Vec<Scalar>> = q
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == x)
                .flat_map(|(i, _)| {
                    let mm = m.map(i);
                    (0..mm.cols()).map(move |j| mm.column(j))
                })
                .collect();
            let mut sub = SubspaceBasis::span(field, d, span.clone());
            let mut gens = Vec::new();
            for i in 0..d {
                let mut e = vec![field.zero(); d];
                e[i] = field.one();
                if !sub.contains(&e) {
                    span.push(e.clone());
                    gens.push(e);
                    sub = SubspaceBasis::span(field, d, span.clone());
                }
            }
            gens
        })
        .collect()
}

pub fn top_dims(m: &Representation) -> Vec<usize> {
    top_generators(m).iter().map(Vec::len).collect()
}

/// `Λe_x`, with basis `basis(z, x)` at each vertex `z`.
pub fn indecomposable_projective(alg: &Arc<Algebra>, x: usize) -> Representation {
    proj_presentation(&Representation::simple(alg.clone(), x))
        .expect("presentation of a simple module")
        .p
}

/// Projective cover `π : ⊕_x (Λe_x)^{m_x} → M` built from the top generators.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub p: Representation,
    pub pi: VertexCochain,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let alg = m.algebra();
    let field = alg.field();
    let b = alg.basis();
    let nv = alg.vertex_count();
    let gens = top_generators(m);
    let mut p = Representation::zero(alg.clone());
    let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); nv];
    for (x, gx) in gens.iter().enumerate() {
        if gx.is_empty() {
            continue;
        }
        let px = indecomposable_projective(alg, x);
        for g in gx {
            p = crate::homext::direct_sum(&p, &px);
            for (z, cz) in cols.iter_mut().enumerate() {
                for path in b.basis(z, x) {
                    cz.push(m.eval_path(path).mul_vec(g));
                }
            }
        }
    }
    let pi = VertexCochain(
        cols.iter()
            .enumerate()
            .map(|(z, c)| Matrix::from_columns(field, m.dim(z), c))
            .collect(),
    );
    debug_assert!(crate::homext::is_morphism(&p, m, &pi));
    ProjectiveCover { p, pi }
}

/// Kernel of a morphism as a subrepresentation of its source, with inclusion.
pub fn kernel_module(src: &Representation, map: &VertexCochain) -> (Representation, VertexCochain) {
    let alg = src.algebra();
    let field = alg.field();
    let bases: Vec<Matrix> = map.0.iter().map(|f| f.kernel_basis().as_columns()).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let bs = &bases[a.source];
            let cols: Vec<Vec<Scalar>> = (0..bs.cols())
                .map(|j| {
                    let img = src.map(i).mul_vec(&bs.column(j));
                    bases[a.target]
                        .solve(&img)
                        .expect("shape")
                        .expect("kernel is a subrepresentation")
                })
                .collect();
            Matrix::from_columns(field, dims[a.target], &cols)
        })
        .collect();
    let k = Representation::unchecked(alg.clone(), dims, maps).expect("kernel shapes");
    (k, VertexCochain(bases))
}

/// Kernel of the projective cover.
pub fn syzygy(m: &Representation) -> Representation {
    let cover = projective_cover(m);
    kernel_module(&cover.p, &cover.pi).0
}

/// `M` is projective iff its projective cover (always surjective) has the
/// same dimension vector, i.e. is an isomorphism.
pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).p.dims() == m.dims()
}

/// `gldim Λ ≤ 2` iff the second syzygy of every simple module is projective.
pub fn gldim_le2_check(alg: &Arc<Algebra>) -> bool {
    if let Some(&v) = alg.gldim_le2_cache().get() {
        return v;
    }
    let ok = (0..alg.vertex_count()).all(|x| {
        let s = Representation::simple(alg.clone(), x);
        is_projective(&syzygy(&syzygy(&s)))
    });
    *alg.gldim_le2_cache().get_or_init(|| ok)
}
