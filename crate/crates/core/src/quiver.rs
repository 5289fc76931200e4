//! Bound quivers, paths, truncated path-algebra bases and the
//! combinatorial forms on dimension vectors.
//!
//! Paths are written in composition order: in `α₁⋯αₙ` the arrow `αₙ` acts
//! first, so consecutive arrows satisfy `s(αᵢ) = t(αᵢ₊₁)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{quotient, Field, QuotientSpace, Scalar, SubspaceBasis};

pub const DEFAULT_TRUNCATION_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source, target)` triples naming declared vertices.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let lookup = |name: &str| vertices.iter().position(|v| v == name);
        let mut names = HashSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            let source = lookup(&s).ok_or_else(|| {
                Error::InvalidQuiver(format!("arrow `{name}` starts at undeclared vertex `{s}`"))
            })?;
            let target = lookup(&t).ok_or_else(|| {
                Error::InvalidQuiver(format!("arrow `{name}` ends at undeclared vertex `{t}`"))
            })?;
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path `α₁⋯αₙ`; the empty arrow list is the trivial path at `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn new(quiver: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver("empty arrow list; use a trivial path".into()));
        };
        for w in arrows.windows(2) {
            let (a, b) = (quiver.arrow(w[0]), quiver.arrow(w[1]));
            if a.source != b.target {
                return Err(Error::InvalidQuiver(format!(
                    "`{}*{}` is not composable",
                    a.name, b.name
                )));
            }
        }
        let last = *arrows.last().expect("nonempty");
        Ok(Path {
            source: quiver.arrow(last).source,
            target: quiver.arrow(first).target,
            arrows,
        })
    }

    pub fn arrow(quiver: &Quiver, a: usize) -> Path {
        Path {
            source: quiver.arrow(a).source,
            target: quiver.arrow(a).target,
            arrows: vec![a],
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }
    pub fn target(&self) -> usize {
        self.target
    }
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · rhs`: apply `rhs` first. Requires `s(self) = t(rhs)`.
    pub fn compose(&self, rhs: &Path) -> Option<Path> {
        if self.source != rhs.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&rhs.arrows);
        Some(Path {
            source: rhs.source,
            target: self.target,
            arrows,
        })
    }

    /// Sub-path `αᵢ⋯αⱼ₋₁` (0-based half-open); `start == end` gives the
    /// trivial path at the junction vertex.
    pub fn slice(&self, quiver: &Quiver, start: usize, end: usize) -> Path {
        assert!(start <= end && end <= self.len());
        if start == end {
            let v = if start == 0 {
                self.target
            } else {
                quiver.arrow(self.arrows[start - 1]).source
            };
            return Path::trivial(v);
        }
        let arrows = self.arrows[start..end].to_vec();
        Path {
            source: quiver.arrow(arrows[arrows.len() - 1]).source,
            target: quiver.arrow(arrows[0]).target,
            arrows,
        }
    }

    /// Ordering key: length first, then arrow names.
    pub fn order_key<'q>(&self, quiver: &'q Quiver) -> (usize, Vec<&'q str>) {
        (
            self.len(),
            self.arrows.iter().map(|&a| quiver.arrow(a).name.as_str()).collect(),
        )
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }

    fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            source: self.target,
            target: self.source,
            arrows,
        }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "e_{}", self.quiver.vertices[self.path.source]);
        }
        let names: Vec<&str> = self
            .path
            .arrows
            .iter()
            .map(|&a| self.quiver.arrow(a).name.as_str())
            .collect();
        write!(f, "{}", names.join("*"))
    }
}

/// `Σ λᵢ σᵢ` with parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    terms: Vec<(Scalar, Path)>,
    source: usize,
    target: usize,
}

impl Relation {
    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }
    pub fn source(&self) -> usize {
        self.source
    }
    pub fn target(&self) -> usize {
        self.target
    }
}

/// Unvalidated path as it appears in user input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawPath {
    Trivial(String),
    Arrows(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRelation {
    pub name: String,
    pub terms: Vec<(Scalar, RawPath)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBoundQuiver {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<RawRelation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
}

/// Checks the structural invariants of a quiver with relations.
pub fn validate_bound_quiver(raw: &RawBoundQuiver) -> Result<BoundQuiver> {
    let quiver = Quiver::new(raw.vertices.clone(), raw.arrows.clone())?;
    let mut names = HashSet::new();
    let mut relations = Vec::new();
    for r in &raw.relations {
        if !names.insert(r.name.as_str()) {
            return Err(Error::InvalidQuiver(format!("duplicate relation `{}`", r.name)));
        }
        let mut terms: Vec<(Scalar, Path)> = Vec::new();
        for (coeff, raw_path) in &r.terms {
            let path = match raw_path {
                RawPath::Trivial(v) => {
                    if quiver.vertex_index(v).is_none() {
                        return Err(Error::InvalidQuiver(format!("unknown vertex `{v}`")));
                    }
                    return Err(Error::InvalidQuiver(format!(
                        "relation `{}` has a term of length 0 (e_{v}); terms need length >= 2",
                        r.name
                    )));
                }
                RawPath::Arrows(names) => {
                    let ids = names
                        .iter()
                        .map(|n| {
                            quiver.arrow_index(n).ok_or_else(|| {
                                Error::InvalidQuiver(format!("unknown arrow `{n}` in relation `{}`", r.name))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Path::new(&quiver, ids)?
                }
            };
            if path.len() < 2 {
                return Err(Error::InvalidQuiver(format!(
                    "relation `{}` has a term `{}` of length {}; terms need length >= 2",
                    r.name,
                    path.display(&quiver),
                    path.len()
                )));
            }
            if let Some(existing) = terms.iter_mut().find(|(_, p)| *p == path) {
                existing.0 = &existing.0 + coeff;
            } else {
                terms.push((coeff.clone(), path));
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidQuiver(format!("relation `{}` is zero", r.name)));
        };
        let (source, target) = (first.source(), first.target());
        if terms.iter().any(|(_, p)| p.source() != source || p.target() != target) {
            return Err(Error::InvalidQuiver(format!(
                "relation `{}` has non-parallel terms",
                r.name
            )));
        }
        relations.push(Relation {
            name: r.name.clone(),
            terms,
            source,
            target,
        });
    }
    Ok(BoundQuiver {
        field: raw.field,
        quiver,
        relations,
    })
}

impl BoundQuiver {
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The same quiver and relations with relations `skip` removed.
    pub fn without_relation(&self, skip: usize) -> BoundQuiver {
        let mut b = self.clone();
        b.relations.remove(skip);
        b
    }

    /// Reversed arrows, reversed relation paths.
    pub fn opposite(&self) -> BoundQuiver {
        BoundQuiver {
            field: self.field,
            quiver: self.quiver.opposite(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    name: r.name.clone(),
                    terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect(),
                    source: r.target,
                    target: r.source,
                })
                .collect(),
        }
    }

    /// Same quiver and relations over another field. Coefficients must be
    /// integers (or invertible denominators) in the target field.
    pub fn with_field(&self, field: Field) -> Result<BoundQuiver> {
        let mut b = self.clone();
        b.field = field;
        for r in &mut b.relations {
            for (c, _) in &mut r.terms {
                *c = convert_scalar(c, field)?;
            }
            r.terms.retain(|(c, _)| !c.is_zero());
            if r.terms.is_empty() {
                return Err(Error::InvalidQuiver(format!(
                    "relation `{}` vanishes over {field}",
                    r.name
                )));
            }
        }
        Ok(b)
    }

    pub fn raw(&self) -> RawBoundQuiver {
        let q = &self.quiver;
        RawBoundQuiver {
            field: self.field,
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone()))
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RawRelation {
                    name: r.name.clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| {
                            (
                                c.clone(),
                                RawPath::Arrows(p.arrows.iter().map(|&a| q.arrow(a).name.clone()).collect()),
                            )
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Converts a scalar into another field (rational → prime reduces mod p).
pub fn convert_scalar(s: &Scalar, field: Field) -> Result<Scalar> {
    match s {
        Scalar::Q(q) => field.from_ratio(q.numer(), q.denom()).ok_or_else(|| {
            Error::InvalidField(format!("{s} has no image in {field}"))
        }),
        Scalar::Fp { modulus, .. } => {
            if Field::Prime(*modulus) == field {
                Ok(s.clone())
            } else {
                Err(Error::InvalidField(format!("cannot move F{modulus} values into {field}")))
            }
        }
    }
}

/// All paths of length at most `level`, grouped by `(target, source)`
/// and sorted by [`Path::order_key`].
fn paths_up_to(quiver: &Quiver, level: usize) -> BTreeMap<(usize, usize), Vec<Path>> {
    let mut out: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
    let mut frontier: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    for len in 0..=level {
        for p in &frontier {
            out.entry((p.target, p.source)).or_default().push(p.clone());
        }
        if len == level {
            break;
        }
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source == p.target {
                    next.push(Path::arrow(quiver, ai).compose(p).expect("composable"));
                }
            }
        }
        frontier = next;
    }
    for paths in out.values_mut() {
        paths.sort_by(|a, b| a.order_key(quiver).cmp(&b.order_key(quiver)));
    }
    out
}

/// Span of the ideal generated by the relations inside the path space
/// truncated at `level` (longer terms dropped), one block per vertex pair.
#[derive(Clone, Debug)]
struct TruncatedIdeal {
    level: usize,
    blocks: BTreeMap<(usize, usize), Block>,
}

#[derive(Clone, Debug)]
struct Block {
    /// Ascending by order key.
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Coordinates are reversed (largest path first) so RREF pivots on the
    /// largest paths and the standard paths are the smallest.
    quotient: QuotientSpace,
    /// Indices into `paths` of the standard (basis) paths, ascending.
    standard: Vec<usize>,
}

impl TruncatedIdeal {
    fn build(bound: &BoundQuiver, level: usize) -> TruncatedIdeal {
        let quiver = &bound.quiver;
        let field = bound.field;
        let all = paths_up_to(quiver, level);
        let mut generators: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
        let empty = Vec::new();
        for rel in &bound.relations {
            let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            if min_len > level {
                continue;
            }
            let budget = level - min_len;
            // q: paths ending at s(ρ); p: paths starting at t(ρ)
            let rights: Vec<&Path> = all
                .iter()
                .filter(|((t, _), _)| *t == rel.source)
                .flat_map(|(_, v)| v.iter())
                .filter(|p| p.len() <= budget)
                .collect();
            let lefts: Vec<&Path> = all
                .iter()
                .filter(|((_, s), _)| *s == rel.target)
                .flat_map(|(_, v)| v.iter())
                .filter(|p| p.len() <= budget)
                .collect();
            for q in &rights {
                for p in &lefts {
                    if p.len() + q.len() > budget {
                        continue;
                    }
                    let key = (p.target, q.source);
                    let paths = all.get(&key).unwrap_or(&empty);
                    let n = paths.len();
                    let mut v = vec![field.zero(); n];
                    let mut any = false;
                    for (c, sigma) in &rel.terms {
                        let w = p.compose(sigma).and_then(|x| x.compose(q)).expect("composable");
                        if w.len() > level {
                            continue;
                        }
                        let i = paths.iter().position(|x| *x == w).expect("enumerated");
                        let col = n - 1 - i;
                        v[col] = &v[col] + c;
                        any = true;
                    }
                    if any {
                        generators.entry(key).or_default().push(v);
                    }
                }
            }
        }
        let blocks = all
            .into_iter()
            .map(|(key, paths)| {
                let n = paths.len();
                let gens = generators.remove(&key).unwrap_or_default();
                let sub = SubspaceBasis::span(field, n, gens);
                let quotient = quotient(n, &sub);
                let pivot_free: HashSet<usize> = {
                    let mut set = HashSet::new();
                    for i in 0..n {
                        let mut e = vec![field.zero(); n];
                        e[n - 1 - i] = field.one();
                        // a path is standard iff its unit vector is already reduced
                        if quotient.reduce(&e) == e {
                            set.insert(i);
                        }
                    }
                    set
                };
                let mut standard: Vec<usize> = pivot_free.into_iter().collect();
                standard.sort_unstable();
                let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
                (
                    key,
                    Block {
                        paths,
                        index,
                        quotient,
                        standard,
                    },
                )
            })
            .collect();
        TruncatedIdeal { level, blocks }
    }

    /// Whether every path of length exactly `level` lies in the span.
    fn kills_top_level(&self) -> bool {
        self.blocks.values().all(|b| {
            b.paths
                .iter()
                .enumerate()
                .filter(|(_, p)| p.len() == self.level)
                .all(|(i, _)| !b.standard.contains(&i))
        })
    }

    fn quotient_dim(&self) -> usize {
        self.blocks.values().map(|b| b.standard.len()).sum()
    }
}

/// Smallest level `L ≤ cap` at which every length-`L` path lies in the
/// ideal, or `None`.
pub fn admissibility_check(bound: &BoundQuiver, cap: usize) -> Option<usize> {
    (1..=cap).find(|&l| TruncatedIdeal::build(bound, l).kills_top_level())
}

/// Dimension of the truncated quotient at an arbitrary level; used to
/// check that the basis is stable above the admissibility level.
pub fn truncated_quotient_dim(bound: &BoundQuiver, level: usize) -> usize {
    TruncatedIdeal::build(bound, level).quotient_dim()
}

/// Bases of `xΛy` and `x(rad Λ)y` with a reduction map for paths.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    field: Field,
    level: usize,
    exact: bool,
    ideal: TruncatedIdeal,
    basis: BTreeMap<(usize, usize), Vec<Path>>,
}

pub fn algebra_basis(bound: &BoundQuiver, cap: usize) -> Result<AlgebraBasis> {
    for level in 1..=cap {
        let ideal = TruncatedIdeal::build(bound, level);
        if ideal.kills_top_level() {
            let basis = ideal
                .blocks
                .iter()
                .map(|(k, b)| (*k, b.standard.iter().map(|&i| b.paths[i].clone()).collect()))
                .collect();
            let homogeneous = bound.relations.iter().all(|r| {
                r.terms.iter().all(|(_, p)| p.len() == r.terms[0].1.len())
            });
            return Ok(AlgebraBasis {
                field: bound.field,
                level,
                exact: homogeneous || is_acyclic(&bound.quiver),
                ideal,
                basis,
            });
        }
    }
    Err(Error::AdmissibilityExceeded { cap })
}

impl AlgebraBasis {
    pub fn level(&self) -> usize {
        self.level
    }

    /// False only for inhomogeneous relations on a quiver with oriented
    /// cycles, where the truncated span certifies membership modulo
    /// arbitrarily long paths rather than in the ideal itself.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Basis of `xΛy` (paths from `y` to `x`), ascending.
    pub fn basis(&self, x: usize, y: usize) -> &[Path] {
        self.basis.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Basis of `x(rad Λ)y`: the basis paths of positive length.
    pub fn rad_basis(&self, x: usize, y: usize) -> &[Path] {
        let b = self.basis(x, y);
        if x == y && b.first().is_some_and(Path::is_empty) {
            &b[1..]
        } else {
            b
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    /// Coefficients of `path` over `basis(t, s)`.
    pub fn reduce(&self, path: &Path) -> Vec<Scalar> {
        let key = (path.target, path.source);
        let out_len = self.basis(key.0, key.1).len();
        let Some(block) = self.ideal.blocks.get(&key) else {
            return vec![self.field.zero(); out_len];
        };
        let Some(&i) = block.index.get(path) else {
            // longer than the truncation level
            return vec![self.field.zero(); out_len];
        };
        let n = block.paths.len();
        let mut e = vec![self.field.zero(); n];
        e[n - 1 - i] = self.field.one();
        let r = block.quotient.reduce(&e);
        block.standard.iter().map(|&j| r[n - 1 - j].clone()).collect()
    }

    /// Coefficients of a relation element over `basis(t_ρ, s_ρ)`.
    pub fn reduce_relation(&self, rel: &Relation) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.basis(rel.target, rel.source).len()];
        for (c, p) in &rel.terms {
            for (o, v) in out.iter_mut().zip(self.reduce(p)) {
                *o = &*o + &(c * &v);
            }
        }
        out
    }
}

/// A bound quiver together with its algebra basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    bound: BoundQuiver,
    basis: AlgebraBasis,
    cap: usize,
    gldim_le2: OnceLock<bool>,
}

impl Algebra {
    pub fn new(bound: BoundQuiver, cap: usize) -> Result<Algebra> {
        let basis = algebra_basis(&bound, cap)?;
        Ok(Algebra {
            bound,
            basis,
            cap,
            gldim_le2: OnceLock::new(),
        })
    }
    pub fn truncation_cap(&self) -> usize {
        self.cap
    }
    pub(crate) fn gldim_le2_cache(&self) -> &OnceLock<bool> {
        &self.gldim_le2
    }
    pub fn bound(&self) -> &BoundQuiver {
        &self.bound
    }
    pub fn quiver(&self) -> &Quiver {
        &self.bound.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.bound.relations
    }
    pub fn field(&self) -> Field {
        self.bound.field
    }
    pub fn basis(&self) -> &AlgebraBasis {
        &self.basis
    }
    pub fn vertex_count(&self) -> usize {
        self.bound.quiver.vertex_count()
    }
}

/// For each relation, whether it is outside the ideal generated by the others.
pub fn minimality_check(bound: &BoundQuiver, cap: usize) -> Result<Vec<(String, bool)>> {
    bound
        .relations
        .iter()
        .enumerate()
        .map(|(i, rel)| {
            let rest = bound.without_relation(i);
            let basis = algebra_basis(&rest, cap)?;
            let minimal = basis.reduce_relation(rel).iter().any(|c| !c.is_zero());
            Ok((rel.name.clone(), minimal))
        })
        .collect()
}

pub fn is_acyclic(quiver: &Quiver) -> bool {
    // Kahn's algorithm
    let n = quiver.vertex_count();
    let mut indeg = vec![0usize; n];
    for a in &quiver.arrows {
        indeg[a.target] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for a in quiver.arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                stack.push(a.target);
            }
        }
    }
    seen == n
}

/// A dimension vector, indexed by vertex declaration order.
pub type DimensionVector = Vec<usize>;

fn check_len(bound: &BoundQuiver, d: &[usize]) {
    assert_eq!(
        d.len(),
        bound.quiver.vertex_count(),
        "dimension vector must cover every vertex"
    );
}

/// `Σ_x d1_x d2_x − Σ_α d1_{s α} d2_{t α} + Σ_ρ d1_{s ρ} d2_{t ρ}`.
pub fn euler_form(bound: &BoundQuiver, d1: &[usize], d2: &[usize]) -> i64 {
    check_len(bound, d1);
    check_len(bound, d2);
    let vertices: i64 = d1.iter().zip(d2).map(|(a, b)| (a * b) as i64).sum();
    vertices - mixed_a_form(bound, d1, d2)
}

pub fn chi(bound: &BoundQuiver, d: &[usize]) -> i64 {
    euler_form(bound, d, d)
}

/// `Σ_α d_{s α} d_{t α} − Σ_ρ d_{s ρ} d_{t ρ}`.
pub fn a_of_d(bound: &BoundQuiver, d: &[usize]) -> i64 {
    mixed_a_form(bound, d, d)
}

/// Bilinear form whose diagonal is `a(d)`.
pub fn mixed_a_form(bound: &BoundQuiver, d1: &[usize], d2: &[usize]) -> i64 {
    check_len(bound, d1);
    check_len(bound, d2);
    let arrows: i64 = bound
        .quiver
        .arrows
        .iter()
        .map(|a| (d1[a.source] * d2[a.target]) as i64)
        .sum();
    let relations: i64 = bound
        .relations
        .iter()
        .map(|r| (d1[r.source] * d2[r.target]) as i64)
        .sum();
    arrows - relations
}

pub fn gl_dim(d: &[usize]) -> i64 {
    d.iter().map(|&x| (x * x) as i64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn raw(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: Vec<RawRelation>) -> RawBoundQuiver {
        RawBoundQuiver {
            field: Q,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
                .collect(),
            relations: rels,
        }
    }

    fn rel(name: &str, terms: &[(i64, &[&str])]) -> RawRelation {
        RawRelation {
            name: name.into(),
            terms: terms
                .iter()
                .map(|(c, p)| (Q.from_i64(*c), RawPath::Arrows(p.iter().map(|s| s.to_string()).collect())))
                .collect(),
        }
    }

    fn f1() -> BoundQuiver {
        validate_bound_quiver(&raw(&["1", "2"], &[("a", "2", "1")], vec![])).unwrap()
    }

    fn f2_raw(rels: Vec<RawRelation>) -> RawBoundQuiver {
        raw(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")], rels)
    }

    fn f2() -> BoundQuiver {
        validate_bound_quiver(&f2_raw(vec![rel("r", &[(1, &["a", "b"])])])).unwrap()
    }

    fn f3() -> BoundQuiver {
        validate_bound_quiver(&raw(
            &["1", "2", "3", "4"],
            &[("a", "2", "1"), ("b", "4", "2"), ("c", "3", "1"), ("d", "4", "3")],
            vec![rel("r", &[(1, &["a", "b"]), (-1, &["c", "d"])])],
        ))
        .unwrap()
    }

    fn looped() -> BoundQuiver {
        validate_bound_quiver(&raw(&["1"], &[("l", "1", "1")], vec![])).unwrap()
    }

    #[test]
    fn validation_errors() {
        let bad = RawRelation {
            name: "r".into(),
            terms: vec![
                (Q.one(), RawPath::Arrows(vec!["a".into()])),
                (Q.one(), RawPath::Trivial("1".into())),
            ],
        };
        assert!(validate_bound_quiver(&f2_raw(vec![bad])).is_err());
        assert!(validate_bound_quiver(&raw(&["1"], &[("a", "2", "1")], vec![])).is_err());
        let nonparallel = rel("r", &[(1, &["a", "b"]), (1, &["b"])]);
        assert!(validate_bound_quiver(&f2_raw(vec![nonparallel])).is_err());
        let not_composable = rel("r", &[(1, &["b", "a"])]);
        assert!(validate_bound_quiver(&f2_raw(vec![not_composable])).is_err());
    }

    #[test]
    fn f2_basis() {
        let b = algebra_basis(&f2(), 8).unwrap();
        assert_eq!(b.level(), 2);
        assert!(b.basis(0, 2).is_empty());
        assert_eq!(b.basis(0, 0), &[Path::trivial(0)]);
        assert_eq!(b.dim(), 5);
    }

    #[test]
    fn f1_basis() {
        let q = f1();
        let b = algebra_basis(&q, 8).unwrap();
        let a = Path::arrow(q.quiver(), 0);
        assert_eq!(b.basis(0, 1), &[a.clone()]);
        assert_eq!(b.rad_basis(0, 1), &[a]);
        assert!(b.rad_basis(0, 0).is_empty());
    }

    #[test]
    fn hereditary_a3_basis() {
        let q = validate_bound_quiver(&f2_raw(vec![])).unwrap();
        let b = algebra_basis(&q, 8).unwrap();
        let ab = Path::new(q.quiver(), vec![0, 1]).unwrap();
        assert_eq!(b.basis(0, 2), &[ab]);
        assert_eq!(b.level(), 3);
    }

    #[test]
    fn f3_commutativity_basis() {
        let q = f3();
        let b = algebra_basis(&q, 8).unwrap();
        // ab and cd are identified; the smaller path ab survives
        let ab = Path::new(q.quiver(), vec![0, 1]).unwrap();
        let cd = Path::new(q.quiver(), vec![2, 3]).unwrap();
        assert_eq!(b.basis(0, 3), &[ab]);
        assert_eq!(b.reduce(&cd), vec![Q.one()]);
        for r in q.relations() {
            assert!(b.reduce_relation(r).iter().all(Scalar::is_zero));
        }
        assert_eq!(b.dim(), 4 + 4 + 1);
    }

    #[test]
    fn admissibility() {
        assert_eq!(admissibility_check(&f2(), 8), Some(2));
        assert_eq!(admissibility_check(&f1(), 8), Some(2));
        assert_eq!(admissibility_check(&looped(), 8), None);
        assert!(matches!(
            algebra_basis(&looped(), 5),
            Err(Error::AdmissibilityExceeded { cap: 5 })
        ));
        let nilpotent_loop = validate_bound_quiver(&raw(
            &["1"],
            &[("l", "1", "1")],
            vec![rel("r", &[(1, &["l", "l", "l"])])],
        ))
        .unwrap();
        assert_eq!(admissibility_check(&nilpotent_loop, 8), Some(3));
        assert_eq!(algebra_basis(&nilpotent_loop, 8).unwrap().dim(), 3);
    }

    #[test]
    fn basis_dimension_is_stable_above_level() {
        for q in [f1(), f2(), f3()] {
            let l = admissibility_check(&q, 12).unwrap();
            let d = truncated_quotient_dim(&q, l);
            for c in l..l + 4 {
                assert_eq!(truncated_quotient_dim(&q, c), d);
            }
        }
    }

    #[test]
    fn inhomogeneous_relation() {
        // l*l - l*l*l on a loop: modulo long paths l^2 is killed, but the
        // ideal itself contains no power of l, so the result is flagged inexact
        let q = validate_bound_quiver(&raw(
            &["1"],
            &[("l", "1", "1")],
            vec![rel("r", &[(1, &["l", "l"]), (-1, &["l", "l", "l"])])],
        ))
        .unwrap();
        let b = algebra_basis(&q, 6).unwrap();
        assert_eq!(b.level(), 2);
        assert!(!b.is_exact());
        let with_cube = validate_bound_quiver(&raw(
            &["1"],
            &[("l", "1", "1")],
            vec![
                rel("r", &[(1, &["l", "l"]), (-1, &["l", "l", "l"])]),
                rel("s", &[(1, &["l", "l", "l"])]),
            ],
        ))
        .unwrap();
        assert_eq!(algebra_basis(&with_cube, 6).unwrap().dim(), 2);
        assert!(algebra_basis(&f3(), 6).unwrap().is_exact());
    }

    #[test]
    fn minimality() {
        assert_eq!(minimality_check(&f2(), 8).unwrap(), vec![("r".to_string(), true)]);
        assert_eq!(minimality_check(&f3(), 8).unwrap(), vec![("r".to_string(), true)]);
        let doubled = validate_bound_quiver(&f2_raw(vec![
            rel("r", &[(1, &["a", "b"])]),
            rel("s", &[(2, &["a", "b"])]),
        ]))
        .unwrap();
        let m = minimality_check(&doubled, 8).unwrap();
        assert!(!m[1].1);
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(f2().quiver()));
        assert!(is_acyclic(f3().quiver()));
        assert!(!is_acyclic(looped().quiver()));
    }

    #[test]
    fn forms() {
        let q = f2();
        assert_eq!(euler_form(&q, &[0, 1, 0], &[1, 0, 0]), -1);
        assert_eq!(euler_form(&q, &[1, 1, 1], &[1, 1, 1]), 2);
        assert_eq!(euler_form(&q, &[0, 0, 0], &[3, 1, 2]), 0);
        assert_eq!(chi(&q, &[1, 2, 1]), 3);
        assert_eq!(chi(&q, &[0, 0, 0]), 0);
        assert_eq!(chi(&f1(), &[1, 1]), 1);
        assert_eq!(a_of_d(&q, &[1, 2, 1]), 3);
        assert_eq!(gl_dim(&[1, 2, 1]) - chi(&q, &[1, 2, 1]), 3);
        assert_eq!(a_of_d(&q, &[0, 0, 0]), 0);
        assert_eq!(a_of_d(&q, &[1, 0, 0]), 0);
        let (d1, d2) = ([1, 0, 0], [0, 2, 1]);
        let sum = [1, 2, 1];
        assert_eq!(a_of_d(&q, &d1), 0);
        assert_eq!(a_of_d(&q, &d2), 2);
        assert_eq!(mixed_a_form(&q, &d1, &d2), 0);
        assert_eq!(mixed_a_form(&q, &d2, &d1), 1);
        assert_eq!(
            a_of_d(&q, &sum),
            a_of_d(&q, &d1) + a_of_d(&q, &d2) + mixed_a_form(&q, &d1, &d2) + mixed_a_form(&q, &d2, &d1)
        );
        assert_eq!(mixed_a_form(&q, &[0, 0, 0], &[1, 1, 1]), 0);
    }

    #[test]
    fn opposite_reverses_relations() {
        let op = f2().opposite();
        assert_eq!(op.quiver().arrow(0).source, 0);
        let r = &op.relations()[0];
        assert_eq!((r.source(), r.target()), (0, 2));
        assert!(algebra_basis(&op, 8).is_ok());
    }

    fn dims(n: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0usize..5, n)
    }

    proptest! {
        #[test]
        fn a_equals_gl_minus_chi(d2 in dims(3), d3 in dims(4)) {
            let q2 = f2();
            prop_assert_eq!(a_of_d(&q2, &d2), gl_dim(&d2) - chi(&q2, &d2));
            let q3 = f3();
            prop_assert_eq!(a_of_d(&q3, &d3), gl_dim(&d3) - chi(&q3, &d3));
        }

        #[test]
        fn euler_is_bilinear(d in dims(4), e in dims(4), f in dims(4)) {
            let q = f3();
            let de: Vec<usize> = d.iter().zip(&e).map(|(a, b)| a + b).collect();
            prop_assert_eq!(euler_form(&q, &de, &f), euler_form(&q, &d, &f) + euler_form(&q, &e, &f));
            prop_assert_eq!(euler_form(&q, &f, &de), euler_form(&q, &f, &d) + euler_form(&q, &f, &e));
        }
    }
}
