//! Line-oriented text format for bound quivers, modules and exact sequences.
//!
//! ```text
//! quiver F2
//! field Q
//! vertex 1 2 3
//! arrow a : 2 -> 1
//! arrow b : 3 -> 2
//! relation r : a*b
//! module P2 : dim 1 1 0
//!   a = [1]
//! ses E : S1 -> M -> V
//! ```
//!
//! `a*b` means "apply `b`, then `a`". Matrices are `d_{tα} × d_{sα}`, rows
//! separated by `;`; arrows left out of a module act by zero.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homext::Representation;
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::{
    convert_scalar, validate_bound_quiver, Algebra, RawBoundQuiver, RawPath, RawRelation, DEFAULT_TRUNCATION_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}\n  {snippet}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub snippet: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Colon,
    Arrow,
    Plus,
    Minus,
    Star,
    LBracket,
    RBracket,
    Semi,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Eq => write!(f, "`=`"),
        }
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
    indented: bool,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
            snippet: self.text.trim_end().to_string(),
        }
    }

    fn end_column(&self) -> usize {
        self.text.trim_end().chars().count() + 1
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or_else(|| self.end_column(), |(_, c)| *c)
    }

    fn next(&mut self, what: &str) -> Result<(Tok, usize), ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.err(self.end_column(), format!("expected {what}, found end of line"))),
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.next(what)? {
            (Tok::Word(w), c) => Ok((w, c)),
            (t, c) => Err(self.err(c, format!("expected {what}, found {t}"))),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let what = tok.to_string();
        match self.next(&what)? {
            (t, _) if t == tok => Ok(()),
            (t, c) => Err(self.err(c, format!("expected {what}, found {t}"))),
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some((t, c)) => Err(self.err(*c, format!("unexpected {t}"))),
        }
    }
}

fn lex(number: usize, text: &str) -> Result<Line<'_>, ParseError> {
    let body = text.split('#').next().unwrap_or("");
    let indented = body.starts_with(' ') || body.starts_with('\t');
    let chars: Vec<char> = body.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let word_char = |c: char| c.is_alphanumeric() || matches!(c, '_' | '/' | '.' | '\'');
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = match c {
            ':' => Some(Tok::Colon),
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if c.is_whitespace() {
            i += 1;
        } else if let Some(t) = single {
            toks.push((t, col));
            i += 1;
        } else if c == '-' {
            if chars.get(i + 1) == Some(&'>') {
                toks.push((Tok::Arrow, col));
                i += 2;
            } else {
                toks.push((Tok::Minus, col));
                i += 1;
            }
        } else if word_char(c) {
            let start = i;
            while i < chars.len() && word_char(chars[i]) {
                i += 1;
            }
            toks.push((Tok::Word(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError {
                line: number,
                column: col,
                message: format!("unexpected character `{c}`"),
                snippet: text.trim_end().to_string(),
            });
        }
    }
    Ok(Line {
        number,
        text,
        indented,
        toks,
        pos: 0,
    })
}

/// Exact rational from `a` or `a/b`; decimals are rejected.
fn parse_rational(w: &str) -> Option<BigRational> {
    let (n, d) = match w.split_once('/') {
        Some((n, d)) => (n, d),
        None => (w, "1"),
    };
    if n.is_empty() || d.is_empty() || !n.chars().all(|c| c.is_ascii_digit()) || !d.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

fn is_identifier(w: &str) -> bool {
    w.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') && !w.contains('/')
}

/// Options applied while building a workspace.
#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Overrides the `field` line.
    pub field: Option<Field>,
    pub truncation_cap: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            field: None,
            truncation_cap: DEFAULT_TRUNCATION_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesDecl {
    pub name: String,
    pub u: String,
    pub m: String,
    pub v: String,
}

#[derive(Clone, Debug)]
struct ModuleDecl {
    name: String,
    line: usize,
    dims: Vec<usize>,
    maps: Vec<(String, usize, usize, Vec<Vec<BigRational>>)>,
}

/// A validated bound quiver with named modules and exact-sequence declarations.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub name: String,
    pub algebra: Arc<Algebra>,
    modules: Vec<(String, Representation)>,
    index: HashMap<String, usize>,
    pub sequences: Vec<SesDecl>,
}

impl Workspace {
    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn modules(&self) -> &[(String, Representation)] {
        &self.modules
    }

    pub fn module(&self, name: &str) -> Result<&Representation> {
        self.index
            .get(name)
            .map(|&i| &self.modules[i].1)
            .ok_or_else(|| Error::Semantic(format!("unknown module `{name}`")))
    }

    pub fn ses(&self, name: &str) -> Result<&SesDecl> {
        self.sequences
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Semantic(format!("unknown exact sequence `{name}`")))
    }

    /// Adds a module under a fresh name.
    pub fn insert_module(&mut self, name: &str, m: Representation) -> Result<()> {
        if self.index.contains_key(name) {
            return Err(Error::Semantic(format!("duplicate module `{name}`")));
        }
        self.index.insert(name.to_string(), self.modules.len());
        self.modules.push((name.to_string(), m));
        Ok(())
    }
}

pub fn parse_workspace(text: &str) -> Result<Workspace> {
    parse_workspace_with(text, &ParseOptions::default())
}

pub fn parse_workspace_with(text: &str, options: &ParseOptions) -> Result<Workspace> {
    let mut name: Option<String> = None;
    let mut field: Option<Field> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations: Vec<(usize, RawRelation, Vec<(BigRational, RawPath)>)> = Vec::new();
    let mut modules: Vec<ModuleDecl> = Vec::new();
    let mut sequences: Vec<(usize, SesDecl)> = Vec::new();
    let mut in_module = false;

    for (i, raw) in text.lines().enumerate() {
        let mut line = lex(i + 1, raw)?;
        if line.toks.is_empty() {
            continue;
        }
        if line.indented && in_module {
            let m = modules.last_mut().expect("module open");
            let (arrow, col) = line.word("arrow name")?;
            line.expect(Tok::Eq)?;
            let rows = parse_matrix(&mut line)?;
            line.done()?;
            m.maps.push((arrow, line.number, col, rows));
            continue;
        }
        if line.indented {
            return Err(line.err(line.column(), "indented line outside a module block").into());
        }
        in_module = false;
        let (kw, kcol) = line.word("keyword")?;
        match kw.as_str() {
            "quiver" => {
                if name.is_some() {
                    return Err(line.err(kcol, "quiver name declared twice").into());
                }
                name = Some(line.word("quiver name")?.0);
                line.done()?;
            }
            "field" => {
                let (f, c) = line.word("field")?;
                field = Some(Field::parse(&f).map_err(|e| line.err(c, e.to_string()))?);
                line.done()?;
            }
            "vertex" => {
                if line.peek().is_none() {
                    return Err(line.err(line.column(), "expected vertex name").into());
                }
                while line.peek().is_some() {
                    let (v, c) = line.word("vertex name")?;
                    if v.contains('/') {
                        return Err(line.err(c, format!("invalid vertex name `{v}`")).into());
                    }
                    vertices.push(v);
                }
            }
            "arrow" => {
                let (a, c) = line.word("arrow name")?;
                if !is_identifier(&a) {
                    return Err(line.err(c, format!("arrow name `{a}` must start with a letter")).into());
                }
                line.expect(Tok::Colon)?;
                let s = line.word("source vertex")?.0;
                line.expect(Tok::Arrow)?;
                let t = line.word("target vertex")?.0;
                line.done()?;
                arrows.push((a, s, t));
            }
            "relation" => {
                let rname = line.word("relation name")?.0;
                line.expect(Tok::Colon)?;
                let terms = parse_terms(&mut line)?;
                relations.push((
                    line.number,
                    RawRelation {
                        name: rname,
                        terms: Vec::new(),
                    },
                    terms,
                ));
            }
            "module" => {
                let mname = line.word("module name")?.0;
                line.expect(Tok::Colon)?;
                let (d, c) = line.word("`dim`")?;
                if d != "dim" {
                    return Err(line.err(c, format!("expected `dim`, found `{d}`")).into());
                }
                let mut dims = Vec::new();
                while line.peek().is_some() {
                    let (w, c) = line.word("dimension")?;
                    dims.push(w.parse::<usize>().map_err(|_| line.err(c, format!("invalid dimension `{w}`")))?);
                }
                modules.push(ModuleDecl {
                    name: mname,
                    line: line.number,
                    dims,
                    maps: Vec::new(),
                });
                in_module = true;
            }
            "ses" => {
                let sname = line.word("sequence name")?.0;
                line.expect(Tok::Colon)?;
                let u = line.word("module name")?.0;
                line.expect(Tok::Arrow)?;
                let m = line.word("module name")?.0;
                line.expect(Tok::Arrow)?;
                let v = line.word("module name")?.0;
                line.done()?;
                sequences.push((line.number, SesDecl { name: sname, u, m, v }));
            }
            other => return Err(line.err(kcol, format!("unknown keyword `{other}`")).into()),
        }
    }

    let field = options.field.or(field).unwrap_or(Field::Rational);
    let convert = |q: &BigRational, line: usize| -> Result<Scalar> {
        convert_scalar(&Scalar::Q(q.clone()), field).map_err(|e| Error::Semantic(format!("line {line}: {e}")))
    };
    let mut raw_relations = Vec::with_capacity(relations.len());
    for (line, mut rel, terms) in relations {
        for (c, p) in terms {
            rel.terms.push((convert(&c, line)?, p));
        }
        raw_relations.push(rel);
    }
    let raw = RawBoundQuiver {
        field,
        vertices,
        arrows,
        relations: raw_relations,
    };
    let bound = validate_bound_quiver(&raw)?;
    let algebra = Arc::new(Algebra::new(bound, options.truncation_cap)?);
    let q = algebra.quiver();

    let mut ws = Workspace {
        name: name.unwrap_or_else(|| "unnamed".into()),
        algebra: algebra.clone(),
        modules: Vec::new(),
        index: HashMap::new(),
        sequences: Vec::new(),
    };
    for decl in modules {
        let at = |msg: String| Error::Semantic(format!("line {}: {msg}", decl.line));
        if decl.dims.len() != q.vertex_count() {
            return Err(at(format!(
                "module `{}` has {} dimensions for {} vertices",
                decl.name,
                decl.dims.len(),
                q.vertex_count()
            )));
        }
        let mut maps: Vec<Option<Matrix>> = vec![None; q.arrows().len()];
        for (arrow, line, _col, rows) in &decl.maps {
            let at = |msg: String| Error::Semantic(format!("line {line}: {msg}"));
            let ai = q
                .arrow_index(arrow)
                .ok_or_else(|| at(format!("unknown arrow `{arrow}`")))?;
            if maps[ai].is_some() {
                return Err(at(format!("arrow `{arrow}` assigned twice in module `{}`", decl.name)));
            }
            let a = q.arrow(ai);
            let want = (decl.dims[a.target], decl.dims[a.source]);
            let got_rows = rows.len();
            let got_cols = rows.first().map_or(0, Vec::len);
            if rows.iter().any(|r| r.len() != got_cols) {
                return Err(at(format!("ragged matrix for arrow `{arrow}`")));
            }
            let empty_ok = got_rows == 0 && want.0 * want.1 == 0;
            if !empty_ok && (got_rows, got_cols) != want {
                return Err(at(format!(
                    "shape mismatch for arrow `{arrow}` in module `{}`: expected {}x{}, got {}x{}",
                    decl.name, want.0, want.1, got_rows, got_cols
                )));
            }
            let mut m = Matrix::zeros(field, want.0, want.1);
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    m.set(r, c, convert(v, *line)?);
                }
            }
            maps[ai] = Some(m);
        }
        let maps: Vec<Matrix> = maps
            .into_iter()
            .zip(q.arrows())
            .map(|(m, a)| m.unwrap_or_else(|| Matrix::zeros(field, decl.dims[a.target], decl.dims[a.source])))
            .collect();
        let rep = Representation::unchecked(algebra.clone(), decl.dims.clone(), maps)?;
        if let Some(r) = rep.violated_relation() {
            return Err(Error::RelationViolated {
                relation: r.to_string(),
                module: decl.name.clone(),
            });
        }
        ws.insert_module(&decl.name, rep).map_err(|e| at(e.to_string()))?;
    }
    for (line, s) in sequences {
        if ws.sequences.iter().any(|t| t.name == s.name) {
            return Err(Error::Semantic(format!("line {line}: duplicate sequence `{}`", s.name)));
        }
        for n in [&s.u, &s.m, &s.v] {
            ws.module(n)
                .map_err(|_| Error::Semantic(format!("line {line}: unknown module `{n}`")))?;
        }
        let (u, m, v) = (ws.module(&s.u)?, ws.module(&s.m)?, ws.module(&s.v)?);
        let sum: Vec<usize> = u.dims().iter().zip(v.dims()).map(|(a, b)| a + b).collect();
        if sum != m.dims() {
            return Err(Error::Semantic(format!(
                "line {line}: sequence `{}` has bdim U + bdim V ≠ bdim M",
                s.name
            )));
        }
        ws.sequences.push(s);
    }
    Ok(ws)
}

fn parse_number(line: &mut Line<'_>) -> Result<BigRational, ParseError> {
    let neg = if line.peek() == Some(&Tok::Minus) {
        line.pos += 1;
        true
    } else {
        false
    };
    let (w, c) = line.word("number")?;
    let q = parse_rational(&w).ok_or_else(|| line.err(c, format!("invalid number `{w}`")))?;
    Ok(if neg { -q } else { q })
}

fn parse_matrix(line: &mut Line<'_>) -> Result<Vec<Vec<BigRational>>, ParseError> {
    line.expect(Tok::LBracket)?;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut row = Vec::new();
    loop {
        match line.peek() {
            Some(Tok::RBracket) => {
                line.pos += 1;
                if !row.is_empty() || !rows.is_empty() {
                    rows.push(row);
                }
                return Ok(rows);
            }
            Some(Tok::Semi) => {
                line.pos += 1;
                rows.push(std::mem::take(&mut row));
            }
            Some(_) => row.push(parse_number(line)?),
            None => return Err(line.err(line.end_column(), "unterminated matrix")),
        }
    }
}

fn parse_terms(line: &mut Line<'_>) -> Result<Vec<(BigRational, RawPath)>, ParseError> {
    let mut terms = Vec::new();
    let mut sign = BigRational::one();
    if line.peek() == Some(&Tok::Minus) {
        line.pos += 1;
        sign = -sign;
    }
    loop {
        let (first, c) = line.word("term")?;
        let (coeff, mut arrows) = match parse_rational(&first) {
            Some(q) => {
                line.expect(Tok::Star)?;
                let (a, c) = line.word("arrow name")?;
                if !is_identifier(&a) {
                    return Err(line.err(c, format!("expected arrow name, found `{a}`")));
                }
                (q, vec![a])
            }
            None if is_identifier(&first) => (BigRational::one(), vec![first]),
            None => return Err(line.err(c, format!("expected coefficient or arrow, found `{first}`"))),
        };
        while line.peek() == Some(&Tok::Star) {
            line.pos += 1;
            let (a, c) = line.word("arrow name")?;
            if !is_identifier(&a) {
                return Err(line.err(c, format!("expected arrow name, found `{a}`")));
            }
            arrows.push(a);
        }
        terms.push((sign.clone() * coeff, RawPath::Arrows(arrows)));
        match line.peek() {
            None => return Ok(terms),
            Some(Tok::Plus) => sign = BigRational::one(),
            Some(Tok::Minus) => sign = -BigRational::one(),
            Some(t) => {
                let t = t.clone();
                return Err(line.err(line.column(), format!("expected `+` or `-`, found {t}")));
            }
        }
        line.pos += 1;
    }
}

fn scalar_text(s: &Scalar) -> String {
    s.to_string()
}

/// Canonical text of a workspace; parsing it yields an equal workspace.
pub fn print_workspace(ws: &Workspace) -> String {
    let q = ws.algebra.quiver();
    let mut out = String::new();
    out.push_str(&format!("quiver {}\n", ws.name));
    out.push_str(&format!("field {}\n", ws.field()));
    out.push_str(&format!("vertex {}\n", q.vertices().join(" ")));
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            a.name,
            q.vertices()[a.source],
            q.vertices()[a.target]
        ));
    }
    for r in ws.algebra.relations() {
        let mut text = String::new();
        for (i, (c, p)) in r.terms().iter().enumerate() {
            let neg = crate::linalg::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => text.push('-'),
                (0, false) => {}
                (_, true) => text.push_str(" - "),
                (_, false) => text.push_str(" + "),
            }
            if !abs.is_one() {
                text.push_str(&scalar_text(&abs));
                text.push('*');
            }
            let names: Vec<&str> = p.arrows().iter().map(|&a| q.arrow(a).name.as_str()).collect();
            text.push_str(&names.join("*"));
        }
        out.push_str(&format!("relation {} : {}\n", r.name, text));
    }
    for (name, m) in &ws.modules {
        let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
        out.push_str(&format!("module {} : dim {}\n", name, dims.join(" ")));
        for (i, a) in q.arrows().iter().enumerate() {
            let mat = m.map(i);
            if mat.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..mat.rows())
                .map(|r| mat.row(r).iter().map(scalar_text).collect::<Vec<_>>().join(" "))
                .collect();
            out.push_str(&format!("  {} = [{}]\n", a.name, rows.join("; ")));
        }
    }
    for s in &ws.sequences {
        out.push_str(&format!("ses {} : {} -> {} -> {}\n", s.name, s.u, s.m, s.v));
    }
    out
}

/// Structural equality of two workspaces (names, quiver, relations, modules, sequences).
pub fn same_workspace(a: &Workspace, b: &Workspace) -> bool {
    a.name == b.name
        && a.algebra.bound().raw() == b.algebra.bound().raw()
        && a.modules == b.modules
        && a.sequences == b.sequences
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: &str = include_str!("../fixtures/f2.quiver");

    #[test]
    fn f2_fixture_has_five_modules() {
        let ws = parse_workspace(F2).unwrap();
        assert_eq!(ws.modules().len(), 5);
        assert_eq!(ws.module("P2").unwrap().dims(), &[1, 1, 0]);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let src = "vertex 1 2 3\narrow a : 2 -> 1\nmodule X : dim 1 0 0\n  a = [1]\n";
        let err = parse_workspace(src).unwrap_err();
        assert!(err.to_string().contains("shape mismatch"), "{err}");
    }

    #[test]
    fn violated_relation_names_relation_and_module() {
        let src = "vertex 1 2 3\narrow a : 2 -> 1\narrow b : 3 -> 2\nrelation r : a*b\n\
                   module X : dim 1 1 1\n  a = [1]\n  b = [1]\n";
        match parse_workspace(src).unwrap_err() {
            Error::RelationViolated { relation, module } => {
                assert_eq!(relation, "r");
                assert_eq!(module, "X");
            }
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let src = "vertex 1 2\narrow a : 2 = 1\n";
        match parse_workspace(src).unwrap_err() {
            Error::Parse(p) => {
                assert_eq!(p.line, 2);
                assert_eq!(p.column, 13);
                assert_eq!(p.snippet, "arrow a : 2 = 1");
                assert!(p.message.contains("expected `->`"), "{}", p.message);
            }
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn unknown_names_and_duplicates_are_rejected() {
        let base = "vertex 1 2\narrow a : 2 -> 1\n";
        assert!(parse_workspace(&format!("{base}arrow c : 2 -> 7\n")).is_err());
        assert!(parse_workspace(&format!("{base}module X : dim 1 1\n  z = [1]\n")).is_err());
        assert!(parse_workspace(&format!("{base}module X : dim 1 0\nmodule X : dim 1 0\n")).is_err());
        assert!(parse_workspace(&format!("{base}module X : dim 1 0\nses E : X -> Y -> X\n")).is_err());
        assert!(parse_workspace(&format!("{base}module X : dim 1 0\n  a = [0.5]\n")).is_err());
    }

    #[test]
    fn coefficients_and_signs() {
        let src = "vertex 1 2 3 4\narrow a : 2 -> 1\narrow b : 4 -> 2\narrow c : 3 -> 1\narrow d : 4 -> 3\n\
                   relation r : -a*b + 3/2*c*d\n";
        let ws = parse_workspace(src).unwrap();
        let printed = print_workspace(&ws);
        assert!(printed.contains("relation r : -a*b + 3/2*c*d"), "{printed}");
    }

    #[test]
    fn print_round_trips() {
        let ws = parse_workspace(F2).unwrap();
        let text = print_workspace(&ws);
        let again = parse_workspace(&text).unwrap();
        assert!(same_workspace(&ws, &again));
        assert_eq!(print_workspace(&again), text);
    }

    #[test]
    fn field_override_reduces_entries() {
        let src = "field Q\nvertex 1 2\narrow a : 2 -> 1\nmodule X : dim 1 1\n  a = [1/2]\n";
        let opts = ParseOptions {
            field: Some(Field::prime(101).unwrap()),
            ..ParseOptions::default()
        };
        let ws = parse_workspace_with(src, &opts).unwrap();
        assert_eq!(ws.module("X").unwrap().map(0).get(0, 0).as_i64(), Some(51));
    }
}
