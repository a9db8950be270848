//! Canonical text file formats.
//!
//! Every format is line-oriented: one token stream per line, tokens
//! separated by single spaces, rationals in canonical form (`p` or `p/q`,
//! lowest terms, positive denominator), a trailing newline, nothing else.
//! Parsing is strict, so `serialize(parse(x))` is byte-identical to `x`
//! for every canonical file.
//!
//! A *structure* file carries a carrier with automorphism plus whichever
//! structure maps the object has:
//!
//! ```text
//! homalg structure v1
//! dim 2
//! alpha
//! 1 0
//! 0 1
//! unit
//! 1 0
//! mult            (row (i,j): coefficients of e_i · e_j over the basis)
//! 1 0
//! 0 1
//! 0 1
//! 1 0
//! counit
//! 1 1
//! comult          (row k: coefficients of Δ(e_k) over e_i ⊗ e_j)
//! 1 0 0 0
//! 0 0 0 1
//! antipode        (optional)
//! 1 0
//! 0 1
//! ```
//!
//! Sections after `alpha` are optional but must appear in the order
//! above; `verify` demands the sections the requested axioms need.
//! Cotwistor, entwining, module and datum files reference structure
//! files by path (resolved relative to the referencing file) and carry
//! their own matrices in the same row layout.

use crate::entwine::EntwiningMap;
use crate::error::{Error, Result};
use crate::hom::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, ObjectWithAut};
use crate::linmap::LinearMap;
use crate::scalar::{format_scalar, parse_scalar};
use crate::smash::Cotwistor;
use std::path::{Path, PathBuf};

/// A parsed structure file: carrier plus optional algebra/coalgebra/
/// antipode data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub dim: usize,
    pub alpha: LinearMap,
    pub unit: Option<LinearMap>,
    pub mult: Option<LinearMap>,
    pub counit: Option<LinearMap>,
    pub comult: Option<LinearMap>,
    pub antipode: Option<LinearMap>,
}

impl StructureFile {
    pub fn carrier(&self) -> Result<ObjectWithAut> {
        ObjectWithAut::new(self.alpha.clone())
    }

    pub fn algebra(&self) -> Result<HomAlgebra> {
        let mult = self
            .mult
            .clone()
            .ok_or_else(|| Error::pre("structure file has no mult section"))?;
        let unit = self
            .unit
            .clone()
            .ok_or_else(|| Error::pre("structure file has no unit section"))?;
        HomAlgebra::new(self.carrier()?, mult, unit)
    }

    pub fn coalgebra(&self) -> Result<HomCoalgebra> {
        let comult = self
            .comult
            .clone()
            .ok_or_else(|| Error::pre("structure file has no comult section"))?;
        let counit = self
            .counit
            .clone()
            .ok_or_else(|| Error::pre("structure file has no counit section"))?;
        HomCoalgebra::new(self.carrier()?, comult, counit)
    }

    pub fn bialgebra(&self) -> Result<HomBialgebra> {
        HomBialgebra::new(self.algebra()?, self.coalgebra()?)
    }

    pub fn hopf(&self) -> Result<HomHopfAlgebra> {
        let antipode = self
            .antipode
            .clone()
            .ok_or_else(|| Error::pre("structure file has no antipode section"))?;
        HomHopfAlgebra::new(self.bialgebra()?, antipode)
    }

    pub fn from_bialgebra(b: &HomBialgebra) -> Self {
        StructureFile {
            dim: b.dim(),
            alpha: b.alpha().clone(),
            unit: Some(b.unit().clone()),
            mult: Some(b.mult().clone()),
            counit: Some(b.counit().clone()),
            comult: Some(b.comult().clone()),
            antipode: None,
        }
    }

    pub fn from_hopf(h: &HomHopfAlgebra) -> Self {
        let mut s = Self::from_bialgebra(&h.bialgebra);
        s.antipode = Some(h.antipode.clone());
        s
    }

    pub fn from_coalgebra(c: &HomCoalgebra) -> Self {
        StructureFile {
            dim: c.dim(),
            alpha: c.alpha().clone(),
            unit: None,
            mult: None,
            counit: Some(c.counit.clone()),
            comult: Some(c.comult.clone()),
            antipode: None,
        }
    }
}

/// A parsed module file: a carrier with action and coaction matrices and
/// a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFile {
    pub dim: usize,
    /// (algebra dimension, coalgebra dimension) the maps are over.
    pub over: (usize, usize),
    pub n: i64,
    pub alpha: LinearMap,
    pub action: LinearMap,
    pub coaction: LinearMap,
}

/// A parsed Doi-Hopf datum file.
#[derive(Clone, Debug)]
pub struct DatumFile {
    pub h: StructureFile,
    pub a: StructureFile,
    pub c: StructureFile,
    pub k: i64,
    pub m: i64,
    pub coaction: LinearMap,
    pub action: LinearMap,
}

struct Lines<'a> {
    path: String,
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> Lines<'a> {
    fn new(path: &str, text: &'a str) -> Result<Self> {
        if !text.is_empty() && !text.ends_with('\n') {
            return Err(Error::Parse {
                path: path.to_string(),
                line: text.lines().count(),
                msg: "missing trailing newline".into(),
            });
        }
        Ok(Lines {
            path: path.to_string(),
            lines: text.lines(),
            line_no: 0,
        })
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.clone(),
            line: self.line_no,
            msg: msg.into(),
        }
    }

    fn next_line(&mut self) -> Result<&'a str> {
        self.line_no += 1;
        self.lines.next().ok_or_else(|| Error::Parse {
            path: self.path.clone(),
            line: self.line_no,
            msg: "unexpected end of file".into(),
        })
    }

    fn peek_done(&mut self) -> bool {
        self.lines.clone().next().is_none()
    }

    fn expect(&mut self, expected: &str) -> Result<()> {
        let line = self.next_line()?;
        if line != expected {
            return Err(self.err(format!("expected `{expected}`, found `{line}`")));
        }
        Ok(())
    }

    fn keyword_value(&mut self, keyword: &str) -> Result<&'a str> {
        let line = self.next_line()?;
        let Some(rest) = line.strip_prefix(keyword).and_then(|r| r.strip_prefix(' ')) else {
            return Err(self.err(format!("expected `{keyword} ...`, found `{line}`")));
        };
        Ok(rest)
    }

    fn usize_field(&mut self, keyword: &str) -> Result<usize> {
        let v = self.keyword_value(keyword)?;
        let n: usize = v
            .parse()
            .map_err(|_| self.err(format!("invalid integer `{v}`")))?;
        if v != n.to_string() {
            return Err(self.err(format!("non-canonical integer `{v}`")));
        }
        Ok(n)
    }

    fn i64_field(&mut self, keyword: &str) -> Result<i64> {
        let v = self.keyword_value(keyword)?;
        let n: i64 = v
            .parse()
            .map_err(|_| self.err(format!("invalid integer `{v}`")))?;
        if v != n.to_string() {
            return Err(self.err(format!("non-canonical integer `{v}`")));
        }
        Ok(n)
    }

    fn row(&mut self, cols: usize) -> Result<Vec<crate::scalar::Scalar>> {
        let line = self.next_line()?;
        let tokens: Vec<&str> = line.split(' ').collect();
        if tokens.len() != cols {
            return Err(self.err(format!("expected {cols} entries, found {}", tokens.len())));
        }
        tokens
            .iter()
            .map(|t| parse_scalar(t).map_err(|msg| self.err(msg)))
            .collect()
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Result<LinearMap> {
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            entries.extend(self.row(cols)?);
        }
        LinearMap::new(rows, cols, entries)
    }

    fn finish(&mut self) -> Result<()> {
        if !self.peek_done() {
            self.line_no += 1;
            return Err(self.err("trailing content after structure"));
        }
        Ok(())
    }
}

fn render_matrix(out: &mut String, m: &LinearMap) {
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|c| format_scalar(m.entry(r, c)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Rows-of-pairs layout for a multiplication map (`d x d²` internally):
/// row `(i, j)` lists the coefficients of `e_i · e_j`.
fn render_mult(out: &mut String, mult: &LinearMap) {
    let d = mult.rows();
    for pair in 0..d * d {
        let row: Vec<String> = (0..d).map(|k| format_scalar(mult.entry(k, pair))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

fn parse_mult(lines: &mut Lines, d: usize) -> Result<LinearMap> {
    let as_rows = lines.matrix(d * d, d)?;
    Ok(as_rows.transpose())
}

/// Row-per-source layout for a comultiplication map (`d² x d`
/// internally): row `k` lists the coefficients of `Δ(e_k)`.
fn render_comult(out: &mut String, comult: &LinearMap) {
    let d = comult.cols();
    for k in 0..d {
        let row: Vec<String> = (0..d * d)
            .map(|p| format_scalar(comult.entry(p, k)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

fn parse_comult(lines: &mut Lines, d: usize) -> Result<LinearMap> {
    let as_rows = lines.matrix(d, d * d)?;
    Ok(as_rows.transpose())
}

pub fn render_structure(s: &StructureFile) -> String {
    let mut out = String::new();
    out.push_str("homalg structure v1\n");
    out.push_str(&format!("dim {}\n", s.dim));
    out.push_str("alpha\n");
    render_matrix(&mut out, &s.alpha);
    if let Some(unit) = &s.unit {
        out.push_str("unit\n");
        render_matrix(&mut out, &unit.transpose());
    }
    if let Some(mult) = &s.mult {
        out.push_str("mult\n");
        render_mult(&mut out, mult);
    }
    if let Some(counit) = &s.counit {
        out.push_str("counit\n");
        render_matrix(&mut out, counit);
    }
    if let Some(comult) = &s.comult {
        out.push_str("comult\n");
        render_comult(&mut out, comult);
    }
    if let Some(antipode) = &s.antipode {
        out.push_str("antipode\n");
        render_matrix(&mut out, antipode);
    }
    out
}

pub fn parse_structure(path: &str, text: &str) -> Result<StructureFile> {
    let mut lines = Lines::new(path, text)?;
    lines.expect("homalg structure v1")?;
    let dim = lines.usize_field("dim")?;
    if dim == 0 {
        return Err(lines.err("dim must be positive"));
    }
    lines.expect("alpha")?;
    let alpha = lines.matrix(dim, dim)?;
    let mut s = StructureFile {
        dim,
        alpha,
        unit: None,
        mult: None,
        counit: None,
        comult: None,
        antipode: None,
    };
    let mut order = ["unit", "mult", "counit", "comult", "antipode"].iter();
    while !lines.peek_done() {
        let section = lines.next_line()?.to_string();
        if !order.any(|&k| k == section) {
            return Err(lines.err(format!("unknown or out-of-order section `{section}`")));
        }
        match section.as_str() {
            "unit" => s.unit = Some(lines.matrix(1, dim)?.transpose()),
            "mult" => s.mult = Some(parse_mult(&mut lines, dim)?),
            "counit" => s.counit = Some(lines.matrix(1, dim)?),
            "comult" => s.comult = Some(parse_comult(&mut lines, dim)?),
            "antipode" => s.antipode = Some(lines.matrix(dim, dim)?),
            _ => unreachable!(),
        }
    }
    // invertibility is part of the format contract
    s.carrier()?;
    Ok(s)
}

pub fn render_matrix_file(m: &LinearMap) -> String {
    let mut out = String::new();
    out.push_str("homalg matrix v1\n");
    out.push_str(&format!("rows {}\n", m.rows()));
    out.push_str(&format!("cols {}\n", m.cols()));
    render_matrix(&mut out, m);
    out
}

pub fn parse_matrix_file(path: &str, text: &str) -> Result<LinearMap> {
    let mut lines = Lines::new(path, text)?;
    lines.expect("homalg matrix v1")?;
    let rows = lines.usize_field("rows")?;
    let cols = lines.usize_field("cols")?;
    let m = lines.matrix(rows, cols)?;
    lines.finish()?;
    Ok(m)
}

pub fn render_module(m: &ModuleFile) -> String {
    let mut out = String::new();
    out.push_str("homalg module v1\n");
    out.push_str(&format!("dim {}\n", m.dim));
    out.push_str(&format!("over {} {}\n", m.over.0, m.over.1));
    out.push_str(&format!("n {}\n", m.n));
    out.push_str("alpha\n");
    render_matrix(&mut out, &m.alpha);
    out.push_str("action\n");
    render_matrix(&mut out, &m.action);
    out.push_str("coaction\n");
    render_matrix(&mut out, &m.coaction);
    out
}

pub fn parse_module(path: &str, text: &str) -> Result<ModuleFile> {
    let mut lines = Lines::new(path, text)?;
    lines.expect("homalg module v1")?;
    let dim = lines.usize_field("dim")?;
    let over_line = lines.keyword_value("over")?;
    let parts: Vec<&str> = over_line.split(' ').collect();
    if parts.len() != 2 {
        return Err(lines.err("expected `over <algebra dim> <coalgebra dim>`"));
    }
    let da: usize = parts[0]
        .parse()
        .map_err(|_| lines.err("invalid algebra dim"))?;
    let dc: usize = parts[1]
        .parse()
        .map_err(|_| lines.err("invalid coalgebra dim"))?;
    let n = lines.i64_field("n")?;
    lines.expect("alpha")?;
    let alpha = lines.matrix(dim, dim)?;
    lines.expect("action")?;
    let action = lines.matrix(dim, dim * da)?;
    lines.expect("coaction")?;
    let coaction = lines.matrix(dim * dc, dim)?;
    lines.finish()?;
    ObjectWithAut::new(alpha.clone())?;
    Ok(ModuleFile {
        dim,
        over: (da, dc),
        n,
        alpha,
        action,
        coaction,
    })
}

fn resolve(base: &str, rel: &str) -> PathBuf {
    let parent = Path::new(base).parent().unwrap_or_else(|| Path::new(""));
    parent.join(rel)
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_structure(path: &Path) -> Result<StructureFile> {
    parse_structure(&path.display().to_string(), &read_file(path)?)
}

/// Cotwistor file: two structure references plus the `φ` matrix.
pub fn render_cotwistor(b_path: &str, h_path: &str, phi: &LinearMap) -> String {
    let mut out = String::new();
    out.push_str("homalg cotwistor v1\n");
    out.push_str(&format!("b {b_path}\n"));
    out.push_str(&format!("h {h_path}\n"));
    out.push_str("phi\n");
    render_matrix(&mut out, phi);
    out
}

/// A cotwistor file together with the full structure files it references.
pub struct CotwistorFile {
    pub b_file: StructureFile,
    pub h_file: StructureFile,
    pub cotwistor: Cotwistor,
}

pub fn load_cotwistor(path: &Path) -> Result<CotwistorFile> {
    let text = read_file(path)?;
    let name = path.display().to_string();
    let mut lines = Lines::new(&name, &text)?;
    lines.expect("homalg cotwistor v1")?;
    let b_rel = lines.keyword_value("b")?.to_string();
    let h_rel = lines.keyword_value("h")?.to_string();
    let b_file = load_structure(&resolve(&name, &b_rel))?;
    let h_file = load_structure(&resolve(&name, &h_rel))?;
    let b = b_file.coalgebra()?;
    let h = h_file.coalgebra()?;
    lines.expect("phi")?;
    let phi = lines.matrix(h.dim() * b.dim(), b.dim() * h.dim())?;
    lines.finish()?;
    Ok(CotwistorFile {
        b_file,
        h_file,
        cotwistor: Cotwistor::new(b, h, phi)?,
    })
}

/// Entwining file: coalgebra and algebra references plus the `Φ` matrix.
pub fn render_entwining(coalgebra_path: &str, algebra_path: &str, phi: &LinearMap) -> String {
    let mut out = String::new();
    out.push_str("homalg entwining v1\n");
    out.push_str(&format!("coalgebra {coalgebra_path}\n"));
    out.push_str(&format!("algebra {algebra_path}\n"));
    out.push_str("phi\n");
    render_matrix(&mut out, phi);
    out
}

/// An entwining file together with the full structure files it references
/// (the bialgebra data is needed for monoidal checks and codoubles).
pub struct EntwiningFile {
    pub h_file: StructureFile,
    pub a_file: StructureFile,
    pub entwining: EntwiningMap,
}

pub fn load_entwining(path: &Path) -> Result<EntwiningFile> {
    let text = read_file(path)?;
    let name = path.display().to_string();
    let mut lines = Lines::new(&name, &text)?;
    lines.expect("homalg entwining v1")?;
    let h_rel = lines.keyword_value("coalgebra")?.to_string();
    let a_rel = lines.keyword_value("algebra")?.to_string();
    let h_file = load_structure(&resolve(&name, &h_rel))?;
    let a_file = load_structure(&resolve(&name, &a_rel))?;
    let h = h_file.coalgebra()?;
    let a = a_file.algebra()?;
    lines.expect("phi")?;
    let phi = lines.matrix(a.dim() * h.dim(), h.dim() * a.dim())?;
    lines.finish()?;
    Ok(EntwiningFile {
        h_file,
        a_file,
        entwining: EntwiningMap::new(h, a, phi)?,
    })
}

/// Doi-Hopf datum file: three structure references, the degrees, and the
/// coaction/action matrices.
pub fn render_datum(
    h_path: &str,
    a_path: &str,
    c_path: &str,
    k: i64,
    m: i64,
    coaction: &LinearMap,
    action: &LinearMap,
) -> String {
    let mut out = String::new();
    out.push_str("homalg datum v1\n");
    out.push_str("kind doi-hopf\n");
    out.push_str(&format!("h {h_path}\n"));
    out.push_str(&format!("a {a_path}\n"));
    out.push_str(&format!("c {c_path}\n"));
    out.push_str(&format!("k {k}\n"));
    out.push_str(&format!("m {m}\n"));
    out.push_str("coaction\n");
    render_matrix(&mut out, coaction);
    out.push_str("action\n");
    render_matrix(&mut out, action);
    out
}

pub fn load_datum(path: &Path) -> Result<DatumFile> {
    let text = read_file(path)?;
    let name = path.display().to_string();
    let mut lines = Lines::new(&name, &text)?;
    lines.expect("homalg datum v1")?;
    lines.expect("kind doi-hopf")?;
    let h_rel = lines.keyword_value("h")?.to_string();
    let a_rel = lines.keyword_value("a")?.to_string();
    let c_rel = lines.keyword_value("c")?.to_string();
    let h = load_structure(&resolve(&name, &h_rel))?;
    let a = load_structure(&resolve(&name, &a_rel))?;
    let c = load_structure(&resolve(&name, &c_rel))?;
    let k = lines.i64_field("k")?;
    let m = lines.i64_field("m")?;
    lines.expect("coaction")?;
    let coaction = lines.matrix(a.dim * h.dim, a.dim)?;
    lines.expect("action")?;
    let action = lines.matrix(c.dim, c.dim * h.dim)?;
    lines.finish()?;
    Ok(DatumFile {
        h,
        a,
        c,
        k,
        m,
        coaction,
        action,
    })
}
