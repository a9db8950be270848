//! The command surface behind the `homalg` binary: load canonical files,
//! run checkers, build derived objects, and emit deterministic reports.
//!
//! Exit status semantics: `0` = every axiom passed, `1` = at least one
//! axiom violated (witnesses in the report), `2` = malformed input or a
//! precondition failure. Reports are byte-stable: the same inputs always
//! produce the same bytes, independent of flag or file order.

use crate::apps::{
    check_comodule_algebra, check_d_equation, check_doi_hopf_module, check_doi_monoidal,
    check_hom_ybe, check_long_dimodule, check_module_coalgebra, check_yd_module, check_zeta_d_type,
    doi_codouble, doi_hopf_entwining, drinfeld_codouble, long_codouble, long_entwining,
    yd_adjoint_regular, yd_entwining, yd_regular_adjoint, ComoduleAlgebra, DoiHopfDatum,
    LongDimodule, ModuleCoalgebra, YdModule,
};
use crate::entwine::{
    canonical_module_ah, canonical_module_ha, check_entwined_module, check_entwining,
    check_entwining_monoidal, codouble, codouble_bialgebra, cotwistor_from_entwining,
    entwining_from_cotwistor, hopf_module_entwining, BialgebraEntwining, EntwinedModule,
    EntwiningMap,
};
use crate::error::{Error, Result};
use crate::hom::{
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf, dual_bialgebra,
    dual_coalgebra, yau_twist, yau_twist_hopf, MonoidalContext, ObjectWithAut,
};
use crate::io::{
    self, load_cotwistor, load_datum, load_entwining, parse_matrix_file, read_file, ModuleFile,
    StructureFile,
};
use crate::linmap::flip;
use crate::report::{AxiomCheck, CheckReport};
use crate::smash::{
    build_smash_bialgebra, build_smash_coproduct, check_cotwistor, check_cotwistor_monoidal,
    BialgebraCotwistor, Cotwistor, SmashOrder,
};
use std::path::{Path, PathBuf};

/// The five command verbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Verify,
    Construct,
    Correspond,
    Equation,
    Report,
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Verify => "verify",
            Verb::Construct => "construct",
            Verb::Correspond => "correspond",
            Verb::Equation => "equation",
            Verb::Report => "report",
        }
    }
}

/// Integer degree parameters; every command reads the ones it uses and
/// echoes all of them into the report (defaults are 0).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Degrees {
    pub i: i64,
    pub j: i64,
    pub n: i64,
    pub m: i64,
    pub p: i64,
    pub q: i64,
    pub k: i64,
}

impl Degrees {
    pub fn ctx(&self) -> MonoidalContext {
        MonoidalContext::new(self.i, self.j)
    }
}

/// A fully-resolved command: verb, subject kind, named input paths, and
/// switches. The binary builds this from argv; it can equally be built
/// programmatically.
#[derive(Clone, Debug)]
pub struct Command {
    pub verb: Verb,
    pub subject: String,
    /// Named inputs in role order, e.g. `[("in", path)]`,
    /// `[("hopf", h), ("module", u)], ...`.
    pub inputs: Vec<(String, PathBuf)>,
    pub out: Option<PathBuf>,
    pub degrees: Degrees,
    /// `hg` or `gh` for the smash-bialgebra product order.
    pub order: Option<SmashOrder>,
    /// A named map: `flip` or a matrix-file path.
    pub phi: Option<String>,
    /// Generator family for module construction.
    pub family: Option<String>,
    /// `ha` or `ah` for canonical modules.
    pub side: Option<String>,
    pub monoidal: bool,
    pub machine: bool,
}

impl Command {
    pub fn new(verb: Verb, subject: &str) -> Self {
        Command {
            verb,
            subject: subject.to_string(),
            inputs: Vec::new(),
            out: None,
            degrees: Degrees::default(),
            order: None,
            phi: None,
            family: None,
            side: None,
            monoidal: false,
            machine: false,
        }
    }

    pub fn input(mut self, role: &str, path: impl Into<PathBuf>) -> Self {
        self.inputs.push((role.to_string(), path.into()));
        self
    }

    fn find(&self, role: &str) -> Result<&PathBuf> {
        self.inputs
            .iter()
            .find(|(r, _)| r == role)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::pre(format!("missing input --{role}")))
    }

    fn find_all(&self, role: &str) -> Vec<&PathBuf> {
        self.inputs
            .iter()
            .filter(|(r, _)| r == role)
            .map(|(_, p)| p)
            .collect()
    }
}

/// The outcome of one command: the exit status, the rendered report, and
/// the structured report itself.
pub struct Outcome {
    pub exit: i32,
    pub rendered: String,
    pub report: Report,
}

/// A deterministic run report: subject, tool version, input digests,
/// echoed parameters, per-axiom verdicts.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub subject: String,
    pub version: String,
    pub inputs: Vec<(String, String)>,
    pub params: Vec<(String, String)>,
    pub checks: Vec<AxiomCheck>,
    pub notes: Vec<String>,
    pub error: Option<String>,
}

impl Report {
    pub fn overall(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.verdict)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("homalg report\n");
        out.push_str(&format!("version {}\n", self.version));
        out.push_str(&format!("command {}\n", self.subject));
        for (path, digest) in &self.inputs {
            out.push_str(&format!("input {path} {digest}\n"));
        }
        for (name, value) in &self.params {
            out.push_str(&format!("param {name} {value}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("note {note}\n"));
        }
        for c in &self.checks {
            match (&c.verdict, &c.witness) {
                (true, _) => out.push_str(&format!("check {} pass\n", c.axiom)),
                (false, Some(w)) => out.push_str(&format!("check {} fail {w}\n", c.axiom)),
                (false, None) => out.push_str(&format!("check {} fail\n", c.axiom)),
            }
        }
        match &self.error {
            Some(e) => out.push_str(&format!("error {e}\noverall error\n")),
            None => out.push_str(&format!(
                "overall {}\n",
                if self.overall() { "pass" } else { "fail" }
            )),
        }
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        out.push_str("H homalg-report v1\n");
        out.push_str(&format!("V {}\n", self.version));
        out.push_str(&format!("C {}\n", self.subject));
        for (path, digest) in &self.inputs {
            out.push_str(&format!("I {path}\t{digest}\n"));
        }
        for (name, value) in &self.params {
            out.push_str(&format!("P {name}\t{value}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("N {note}\n"));
        }
        for c in &self.checks {
            match (&c.verdict, &c.witness) {
                (true, _) => out.push_str(&format!("A {}\tpass\n", c.axiom)),
                (false, Some(w)) => out.push_str(&format!("A {}\tfail\t{w}\n", c.axiom)),
                (false, None) => out.push_str(&format!("A {}\tfail\n", c.axiom)),
            }
        }
        match &self.error {
            Some(e) => out.push_str(&format!("E {e}\nO error\n")),
            None => out.push_str(&format!(
                "O {}\n",
                if self.overall() { "pass" } else { "fail" }
            )),
        }
        out
    }
}

/// FNV-1a 64-bit content digest, rendered as 16 hex digits.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv1a:{h:016x}")
}

fn degree_params(d: &Degrees) -> Vec<(String, String)> {
    [
        ("i", d.i),
        ("j", d.j),
        ("n", d.n),
        ("m", d.m),
        ("p", d.p),
        ("q", d.q),
        ("k", d.k),
    ]
    .iter()
    .map(|(n, v)| (n.to_string(), v.to_string()))
    .collect()
}

struct Session {
    report: Report,
}

impl Session {
    fn new(cmd: &Command) -> Self {
        let mut report = Report {
            subject: format!("{} {}", cmd.verb.name(), cmd.subject),
            version: env!("CARGO_PKG_VERSION").to_string(),
            ..Report::default()
        };
        report.params = degree_params(&cmd.degrees);
        if let Some(order) = cmd.order {
            report.params.push((
                "order".into(),
                match order {
                    SmashOrder::Hg => "hg".into(),
                    SmashOrder::Gh => "gh".into(),
                },
            ));
        }
        if cmd.monoidal {
            report.params.push(("monoidal".into(), "true".into()));
        }
        Session { report }
    }

    fn digest_input(&mut self, path: &Path) -> Result<String> {
        let text = read_file(path)?;
        self.report
            .inputs
            .push((path.display().to_string(), digest(text.as_bytes())));
        Ok(text)
    }

    fn absorb(&mut self, check: CheckReport) {
        self.report.checks.extend(check.checks);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.report.notes.push(s.into());
    }
}

fn load_module_as_entwined(file: &ModuleFile, n: i64) -> Result<EntwinedModule> {
    EntwinedModule::new(
        ObjectWithAut::new(file.alpha.clone())?,
        file.action.clone(),
        file.coaction.clone(),
        n,
        file.over.0,
        file.over.1,
    )
}

fn bialgebra_entwining(file: &io::EntwiningFile) -> Result<BialgebraEntwining> {
    BialgebraEntwining::new(
        file.h_file.bialgebra()?,
        file.a_file.bialgebra()?,
        file.entwining.phi.clone(),
    )
}

fn write_out(cmd: &Command, session: &mut Session, text: &str) -> Result<()> {
    let out = cmd
        .out
        .as_ref()
        .ok_or_else(|| Error::pre("missing --out path"))?;
    std::fs::write(out, text).map_err(|source| Error::Io {
        path: out.display().to_string(),
        source,
    })?;
    session.note(format!(
        "wrote {} {}",
        out.display(),
        digest(text.as_bytes())
    ));
    Ok(())
}

/// Write an entwining file plus the sibling structure files it references.
fn write_entwining_files(
    cmd: &Command,
    session: &mut Session,
    h: &StructureFile,
    a: &StructureFile,
    e: &EntwiningMap,
) -> Result<()> {
    let out = cmd
        .out
        .as_ref()
        .ok_or_else(|| Error::pre("missing --out path"))?;
    let stem = out.display().to_string();
    let h_path = format!("{stem}-coalgebra.struct");
    let a_path = format!("{stem}-algebra.struct");
    for (path, text) in [
        (&h_path, io::render_structure(h)),
        (&a_path, io::render_structure(a)),
    ] {
        std::fs::write(path, &text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        session.note(format!("wrote {path} {}", digest(text.as_bytes())));
    }
    let base = |p: &str| {
        Path::new(p)
            .file_name()
            .map(|f| f.to_string_lossy().to_string())
            .unwrap_or_else(|| p.to_string())
    };
    let text = io::render_entwining(&base(&h_path), &base(&a_path), &e.phi);
    write_out(cmd, session, &text)
}

fn run_inner(cmd: &Command, session: &mut Session) -> Result<()> {
    match (cmd.verb, cmd.subject.as_str()) {
        (Verb::Verify | Verb::Report, kind) => run_verify(cmd, session, kind),
        (Verb::Construct, what) => run_construct(cmd, session, what),
        (Verb::Correspond, direction) => run_correspond(cmd, session, direction),
        (Verb::Equation, which) => run_equation(cmd, session, which),
    }
}

fn load_structure_input(cmd: &Command, session: &mut Session, role: &str) -> Result<StructureFile> {
    let path = cmd.find(role)?.clone();
    let text = session.digest_input(&path)?;
    io::parse_structure(&path.display().to_string(), &text)
}

fn load_module_input(cmd: &Command, session: &mut Session, path: &Path) -> Result<ModuleFile> {
    let _ = cmd;
    let text = session.digest_input(path)?;
    io::parse_module(&path.display().to_string(), &text)
}

fn run_verify(cmd: &Command, session: &mut Session, kind: &str) -> Result<()> {
    match kind {
        "algebra" => {
            let s = load_structure_input(cmd, session, "in")?;
            session.absorb(check_hom_algebra(&s.algebra()?));
        }
        "coalgebra" => {
            let s = load_structure_input(cmd, session, "in")?;
            session.absorb(check_hom_coalgebra(&s.coalgebra()?));
        }
        "bialgebra" => {
            let s = load_structure_input(cmd, session, "in")?;
            session.absorb(check_hom_bialgebra(&s.bialgebra()?));
        }
        "hopf" => {
            let s = load_structure_input(cmd, session, "in")?;
            session.absorb(check_hom_hopf(&s.hopf()?));
        }
        "cotwistor" => {
            let path = cmd.find("in")?.clone();
            session.digest_input(&path)?;
            let file = load_cotwistor(&path)?;
            if cmd.monoidal {
                let c = BialgebraCotwistor::new(
                    file.b_file.bialgebra()?,
                    file.h_file.bialgebra()?,
                    file.cotwistor.phi.clone(),
                )?;
                session.absorb(check_cotwistor_monoidal(&c));
            } else {
                session.absorb(check_cotwistor(&file.cotwistor));
            }
        }
        "entwining" => {
            let path = cmd.find("in")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            if cmd.monoidal {
                session.absorb(check_entwining_monoidal(&bialgebra_entwining(&file)?));
            } else {
                session.absorb(check_entwining(&file.entwining));
            }
        }
        "module" => {
            let e_path = cmd.find("entwining")?.clone();
            session.digest_input(&e_path)?;
            let e = load_entwining(&e_path)?;
            let m_path = cmd.find("module")?.clone();
            let file = load_module_input(cmd, session, &m_path)?;
            let module = load_module_as_entwined(&file, file.n)?;
            session
                .report
                .params
                .push(("module_n".into(), file.n.to_string()));
            session.absorb(check_entwined_module(&module, &e.entwining)?);
        }
        "doi-datum" => {
            let path = cmd.find("in")?.clone();
            session.digest_input(&path)?;
            let file = load_datum(&path)?;
            let h = file.h.bialgebra()?;
            let a = ComoduleAlgebra::new(file.a.algebra()?, file.coaction.clone(), h.dim())?;
            let c = ModuleCoalgebra::new(file.c.coalgebra()?, file.action.clone(), h.dim())?;
            let mut combined = CheckReport::new("doi datum");
            combined.absorb("comodule_algebra", check_comodule_algebra(&a, &h)?);
            combined.absorb("module_coalgebra", check_module_coalgebra(&c, &h)?);
            if cmd.monoidal {
                let datum = DoiHopfDatum::new(h.clone(), a, c, file.k, file.m)?;
                combined.absorb(
                    "monoidal",
                    check_doi_monoidal(&datum, &file.a.bialgebra()?, &file.c.bialgebra()?)?,
                );
            }
            session.absorb(combined);
        }
        "doi-module" => {
            let d_path = cmd.find("datum")?.clone();
            session.digest_input(&d_path)?;
            let file = load_datum(&d_path)?;
            let h = file.h.bialgebra()?;
            let a = ComoduleAlgebra::new(file.a.algebra()?, file.coaction.clone(), h.dim())?;
            let c = ModuleCoalgebra::new(file.c.coalgebra()?, file.action.clone(), h.dim())?;
            let datum = DoiHopfDatum::new(h, a, c, file.k, file.m)?;
            let m_path = cmd.find("module")?.clone();
            let mfile = load_module_input(cmd, session, &m_path)?;
            let module = load_module_as_entwined(&mfile, mfile.n)?;
            session
                .report
                .params
                .push(("module_k".into(), mfile.n.to_string()));
            session.absorb(check_doi_hopf_module(&module, &datum)?);
        }
        "long" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let b = s.bialgebra()?;
            let m_path = cmd.find("module")?.clone();
            let file = load_module_input(cmd, session, &m_path)?;
            let module = LongDimodule::new(
                ObjectWithAut::new(file.alpha.clone())?,
                file.action.clone(),
                file.coaction.clone(),
                b.dim(),
            )?;
            session.absorb(check_long_dimodule(&module, &b)?);
        }
        "yd" => {
            let s = load_structure_input(cmd, session, "hopf")?;
            let h = s.hopf()?;
            let m_path = cmd.find("module")?.clone();
            let file = load_module_input(cmd, session, &m_path)?;
            let module = YdModule::new(
                ObjectWithAut::new(file.alpha.clone())?,
                file.action.clone(),
                file.coaction.clone(),
                file.n,
                h.dim(),
            )?;
            session
                .report
                .params
                .push(("module_p".into(), file.n.to_string()));
            session.absorb(check_yd_module(&module, &h)?);
        }
        other => return Err(Error::pre(format!("unknown verify kind `{other}`"))),
    }
    Ok(())
}

fn load_pair_cotwistor(
    cmd: &Command,
    session: &mut Session,
) -> Result<(StructureFile, StructureFile, crate::linmap::LinearMap)> {
    let b_file = load_structure_input(cmd, session, "b")?;
    let h_file = load_structure_input(cmd, session, "h")?;
    let (db, dh) = (b_file.dim, h_file.dim);
    let phi = match cmd.phi.as_deref() {
        None | Some("flip") => {
            session.report.params.push(("phi".into(), "flip".into()));
            flip(db, dh)
        }
        Some(path) => {
            let text = session.digest_input(Path::new(path))?;
            session.report.params.push(("phi".into(), path.to_string()));
            let m = parse_matrix_file(path, &text)?;
            if m.rows() != dh * db || m.cols() != db * dh {
                return Err(Error::dims(
                    "phi matrix",
                    m.shape(),
                    format!("{}x{}", dh * db, db * dh),
                ));
            }
            m
        }
    };
    Ok((b_file, h_file, phi))
}

fn run_construct(cmd: &Command, session: &mut Session, what: &str) -> Result<()> {
    match what {
        "sample" => {
            use crate::hom::samples;
            let family = cmd.family.as_deref().unwrap_or("kc2");
            session
                .report
                .params
                .push(("family".into(), family.to_string()));
            let file = match family {
                "trivial" => StructureFile::from_hopf(&samples::trivial_hopf()),
                "kc2" => StructureFile::from_hopf(&samples::cyclic_group_hopf(2)?),
                "kc4" => StructureFile::from_hopf(&samples::cyclic_group_hopf(4)?),
                "sweedler" => StructureFile::from_hopf(&samples::sweedler_hopf()?),
                "twisted-kc4" => StructureFile::from_hopf(&samples::twisted_kc4()?),
                "twisted-sweedler" => StructureFile::from_hopf(&samples::twisted_sweedler()?),
                other => return Err(Error::pre(format!("unknown sample family `{other}`"))),
            };
            write_out(cmd, session, &io::render_structure(&file))?;
        }
        "smash" => {
            let (b_file, h_file, phi) = load_pair_cotwistor(cmd, session)?;
            let c = Cotwistor::new(b_file.coalgebra()?, h_file.coalgebra()?, phi)?;
            let smash = build_smash_coproduct(&c)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_coalgebra(&smash)),
            )?;
        }
        "smash-bialgebra" => {
            let order = cmd
                .order
                .ok_or_else(|| Error::pre("smash-bialgebra requires an explicit --order hg|gh"))?;
            let (b_file, h_file, phi) = load_pair_cotwistor(cmd, session)?;
            let c = BialgebraCotwistor::new(b_file.bialgebra()?, h_file.bialgebra()?, phi)?;
            let smash = build_smash_bialgebra(&c, order)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_bialgebra(&smash)),
            )?;
        }
        "dual-coalgebra" => {
            let s = load_structure_input(cmd, session, "in")?;
            let dual = dual_coalgebra(&s.algebra()?)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_coalgebra(&dual)),
            )?;
        }
        "dual-bialgebra" => {
            let s = load_structure_input(cmd, session, "in")?;
            let dual = dual_bialgebra(&s.bialgebra()?)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_bialgebra(&dual)),
            )?;
        }
        "yau-twist" => {
            let s = load_structure_input(cmd, session, "in")?;
            let alpha_path = cmd.find("alpha")?.clone();
            let text = session.digest_input(&alpha_path)?;
            let alpha = parse_matrix_file(&alpha_path.display().to_string(), &text)?;
            let out = if let Ok(hopf) = s.hopf() {
                StructureFile::from_hopf(&yau_twist_hopf(&hopf, &alpha)?)
            } else {
                StructureFile::from_bialgebra(&yau_twist(&s.bialgebra()?, &alpha)?)
            };
            write_out(cmd, session, &io::render_structure(&out))?;
        }
        "codouble" => {
            let path = cmd.find("entwining")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            let d = codouble(&file.entwining)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_coalgebra(&d)),
            )?;
        }
        "codouble-bialgebra" => {
            let path = cmd.find("entwining")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            let d = codouble_bialgebra(&bialgebra_entwining(&file)?)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_bialgebra(&d)),
            )?;
        }
        "long-codouble" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let d = long_codouble(&s.bialgebra()?)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_bialgebra(&d)),
            )?;
        }
        "drinfeld-codouble" => {
            let s = load_structure_input(cmd, session, "hopf")?;
            let d = drinfeld_codouble(&s.hopf()?, cmd.degrees.m)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_bialgebra(&d)),
            )?;
        }
        "doi-codouble" => {
            let path = cmd.find("datum")?.clone();
            session.digest_input(&path)?;
            let file = load_datum(&path)?;
            let datum = datum_from_file(&file)?;
            let d = doi_codouble(&datum)?;
            write_out(
                cmd,
                session,
                &io::render_structure(&StructureFile::from_coalgebra(&d)),
            )?;
        }
        "doi-entwining" => {
            let path = cmd.find("datum")?.clone();
            session.digest_input(&path)?;
            let file = load_datum(&path)?;
            let datum = datum_from_file(&file)?;
            let e = doi_hopf_entwining(&datum)?;
            write_entwining_files(cmd, session, &file.c, &file.a, &e)?;
        }
        "long-entwining" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let e = long_entwining(&s.bialgebra()?);
            write_entwining_files(cmd, session, &s, &s, &e.plain())?;
        }
        "yd-entwining" => {
            let s = load_structure_input(cmd, session, "hopf")?;
            let e = yd_entwining(&s.hopf()?, cmd.degrees.m)?;
            write_entwining_files(cmd, session, &s, &s, &e)?;
        }
        "hopf-entwining" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let e = hopf_module_entwining(&s.bialgebra()?, cmd.degrees.n)?;
            write_entwining_files(cmd, session, &s, &s, &e)?;
        }
        "canonical-module" => {
            let path = cmd.find("entwining")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            let n = cmd.degrees.n;
            let module = match cmd.side.as_deref() {
                Some("ah") => canonical_module_ah(&file.entwining, n)?,
                None | Some("ha") => canonical_module_ha(&file.entwining, n)?,
                Some(other) => return Err(Error::pre(format!("unknown --side `{other}`"))),
            };
            let mf = ModuleFile {
                dim: module.dim(),
                over: (file.entwining.a.dim(), file.entwining.h.dim()),
                n,
                alpha: module.carrier.alpha().clone(),
                action: module.action.clone(),
                coaction: module.coaction.clone(),
            };
            write_out(cmd, session, &io::render_module(&mf))?;
        }
        "long-module" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let b = s.bialgebra()?;
            let module = match cmd.family.as_deref() {
                Some("regular-action") => LongDimodule::with_regular_action(&b),
                Some("regular-coaction") => LongDimodule::with_regular_coaction(&b),
                None | Some("trivial") => LongDimodule::trivial(&b),
                Some(other) => return Err(Error::pre(format!("unknown --family `{other}`"))),
            };
            let mf = ModuleFile {
                dim: module.dim(),
                over: (b.dim(), b.dim()),
                n: 0,
                alpha: module.carrier.alpha().clone(),
                action: module.action.clone(),
                coaction: module.coaction.clone(),
            };
            write_out(cmd, session, &io::render_module(&mf))?;
        }
        "yd-module" => {
            let s = load_structure_input(cmd, session, "hopf")?;
            let h = s.hopf()?;
            let p = cmd.degrees.p;
            let b = &h.bialgebra;
            let module = match cmd.family.as_deref() {
                Some("regular-adjoint") => yd_regular_adjoint(&h, p)?,
                Some("adjoint-regular") => yd_adjoint_regular(&h, p)?,
                Some("regular-action") => YdModule::new(
                    b.carrier().clone(),
                    b.mult().clone(),
                    b.alpha().kron(b.unit()),
                    p,
                    b.dim(),
                )?,
                Some("regular-coaction") => YdModule::new(
                    b.carrier().clone(),
                    b.alpha().kron(b.counit()),
                    b.comult().clone(),
                    p,
                    b.dim(),
                )?,
                None | Some("trivial") => YdModule::new(
                    b.carrier().clone(),
                    b.alpha().kron(b.counit()),
                    b.alpha().kron(b.unit()),
                    p,
                    b.dim(),
                )?,
                Some(other) => return Err(Error::pre(format!("unknown --family `{other}`"))),
            };
            let mf = ModuleFile {
                dim: module.dim(),
                over: (b.dim(), b.dim()),
                n: p,
                alpha: module.carrier.alpha().clone(),
                action: module.action.clone(),
                coaction: module.coaction.clone(),
            };
            write_out(cmd, session, &io::render_module(&mf))?;
        }
        other => return Err(Error::pre(format!("unknown construct subject `{other}`"))),
    }
    Ok(())
}

fn datum_from_file(file: &io::DatumFile) -> Result<DoiHopfDatum> {
    let h = file.h.bialgebra()?;
    let a = ComoduleAlgebra::new(file.a.algebra()?, file.coaction.clone(), h.dim())?;
    let c = ModuleCoalgebra::new(file.c.coalgebra()?, file.action.clone(), h.dim())?;
    DoiHopfDatum::new(h, a, c, file.k, file.m)
}

fn run_correspond(cmd: &Command, session: &mut Session, direction: &str) -> Result<()> {
    match direction {
        "to-cotwistor" => {
            let path = cmd.find("entwining")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            let c = cotwistor_from_entwining(&file.entwining)?;
            let out = cmd
                .out
                .as_ref()
                .ok_or_else(|| Error::pre("missing --out path"))?;
            let stem = out.display().to_string();
            let b_path = format!("{stem}-b.struct");
            let h_path = format!("{stem}-h.struct");
            // carry the dual bialgebra structure when the algebra side has
            // it, so the written cotwistor stays checkable monoidally
            let b_struct = match file.a_file.bialgebra() {
                Ok(a_bi) => StructureFile::from_bialgebra(&dual_bialgebra(&a_bi)?),
                Err(_) => StructureFile::from_coalgebra(&c.b),
            };
            let b_text = io::render_structure(&b_struct);
            let h_text = io::render_structure(&file.h_file);
            for (p, t) in [(&b_path, &b_text), (&h_path, &h_text)] {
                std::fs::write(p, t).map_err(|source| Error::Io {
                    path: p.clone(),
                    source,
                })?;
                session.note(format!("wrote {p} {}", digest(t.as_bytes())));
            }
            let base = |p: &str| {
                Path::new(p)
                    .file_name()
                    .map(|f| f.to_string_lossy().to_string())
                    .unwrap_or_else(|| p.to_string())
            };
            let text = io::render_cotwistor(&base(&b_path), &base(&h_path), &c.phi);
            write_out(cmd, session, &text)?;
        }
        "to-entwining" => {
            let path = cmd.find("cotwistor")?.clone();
            session.digest_input(&path)?;
            let file = load_cotwistor(&path)?;
            let a_file = load_structure_input(cmd, session, "algebra")?;
            let e = entwining_from_cotwistor(&file.cotwistor, &a_file.algebra()?)?;
            write_entwining_files(cmd, session, &file.h_file, &a_file, &e)?;
        }
        "roundtrip" => {
            let path = cmd.find("entwining")?.clone();
            session.digest_input(&path)?;
            let file = load_entwining(&path)?;
            let c = cotwistor_from_entwining(&file.entwining)?;
            let back = entwining_from_cotwistor(&c, &file.entwining.a)?;
            let mut report = CheckReport::new("correspondence round trip");
            report.push(if back.phi == file.entwining.phi {
                AxiomCheck::passed("roundtrip.entwining")
            } else {
                AxiomCheck {
                    axiom: "roundtrip.entwining".into(),
                    verdict: false,
                    witness: None,
                }
            });
            let c2 = cotwistor_from_entwining(&back)?;
            report.push(if c2.phi == c.phi {
                AxiomCheck::passed("roundtrip.cotwistor")
            } else {
                AxiomCheck {
                    axiom: "roundtrip.cotwistor".into(),
                    verdict: false,
                    witness: None,
                }
            });
            // axiom pairing on the unperturbed map
            let e_report = check_entwining(&file.entwining);
            let m_report = check_cotwistor(&c);
            for (e_axiom, m_axiom) in [
                ("alpha_compat", "alpha_compat"),
                ("E1", "M1"),
                ("E2", "M2"),
                ("E3", "M3"),
                ("E4", "M4"),
            ] {
                let agree = e_report.axiom_passed(e_axiom) == m_report.axiom_passed(m_axiom);
                report.push(if agree {
                    AxiomCheck::passed(&format!("pairing.{e_axiom}"))
                } else {
                    AxiomCheck {
                        axiom: format!("pairing.{e_axiom}"),
                        verdict: false,
                        witness: None,
                    }
                });
            }
            session.absorb(report);
        }
        other => {
            return Err(Error::pre(format!(
                "unknown correspond direction `{other}`"
            )))
        }
    }
    Ok(())
}

fn run_equation(cmd: &Command, session: &mut Session, which: &str) -> Result<()> {
    match which {
        "ybe" => {
            let s = load_structure_input(cmd, session, "hopf")?;
            let h = s.hopf()?;
            let modules = cmd.find_all("module");
            if modules.len() != 3 {
                return Err(Error::pre("equation ybe needs exactly three --modules"));
            }
            let mut yd = Vec::new();
            for path in modules {
                let file = load_module_input(cmd, session, path)?;
                yd.push(YdModule::new(
                    ObjectWithAut::new(file.alpha.clone())?,
                    file.action.clone(),
                    file.coaction.clone(),
                    cmd.degrees.p,
                    h.dim(),
                )?);
            }
            for (idx, module) in yd.iter().enumerate() {
                let r = check_yd_module(module, &h)?;
                let mut prefixed = CheckReport::new("");
                prefixed.absorb(&format!("module{idx}"), r);
                session.absorb(prefixed);
            }
            session.absorb(check_hom_ybe(
                cmd.degrees.ctx(),
                &yd[0],
                &yd[1],
                &yd[2],
                &h,
            )?);
        }
        "d" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            let b = s.bialgebra()?;
            let modules = cmd.find_all("module");
            if modules.len() != 3 {
                return Err(Error::pre("equation d needs exactly three --modules"));
            }
            let mut long = Vec::new();
            for path in modules {
                let file = load_module_input(cmd, session, path)?;
                long.push(LongDimodule::new(
                    ObjectWithAut::new(file.alpha.clone())?,
                    file.action.clone(),
                    file.coaction.clone(),
                    b.dim(),
                )?);
            }
            for (idx, module) in long.iter().enumerate() {
                let r = check_long_dimodule(module, &b)?;
                let mut prefixed = CheckReport::new("");
                prefixed.absorb(&format!("module{idx}"), r);
                session.absorb(prefixed);
            }
            session.absorb(check_d_equation(
                cmd.degrees.ctx(),
                cmd.degrees.m,
                &long[0],
                &long[1],
                &long[2],
                &b,
            )?);
        }
        "zeta" => {
            let s = load_structure_input(cmd, session, "bialgebra")?;
            session.absorb(check_zeta_d_type(cmd.degrees.q, &s.bialgebra()?)?);
        }
        other => return Err(Error::pre(format!("unknown equation `{other}`"))),
    }
    Ok(())
}

/// Run one command: load inputs, execute, render. Never panics on
/// malformed input; errors become exit status 2.
pub fn run(cmd: &Command) -> Outcome {
    let mut session = Session::new(cmd);
    let exit = match run_inner(cmd, &mut session) {
        Ok(()) => {
            if cmd.verb == Verb::Report || session.report.overall() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            session.report.error = Some(e.to_string());
            2
        }
    };
    let rendered = if cmd.machine {
        session.report.render_machine()
    } else {
        session.report.render_text()
    };
    Outcome {
        exit,
        rendered,
        report: session.report,
    }
}
