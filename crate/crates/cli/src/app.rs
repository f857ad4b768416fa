//! Command-line surface.
//!
//! Exit codes: 0 yes, 1 no, 2 error. Artifacts go to `--out` (with the report
//! on stdout and appended to `runs.jsonl` there) or, without it, to stdout
//! with the report on stderr. `gen` always writes files, to `.` by default.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hconvex_core::bounds::{
    proper_thinness_bound, spider_bound, thinness_bound, tree_bound, CIRCULAR_MIM_BOUND, CONVEX_MIM_BOUND,
};
use hconvex_core::decomp::{
    decompose_circular, decompose_convex, decompose_spider, decompose_tdelta, max_induced_matching_cut,
    max_induced_matching_sim, mimw_oracle, simw_oracle, width_of, DEFAULT_WIDTH_GUARD,
};
use hconvex_core::families::{augment_comb, augment_star};
use hconvex_core::support::{recognize_circular, recognize_convex, recognize_star, recognize_tdelta, verify_support};
use hconvex_core::thin::{
    linear_bd_from_thin, min_thin_representation, pathdecomp_to_pthin, thin_from_tree_support, verify_consistent,
    verify_pathdecomp, verify_strongly_consistent, DEFAULT_THIN_GUARD,
};
use hconvex_core::{BipartiteGraph, BranchDecomposition, CutMode, SupportKind, SupportWitness};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::format::{parse_graph, parse_pathdecomp, serialize_graph, GraphFile};
use crate::genspec::GenSpec;
use crate::json::{CutJson, DecompositionJson, MatchingJson, ThinJson, WitnessJson};
use crate::report::{Input, RunReport};

#[derive(Parser, Debug)]
#[command(name = "hconvex", version, about = "Recognize H-convex bipartite graphs and measure their widths")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest instance the exact oracles accept.
    #[arg(long, global = true)]
    pub guard: Option<usize>,
    /// Directory for artifacts and the run log.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find a support of the given class.
    Recognize { class: Class, graph: PathBuf },
    /// Build a branch decomposition and measure its mim-width against the bound.
    Decompose {
        class: Class,
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Width of a stored decomposition and its worst cut.
    Width {
        graph: PathBuf,
        decomposition: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Mim)]
        mode: Mode,
    },
    /// Exact values on small graphs.
    Oracle {
        param: OracleParam,
        graph: PathBuf,
        /// Comma-separated side of the cut, for mim-cut and sim-cut.
        #[arg(long, value_delimiter = ',')]
        side: Vec<String>,
    },
    /// Thin representation from a tree support.
    Thin {
        class: Class,
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Proper thin representation from a path decomposition.
    Convert { graph: PathBuf, pathdecomp: PathBuf },
    /// Generate an instance from `family:key=val,...[:seed=s]`.
    Gen {
        spec: String,
        #[arg(long, value_enum)]
        augment: Option<Augment>,
    },
    /// Check a stored artifact against a graph.
    Verify { what: Artifact, graph: PathBuf, file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Mim,
    Sim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleParam {
    Mimw,
    Simw,
    /// Both widths, checking simw <= mimw.
    Widths,
    Thin,
    Pthin,
    MimCut,
    SimCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Augment {
    Star,
    Comb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Artifact {
    Support,
    Thin,
    Pathdecomp,
    Decomposition,
}

/// Support class: `convex`, `circular`, `star` or `tdelta(t,Δ)` (also `tdelta:t,Δ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Convex,
    Circular,
    Star,
    Tdelta { t: usize, delta: usize },
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "convex" => return Ok(Class::Convex),
            "circular" => return Ok(Class::Circular),
            "star" => return Ok(Class::Star),
            _ => {}
        }
        let args = s
            .strip_prefix("tdelta(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("tdelta:"))
            .ok_or_else(|| format!("unknown class `{s}`; expected convex, circular, star or tdelta(t,delta)"))?;
        let (t, delta) = args.split_once(',').ok_or_else(|| format!("`{s}`: expected tdelta(t,delta)"))?;
        let t = t.trim().parse().map_err(|_| format!("`{s}`: t is not an integer"))?;
        let delta: usize = delta.trim().parse().map_err(|_| format!("`{s}`: delta is not an integer"))?;
        if delta < 2 {
            return Err(format!("`{s}`: delta must be at least 2"));
        }
        Ok(Class::Tdelta { t, delta })
    }
}

struct Output {
    suffix: &'static str,
    content: String,
}

struct Run<'a> {
    cli: &'a Cli,
    report: RunReport,
    stem: String,
    outputs: Vec<Output>,
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let start = Instant::now();
    let mut run = Run {
        cli: &cli,
        report: RunReport { command: args.iter().skip(1).cloned().collect(), ..RunReport::default() },
        stem: String::from("out"),
        outputs: Vec::new(),
    };
    let outcome = run.dispatch().and_then(|code| run.emit(stdout).map(|to_files| (code, to_files)));
    let (code, to_files) = match outcome {
        Ok(ok) => ok,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            run.report.message = Some(e.to_string());
            (2, cli.out.is_some())
        }
    };
    run.report.exit = code;
    run.report.result = ["yes", "no", "error"][code as usize].to_string();
    run.report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let rendered = match cli.format {
        Format::Json => run.report.to_json_line() + "\n",
        Format::Text => run.report.to_text(),
    };
    let _ = if to_files { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
    if let Some(dir) = &cli.out {
        let log = dir.join("runs.jsonl");
        let line = run.report.to_json_line() + "\n";
        let appended = fs::create_dir_all(dir).and_then(|_| {
            fs::OpenOptions::new().create(true).append(true).open(&log)?.write_all(line.as_bytes())
        });
        if let Err(e) = appended {
            let _ = writeln!(stderr, "error: {}: {e}", log.display());
            return 2;
        }
    }
    code
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("artifacts serialize") + "\n"
}

impl Run<'_> {
    fn dispatch(&mut self) -> Result<u8> {
        let cli = self.cli;
        match &cli.command {
            Command::Recognize { class, graph } => self.recognize(*class, graph),
            Command::Decompose { class, graph, witness } => self.decompose(*class, graph, witness.as_deref()),
            Command::Width { graph, decomposition, mode } => self.width(graph, decomposition, *mode),
            Command::Oracle { param, graph, side } => self.oracle(*param, graph, side),
            Command::Thin { class, graph, witness } => self.thin(*class, graph, witness.as_deref()),
            Command::Convert { graph, pathdecomp } => self.convert(graph, pathdecomp),
            Command::Gen { spec, augment } => self.generate(spec, *augment),
            Command::Verify { what, graph, file } => self.verify(*what, graph, file),
        }
    }

    // Write artifacts; true when they went to files.
    fn emit(&mut self, stdout: &mut dyn Write) -> Result<bool> {
        let gen = matches!(self.cli.command, Command::Gen { .. });
        let dir = match (&self.cli.out, gen) {
            (Some(dir), _) => dir.clone(),
            (None, true) => PathBuf::from("."),
            (None, false) => {
                for o in &self.outputs {
                    let _ = stdout.write_all(o.content.as_bytes());
                }
                return Ok(false);
            }
        };
        fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
        for o in &self.outputs {
            let path = dir.join(format!("{}.{}", self.stem, o.suffix));
            fs::write(&path, &o.content).map_err(|source| CliError::Io { path: path.clone(), source })?;
            self.report.outputs.push(path.display().to_string());
        }
        Ok(true)
    }

    fn input(&mut self, path: &Path) -> Result<Vec<u8>> {
        let bytes = read(path)?;
        self.report.inputs.push(Input::new(&path.display().to_string(), &bytes));
        Ok(bytes)
    }

    fn graph(&mut self, path: &Path) -> Result<GraphFile> {
        let bytes = self.input(path)?;
        self.stem = path.file_stem().map_or_else(|| "out".into(), |s| s.to_string_lossy().into_owned());
        let text = String::from_utf8_lossy(&bytes);
        parse_graph(&text).map_err(|source| CliError::Format { path: path.to_path_buf(), source })
    }

    fn bipartite(&mut self, path: &Path) -> Result<(GraphFile, BipartiteGraph)> {
        let file = self.graph(path)?;
        let g = file
            .bipartite()
            .cloned()
            .ok_or_else(|| CliError::Invalid(format!("{}: a bipartite graph file is required", path.display())))?;
        Ok((file, g))
    }

    fn json<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T> {
        let bytes = self.input(path)?;
        serde_json::from_slice(&bytes).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
    }

    fn output(&mut self, suffix: &'static str, content: String) {
        self.outputs.push(Output { suffix, content });
    }

    // A supplied witness (checked against the graph) or a recognized one.
    fn witness(&mut self, class: Class, file: &GraphFile, g: &BipartiteGraph, path: Option<&Path>) -> Result<Option<SupportWitness>> {
        let Some(path) = path else {
            return Ok(recognize(class, g));
        };
        let w = self.json::<WitnessJson>(path)?.to_witness(file.names(), g.a_size())?;
        if !verify_support(g, &w)? {
            return Err(CliError::Invalid(format!("{}: not a support of the graph", path.display())));
        }
        Ok(Some(w))
    }

    fn recognize(&mut self, class: Class, path: &Path) -> Result<u8> {
        let (file, g) = self.bipartite(path)?;
        let Some(w) = recognize(class, &g) else {
            return Ok(1);
        };
        if !(verify_support(&g, &w)? && w.is_well_shaped()) {
            return Err(CliError::Invalid("recognized witness failed verification".into()));
        }
        self.report.measure("t", w.t());
        self.report.measure("delta", w.max_degree());
        self.output("witness.json", to_json(&WitnessJson::new(&w, file.names())));
        Ok(0)
    }

    fn decompose(&mut self, class: Class, path: &Path, witness: Option<&Path>) -> Result<u8> {
        let (file, g) = self.bipartite(path)?;
        let Some(w) = self.witness(class, &file, &g, witness)? else {
            self.report.message = Some("no support of this class".into());
            return Ok(1);
        };
        let (d, bound) = match class {
            Class::Convex => (decompose_convex(&g, &as_path(&w)?)?, CONVEX_MIM_BOUND),
            Class::Circular => {
                let cycle = match w.kind() {
                    SupportKind::Cycle => w,
                    _ => SupportWitness::cycle(&as_path(&w)?.path_order().expect("path witness"))?,
                };
                (decompose_circular(&g, &cycle)?, CIRCULAR_MIM_BOUND)
            }
            Class::Star => {
                let tree = as_tree(w, 1, usize::MAX)?;
                let delta = tree.max_degree().max(2);
                (decompose_spider(&g, &tree)?, spider_bound(delta))
            }
            Class::Tdelta { t, delta } => {
                let td = decompose_tdelta(&g, &as_tree(w, t, delta)?)?;
                for s in &td.splits {
                    self.report.check(&format!("split cut at depth {}", s.depth), s.cut, s.bound);
                }
                (td.decomposition, tree_bound(t, delta))
            }
        };
        let (width, _) = width_of(&file.graph(), &d, CutMode::Mim)?;
        self.report.check("mim width", width, bound);
        self.output("decomposition.json", to_json(&DecompositionJson::new(&d, file.names())));
        Ok(if self.report.all_pass() { 0 } else { 1 })
    }

    fn width(&mut self, path: &Path, decomposition: &Path, mode: Mode) -> Result<u8> {
        let file = self.graph(path)?;
        let d: BranchDecomposition =
            self.json::<DecompositionJson>(decomposition)?.to_decomposition(file.names(), file.vertex_count())?;
        let (cut_mode, name) = match mode {
            Mode::Mim => (CutMode::Mim, "mim width"),
            Mode::Sim => (CutMode::Sim, "sim width"),
        };
        let (width, cut) = width_of(&file.graph(), &d, cut_mode)?;
        self.report.measure(name, width);
        let cut = cut.map(|c| CutJson::new(&c, &d, file.names()));
        self.output("cut.json", to_json(&cut));
        Ok(0)
    }

    fn oracle(&mut self, param: OracleParam, path: &Path, side: &[String]) -> Result<u8> {
        let file = self.graph(path)?;
        let g = file.graph();
        let names = file.names();
        let width_guard = self.cli.guard.unwrap_or(DEFAULT_WIDTH_GUARD);
        let thin_guard = self.cli.guard.unwrap_or(DEFAULT_THIN_GUARD);
        let mut code = 0;
        let artifact = match param {
            OracleParam::Mimw => {
                let v = mimw_oracle(&g, width_guard)?;
                self.report.measure("mimw", v);
                json!({ "mimw": v })
            }
            OracleParam::Simw => {
                let v = simw_oracle(&g, width_guard)?;
                self.report.measure("simw", v);
                json!({ "simw": v })
            }
            OracleParam::Widths => {
                let (mim, sim) = (mimw_oracle(&g, width_guard)?, simw_oracle(&g, width_guard)?);
                self.report.check("simw <= mimw", sim, mim);
                if sim > mim {
                    code = 1;
                }
                json!({ "mimw": mim, "simw": sim })
            }
            OracleParam::Thin | OracleParam::Pthin => {
                let strong = param == OracleParam::Pthin;
                let r = min_thin_representation(&g, strong, thin_guard)?;
                let key = if strong { "pthin" } else { "thin" };
                self.report.measure(key, r.class_count());
                json!({ key: r.class_count(), "representation": ThinJson::new(&r, names) })
            }
            OracleParam::MimCut | OracleParam::SimCut => {
                let side = side
                    .iter()
                    .map(|t| names.parse(t.trim()).map_err(|e| CliError::Invalid(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                let (m, key) = if param == OracleParam::MimCut {
                    (max_induced_matching_cut(&g, &side)?, "mim cut")
                } else {
                    (max_induced_matching_sim(&g, &side)?, "sim cut")
                };
                self.report.measure(key, m.size);
                json!({ "value": m.size, "matching": MatchingJson::new(&m, names) })
            }
        };
        self.output("oracle.json", to_json(&artifact));
        Ok(code)
    }

    fn thin(&mut self, class: Class, path: &Path, witness: Option<&Path>) -> Result<u8> {
        let (t, delta) = match class {
            Class::Convex => (0, 2),
            Class::Tdelta { t, delta } => (t, delta),
            _ => return Err(CliError::Invalid("thin takes convex or tdelta(t,delta)".into())),
        };
        let (file, g) = self.bipartite(path)?;
        let Some(w) = self.witness(class, &file, &g, witness)? else {
            self.report.message = Some("no support of this class".into());
            return Ok(1);
        };
        let w = as_tree(w, t, delta)?;
        let h = file.graph();
        let r = thin_from_tree_support(&g, &w)?;
        if !verify_consistent(&h, &r)? {
            return Err(CliError::Invalid("constructed representation is not consistent".into()));
        }
        self.report.check("classes", r.class_count(), thinness_bound(t, delta));
        let (width, _) = width_of(&h, &linear_bd_from_thin(&h, &r)?, CutMode::Mim)?;
        self.report.check("linear mim width", width, r.class_count());
        self.output("thin.json", to_json(&ThinJson::new(&r, file.names())));
        Ok(if self.report.all_pass() { 0 } else { 1 })
    }

    fn convert(&mut self, path: &Path, pathdecomp: &Path) -> Result<u8> {
        let file = self.graph(path)?;
        let text = String::from_utf8_lossy(&self.input(pathdecomp)?).into_owned();
        let p = parse_pathdecomp(&text, file.names())
            .map_err(|source| CliError::Format { path: pathdecomp.to_path_buf(), source })?;
        let h = file.graph();
        let (valid, q) = verify_pathdecomp(&h, &p);
        if !valid {
            return Err(CliError::Invalid(format!("{}: not a path decomposition of the graph", pathdecomp.display())));
        }
        let r = pathdecomp_to_pthin(&h, &p)?;
        if !verify_strongly_consistent(&h, &r)? {
            return Err(CliError::Invalid("constructed representation is not strongly consistent".into()));
        }
        self.report.measure("path width", q);
        self.report.check("classes", r.class_count(), proper_thinness_bound(q));
        self.output("pthin.json", to_json(&ThinJson::new(&r, file.names())));
        Ok(if self.report.all_pass() { 0 } else { 1 })
    }

    fn generate(&mut self, spec: &str, augment: Option<Augment>) -> Result<u8> {
        let spec: GenSpec = spec.parse()?;
        let (g, w) = spec.generate(self.cli.seed)?;
        self.stem = spec.stem(self.cli.seed);
        let (g, w) = match augment {
            None => (g, w),
            Some(Augment::Star) => {
                self.stem.push_str("_star");
                let star = augment_star(&g);
                let w = SupportWitness::star(star.a_size(), g.a_size())?;
                (star, Some(w))
            }
            Some(Augment::Comb) => {
                self.stem.push_str("_comb");
                let (comb, w) = augment_comb(&g);
                (comb, Some(w))
            }
        };
        if let Some(w) = &w {
            if !verify_support(&g, w)? {
                return Err(CliError::Invalid("planted witness failed verification".into()));
            }
        }
        self.report.measure("vertices", g.vertex_count());
        self.report.measure("edges", g.edge_count());
        let file = GraphFile::Bipartite(g);
        self.output("graph", serialize_graph(&file));
        if let Some(w) = w {
            self.output("witness.json", to_json(&WitnessJson::new(&w, file.names())));
        }
        Ok(0)
    }

    fn verify(&mut self, what: Artifact, path: &Path, artifact: &Path) -> Result<u8> {
        let file = self.graph(path)?;
        let names = file.names();
        let ok = match what {
            Artifact::Support => {
                let g = file
                    .bipartite()
                    .ok_or_else(|| CliError::Invalid("a bipartite graph file is required".into()))?;
                let claimed = self.json::<WitnessJson>(artifact)?;
                let w = claimed.host(names, g.a_size())?;
                self.report.measure("t", w.t());
                self.report.measure("delta", w.max_degree());
                let honest = w.is_well_shaped() && (w.t(), w.max_degree()) == (claimed.t, claimed.delta);
                honest && verify_support(g, &w)?
            }
            Artifact::Thin => {
                let r = self.json::<ThinJson>(artifact)?.to_representation(names, file.vertex_count())?;
                self.report.measure("classes", r.class_count());
                if r.is_strong() {
                    verify_strongly_consistent(&file.graph(), &r)?
                } else {
                    verify_consistent(&file.graph(), &r)?
                }
            }
            Artifact::Pathdecomp => {
                let text = String::from_utf8_lossy(&self.input(artifact)?).into_owned();
                let p = parse_pathdecomp(&text, names)
                    .map_err(|source| CliError::Format { path: artifact.to_path_buf(), source })?;
                let (valid, width) = verify_pathdecomp(&file.graph(), &p);
                self.report.measure("path width", width);
                valid
            }
            Artifact::Decomposition => {
                let d = self.json::<DecompositionJson>(artifact)?;
                match d.to_decomposition(names, file.vertex_count()) {
                    Ok(_) => true,
                    Err(e) => {
                        self.report.message = Some(e.to_string());
                        false
                    }
                }
            }
        };
        Ok(if ok { 0 } else { 1 })
    }
}

fn recognize(class: Class, g: &BipartiteGraph) -> Option<SupportWitness> {
    match class {
        Class::Convex => recognize_convex(g),
        Class::Circular => recognize_circular(g),
        Class::Star => recognize_star(g),
        Class::Tdelta { t, delta } => recognize_tdelta(g, t, delta),
    }
}

fn as_path(w: &SupportWitness) -> Result<SupportWitness> {
    let order = w
        .path_order()
        .ok_or_else(|| CliError::Invalid(format!("a path support is required, got a {}", w.kind().name())))?;
    Ok(SupportWitness::path(&order)?)
}

// A tree support within `(t, Δ)`.
fn as_tree(w: SupportWitness, t: usize, delta: usize) -> Result<SupportWitness> {
    if !w.is_tree() || w.t() > t || w.max_degree() > delta.max(2) {
        return Err(CliError::Invalid(format!(
            "a ({t}, {delta})-tree support is required; the witness has t={} and maximum degree {}",
            w.t(),
            w.max_degree()
        )));
    }
    Ok(w.with_kind(SupportKind::Tree))
}
