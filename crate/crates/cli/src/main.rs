mod manifest;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sparse_ramsey::bounds::{best_interval, lower_bounds, ramsey_lower, upper_bounds, Family, RamseyKey, RamseyTable};
use sparse_ramsey::color::{
    biclique_free_partition, cycle_free_partition, find_mono_copy, greedy_backdegree_coloring, is_ramsey,
    path_free_partition, EdgeColoring, EngineOptions, Pattern, SearchOptions,
};
use sparse_ramsey::constructions::{build_gnkm, build_gstar, kpq_witness, GStarParams, DEFAULT_VERTEX_BUDGET};
use sparse_ramsey::contract::contract_dense;
use sparse_ramsey::decompose::{
    a_d_exact, acyclic_orient, nash_williams, split_into_star_forests, AdLimits, Diameter,
};
use sparse_ramsey::graph::{p3_witness, read_edge_list, write_edge_list, write_multigraph, NamedGraph};
use sparse_ramsey::parameters::{m1_density, m1_k_density, m2_density, m_density};
use sparse_ramsey::{Error, Graph};

use manifest::RunManifest;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "sparse-ramsey", version, about = "Densities, decompositions, colorings and Ramsey-density bounds")]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Leave timing out of the run manifest.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Node budget for exhaustive coloring searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Ramsey table replacing the bundled one.
    #[arg(long, global = true)]
    table: Option<PathBuf>,
    /// Run manifest file; `-` disables the manifest.
    #[arg(long, global = true, default_value = "runs.log")]
    runs_log: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact density parameters.
    Density {
        #[arg(long, value_enum)]
        param: Param,
        #[arg(long)]
        k: Option<usize>,
        graph: PathBuf,
    },
    /// Forest, star-forest, orientation and bounded-diameter decompositions.
    #[command(subcommand)]
    Decompose(Decompose),
    /// Contract the maximal over-dense parts.
    Contract {
        #[arg(long)]
        r: u64,
        graph: PathBuf,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Pattern-free edge colorings.
    #[command(subcommand)]
    Color(Color),
    #[command(subcommand)]
    Construct(Construct),
    /// Bounds on the Ramsey density of a pattern.
    Bounds {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Param {
    M,
    M1,
    M1k,
    M2,
}

#[derive(Subcommand, Debug)]
enum Decompose {
    Forests { graph: PathBuf },
    Stars { graph: PathBuf },
    Orient {
        #[arg(long)]
        k: u64,
        graph: PathBuf,
    },
    Ad {
        /// Diameter bound, or `inf`.
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = AdLimits::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = AdLimits::default().max_edges)]
        max_edges: usize,
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Exit 0 if every coloring has a monochromatic copy, 1 with a good
    /// coloring, 2 when the budget runs out.
    Ramsey {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        r: usize,
        /// Write the good coloring here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Exit 0 if the coloring has no monochromatic copy, 1 otherwise.
    Coloring {
        #[arg(long)]
        pattern: String,
        graph: PathBuf,
        coloring: PathBuf,
    },
}

#[derive(Args, Debug)]
struct Output {
    /// Output file (default: stdout).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Color {
    Greedy {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: usize,
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    CycleFree {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        /// Ramsey value to use (default: the table's lower bound).
        #[arg(long)]
        ramsey: Option<usize>,
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    BicliqueFree {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        ramsey: Option<usize>,
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    PathFree {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        ramsey: Option<usize>,
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    Gnkm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
        /// Fiber index file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    Gstar {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// File with lines `n = ...`, `s = ...`, `m = ...`.
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
        /// Accept sequences that break the defining relations.
        #[arg(long)]
        relax: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    Kpq {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
        #[command(flatten)]
        out: Output,
    },
    WitnessP3 {
        #[command(flatten)]
        out: Output,
    },
    /// `complete:L`, `complete-bipartite:A,B`, `path:L`, `cycle:L` or `star:L`.
    Named {
        family: String,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = Result<T, Failure>;

struct Ctx {
    manifest: RunManifest,
    table: Option<RamseyTable>,
    table_path: Option<PathBuf>,
    budget: Option<u64>,
    out: String,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Res<String> {
        let bytes = std::fs::read(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
        self.manifest.record_input(path, &bytes);
        String::from_utf8(bytes).map_err(|_| Failure::Io(format!("{} is not UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Res<Graph> {
        let text = self.read(path)?;
        Ok(read_edge_list(&text)?)
    }

    fn pattern(&mut self, spec: &str) -> Res<Pattern> {
        if let Some(path) = spec.strip_prefix("file:") {
            let g = self.graph(Path::new(path))?;
            let p = Pattern::Explicit(g);
            p.validate()?;
            return Ok(p);
        }
        spec.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
    }

    fn table(&mut self) -> Res<&RamseyTable> {
        if self.table.is_none() {
            let t = match self.table_path.clone() {
                Some(p) => {
                    let text = self.read(&p)?;
                    RamseyTable::parse(&text)?
                }
                None => RamseyTable::seed(),
            };
            self.table = Some(t);
        }
        Ok(self.table.as_ref().expect("just set"))
    }

    fn search(&self) -> SearchOptions {
        let mut o = SearchOptions::default();
        if let Some(b) = self.budget {
            o.budget = b;
        }
        o
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{key} = {value}");
    }

    /// Writes `text` to `out` or appends it to stdout.
    fn emit(&mut self, out: &Output, text: &str) -> Res<()> {
        match &out.output {
            Some(p) => {
                write_file(p, text)?;
                self.line("written", p.display());
            }
            None => self.out.push_str(text),
        }
        Ok(())
    }

    fn ramsey_default(&mut self, key: RamseyKey) -> Res<usize> {
        let v = ramsey_lower(self.table()?, &key);
        usize::try_from(&v.value).map_err(|_| Failure::Domain(Error::SizeLimit(format!("{key} >= {} is too large", v.value))))
    }
}

fn write_file(path: &Path, text: &str) -> Res<()> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn ids(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Density { .. } => "density",
        Command::Decompose(Decompose::Forests { .. }) => "decompose forests",
        Command::Decompose(Decompose::Stars { .. }) => "decompose stars",
        Command::Decompose(Decompose::Orient { .. }) => "decompose orient",
        Command::Decompose(Decompose::Ad { .. }) => "decompose ad",
        Command::Contract { .. } => "contract",
        Command::Verify(Verify::Ramsey { .. }) => "verify ramsey",
        Command::Verify(Verify::Coloring { .. }) => "verify coloring",
        Command::Color(Color::Greedy { .. }) => "color greedy",
        Command::Color(Color::CycleFree { .. }) => "color cycle-free",
        Command::Color(Color::BicliqueFree { .. }) => "color biclique-free",
        Command::Color(Color::PathFree { .. }) => "color path-free",
        Command::Construct(Construct::Gnkm { .. }) => "construct gnkm",
        Command::Construct(Construct::Gstar { .. }) => "construct gstar",
        Command::Construct(Construct::Kpq { .. }) => "construct kpq",
        Command::Construct(Construct::WitnessP3 { .. }) => "construct witness-p3",
        Command::Construct(Construct::Named { .. }) => "construct named",
        Command::Bounds { .. } => "bounds",
    }
}

fn run(cmd: &Command, ctx: &mut Ctx) -> Res<u8> {
    match cmd {
        Command::Density { param, k, graph } => {
            let g = ctx.graph(graph)?;
            let w = match param {
                Param::M => m_density(&g),
                Param::M1 => m1_density(&g)?,
                Param::M1k => {
                    let k = k.ok_or_else(|| Failure::Usage("--param m1k needs --k".into()))?;
                    m1_k_density(&g, k)?
                }
                Param::M2 => m2_density(&g)?,
            };
            ctx.line("value", &w.value);
            ctx.line("witness", ids(&w.witness));
        }
        Command::Decompose(d) => decompose(d, ctx)?,
        Command::Contract { r, graph } => {
            let g = ctx.graph(graph)?;
            let cert = contract_dense(&g, *r)?;
            ctx.line("rounds", cert.rounds);
            ctx.line("members", cert.family.len());
            for (i, set) in cert.family.sets().iter().enumerate() {
                ctx.line(&format!("member {i}"), ids(set));
            }
            ctx.line("map", ids(&cert.map));
            ctx.out.push_str("contracted:\n");
            ctx.out.push_str(&write_multigraph(&cert.contracted));
        }
        Command::Verify(v) => return verify(v, ctx),
        Command::Color(c) => color(c, ctx)?,
        Command::Construct(c) => construct(c, ctx)?,
        Command::Bounds { pattern, r } => {
            let p = ctx.pattern(pattern)?;
            let table = ctx.table()?.clone();
            let interval = best_interval(&p, *r, &table)?;
            ctx.line("interval", &interval);
            ctx.line("pattern", &p);
            ctx.line("r", r);
            ctx.line("lower", &interval.lower.value);
            ctx.line("lower_rule", interval.lower.rule);
            match &interval.upper {
                Some(u) => {
                    ctx.line("upper", &u.value);
                    ctx.line("upper_strict", u.strict);
                    ctx.line("upper_rule", u.rule);
                }
                None => ctx.line("upper", "unknown"),
            }
            for t in lower_bounds(&p, *r, &table)? {
                ctx.line("lower_term", t);
            }
            for t in upper_bounds(&p, *r, &table)? {
                ctx.line("upper_term", t);
            }
        }
    }
    Ok(0)
}

fn decompose(d: &Decompose, ctx: &mut Ctx) -> Res<()> {
    match d {
        Decompose::Forests { graph } => {
            let g = ctx.graph(graph)?;
            let p = nash_williams(&g);
            ctx.line("classes", p.classes.len());
            ctx.out.push_str(&p.to_string());
        }
        Decompose::Stars { graph } => {
            let g = ctx.graph(graph)?;
            let p = nash_williams(&g);
            let mut classes = Vec::new();
            for class in &p.classes {
                classes.extend(split_into_star_forests(g.vertex_count(), class)?);
            }
            classes.retain(|c| !c.is_empty());
            ctx.line("classes", classes.len());
            for (i, class) in classes.iter().enumerate() {
                let edges: Vec<String> = class.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(ctx.out, "class {i}: {}", edges.join(" "));
            }
        }
        Decompose::Orient { k, graph } => {
            let g = ctx.graph(graph)?;
            let o = acyclic_orient(&g, *k)?;
            ctx.line("max_in_degree", o.max_in_degree);
            ctx.line("order", ids(&o.order));
            for &(u, v, w) in &o.arcs {
                for _ in 0..w {
                    let _ = writeln!(ctx.out, "{u}->{v}");
                }
            }
        }
        Decompose::Ad {
            d,
            max_vertices,
            max_edges,
            graph,
        } => {
            let diameter = match d.as_str() {
                "inf" | "infinite" => Diameter::Infinite,
                s => Diameter::Finite(s.parse().map_err(|_| Failure::Usage(format!("bad diameter '{s}'")))?),
            };
            let g = ctx.graph(graph)?;
            let limits = AdLimits {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
            };
            ctx.line("a_d", a_d_exact(&g, diameter, limits)?);
        }
    }
    Ok(())
}

fn verify(v: &Verify, ctx: &mut Ctx) -> Res<u8> {
    match v {
        Verify::Ramsey {
            pattern,
            r,
            certificate,
            graph,
        } => {
            let p = ctx.pattern(pattern)?;
            let g = ctx.graph(graph)?;
            match is_ramsey(&g, &p, *r, ctx.search()) {
                Err(Error::BudgetExhausted { nodes }) => {
                    ctx.line("status", "budget-exhausted");
                    ctx.line("nodes", nodes);
                    Ok(2)
                }
                Err(e) => Err(e.into()),
                Ok(verdict) => {
                    ctx.line("is_ramsey", verdict.is_ramsey);
                    ctx.line("nodes", verdict.nodes);
                    ctx.line("prefixes", verdict.prefixes);
                    let Some(cert) = verdict.certificate else { return Ok(0) };
                    match certificate {
                        Some(path) => {
                            write_file(path, &cert.to_text())?;
                            ctx.line("certificate", path.display());
                        }
                        None => ctx.line("coloring", ids(cert.colors())),
                    }
                    Ok(1)
                }
            }
        }
        Verify::Coloring {
            pattern,
            graph,
            coloring,
        } => {
            let p = ctx.pattern(pattern)?;
            let g = ctx.graph(graph)?;
            let text = ctx.read(coloring)?;
            let c = EdgeColoring::from_text(&text)?;
            if c.host() != &g {
                return Err(Error::InvalidParameter("the coloring is for a different graph".into()).into());
            }
            match find_mono_copy(&c, &p)? {
                None => {
                    ctx.line("valid", true);
                    Ok(0)
                }
                Some(copy) => {
                    ctx.line("valid", false);
                    ctx.line("color", copy.color);
                    ctx.line("copy", ids(&copy.vertices));
                    Ok(1)
                }
            }
        }
    }
}

fn color(c: &Color, ctx: &mut Ctx) -> Res<()> {
    let opts = EngineOptions {
        search: ctx.search(),
        ..EngineOptions::default()
    };
    let (coloring, out) = match c {
        Color::Greedy { r, delta, graph, out } => {
            let g = ctx.graph(graph)?;
            (greedy_backdegree_coloring(&g, *r, *delta)?, out)
        }
        Color::CycleFree {
            l,
            r,
            ramsey,
            graph,
            out,
        } => {
            let g = ctx.graph(graph)?;
            let rv = match ramsey {
                Some(x) => *x,
                None => ctx.ramsey_default(RamseyKey::diagonal(Family::cycle(*l)?, *r))?,
            };
            ctx.line("ramsey", rv);
            (cycle_free_partition(&g, *l, *r, rv, opts)?, out)
        }
        Color::BicliqueFree {
            a,
            b,
            r,
            ramsey,
            graph,
            out,
        } => {
            let g = ctx.graph(graph)?;
            let rv = match ramsey {
                Some(x) => *x,
                None => ctx.ramsey_default(RamseyKey::diagonal(Family::biclique(*a, *b)?, *r))?,
            };
            ctx.line("ramsey", rv);
            (biclique_free_partition(&g, *a, *b, *r, rv, opts)?, out)
        }
        Color::PathFree {
            l,
            r,
            ramsey,
            graph,
            out,
        } => {
            let g = ctx.graph(graph)?;
            let rv = match ramsey {
                Some(x) => *x,
                None => ctx.ramsey_default(RamseyKey::diagonal(Family::path((*l / 3).max(1))?, *r))?,
            };
            ctx.line("ramsey", rv);
            (path_free_partition(&g, *l, *r, rv, opts)?, out)
        }
    };
    ctx.emit(out, &coloring.to_text())
}

fn read_overrides(text: &str) -> Res<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let (mut n, mut s, mut m) = (None, None, None);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Failure::Domain(Error::Parse {
            line: i + 1,
            message: format!("expected 'n|s|m = values', got '{line}'"),
        });
        let (key, values) = line.split_once('=').ok_or_else(bad)?;
        let values: Vec<usize> = values
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match key.trim() {
            "n" => n = Some(values),
            "s" => s = Some(values),
            "m" => m = Some(values),
            _ => return Err(bad()),
        }
    }
    let missing = |k: &str| Failure::Domain(Error::InvalidParameter(format!("override file has no '{k}' line")));
    Ok((n.ok_or_else(|| missing("n"))?, s.ok_or_else(|| missing("s"))?, m.ok_or_else(|| missing("m"))?))
}

fn construct(c: &Construct, ctx: &mut Ctx) -> Res<()> {
    let (graph, out) = match c {
        Construct::Gnkm {
            n,
            k,
            m,
            max_vertices,
            sidecar,
            out,
        } => {
            let fg = build_gnkm(*n, *k, *m, *max_vertices)?;
            if let Some(p) = sidecar {
                write_file(p, &fg.sidecar())?;
                ctx.line("sidecar", p.display());
            }
            (fg.graph, out)
        }
        Construct::Gstar {
            l,
            k,
            r,
            overrides,
            relax,
            max_vertices,
            sidecar,
            out,
        } => {
            let params = match overrides {
                Some(path) => {
                    let text = ctx.read(path)?;
                    let (n, s, m) = read_overrides(&text)?;
                    GStarParams {
                        l: *l,
                        k: *k,
                        r: *r,
                        n,
                        s,
                        m,
                        relax: *relax,
                    }
                }
                None => GStarParams::canonical(*l, *k, *r, ctx.table()?)?,
            };
            let g = build_gstar(&params, *max_vertices)?;
            ctx.line("canonical", g.canonical);
            if let Some(p) = sidecar {
                write_file(p, &g.sidecar())?;
                ctx.line("sidecar", p.display());
            }
            (g.graph, out)
        }
        Construct::Kpq {
            a,
            b,
            r,
            max_vertices,
            out,
        } => (kpq_witness(*a, *b, *r, *max_vertices)?, out),
        Construct::WitnessP3 { out } => (p3_witness(), out),
        Construct::Named { family, out } => {
            let named: NamedGraph = family.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            (named.build()?, out)
        }
    };
    ctx.emit(out, &write_edge_list(&graph))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let start = Instant::now();
    let mut ctx = Ctx {
        manifest: RunManifest {
            subcommand: subcommand_name(&cli.command).into(),
            argv: argv[1..].to_vec(),
            threads: rayon::current_num_threads(),
            deterministic: cli.deterministic,
            ..Default::default()
        },
        table: None,
        table_path: cli.table.clone(),
        budget: cli.budget,
        out: String::new(),
    };
    let code = match run(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            EXIT_IO
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            EXIT_DATA
        }
    };
    print!("{}", ctx.out);
    ctx.manifest.wall_ms = start.elapsed().as_millis();
    ctx.manifest.exit_code = code;
    ctx.manifest.stdout = std::mem::take(&mut ctx.out);
    if cli.runs_log.as_os_str() != "-" {
        if let Err(e) = ctx.manifest.append(&cli.runs_log) {
            eprintln!("error: cannot append to {}: {e}", cli.runs_log.display());
            if code == 0 {
                return ExitCode::from(EXIT_IO);
            }
        }
    }
    ExitCode::from(code)
}
