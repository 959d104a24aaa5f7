use clap::{Args, Parser, Subcommand};
use mwlinks::algebra::{parse_q, pow2, Q};
use mwlinks::chord::{enumerate_planar_diagrams, Arc, ChordDiagram, ChordError, PlanarLoop, RawDiagram};
use mwlinks::curve::{
    analyze_projection, certify_mw_with, extract_with_seed, parse_curve, parse_point, random_projection_points,
    ComplexQ, CurveError, RawCurve,
};
use mwlinks::degree::{classify, enumerate_classes_with, DegreeChordDiagram, DegreeError, RawDegreeChord, RawRefinement, Refinement};
use mwlinks::link::{LinkDiagram, LinkError, RawLinkDiagram};
use mwlinks::moves::{chord_move_path, slide_path, HopfTriple, MoveError, RawTriple};
use mwlinks::pl::{build_wga_model, PlError};
use mwlinks::Exec;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

mod svg;

#[derive(Parser)]
#[command(name = "mwlinks", version, about = "Maximally writhed real algebraic links")]
struct Cli {
    /// Seed for projection points and section planes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write JSON here instead of stdout.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    /// Also render the chord diagram as SVG.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Width of reported parameter boxes (decisions never depend on it).
    #[arg(long, global = true, default_value = "1/18446744073709551616")]
    isolation_eps: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chord diagrams (`chord-diagram.v1`).
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Degree-chord diagrams and rigid isotopy classes.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Chord moves and chord slides.
    #[command(subcommand)]
    Moves(MovesCmd),
    /// Link diagram invariants (`link-diagram.v1`).
    #[command(subcommand)]
    Writhe(WritheCmd),
    /// Rational space curves (`curve.v1`).
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Piecewise-linear models.
    #[command(subcommand)]
    Model(ModelCmd),
}

#[derive(Subcommand)]
enum DiagramCmd {
    Check { file: PathBuf },
    Canon { file: PathBuf },
    Loops { file: PathBuf },
    Enumerate {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        delta: usize,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Class of a degree-chord diagram; chirality from the file or --chirality.
    Link {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        chirality: Option<i64>,
    },
    Enumerate(EnumArgs),
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    d: i64,
    #[arg(long)]
    g: i64,
    #[arg(long, default_value_t = 0)]
    delta: i64,
}

#[derive(Subcommand)]
enum MovesCmd {
    /// Chord-move path between two Hopf triples.
    Path { from: PathBuf, to: PathBuf },
    /// Chord-slide path between two refinements.
    SlidePath { from: PathBuf, to: PathBuf },
}

#[derive(Subcommand)]
enum WritheCmd {
    Compute { file: PathBuf },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Double points and encomplexed writhe of one projection.
    Analyze {
        file: PathBuf,
        /// Projection centre a,b,c,d; drawn from --seed if absent.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value_t = 24)]
        trials: usize,
    },
    CertifyMw {
        file: PathBuf,
        #[arg(long, default_value_t = 16)]
        trials: usize,
    },
    /// Degree-chord diagram from real plane sections through z(q), z(q̄).
    Chords {
        file: PathBuf,
        /// Non-real parameter q as re,im.
        #[arg(long, allow_hyphen_values = true, default_value = "0,1")]
        q: String,
    },
}

#[derive(Subcommand)]
enum ModelCmd {
    /// W_g(α) model and its doubled linking matrix.
    Wga {
        /// Partition as comma-separated parts, e.g. 2,1.
        #[arg(long)]
        alpha: String,
        /// Export the loops as OBJ polylines.
        #[arg(long)]
        obj: Option<PathBuf>,
    },
}

/// Failure with its exit status: 1 schema, 2 mathematical precondition, 3 resource cap.
#[derive(Debug)]
struct Fail {
    code: u8,
    kind: String,
    message: String,
}

fn kind_of<E: std::fmt::Debug>(e: &E) -> String {
    let s = format!("{e:?}");
    s.split(['(', ' ', '{']).next().unwrap_or("").to_string()
}

fn fail<E: std::fmt::Debug + std::fmt::Display>(code: u8, e: E) -> Fail {
    Fail { code, kind: kind_of(&e), message: e.to_string() }
}

fn schema(msg: impl Into<String>) -> Fail {
    Fail { code: 1, kind: "Schema".into(), message: msg.into() }
}

fn chord_fail(e: ChordError) -> Fail {
    match e {
        ChordError::NotPlanar => fail(2, e),
        _ => fail(1, e),
    }
}

fn degree_fail(e: DegreeError) -> Fail {
    match e {
        DegreeError::Chord(c) => chord_fail(c),
        DegreeError::MissingLoop(_)
        | DegreeError::UnknownLoop(_)
        | DegreeError::DuplicateLoop(_)
        | DegreeError::InvalidChirality(_) => fail(1, e),
        _ => fail(2, e),
    }
}

fn move_fail(e: MoveError) -> Fail {
    match e {
        MoveError::StateCapExceeded(_) => fail(3, e),
        MoveError::Degree(d) => degree_fail(d),
        MoveError::Chord(c) => chord_fail(c),
        MoveError::InvalidTriple(_) | MoveError::BadAnchor(_) => fail(1, e),
        _ => fail(2, e),
    }
}

fn link_fail(e: LinkError) -> Fail {
    match e {
        LinkError::TooManyNodes { .. } | LinkError::ComponentCountMismatch { .. } => fail(2, e),
        _ => fail(1, e),
    }
}

fn curve_fail(e: CurveError) -> Fail {
    match e {
        CurveError::DegreeMismatch(_) | CurveError::BadRational(_) => fail(1, e),
        CurveError::NoGenericProjectionFound(_) => fail(3, e),
        _ => fail(2, e),
    }
}

fn pl_fail(e: PlError) -> Fail {
    match e {
        PlError::NoGenericDirection(_) => fail(3, e),
        _ => fail(2, e),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| schema(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| schema(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| Fail { code: 1, kind: "Io".into(), message: format!("{}: {e}", path.display()) })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn arc_name(cd: &ChordDiagram, a: Arc) -> String {
    match a {
        Arc::After(p) => format!("after:{}", cd.name(p)),
        Arc::Circle(k) => format!("circle:{k}"),
    }
}

fn loops_json(cd: &ChordDiagram, loops: &[PlanarLoop], degrees: Option<&[u32]>) -> Value {
    Value::Array(
        loops
            .iter()
            .enumerate()
            .map(|(i, lp)| {
                let mut v = json!({
                    "id": lp.id,
                    "arcs": lp.arcs.iter().map(|&a| arc_name(cd, a)).collect::<Vec<_>>(),
                    "chords": lp.chords.iter().map(|&c| {
                        let (a, b) = cd.chords()[c];
                        [cd.name(a), cd.name(b)]
                    }).collect::<Vec<_>>(),
                });
                if let Some(d) = degrees {
                    v["degree"] = json!(d[i]);
                }
                v
            })
            .collect(),
    )
}

fn parse_list(s: &str, n: usize, what: &str) -> Result<Vec<Q>, Fail> {
    let v: Option<Vec<Q>> = s.split(',').map(parse_q).collect();
    match v {
        Some(v) if v.len() == n => Ok(v),
        _ => Err(schema(format!("{what}: expected {n} comma-separated rationals, got {s:?}"))),
    }
}

struct Ctx {
    seed: u64,
    svg: Option<PathBuf>,
    eps: Q,
}

impl Ctx {
    fn draw(&self, cd: &ChordDiagram, loops: &[PlanarLoop], degrees: Option<&[u32]>) -> Result<(), Fail> {
        match &self.svg {
            Some(p) => write_file(p, &svg::render(cd, loops, degrees)),
            None => Ok(()),
        }
    }
}

fn diagram(ctx: &Ctx, cmd: DiagramCmd) -> Result<Value, Fail> {
    if let DiagramCmd::Enumerate { l, delta } = cmd {
        let ds = enumerate_planar_diagrams(l, delta, Exec::default());
        return Ok(json!({
            "l": l,
            "delta": delta,
            "count": ds.len(),
            "diagrams": ds.iter().map(|d| to_value(&d.to_raw())).collect::<Vec<_>>(),
        }));
    }
    let file = match &cmd {
        DiagramCmd::Check { file } | DiagramCmd::Canon { file } | DiagramCmd::Loops { file } => file,
        DiagramCmd::Enumerate { .. } => unreachable!(),
    };
    let raw: RawDiagram = read_json(file)?;
    let cd = ChordDiagram::validate(&raw).map_err(chord_fail)?;
    let loops = cd.planar_loops().map_err(chord_fail)?;
    ctx.draw(&cd, &loops, None)?;
    Ok(match cmd {
        DiagramCmd::Check { .. } => json!({
            "valid": true,
            "planar": true,
            "l": cd.l(),
            "delta": cd.delta(),
            "loops": loops.len(),
        }),
        DiagramCmd::Canon { .. } => json!({ "code": cd.canonical_form() }),
        _ => json!({ "loops": loops_json(&cd, &loops, None) }),
    })
}

fn classify_cmd(ctx: &Ctx, cmd: ClassifyCmd) -> Result<Value, Fail> {
    match cmd {
        ClassifyCmd::Link { file, chirality } => {
            let raw: RawDegreeChord = read_json(&file)?;
            let dcd = DegreeChordDiagram::from_raw(&raw).map_err(degree_fail)?;
            let ch = chirality.or(raw.chirality).ok_or_else(|| schema("chirality missing"))?;
            let class = classify(&dcd, ch).map_err(degree_fail)?;
            ctx.draw(&dcd.base, &dcd.loops, Some(&dcd.degrees))?;
            Ok(json!({
                "degree": dcd.degree(),
                "genus": dcd.genus(),
                "delta": dcd.delta(),
                "nodal_hopf": dcd.is_nodal_hopf(),
                "class": to_value(&class),
                "loops": loops_json(&dcd.base, &dcd.loops, Some(&dcd.degrees)),
            }))
        }
        ClassifyCmd::Enumerate(a) => {
            let classes = enumerate_classes_with(a.d, a.g, a.delta, Exec::default()).map_err(degree_fail)?;
            Ok(json!({
                "d": a.d,
                "g": a.g,
                "delta": a.delta,
                "count": classes.len(),
                "classes": to_value(&classes),
            }))
        }
    }
}

fn moves_cmd(cmd: MovesCmd) -> Result<Value, Fail> {
    match cmd {
        MovesCmd::Path { from, to } => {
            let a = HopfTriple::from_raw(&read_json::<RawTriple>(&from)?).map_err(move_fail)?;
            let b = HopfTriple::from_raw(&read_json::<RawTriple>(&to)?).map_err(move_fail)?;
            let path = chord_move_path(&a, &b).map_err(move_fail)?;
            Ok(json!({ "length": path.len(), "steps": to_value(&path) }))
        }
        MovesCmd::SlidePath { from, to } => {
            let a = Refinement::from_raw(&read_json::<RawRefinement>(&from)?).map_err(degree_fail)?;
            let b = Refinement::from_raw(&read_json::<RawRefinement>(&to)?).map_err(degree_fail)?;
            let path = slide_path(&a, &b).map_err(move_fail)?;
            Ok(json!({ "length": path.len(), "steps": to_value(&path) }))
        }
    }
}

fn writhe_cmd(cmd: WritheCmd) -> Result<Value, Fail> {
    let WritheCmd::Compute { file } = cmd;
    let raw: RawLinkDiagram = read_json(&file)?;
    let d = LinkDiagram::from_raw(&raw).map_err(link_fail)?;
    Ok(to_value(&d.report()))
}

fn curve_cmd(ctx: &Ctx, cmd: CurveCmd) -> Result<Value, Fail> {
    let file = match &cmd {
        CurveCmd::Analyze { file, .. } | CurveCmd::CertifyMw { file, .. } | CurveCmd::Chords { file, .. } => file,
    };
    let raw: RawCurve = read_json(file)?;
    let c = parse_curve(&raw).map_err(curve_fail)?;
    match cmd {
        CurveCmd::Analyze { point, trials, .. } => {
            let mut a = match point {
                Some(p) => {
                    let v: Vec<String> = p.split(',').map(String::from).collect();
                    let p = parse_point(&v).map_err(curve_fail)?;
                    analyze_projection(&c, &p).map_err(curve_fail)?
                }
                None => random_projection_points(ctx.seed, trials)
                    .iter()
                    .find_map(|p| analyze_projection(&c, p).ok())
                    .ok_or_else(|| curve_fail(CurveError::NoGenericProjectionFound(trials)))?,
            };
            a.refine_params(&ctx.eps);
            let w = (a.counts.solitary == 0).then(|| a.crossing_signs().iter().map(|&s| s as i64).sum::<i64>());
            Ok(json!({
                "projection_point": mwlinks::curve::fmt_point(&a.point),
                "n_d": a.n_d,
                "w": w,
                "counts": to_value(&a.counts),
                "nodes": to_value(&a.nodes),
            }))
        }
        CurveCmd::CertifyMw { trials, .. } => {
            let cert = certify_mw_with(&c, trials, ctx.seed, Exec::default()).map_err(curve_fail)?;
            Ok(to_value(&cert))
        }
        CurveCmd::Chords { q, .. } => {
            let v = parse_list(&q, 2, "--q")?;
            let e = extract_with_seed(&c, &ComplexQ::new(v[0].clone(), v[1].clone()), ctx.seed).map_err(curve_fail)?;
            ctx.draw(&e.diagram.base, &e.diagram.loops, Some(&e.diagram.degrees))?;
            Ok(to_value(&e.report()))
        }
    }
}

fn model_cmd(cmd: ModelCmd) -> Result<Value, Fail> {
    let ModelCmd::Wga { alpha, obj } = cmd;
    let parts: Result<Vec<u32>, _> = alpha.split(',').map(|s| s.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| schema(format!("--alpha: expected comma-separated integers, got {alpha:?}")))?;
    let m = build_wga_model(&parts).map_err(pl_fail)?;
    m.validate(Exec::default()).map_err(pl_fail)?;
    if let Some(p) = obj {
        write_file(&p, &m.to_obj())?;
    }
    Ok(to_value(&m.report().map_err(pl_fail)?))
}

fn run(cli: Cli) -> Result<(), Fail> {
    let eps = parse_q(&cli.isolation_eps)
        .filter(|e| *e > Q::from_integer(0.into()))
        .ok_or_else(|| schema("--isolation-eps must be a positive rational"))?;
    let ctx = Ctx { seed: cli.seed, svg: cli.svg, eps: eps.min(pow2(0)) };
    let out = match cli.cmd {
        Cmd::Diagram(c) => diagram(&ctx, c)?,
        Cmd::Classify(c) => classify_cmd(&ctx, c)?,
        Cmd::Moves(c) => moves_cmd(c)?,
        Cmd::Writhe(c) => writhe_cmd(c)?,
        Cmd::Curve(c) => curve_cmd(&ctx, c)?,
        Cmd::Model(c) => model_cmd(c)?,
    };
    let text = serde_json::to_string_pretty(&out).expect("serializable") + "\n";
    match cli.out {
        Some(p) => write_file(&p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message, "exit": f.code }));
            ExitCode::from(f.code)
        }
    }
}
