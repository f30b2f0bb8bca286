//! Command-line interface.

use std::path::PathBuf;

use anyhow::{bail, Context};
use cambrian_core::exchange::{self, ExchangeGraphSlice};
use cambrian_core::fan::{self, FrameworkGraph, StarKind, DEFAULT_LOOKAHEAD};
use cambrian_core::rootsys::RankTwoType;
use cambrian_core::verify::{self, AXIOMS};
use cambrian_core::{sortable, Classification, CoxeterGroup, ExchangeMatrix, RootSpace, Vector, DEFAULT_NODE_CAP};
use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::dot;
use crate::io::{self, FanFile};
use crate::project::{self, Chart, Projection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Classify,
    Sortables,
    Dcamb,
    Verify,
    ExchangeGraph,
    Green,
    Project,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

/// Exact Cambrian frameworks and doubled Cambrian fans.
///
/// The matrix file holds `{"n": 2, "B": [[0, 2], [-2, 0]]}` with `b_ij` in
/// row `i`, column `j`; this example is affine of type A1~.
#[derive(Clone, Debug, Parser)]
#[command(name = "cambrian", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Matrix JSON file, or `-` for standard input.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Matrix JSON given directly on the command line.
    #[arg(long, conflicts_with = "matrix")]
    pub inline: Option<String>,
    #[arg(long = "maxLen", default_value_t = 8)]
    pub max_len: usize,
    #[arg(long, default_value_t = 7)]
    pub depth: usize,
    /// Extra sortable length used to resolve edges of the core.
    #[arg(long, default_value_t = DEFAULT_LOOKAHEAD)]
    pub lookahead: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Projection chart: v1, v-1, v0, sphere or angle.
    #[arg(long)]
    pub chart: Option<String>,
    /// Seed for the randomized expansion order of the dictionary check.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Flip the sign of one label before verifying.
    #[arg(long)]
    pub corrupt: bool,
}

/// Files produced by a command; the first is printed when `--out` is absent.
pub struct Outcome {
    pub files: Vec<(String, String)>,
    pub success: bool,
}

impl Outcome {
    fn one(name: &str, body: String) -> Self {
        Outcome { files: vec![(name.to_string(), body)], success: true }
    }
}

pub fn node_cap() -> anyhow::Result<usize> {
    match std::env::var("CAMBRIAN_NODE_CAP") {
        Ok(v) => v.trim().parse().with_context(|| format!("CAMBRIAN_NODE_CAP={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_NODE_CAP),
    }
}

fn read_matrix(cli: &Cli) -> anyhow::Result<ExchangeMatrix> {
    let text = match (&cli.matrix, &cli.inline) {
        (_, Some(s)) => s.clone(),
        (Some(p), None) if p.as_os_str() == "-" => std::io::read_to_string(std::io::stdin())?,
        (Some(p), None) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        (None, None) => bail!("no matrix given; use --matrix FILE or --inline JSON"),
    };
    io::parse_matrix(&text)
}

fn root(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn one_based(w: &[usize]) -> Vec<usize> {
    w.iter().map(|i| i + 1).collect()
}

fn word(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("")
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let b = read_matrix(cli)?;
    let cap = node_cap()?;
    match cli.command {
        Command::Classify => classify(cli, &b),
        Command::Sortables => sortables(cli, &b, cap),
        Command::Dcamb => dcamb(cli, &b, cap),
        Command::Verify => verify_cmd(cli, &b, cap),
        Command::ExchangeGraph => exchange_graph(cli, &b, cap),
        Command::Green => green(cli, &b, cap),
        Command::Project => project_cmd(cli, &b, cap),
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> anyhow::Result<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!("format {f:?} is not available for {:?}", cli.command);
    }
    Ok(f)
}

fn classify(cli: &Cli, b: &ExchangeMatrix) -> anyhow::Result<Outcome> {
    let rs = RootSpace::build(b).ok();
    let sys = cambrian_core::RootSystem::from_cartan(b.cartan_companion())?;
    let class = sys.classify();
    let mut v = json!({ "d": sys.symmetrizer(), "cartan": sys.cartan() });
    let kind = match &class {
        Classification::Finite => "Finite",
        Classification::Indefinite => "Indefinite",
        Classification::Affine(a) => {
            v["delta"] = json!(a.delta);
            v["sAff"] = json!(a.s_aff + 1);
            v["S0"] = json!(one_based(&a.s0));
            v["theta"] = json!(a.theta);
            v["normalizedSymmetrizer"] = json!(io::rationals(&a.normalized_symmetrizer));
            if let Some(split) = rs.as_ref().and_then(|r| r.phi0_split().ok()) {
                v["phi0Plus"] = json!(split.plus);
                v["phi0Zero"] = json!(split.zero);
                v["phi0Minus"] = json!(split.minus);
                v["xc"] = json!(split.xc);
                v["xcFull"] = json!(io::rationals(&split.xc_full));
            }
            "Affine"
        }
    };
    v["classification"] = json!(kind);
    if let Some(r) = &rs {
        v["coxeterWord"] = json!(one_based(r.order()));
    }
    match format_or(cli, Format::Text, &[Format::Json, Format::Text])? {
        Format::Json => Ok(Outcome::one("classify.json", serde_json::to_string_pretty(&v)?)),
        _ => {
            let mut s = format!("{kind}\nd = {}\n", root(sys.symmetrizer()));
            if let Classification::Affine(a) = &class {
                s += &format!("delta = {}\ns_aff = s{}\nS0 = {:?}\ntheta = {}\n", root(&a.delta), a.s_aff + 1, one_based(&a.s0), root(&a.theta));
                if let Some(xc) = v.get("xc") {
                    s += &format!("x_c = {xc} (fundamental weights of S0)\n");
                }
            }
            Ok(Outcome::one("classify.txt", s))
        }
    }
}

fn sortables(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    let rs = RootSpace::build(b)?;
    let g = CoxeterGroup::new(&rs.sys);
    let list = sortable::enumerate_sortables(&g, &rs.coxeter_word(), cli.max_len, cap)?;
    match format_or(cli, Format::Text, &[Format::Json, Format::Csv, Format::Text])? {
        Format::Json => {
            let v: Vec<Value> = list
                .iter()
                .map(|s| json!({ "word": one_based(&s.word), "labels": s.labels, "covers": s.covers }))
                .collect();
            Ok(Outcome::one("sortables.json", serde_json::to_string_pretty(&v)?))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["length", "word", "labels"])?;
            for s in &list {
                let labels: Vec<String> = s.labels.iter().map(root).collect();
                w.write_record([s.length().to_string(), word(&s.word), labels.join(" ")])?;
            }
            Ok(Outcome::one("sortables.csv", String::from_utf8(w.into_inner()?)?))
        }
        _ => {
            let mut s = String::new();
            for v in &list {
                let labels: Vec<String> = v.labels.iter().map(root).collect();
                s += &format!("{:<14} {}\n", word(&v.word), labels.join(" "));
            }
            s += &format!("{} c-sortable elements of length <= {}\n", list.len(), cli.max_len);
            Ok(Outcome::one("sortables.txt", s))
        }
    }
}

fn graph(cli: &Cli, rs: &RootSpace, cap: usize) -> anyhow::Result<FrameworkGraph> {
    Ok(fan::doubled_graph(rs, cli.max_len, cli.lookahead, cap)?)
}

fn core_fan(rs: &RootSpace, fg: &FrameworkGraph) -> anyhow::Result<FanFile> {
    let cones = fg.core().into_iter().map(|v| fg.cone(&rs.sys, v)).collect::<Result<Vec<_>, _>>()?;
    Ok(FanFile::from_cones(&cones))
}

fn manifest(fg: &FrameworkGraph) -> Value {
    json!({
        "maxLen": fg.max_len,
        "lookahead": fg.lookahead,
        "vertices": fg.vertices.len(),
        "core": fg.core().len(),
        "interior": fg.interior(),
        "frontier": fg.core().into_iter().filter(|&v| fg.is_frontier(v)).collect::<Vec<_>>(),
        "conflicts": fg.conflicts,
    })
}

fn dcamb(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    let rs = RootSpace::build(b)?;
    let fg = graph(cli, &rs, cap)?;
    let dotf = ("dcamb.dot".to_string(), dot::framework(&fg));
    let fanf = ("fan.json".to_string(), core_fan(&rs, &fg)?.to_json());
    let man = manifest(&fg);
    let summary = format!(
        "{} vertices ({} core, {} interior, {} frontier), {} full edges\n",
        fg.vertices.len(),
        fg.core().len(),
        fg.interior().len(),
        fg.core().into_iter().filter(|&v| fg.is_frontier(v)).count(),
        fg.full_edges().len()
    );
    eprint!("{summary}");
    let manf = ("manifest.json".to_string(), serde_json::to_string_pretty(&man)?);
    let files = match format_or(cli, Format::Dot, &[Format::Json, Format::Dot, Format::Text])? {
        Format::Json => vec![fanf, dotf, manf],
        Format::Text => vec![("dcamb.txt".to_string(), summary), dotf, fanf, manf],
        _ => vec![dotf, fanf, manf],
    };
    Ok(Outcome { files, success: true })
}

fn witness_json(w: &verify::Witness) -> Value {
    json!({
        "axiom": format!("{:?}", w.axiom),
        "vertex": w.vertex,
        "labels": w.labels,
        "slots": w.slots,
        "neighbor": w.neighbor,
    })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The full verification suite as a JSON report.
pub fn verify_report(rs: &RootSpace, fg: &FrameworkGraph, depth: usize, cap: usize, seed: Option<u64>) -> anyhow::Result<(Value, bool)> {
    let sys = &rs.sys;
    let class = sys.classify();
    let tame = !matches!(class, Classification::Indefinite);
    let mut ok = true;
    let mut report = json!({
        "classification": match class { Classification::Finite => "Finite", Classification::Affine(_) => "Affine", _ => "Indefinite" },
        "maxLen": fg.max_len,
        "lookahead": fg.lookahead,
        "depth": depth,
    });

    let ax = verify::check_axioms(rs, fg);
    let mut axioms = serde_json::Map::new();
    for a in AXIOMS {
        axioms.insert(format!("{a:?}"), json!(status(ax.passed(a))));
    }
    ok &= ax.all_passed();
    report["axioms"] = json!({
        "status": axioms,
        "scope": ax.scope.len(),
        "verticesChecked": ax.vertices_checked,
        "edgesChecked": ax.edges_checked,
        "failures": ax.failures.iter().take(50).map(witness_json).collect::<Vec<_>>(),
        "replayable": ax.failures.iter().all(|w| verify::replay(rs, w)),
    });

    let cones = fg.cones(sys)?;
    let fc = fan::fan_check(sys, &cones);
    ok &= fc.passed();
    report["fan"] = json!({
        "status": status(fc.passed()),
        "cones": fc.cones,
        "pairs": fc.pairs,
        "violations": fc.violations.iter().map(|(i, j, x)| json!({"cones": [i, j], "witness": io::rationals(x)})).collect::<Vec<_>>(),
    });

    let cc = match seed {
        None => verify::cross_check(rs, fg, depth, cap)?,
        Some(s) => {
            let mut state = s;
            let n = rs.rank();
            let mut order = move |_v: usize| {
                let mut o: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    o.swap(i, (state >> 33) as usize % (i + 1));
                }
                o
            };
            verify::cross_check_with(rs, fg, depth, cap, &mut order)?
        }
    };
    ok &= cc.passed();
    report["crossCheck"] = json!({
        "status": status(cc.passed()),
        "matched": cc.matching.len(),
        "exchangeClasses": cc.exchange_classes,
        "exchangeInterior": cc.exchange_interior,
        "unmatchedClasses": cc.unmatched_classes.len(),
        "bijection": cc.vertex_bijection(),
        "mismatches": cc.mismatches.iter().map(|m| format!("{m:?}")).collect::<Vec<_>>(),
    });

    let scan = verify::completeness_scan(rs, fg.max_len, fg.lookahead, cap)?;
    ok &= scan.complete();
    report["completeness"] = json!({
        "status": status(scan.complete()),
        "bounds": [scan.bounds.0, scan.bounds.1],
        "deficits": [scan.deficits.0, scan.deficits.1],
        "persistent": scan.persistent.iter().map(|(k, l)| json!({"labels": k, "open": l})).collect::<Vec<_>>(),
    });

    let delta = sys.affine_data().ok().map(|a| a.delta);
    let (mut cycles, mut open, mut bad) = (0, 0, Vec::new());
    for v in fg.interior() {
        for e in 0..rs.rank() {
            for f in e + 1..rs.rank() {
                let star = fan::rank_two_star(rs, fg, v, e, f)?;
                let in_boundary = delta.as_ref().is_some_and(|d| star.face.iter().all(|r| sys.pair(r, d) == 0));
                let good = match star.kind {
                    StarKind::Cycle { length } => {
                        cycles += 1;
                        star.subsystem == RankTwoType::Finite && Some(length) == star.expected_length
                    }
                    StarKind::Open { .. } => {
                        open += 1;
                        !in_boundary || star.subsystem == RankTwoType::Affine
                    }
                };
                if !good || !star.face_shared {
                    bad.push(json!([v, e, f]));
                }
            }
        }
    }
    ok &= bad.is_empty();
    report["rankTwo"] = json!({ "status": status(bad.is_empty()), "cycles": cycles, "open": open, "violations": bad });

    if let Classification::Affine(aff) = sys.classify() {
        let bs = fan::boundary_support(rs, fg)?;
        let meets = fg.vertices.iter().filter(|v| fan::cone_meets_complement(sys, &aff, &bs.plus, &v.labels)).count();
        let chambers_ok = bs.chambers.iter().all(|c| {
            c.contains_xc == c.in_complement_closure && c.contains_xc != c.covered_by_c && c.contains_xc != c.covered_by_cinv
        });
        let split = rs.phi0_split()?;
        let xc_ok = split.zero.iter().all(|b| sys.pair_q(&split.xc_full, b) == 0.into()) && split.xc.iter().any(|&x| x != 0);
        let good = bs.complement_is_open() && meets == 0 && chambers_ok && xc_ok;
        ok &= good;
        report["boundary"] = json!({
            "status": status(good),
            "phi0Plus": bs.plus,
            "xc": io::rationals(&bs.xc),
            "complementRays": bs.complement_rays,
            "conesMeetingComplement": meets,
            "chambers": bs.chambers.iter().map(|c| json!({
                "rays": c.rays, "containsXc": c.contains_xc, "inComplement": c.in_complement_closure,
                "coveredByC": c.covered_by_c, "coveredByCinv": c.covered_by_cinv,
            })).collect::<Vec<_>>(),
        });
    }

    match verify::find_green_sequence(rs, fg) {
        Ok(path) => report["green"] = json!({ "status": "PASS", "path": path }),
        Err(e) => {
            ok &= !tame;
            report["green"] = json!({ "status": status(!tame), "error": e.to_string() });
        }
    }
    report["status"] = json!(status(ok));
    Ok((report, ok))
}

fn verify_text(r: &Value) -> String {
    let mut s = format!("classification: {}\n", r["classification"].as_str().unwrap_or("?"));
    if let Some(m) = r["axioms"]["status"].as_object() {
        for (k, v) in m {
            s += &format!("  axiom {k:<12} {}\n", v.as_str().unwrap_or("?"));
        }
    }
    s += &format!("  axiom scope: {} core vertices\n", r["axioms"]["scope"]);
    for key in ["fan", "crossCheck", "completeness", "rankTwo", "boundary", "green"] {
        if !r[key].is_null() {
            s += &format!("{key:<14} {}\n", r[key]["status"].as_str().unwrap_or("?"));
        }
    }
    s += &format!("  fan: {} cones, {} pairs\n", r["fan"]["cones"], r["fan"]["pairs"]);
    s += &format!(
        "  cross-check: {} matched, {} exchange classes, {} unmatched\n",
        r["crossCheck"]["matched"], r["crossCheck"]["exchangeClasses"], r["crossCheck"]["unmatchedClasses"]
    );
    s += &format!("  completeness deficits: {}\n", r["completeness"]["deficits"]);
    s += &format!("overall: {}\n", r["status"].as_str().unwrap_or("?"));
    s
}

fn verify_cmd(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    let rs = RootSpace::build(b)?;
    let mut fg = graph(cli, &rs, cap)?;
    if cli.corrupt {
        let v = fg.base(1).map_or(0, |b| fg.vertices[b].slots.iter().flatten().next().map_or(b, |s| s.0));
        fg = verify::corrupt_label(&fg, v, 0);
    }
    let (report, ok) = verify_report(&rs, &fg, cli.depth, cap, cli.seed)?;
    let json_file = ("verify.json".to_string(), serde_json::to_string_pretty(&report)?);
    let text_file = ("verify.txt".to_string(), verify_text(&report));
    let files = match format_or(cli, Format::Text, &[Format::Json, Format::Text])? {
        Format::Json => vec![json_file, text_file],
        _ => vec![text_file, json_file],
    };
    Ok(Outcome { files, success: ok })
}

fn exchange_json(ex: &ExchangeGraphSlice) -> Value {
    let nodes: Vec<Value> = ex
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            json!({
                "id": i,
                "depth": n.depth,
                "frontier": ex.is_frontier(i),
                "cluster": n.seed.cluster.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "B": n.seed.matrix.top,
                "cVectors": n.seed.c_vectors(),
                "gVectors": n.seed.gvectors,
                "edges": n.edges,
            })
        })
        .collect();
    json!({ "depth": ex.max_depth, "classes": ex.len(), "edges": ex.edge_count(), "nodes": nodes })
}

fn exchange_graph(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    let ex = exchange::exchange_graph(b, cli.depth, cap)?;
    match format_or(cli, Format::Json, &[Format::Json, Format::Dot, Format::Text])? {
        Format::Dot => Ok(Outcome::one("exchange.dot", dot::exchange(&ex))),
        Format::Text => {
            let frontier = (0..ex.len()).filter(|&i| ex.is_frontier(i)).count();
            Ok(Outcome::one(
                "exchange.txt",
                format!("{} seeds within depth {}, {} edges, {} on the frontier\n", ex.len(), ex.max_depth, ex.edge_count(), frontier),
            ))
        }
        _ => Ok(Outcome::one("exchange.json", serde_json::to_string_pretty(&exchange_json(&ex))?)),
    }
}

fn green(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    let rs = RootSpace::build(b)?;
    let fg = graph(cli, &rs, cap)?;
    let path = verify::find_green_sequence(&rs, &fg)?;
    let crossings: Vec<Vector> = path
        .windows(2)
        .map(|p| {
            let x = &fg.vertices[p[0]];
            let e = x.slots.iter().position(|s| s.is_some_and(|(w, _)| w == p[1])).expect("adjacent");
            x.labels[e].clone()
        })
        .collect();
    match format_or(cli, Format::Text, &[Format::Json, Format::Text])? {
        Format::Json => {
            let v = json!({
                "path": path,
                "labels": path.iter().map(|&v| fg.vertices[v].labels.clone()).collect::<Vec<_>>(),
                "crossings": crossings,
            });
            Ok(Outcome::one("green.json", serde_json::to_string_pretty(&v)?))
        }
        _ => {
            let mut s = format!("maximal green sequence of length {}\n", crossings.len());
            for (k, v) in path.iter().enumerate() {
                let labels: Vec<String> = fg.vertices[*v].labels.iter().map(root).collect();
                s += &format!("  v{v}: {}\n", labels.join(" "));
                if let Some(c) = crossings.get(k) {
                    s += &format!("    cross {}\n", root(c));
                }
            }
            Ok(Outcome::one("green.txt", s))
        }
    }
}

fn project_cmd(cli: &Cli, b: &ExchangeMatrix, cap: usize) -> anyhow::Result<Outcome> {
    format_or(cli, Format::Csv, &[Format::Csv])?;
    let rs = RootSpace::build(b)?;
    let fg = graph(cli, &rs, cap)?;
    let aff = rs.sys.affine_data().ok();
    let charts: Vec<Chart> = match &cli.chart {
        Some(c) => vec![Chart::parse(c).with_context(|| format!("unknown chart {c:?}"))?],
        None => match (rs.rank(), &aff) {
            (2, _) => vec![Chart::Angle],
            (3, Some(_)) => vec![Chart::V1, Chart::VMinus1, Chart::V0, Chart::Sphere],
            (3, None) => vec![Chart::Sphere],
            _ => vec![],
        },
    };
    let pj = Projection {
        sys: &rs.sys,
        delta: aff.as_ref().map(|a| a.delta.as_slice()),
        s0: aff.as_ref().map(|a| a.s0.as_slice()),
        pole: project::default_pole(&rs.sys, aff.as_ref().map(|a| a.delta.as_slice())),
    };
    let mut rows = Vec::new();
    for chart in charts {
        for v in fg.core() {
            let cone = fg.cone(&rs.sys, v)?;
            let prov = serde_json::to_value(io::ProvenanceTag::from(cone.provenance))?;
            rows.extend(pj.rows(chart, &format!("v{v}"), prov.as_str().unwrap_or(""), &cone)?);
        }
        if chart == Chart::V0 && aff.is_some() {
            let bs = fan::boundary_support(&rs, &fg)?;
            rows.extend(pj.region("complement", &bs.complement_rays)?);
            for (k, c) in bs.chambers.iter().enumerate().filter(|(_, c)| c.contains_xc) {
                rows.extend(pj.region(&format!("chamber{k}"), &c.rays)?);
            }
        }
    }
    Ok(Outcome::one("project.csv", project::to_csv(&rows)?))
}
