//! Subcommand implementations. Each returns the full report as a string so
//! output is assembled in one place.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nestorw_core::construct::{enumerate_constructions, enumerate_constructs};
use nestorw_core::families::{
    contextual_family_check, from_parenthesization, generate, is_contextual, to_parenthesization,
    FamilyDescriptor, PlanarTree,
};
use nestorw_core::geometry::{coordinates_csv, postnikov_vertex_map};
use nestorw_core::rewrite::{
    check_termination, critical_pair_shapes, facial_order, normal_form, ConfluenceReport, DiagramClass, FlipGraph,
};
use nestorw_core::{Construct, Error, Hypergraph, Result};
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Global};

fn load(g: &Global, path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let h = if path.extension().is_some_and(|x| x == "json") {
        Hypergraph::parse_json(&text, g.atomize)?
    } else {
        Hypergraph::parse_hg(&text, g.atomize)?
    };
    Ok(h.with_cap(g.cap))
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn unsupported(command: &str, f: Format) -> Error {
    Error::Domain(format!("{command} has no {f:?} output").to_lowercase())
}

fn allow(command: &str, f: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(unsupported(command, f))
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    let f = g.format;
    use Format::*;
    match &cli.command {
        Command::Gen { family, n, tree, order, output } => {
            allow("gen", f, &[Text, Json])?;
            let h = generate(&descriptor(family, *n, tree.as_deref(), order.as_deref())?)?;
            let body = if f == Json { format!("{}\n", h.to_json()) } else { h.to_hg() };
            match output {
                Some(path) => {
                    fs::write(path, body)
                        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(body),
            }
        }
        Command::Faces { input } => {
            allow("faces", f, &[Text, Json, Dot])?;
            let h = load(g, input)?;
            let lattice = enumerate_constructs(&h)?;
            Ok(match f {
                Json => pretty(lattice.to_json(&h)),
                Dot => lattice.to_dot(&h),
                _ => {
                    let fv = lattice.f_vector();
                    let mut out = format!("f-vector: {}\n", tuple(&fv));
                    for d in 0..fv.len() {
                        writeln!(out, "dimension {d}:").unwrap();
                        for i in lattice.of_dimension(d) {
                            writeln!(out, "  {}", lattice.get(i).display(&h)).unwrap();
                        }
                    }
                    out
                }
            })
        }
        Command::Vertices { input } => {
            allow("vertices", f, &[Text, Json])?;
            let h = load(g, input)?;
            let names: Vec<String> = enumerate_constructions(&h)?.iter().map(|c| c.display(&h).to_string()).collect();
            Ok(if f == Json { pretty(json!(names)) } else { names.iter().map(|n| format!("{n}\n")).collect() })
        }
        Command::Rewrite { input, from } => {
            allow("rewrite", f, &[Text, Json])?;
            let h = load(g, input)?;
            let start = Construct::parse(&h, from)?;
            if !start.is_construction() {
                return Err(Error::InvalidConstruct(format!("{from} is not a construction")));
            }
            let (nf, trace) = normal_form(&h, &start, g.orient)?;
            let name = |c: &Construct| c.display(&h).to_string();
            if f == Json {
                let steps: Vec<Value> = trace
                    .iter()
                    .map(|s| {
                        json!({"source": name(&s.source), "target": name(&s.target),
                               "parent": h.label(s.parent), "child": h.label(s.child)})
                    })
                    .collect();
                return Ok(pretty(json!({"orientation": g.orient, "from": name(&start), "steps": steps, "normal_form": name(&nf)})));
            }
            let mut out = format!("{}\n", name(&start));
            for s in &trace {
                writeln!(out, "  -> {}  (flip {} over {})", name(&s.target), h.label(s.child), h.label(s.parent)).unwrap();
            }
            writeln!(out, "normal form: {}", name(&nf)).unwrap();
            Ok(out)
        }
        Command::Poset { input } => {
            let h = load(g, input)?;
            let graph = FlipGraph::build(&h, g.orient)?;
            match f {
                Json => Ok(pretty(graph.to_json(&h))),
                Dot => Ok(graph.to_dot(&h)),
                Text => {
                    let name = |i: usize| graph.constructions()[i].display(&h).to_string();
                    let mut out = format!(
                        "orientation: {}\nconstructions: {}\nedges: {}\n",
                        g.orient,
                        graph.constructions().len(),
                        graph.edges().len()
                    );
                    for &(a, b) in graph.edges() {
                        writeln!(out, "  {} -> {}", name(a), name(b)).unwrap();
                    }
                    let list = |v: Vec<usize>| v.into_iter().map(name).collect::<Vec<_>>().join(" ");
                    writeln!(out, "sources: {}", list(graph.sources())).unwrap();
                    writeln!(out, "sinks: {}", list(graph.sinks())).unwrap();
                    writeln!(out, "acyclic: {}", graph.is_acyclic()).unwrap();
                    Ok(out)
                }
                Csv => Err(unsupported("poset", f)),
            }
        }
        Command::FacialOrder { input } => {
            let h = load(g, input)?;
            let order = facial_order(&h)?;
            match f {
                Json => Ok(pretty(order.to_json(&h))),
                Dot => Ok(order.to_dot(&h)),
                Text => {
                    let cs = order.lattice().constructs();
                    let mut out = format!("constructs: {}\nsteps: {}\n", cs.len(), order.edges().len());
                    for &(a, b) in order.edges() {
                        writeln!(out, "  {} -> {}", cs[a].display(&h), cs[b].display(&h)).unwrap();
                    }
                    writeln!(out, "acyclic: {}", order.is_acyclic()).unwrap();
                    Ok(out)
                }
                Csv => Err(unsupported("facial-order", f)),
            }
        }
        Command::Confluence { input } => {
            allow("confluence", f, &[Text, Json])?;
            let h = load(g, input)?;
            let r = ConfluenceReport::build(&h, g.orient)?;
            if f == Json {
                return Ok(pretty(r.to_json(&h)));
            }
            let mut out = String::new();
            writeln!(out, "orientation: {}", r.orientation).unwrap();
            writeln!(out, "flip edges: {}", r.edge_count).unwrap();
            writeln!(out, "acyclic: {}", r.acyclic).unwrap();
            writeln!(out, "unique normal forms: {}", r.unique_normal_forms).unwrap();
            match &r.sink {
                Some(s) => writeln!(out, "sink: {}", s.display(&h)).unwrap(),
                None => writeln!(out, "sink: none").unwrap(),
            }
            writeln!(out, "2-faces: {} type A, {} type B", r.type_a_faces, r.type_b_faces).unwrap();
            for c in [DiagramClass::A1, DiagramClass::A2, DiagramClass::BSibling, DiagramClass::BChain] {
                writeln!(out, "diagrams {}: {}", c.name(), r.count(c)).unwrap();
            }
            writeln!(out, "census matches: {}", r.census_matches()).unwrap();
            for d in &r.diagrams {
                writeln!(
                    out,
                    "  peak {} [{}] face {} ({}, {} corners) joins at {}",
                    d.peak.display(&h),
                    d.class.name(),
                    d.face.display(&h),
                    d.face_class.name(),
                    d.corners,
                    d.join.display(&h)
                )
                .unwrap();
            }
            Ok(out)
        }
        Command::CriticalPairs { input } => {
            allow("critical-pairs", f, &[Text, Json])?;
            let h = load(g, input)?;
            let shapes = critical_pair_shapes(&h)?;
            let edges = |s: &Hypergraph| {
                s.edges().iter().filter(|e| e.len() > 1).map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
            };
            if f == Json {
                let entries: Vec<Value> = shapes
                    .entries
                    .iter()
                    .map(|e| json!({"y": h.format_set(e.y), "x": h.format_set(e.x), "shape": e.tag.to_string(), "edges": edges(&e.shape)}))
                    .collect();
                let distinct: Vec<Value> = shapes
                    .distinct
                    .iter()
                    .map(|(s, t)| json!({"shape": t.to_string(), "polygon": t.polygon(), "edges": edges(s)}))
                    .collect();
                return Ok(pretty(json!({"entries": entries, "distinct": distinct})));
            }
            let mut out = String::new();
            for e in &shapes.entries {
                writeln!(out, "Y={} X={} {} [{}]", h.format_set(e.y), h.format_set(e.x), e.tag, edges(&e.shape)).unwrap();
            }
            writeln!(out, "distinct shapes:").unwrap();
            for (s, t) in &shapes.distinct {
                writeln!(out, "  {t} {} [{}]", t.polygon(), edges(s)).unwrap();
            }
            Ok(out)
        }
        Command::Coordinates { input, mu } => {
            allow("coordinates", f, &[Text, Json, Csv])?;
            let h = load(g, input)?;
            let table = postnikov_vertex_map(&h)?;
            let verdict = match mu {
                Some(text) => {
                    let values = parse_mu(text)?;
                    Some((values.clone(), check_termination(&h, g.orient, &values)?))
                }
                None => None,
            };
            match f {
                Csv => Ok(coordinates_csv(&h, &table)),
                Json => {
                    let rows: Vec<Value> = table
                        .iter()
                        .map(|(c, v)| json!({"construction": c.display(&h).to_string(), "coordinates": v}))
                        .collect();
                    let mut report = json!({"labels": h.labels(), "vertices": rows});
                    if let Some((_, v)) = &verdict {
                        report["termination"] = json!({"ok": v.ok, "sign": v.sign, "edges_checked": v.edges_checked});
                    }
                    Ok(pretty(report))
                }
                _ => {
                    let mut out = String::new();
                    for (c, v) in &table {
                        writeln!(out, "{}  {v}", c.display(&h)).unwrap();
                    }
                    if let Some((values, v)) = verdict {
                        let shown: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                        if v.ok {
                            let dir = if v.sign == Some(1) { "increases" } else { "decreases" };
                            writeln!(out, "mu ({}) {dir} strictly along every flip", shown.join(",")).unwrap();
                        } else {
                            let s = v.offending.expect("failing verdicts name a step");
                            writeln!(
                                out,
                                "mu ({}) is not strictly monotone: {} -> {}",
                                shown.join(","),
                                s.source.display(&h),
                                s.target.display(&h)
                            )
                            .unwrap();
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Contextual { input } => {
            allow("contextual", f, &[Text, Json])?;
            let h = load(g, input)?;
            let v = is_contextual(&h)?;
            if f == Json {
                let witness = v.witness.map(|(y, x)| json!({"y": h.format_set(y), "x": h.format_set(x)}));
                return Ok(pretty(json!({"contextual": v.contextual, "witness": witness, "pairs_checked": v.pairs_checked})));
            }
            let mut out = format!("contextual: {}\n", v.contextual);
            if let Some((y, x)) = v.witness {
                writeln!(out, "witness: Y={}, X={}", h.format_set(y), h.format_set(x)).unwrap();
            }
            Ok(out)
        }
        Command::FamilyCheck { kind, up_to } => {
            allow("family-check", f, &[Text, Json])?;
            let r = contextual_family_check(*kind, *up_to)?;
            if f == Json {
                return Ok(pretty(r.to_json()));
            }
            let mut out = String::new();
            for row in &r.rows {
                let verdict = if row.verdict { "ok" } else { "FAIL" };
                write!(out, "{} ({}): {verdict}", row.instance, row.condition).unwrap();
                if let Some(w) = &row.witness {
                    write!(out, " [{w}]").unwrap();
                }
                out.push('\n');
            }
            writeln!(out, "{}: {} instances, {}", kind, r.instances, if r.pass { "pass" } else { "fail" }).unwrap();
            Ok(out)
        }
        Command::Parenthesize { input, word } => {
            allow("parenthesize", f, &[Text, Json])?;
            let h = load(g, input)?;
            if let Some(w) = word {
                let c = from_parenthesization(&h, w)?;
                let name = c.display(&h).to_string();
                return Ok(if f == Json { pretty(json!({"word": w, "construct": name})) } else { format!("{name}\n") });
            }
            let mut pairs = Vec::new();
            for c in enumerate_constructions(&h)? {
                pairs.push((c.display(&h).to_string(), to_parenthesization(&h, &c)?));
            }
            Ok(if f == Json {
                pretty(json!(pairs.iter().map(|(c, w)| json!({"construct": c, "word": w})).collect::<Vec<_>>()))
            } else {
                pairs.iter().map(|(c, w)| format!("{c}  {w}\n")).collect()
            })
        }
    }
}

fn parse_mu(text: &str) -> Result<Vec<num_rational::Rational64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map(num_rational::Rational64::from_integer)
                .map_err(|_| Error::Parse(format!("bad entry {s:?} in --mu")))
        })
        .collect()
}

fn descriptor(family: &str, n: Option<usize>, tree: Option<&str>, order: Option<&str>) -> Result<FamilyDescriptor> {
    if family == "operahedron" {
        let tree = tree.ok_or_else(|| Error::Domain("operahedron needs --tree".into()))?;
        let order = order.map(|o| o.split(',').map(|s| s.trim().to_string()).collect());
        return Ok(FamilyDescriptor::Operahedron { tree: PlanarTree::parse(tree)?, order });
    }
    let n = n.ok_or_else(|| Error::Domain(format!("{family} needs a dimension")))?;
    Ok(match family {
        "simplex" => FamilyDescriptor::Simplex(n),
        "cube" => FamilyDescriptor::Cube(n),
        "associahedron" => FamilyDescriptor::Associahedron(n),
        "permutahedron" => FamilyDescriptor::Permutahedron(n),
        "cyclohedron" => FamilyDescriptor::Cyclohedron(n),
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    })
}
