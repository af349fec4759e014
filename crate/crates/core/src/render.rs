//! Figures as SVG, ASCII, DOT or JSON.
//!
//! Layouts are conventions:
//! - cube_corner / openmap7: an unfolded corner on a 6×6 grid. The c = 0
//!   face sits top left at (a, b), the b = 0 face below it at (a, c), and the
//!   a = 0 face bottom right at (b, c), so faces sharing a coordinate line up.
//! - square: row from (x₁, x₂), column from (x₃, x₄), each read as binary
//!   with 1 ↦ 0, 2 ↦ 1.
//! - hasse: one row per height, lowest at the bottom.
//! - tgraph: vertices on a circle in index order.
//!
//! Output depends only on the spec.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::e6::E6Model;
use crate::e7::E7Model;
use crate::error::{Error, Result};
use crate::export::parse_system;
use crate::fp::{FpSpace, FpVector};
use crate::ideals::E7Symmetries;
use crate::roots::{Family, Root, RootSystem, Stratum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    CubeCorner,
    Square,
    Hasse,
    Openmap7,
    Dynkin,
    Tgraph,
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cube_corner" => Ok(Self::CubeCorner),
            "square" => Ok(Self::Square),
            "hasse" => Ok(Self::Hasse),
            "openmap7" => Ok(Self::Openmap7),
            "dynkin" => Ok(Self::Dynkin),
            "tgraph" => Ok(Self::Tgraph),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Svg,
    Ascii,
    Dot,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Self::Svg),
            "ascii" => Ok(Self::Ascii),
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Svg => "svg",
            Format::Ascii => "txt",
            Format::Dot => "dot",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: Target,
    pub format: Format,
    /// Defaults to E7 (E6 for `square`).
    pub system: Option<String>,
    /// Hasse only; defaults to the top stratum of the system.
    pub stratum: Option<usize>,
    pub highlight: Option<String>,
}

impl RenderSpec {
    pub fn new(target: Target, format: Format) -> Self {
        RenderSpec { target, format, system: None, stratum: None, highlight: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    None,
    Link,
    Selected,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub x: f64,
    pub y: f64,
    pub shade: Shade,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Grid,
    Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure {
    pub name: String,
    pub title: String,
    pub layout: Layout,
    pub nodes: Vec<Node>,
    pub edges: Vec<(usize, usize)>,
}

impl Figure {
    pub fn shaded(&self) -> Vec<&Node> {
        self.nodes.iter().filter(|n| n.shade == Shade::Link).collect()
    }
}

fn system_of(spec: &RenderSpec, default: &str) -> Result<RootSystem> {
    parse_system(spec.system.as_deref().unwrap_or(default))
}

fn require(sys: &RootSystem, family: Family, ranks: &[usize]) -> Result<()> {
    if sys.family() == family && ranks.contains(&sys.rank()) {
        Ok(())
    } else {
        Err(Error::UnsupportedSystem { family: sys.family(), rank: sys.rank() })
    }
}

/// Parses the highlight and checks it is one of `members`.
fn pick<'a>(space: &FpSpace, members: &'a [FpVector], text: &str, set: &'static str) -> Result<&'a FpVector> {
    let v = space.parse(text)?;
    members.iter().find(|x| **x == v).ok_or(Error::NotInSet { vector: v.to_string(), set })
}

fn shade(selected: bool, link: bool) -> Shade {
    if selected {
        Shade::Selected
    } else if link {
        Shade::Link
    } else {
        Shade::None
    }
}

fn cube_position(d: [u32; 3]) -> (f64, f64) {
    let [a, b, c] = d.map(|v| v as f64 - 1.0);
    match d.iter().position(|&v| v == 0).expect("one zero digit") {
        2 => (a, b),
        1 => (a, 3.0 + c),
        _ => (3.0 + b, 3.0 + c),
    }
}

fn cube_nodes(m: &E7Model, highlight: Option<&str>) -> Result<Vec<Node>> {
    let g7 = m.gamma_plus(Stratum::new(7)?);
    let v = highlight.map(|h| pick(m.space(), &g7, h, "Γ₇⁺")).transpose()?;
    Ok(g7
        .iter()
        .map(|x| {
            let (px, py) = cube_position(E7Model::digits(x));
            let link = v.is_some_and(|v| E7Model::t_adjacent(v, x));
            Node { id: x.to_string(), label: x.to_string(), note: None, x: px, y: py, shade: shade(v == Some(x), link) }
        })
        .collect())
}

pub fn figure(spec: &RenderSpec) -> Result<Figure> {
    let hl = spec.highlight.as_deref();
    match spec.target {
        Target::CubeCorner => {
            require(&system_of(spec, "E7")?, Family::E, &[7])?;
            let m = E7Model::standard();
            Ok(Figure {
                name: "cube_corner".into(),
                title: "Γ₇⁺ on the corner of a 3×3×3 cube".into(),
                layout: Layout::Grid,
                nodes: cube_nodes(&m, hl)?,
                edges: Vec::new(),
            })
        }
        Target::Openmap7 => {
            require(&system_of(spec, "E7")?, Family::E, &[7])?;
            let sym = E7Symmetries::new()?;
            let m = sym.model();
            let poset = sym.lattice().poset();
            let h = sym.lattice().open_map();
            let mut nodes = cube_nodes(m, hl)?;
            for n in &mut nodes {
                let x = m.space().parse(&n.id)?;
                let i = poset.position(&m.f_inv(&x)?.padded(8)).expect("Δ₇⁺");
                n.note = Some(n.label.clone());
                n.label = h.label(i).to_string();
            }
            Ok(Figure {
                name: "openmap7".into(),
                title: "h₇ on the cube corner".into(),
                layout: Layout::Grid,
                nodes,
                edges: Vec::new(),
            })
        }
        Target::Square => {
            require(&system_of(spec, "E6")?, Family::E, &[6])?;
            let m = E6Model::standard();
            let top = m.gamma_plus(Stratum::new(6)?);
            let v = hl.map(|h| pick(m.space(), &top, h, "Γ₆⁺")).transpose()?;
            let mut nodes: Vec<Node> = top
                .iter()
                .map(|x| {
                    let c = m.square_layout(x).expect("Γ₆⁺");
                    let link = v.is_some_and(|v| E6Model::t_adjacent(v, x));
                    Node {
                        id: x.to_string(),
                        label: x.to_string(),
                        note: None,
                        x: c.col as f64,
                        y: c.row as f64,
                        shade: shade(v == Some(x), link),
                    }
                })
                .collect();
            nodes.sort_by(|a, b| (a.y, a.x).partial_cmp(&(b.y, b.x)).expect("finite"));
            Ok(Figure {
                name: "square".into(),
                title: "Γ₆⁺ in a 4×4 square".into(),
                layout: Layout::Grid,
                nodes,
                edges: Vec::new(),
            })
        }
        Target::Hasse => hasse(spec),
        Target::Dynkin => dynkin(spec),
        Target::Tgraph => tgraph(spec),
    }
}

fn hasse(spec: &RenderSpec) -> Result<Figure> {
    let sys = system_of(spec, "E7")?;
    require(&sys, Family::E, &[3, 4, 5, 6, 7, 8])?;
    let s = Stratum::new(spec.stratum.unwrap_or(sys.rank()))?;
    if s.value() > sys.rank() {
        return Err(Error::InvalidStratum(s.value()));
    }
    let roots = sys.stratum_roots(s)?;
    let images: Option<Vec<String>> = match sys.rank() {
        7 => {
            let m = E7Model::standard();
            Some(roots.iter().map(|r| m.f(r).to_string()).collect())
        }
        6 => {
            let m = E6Model::standard();
            Some(roots.iter().map(|r| m.f(r).to_string()).collect())
        }
        _ => None,
    };
    let v = match spec.highlight.as_deref() {
        Some(h) => {
            let r: Root = h.parse()?;
            if !roots.contains(&r) {
                return Err(Error::NotInSet { vector: r.to_string(), set: "Δₛ⁺" });
            }
            Some(r)
        }
        None => None,
    };
    let min_h = roots.iter().map(Root::height).min().unwrap_or(0);
    let max_h = roots.iter().map(Root::height).max().unwrap_or(0);
    let widest = (min_h..=max_h).map(|h| roots.iter().filter(|r| r.height() == h).count()).max().unwrap_or(1);
    let mut nodes = Vec::new();
    for h in min_h..=max_h {
        let level: Vec<(usize, &Root)> = roots.iter().enumerate().filter(|(_, r)| r.height() == h).collect();
        let offset = (widest - level.len()) as f64 / 2.0;
        for (k, (i, r)) in level.into_iter().enumerate() {
            let link = v.as_ref().is_some_and(|v| v != r && sys.inner(v, r) == 0);
            nodes.push((
                i,
                Node {
                    id: r.to_string(),
                    label: r.to_string(),
                    note: images.as_ref().map(|im| im[i].clone()),
                    x: offset + k as f64,
                    y: (max_h - h) as f64,
                    shade: shade(v.as_ref() == Some(r), link),
                },
            ));
        }
    }
    nodes.sort_by_key(|(i, _)| *i);
    let graph = sys.stratum_hasse(s)?;
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.sort();
    Ok(Figure {
        name: format!("hasse_{}_{}", sys.name().to_lowercase(), s.value()),
        title: format!("Hasse diagram of stratum {} of {}", s.value(), sys.name()),
        layout: Layout::Graph,
        nodes: nodes.into_iter().map(|(_, n)| n).collect(),
        edges,
    })
}

fn dynkin(spec: &RenderSpec) -> Result<Figure> {
    let sys = system_of(spec, "E7")?;
    let n = sys.rank();
    let v: Option<usize> = match spec.highlight.as_deref() {
        Some(h) => {
            let i: usize = h.trim_start_matches('v').parse().map_err(|_| Error::Parse(h.to_string()))?;
            if !(1..=n).contains(&i) {
                return Err(Error::NotInSet { vector: h.to_string(), set: "Dynkin vertices" });
            }
            Some(i)
        }
        None => None,
    };
    let g = sys.dynkin_graph();
    let position = |i: usize| -> (f64, f64) {
        match sys.family() {
            Family::E if i == 2 => (2.0, 0.0),
            Family::E if i == 1 => (0.0, 1.0),
            Family::E => ((i - 2) as f64, 1.0),
            Family::D if i == n => ((n - 3) as f64, 0.0),
            Family::D if i == n - 1 => ((n - 2) as f64, 1.0),
            _ => ((i - 1) as f64, 1.0),
        }
    };
    let nodes = (1..=n)
        .map(|i| {
            let (x, y) = position(i);
            let link = v.is_some_and(|v| g.has_edge(v - 1, i - 1));
            Node { id: format!("v{i}"), label: i.to_string(), note: None, x, y, shade: shade(v == Some(i), link) }
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort();
    Ok(Figure {
        name: format!("dynkin_{}", sys.name().to_lowercase()),
        title: format!("Dynkin diagram of {}", sys.name()),
        layout: Layout::Graph,
        nodes,
        edges,
    })
}

fn tgraph(spec: &RenderSpec) -> Result<Figure> {
    let sys = system_of(spec, "E7")?;
    require(&sys, Family::E, &[6, 7])?;
    let (space, graph) = if sys.rank() == 7 {
        let m = E7Model::standard();
        (m.space().clone(), m.t_graph())
    } else {
        let m = E6Model::standard();
        (m.space().clone(), m.t_graph())
    };
    let all = space.vectors();
    let v = spec.highlight.as_deref().map(|h| pick(&space, &all, h, "V")).transpose()?;
    let n = all.len() as f64;
    let radius = n / 8.0 + 2.0;
    let nodes = all
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let t = std::f64::consts::TAU * i as f64 / n;
            let link = v.is_some_and(|v| v != x && graph.has_edge(space.index(v), i));
            Node {
                id: x.to_string(),
                label: x.to_string(),
                note: None,
                x: round2(radius * (1.0 + t.sin())),
                y: round2(radius * (1.0 - t.cos())),
                shade: shade(v == Some(x), link),
            }
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.sort();
    Ok(Figure {
        name: format!("tgraph_{}", sys.name().to_lowercase()),
        title: format!("T-graph on the target of {}", sys.name()),
        layout: Layout::Graph,
        nodes,
        edges,
    })
}

fn round2(x: f64) -> f64 {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn render(spec: &RenderSpec) -> Result<String> {
    let fig = figure(spec)?;
    Ok(match spec.format {
        Format::Svg => to_svg(&fig),
        Format::Ascii => to_ascii(&fig),
        Format::Dot => to_dot(&fig),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&fig).expect("plain data");
            s.push('\n');
            s
        }
    })
}

fn fill(s: Shade) -> &'static str {
    match s {
        Shade::None => "#ffffff",
        Shade::Link => "#f4c542",
        Shade::Selected => "#d9534f",
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn to_svg(fig: &Figure) -> String {
    let (unit, pad) = match fig.layout {
        Layout::Grid => (64.0, 16.0),
        Layout::Graph if fig.nodes.len() > 40 => (24.0, 16.0),
        Layout::Graph => (72.0, 40.0),
    };
    let max_x = fig.nodes.iter().map(|n| n.x).fold(0.0, f64::max);
    let max_y = fig.nodes.iter().map(|n| n.y).fold(0.0, f64::max);
    let cell = if fig.layout == Layout::Grid { unit } else { 0.0 };
    let w = max_x * unit + cell + 2.0 * pad;
    let h = max_y * unit + cell + 2.0 * pad + 24.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}" font-family="monospace">"#
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, esc(&fig.title));
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let top = pad + 24.0;
    let _ = writeln!(out, r#"<text x="{pad:.0}" y="{:.0}" font-size="14">{}</text>"#, pad + 8.0, esc(&fig.title));
    let px = |n: &Node| pad + n.x * unit;
    let py = |n: &Node| top + n.y * unit;
    match fig.layout {
        Layout::Grid => {
            for n in &fig.nodes {
                let (x, y) = (px(n), py(n));
                let _ = writeln!(
                    out,
                    r##"<g id="{}"><rect x="{x:.1}" y="{y:.1}" width="{unit:.0}" height="{unit:.0}" fill="{}" stroke="#333333"/>"##,
                    esc(&n.id),
                    fill(n.shade)
                );
                let size = if n.note.is_some() { 20 } else { 13 };
                let _ = writeln!(
                    out,
                    r#"<text x="{:.1}" y="{:.1}" font-size="{size}" text-anchor="middle">{}</text>"#,
                    x + unit / 2.0,
                    y + unit / 2.0 + 4.0,
                    esc(&n.label)
                );
                if let Some(note) = &n.note {
                    let _ = writeln!(
                        out,
                        r##"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle" fill="#666666">{}</text>"##,
                        x + unit / 2.0,
                        y + unit - 6.0,
                        esc(note)
                    );
                }
                out.push_str("</g>\n");
            }
        }
        Layout::Graph => {
            let small = fig.nodes.len() > 40;
            for &(a, b) in &fig.edges {
                let (na, nb) = (&fig.nodes[a], &fig.nodes[b]);
                let _ = writeln!(
                    out,
                    r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#888888" stroke-width="{}"/>"##,
                    px(na),
                    py(na),
                    px(nb),
                    py(nb),
                    if small { "0.2" } else { "1.5" }
                );
            }
            let r = if small { 4.0 } else { 10.0 };
            for n in &fig.nodes {
                let _ = write!(
                    out,
                    r##"<g id="{}"><title>{}</title><circle cx="{:.1}" cy="{:.1}" r="{r}" fill="{}" stroke="#333333"/>"##,
                    esc(&n.id),
                    esc(&n.label),
                    px(n),
                    py(n),
                    fill(n.shade)
                );
                if !small {
                    let label = match &n.note {
                        Some(note) => format!("{} ({})", n.label, note),
                        None => n.label.clone(),
                    };
                    let _ = write!(
                        out,
                        r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{}</text>"#,
                        px(n),
                        py(n) + r + 12.0,
                        esc(&label)
                    );
                }
                out.push_str("</g>\n");
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn mark(s: Shade) -> &'static str {
    match s {
        Shade::None => " ",
        Shade::Link => "*",
        Shade::Selected => "@",
    }
}

pub fn to_ascii(fig: &Figure) -> String {
    let mut out = format!("{}\n", fig.title);
    match fig.layout {
        Layout::Grid => {
            let width = fig.nodes.iter().map(|n| n.label.chars().count()).max().unwrap_or(1) + 2;
            let cols = fig.nodes.iter().map(|n| n.x as usize).max().map_or(0, |m| m + 1);
            let rows = fig.nodes.iter().map(|n| n.y as usize).max().map_or(0, |m| m + 1);
            let mut grid = vec![vec![None; cols]; rows];
            for n in &fig.nodes {
                grid[n.y as usize][n.x as usize] = Some(n);
            }
            for row in grid {
                let line: String = row
                    .iter()
                    .map(|c| match c {
                        Some(n) => format!("{}{:<w$}", mark(n.shade), n.label, w = width - 1),
                        None => " ".repeat(width),
                    })
                    .collect();
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        Layout::Graph => {
            let mut adj = vec![Vec::new(); fig.nodes.len()];
            for &(a, b) in &fig.edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            for (i, n) in fig.nodes.iter().enumerate() {
                let mut nb: Vec<&str> = adj[i].iter().map(|&j| fig.nodes[j].label.as_str()).collect();
                nb.sort();
                let note = n.note.as_ref().map(|s| format!(" ({s})")).unwrap_or_default();
                let _ = writeln!(out, "{}{}{}: {}", mark(n.shade), n.label, note, nb.join(" "));
            }
        }
    }
    let shaded = fig.shaded().len();
    if fig.nodes.iter().any(|n| n.shade != Shade::None) {
        let _ = writeln!(out, "@ selected, * linked ({shaded})");
    }
    out
}

pub fn to_dot(fig: &Figure) -> String {
    let mut out = format!("graph \"{}\" {{\n", fig.name);
    let _ = writeln!(out, "  label=\"{}\";", fig.title);
    let shape = if fig.layout == Layout::Grid { "box" } else { "ellipse" };
    let _ = writeln!(out, "  node [shape={shape}, style=filled, fillcolor=\"#ffffff\"];");
    for n in &fig.nodes {
        let label = match &n.note {
            Some(note) => format!("{}\\n{}", n.label, note),
            None => n.label.clone(),
        };
        let colour = match n.shade {
            Shade::None => String::new(),
            s => format!(", fillcolor=\"{}\"", fill(s)),
        };
        let _ = writeln!(out, "  \"{}\" [label=\"{}\", pos=\"{},{}!\"{}];", n.id, label, n.x, -n.y, colour);
    }
    for &(a, b) in &fig.edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", fig.nodes[a].id, fig.nodes[b].id);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(target: Target, format: Format) -> RenderSpec {
        RenderSpec::new(target, format)
    }

    #[test]
    fn cube_corner_highlight() {
        let mut s = spec(Target::CubeCorner, Format::Json);
        s.highlight = Some("021".into());
        let fig = figure(&s).unwrap();
        assert_eq!(fig.nodes.len(), 27);
        assert_eq!(fig.shaded().len(), 10);
        s.highlight = Some("000".into());
        assert!(matches!(figure(&s), Err(Error::NotInSet { .. })));
        let cells: std::collections::BTreeSet<(i64, i64)> = figure(&spec(Target::CubeCorner, Format::Svg))
            .unwrap()
            .nodes
            .iter()
            .map(|n| (n.x as i64, n.y as i64))
            .collect();
        assert_eq!(cells.len(), 27);
    }

    #[test]
    fn square_highlight() {
        let mut s = spec(Target::Square, Format::Ascii);
        s.highlight = Some("11122".into());
        let fig = figure(&s).unwrap();
        assert_eq!(fig.nodes.len(), 16);
        let m = E6Model::standard();
        let x = m.vector("11122").unwrap();
        let top = m.gamma_plus(Stratum::new(6).unwrap());
        let want: Vec<String> = m.link(&x).iter().filter(|y| top.contains(y)).map(|y| y.to_string()).collect();
        let mut got: Vec<String> = fig.shaded().iter().map(|n| n.id.clone()).collect();
        got.sort();
        assert_eq!(got, want);
        let text = render(&s).unwrap();
        assert!(text.contains("@11122"));
    }

    #[test]
    fn hasse_and_dynkin() {
        let mut s = spec(Target::Hasse, Format::Dot);
        s.stratum = Some(4);
        let fig = figure(&s).unwrap();
        assert_eq!(fig.nodes.len(), 6);
        s.stratum = Some(8);
        assert!(figure(&s).is_err());
        let d = figure(&spec(Target::Dynkin, Format::Ascii)).unwrap();
        assert_eq!((d.nodes.len(), d.edges.len()), (7, 6));
        let mut s = spec(Target::Dynkin, Format::Ascii);
        s.highlight = Some("v4".into());
        assert_eq!(figure(&s).unwrap().shaded().len(), 3);
    }

    #[test]
    fn openmap_labels() {
        let fig = figure(&spec(Target::Openmap7, Format::Json)).unwrap();
        let sevens = fig.nodes.iter().filter(|n| n.label == "7").count();
        assert_eq!(sevens, 3);
        let a7 = fig.nodes.iter().find(|n| n.id == "033").unwrap();
        assert_eq!(a7.label, "7");
    }

    #[test]
    fn deterministic() {
        for target in
            [Target::CubeCorner, Target::Square, Target::Hasse, Target::Openmap7, Target::Dynkin, Target::Tgraph]
        {
            for format in [Format::Svg, Format::Ascii, Format::Dot, Format::Json] {
                let s = spec(target, format);
                assert_eq!(render(&s).unwrap(), render(&s).unwrap());
            }
        }
    }
}
