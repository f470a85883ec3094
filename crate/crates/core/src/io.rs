//! Plain-text graph and RSG files.
//!
//! Graph: header `n m` or `bipartite n1 n2 m`, then `m` lines `u v`.
//! RSG: node lines `id state` (U/P/N) followed by edge lines `u v kind` (S/D).
//! `#` starts a comment in both.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{BipartitePartition, Graph, Side};
use crate::rsg::{NodeState, ReducedSolutionGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Present when the header was `bipartite n1 n2 m`; X1 is `0..n1`.
    pub partition: Option<BipartitePartition>,
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("expected a node id or count, got `{tok}`") })
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let (n, m, partition) = match header.as_slice() {
        ["bipartite", n1, n2, m] => {
            let (n1, n2) = (parse_num(hline, n1)?, parse_num(hline, n2)?);
            (n1 + n2, parse_num(hline, m)?, Some(BipartitePartition::leading(n1, n2)))
        }
        [n, m] => (parse_num(hline, n)?, parse_num(hline, m)?, None),
        _ => {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be `n m` or `bipartite n1 n2 m`".into(),
            })
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in lines {
        let [u, v] = tokens.as_slice() else {
            return Err(Error::Parse { line, msg: "edge lines must be `u v`".into() });
        };
        let (u, v) = (parse_num(line, u)?, parse_num(line, v)?);
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("node id out of range 0..{n}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let graph = Graph::from_edges(n, edges)?;
    if let Some(p) = &partition {
        p.validate(&graph)?;
    }
    Ok(GraphFile { graph, partition })
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<GraphFile> {
    parse_graph(&read_text(path)?)
}

/// Writes the bipartite header when `partition` puts X1 on `0..n1`,
/// the general header otherwise.
pub fn format_graph(g: &Graph, partition: Option<&BipartitePartition>) -> String {
    let mut out = String::new();
    let leading = partition.filter(|p| {
        p.sides().iter().enumerate().all(|(u, &s)| (s == Side::X1) == (u < p.n1()))
    });
    match leading {
        Some(p) => writeln!(out, "bipartite {} {} {}", p.n1(), p.n2(), g.edge_count()),
        None => writeln!(out, "{} {}", g.node_count(), g.edge_count()),
    }
    .unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn format_rsg(rsg: &ReducedSolutionGraph) -> String {
    let mut out = String::new();
    let g = rsg.host();
    writeln!(
        out,
        "# rsg nodes={} edges={} min_cover={}",
        g.node_count(),
        g.edge_count(),
        rsg.min_cover_size()
    )
    .unwrap();
    for (u, s) in rsg.states().iter().enumerate() {
        writeln!(out, "{u} {}", s.code()).unwrap();
    }
    for (&(u, v), kind) in g.edges().iter().zip(rsg.edge_kinds()) {
        writeln!(out, "{u} {v} {}", kind.code()).unwrap();
    }
    out
}

pub fn parse_rsg(text: &str) -> Result<ReducedSolutionGraph> {
    let mut states: Vec<Option<NodeState>> = Vec::new();
    let mut edges = Vec::new();
    let mut doubles = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            [id, state] => {
                if !edges.is_empty() {
                    return Err(Error::Parse { line, msg: "node lines must precede edge lines".into() });
                }
                let id = parse_num(line, id)?;
                let state = NodeState::from_code(state).ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("unknown state `{state}`, expected U, P or N"),
                })?;
                if states.len() <= id {
                    states.resize(id + 1, None);
                }
                if states[id].replace(state).is_some() {
                    return Err(Error::Parse { line, msg: format!("node {id} listed twice") });
                }
            }
            [u, v, kind] => {
                let (u, v) = (parse_num(line, u)?, parse_num(line, v)?);
                if u >= states.len() || v >= states.len() {
                    return Err(Error::Parse { line, msg: "edge references an undeclared node".into() });
                }
                match *kind {
                    "S" => {}
                    "D" => doubles.push((u, v)),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unknown edge kind `{kind}`, expected S or D"),
                        })
                    }
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse { line, msg: "expected `id state` or `u v kind`".into() })
            }
        }
    }
    let n = states.len();
    let states = states
        .into_iter()
        .enumerate()
        .map(|(u, s)| s.ok_or_else(|| Error::InvalidRsg(format!("node {u} has no state line"))))
        .collect::<Result<Vec<_>>>()?;
    let mut partner = vec![None; n];
    for (u, v) in doubles {
        if partner[u].is_some() || partner[v].is_some() {
            return Err(Error::InvalidRsg(format!("double edges overlap at ({u}, {v})")));
        }
        partner[u] = Some(v);
        partner[v] = Some(u);
    }
    let host = Graph::from_edges(n, edges)?;
    ReducedSolutionGraph::from_parts(host, partner, states)
}

pub fn read_rsg(path: &Path) -> Result<ReducedSolutionGraph> {
    parse_rsg(&read_text(path)?)
}
