//! Line-oriented UTF-8 graph text format.
//!
//! ```text
//! # comment
//! vertex <label> <measure>
//! edge <labelA> <labelB> <weight>
//! boundary <label> [<label> ...]
//! ```
//!
//! Whitespace-separated, decimal reals. Vertices must be declared before
//! they are referenced; unknown directives are rejected.

use std::collections::HashMap;

use thiserror::Error;

use crate::scalar::Scalar;

use super::{GraphError, WeightedGraph};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown directive '{directive}'")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: unknown vertex label '{label}'")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{source}")]
    Validation { source: GraphError },
}

/// Parse result: the graph plus the boundary labels' indices, if any
/// `boundary` lines were present. Boundary axioms are not checked here;
/// apply `BoundaryGraph::new` for that.
#[derive(Debug, Clone)]
pub struct ParsedGraph<S> {
    pub graph: WeightedGraph<S>,
    pub boundary: Option<Vec<usize>>,
}

pub fn parse_graph_text<S: Scalar>(text: &str) -> Result<ParsedGraph<S>, ParseError> {
    let mut vertices: Vec<(String, S)> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, S)> = Vec::new();
    let mut seen_edges: HashMap<(usize, usize), usize> = HashMap::new();
    let mut boundary: Option<Vec<usize>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let directive = tokens.next().expect("nonempty line has a token");
        match directive {
            "vertex" => {
                let label = tokens
                    .next()
                    .ok_or_else(|| syntax(line, "vertex needs <label> <measure>"))?;
                let measure = parse_real::<S>(line, tokens.next(), "measure")?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after vertex"));
                }
                if index.contains_key(label) {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::DuplicateLabel {
                            label: label.to_string(),
                        },
                    });
                }
                if !(measure > S::zero()) {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::NonpositiveValue {
                            what: format!("measure of vertex '{label}'"),
                        },
                    });
                }
                index.insert(label.to_string(), vertices.len());
                vertices.push((label.to_string(), measure));
            }
            "edge" => {
                let a = tokens
                    .next()
                    .ok_or_else(|| syntax(line, "edge needs <labelA> <labelB> <weight>"))?;
                let b = tokens
                    .next()
                    .ok_or_else(|| syntax(line, "edge needs <labelA> <labelB> <weight>"))?;
                let weight = parse_real::<S>(line, tokens.next(), "weight")?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after edge"));
                }
                let ia = resolve(line, &index, a)?;
                let ib = resolve(line, &index, b)?;
                if ia == ib {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::SelfLoop {
                            label: a.to_string(),
                        },
                    });
                }
                if !(weight > S::zero()) {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::NonpositiveValue {
                            what: format!("weight of edge ('{a}','{b}')"),
                        },
                    });
                }
                let key = (ia.min(ib), ia.max(ib));
                if seen_edges.insert(key, line).is_some() {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::DuplicateEdge {
                            a: a.to_string(),
                            b: b.to_string(),
                        },
                    });
                }
                edges.push((ia, ib, weight));
            }
            "boundary" => {
                let list = boundary.get_or_insert_with(Vec::new);
                let mut any = false;
                for label in tokens {
                    any = true;
                    list.push(resolve(line, &index, label)?);
                }
                if !any {
                    return Err(syntax(line, "boundary needs at least one label"));
                }
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                });
            }
        }
    }

    let graph = WeightedGraph::new(vertices, edges)
        .map_err(|source| ParseError::Validation { source })?;
    Ok(ParsedGraph { graph, boundary })
}

fn syntax(line: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.to_string(),
    }
}

fn resolve(line: usize, index: &HashMap<String, usize>, label: &str) -> Result<usize, ParseError> {
    index.get(label).copied().ok_or(ParseError::UnknownLabel {
        line,
        label: label.to_string(),
    })
}

fn parse_real<S: Scalar>(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<S, ParseError> {
    let token = token.ok_or_else(|| syntax(line, &format!("missing {what}")))?;
    let value: f64 = token
        .parse()
        .map_err(|_| syntax(line, &format!("invalid {what} '{token}'")))?;
    if !value.is_finite() {
        return Err(syntax(line, &format!("non-finite {what} '{token}'")));
    }
    Ok(S::cast(value))
}

/// Canonical serialization: vertex lines sorted by label, then edge lines
/// sorted by normalized label pair, then one sorted boundary line. Reals
/// carry 17 significant digits, so values round-trip bit-exactly.
pub fn write_graph_text<S: Scalar>(g: &WeightedGraph<S>, boundary: Option<&[usize]>) -> String {
    let mut out = String::new();
    let mut vlines: Vec<(String, String)> = (0..g.vertex_count())
        .map(|v| {
            (
                g.label(v).to_string(),
                format!("vertex {} {}\n", g.label(v), fmt_real(g.measure(v))),
            )
        })
        .collect();
    vlines.sort();
    for (_, l) in vlines {
        out.push_str(&l);
    }

    let mut elines: Vec<((String, String), String)> = g
        .edges()
        .iter()
        .map(|e| {
            let (la, lb) = (g.label(e.u).to_string(), g.label(e.v).to_string());
            let (la, lb) = if la <= lb { (la, lb) } else { (lb, la) };
            let text = format!("edge {la} {lb} {}\n", fmt_real(e.weight));
            ((la, lb), text)
        })
        .collect();
    elines.sort();
    for (_, l) in elines {
        out.push_str(&l);
    }

    if let Some(boundary) = boundary {
        let mut labels: Vec<&str> = boundary.iter().map(|&v| g.label(v)).collect();
        labels.sort_unstable();
        out.push_str("boundary");
        for l in labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out
}

fn fmt_real<S: Scalar>(x: S) -> String {
    format!("{:.16e}", x.to_f64().expect("finite measure or weight"))
}
