//! Line-oriented text formats for instances, allocations, and MCIS inputs.
//!
//! All three formats are UTF-8, one directive per line, with `#` starting a
//! comment that runs to the end of the line; blank lines are skipped. Parsers
//! report malformed input as [`Error::Parse`] with the 1-based line number.
//! Emitters write the canonical form — directives only, in index order, with
//! a trailing newline — and `emit(parse(text)) == text` holds for canonical
//! files.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{Allocation, EdgeItem, GraphicalInstance};
use crate::reductions::McisInstance;

/// `graphical 1`, then `agents <n>`, then one `edge <a> <b> <value_a>
/// <value_b>` per item in item-index order.
pub fn parse_instance(text: &str) -> Result<GraphicalInstance> {
    let mut lines = significant_lines(text);
    expect_header(lines.next(), "graphical")?;

    let (line, tokens) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing `agents <n>` line".into(),
    })?;
    if tokens[0] != "agents" || tokens.len() != 2 {
        return Err(Error::Parse {
            line,
            message: "expected `agents <n>`".into(),
        });
    }
    let n_agents: usize = parse_num(line, tokens[1], "agent count")?;

    let mut edges = Vec::new();
    for (line, tokens) in lines {
        if tokens[0] != "edge" {
            return Err(Error::Parse {
                line,
                message: format!("unknown directive `{}` (expected `edge`)", tokens[0]),
            });
        }
        if tokens.len() != 5 {
            return Err(Error::Parse {
                line,
                message: "expected `edge <a> <b> <value_a> <value_b>`".into(),
            });
        }
        edges.push(EdgeItem::new(
            parse_num(line, tokens[1], "endpoint")?,
            parse_num(line, tokens[2], "endpoint")?,
            parse_num(line, tokens[3], "value")?,
            parse_num(line, tokens[4], "value")?,
        ));
    }
    GraphicalInstance::new(n_agents, edges)
}

pub fn emit_instance(inst: &GraphicalInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphical 1");
    let _ = writeln!(out, "agents {}", inst.n_agents());
    for e in inst.edges() {
        let _ = writeln!(out, "edge {} {} {} {}", e.a, e.b, e.value_a, e.value_b);
    }
    out
}

/// `allocation 1`, then one `assign <item> <agent>` line per item, each item
/// index exactly once. The item count is the number of assignment lines.
pub fn parse_allocation(text: &str) -> Result<Allocation> {
    let mut lines = significant_lines(text);
    expect_header(lines.next(), "allocation")?;

    let mut assignments = Vec::new();
    for (line, tokens) in lines {
        if tokens[0] != "assign" {
            return Err(Error::Parse {
                line,
                message: format!("unknown directive `{}` (expected `assign`)", tokens[0]),
            });
        }
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line,
                message: "expected `assign <item> <agent>`".into(),
            });
        }
        let item: usize = parse_num(line, tokens[1], "item index")?;
        let agent: usize = parse_num(line, tokens[2], "agent index")?;
        assignments.push((line, item, agent));
    }

    let n_items = assignments.len();
    let mut owners = vec![None; n_items];
    for (line, item, agent) in assignments {
        if item >= n_items {
            return Err(Error::Parse {
                line,
                message: format!(
                    "item index {item} out of range: the file has {n_items} assignments"
                ),
            });
        }
        if owners[item].is_some() {
            return Err(Error::Parse {
                line,
                message: format!("item {item} is assigned twice"),
            });
        }
        owners[item] = Some(agent);
    }
    // Every slot is filled: n_items distinct in-range indices cover 0..n_items.
    Ok(Allocation::new(
        owners.into_iter().map(|o| o.unwrap()).collect(),
    ))
}

pub fn emit_allocation(allocation: &Allocation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "allocation 1");
    for (item, &agent) in allocation.owners().iter().enumerate() {
        let _ = writeln!(out, "assign {item} {agent}");
    }
    out
}

/// `mcis 1`, then `classes <k>`, then one `class <i> <v...>` line per class,
/// then `edge <u> <v>` lines. The degree is inferred from the edges and the
/// graph is validated as regular, simple, and class-partitioned on load.
pub fn parse_mcis(text: &str) -> Result<McisInstance> {
    let mut lines = significant_lines(text).peekable();
    expect_header(lines.next(), "mcis")?;

    let (classes_line, tokens) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing `classes <k>` line".into(),
    })?;
    if tokens[0] != "classes" || tokens.len() != 2 {
        return Err(Error::Parse {
            line: classes_line,
            message: "expected `classes <k>`".into(),
        });
    }
    let n_classes: usize = parse_num(classes_line, tokens[1], "class count")?;

    let mut classes: Vec<Option<Vec<usize>>> = vec![None; n_classes];
    let mut edges = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "class" => {
                if tokens.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `class <i> <v1> <v2> ...`".into(),
                    });
                }
                let index: usize = parse_num(line, tokens[1], "class index")?;
                if index >= n_classes {
                    return Err(Error::Parse {
                        line,
                        message: format!(
                            "class index {index} out of range: {n_classes} classes declared"
                        ),
                    });
                }
                if classes[index].is_some() {
                    return Err(Error::Parse {
                        line,
                        message: format!("class {index} is declared twice"),
                    });
                }
                let members = tokens[2..]
                    .iter()
                    .map(|t| parse_num(line, t, "vertex"))
                    .collect::<Result<Vec<usize>>>()?;
                classes[index] = Some(members);
            }
            "edge" => {
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `edge <u> <v>`".into(),
                    });
                }
                edges.push((
                    parse_num(line, tokens[1], "endpoint")?,
                    parse_num(line, tokens[2], "endpoint")?,
                ));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive `{other}` (expected `class` or `edge`)"),
                });
            }
        }
    }

    let classes = classes
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| Error::Parse {
                line: classes_line,
                message: format!("class {i} announced here but never declared"),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let n: usize = classes.iter().map(|c| c.len()).sum();
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        if u < n {
            deg[u] += 1;
        }
        if v < n {
            deg[v] += 1;
        }
    }
    let degree = deg.first().copied().unwrap_or(0);
    McisInstance::new(classes, edges, degree)
}

pub fn emit_mcis(mcis: &McisInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mcis 1");
    let _ = writeln!(out, "classes {}", mcis.n_classes());
    for (i, class) in mcis.classes().iter().enumerate() {
        let _ = write!(out, "class {i}");
        for v in class {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for &(u, v) in mcis.edges() {
        let _ = writeln!(out, "edge {u} {v}");
    }
    out
}

/// 1-based line numbers with comments stripped and blank lines dropped;
/// yields each remaining line's whitespace-separated tokens (never empty).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            None
        } else {
            Some((i + 1, tokens))
        }
    })
}

fn expect_header(first: Option<(usize, Vec<&str>)>, kind: &str) -> Result<()> {
    match first {
        None => Err(Error::Parse {
            line: 1,
            message: format!("missing `{kind} 1` header"),
        }),
        Some((line, tokens)) => {
            if tokens.len() == 2 && tokens[0] == kind && tokens[1] == "1" {
                Ok(())
            } else if tokens.len() == 2 && tokens[0] == kind {
                Err(Error::Parse {
                    line,
                    message: format!("unsupported {kind} format version `{}`", tokens[1]),
                })
            } else {
                Err(Error::Parse {
                    line,
                    message: format!("expected `{kind} 1` header, got `{}`", tokens.join(" ")),
                })
            }
        }
    }
}

fn parse_num<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected an integer for the {what}, got `{token}`"),
    })
}
