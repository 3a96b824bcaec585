//! The graph mini-language accepted by `--tree`, `--host`, `--pattern` and
//! `--forbid`.
//!
//! ```text
//! path:n  star:n  cycle:n  matching:n  complete:n  dbroom:l,s,t
//! file:<path>   edge list ("n m" header) or graph6
//! g6:<string>   inline graph6
//! ```
//!
//! A bare argument naming an existing file is read as `file:<arg>`.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use turanlab::graph::{decode_edge_list, decode_graph6};
use turanlab::{Error, Graph, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphArg {
    Path(usize),
    Star(usize),
    Cycle(usize),
    Matching(usize),
    Complete(usize),
    DoubleBroom(usize, usize, usize),
    File(String),
    Graph6(String),
}

impl GraphArg {
    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            Self::Path(n) => Graph::path(n),
            Self::Star(n) => Graph::star(n),
            Self::Cycle(n) => {
                if n < 3 {
                    return Err(Error::Parse(format!("cycle:{n} needs at least 3 vertices")));
                }
                Graph::cycle(n)
            }
            Self::Matching(n) => Graph::matching(n),
            Self::Complete(n) => Graph::complete(n),
            Self::DoubleBroom(l, s, t) => Graph::double_broom(l, s, t)?,
            Self::File(ref path) => read_graph_file(Path::new(path))?,
            Self::Graph6(ref text) => decode_graph6(text)?,
        })
    }

    /// Builds the graph and insists that it is a tree on at least two
    /// vertices.
    pub fn build_tree(&self) -> Result<Graph> {
        if let Self::Cycle(_) = self {
            return Err(Error::Parse(format!("{self} is not a tree")));
        }
        let g = self.build()?;
        if g.order() < 2 || !g.is_tree() {
            return Err(Error::Parse(format!(
                "{self} is not a tree on at least two vertices ({} vertices, {} edges)",
                g.order(),
                g.edge_count()
            )));
        }
        Ok(g)
    }
}

fn read_graph_file(path: &Path) -> Result<Graph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let body: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    // a graph6 file has a single token on its only line
    match body.as_slice() {
        [line] if !line.contains(char::is_whitespace) => decode_graph6(line),
        _ => decode_edge_list(&text),
    }
}

fn count(kind: &str, arg: &str) -> std::result::Result<usize, Error> {
    arg.parse()
        .map_err(|_| Error::Parse(format!("{kind}: expected a vertex count, got {arg:?}")))
}

impl FromStr for GraphArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((kind, arg)) = s.split_once(':') else {
            if Path::new(s).is_file() {
                return Ok(Self::File(s.to_owned()));
            }
            return Err(Error::Parse(format!(
                "unrecognized graph argument {s:?}; expected kind:args or an existing file"
            )));
        };
        Ok(match kind {
            "path" => Self::Path(count(kind, arg)?),
            "star" => Self::Star(count(kind, arg)?),
            "cycle" => Self::Cycle(count(kind, arg)?),
            "matching" => Self::Matching(count(kind, arg)?),
            "complete" => Self::Complete(count(kind, arg)?),
            "dbroom" => {
                let fields: Vec<_> = arg
                    .split(',')
                    .map(|f| count(kind, f.trim()))
                    .collect::<Result<_>>()?;
                match fields[..] {
                    [l, s, t] => Self::DoubleBroom(l, s, t),
                    _ => return Err(Error::Parse(format!("dbroom: expected l,s,t, got {arg:?}"))),
                }
            }
            "file" if !arg.is_empty() => Self::File(arg.to_owned()),
            "g6" => Self::Graph6(arg.to_owned()),
            _ => return Err(Error::Parse(format!("unknown graph kind {kind:?} in {s:?}"))),
        })
    }
}

impl fmt::Display for GraphArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Star(n) => write!(f, "star:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Matching(n) => write!(f, "matching:{n}"),
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::DoubleBroom(l, s, t) => write!(f, "dbroom:{l},{s},{t}"),
            Self::File(p) => write!(f, "file:{p}"),
            Self::Graph6(g) => write!(f, "g6:{g}"),
        }
    }
}
