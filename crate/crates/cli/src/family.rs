use std::fmt;
use std::ops::RangeInclusive;

use kron_thickness::format::graph_from_json;
use kron_thickness::graph::{
    make_complete, make_complete_bipartite, make_complete_tripartite, make_cycle, make_path, Graph,
};

use crate::Failure;

/// A graph named on the command line, e.g. `kn:5`, `kmn:3,4` or `file:g.json`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(u32),
    CompleteBipartite(u32, u32),
    CompleteTripartite(u32, u32, u32),
    Path(u32),
    Cycle(u32),
    File(String),
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "kn:{n}"),
            GraphSpec::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            GraphSpec::CompleteTripartite(l, m, n) => write!(f, "knnn:{l},{m},{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::File(p) => write!(f, "file:{p}"),
        }
    }
}

pub fn parse_numbers(text: &str, count: usize) -> Result<Vec<u32>, String> {
    let values = text
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| format!("'{s}' is not a non-negative integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != count {
        return Err(format!("expected {count} comma-separated values, got '{text}'"));
    }
    Ok(values)
}

impl std::str::FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, args) = s.split_once(':').ok_or_else(|| format!("'{s}' is not of the form kind:args"))?;
        Ok(match kind {
            "kn" => GraphSpec::Complete(parse_numbers(args, 1)?[0]),
            "kmn" => {
                let v = parse_numbers(args, 2)?;
                GraphSpec::CompleteBipartite(v[0], v[1])
            }
            "knnn" => match parse_numbers(args, 1) {
                Ok(v) => GraphSpec::CompleteTripartite(v[0], v[0], v[0]),
                Err(_) => {
                    let v = parse_numbers(args, 3)?;
                    GraphSpec::CompleteTripartite(v[0], v[1], v[2])
                }
            },
            "path" => GraphSpec::Path(parse_numbers(args, 1)?[0]),
            "cycle" => GraphSpec::Cycle(parse_numbers(args, 1)?[0]),
            "file" if !args.is_empty() => GraphSpec::File(args.to_string()),
            _ => return Err(format!("unknown graph family in '{s}' (kn, kmn, knnn, path, cycle, file)")),
        })
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, Failure> {
        let usage = |e: kron_thickness::graph::GraphError| Failure::Usage(format!("{self}: {e}"));
        match self {
            GraphSpec::Complete(n) => make_complete(*n).map_err(usage),
            GraphSpec::CompleteBipartite(m, n) => make_complete_bipartite(*m, *n).map_err(usage),
            GraphSpec::CompleteTripartite(l, m, n) => make_complete_tripartite(*l, *m, *n).map_err(usage),
            GraphSpec::Path(n) => make_path(*n).map_err(usage),
            GraphSpec::Cycle(n) => make_cycle(*n).map_err(usage),
            GraphSpec::File(path) => {
                let text = crate::read_input(path)?;
                graph_from_json(&text).map_err(|e| Failure::Io(format!("{path}: {e}")))
            }
        }
    }
}

/// Sizes such as `2..20`, `1,4,5,8` or `1..3,8`.
pub fn parse_range(text: &str) -> Result<Vec<u32>, String> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        let range: RangeInclusive<u32> = match piece.split_once("..") {
            Some((a, b)) => {
                let a = a.parse().map_err(|_| format!("bad range start in '{piece}'"))?;
                let b = b.trim_start_matches('=').parse().map_err(|_| format!("bad range end in '{piece}'"))?;
                a..=b
            }
            None => {
                let n = piece.parse().map_err(|_| format!("'{piece}' is not a size"))?;
                n..=n
            }
        };
        if range.is_empty() {
            return Err(format!("empty range '{piece}'"));
        }
        out.extend(range);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse() {
        assert_eq!("kn:5".parse(), Ok(GraphSpec::Complete(5)));
        assert_eq!("kmn:3,4".parse(), Ok(GraphSpec::CompleteBipartite(3, 4)));
        assert_eq!("knnn:3".parse(), Ok(GraphSpec::CompleteTripartite(3, 3, 3)));
        assert_eq!("knnn:1,2,3".parse(), Ok(GraphSpec::CompleteTripartite(1, 2, 3)));
        assert_eq!("file:a.json".parse(), Ok(GraphSpec::File("a.json".into())));
        for bad in ["kn", "kn:x", "kmn:3", "tree:4", "file:"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("2..4"), Ok(vec![2, 3, 4]));
        assert_eq!(parse_range("1,4..5,9"), Ok(vec![1, 4, 5, 9]));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a").is_err());
    }
}
