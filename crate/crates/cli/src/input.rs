use std::path::Path;

use sepgraph_core::families::builtin_graph;
use sepgraph_core::graph::generators::{complete, cycle, grid, path, star};
use sepgraph_core::{Error, Graph, Result};

/// Reads `--in`: a path to an edge list or `builtin:NAME`.
pub fn load_graph(spec: &str) -> Result<Graph> {
    match spec.strip_prefix("builtin:") {
        Some(name) => generated(name).unwrap_or_else(|| builtin_graph(name)),
        None => Graph::parse(&std::fs::read_to_string(Path::new(spec))?),
    }
}

/// Parametrised builtins such as `grid-4x5`, `cycle-6` or `star-3`.
fn generated(name: &str) -> Option<Result<Graph>> {
    let (kind, arg) = name.split_once('-')?;
    let number = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Precondition(format!("bad size {s:?} in builtin:{name}")))
    };
    let g = match kind {
        "grid" => arg
            .split('x')
            .map(number)
            .collect::<Result<Vec<_>>>()
            .and_then(|dims| {
                if dims.contains(&0) {
                    Err(Error::Precondition(format!("empty side in builtin:{name}")))
                } else {
                    Ok(grid(&dims))
                }
            }),
        "cycle" => number(arg).and_then(|n| {
            if n < 3 {
                Err(Error::Precondition(
                    "cycles need at least 3 vertices".into(),
                ))
            } else {
                Ok(cycle(n))
            }
        }),
        "path" => number(arg).map(path),
        "complete" => number(arg).map(complete),
        "star" => number(arg).map(star),
        _ => return None,
    };
    Some(g)
}

/// Parses `1,2,5..9` into a sorted, deduplicated list of sizes.
pub fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    let bad = |part: &str| Error::Precondition(format!("bad --n-list entry {part:?}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad(part))?;
                let b: usize = b
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .map_err(|_| bad(part))?;
                if a > b {
                    return Err(bad(part));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad(part))?),
        }
    }
    if out.is_empty() {
        return Err(Error::Precondition("--n-list is empty".into()));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses `--grid d,s`.
pub fn parse_grid(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Precondition(format!("--grid expects d,s, got {text:?}"));
    let (d, s) = text.split_once(',').ok_or_else(bad)?;
    let d = d.trim().parse().map_err(|_| bad())?;
    let s = s.trim().parse().map_err(|_| bad())?;
    if d == 0 || s == 0 {
        return Err(bad());
    }
    Ok((d, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("1,2,5..7").unwrap(), vec![1, 2, 5, 6, 7]);
        assert_eq!(parse_n_list("4, 2 ,2").unwrap(), vec![2, 4]);
        assert!(parse_n_list("3..1").is_err());
        assert!(parse_n_list("").is_err());
        assert!(parse_n_list("x").is_err());
    }

    #[test]
    fn builtins() {
        assert_eq!(load_graph("builtin:grid-3x4").unwrap().vertex_count(), 12);
        assert_eq!(load_graph("builtin:petersen").unwrap().edge_count(), 15);
        assert_eq!(load_graph("builtin:star-3").unwrap().vertex_count(), 4);
        assert!(load_graph("builtin:cycle-2").is_err());
        assert!(load_graph("builtin:nothing").is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("2,12").unwrap(), (2, 12));
        assert!(parse_grid("2").is_err());
        assert!(parse_grid("0,3").is_err());
    }
}
