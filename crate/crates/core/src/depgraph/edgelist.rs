//! Tab-separated edge-list format.
//!
//! ```text
//! # comment
//! source<TAB>target<TAB>weight
//! isolated<TAB>-<TAB>0
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use super::DependencyGraph;
use crate::error::{Error, Result};

const ISOLATED_TARGET: &str = "-";

pub fn write_edge_list_to<W: Write>(g: &DependencyGraph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# source\ttarget\tweight")?;
    let mut touched = BTreeSet::new();
    for (s, t, w) in g.edges() {
        writeln!(out, "{s}\t{t}\t{w}")?;
        touched.insert(s);
        touched.insert(t);
    }
    for n in g.nodes().filter(|n| !touched.contains(n)) {
        writeln!(out, "{n}\t{ISOLATED_TARGET}\t0")?;
    }
    Ok(())
}

pub fn write_edge_list(g: &DependencyGraph, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_edge_list_to(g, &mut buf).map_err(|e| Error::io(path, e))?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

pub fn read_edge_list(path: &Path) -> Result<DependencyGraph> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text, &path.display().to_string())
}

/// Parses edge-list text. `context` names the source in error messages.
pub fn parse_edge_list(text: &str, context: &str) -> Result<DependencyGraph> {
    let mut g = DependencyGraph::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::parse(
                context,
                lineno,
                format!("expected 3 tab-separated fields, found {}", fields.len()),
            ));
        }
        let (source, target, weight) = (fields[0], fields[1], fields[2]);
        if source.is_empty() || target.is_empty() {
            return Err(Error::parse(context, lineno, "empty node name"));
        }
        if source == ISOLATED_TARGET {
            return Err(Error::parse(context, lineno, "'-' is reserved and cannot name a node"));
        }
        let weight: i64 = weight
            .parse()
            .map_err(|_| Error::parse(context, lineno, format!("invalid weight '{weight}'")))?;
        if target == ISOLATED_TARGET {
            if weight != 0 {
                return Err(Error::parse(context, lineno, "isolated-node record must have weight 0"));
            }
            g.add_node(source);
            continue;
        }
        if weight < 1 {
            return Err(Error::parse(
                context,
                lineno,
                format!("weight must be >= 1, got {weight}"),
            ));
        }
        if source == target {
            return Err(Error::parse(context, lineno, format!("self-loop on {source}")));
        }
        if g.weight(source, target).is_some() {
            return Err(Error::parse(
                context,
                lineno,
                format!("duplicate edge {source} -> {target}"),
            ));
        }
        g.add_uses(source, target, weight as u64);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn roundtrip(g: &DependencyGraph) -> DependencyGraph {
        let mut buf = Vec::new();
        write_edge_list_to(g, &mut buf).unwrap();
        parse_edge_list(std::str::from_utf8(&buf).unwrap(), "mem").unwrap()
    }

    #[test]
    fn three_node_roundtrip() {
        let mut g = DependencyGraph::new();
        g.add_uses("a.A", "a.B", 3);
        g.add_uses("a.B", "a.C", 1);
        g.add_uses("a.C", "a.A", 2);
        assert_eq!(roundtrip(&g), g);
    }

    #[test]
    fn zero_weight_edge_is_rejected() {
        let err = parse_edge_list("A\tB\t0\n", "f").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_weight_and_bad_field_count_report_line() {
        let err = parse_edge_list("# c\nA\tB\t1\nA\tC\t-2\n", "f").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_edge_list("A\tB\n", "f").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = parse_edge_list("A\tB\t1\nA\tB\t2\n", "f").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        // the reverse direction is a distinct edge
        assert!(parse_edge_list("A\tB\t1\nB\tA\t2\n", "f").is_ok());
    }

    #[test]
    fn isolated_node_record() {
        let g = parse_edge_list("# header\nLonely\t-\t0\n", "f").unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(roundtrip(&g), g);
    }

    proptest! {
        #[test]
        fn roundtrip_is_identity(
            nodes in proptest::collection::btree_set("[a-z]{1,3}(\\.[A-Z][a-z]{0,3})?", 1..8),
            raw_edges in proptest::collection::vec((0usize..8, 0usize..8, 1u64..1000), 0..20),
        ) {
            let nodes: Vec<String> = nodes.into_iter().collect();
            let mut g = DependencyGraph::new();
            for n in &nodes {
                g.add_node(n.clone());
            }
            for (s, t, w) in raw_edges {
                let (s, t) = (&nodes[s % nodes.len()], &nodes[t % nodes.len()]);
                if g.weight(s, t).is_none() {
                    g.add_uses(s, t, w);
                }
            }
            prop_assert_eq!(roundtrip(&g), g);
        }
    }
}
