use std::io::Read;

use anyhow::{Context, Result};
use grundy_lab::io::read_graphs;
use grundy_lab::Graph;

/// A graph read from an input, or the reason it could not be read.
pub struct Item {
    /// `source:line`.
    pub id: String,
    pub graph: std::result::Result<Graph, String>,
}

/// Reads every input in order; stdin when `paths` is empty.
pub fn load(paths: &[String]) -> Result<Vec<Item>> {
    let default = ["-".to_string()];
    let paths = if paths.is_empty() { &default[..] } else { paths };
    let mut items = Vec::new();
    for path in paths {
        let (name, text) = if path == "-" {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
            ("stdin", text)
        } else {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            (path.as_str(), text)
        };
        items.extend(read_graphs(&text).into_iter().map(|(line, graph)| Item {
            id: format!("{name}:{line}"),
            graph: graph.map_err(|e| e.to_string()),
        }));
    }
    Ok(items)
}
