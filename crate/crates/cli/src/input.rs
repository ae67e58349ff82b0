use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use nmseq::{formats, Graph};

use crate::Failure;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

impl InputFormat {
    fn infer(path: &Path) -> Result<Self, Failure> {
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        match ext.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Ok(InputFormat::Graph6),
            "edges" | "edgelist" | "el" | "txt" => Ok(InputFormat::Edgelist),
            _ => Err(Failure::Input(format!(
                "cannot infer the format of {}; pass --format graph6 or --format edgelist",
                path.display()
            ))),
        }
    }
}

/// Reads every graph in the input, in file order.
pub fn read_graphs(path: &Path, format: Option<InputFormat>) -> Result<Vec<Graph>, Failure> {
    let stdin = path.as_os_str() == "-";
    let format = match format {
        Some(f) => f,
        None if stdin => {
            return Err(Failure::Input(
                "--format is required when reading standard input".into(),
            ))
        }
        None => InputFormat::infer(path)?,
    };
    let text = if stdin {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    let graphs = match format {
        InputFormat::Graph6 => formats::read_graph6_collection(&text)?,
        InputFormat::Edgelist => formats::read_edge_lists(&text)?,
    };
    if graphs.is_empty() {
        return Err(Failure::Input(format!(
            "{} contains no graphs",
            path.display()
        )));
    }
    Ok(graphs)
}
