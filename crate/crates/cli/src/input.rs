use std::io::Read;

use lineopt_core::graph::format::{from_edge_list, from_graph6};
use lineopt_core::graph::Graph;

use crate::{CliError, GraphSource};

fn looks_like_edge_list(text: &str) -> bool {
    text.trim_start().starts_with('n') && text.trim().contains(char::is_whitespace)
}

pub fn read_graph(source: &GraphSource) -> Result<Graph, CliError> {
    let parsed = if let Some(g6) = &source.g6 {
        from_graph6(g6)
    } else if let Some(path) = &source.edges {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        from_edge_list(&text)
    } else {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        if looks_like_edge_list(&text) {
            from_edge_list(&text)
        } else {
            from_graph6(text.trim())
        }
    };
    parsed.map_err(|e| CliError::Input(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing() {
        assert!(looks_like_edge_list("n 3\n0 1\n"));
        assert!(!looks_like_edge_list("Cs\n"));
        assert!(!looks_like_edge_list("n"));
    }
}
