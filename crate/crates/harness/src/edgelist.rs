//! Plain-text edge lists: a `n <nodes>` header, then one `i j` pair per
//! line. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use degree_mvn_core::Graph;

use crate::error::{HarnessError, Result};

pub fn to_edgelist_string(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &(i, j) in g.edges() {
        writeln!(s, "{i} {j}").expect("writing to a String cannot fail");
    }
    s
}

pub fn parse_edgelist(text: &str) -> std::result::Result<Graph, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or("missing `n <nodes>` header")?;
    let n: usize = header
        .strip_prefix("n ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| format!("bad header `{header}`"))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => edges.push((i, j)),
            _ => return Err(format!("line {lineno}: expected two node indices")),
        }
    }
    Graph::from_edges(n, edges).map_err(|e| e.to_string())
}

pub fn write_edgelist(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, to_edgelist_string(g)).map_err(|e| HarnessError::io(path, e))
}

pub fn read_edgelist(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    parse_edgelist(&text).map_err(|message| HarnessError::Parse { path: path.to_path_buf(), message })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        let text = to_edgelist_string(&g);
        assert_eq!(text, "n 4\n0 1\n1 2\n0 3\n");
        let back = parse_edgelist(&format!("# comment\n\n{text}")).unwrap();
        assert_eq!(back.degrees(), g.degrees());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edgelist("").is_err());
        assert!(parse_edgelist("4\n0 1\n").is_err());
        assert!(parse_edgelist("n 3\n0 1 2\n").is_err());
        assert!(parse_edgelist("n 3\n0 x\n").is_err());
        assert!(parse_edgelist("n 3\n0 3\n").is_err());
        assert!(parse_edgelist("n 3\n1 1\n").is_err());
    }
}
