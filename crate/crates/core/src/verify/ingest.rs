//! Reading graph6 files, one graph per line.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// A line that failed to parse. Line numbers start at 1.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {error}")]
pub struct LineError {
    pub line: usize,
    pub error: Error,
}

/// Iterator over the graphs of a graph6 stream. Blank lines are skipped;
/// a malformed line yields an error and the stream continues.
pub struct Graph6Lines<R> {
    lines: io::Lines<R>,
    line: usize,
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = io::Result<Result<(usize, Graph), LineError>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => return Some(Err(e)),
            };
            self.line += 1;
            let text = text.trim();
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(Ok(parse_graph6(text)
                .map(|g| (line, g))
                .map_err(|error| LineError { line, error })));
        }
    }
}

pub fn ingest_graph6_stream<R: BufRead>(reader: R) -> Graph6Lines<R> {
    Graph6Lines {
        lines: reader.lines(),
        line: 0,
    }
}

pub fn ingest_graph6_file(path: &Path) -> io::Result<Graph6Lines<BufReader<File>>> {
    Ok(ingest_graph6_stream(BufReader::new(File::open(path)?)))
}

/// Parsed graphs with their line numbers, and the lines that failed.
pub type Collected = (Vec<(usize, Graph)>, Vec<LineError>);

/// Drains a stream into the parsed graphs and the per-line diagnostics.
pub fn collect_graphs<R: BufRead>(lines: Graph6Lines<R>) -> io::Result<Collected> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for item in lines {
        match item? {
            Ok(g) => graphs.push(g),
            Err(e) => errors.push(e),
        }
    }
    Ok((graphs, errors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Graph6Error;

    fn read(text: &str) -> Collected {
        collect_graphs(ingest_graph6_stream(text.as_bytes())).unwrap()
    }

    #[test]
    fn two_graphs() {
        let (graphs, errors) = read("C~\nC?\n");
        assert!(errors.is_empty());
        assert_eq!(graphs[0], (1, Graph::complete(4).unwrap()));
        assert_eq!(graphs[1], (2, Graph::empty(4).unwrap()));
    }

    #[test]
    fn empty_input() {
        let (graphs, errors) = read("");
        assert!(graphs.is_empty() && errors.is_empty());
    }

    #[test]
    fn malformed_line_keeps_going() {
        let (graphs, errors) = read("C~\n\nC\nDhc\n");
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].0, 4);
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].line, 3);
        assert!(matches!(errors[0].error, Error::Graph6(Graph6Error::Truncated { .. })));
        assert!(errors[0].to_string().starts_with("line 3: "));
    }
}
