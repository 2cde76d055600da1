//! Text formats for representations and graphs.
//!
//! Representation file:
//! ```text
//! REP k=<mark_count> n=<interval_count> flags=<comma list or none>
//! <l> <m_1> ... <m_k> <r>
//! ```
//! with coordinates written as `p/q` or integers (decimals accepted on input).
//!
//! Graph file:
//! ```text
//! GRAPH n=<count> m=<edges>
//! <u> <v>
//! ```
//! 0-indexed, `u < v`, one pair per line.

use crate::graph::SimpleGraph;
use crate::model::{FlavorSet, MarkedInterval, Representation};
use crate::scalar::{parse_coord, Coord};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

fn header_field<'a>(token: Option<&'a str>, key: &str, line: usize) -> Result<&'a str, IoError> {
    token
        .and_then(|t| t.strip_prefix(key))
        .ok_or_else(|| parse_err(line, format!("expected `{key}<value>`")))
}

pub fn write_rep<T: Coord>(rep: &Representation<T>) -> String {
    let mut out = format!(
        "REP k={} n={} flags={}\n",
        rep.mark_count,
        rep.len(),
        rep.flavor
    );
    for iv in &rep.intervals {
        let coords: Vec<String> = iv.points().map(|p| p.to_string()).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_rep<T: Coord>(text: &str) -> Result<Representation<T>, IoError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty representation file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("REP") {
        return Err(parse_err(line_no + 1, "expected `REP` header"));
    }
    let k: usize = header_field(tokens.next(), "k=", line_no + 1)?
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad mark count"))?;
    let n: usize = header_field(tokens.next(), "n=", line_no + 1)?
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad interval count"))?;
    let flavor: FlavorSet = header_field(tokens.next(), "flags=", line_no + 1)?
        .parse()
        .map_err(|e| parse_err(line_no + 1, e))?;
    if k == 0 {
        return Err(parse_err(line_no + 1, "mark count must be positive"));
    }

    let mut intervals = Vec::with_capacity(n);
    for (line_no, line) in lines.by_ref().take(n) {
        let coords: Vec<T> = line
            .split_whitespace()
            .map(|tok| {
                parse_coord(tok)
                    .ok_or_else(|| parse_err(line_no + 1, format!("bad coordinate `{tok}`")))
            })
            .collect::<Result<_, _>>()?;
        if coords.len() != k + 2 {
            return Err(parse_err(
                line_no + 1,
                format!("expected {} coordinates, found {}", k + 2, coords.len()),
            ));
        }
        let mut it = coords.into_iter();
        let left = it.next().unwrap();
        let mut marks: Vec<T> = it.collect();
        let right = marks.pop().unwrap();
        intervals.push(MarkedInterval::new(left, marks, right));
    }
    if intervals.len() != n {
        return Err(parse_err(0, format!("expected {n} interval lines")));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no + 1, "trailing content"));
    }
    Ok(Representation::new(k, intervals, flavor))
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("GRAPH n={} m={}\n", g.n, g.edge_count());
    for &(u, v) in &g.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, IoError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty graph file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("GRAPH") {
        return Err(parse_err(line_no + 1, "expected `GRAPH` header"));
    }
    let n: usize = header_field(tokens.next(), "n=", line_no + 1)?
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad vertex count"))?;
    let m: usize = header_field(tokens.next(), "m=", line_no + 1)?
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad edge count"))?;

    let mut g = SimpleGraph::empty(n);
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(line_no + 1, "expected `u v`"));
        }
        let u: usize = fields[0]
            .parse()
            .map_err(|_| parse_err(line_no + 1, "bad vertex id"))?;
        let v: usize = fields[1]
            .parse()
            .map_err(|_| parse_err(line_no + 1, "bad vertex id"))?;
        if u >= v {
            return Err(parse_err(line_no + 1, "edges must satisfy u < v"));
        }
        if v >= n {
            return Err(parse_err(line_no + 1, "vertex id out of range"));
        }
        g.add_edge(u, v);
    }
    if g.edge_count() != m {
        return Err(parse_err(
            0,
            format!("header claims {m} edges, found {}", g.edge_count()),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Flavor;
    use crate::Q;

    #[test]
    fn rep_round_trip() {
        let mut rep = Representation::<Q>::from_triples(&[(0, 2, 4), (3, 5, 7)]);
        rep.flavor = FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]);
        rep.intervals[0].marks[0] = Q::ratio(5, 2);
        let text = write_rep(&rep);
        let back: Representation<Q> = parse_rep(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(write_rep(&back), text);
    }

    #[test]
    fn rep_accepts_decimals() {
        let text = "REP k=1 n=1 flags=none\n0.5 1.25 2\n";
        let rep: Representation<Q> = parse_rep(text).unwrap();
        assert_eq!(rep.intervals[0].marks[0], Q::ratio(5, 4));
    }

    #[test]
    fn rep_rejects_malformed() {
        assert!(parse_rep::<Q>("REP k=1 n=1 flags=none\n1 2\n").is_err());
        assert!(parse_rep::<Q>("REP k=0 n=0 flags=none\n").is_err());
        assert!(parse_rep::<Q>("REP k=1 n=1 flags=bogus\n0 1 2\n").is_err());
        assert!(parse_rep::<Q>("REP k=1 n=1 flags=none\n0 1 2\n3 4 5\n").is_err());
    }

    #[test]
    fn graph_round_trip() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 4)]);
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(parse_graph("GRAPH n=2 m=1\n1 0\n").is_err());
        assert!(parse_graph("GRAPH n=2 m=2\n0 1\n").is_err());
    }
}
