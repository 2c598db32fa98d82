//! Text formats for graphs, biadjacency matrices and quadratic ideals.
//!
//! Vertices are 1-based in every file; blank lines and `#` comments are
//! ignored. The three formats are distinguished by their first payload
//! line: a single integer opens an edge list, two integers open a
//! biadjacency matrix, and anything starting with a variable opens an
//! ideal (one degree-2 monomial per line, e.g. `x1^2` or `x2*x5`).

use thiserror::Error;

use crate::bipartite::BipartiteView;
use crate::graph::Graph;
use crate::polarization::QuadraticIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Payload lines with their 1-based position in the source.
fn payload_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

#[derive(Debug, Clone)]
pub enum ParsedInput {
    Graph(Graph),
    Bipartite {
        graph: Graph,
        view: BipartiteView,
    },
    Ideal(QuadraticIdeal),
    /// An ideal file without square generators: an ordinary edge ideal.
    SquarefreeIdeal(Graph),
}

/// Detect the format from the first payload line and parse accordingly.
pub fn parse_input(src: &str) -> Result<ParsedInput, ParseError> {
    let lines = payload_lines(src);
    let (lineno, first) = match lines.first() {
        Some(&x) => x,
        None => return err(1, "empty input"),
    };
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        match first.split_whitespace().count() {
            1 => parse_graph_text(src).map(ParsedInput::Graph),
            2 => parse_bipartite_matrix(src)
                .map(|(graph, view)| ParsedInput::Bipartite { graph, view }),
            k => err(
                lineno,
                format!("expected `n` or `n m` on the first line, found {k} fields"),
            ),
        }
    } else if first.starts_with('x') {
        parse_ideal_file(src)
    } else {
        err(
            lineno,
            "unrecognized format: expected a vertex count, matrix dimensions, or a monomial",
        )
    }
}

/// Edge-list format: first line `n`, then one `u v` pair per line.
pub fn parse_graph_text(src: &str) -> Result<Graph, ParseError> {
    let lines = payload_lines(src);
    let (first_no, first) = match lines.first() {
        Some(&x) => x,
        None => return err(1, "empty input"),
    };
    let n: usize = match first.parse() {
        Ok(n) => n,
        Err(_) => {
            return err(
                first_no,
                format!("expected a vertex count, found `{first}`"),
            )
        }
    };
    let mut g = match Graph::new(n) {
        Ok(g) => g,
        Err(e) => return err(first_no, e.to_string()),
    };
    for &(lineno, line) in &lines[1..] {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return err(lineno, format!("expected `u v`, found `{line}`"));
        }
        let parse_vertex = |s: &str| -> Result<usize, ParseError> {
            let v: usize = s.parse().map_err(|_| ParseError {
                line: lineno,
                message: format!("`{s}` is not a vertex index"),
            })?;
            if v == 0 || v > n {
                return err(lineno, format!("vertex {v} outside 1..={n}"));
            }
            Ok(v - 1)
        };
        let u = parse_vertex(fields[0])?;
        let v = parse_vertex(fields[1])?;
        if let Err(e) = g.add_edge(u, v) {
            return err(lineno, e.to_string());
        }
    }
    Ok(g)
}

/// Biadjacency format: first line `n m`, then `n` rows of `m` 0/1 values.
/// Rows become vertices `1..=n`, columns `n+1..=n+m`.
pub fn parse_bipartite_matrix(src: &str) -> Result<(Graph, BipartiteView), ParseError> {
    let lines = payload_lines(src);
    let (first_no, first) = match lines.first() {
        Some(&x) => x,
        None => return err(1, "empty input"),
    };
    let dims: Vec<&str> = first.split_whitespace().collect();
    if dims.len() != 2 {
        return err(first_no, format!("expected `n m`, found `{first}`"));
    }
    let parse_dim = |s: &str| -> Result<usize, ParseError> {
        s.parse().map_err(|_| ParseError {
            line: first_no,
            message: format!("`{s}` is not a dimension"),
        })
    };
    let n = parse_dim(dims[0])?;
    let m = parse_dim(dims[1])?;
    let rows = &lines[1..];
    if rows.len() != n {
        return err(
            rows.last().map(|&(l, _)| l).unwrap_or(first_no),
            format!("expected {n} matrix rows, found {}", rows.len()),
        );
    }
    let mut g = match Graph::new(n + m) {
        Ok(g) => g,
        Err(e) => return err(first_no, e.to_string()),
    };
    for (i, &(lineno, line)) in rows.iter().enumerate() {
        let values: Vec<&str> = line.split_whitespace().collect();
        if values.len() != m {
            return err(
                lineno,
                format!("expected {m} entries, found {}", values.len()),
            );
        }
        for (j, v) in values.iter().enumerate() {
            match *v {
                "0" => {}
                "1" => g.add_edge(i, n + j).expect("indices in range"),
                other => {
                    return err(
                        lineno,
                        format!("matrix entries are 0 or 1, found `{other}`"),
                    )
                }
            }
        }
    }
    let view = BipartiteView::new(&g, (0..n).collect(), (n..n + m).collect())
        .expect("matrix construction is bipartite by definition");
    Ok((g, view))
}

struct Monomial {
    exponents: Vec<(usize, u32)>, // (0-based variable, exponent)
}

fn parse_monomial(lineno: usize, s: &str) -> Result<Monomial, ParseError> {
    let mut exponents = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        let rest = match factor.strip_prefix('x') {
            Some(r) => r,
            None => return err(lineno, format!("`{factor}` is not of the form x<index>")),
        };
        let (idx_str, exp) = match rest.split_once('^') {
            Some((i, e)) => {
                let exp: u32 = e.parse().map_err(|_| ParseError {
                    line: lineno,
                    message: format!("`{e}` is not an exponent"),
                })?;
                (i, exp)
            }
            None => (rest, 1),
        };
        let idx: usize = idx_str.parse().map_err(|_| ParseError {
            line: lineno,
            message: format!("`{idx_str}` is not a variable index"),
        })?;
        if idx == 0 {
            return err(lineno, "variable indices start at 1");
        }
        exponents.push((idx - 1, exp));
    }
    Ok(Monomial { exponents })
}

/// Ideal format: one monomial per line, total degree 2 enforced.
pub fn parse_ideal_file(src: &str) -> Result<ParsedInput, ParseError> {
    let lines = payload_lines(src);
    if lines.is_empty() {
        return err(1, "empty input");
    }
    let mut squares: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n_vars = 0usize;
    for &(lineno, line) in &lines {
        let m = parse_monomial(lineno, line)?;
        let total: u32 = m.exponents.iter().map(|&(_, e)| e).sum();
        if total != 2 {
            return err(
                lineno,
                format!("`{line}` has degree {total}; generators must be quadrics"),
            );
        }
        let mut vars: Vec<usize> = Vec::new();
        for &(v, e) in &m.exponents {
            for _ in 0..e {
                vars.push(v);
            }
            n_vars = n_vars.max(v + 1);
        }
        if vars[0] == vars[1] {
            if squares.contains(&vars[0]) {
                return err(lineno, format!("duplicate generator `{line}`"));
            }
            squares.push(vars[0]);
        } else {
            let key = (vars[0].min(vars[1]), vars[0].max(vars[1]));
            if edges.contains(&key) {
                return err(lineno, format!("duplicate generator `{line}`"));
            }
            edges.push(key);
        }
    }
    if squares.is_empty() {
        let g = Graph::from_edges(n_vars, &edges).expect("validated indices");
        return Ok(ParsedInput::SquarefreeIdeal(g));
    }
    let ideal = QuadraticIdeal::new(n_vars, squares, edges).expect("validated while parsing");
    Ok(ParsedInput::Ideal(ideal))
}

/// Render a graph back into the edge-list format, carrying labels as a
/// comment so the output stays both readable and parseable.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        out.push_str(&format!("# vertices: {}\n", labels.join(" ")));
    }
    out.push_str(&format!("{}\n", g.n_vertices()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
