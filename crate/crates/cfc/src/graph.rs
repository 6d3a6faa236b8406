//! Undirected simple graphs with string-labeled vertices.
//!
//! Vertices and edges remember their insertion order, so every traversal in
//! this crate is deterministic for a given construction sequence. Graphs are
//! built once with [`Graph::add_edge`] / parsed from text, then treated as
//! immutable; all algorithms take `&Graph`.

use std::borrow::Cow;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Wraps a label in parentheses when it already contains the edge separator,
/// so nested line-graph labels stay unambiguous.
fn wrap(label: &str) -> Cow<'_, str> {
    if label.contains('|') {
        Cow::Owned(format!("({label})"))
    } else {
        Cow::Borrowed(label)
    }
}

/// An unordered pair of distinct vertex labels.
///
/// Endpoints are stored in lexicographic order, so `Edge::new("b", "a")` and
/// `Edge::new("a", "b")` are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    a: String,
    b: String,
}

impl Edge {
    pub fn new(u: impl Into<String>, v: impl Into<String>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return Err(Error::Precondition(format!("loop edge at vertex {u:?}")));
        }
        if u <= v {
            Ok(Edge { a: u, b: v })
        } else {
            Ok(Edge { a: v, b: u })
        }
    }

    /// Endpoints in lexicographic order.
    pub fn endpoints(&self) -> (&str, &str) {
        (&self.a, &self.b)
    }

    /// Canonical text form: sorted endpoints joined by `|`, each endpoint
    /// wrapped in parentheses when it itself contains a `|`.
    pub fn key(&self) -> String {
        format!("{}|{}", wrap(&self.a), wrap(&self.b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

impl serde::Serialize for Edge {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        [&self.a, &self.b].serialize(serializer)
    }
}

/// An undirected simple graph.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Per vertex: `(neighbor index, edge id)` in edge insertion order.
    adj: Vec<Vec<(usize, usize)>>,
    /// Endpoint indices in the order the edge was added (not normalized).
    edges: Vec<(usize, usize)>,
    /// Normalized `(min, max)` endpoint indices -> edge id.
    edge_ids: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from an edge list; vertices appear in first-mention order.
    pub fn from_edges<S: AsRef<str>>(edges: impl IntoIterator<Item = (S, S)>) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Adds a vertex if absent; returns its index either way.
    pub fn add_vertex(&mut self, label: impl AsRef<str>) -> usize {
        let label = label.as_ref();
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(Vec::new());
        i
    }

    /// Adds an edge, creating endpoints as needed. Loops are rejected;
    /// duplicate edges are ignored (set semantics).
    pub fn add_edge(&mut self, u: impl AsRef<str>, v: impl AsRef<str>) -> Result<()> {
        let (u, v) = (u.as_ref(), v.as_ref());
        if u == v {
            return Err(Error::Precondition(format!("loop edge at vertex {u:?}")));
        }
        let ui = self.add_vertex(u);
        let vi = self.add_vertex(v);
        let key = (ui.min(vi), ui.max(vi));
        if self.edge_ids.contains_key(&key) {
            return Ok(());
        }
        let id = self.edges.len();
        self.edges.push((ui, vi));
        self.edge_ids.insert(key, id);
        self.adj[ui].push((vi, id));
        self.adj[vi].push((ui, id));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex labels in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edges.len()).map(|i| self.edge_at(i))
    }

    /// The `id`-th inserted edge.
    pub fn edge_at(&self, id: usize) -> Edge {
        let (u, v) = self.edges[id];
        Edge::new(self.labels[u].clone(), self.labels[v].clone())
            .expect("stored edges are loop-free")
    }

    /// Endpoint indices of the `id`-th edge, in insertion order.
    pub fn edge_vertex_ids(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, e: &Edge) -> Option<usize> {
        let (a, b) = e.endpoints();
        let ai = self.vertex_index(a)?;
        let bi = self.vertex_index(b)?;
        self.edge_ids.get(&(ai.min(bi), ai.max(bi))).copied()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.vertex_index(u), self.vertex_index(v)) {
            (Some(ui), Some(vi)) => self.has_edge_ids(ui, vi),
            _ => false,
        }
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edge_id(e).is_some()
    }

    pub fn has_edge_ids(&self, u: usize, v: usize) -> bool {
        self.edge_ids.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    /// `(neighbor index, edge id)` pairs in edge insertion order.
    pub fn adjacency(&self, index: usize) -> &[(usize, usize)] {
        &self.adj[index]
    }

    pub fn neighbors(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[index].iter().map(|&(w, _)| w)
    }

    /// True for the empty and one-vertex graphs as well.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// True iff every vertex pair is adjacent (vacuously for fewer than two
    /// vertices).
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n.saturating_sub(1)) / 2
    }

    /// True iff the graph is a path (any order, including a single vertex).
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        self.edge_count() + 1 == n && self.is_connected() && (0..n).all(|v| self.degree(v) <= 2)
    }

    /// True iff the graph is a star `K_{1,r}` with `r >= 1` (so `K_2` counts).
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count();
        n >= 2
            && self.edge_count() + 1 == n
            && self.is_connected()
            && (0..n).any(|v| self.degree(v) == n - 1)
    }

    /// Subgraph induced on `keep`; vertices keep this graph's insertion order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, keep: &[S]) -> Result<Graph> {
        let mut selected = vec![false; self.vertex_count()];
        for label in keep {
            let label = label.as_ref();
            let i =
                self.vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
            selected[i] = true;
        }
        let mut sub = Graph::new();
        for (i, label) in self.labels.iter().enumerate() {
            if selected[i] {
                sub.add_vertex(label);
            }
        }
        for &(u, v) in &self.edges {
            if selected[u] && selected[v] {
                sub.add_edge(&self.labels[u], &self.labels[v])?;
            }
        }
        Ok(sub)
    }

    /// Parses either of the two supported text formats. Input whose first
    /// token is the keyword `graph` (with a `{` block) is treated as the DOT
    /// subset, anything else as a plain edge list.
    pub fn parse(text: &str) -> Result<Graph> {
        let trimmed = text.trim_start();
        if (trimmed.starts_with("graph ")
            || trimmed.starts_with("graph{")
            || trimmed.starts_with("graph\n")
            || trimmed.starts_with("graph\t")
            || trimmed == "graph")
            && trimmed.contains('{')
        {
            Graph::parse_dot(text)
        } else {
            Graph::parse_edge_list(text)
        }
    }

    /// Edge list: one `u v` pair per line, `#` starts a comment, blank lines
    /// are ignored, `\r\n` endings are accepted.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut g = Graph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected two tokens, found {}", tokens.len()),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(Error::Parse {
                    line,
                    message: format!("loop edge at vertex {:?}", tokens[0]),
                });
            }
            g.add_edge(tokens[0], tokens[1])?;
        }
        Ok(g)
    }

    /// DOT subset: `graph [name] { a -- b; b -- c -- d; }`. No attributes,
    /// no directed edges, no subgraphs.
    pub fn parse_dot(text: &str) -> Result<Graph> {
        let tokens = dot_tokens(text)?;
        let mut pos = 0;
        let expect = |pos: &mut usize, want: &str| -> Result<()> {
            match tokens.get(*pos) {
                Some(t) if t.text == want => {
                    *pos += 1;
                    Ok(())
                }
                Some(t) => Err(Error::Parse {
                    line: t.line,
                    message: format!("expected {want:?}, found {:?}", t.text),
                }),
                None => Err(Error::Parse {
                    line: 0,
                    message: format!("expected {want:?}, found end of input"),
                }),
            }
        };
        expect(&mut pos, "graph")?;
        // Optional graph name.
        if let Some(t) = tokens.get(pos) {
            if t.text != "{" {
                if is_dot_id(&t.text) {
                    pos += 1;
                } else {
                    return Err(Error::Parse {
                        line: t.line,
                        message: format!("expected graph name or '{{', found {:?}", t.text),
                    });
                }
            }
        }
        expect(&mut pos, "{")?;
        let mut g = Graph::new();
        loop {
            let t = tokens
                .get(pos)
                .ok_or(Error::Parse { line: 0, message: "unterminated graph block".to_string() })?;
            if t.text == "}" {
                pos += 1;
                break;
            }
            if t.text == ";" {
                pos += 1;
                continue;
            }
            // Edge chain: id (-- id)+
            if !is_dot_id(&t.text) {
                return Err(Error::Parse {
                    line: t.line,
                    message: format!("expected vertex name, found {:?}", t.text),
                });
            }
            let mut prev = t.text.clone();
            let mut prev_line = t.line;
            pos += 1;
            let mut chained = false;
            while tokens.get(pos).map(|t| t.text.as_str()) == Some("--") {
                pos += 1;
                let t = tokens.get(pos).ok_or(Error::Parse {
                    line: prev_line,
                    message: "dangling '--'".to_string(),
                })?;
                if !is_dot_id(&t.text) {
                    return Err(Error::Parse {
                        line: t.line,
                        message: format!("expected vertex name after '--', found {:?}", t.text),
                    });
                }
                if t.text == prev {
                    return Err(Error::Parse {
                        line: t.line,
                        message: format!("loop edge at vertex {:?}", t.text),
                    });
                }
                g.add_edge(&prev, &t.text)?;
                prev = t.text.clone();
                prev_line = t.line;
                pos += 1;
                chained = true;
            }
            if !chained {
                return Err(Error::Parse {
                    line: prev_line,
                    message: format!("vertex {prev:?} is not part of an edge"),
                });
            }
        }
        if let Some(t) = tokens.get(pos) {
            return Err(Error::Parse {
                line: t.line,
                message: format!("unexpected trailing token {:?}", t.text),
            });
        }
        Ok(g)
    }

    /// Renders the graph as edge-list text, one edge per line in insertion
    /// order. Inverse of [`Graph::parse_edge_list`] for graphs without
    /// isolated vertices.
    pub fn render_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    fn normalized_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
    }
}

impl PartialEq for Graph {
    /// Structural identity: same labels in the same insertion order and the
    /// same edges in the same insertion order.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.normalized_edges() == other.normalized_edges()
    }
}

impl Eq for Graph {}

struct DotToken {
    text: String,
    line: usize,
}

fn is_dot_id(s: &str) -> bool {
    !s.is_empty()
        && !matches!(s, "graph" | "--" | "{" | "}" | ";")
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '.')
}

fn dot_tokens(text: &str) -> Result<Vec<DotToken>> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' | '}' | ';' => {
                tokens.push(DotToken { text: c.to_string(), line });
                chars.next();
            }
            '-' => {
                chars.next();
                if chars.peek() == Some(&'-') {
                    chars.next();
                    tokens.push(DotToken { text: "--".to_string(), line });
                } else {
                    return Err(Error::Parse { line, message: "expected '--'".to_string() });
                }
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(DotToken { text: word, line });
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unsupported character {other:?}"),
                });
            }
        }
    }
    Ok(tokens)
}
