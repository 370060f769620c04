//! Colored digraphs, crystal-graph materialization, components, sources,
//! string statistics, canonical isomorphism, and DOT/JSON serialization.

use crate::error::{Error, Result};
use crate::operators::{f_queer, f_shifted, f_young};
use crate::tableaux::{
    enumerate_ssht, enumerate_ssyt, weight_shifted, weight_young, Partition, ShiftedTableau,
    StrictPartition, Tableau, Weight, YoungTableau,
};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Distances to the two ends of the monochromatic string through a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringStats {
    /// Steps toward the string's source (delta_i).
    pub delta: usize,
    /// Steps toward the sink (epsilon_i).
    pub epsilon: usize,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub id: String,
    pub tableau: Option<Tableau>,
    pub weight: Option<Weight>,
}

/// A directed graph with edges labeled by colors `0..degree`. Crystal
/// construction produces per-color in/out-degree at most 1; general graphs
/// may violate that, and the axioms module reports it rather than failing.
#[derive(Debug, Clone)]
pub struct ColoredDigraph {
    degree: usize,
    queer: bool,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize, usize)>,
    index: HashMap<String, usize>,
}

impl ColoredDigraph {
    pub fn new(
        degree: usize,
        queer: bool,
        vertices: Vec<Vertex>,
        edges_by_id: &[(String, String, usize)],
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            index.insert(v.id.clone(), k);
        }
        let mut edges = Vec::with_capacity(edges_by_id.len());
        for (from, to, color) in edges_by_id {
            let f = *index
                .get(from)
                .ok_or_else(|| Error::UnknownVertex(from.clone()))?;
            let t = *index
                .get(to)
                .ok_or_else(|| Error::UnknownVertex(to.clone()))?;
            edges.push((f, t, *color));
        }
        Ok(ColoredDigraph {
            degree,
            queer,
            vertices,
            edges,
            index,
        })
    }

    /// Bare graph over anonymous vertices, convenient for hand-built
    /// axiom-checker inputs.
    pub fn from_edges(degree: usize, nvertices: usize, edges: &[(usize, usize, usize)]) -> Self {
        let vertices = (0..nvertices)
            .map(|k| Vertex {
                id: format!("v{k}"),
                tableau: None,
                weight: None,
            })
            .collect::<Vec<_>>();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.id.clone(), k))
            .collect();
        ColoredDigraph {
            degree,
            queer: edges.iter().any(|&(_, _, c)| c == 0),
            vertices,
            edges: edges.to_vec(),
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_queer(&self) -> bool {
        self.queer
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Colors carried by this graph: 1..degree, plus 0 for queer graphs.
    pub fn colors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if self.queer {
            out.push(0);
        }
        out.extend(1..self.degree);
        out
    }

    pub fn out_neighbors(&self, v: usize, color: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(f, _, c)| f == v && c == color)
            .map(|&(_, t, _)| t)
            .collect()
    }

    pub fn in_neighbors(&self, v: usize, color: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, t, c)| t == v && c == color)
            .map(|&(f, _, _)| f)
            .collect()
    }

    /// The unique color-i successor (F_i), when per-color determinism holds.
    pub fn succ(&self, v: usize, color: usize) -> Option<usize> {
        let out = self.out_neighbors(v, color);
        debug_assert!(out.len() <= 1, "succ called on a nondeterministic graph");
        out.first().copied()
    }

    /// The unique color-i predecessor (E_i).
    pub fn pred(&self, v: usize, color: usize) -> Option<usize> {
        let inn = self.in_neighbors(v, color);
        debug_assert!(inn.len() <= 1, "pred called on a nondeterministic graph");
        inn.first().copied()
    }

    /// Undirected connected components over all edge colors, ordered by
    /// minimal vertex index; vertices within a component sorted ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(f, t, _) in &self.edges {
            let (a, b) = (find(&mut parent, f), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        for g in &mut out {
            g.sort_unstable();
        }
        out.sort_by_key(|g| g[0]);
        out
    }

    /// Vertices with no incoming edge of any color in `colors`.
    pub fn sources(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| {
                !self
                    .edges
                    .iter()
                    .any(|&(_, t, c)| t == v && colors.contains(&c))
            })
            .collect()
    }

    /// Walks the i-string through `x`. Requires per-color in/out-degree at
    /// most 1 at every vertex on the string; a monochromatic cycle is
    /// reported as a verification error (an A1 violation).
    pub fn string_stats(&self, x: usize, color: usize) -> Result<StringStats> {
        let n = self.vertices.len();
        let mut delta = 0usize;
        let mut cur = x;
        while let Some(p) = self.pred(cur, color) {
            delta += 1;
            if delta > n {
                return Err(Error::Verification(format!(
                    "monochromatic cycle of color {color} through {}",
                    self.vertices[x].id
                )));
            }
            cur = p;
        }
        let mut epsilon = 0usize;
        cur = x;
        while let Some(s) = self.succ(cur, color) {
            epsilon += 1;
            if epsilon > n {
                return Err(Error::Verification(format!(
                    "monochromatic cycle of color {color} through {}",
                    self.vertices[x].id
                )));
            }
            cur = s;
        }
        Ok(StringStats { delta, epsilon })
    }

    /// The induced subgraph on a vertex subset (indices refer to `self`).
    pub fn induced(&self, verts: &[usize]) -> ColoredDigraph {
        let keep: HashMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let vertices: Vec<Vertex> = verts.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges: Vec<(usize, usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(f, t, c)| Some((*keep.get(&f)?, *keep.get(&t)?, c)))
            .collect();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.id.clone(), k))
            .collect();
        ColoredDigraph {
            degree: self.degree,
            queer: edges.iter().any(|&(_, _, c)| c == 0),
            vertices,
            edges,
            index,
        }
    }

    /// The subgraph keeping only edges with colors in `colors`.
    pub fn color_restricted(&self, colors: &[usize]) -> ColoredDigraph {
        let edges: Vec<(usize, usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(_, _, c)| colors.contains(&c))
            .copied()
            .collect();
        ColoredDigraph {
            degree: self.degree,
            queer: colors.contains(&0) && self.queer,
            vertices: self.vertices.clone(),
            edges,
            index: self.index.clone(),
        }
    }
}

/// Materializes the crystal on a seed set of Young tableaux: an edge
/// `x -> f_i(x)` for each color `1 <= i < n`. Errors if an operator output
/// escapes the seed set.
pub fn build_crystal_young(seed: &[YoungTableau], n: usize) -> Result<ColoredDigraph> {
    let vertices: Vec<Vertex> = seed
        .iter()
        .map(|t| {
            Ok(Vertex {
                id: t.id(),
                tableau: Some(Tableau::Young(t.clone())),
                weight: Some(weight_young(t, n)?),
            })
        })
        .collect::<Result<_>>()?;
    let index: HashMap<String, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.id.clone(), k))
        .collect();
    let mut edges = Vec::new();
    for (k, t) in seed.iter().enumerate() {
        for i in 1..n {
            if let Some(ft) = f_young(t, i) {
                let to = *index
                    .get(&ft.id())
                    .ok_or_else(|| Error::ClosureViolation(ft.id()))?;
                edges.push((k, to, i));
            }
        }
    }
    Ok(ColoredDigraph {
        degree: n,
        queer: false,
        vertices,
        edges,
        index,
    })
}

/// Materializes the shifted crystal, with the queer 0-edges when asked.
pub fn build_crystal_shifted(
    seed: &[ShiftedTableau],
    n: usize,
    queer: bool,
) -> Result<ColoredDigraph> {
    let vertices: Vec<Vertex> = seed
        .iter()
        .map(|t| {
            Ok(Vertex {
                id: t.id(),
                tableau: Some(Tableau::Shifted(t.clone())),
                weight: Some(weight_shifted(t, n)?),
            })
        })
        .collect::<Result<_>>()?;
    let index: HashMap<String, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.id.clone(), k))
        .collect();
    let mut edges = Vec::new();
    for (k, t) in seed.iter().enumerate() {
        if queer {
            if let Some(ft) = f_queer(t) {
                let to = *index
                    .get(&ft.id())
                    .ok_or_else(|| Error::ClosureViolation(ft.id()))?;
                edges.push((k, to, 0));
            }
        }
        for i in 1..n {
            if let Some(ft) = f_shifted(t, i) {
                let to = *index
                    .get(&ft.id())
                    .ok_or_else(|| Error::ClosureViolation(ft.id()))?;
                edges.push((k, to, i));
            }
        }
    }
    Ok(ColoredDigraph {
        degree: n,
        queer,
        vertices,
        edges,
        index,
    })
}

/// The crystal on all of SSYT_n(lambda).
pub fn young_crystal(shape: &Partition, n: usize) -> Result<ColoredDigraph> {
    build_crystal_young(&enumerate_ssyt(shape, n), n)
}

/// The (queer) crystal on all of SSHT_n(gamma).
pub fn shifted_crystal(shape: &StrictPartition, n: usize, queer: bool) -> Result<ColoredDigraph> {
    build_crystal_shifted(&enumerate_ssht(shape, n), n, queer)
}

/// Color-deterministic isomorphism test for unique-source components: BFS
/// from source to source, requiring the induced vertex bijection to
/// preserve every colored edge in both directions.
pub fn is_isomorphic(a: &ColoredDigraph, b: &ColoredDigraph) -> Result<bool> {
    let all_colors_a = a.colors();
    let all_colors_b = b.colors();
    let sa = a.sources(&all_colors_a);
    let sb = b.sources(&all_colors_b);
    if sa.len() != 1 || sb.len() != 1 {
        return Err(Error::NotComparable(format!(
            "unique sources required, found {} and {}",
            sa.len(),
            sb.len()
        )));
    }
    for g in [a, b] {
        for v in 0..g.vertex_count() {
            for &c in &g.colors() {
                if g.out_neighbors(v, c).len() > 1 || g.in_neighbors(v, c).len() > 1 {
                    return Err(Error::NotComparable(
                        "per-color determinism required".into(),
                    ));
                }
            }
        }
    }
    if a.vertex_count() != b.vertex_count() || a.degree != b.degree || a.queer != b.queer {
        return Ok(false);
    }
    let colors = all_colors_a;
    let mut map: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    map.insert(sa[0], sb[0]);
    queue.push_back((sa[0], sb[0]));
    while let Some((x, y)) = queue.pop_front() {
        for &c in &colors {
            let fx = a.succ(x, c);
            let fy = b.succ(y, c);
            match (fx, fy) {
                (None, None) => {}
                (Some(nx), Some(ny)) => match map.get(&nx) {
                    Some(&mapped) => {
                        if mapped != ny {
                            return Ok(false);
                        }
                    }
                    None => {
                        map.insert(nx, ny);
                        queue.push_back((nx, ny));
                    }
                },
                _ => return Ok(false),
            }
        }
    }
    if map.len() != a.vertex_count() {
        return Ok(false);
    }
    // edge preservation both ways (in-degree <= 1 makes out-edges exhaustive)
    let mut ea: Vec<(usize, usize, usize)> = a
        .edges
        .iter()
        .map(|&(f, t, c)| (map[&f], map[&t], c))
        .collect();
    let mut eb = b.edges.clone();
    ea.sort_unstable();
    eb.sort_unstable();
    Ok(ea == eb)
}

// ---------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tableau: Option<serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: String,
    to: String,
    color: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    degree: usize,
    queer: bool,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

pub fn graph_to_json(g: &ColoredDigraph) -> serde_json::Value {
    let doc = GraphJson {
        degree: g.degree,
        queer: g.queer,
        vertices: g
            .vertices
            .iter()
            .map(|v| VertexJson {
                id: v.id.clone(),
                weight: v.weight.as_ref().map(|w| w.0.clone()),
                tableau: v.tableau.as_ref().map(|t| match t {
                    Tableau::Young(y) => crate::tableaux::young_to_json(y),
                    Tableau::Shifted(s) => crate::tableaux::shifted_to_json(s),
                }),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|&(f, t, c)| EdgeJson {
                from: g.vertices[f].id.clone(),
                to: g.vertices[t].id.clone(),
                color: c,
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("graph serialization cannot fail")
}

pub fn graph_from_json(value: &serde_json::Value) -> Result<ColoredDigraph> {
    let doc: GraphJson = serde_json::from_value(value.clone())?;
    let vertices = doc
        .vertices
        .into_iter()
        .map(|v| {
            let tableau = v
                .tableau
                .as_ref()
                .map(crate::tableaux::tableau_from_json)
                .transpose()?;
            Ok(Vertex {
                id: v.id,
                tableau,
                weight: v.weight.map(Weight),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let edges: Vec<(String, String, usize)> = doc
        .edges
        .into_iter()
        .map(|e| (e.from, e.to, e.color))
        .collect();
    ColoredDigraph::new(doc.degree, doc.queer, vertices, &edges)
}

/// Deterministic DOT export. Edge color 1 is drawn red, 2 blue, 0 green;
/// other colors are black.
pub fn graph_to_dot(g: &ColoredDigraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, v) in g.vertices.iter().enumerate() {
        let label = match &v.tableau {
            Some(t) => t.render().trim_end().replace('\n', "\\n"),
            None => v.id.clone(),
        };
        out.push_str(&format!("  v{k} [label=\"{label}\"];\n"));
    }
    for &(f, t, c) in &g.edges {
        let color = match c {
            0 => "green",
            1 => "red",
            2 => "blue",
            _ => "black",
        };
        out.push_str(&format!(
            "  v{f} -> v{t} [label=\"{c}\", color=\"{color}\"];\n"
        ));
    }
    out.push_str("}\n");
    out
}
