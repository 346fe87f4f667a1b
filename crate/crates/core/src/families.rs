//! Constructors for the named graph families.
//!
//! Vertex numbering is fixed per family so that solver witnesses are
//! reproducible:
//!
//! | family | numbering |
//! |---|---|
//! | `path(n)` | `0 - 1 - ... - n-1` |
//! | `cycle(n)` | path plus the edge `n-1 - 0` |
//! | `star(n)` | centre `0`, leaves `1..n` |
//! | `complete_multipartite(sizes)` | parts occupy consecutive ranges in the given order |
//! | `wheel(r)` | hub `0`, rim `1..=r` in cyclic order (order `r + 1`) |
//! | `rose(p, q)` | centre `0`; petal `i` is `0 - a_i .. b_i - 0` on the next `q - 1` vertices |
//! | `clique_chain(p)` | clique `i` is `4i..4i+4`, its designated vertex is `4i` |
//! | `example1_graph(n)` | path `a,b,c,d = 0,1,2,3`; `H` is `4..n` |
//! | `theorem3_graph(n, l)` | centre `w_0 = 0`; petal `i` (1-based) is `v_i = 2i-1`, `u_i = 2i`; path vertices `w_j = 2p + j` |

use std::fmt;

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    check_order(n)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    check_order(n)?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,n-1}`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("star needs n >= 2, got {n}")));
    }
    check_order(n)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    complete_multipartite(&[s, t])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid("every part must be non-empty"));
    }
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Graph::from_edges(n, edges)
}

/// Hub joined to every vertex of a rim cycle `C_r`; the order is `r + 1`.
pub fn wheel(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(invalid(format!("wheel rim needs r >= 3, got {r}")));
    }
    check_order(r + 1)?;
    let rim = (0..r).map(|i| (1 + i, 1 + (i + 1) % r));
    let spokes = (1..=r).map(|v| (0, v));
    Graph::from_edges(r + 1, rim.chain(spokes))
}

/// `p` cycles of length `q` sharing only the centre vertex `0`.
pub fn rose(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 3 {
        return Err(invalid(format!("rose needs p >= 1 and q >= 3, got ({p}, {q})")));
    }
    let n = 1 + p * (q - 1);
    check_order(n)?;
    let mut edges = Vec::with_capacity(p * q);
    for petal in 0..p {
        let first = 1 + petal * (q - 1);
        let last = first + q - 2;
        edges.push((0, first));
        edges.extend((first..last).map(|v| (v, v + 1)));
        edges.push((last, 0));
    }
    Graph::from_edges(n, edges)
}

/// `p` disjoint copies of `K_4` with a complete graph on one designated
/// vertex (`4i`) per copy.
pub fn clique_chain(p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(invalid("clique chain needs at least one clique"));
    }
    let n = 4 * p;
    check_order(n)?;
    let mut edges = Vec::new();
    for c in 0..p {
        let base = 4 * c;
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((base + u, base + v));
            }
        }
        for d in c + 1..p {
            edges.push((base, 4 * d));
        }
    }
    Graph::from_edges(n, edges)
}

/// Path `a b c d` plus a graph `H` on `n - 4` further vertices, with `a` and
/// `d` joined to every vertex of `H`. `h_edges` index `H` locally from 0.
pub fn example1_graph_with(n: usize, h_edges: &[(usize, usize)]) -> Result<Graph> {
    if n < 5 {
        return Err(invalid(format!("example graph needs n >= 5, got {n}")));
    }
    check_order(n)?;
    let h = n - 4;
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    for x in 4..n {
        edges.push((0, x));
        edges.push((3, x));
    }
    for &(u, v) in h_edges {
        if u >= h || v >= h {
            return Err(invalid(format!("H edge ({u}, {v}) out of range for |H| = {h}")));
        }
        edges.push((4 + u, 4 + v));
    }
    Graph::from_edges(n, edges)
}

/// [`example1_graph_with`] with an edgeless `H`.
pub fn example1_graph(n: usize) -> Result<Graph> {
    example1_graph_with(n, &[])
}

/// Shape of the rose-plus-path construction for given `(n, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem3Shape {
    /// Number of triangular petals.
    pub petals: usize,
    /// Order of the attached path, centre included.
    pub path_order: usize,
}

impl Theorem3Shape {
    /// Branches on the parity of `n - l`: odd gives `R_{(n-l-1)/2,3} + P_{l+1}`,
    /// even gives `R_{(n-l)/2,3} + P_l`.
    pub fn new(n: usize, l: usize) -> Result<Theorem3Shape> {
        if l < 2 || l + 3 > n {
            return Err(invalid(format!("construction needs 2 <= l <= n - 3, got n = {n}, l = {l}")));
        }
        check_order(n)?;
        Ok(if (n - l) % 2 == 1 {
            Theorem3Shape { petals: (n - l - 1) / 2, path_order: l + 1 }
        } else {
            Theorem3Shape { petals: (n - l) / 2, path_order: l }
        })
    }

    pub fn order(&self) -> usize {
        2 * self.petals + self.path_order
    }

    /// Vertex `w_j` of the path, `w_0` being the centre.
    pub fn path_vertex(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            2 * self.petals + j
        }
    }
}

/// Rose of triangles with a pendant path glued at the centre.
pub fn theorem3_graph(n: usize, l: usize) -> Result<Graph> {
    let shape = Theorem3Shape::new(n, l)?;
    let mut edges = Vec::new();
    for i in 1..=shape.petals {
        let (v, u) = (2 * i - 1, 2 * i);
        edges.extend([(0, v), (v, u), (u, 0)]);
    }
    for j in 1..shape.path_order {
        edges.push((shape.path_vertex(j - 1), shape.path_vertex(j)));
    }
    Graph::from_edges(shape.order(), edges)
}

/// The explicit `l`-coloring for [`theorem3_graph`]: `w_i` gets color `i`
/// for `i < l`, petal vertices get color 1, and the last path vertex `w_l`
/// (present only when `n - l` is odd) gets color 1.
pub fn theorem3_coloring(n: usize, l: usize) -> Result<VertexColoring> {
    let shape = Theorem3Shape::new(n, l)?;
    let mut colors = vec![1u8; shape.order()];
    for i in 0..l.min(shape.path_order) {
        colors[shape.path_vertex(i)] = i as u8;
    }
    VertexColoring::new(colors, l)
}

/// A parsed family name with parameters, e.g. `rose:2,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Wheel(usize),
    Rose(usize, usize),
    CliqueChain(usize),
    Example1(usize),
    Theorem3(usize, usize),
}

impl Family {
    /// Parses `NAME[:p1,p2,...]`. Names accept `-` or `_` as separators.
    pub fn parse(spec: &str) -> Result<Family> {
        let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
        let name = name.trim().to_ascii_lowercase().replace('-', "_");
        let params: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| invalid(format!("unparsable parameter {p:?} in {spec:?}"))))
                .collect::<Result<_>>()?
        };
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {want} parameter(s), got {}", params.len())))
            }
        };
        Ok(match name.as_str() {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" | "bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "complete_multipartite" | "multipartite" => {
                if params.is_empty() {
                    return Err(invalid("complete_multipartite needs part sizes"));
                }
                Family::CompleteMultipartite(params)
            }
            "wheel" => {
                arity(1)?;
                Family::Wheel(params[0])
            }
            "rose" => {
                arity(2)?;
                Family::Rose(params[0], params[1])
            }
            "clique_chain" => {
                arity(1)?;
                Family::CliqueChain(params[0])
            }
            "example1" => {
                arity(1)?;
                Family::Example1(params[0])
            }
            "theorem3" => {
                arity(2)?;
                Family::Theorem3(params[0], params[1])
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Star(n) => star(*n),
            Family::Complete(n) => complete(*n),
            Family::CompleteBipartite(s, t) => complete_bipartite(*s, *t),
            Family::CompleteMultipartite(parts) => complete_multipartite(parts),
            Family::Wheel(r) => wheel(*r),
            Family::Rose(p, q) => rose(*p, *q),
            Family::CliqueChain(p) => clique_chain(*p),
            Family::Example1(n) => example1_graph(*n),
            Family::Theorem3(n, l) => theorem3_graph(*n, *l),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(s, t) => write!(f, "complete_bipartite:{s},{t}"),
            Family::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite:{}", parts.join(","))
            }
            Family::Wheel(r) => write!(f, "wheel:{r}"),
            Family::Rose(p, q) => write!(f, "rose:{p},{q}"),
            Family::CliqueChain(p) => write!(f, "clique_chain:{p}"),
            Family::Example1(n) => write!(f, "example1:{n}"),
            Family::Theorem3(n, l) => write!(f, "theorem3:{n},{l}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut_vertices(g: &Graph) -> usize {
        (0..g.order())
            .filter(|&v| {
                let mut rest = g.vertices();
                rest.remove(v);
                !g.induces_connected(rest)
            })
            .count()
    }

    #[test]
    fn rose_of_two_triangles() {
        let g = rose(2, 3).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn clique_chain_has_one_cut_vertex_per_clique() {
        let g = clique_chain(3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(cut_vertices(&g), 3);
        assert_eq!(g.edge_count(), 3 * 6 + 3);
    }

    #[test]
    fn theorem3_shape_follows_parity_of_n_minus_l() {
        let s = Theorem3Shape::new(9, 2).unwrap();
        assert_eq!(s, Theorem3Shape { petals: 3, path_order: 3 });
        let g = theorem3_graph(9, 2).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.degree(0), 7);
        assert_eq!(theorem3_graph(8, 3).unwrap().edge_count(), 9);
        assert_eq!(theorem3_graph(8, 2).unwrap().edge_count(), 10);
        assert!(theorem3_graph(5, 3).is_err());
        assert!(theorem3_graph(6, 1).is_err());
    }

    #[test]
    fn theorem3_graph_order_is_n() {
        for n in 5..=12 {
            for l in 2..=n - 3 {
                let g = theorem3_graph(n, l).unwrap();
                assert_eq!(g.order(), n, "n = {n}, l = {l}");
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn theorem3_coloring_uses_l_colors() {
        let c = theorem3_coloring(9, 2).unwrap();
        assert_eq!(c.colors(), &[0, 1, 1, 1, 1, 1, 1, 1, 1]);
        let c = theorem3_coloring(10, 3).unwrap();
        assert_eq!(c.palette(), 3);
        assert_eq!(c.colors()[0], 0);
        assert_eq!(c.colors()[7], 1);
        assert_eq!(c.colors()[8], 2);
        assert_eq!(c.colors()[9], 1);
    }

    #[test]
    fn wheel_and_multipartite_shapes() {
        let w = wheel(4).unwrap();
        assert_eq!(w.order(), 5);
        assert_eq!(w.edge_count(), 8);
        assert_eq!(w.min_degree(), 3);
        let k = complete_multipartite(&[1, 2, 3]).unwrap();
        assert_eq!(k.edge_count(), 2 + 3 + 6);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn example1_joins_a_and_d_to_h() {
        let g = example1_graph(6).unwrap();
        assert_eq!(g.edge_count(), 3 + 4);
        assert!(g.is_connected() && g.complement().is_connected());
        let g = example1_graph_with(7, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.has_edge(4, 5) && g.has_edge(5, 6));
        assert!(example1_graph(4).is_err());
    }

    #[test]
    fn family_specs_parse() {
        assert_eq!(Family::parse("rose:2,3").unwrap(), Family::Rose(2, 3));
        assert_eq!(Family::parse("clique-chain:3").unwrap(), Family::CliqueChain(3));
        assert_eq!(
            Family::parse("complete_multipartite:1,2,2").unwrap(),
            Family::CompleteMultipartite(vec![1, 2, 2])
        );
        assert!(Family::parse("rose:2").is_err());
        assert!(Family::parse("hypercube:3").is_err());
        assert!(Family::parse("path:x").is_err());
        for spec in ["path:5", "wheel:4", "theorem3:9,2", "complete_multipartite:1,2"] {
            assert_eq!(Family::parse(spec).unwrap().to_string(), spec);
        }
    }
}
