//! Pairing process and crystal chute moves on reduced pipe dreams, plus the
//! crystal graph on `RP(w)` and its connected components.

use std::collections::HashMap;
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::{enumerate_rp, Cell, PipeDream};

/// Outcome of the pairing process between rows `row` and `row + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RowPairing {
    pub row: usize,
    /// `(upper cross, lower cross)` in the order the upper crosses were scanned.
    pub pairs: Vec<(Cell, Cell)>,
    /// Unpaired crosses of row `row`, right to left.
    pub unpaired_upper: Vec<Cell>,
    /// Unpaired crosses of row `row + 1`, left to right.
    pub unpaired_lower: Vec<Cell>,
}

/// Scans row `i` right to left; each cross pairs with the leftmost unpaired
/// cross of row `i + 1` weakly to its right.
pub fn pair_row(d: &PipeDream, i: usize) -> RowPairing {
    let upper = d.row(i);
    let lower = d.row(i + 1);
    let mut taken = vec![false; lower.len()];
    let mut pairs = Vec::new();
    let mut unpaired_upper = Vec::new();
    for &c in upper.iter().rev() {
        match (0..lower.len()).find(|&k| !taken[k] && lower[k] >= c) {
            Some(k) => {
                taken[k] = true;
                pairs.push(((i, c), (i + 1, lower[k])));
            }
            None => unpaired_upper.push((i, c)),
        }
    }
    let unpaired_lower = lower
        .iter()
        .zip(&taken)
        .filter(|(_, &t)| !t)
        .map(|(&c, _)| (i + 1, c))
        .collect();
    RowPairing {
        row: i,
        pairs,
        unpaired_upper,
        unpaired_lower,
    }
}

/// `f_i`: the leftmost unpaired cross `(i, j)` of row `i` chutes down to
/// `(i+1, j-m)`, where `j-m` is the first column to the left holding elbows
/// in both rows. `None` when row `i` is fully paired or `(i, 1..=j)` are all
/// crosses.
pub fn lower(d: &PipeDream, i: usize) -> Option<PipeDream> {
    if i == 0 || i >= d.n() {
        return None;
    }
    let pairing = pair_row(d, i);
    let &(_, j) = pairing.unpaired_upper.last()?;
    for k in 1..j {
        match (d.contains(i, j - k), d.contains(i + 1, j - k)) {
            (true, true) => continue,
            (false, false) => return Some(d.moved((i, j), (i + 1, j - k))),
            _ => {
                debug_assert!(
                    false,
                    "mixed column left of an unpaired cross in a reduced pipe dream"
                );
                return None;
            }
        }
    }
    None
}

/// `e_i`: the rightmost unpaired cross `(i+1, l)` of row `i + 1` moves up to
/// `(i, m)` with `m > l` minimal such that `(i+1, m)` is an elbow.
pub fn raise(d: &PipeDream, i: usize) -> Option<PipeDream> {
    if i == 0 || i >= d.n() {
        return None;
    }
    let pairing = pair_row(d, i);
    let &(_, l) = pairing.unpaired_lower.last()?;
    let m = (l + 1..).find(|&c| !d.contains(i + 1, c))?;
    if i + m > d.n() || d.contains(i, m) {
        debug_assert!(false, "raising target ({i},{m}) unavailable");
        return None;
    }
    Some(d.moved((i + 1, l), (i, m)))
}

pub fn is_highest_weight(d: &PipeDream) -> bool {
    (1..d.n()).all(|i| raise(d, i).is_none())
}

pub fn is_lowest_weight(d: &PipeDream) -> bool {
    (1..d.n()).all(|i| lower(d, i).is_none())
}

/// A labeled edge `source --i--> target` with `target = f_i(source)`,
/// stored as vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

/// The crystal on `RP(w)`: vertices in canonical order, edges sorted by
/// source then label.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub w: Permutation,
    pub vertices: Vec<PipeDream>,
    pub edges: Vec<Edge>,
}

/// A connected component of a crystal graph, by vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphComponent {
    pub highest: usize,
    pub members: Vec<usize>,
}

pub fn crystal_graph(w: &Permutation) -> CrystalGraph {
    let vertices = enumerate_rp(w);
    let index: HashMap<&PipeDream, usize> =
        vertices.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let edges = vertices
        .par_iter()
        .enumerate()
        .map(|(source, d)| {
            (1..w.n())
                .filter_map(|i| {
                    lower(d, i).map(|t| Edge {
                        source,
                        label: i,
                        target: *index.get(&t).expect("lowering stays inside RP(w)"),
                    })
                })
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    CrystalGraph {
        w: w.clone(),
        vertices,
        edges,
    }
}

impl CrystalGraph {
    /// Union-find components, each with its unique highest weight vertex,
    /// ordered by that vertex. Errors if a component has zero or several
    /// highest weight vertices.
    pub fn components(&self) -> Result<Vec<GraphComponent>> {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.source, e.target);
        }
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.vertices.len() {
            by_root.entry(uf.find(v)).or_default().push(v);
        }
        let mut out = Vec::with_capacity(by_root.len());
        for members in by_root.into_values() {
            let tops: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&v| is_highest_weight(&self.vertices[v]))
                .collect();
            match tops.as_slice() {
                [top] => out.push(GraphComponent {
                    highest: *top,
                    members,
                }),
                _ => {
                    return Err(Error::Verification(format!(
                        "component of {} for w = {} has {} highest weight vertices",
                        members.len(),
                        self.w,
                        tops.len()
                    )))
                }
            }
        }
        out.sort_by_key(|c| c.highest);
        Ok(out)
    }

    /// Graphviz source: node ids are canonical cross lists, node labels the
    /// ASCII picture and weight, edge labels the operator index.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph crystal {{");
        let _ = writeln!(s, "  label=\"RP({})\";", self.w.one_line());
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for d in &self.vertices {
            let picture = d.to_ascii().replace('\n', "\\n");
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\\nwt {}\"];",
                d.cross_list_string(),
                picture,
                d.weight()
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source].cross_list_string(),
                self.vertices[e.target].cross_list_string(),
                e.label
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.window(),
            "vertices": self.vertices.iter().map(|d| json!({
                "n": d.n(),
                "crosses": d.canonical_crosses().iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>(),
                "weight": d.weight().parts(),
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "source": e.source,
                "i": e.label,
                "target": e.target,
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(n: usize, cells: &[Cell]) -> PipeDream {
        PipeDream::new(n, cells.iter().copied()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        let p = pair_row(&pd(5, &[(1, 1), (1, 3), (1, 4), (2, 3)]), 1);
        assert_eq!(p.pairs, vec![((1, 3), (2, 3))]);
        assert_eq!(p.unpaired_upper, vec![(1, 4), (1, 1)]);
        assert!(p.unpaired_lower.is_empty());

        let p = pair_row(&pd(5, &[(1, 1), (1, 4), (2, 2), (3, 2)]), 1);
        assert_eq!(p.pairs, vec![((1, 1), (2, 2))]);
        assert_eq!(p.unpaired_upper, vec![(1, 4)]);

        let p = pair_row(&pd(5, &[(2, 2)]), 1);
        assert!(p.pairs.is_empty() && p.unpaired_upper.is_empty());
        assert_eq!(p.unpaired_lower, vec![(2, 2)]);
    }

    #[test]
    fn lowering_examples() {
        let d = pd(5, &[(1, 1), (1, 4), (2, 2), (3, 2)]);
        let d1 = lower(&d, 1).unwrap();
        assert_eq!(d1, pd(5, &[(1, 1), (2, 2), (2, 3), (3, 2)]));
        let d2 = lower(&d1, 2).unwrap();
        assert_eq!(d2, pd(5, &[(1, 1), (2, 2), (3, 1), (3, 2)]));
        assert_eq!(lower(&pd(5, &[(1, 1), (1, 3), (1, 4), (2, 3)]), 1), None);
    }

    #[test]
    fn raising_examples() {
        let d = pd(5, &[(1, 1), (2, 2), (3, 1), (3, 2)]);
        assert_eq!(raise(&d, 2), Some(pd(5, &[(1, 1), (2, 2), (2, 3), (3, 2)])));
        assert_eq!(raise(&pd(5, &[(1, 1), (1, 4), (2, 2), (3, 2)]), 1), None);
        assert!((1..4).all(|i| raise(&PipeDream::empty(4), i).is_none()));
    }

    #[test]
    fn highest_and_lowest() {
        assert!(is_highest_weight(&pd(5, &[(1, 1), (1, 4), (2, 2), (3, 2)])));
        assert!(is_highest_weight(&pd(5, &[(1, 1), (1, 3), (1, 4), (2, 3)])));
        assert!(is_highest_weight(&PipeDream::empty(3)));
        assert!(is_lowest_weight(&PipeDream::empty(3)));
    }

    #[test]
    fn graph_of_21543() {
        let g = crystal_graph(&perm("21543"));
        assert_eq!(g.vertices.len(), 14);
        let comps = g.components().unwrap();
        assert_eq!(comps.len(), 3);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 8]);
        assert_eq!(g.edges.len(), 12);
    }

    #[test]
    fn small_graphs() {
        let g = crystal_graph(&Permutation::identity(3));
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
        assert_eq!(g.components().unwrap().len(), 1);
        let g = crystal_graph(&perm("132"));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 1);
    }

    #[test]
    fn dot_is_deterministic() {
        let a = crystal_graph(&perm("21543")).to_dot();
        let b = crystal_graph(&perm("21543")).to_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches(" -> ").count(), 12);
        assert!(a.contains(
            "\"[[1,4],[1,1],[2,2],[3,2]]\" -> \"[[1,1],[2,3],[2,2],[3,2]]\" [label=\"1\"]"
        ));
    }
}
