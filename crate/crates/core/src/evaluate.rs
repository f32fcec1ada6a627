//! Exact evaluation of a colouring: union-graph components, touched
//! vertices, k-connectivity checks, and the scores `val_f`, `val_g`,
//! `val_f_k` (max over all colour subsets of the given size).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::colouring::{ColourSet, EdgeColouring};
use crate::graph::{DisjointSet, Graph};

/// Refuse to enumerate more colour subsets than this without an override.
pub const SUBSET_GUARD: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    SOutOfRange { s: u32, r: u32 },
    KOutOfRange { k: u32 },
    SubsetBudget { subsets: u128 },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::SOutOfRange { s, r } => write!(f, "s={s} outside 1..={r}"),
            EvalError::KOutOfRange { k } => write!(f, "k={k} outside supported range"),
            EvalError::SubsetBudget { subsets } => {
                write!(f, "{subsets} colour subsets exceed the enumeration guard of {SUBSET_GUARD}")
            }
        }
    }
}

/// Partition of the vertices of `K_n` into connected components of the
/// union graph of a colour set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Component id per vertex; ids are assigned by smallest member vertex.
    pub labels: Vec<u32>,
    /// Size of each component, indexed by component id.
    pub sizes: Vec<u32>,
}

impl ComponentDecomposition {
    pub fn largest_size(&self) -> u32 {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of the largest component; ties by smallest component id,
    /// which is the component containing the smallest vertex.
    pub fn largest_component(&self) -> Vec<u32> {
        let best = self.largest_size();
        let id = self.sizes.iter().position(|&s| s == best).unwrap_or(0) as u32;
        (0..self.labels.len() as u32).filter(|&v| self.labels[v as usize] == id).collect()
    }
}

/// The graph on `0..n` whose edges are the pairs coloured inside `S`.
pub fn union_graph(c: &EdgeColouring, s: ColourSet) -> Graph {
    let mut g = Graph::new(c.n() as usize);
    for (u, v, col) in c.edges() {
        if s.contains(col as u32) {
            g.add_edge(u as usize, v as usize);
        }
    }
    g
}

/// Components of the union graph, computed by disjoint-set union over all
/// pairs.
pub fn union_graph_components(c: &EdgeColouring, s: ColourSet) -> ComponentDecomposition {
    let n = c.n() as usize;
    let mut dsu = DisjointSet::new(n);
    for (u, v, col) in c.edges() {
        if s.contains(col as u32) {
            dsu.union(u, v);
        }
    }
    let mut labels = vec![u32::MAX; n];
    let mut sizes: Vec<u32> = Vec::new();
    let mut root_label = vec![u32::MAX; n];
    for v in 0..n {
        let root = dsu.find(v as u32) as usize;
        if root_label[root] == u32::MAX {
            root_label[root] = sizes.len() as u32;
            sizes.push(0);
        }
        labels[v] = root_label[root];
        sizes[root_label[root] as usize] += 1;
    }
    ComponentDecomposition { labels, sizes }
}

/// Vertices incident to at least one edge coloured inside `S`, ascending.
pub fn touched_vertices(c: &EdgeColouring, s: ColourSet) -> Vec<u32> {
    let n = c.n() as usize;
    let mut touched = vec![false; n];
    for (u, v, col) in c.edges() {
        if s.contains(col as u32) {
            touched[u as usize] = true;
            touched[v as usize] = true;
        }
    }
    (0..n as u32).filter(|&v| touched[v as usize]).collect()
}

/// Is the union graph of `S` induced on `w` k-connected?
///
/// k=0 means `w` nonempty with no isolated vertex; k=1 means connected
/// (with `K_1` counting as connected); k>=2 is standard vertex
/// connectivity, decided by max-flow minimum vertex cuts.
pub fn is_k_connected(c: &EdgeColouring, s: ColourSet, w: &[u32], k: u32) -> bool {
    let g = union_graph(c, s);
    let verts: Vec<usize> = w.iter().map(|&v| v as usize).collect();
    g.induced(&verts).is_k_connected(k)
}

/// Score of one colour subset together with the attaining subset and a
/// witness vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: u32,
    pub colours: ColourSet,
    pub witness: Vec<u32>,
}

fn check_s(c: &EdgeColouring, s: u32) -> Result<(), EvalError> {
    if s < 1 || s > c.r() {
        return Err(EvalError::SOutOfRange { s, r: c.r() });
    }
    Ok(())
}

fn check_budget(c: &EdgeColouring, s: u32) -> Result<(), EvalError> {
    let subsets = bits::binom(c.r() as u64, s as u64);
    if subsets > SUBSET_GUARD {
        return Err(EvalError::SubsetBudget { subsets });
    }
    Ok(())
}

fn better(value: u32, set: ColourSet, best: &Option<Evaluation>) -> bool {
    match best {
        None => true,
        Some(b) => {
            value > b.value
                || (value == b.value
                    && bits::lex_cmp(set.bits(), b.colours.bits()) == core::cmp::Ordering::Less)
        }
    }
}

fn max_over_subsets(
    c: &EdgeColouring,
    s: u32,
    mut score: impl FnMut(ColourSet) -> (u32, Vec<u32>),
) -> Evaluation {
    let mut best: Option<Evaluation> = None;
    for mask in bits::subsets_of_size(c.r(), s) {
        let set = ColourSet::from_bits(mask);
        let (value, witness) = score(set);
        if better(value, set, &best) {
            best = Some(Evaluation { value, colours: set, witness });
        }
    }
    best.expect("at least one colour subset")
}

/// `val_f`: max over colour sets of size `s` of the largest union-graph
/// component, with the attaining set (lexicographically smallest on ties)
/// and its component as witness.
pub fn val_f_detailed(c: &EdgeColouring, s: u32) -> Result<Evaluation, EvalError> {
    check_s(c, s)?;
    check_budget(c, s)?;
    Ok(val_f_detailed_unguarded(c, s))
}

pub fn val_f_detailed_unguarded(c: &EdgeColouring, s: u32) -> Evaluation {
    max_over_subsets(c, s, |set| {
        let comps = union_graph_components(c, set);
        (comps.largest_size(), comps.largest_component())
    })
}

pub fn val_f(c: &EdgeColouring, s: u32) -> Result<u32, EvalError> {
    val_f_detailed(c, s).map(|e| e.value)
}

/// `val_g`: max over colour sets of size `s` of the number of touched
/// vertices.
pub fn val_g_detailed(c: &EdgeColouring, s: u32) -> Result<Evaluation, EvalError> {
    check_s(c, s)?;
    check_budget(c, s)?;
    Ok(val_g_detailed_unguarded(c, s))
}

pub fn val_g_detailed_unguarded(c: &EdgeColouring, s: u32) -> Evaluation {
    max_over_subsets(c, s, |set| {
        let touched = touched_vertices(c, set);
        (touched.len() as u32, touched)
    })
}

pub fn val_g(c: &EdgeColouring, s: u32) -> Result<u32, EvalError> {
    val_g_detailed(c, s).map(|e| e.value)
}

/// Result of the k-connected variant; `exact` is false when only the
/// heuristic lower-bound path was available (k >= 3 on more than 16
/// vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KEvaluation {
    pub value: u32,
    pub colours: ColourSet,
    pub witness: Vec<u32>,
    pub exact: bool,
}

/// Largest k-connected witness over all colour sets of size `s`.
///
/// Exact for k <= 2 (components, biconnected blocks) and for k >= 3 when
/// n <= 16 (exhaustive subset search); otherwise a flagged lower bound
/// from k-core peeling.
pub fn val_f_k(c: &EdgeColouring, s: u32, k: u32) -> Result<KEvaluation, EvalError> {
    check_s(c, s)?;
    check_budget(c, s)?;
    if k < 1 {
        return Err(EvalError::KOutOfRange { k });
    }
    let n = c.n() as usize;
    let exact = k <= 2 || n <= 16;
    let eval = max_over_subsets(c, s, |set| {
        let g = union_graph(c, set);
        let best = largest_k_connected_in(&g, k);
        match best {
            Some(w) => (w.len() as u32, w.into_iter().map(|v| v as u32).collect()),
            None => (0, Vec::new()),
        }
    });
    Ok(KEvaluation { value: eval.value, colours: eval.colours, witness: eval.witness, exact })
}

/// Largest vertex set inducing a k-connected subgraph of `g`, exact for
/// k <= 2 and for n <= 16; heuristic (k-core peeling) beyond that.
pub fn largest_k_connected_in(g: &Graph, k: u32) -> Option<Vec<usize>> {
    match k {
        0 => unreachable!("k >= 1 required"),
        1 => {
            let comps = g.components();
            comps.into_iter().max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)))
        }
        2 => g.largest_block().filter(|b| b.len() >= 3),
        _ => {
            if g.n() <= 16 {
                g.largest_k_connected_subset(k)
            } else {
                k_core_heuristic(g, k)
            }
        }
    }
}

/// Peel below-k-degree vertices, then scan components of the remainder for
/// a k-connected one. Lower bound only.
fn k_core_heuristic(g: &Graph, k: u32) -> Option<Vec<usize>> {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    loop {
        let sub = g.induced(&alive);
        let mut best: Option<Vec<usize>> = None;
        for comp in sub.components() {
            if comp.len() <= k as usize {
                continue;
            }
            if sub.induced(&comp).is_k_connected(k) {
                let orig: Vec<usize> = comp.iter().map(|&i| alive[i]).collect();
                if best.as_ref().map_or(true, |b| orig.len() > b.len()) {
                    best = Some(orig);
                }
            }
        }
        if best.is_some() {
            return best;
        }
        let next: Vec<usize> = (0..alive.len())
            .filter(|&i| sub.degree(i) >= k as usize)
            .map(|i| alive[i])
            .collect();
        if next.len() == alive.len() || next.is_empty() {
            return None;
        }
        alive = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn complete_graph_single_component() {
        // 2-coloured K_3, both colours -> one component of size 3
        let c = EdgeColouring::new(3, 2, vec![0, 1, 0]).unwrap();
        let comps = union_graph_components(&c, ColourSet::full(2));
        assert_eq!(comps.largest_size(), 3);
        assert_eq!(comps.sizes, vec![3]);
    }

    #[test]
    fn empty_set_gives_singletons() {
        let c = EdgeColouring::new(4, 2, vec![0, 1, 0, 1, 1, 0]).unwrap();
        let comps = union_graph_components(&c, ColourSet::EMPTY);
        assert_eq!(comps.sizes, vec![1, 1, 1, 1]);
        assert!(touched_vertices(&c, ColourSet::EMPTY).is_empty());
    }

    #[test]
    fn all_colours_touch_everything() {
        let c = EdgeColouring::monochromatic(5, 3, 1).unwrap();
        let touched = touched_vertices(&c, ColourSet::full(3));
        assert_eq!(touched.len(), 5);
    }

    #[test]
    fn single_vertex_is_connected() {
        let c = EdgeColouring::new(3, 2, vec![0, 1, 0]).unwrap();
        assert!(is_k_connected(&c, ColourSet::singleton(0), &[1], 1));
        assert!(!is_k_connected(&c, ColourSet::singleton(0), &[1], 0));
    }

    #[test]
    fn complete_k4_is_3_connected() {
        let c = EdgeColouring::monochromatic(4, 1, 0).unwrap();
        let w = [0, 1, 2, 3];
        assert!(is_k_connected(&c, ColourSet::singleton(0), &w, 3));
        assert!(!is_k_connected(&c, ColourSet::singleton(0), &w, 4));
    }

    #[test]
    fn val_at_full_palette_is_n() {
        let c = EdgeColouring::new(4, 3, vec![0, 1, 2, 2, 1, 0]).unwrap();
        assert_eq!(val_f(&c, 3).unwrap(), 4);
        assert_eq!(val_g(&c, 3).unwrap(), 4);
    }

    #[test]
    fn rejects_bad_s() {
        let c = EdgeColouring::monochromatic(4, 2, 0).unwrap();
        assert!(matches!(val_f(&c, 0), Err(EvalError::SOutOfRange { .. })));
        assert!(matches!(val_g(&c, 3), Err(EvalError::SOutOfRange { .. })));
    }

    #[test]
    fn val_f_s1_matches_direct_recount() {
        // deterministic pseudo-random colouring n=6, r=3; compare against an
        // independent per-colour component count
        let mut state = 12345u64;
        let c = EdgeColouring::from_fn(6, 3, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % 3) as u16
        })
        .unwrap();
        let mut expect = 0u32;
        for col in 0..3u32 {
            let comps = union_graph_components(&c, ColourSet::singleton(col));
            expect = expect.max(comps.largest_size());
        }
        assert_eq!(val_f(&c, 1).unwrap(), expect);
    }
}
