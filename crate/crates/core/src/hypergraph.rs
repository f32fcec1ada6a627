//! Multi-hypergraphs on a colour-sized vertex set: intersecting checks,
//! exact cover number, subset edge-count minima, the two random samplers
//! and the double-counting edge lower bound.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::colouring::MAX_COLOURS;
use crate::ratio::{binom_rat, Rat};

/// Enumeration guard for subset scans.
pub const SUBSET_SCAN_GUARD: u128 = 100_000_000;
/// Guard for the exclusion sampler's ground-set enumeration.
pub const EXCLUSION_GUARD: u128 = 1_000_000;
/// Cover-number search limits.
pub const COVER_MAX_VERTICES: u32 = 40;
pub const COVER_MAX_EDGES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    EmptyParameters,
    TooManyVertices { r: u32 },
    EmptyEdge { index: usize },
    EdgeOutOfRange { index: usize, r: u32 },
    NoEdges,
    SubsetGuard { subsets: u128 },
    CoverGuard { r: u32, edges: usize },
    MOutOfRange { m: u32, r: u32 },
    UOutOfRange { u: u32, r: u32 },
    /// Exclusion sampler needs `r - x >= x`; `r = 2x` makes the Bernoulli
    /// probability 1 and every candidate excludes every other.
    DegenerateExclusion { r: u32, x: u32 },
    RangeViolation { what: &'static str },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::EmptyParameters => write!(f, "vertex count must be at least 1"),
            HypergraphError::TooManyVertices { r } => {
                write!(f, "r={r} exceeds the supported maximum of {MAX_COLOURS} vertices")
            }
            HypergraphError::EmptyEdge { index } => write!(f, "edge {index} is empty"),
            HypergraphError::EdgeOutOfRange { index, r } => {
                write!(f, "edge {index} uses a vertex outside 0..{r}")
            }
            HypergraphError::NoEdges => write!(f, "hypergraph has no edges"),
            HypergraphError::SubsetGuard { subsets } => {
                write!(f, "{subsets} subsets exceed the enumeration guard")
            }
            HypergraphError::CoverGuard { r, edges } => {
                write!(f, "cover search refused: r={r}, |E|={edges} beyond feasibility guard")
            }
            HypergraphError::MOutOfRange { m, r } => write!(f, "m={m} outside 0..={r}"),
            HypergraphError::UOutOfRange { u, r } => write!(f, "u={u} outside 1..={r}"),
            HypergraphError::DegenerateExclusion { r, x } => {
                write!(f, "r={r}, x={x}: selection probability would be 1 (r = 2x); no edge can survive")
            }
            HypergraphError::RangeViolation { what } => write!(f, "parameter range violation: {what}"),
        }
    }
}

/// Multi-hypergraph on vertex set `{0..r-1}`.
///
/// Duplicate edges are kept as repeated entries and the edge list order is
/// part of the object's identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    r: u32,
    edges: Vec<u128>,
}

impl Hypergraph {
    pub fn new(r: u32, edges: Vec<u128>) -> Result<Self, HypergraphError> {
        if r == 0 {
            return Err(HypergraphError::EmptyParameters);
        }
        if r > MAX_COLOURS {
            return Err(HypergraphError::TooManyVertices { r });
        }
        let universe = if r == 128 { u128::MAX } else { (1u128 << r) - 1 };
        for (index, &e) in edges.iter().enumerate() {
            if e == 0 {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if e & !universe != 0 {
                return Err(HypergraphError::EdgeOutOfRange { index, r });
            }
        }
        Ok(Hypergraph { r, edges })
    }

    /// Builds from explicit vertex lists.
    pub fn from_lists(r: u32, lists: &[&[u32]]) -> Result<Self, HypergraphError> {
        let edges = lists
            .iter()
            .map(|l| l.iter().fold(0u128, |m, &v| m | 1u128 << v))
            .collect();
        Hypergraph::new(r, edges)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edges(&self) -> &[u128] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Each edge as an ascending vertex list, order preserved.
    pub fn edge_lists(&self) -> Vec<Vec<u32>> {
        self.edges.iter().map(|&e| bits::iter_bits(e).collect()).collect()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&e| e >> v & 1 == 1).count()
    }

    /// Every pair of edges (including duplicate copies) shares a vertex.
    /// On failure returns the indices of a disjoint pair.
    pub fn is_intersecting(&self) -> Result<(), (usize, usize)> {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if self.edges[i] & self.edges[j] == 0 {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// Minimum size of a vertex set hitting every edge, by branch and bound
    /// on the uncovered edge with fewest vertices.
    pub fn cover_number(&self) -> Result<u32, HypergraphError> {
        self.cover_number_with(false)
    }

    pub fn cover_number_with(&self, override_guard: bool) -> Result<u32, HypergraphError> {
        if self.edges.is_empty() {
            return Err(HypergraphError::NoEdges);
        }
        if !override_guard && self.r > COVER_MAX_VERTICES && self.edges.len() > COVER_MAX_EDGES {
            return Err(HypergraphError::CoverGuard { r: self.r, edges: self.edges.len() });
        }
        // distinct edges suffice: duplicates are hit together
        let mut distinct: Vec<u128> = self.edges.clone();
        distinct.sort_unstable();
        distinct.dedup();
        // drop supersets of other edges: hitting the subset hits them
        let mut minimal: Vec<u128> = Vec::new();
        for &e in &distinct {
            if !distinct.iter().any(|&f| f != e && e & f == f) {
                minimal.push(e);
            }
        }
        let mut memo: BTreeMap<Vec<u128>, u32> = BTreeMap::new();
        let mut best = self.r;
        let found = cover_branch(&minimal, 0, &mut best, &mut memo);
        Ok(found)
    }

    /// Minimum over all `m`-subsets `W` of the number of edges (with
    /// multiplicity) fully inside `W`, plus an attaining `W`.
    pub fn min_edges_in_subsets(&self, m: u32) -> Result<(u64, u128), HypergraphError> {
        if m > self.r {
            return Err(HypergraphError::MOutOfRange { m, r: self.r });
        }
        let subsets = bits::binom(self.r as u64, m as u64);
        if subsets > SUBSET_SCAN_GUARD {
            return Err(HypergraphError::SubsetGuard { subsets });
        }
        let mut best: Option<(u64, u128)> = None;
        for w in bits::subsets_of_size(self.r, m) {
            let t = self.edges.iter().filter(|&&e| e & !w == 0).count() as u64;
            let replace = match best {
                None => true,
                Some((bt, bw)) => {
                    t < bt || (t == bt && bits::lex_cmp(w, bw) == core::cmp::Ordering::Less)
                }
            };
            if replace {
                best = Some((t, w));
            }
        }
        Ok(best.expect("at least one subset"))
    }
}

fn cover_branch(
    uncovered: &[u128],
    depth: u32,
    best: &mut u32,
    memo: &mut BTreeMap<Vec<u128>, u32>,
) -> u32 {
    if uncovered.is_empty() {
        *best = (*best).min(depth);
        return 0;
    }
    if depth >= *best {
        return u32::MAX / 2;
    }
    let key: Vec<u128> = {
        let mut k = uncovered.to_vec();
        k.sort_unstable();
        k
    };
    if let Some(&sub) = memo.get(&key) {
        *best = (*best).min(depth + sub);
        return sub;
    }
    // branch on the uncovered edge with fewest vertices
    let pivot = *uncovered.iter().min_by_key(|e| e.count_ones()).unwrap();
    let mut sub_best = u32::MAX / 2;
    for v in bits::iter_bits(pivot) {
        let rest: Vec<u128> = uncovered.iter().copied().filter(|&e| e >> v & 1 == 0).collect();
        let below = cover_branch(&rest, depth + 1, best, memo);
        sub_best = sub_best.min(below.saturating_add(1));
    }
    memo.insert(key, sub_best);
    sub_best
}

/// Exact rational `C(r,s) / C(r-u,s)`: any hypergraph of uniformity `u` in
/// which every `(r-s)`-subset contains an edge has at least this many edges.
pub fn double_count_lower_bound(r: u32, s: u32, u: u32) -> Result<Rat, HypergraphError> {
    if u > r - s.min(r) || s > r || u == 0 {
        return Err(HypergraphError::RangeViolation { what: "need 1 <= u <= r - s" });
    }
    Ok(binom_rat(r as u64, s as u64) / binom_rat((r - u) as u64, s as u64))
}

/// Outcome of the uniform random-edge sampler: the hypergraph and the two
/// exact property checks. A failed check is an outcome, not an error.
#[derive(Debug, Clone)]
pub struct UniformSampleOutcome {
    pub hypergraph: Hypergraph,
    pub uniformity: u32,
    pub edge_target: u64,
    pub intersecting: bool,
    pub disjoint_witness: Option<(usize, usize)>,
    /// True iff every `(r-s)`-subset contains an edge (cover number > s).
    pub covers_exceed_s: bool,
    pub success: bool,
}

/// Samples `m` independent uniform `u`-subsets of `{0..r-1}` and checks the
/// two properties exactly.
///
/// `u` defaults to `8s` and `m` to `floor(e^{u^2/(2r)})`; both are
/// overridable since the theoretical regime is far outside desk scale.
pub fn uniform_intersecting_sample(
    r: u32,
    s: u32,
    seed: u64,
    u_override: Option<u32>,
    m_override: Option<u64>,
) -> Result<UniformSampleOutcome, HypergraphError> {
    if r == 0 || s == 0 || s > r {
        return Err(HypergraphError::RangeViolation { what: "need 1 <= s <= r" });
    }
    let u = u_override.unwrap_or(8 * s);
    if u < 1 || u > r {
        return Err(HypergraphError::UOutOfRange { u, r });
    }
    let m = m_override.unwrap_or_else(|| {
        libm::floor(libm::exp((u as f64 * u as f64) / (2.0 * r as f64))) as u64
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        edges.push(sample_subset(&mut rng, r, u));
    }
    let hypergraph = Hypergraph::new(r, edges)?;
    let (intersecting, disjoint_witness) = match hypergraph.is_intersecting() {
        Ok(()) => (true, None),
        Err(pair) => (false, Some(pair)),
    };
    let covers_exceed_s = if r - s <= r {
        let (t, _) = hypergraph.min_edges_in_subsets(r - s)?;
        t >= 1
    } else {
        false
    };
    let success = intersecting && covers_exceed_s;
    Ok(UniformSampleOutcome {
        hypergraph,
        uniformity: u,
        edge_target: m,
        intersecting,
        disjoint_witness,
        covers_exceed_s,
        success,
    })
}

/// Uniform `u`-subset of `{0..r-1}` by rejection-free partial shuffle.
fn sample_subset(rng: &mut ChaCha8Rng, r: u32, u: u32) -> u128 {
    let mut pool: Vec<u32> = (0..r).collect();
    let mut mask = 0u128;
    for i in 0..u as usize {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
        mask |= 1u128 << pool[i];
    }
    mask
}

/// The exclusion sampler: for each `x`-subset `X` draw a Bernoulli variable
/// with probability `p = 1/C(r-x, x)`, then keep `X` as an edge iff its
/// variable fired and no variable of an `x`-subset disjoint from `X` fired.
///
/// The output is intersecting for every seed by construction.
pub fn exclusion_sample(r: u32, x: u32, seed: u64) -> Result<Hypergraph, HypergraphError> {
    if x == 0 || x > r {
        return Err(HypergraphError::RangeViolation { what: "need 1 <= x <= r" });
    }
    if r < 2 * x {
        return Err(HypergraphError::RangeViolation { what: "need r - x >= x" });
    }
    if r == 2 * x {
        return Err(HypergraphError::DegenerateExclusion { r, x });
    }
    let candidates = bits::binom(r as u64, x as u64);
    if candidates > EXCLUSION_GUARD {
        return Err(HypergraphError::SubsetGuard { subsets: candidates });
    }
    let p = 1.0 / bits::binom((r - x) as u64, x as u64) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // draw z_X in colex enumeration order
    let mut z = vec![false; candidates as usize];
    let subsets: Vec<u128> = bits::subsets_of_size(r, x).collect();
    for zi in z.iter_mut() {
        *zi = rng.gen_bool(p);
    }
    let mut edges = Vec::new();
    for (i, &subset) in subsets.iter().enumerate() {
        if !z[i] {
            continue;
        }
        let complement_elems: Vec<u32> =
            (0..r).filter(|&v| subset >> v & 1 == 0).collect();
        let excluded = bits::combinations_lex(&complement_elems, x as usize)
            .into_iter()
            .any(|other| z[bits::colex_rank(other)]);
        if !excluded {
            edges.push(subset);
        }
    }
    Hypergraph::new(r, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> Hypergraph {
        Hypergraph::from_lists(
            7,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[1, 4, 6],
                &[2, 3, 6],
                &[2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn fano_is_intersecting() {
        assert!(fano().is_intersecting().is_ok());
    }

    #[test]
    fn disjoint_pair_witnessed() {
        let h = Hypergraph::from_lists(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(h.is_intersecting(), Err((0, 1)));
    }

    #[test]
    fn fano_cover_number_is_three() {
        assert_eq!(fano().cover_number().unwrap(), 3);
    }

    #[test]
    fn single_edge_cover_is_one() {
        let h = Hypergraph::from_lists(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(h.cover_number().unwrap(), 1);
    }

    #[test]
    fn complete_uniform_cover_number() {
        // complete u-uniform on r vertices: cover number r - u + 1
        for (r, u) in [(5u32, 3u32), (6, 2), (6, 4)] {
            let edges: Vec<u128> = bits::subsets_of_size(r, u).collect();
            let h = Hypergraph::new(r, edges).unwrap();
            assert_eq!(h.cover_number().unwrap(), r - u + 1, "r={r}, u={u}");
        }
    }

    #[test]
    fn min_edges_full_vertex_set_counts_everything() {
        let h = fano();
        let (t, _) = h.min_edges_in_subsets(7).unwrap();
        assert_eq!(t, 7);
    }

    #[test]
    fn fano_six_subsets_contain_four_edges() {
        // removing any point kills its three lines: 7 - 3 = 4
        let (t, _) = fano().min_edges_in_subsets(6).unwrap();
        assert_eq!(t, 4);
    }

    #[test]
    fn min_edges_monotone_in_m() {
        let h = fano();
        let mut prev = 0;
        for m in 0..=7 {
            let (t, _) = h.min_edges_in_subsets(m).unwrap();
            assert!(t >= prev);
            prev = t;
        }
    }

    #[test]
    fn cover_number_matches_subset_criterion() {
        // cover_number > s iff every (r-s)-subset contains an edge
        let h = fano();
        let cover = h.cover_number().unwrap();
        for s in 0..7u32 {
            let (t, _) = h.min_edges_in_subsets(7 - s).unwrap();
            assert_eq!(cover > s, t >= 1, "s={s}");
        }
    }

    #[test]
    fn double_count_examples() {
        use crate::ratio::rat_int;
        assert_eq!(double_count_lower_bound(7, 3, 4).unwrap(), rat_int(35));
        // u = r - s gives C(r,s) exactly
        assert_eq!(
            double_count_lower_bound(9, 2, 7).unwrap(),
            rat_int(bits::binom(9, 2) as i128)
        );
        assert!(double_count_lower_bound(7, 3, 5).is_err());
    }

    #[test]
    fn uniform_sampler_is_deterministic_per_seed() {
        let a = uniform_intersecting_sample(7, 1, 9, Some(4), Some(5)).unwrap();
        let b = uniform_intersecting_sample(7, 1, 9, Some(4), Some(5)).unwrap();
        assert_eq!(a.hypergraph, b.hypergraph);
        // 2u > r forces intersecting
        assert!(a.intersecting);
    }

    #[test]
    fn single_edge_sample_fails_cover_check() {
        let out = uniform_intersecting_sample(7, 1, 3, Some(4), Some(1)).unwrap();
        assert!(!out.covers_exceed_s);
        assert!(!out.success);
    }

    #[test]
    fn exclusion_sample_always_intersecting() {
        for seed in 0..50 {
            let h = exclusion_sample(10, 4, seed).unwrap();
            assert!(h.is_intersecting().is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn exclusion_sample_rejects_degenerate() {
        assert!(matches!(
            exclusion_sample(8, 4, 0),
            Err(HypergraphError::DegenerateExclusion { .. })
        ));
        assert!(exclusion_sample(7, 4, 0).is_err());
    }
}
