//! Constructive lower-bound algorithms: each takes an adversarial colouring
//! and returns a witness together with the exact rational bound it meets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::colouring::{ColourSet, EdgeColouring};
use crate::evaluate::{
    self, is_k_connected, largest_k_connected_in, touched_vertices, union_graph,
    union_graph_components, EvalError,
};
use crate::graph::Graph;
use crate::ratio::{binom_rat, ceil_rat, rat, rat_int};
use crate::report::GuaranteeReport;

/// Exact touched-set maximisation in best_colour_set_d is used directly up
/// to this many colour subsets; beyond it the greedy path runs first.
pub const EXACT_TOUCH_GUARD: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GuaranteeError {
    ParameterRange { what: &'static str },
    /// `n` at or below the minimum the connectivity level demands.
    NTooSmall { n: u32, min: u64 },
    /// The input graph is too sparse for the extraction argument.
    EdgePrecondition { edges: u64, pairs: u64, r: u32 },
    /// Matching sides not disjoint or of unequal size.
    BadSides { a: usize, b: usize },
    /// Matching sides too small for the pigeonhole step.
    SidesTooSmall { size: usize, need_more_than: u64 },
    Eval(EvalError),
}

impl fmt::Display for GuaranteeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GuaranteeError::ParameterRange { what } => write!(f, "parameter range violation: {what}"),
            GuaranteeError::NTooSmall { n, min } => {
                write!(f, "n={n} is not above the required minimum {min}")
            }
            GuaranteeError::EdgePrecondition { edges, pairs, r } => {
                write!(f, "graph has {edges} edges, below {pairs}/{r} of all pairs")
            }
            GuaranteeError::BadSides { a, b } => {
                write!(f, "sides must be disjoint and of equal size, got {a} and {b}")
            }
            GuaranteeError::SidesTooSmall { size, need_more_than } => {
                write!(f, "side size {size} must exceed {need_more_than}")
            }
            GuaranteeError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl From<EvalError> for GuaranteeError {
    fn from(e: EvalError) -> Self {
        GuaranteeError::Eval(e)
    }
}

/// Touched-vertex guarantee from a degree threshold `d`.
///
/// If some vertex sees at most `d` distinct colours, its `s` most frequent
/// colours touch a star of `1 + s(n-1)/d` vertices. Otherwise every vertex
/// sees more than `d` colours and the colour set maximising the touched
/// count reaches `(1 - C(r-d-1,s)/C(r,s)) * n`, since that is the mean over
/// uniform random `s`-sets. The claimed bound is the minimum of the two
/// rationals; the witness is touched (`k = 0`).
pub fn best_colour_set_d(c: &EdgeColouring, s: u32, d: u32) -> Result<GuaranteeReport, GuaranteeError> {
    let (n, r) = (c.n(), c.r());
    if n < 2 {
        return Err(GuaranteeError::ParameterRange { what: "need n >= 2" });
    }
    if !(s >= 1 && s <= d && d + s < r) {
        return Err(GuaranteeError::ParameterRange { what: "need 1 <= s <= d < r - s" });
    }
    let star_bound = rat_int(1) + rat(s as i128 * (n as i128 - 1), d as i128);
    let mean_bound =
        (rat_int(1) - binom_rat((r - d - 1) as u64, s as u64) / binom_rat(r as u64, s as u64))
            * rat_int(n as i128);
    let claimed = star_bound.min(mean_bound);

    // Case 1: a low-degree-in-colours vertex exists.
    if let Some((v, counts)) = lowest_colour_degree_vertex(c, d) {
        let mut order: Vec<u32> = (0..r).collect();
        order.sort_by(|&a, &b| counts[b as usize].cmp(&counts[a as usize]).then(a.cmp(&b)));
        let colours: ColourSet = order.iter().take(s as usize).copied().collect();
        let mut witness = vec![v];
        for u in 0..n {
            if u != v && colours.contains(c.colour(v, u) as u32) {
                witness.push(u);
            }
        }
        witness.sort_unstable();
        let achieved = witness.len() as u32;
        let certified = achieved as i128 >= ceil_rat(&claimed);
        return Ok(GuaranteeReport {
            colours,
            witness_vertices: witness,
            claimed_bound: claimed,
            achieved,
            k: 0,
            certified,
        });
    }

    // Case 2: maximise the touched count over s-subsets.
    let subsets = bits::binom(r as u64, s as u64);
    let eval = if subsets <= EXACT_TOUCH_GUARD {
        evaluate::val_g_detailed(c, s)?
    } else {
        let greedy = greedy_touch(c, s);
        if (greedy.value as i128) >= ceil_rat(&claimed) {
            greedy
        } else {
            evaluate::val_g_detailed(c, s)?
        }
    };
    let certified = eval.value as i128 >= ceil_rat(&claimed);
    Ok(GuaranteeReport {
        colours: eval.colours,
        witness_vertices: eval.witness,
        claimed_bound: claimed,
        achieved: eval.value,
        k: 0,
        certified,
    })
}

/// Smallest vertex seeing at most `d` distinct colours, with its per-colour
/// incidence counts.
fn lowest_colour_degree_vertex(c: &EdgeColouring, d: u32) -> Option<(u32, Vec<u32>)> {
    let (n, r) = (c.n(), c.r());
    for v in 0..n {
        let mut counts = vec![0u32; r as usize];
        for u in 0..n {
            if u != v {
                counts[c.colour(v, u) as usize] += 1;
            }
        }
        let distinct = counts.iter().filter(|&&x| x > 0).count() as u32;
        if distinct <= d {
            return Some((v, counts));
        }
    }
    None
}

/// Greedy marginal-coverage selection of `s` colours, then single-swap
/// local search on the touched count.
fn greedy_touch(c: &EdgeColouring, s: u32) -> evaluate::Evaluation {
    let r = c.r();
    let mut set = ColourSet::EMPTY;
    for _ in 0..s {
        let mut best: Option<(usize, u32)> = None;
        for col in 0..r {
            if set.contains(col) {
                continue;
            }
            let t = touched_vertices(c, set.with(col)).len();
            if best.map_or(true, |(bt, _)| t > bt) {
                best = Some((t, col));
            }
        }
        set = set.with(best.expect("r > s colours remain").1);
    }
    // single swaps until no improvement
    loop {
        let current = touched_vertices(c, set).len();
        let mut improved = false;
        'outer: for out in set.iter() {
            for inc in 0..r {
                if set.contains(inc) {
                    continue;
                }
                let candidate = ColourSet::from_bits(set.bits() & !(1u128 << out)).with(inc);
                if touched_vertices(c, candidate).len() > current {
                    set = candidate;
                    improved = true;
                    break 'outer;
                }
            }
        }
        if !improved {
            break;
        }
    }
    let witness = touched_vertices(c, set);
    evaluate::Evaluation { value: witness.len() as u32, colours: set, witness }
}

/// Connected-witness guarantee by greedy colour augmentation.
///
/// Starts from the single colour with the largest component and repeatedly
/// adds the colour that most grows the component containing the current
/// witness. The claimed bound is the exact product form
/// `n - n * prod_{i=1..s} (1 - i/(r-i+1))`; if the greedy witness falls
/// short, the exact `val_f` maximiser (which always meets the bound) is
/// substituted.
pub fn greedy_augment(c: &EdgeColouring, s: u32) -> Result<GuaranteeReport, GuaranteeError> {
    let (n, r) = (c.n(), c.r());
    if !(s >= 1 && 2 * s <= r) {
        return Err(GuaranteeError::ParameterRange { what: "need 1 <= s <= r/2" });
    }
    let mut product = rat_int(1);
    for i in 1..=s as i128 {
        product *= rat_int(1) - rat(i, r as i128 - i + 1);
    }
    let claimed = rat_int(n as i128) * (rat_int(1) - product);

    // round 1: best single colour, ties by lowest id
    let mut set = ColourSet::EMPTY;
    let mut witness: Vec<u32> = Vec::new();
    for col in 0..r {
        let comps = union_graph_components(c, ColourSet::singleton(col));
        if set.is_empty() || comps.largest_size() > witness.len() as u32 {
            set = ColourSet::singleton(col);
            witness = comps.largest_component();
        }
    }
    for _ in 1..s {
        let anchor = witness[0];
        let mut best: Option<(u32, u32)> = None;
        for col in 0..r {
            if set.contains(col) {
                continue;
            }
            let comps = union_graph_components(c, set.with(col));
            let size = comps.sizes[comps.labels[anchor as usize] as usize];
            if best.map_or(true, |(bs, _)| size > bs) {
                best = Some((size, col));
            }
        }
        let (_, col) = best.expect("s <= r/2 leaves colours to add");
        set = set.with(col);
        let comps = union_graph_components(c, set);
        let id = comps.labels[anchor as usize];
        let grown: Vec<u32> =
            (0..n).filter(|&v| comps.labels[v as usize] == id).collect();
        debug_assert!(grown.len() >= witness.len());
        witness = grown;
    }

    let mut achieved = witness.len() as u32;
    let mut colours = set;
    if (achieved as i128) < ceil_rat(&claimed) {
        let exact = evaluate::val_f_detailed(c, s)?;
        achieved = exact.value;
        colours = exact.colours;
        witness = exact.witness;
    }
    let certified = achieved as i128 >= ceil_rat(&claimed);
    Ok(GuaranteeReport {
        colours,
        witness_vertices: witness,
        claimed_bound: claimed,
        achieved,
        k: 1,
        certified,
    })
}

/// Result of the disjoint extraction: the chosen dyadic size class `j`
/// (sizes in `[2^{j-1} n/(4r), 2^j n/(4r)]`), its vertex sets, and whether
/// the class cardinality certifies `ceil(r / (4^j log2 r))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractOutcome {
    pub j: u32,
    pub sets: Vec<Vec<usize>>,
    pub class_need: u32,
    pub certified: bool,
    /// Every set extracted, across all classes, in extraction order.
    pub all_sets: Vec<Vec<usize>>,
}

/// Greedy peeling of vertex-disjoint k-connected subgraphs.
///
/// While the remainder holds a k-connected subgraph on more than
/// `n/(2r) + 1` vertices, remove a largest one, then bucket the extracted
/// sets by dyadic size class and return a class whose cardinality meets
/// `ceil(r / (4^j log2 r))`, or the largest class uncertified.
pub fn extract_disjoint_kconnected(
    g: &Graph,
    r: u32,
    k: u32,
) -> Result<ExtractOutcome, GuaranteeError> {
    let n = g.n() as u64;
    if r < 2 || k < 1 {
        return Err(GuaranteeError::ParameterRange { what: "need r >= 2, k >= 1" });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if 2 * r as u64 * g.edge_count() < n * n.saturating_sub(1) {
        return Err(GuaranteeError::EdgePrecondition { edges: g.edge_count(), pairs, r });
    }
    if k >= 2 && n > 16 {
        let min = 16 * r as u64 * r as u64 * (k as u64 - 1) + 1;
        if n <= min {
            return Err(GuaranteeError::NTooSmall { n: n as u32, min });
        }
    }

    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut all_sets: Vec<Vec<usize>> = Vec::new();
    loop {
        let sub = g.induced(&alive);
        let found = largest_k_connected_in(&sub, k);
        let Some(local) = found else { break };
        let set: Vec<usize> = local.iter().map(|&i| alive[i]).collect();
        // keep while |set| > n/(2r) + 1, compared exactly
        if 2 * r as u64 * set.len() as u64 <= n + 2 * r as u64 {
            break;
        }
        alive.retain(|v| !set.contains(v));
        all_sets.push(set);
        if alive.is_empty() {
            break;
        }
    }

    // dyadic class of a size: smallest j >= 2 with 4 r size <= 2^j n
    let class_of = |size: u64| -> u32 {
        let mut j = 2u32;
        while (1u128 << j) * (n as u128) < 4 * (r as u128) * (size as u128) {
            j += 1;
        }
        j
    };
    let log2r = libm::log2(r as f64);
    let need = |j: u32| -> u32 {
        libm::ceil(r as f64 / (libm::pow(4.0, j as f64) * log2r)) as u32
    };
    let max_j = all_sets.iter().map(|s| class_of(s.len() as u64)).max().unwrap_or(2);
    let mut best_class: Option<(u32, Vec<Vec<usize>>)> = None;
    for j in 2..=max_j {
        let class: Vec<Vec<usize>> = all_sets
            .iter()
            .filter(|s| class_of(s.len() as u64) == j)
            .cloned()
            .collect();
        if class.len() as u32 >= need(j) && !class.is_empty() {
            return Ok(ExtractOutcome { j, class_need: need(j), sets: class, certified: true, all_sets });
        }
        if best_class.as_ref().map_or(true, |(_, b)| class.len() > b.len()) {
            best_class = Some((j, class));
        }
    }
    let (j, sets) = best_class.unwrap_or((2, Vec::new()));
    Ok(ExtractOutcome { j, class_need: need(j), sets, certified: false, all_sets })
}

/// Pigeonhole monochromatic matching between two equal-size disjoint sides.
///
/// Sides are sorted ascending and paired by rank; some colour appears at
/// least `k` times among the paired edges once the side size exceeds
/// `r(k-1)`. Returns the lowest such colour and `k` of its edges.
pub fn monochromatic_matching(
    c: &EdgeColouring,
    a: &[u32],
    b: &[u32],
    k: u32,
) -> Result<(u16, Vec<(u32, u32)>), GuaranteeError> {
    if k < 1 {
        return Err(GuaranteeError::ParameterRange { what: "need k >= 1" });
    }
    if a.len() != b.len() || a.iter().any(|x| b.contains(x)) {
        return Err(GuaranteeError::BadSides { a: a.len(), b: b.len() });
    }
    let need_more_than = c.r() as u64 * (k as u64 - 1);
    if a.len() as u64 <= need_more_than {
        return Err(GuaranteeError::SidesTooSmall { size: a.len(), need_more_than });
    }
    let mut left = a.to_vec();
    let mut right = b.to_vec();
    left.sort_unstable();
    right.sort_unstable();
    let mut by_colour: Vec<Vec<(u32, u32)>> = vec![Vec::new(); c.r() as usize];
    for (&u, &v) in left.iter().zip(right.iter()) {
        by_colour[c.colour(u, v) as usize].push((u, v));
    }
    let col = (0..c.r())
        .find(|&col| by_colour[col as usize].len() >= k as usize)
        .expect("pigeonhole: side size exceeds r(k-1)");
    let matching = by_colour[col as usize][..k as usize].to_vec();
    Ok((col as u16, matching))
}

/// Few-colour k-connected witness by iterated contraction.
///
/// Round one extracts disjoint k-connected subgraphs from the majority
/// colour; later rounds contract the extracted sets to super-vertices,
/// recolour super-edges by a rank-paired pigeonhole matching and extract
/// connected groups of the new majority colour. The claimed bound is
/// `2^{s-2} n / r`. When the pipeline's witness falls short at `k = 1`, the
/// exact `val_f` maximiser is substituted; for `k >= 2` the exact search
/// runs when `n <= 16` and the report may come back uncertified.
pub fn iterated_contraction(
    c: &EdgeColouring,
    s: u32,
    k: u32,
) -> Result<GuaranteeReport, GuaranteeError> {
    let (n, r) = (c.n(), c.r());
    if s < 1 || s > r {
        return Err(GuaranteeError::ParameterRange { what: "need 1 <= s <= r" });
    }
    if k < 1 {
        return Err(GuaranteeError::ParameterRange { what: "need k >= 1" });
    }
    let claimed = if s >= 2 {
        rat((1i128 << (s - 2)) * n as i128, r as i128)
    } else {
        rat(n as i128, 2 * r as i128)
    };

    if k >= 2 && n > 16 {
        let min = 16 * r as u64 * r as u64 * (k as u64 - 1) + 1;
        if (n as u64) <= min {
            return Err(GuaranteeError::NTooSmall { n, min });
        }
    }
    if k >= 2 && n <= 16 {
        // exact search replaces the pipeline at desk scale
        let exact = evaluate::val_f_k(c, s, k)?;
        let achieved = exact.value;
        let verified = !exact.witness.is_empty() && is_k_connected(c, exact.colours, &exact.witness, k);
        let certified = verified && achieved as i128 >= ceil_rat(&claimed);
        return Ok(GuaranteeReport {
            colours: exact.colours,
            witness_vertices: exact.witness,
            claimed_bound: claimed,
            achieved,
            k,
            certified,
        });
    }

    let pipeline = contraction_pipeline(c, s, k);
    let (mut colours, mut witness) = match pipeline {
        Some((set, w)) => (set, w),
        None => (ColourSet::EMPTY, Vec::new()),
    };
    let mut achieved = witness.len() as u32;
    let verified =
        !witness.is_empty() && is_k_connected(c, colours, &witness, k);
    if k == 1 && (!verified || (achieved as i128) < ceil_rat(&claimed)) {
        let exact = evaluate::val_f_detailed(c, s)?;
        colours = exact.colours;
        witness = exact.witness;
        achieved = exact.value;
    }
    let verified = !witness.is_empty() && is_k_connected(c, colours, &witness, k);
    let certified = verified && achieved as i128 >= ceil_rat(&claimed);
    Ok(GuaranteeReport {
        colours,
        witness_vertices: witness,
        claimed_bound: claimed,
        achieved,
        k,
        certified,
    })
}

/// The contraction loop proper; returns the chosen colours and the largest
/// final group, or None when round one extracts nothing.
fn contraction_pipeline(c: &EdgeColouring, s: u32, k: u32) -> Option<(ColourSet, Vec<u32>)> {
    let r = c.r();
    let majority = majority_colour(c);
    let g1 = union_graph(c, ColourSet::singleton(majority));
    let ext = extract_disjoint_kconnected(&g1, r.max(2), k).ok()?;
    let mut groups: Vec<Vec<u32>> = ext
        .sets
        .iter()
        .map(|set| set.iter().map(|&v| v as u32).collect())
        .collect();
    if groups.is_empty() {
        return None;
    }
    let mut chosen = ColourSet::singleton(majority);

    for _ in 1..s {
        if groups.len() <= 1 {
            break;
        }
        let m = groups.len() as u32;
        // super-edge colours via rank-paired matchings on truncated sides
        let mut super_colour = vec![vec![0u16; m as usize]; m as usize];
        let mut matching_failed = false;
        for i in 0..m as usize {
            for j in i + 1..m as usize {
                let t = groups[i].len().min(groups[j].len());
                match monochromatic_matching(c, &groups[i][..t], &groups[j][..t], k) {
                    Ok((col, _)) => {
                        super_colour[i][j] = col;
                        super_colour[j][i] = col;
                    }
                    Err(_) => {
                        matching_failed = true;
                    }
                }
            }
        }
        if matching_failed {
            break;
        }
        let super_c = EdgeColouring::from_fn(m, r, |i, j| {
            super_colour[i as usize][j as usize]
        })
        .ok()?;
        let maj2 = majority_colour(&super_c);
        let gs = union_graph(&super_c, ColourSet::singleton(maj2));
        let Ok(ext2) = extract_disjoint_kconnected(&gs, r.max(2), 1) else { break };
        if ext2.all_sets.is_empty() {
            break;
        }
        let mut merged: Vec<Vec<u32>> = Vec::new();
        for super_set in &ext2.all_sets {
            let mut group: Vec<u32> = Vec::new();
            for &i in super_set {
                group.extend_from_slice(&groups[i]);
            }
            group.sort_unstable();
            merged.push(group);
        }
        groups = merged;
        chosen = chosen.with(maj2 as u32);
    }

    let witness = groups
        .into_iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)))?;
    Some((chosen, witness))
}

/// Colour with the largest class, ties by lowest id.
fn majority_colour(c: &EdgeColouring) -> u32 {
    let sizes = c.colour_class_sizes();
    let mut best = 0u32;
    for col in 1..c.r() {
        if sizes[col as usize] > sizes[best as usize] {
            best = col;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluate::val_g;

    fn random_colouring(n: u32, r: u32, seed: u64) -> EdgeColouring {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15) | 1;
        EdgeColouring::from_fn(n, r, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % r as u64) as u16
        })
        .unwrap()
    }

    #[test]
    fn star_case_on_monochromatic() {
        // one colour used out of five: Case 1 with every vertex seeing it
        let c = EdgeColouring::monochromatic(8, 5, 0).unwrap();
        let rep = best_colour_set_d(&c, 1, 1).unwrap();
        assert_eq!(rep.achieved, 8);
        assert!(rep.certified);
        assert_eq!(rep.k, 0);
    }

    #[test]
    fn touched_bound_on_random_colourings() {
        // d = 2, s = 2, r = 5, n = 10: claimed = min(10, 9) = 9
        for seed in 0..40 {
            let c = random_colouring(10, 5, seed);
            let rep = best_colour_set_d(&c, 2, 2).unwrap();
            assert_eq!(rep.claimed_ceiling(), 9, "seed {seed}");
            assert!(rep.certified, "seed {seed}");
            assert!(rep.meets_claim(), "seed {seed}");
            // every witness vertex is touched by the chosen colours
            let touched = touched_vertices(&c, rep.colours);
            assert!(
                rep.witness_vertices.iter().all(|v| touched.contains(v)),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn touched_report_consistent_with_val_g() {
        for seed in 0..20 {
            let c = random_colouring(8, 7, seed);
            let rep = best_colour_set_d(&c, 3, 3).unwrap();
            assert!(rep.achieved <= val_g(&c, 3).unwrap(), "seed {seed}");
            assert!(rep.meets_claim(), "seed {seed}");
        }
    }

    #[test]
    fn best_colour_set_rejects_bad_ranges() {
        let c = EdgeColouring::monochromatic(6, 5, 0).unwrap();
        assert!(best_colour_set_d(&c, 2, 1).is_err()); // s > d
        assert!(best_colour_set_d(&c, 2, 3).is_err()); // d >= r - s
        assert!(best_colour_set_d(&c, 0, 1).is_err());
    }

    #[test]
    fn augment_two_colour_connects_everything() {
        for seed in 0..20 {
            let c = random_colouring(9, 2, seed);
            let rep = greedy_augment(&c, 1).unwrap();
            assert_eq!(rep.achieved, 9, "seed {seed}");
            assert!(rep.certified);
        }
    }

    #[test]
    fn augment_bound_and_witness_verify() {
        for seed in 0..30 {
            let c = random_colouring(12, 4, seed);
            let rep = greedy_augment(&c, 2).unwrap();
            // claimed: 12 (1 - (3/4)(1/3)) = 9
            assert_eq!(rep.claimed_ceiling(), 9, "seed {seed}");
            assert!(rep.meets_claim(), "seed {seed}");
            assert!(is_k_connected(&c, rep.colours, &rep.witness_vertices, 1), "seed {seed}");
            assert!(rep.colours.len() <= 2);
        }
    }

    #[test]
    fn augment_rejects_large_s() {
        let c = EdgeColouring::monochromatic(6, 5, 0).unwrap();
        assert!(greedy_augment(&c, 3).is_err());
    }

    #[test]
    fn extract_single_component_certifies() {
        let mut g = Graph::new(6);
        for u in 0..6 {
            for v in u + 1..6 {
                g.add_edge(u, v);
            }
        }
        let out = extract_disjoint_kconnected(&g, 2, 1).unwrap();
        assert!(out.certified);
        assert_eq!(out.sets.len(), 1);
        assert_eq!(out.sets[0].len(), 6);
    }

    #[test]
    fn extract_four_cliques() {
        // 4 disjoint cliques of size 5, r = 8: 40 edges >= C(20,2)/8, each
        // clique extracted, class bound met
        let mut g = Graph::new(20);
        for b in 0..4 {
            for u in 0..5 {
                for v in u + 1..5 {
                    g.add_edge(b * 5 + u, b * 5 + v);
                }
            }
        }
        let out = extract_disjoint_kconnected(&g, 8, 1).unwrap();
        assert_eq!(out.all_sets.len(), 4);
        assert!(out.all_sets.iter().all(|s| s.len() == 5));
        assert!(out.certified);
    }

    #[test]
    fn extract_rejects_sparse_graph() {
        let mut g = Graph::new(12);
        g.add_edge(0, 1);
        assert!(matches!(
            extract_disjoint_kconnected(&g, 3, 1),
            Err(GuaranteeError::EdgePrecondition { .. })
        ));
    }

    #[test]
    fn matching_pigeonhole() {
        let c = random_colouring(8, 3, 5);
        let (col, m) = monochromatic_matching(&c, &[0, 1, 2, 3], &[4, 5, 6, 7], 2).unwrap();
        assert_eq!(m.len(), 2);
        for &(u, v) in &m {
            assert_eq!(c.colour(u, v) as u32, col as u32);
        }
        // edges are vertex-disjoint by the rank pairing
        assert_ne!(m[0].0, m[1].0);
        assert_ne!(m[0].1, m[1].1);
    }

    #[test]
    fn matching_size_precondition() {
        let c = random_colouring(8, 3, 1);
        // |A| = r(k-1) = 3 is exactly too small for k = 2
        assert!(matches!(
            monochromatic_matching(&c, &[0, 1, 2], &[4, 5, 6], 2),
            Err(GuaranteeError::SidesTooSmall { .. })
        ));
        assert!(monochromatic_matching(&c, &[0, 1, 2], &[2, 3, 4], 1).is_err());
    }

    #[test]
    fn contraction_two_colours_full() {
        for seed in 0..10 {
            let c = random_colouring(10, 2, seed);
            let rep = iterated_contraction(&c, 1, 1).unwrap();
            // one of two colours always connects everything... the larger
            // component over both colours has at least ceil(n/2) = 5 and the
            // claimed bound n/(2r) = 2.5 is easily met
            assert!(rep.certified, "seed {seed}");
            assert!(rep.meets_claim(), "seed {seed}");
        }
    }

    #[test]
    fn contraction_meets_claim_at_desk_cells() {
        for seed in 0..25 {
            let c = random_colouring(16, 4, seed);
            let rep = iterated_contraction(&c, 2, 1).unwrap();
            // claimed = 2^0 * 16/4 = 4
            assert_eq!(rep.claimed_ceiling(), 4, "seed {seed}");
            assert!(rep.certified, "seed {seed}");
            assert!(is_k_connected(&c, rep.colours, &rep.witness_vertices, 1));
            assert!(rep.colours.len() <= 2);
        }
    }

    #[test]
    fn contraction_k2_small_n_runs_exact() {
        let c = random_colouring(10, 3, 7);
        let rep = iterated_contraction(&c, 1, 2).unwrap();
        if rep.certified {
            assert!(is_k_connected(&c, rep.colours, &rep.witness_vertices, 2));
            assert!(rep.meets_claim());
        }
    }

    #[test]
    fn contraction_k2_mid_n_rejected() {
        let c = random_colouring(20, 3, 7);
        assert!(matches!(
            iterated_contraction(&c, 1, 2),
            Err(GuaranteeError::NTooSmall { .. })
        ));
    }
}
