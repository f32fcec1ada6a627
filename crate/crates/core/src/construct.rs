//! Generators for the upper-bound colourings: cube colouring, projective
//! planes, hypergraph-to-colouring reduction, the certificate catalogue and
//! the random base blow-up.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::colouring::{ColouringError, EdgeColouring};
use crate::evaluate;
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::ratio::ceil_log2_pow;

/// Resampling budget for the random base colouring.
pub const RETRY_BUDGET: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    BadParameters { what: &'static str },
    NTooSmall { n: u32, min: u32 },
    NotPrime { p: u32 },
    /// Edge indices of a disjoint pair in a hypergraph that had to be
    /// intersecting.
    NotIntersecting { i: usize, j: usize },
    UnknownName,
    /// No acceptable base colouring within the retry budget; carries the
    /// best draw seen.
    RetryBudget { draws: u32, best_val: u32, best_base: EdgeColouring },
    Colouring(ColouringError),
    Hypergraph(HypergraphError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::BadParameters { what } => write!(f, "bad parameters: {what}"),
            ConstructError::NTooSmall { n, min } => write!(f, "n={n} below the minimum {min}"),
            ConstructError::NotPrime { p } => write!(f, "p={p} is not prime"),
            ConstructError::NotIntersecting { i, j } => {
                write!(f, "hypergraph is not intersecting: edges {i} and {j} are disjoint")
            }
            ConstructError::UnknownName => write!(f, "unknown catalogue name"),
            ConstructError::RetryBudget { draws, best_val, .. } => {
                write!(f, "no acceptable base colouring in {draws} draws; best score {best_val}")
            }
            ConstructError::Colouring(e) => write!(f, "{e}"),
            ConstructError::Hypergraph(e) => write!(f, "{e}"),
        }
    }
}

impl From<ColouringError> for ConstructError {
    fn from(e: ColouringError) -> Self {
        ConstructError::Colouring(e)
    }
}

impl From<HypergraphError> for ConstructError {
    fn from(e: HypergraphError) -> Self {
        ConstructError::Hypergraph(e)
    }
}

/// A base colouring on `m` vertices together with near-equal part sizes
/// summing to `n`: the first `n mod m` parts get the larger size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupSpec {
    pub base: EdgeColouring,
    pub n: u32,
    pub part_sizes: Vec<u32>,
}

impl BlowupSpec {
    pub fn new(base: EdgeColouring, n: u32) -> Result<Self, ConstructError> {
        let m = base.n();
        if n < m {
            return Err(ConstructError::NTooSmall { n, min: m });
        }
        let q = n / m;
        let rem = n % m;
        let part_sizes = (0..m).map(|i| if i < rem { q + 1 } else { q }).collect();
        Ok(BlowupSpec { base, n, part_sizes })
    }

    /// Part index of each blown-up vertex, parts laid out consecutively.
    pub fn part_of(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.n as usize);
        for (i, &sz) in self.part_sizes.iter().enumerate() {
            for _ in 0..sz {
                out.push(i as u32);
            }
        }
        out
    }

    /// Cross edges take the base colour of their parts; edges inside part
    /// `i` take `internal(i)`.
    pub fn blow_up(&self, internal: impl Fn(u32) -> u16) -> Result<EdgeColouring, ConstructError> {
        let part = self.part_of();
        let base = &self.base;
        let c = EdgeColouring::from_fn(self.n, base.r(), |u, v| {
            let (pu, pv) = (part[u as usize], part[v as usize]);
            if pu == pv {
                internal(pu)
            } else {
                base.colour(pu, pv)
            }
        })?;
        Ok(c)
    }
}

/// Smallest base colour incident to each part, the default internal-edge
/// rule for plain blow-ups.
fn min_incident_colour(base: &EdgeColouring) -> Vec<u16> {
    let m = base.n();
    let mut min = vec![u16::MAX; m as usize];
    for (u, v, col) in base.edges() {
        min[u as usize] = min[u as usize].min(col);
        min[v as usize] = min[v as usize].min(col);
    }
    min
}

/// The cube colouring: vertices of the base `K_{2^d}` are vectors of
/// `Z_2^d` and the pair `{x, y}` gets the colour identified with the
/// nonzero vector `x + y` (colour ids `0..2^d - 2` for vectors `1..2^d - 1`),
/// then blown up to `n` vertices over `r + 1 = 2^d` parts.
///
/// Components of the base union graph under a colour set `S` are the cosets
/// of the span of `S`'s vectors, so `val_f(result, s) <= 2^s * ceil(n / 2^d)`
/// for every `s <= d`.
pub fn cube_colouring(d: u32, n: u32) -> Result<EdgeColouring, ConstructError> {
    if d < 1 || d > 7 {
        return Err(ConstructError::BadParameters { what: "need 1 <= d <= 7" });
    }
    let m = 1u32 << d;
    if n < m {
        return Err(ConstructError::NTooSmall { n, min: m });
    }
    let base = EdgeColouring::from_fn(m, m - 1, |x, y| ((x ^ y) - 1) as u16)?;
    let spec = BlowupSpec::new(base, n)?;
    let internal = min_incident_colour(&spec.base);
    spec.blow_up(|p| internal[p as usize])
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Points and lines of the projective plane of prime order `p`, as a
/// `(p^2+p+1)`-vertex, `(p+1)`-uniform hypergraph with one edge per line.
///
/// Prime powers are unsupported: field extension arithmetic is out of
/// scope, and orders 2, 3, 5, 7 cover everything at desk scale.
pub fn projective_plane_hypergraph(p: u32) -> Result<Hypergraph, ConstructError> {
    if !is_prime(p) {
        return Err(ConstructError::NotPrime { p });
    }
    // homogeneous coordinates normalized so the first nonzero entry is 1
    let mut points: Vec<[u32; 3]> = Vec::new();
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                let t = [x, y, z];
                let first = t.iter().find(|&&c| c != 0);
                if first == Some(&1) {
                    points.push(t);
                }
            }
        }
    }
    debug_assert_eq!(points.len() as u32, p * p + p + 1);
    let mut edges = Vec::with_capacity(points.len());
    for line in &points {
        let mut e = 0u128;
        for (i, pt) in points.iter().enumerate() {
            let dot = (line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2]) % p;
            if dot == 0 {
                e |= 1u128 << i;
            }
        }
        edges.push(e);
    }
    Ok(Hypergraph::new(points.len() as u32, edges)?)
}

/// Turns an intersecting hypergraph into a colouring: `n` vertices split
/// into one near-equal part per edge, and the pair between parts of edges
/// `e` and `e'` coloured by the smallest vertex of `e` meet `e'` (for
/// internal pairs, the smallest vertex of `e`).
///
/// If every `(r-s)`-subset of the hypergraph's vertices contains at least
/// `t` edges, then `val_g(result, s) <= n - t * floor(n/m)`.
pub fn hypergraph_colouring(h: &Hypergraph, n: u32) -> Result<EdgeColouring, ConstructError> {
    if let Err((i, j)) = h.is_intersecting() {
        return Err(ConstructError::NotIntersecting { i, j });
    }
    let m = h.edge_count() as u32;
    if m == 0 {
        return Err(ConstructError::BadParameters { what: "hypergraph has no edges" });
    }
    if n < m {
        return Err(ConstructError::NTooSmall { n, min: m });
    }
    let edges = h.edges();
    // part i corresponds to edge i; colour of a cross pair is min(e_i & e_j)
    let mut colour = vec![vec![0u16; m as usize]; m as usize];
    for i in 0..m as usize {
        for j in 0..m as usize {
            let meet = if i == j { edges[i] } else { edges[i] & edges[j] };
            colour[i][j] = meet.trailing_zeros() as u16;
        }
    }
    let q = n / m;
    let rem = n % m;
    let mut part = Vec::with_capacity(n as usize);
    for i in 0..m {
        let sz = if i < rem { q + 1 } else { q };
        for _ in 0..sz {
            part.push(i as usize);
        }
    }
    Ok(EdgeColouring::from_fn(n, h.r(), |u, v| {
        colour[part[u as usize]][part[v as usize]]
    })?)
}

/// All `C(r,u)` subsets of size `u` as edges; intersecting iff `2u > r`.
pub fn complete_uniform_hypergraph(r: u32, u: u32) -> Result<Hypergraph, ConstructError> {
    if u < 1 || u > r {
        return Err(ConstructError::BadParameters { what: "need 1 <= u <= r" });
    }
    let edges: Vec<u128> = bits::subsets_of_size(r, u).collect();
    Ok(Hypergraph::new(r, edges)?)
}

/// The hard-coded certificate hypergraphs behind the small-r exact values.
///
/// Names: `g519` (5 vertices, 9 edges with multiplicity), `fano_minus_vertex`
/// (6 vertices, 4 edges), `g6210` (6 vertices, 10 edges), `fano`.
pub fn certificate_catalogue(name: &str) -> Result<Hypergraph, ConstructError> {
    let h = match name {
        "g519" => Hypergraph::from_lists(
            5,
            &[
                &[0, 3, 4],
                &[0, 3, 4],
                &[0, 3, 4],
                &[1, 2, 3],
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 2, 4],
                &[0, 1],
                &[0, 2],
            ],
        )?,
        "fano_minus_vertex" => Hypergraph::from_lists(
            6,
            &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 4, 5]],
        )?,
        "g6210" => Hypergraph::from_lists(
            6,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3, 5],
                &[2, 3, 4],
                &[1, 4, 5],
                &[0, 2, 4],
                &[1, 3, 4],
                &[1, 2, 5],
                &[0, 3, 5],
                &[0, 4, 5],
            ],
        )?,
        "fano" => Hypergraph::from_lists(
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
        )?,
        _ => return Err(ConstructError::UnknownName),
    };
    Ok(h)
}

/// Samples uniform `r`-colourings of `K_m`, `m = floor(r / 6s)`, until one
/// has `val_f(base, s)` below the ceiling of `(s+1) * log2(r)`, then blows
/// it up to `n` vertices. Deterministic per seed.
pub fn random_base_blowup(r: u32, s: u32, n: u32, seed: u64) -> Result<EdgeColouring, ConstructError> {
    if s < 2 || s > r {
        return Err(ConstructError::BadParameters { what: "need 2 <= s <= r" });
    }
    let m = r / (6 * s);
    if m < 2 {
        return Err(ConstructError::BadParameters { what: "need floor(r / 6s) >= 2" });
    }
    if n < m {
        return Err(ConstructError::NTooSmall { n, min: m });
    }
    let threshold = ceil_log2_pow(r as u64, s + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u32, EdgeColouring)> = None;
    for _ in 0..RETRY_BUDGET {
        let base = EdgeColouring::from_fn(m, r, |_, _| rng.gen_range(0..r) as u16)?;
        let val = evaluate::val_f(&base, s).expect("s validated above");
        if val < threshold {
            let spec = BlowupSpec::new(base, n)?;
            let internal = min_incident_colour(&spec.base);
            return spec.blow_up(|p| internal[p as usize]);
        }
        if best.as_ref().map_or(true, |(bv, _)| val < *bv) {
            best = Some((val, base));
        }
    }
    let (best_val, best_base) = best.expect("budget is positive");
    Err(ConstructError::RetryBudget { draws: RETRY_BUDGET, best_val, best_base })
}
