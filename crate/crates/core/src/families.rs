//! Deterministic generators for the graph families used as examples and
//! extremal cases, plus an amply-regular parameter detector.

use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::{rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires n >= {min}, got {got}")]
    TooFewVertices {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("matching size must lie in 1..={max} for n = {n}, got {m}")]
    MatchingSizeOutOfRange { n: usize, m: usize, max: usize },
    #[error("hamming requires p >= 1 and q >= 2, got ({p}, {q})")]
    HammingParams { p: usize, q: usize },
    #[error("sharp example requires n - k odd, got n = {n}, k = {k}")]
    SharpExampleParity { n: usize, k: usize },
    #[error("sharp example requires (n+1)/3 <= k <= n-1, got n = {n}, k = {k}")]
    SharpExampleRange { n: usize, k: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge probability must lie in (0, 1], got {0}")]
    ProbabilityOutOfRange(String),
    #[error("no connected sample within {0} attempts")]
    RandomAttemptsExhausted(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    BadParameter { family: String, message: String },
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, &edges).expect("generator produced a malformed edge list")
}

/// Edgeless graph on `n` vertices (`n` copies of K_1).
pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooFewVertices {
            family: "empty",
            min: 1,
            got: n,
        });
    }
    Ok(build(n, Vec::new()))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooFewVertices {
            family: "complete",
            min: 1,
            got: n,
        });
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(build(n, edges))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    Ok(build(n, (0..n).map(|u| (u, (u + 1) % n)).collect()))
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooFewVertices {
            family: "path",
            min: 1,
            got: n,
        });
    }
    Ok(build(n, (1..n).map(|u| (u - 1, u)).collect()))
}

/// K_n minus the canonical matching `{0,1}, {2,3}, ..., {2m-2, 2m-1}`.
pub fn complete_minus_matching(n: usize, m: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices {
            family: "complete_minus_matching",
            min: 3,
            got: n,
        });
    }
    if m < 1 || m > n / 2 {
        return Err(FamilyError::MatchingSizeOutOfRange { n, m, max: n / 2 });
    }
    let removed = |u: usize, v: usize| u / 2 == v / 2 && u / 2 < m && u.abs_diff(v) == 1;
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !removed(u, v))
        .collect();
    Ok(build(n, edges))
}

/// Disjoint union; the second graph's vertices are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.n();
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
    build(offset + g2.n(), edges)
}

/// Join `g1 ∨ g2`: disjoint union plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.n();
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
    edges.extend((0..offset).flat_map(|u| (0..g2.n()).map(move |v| (u, offset + v))));
    build(offset + g2.n(), edges)
}

/// `2K_n ∨ g`: the join of two disjoint copies of K_n with `g`.
pub fn two_kn_join(n: usize, g: &Graph) -> Result<Graph, FamilyError> {
    let kn = complete(n)?;
    Ok(join(&disjoint_union(&kn, &kn), g))
}

/// The bowtie `2K_2 ∨ K_1`: two triangles sharing the apex vertex 4.
pub fn bowtie() -> Graph {
    two_kn_join(2, &empty(1).unwrap()).unwrap()
}

/// Cartesian product; vertex `(i, j)` is flattened row-major to `i * g2.n() + j`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    let mut edges = Vec::new();
    for (u, v) in g1.edges() {
        for j in 0..n2 {
            edges.push((u * n2 + j, v * n2 + j));
        }
    }
    for (u, v) in g2.edges() {
        for i in 0..g1.n() {
            edges.push((i * n2 + u, i * n2 + v));
        }
    }
    build(g1.n() * n2, edges)
}

/// Hamming graph H(p, q): the p-fold Cartesian product of K_q.
pub fn hamming(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if p < 1 || q < 2 {
        return Err(FamilyError::HammingParams { p, q });
    }
    let kq = complete(q)?;
    let mut g = kq.clone();
    for _ in 1..p {
        g = cartesian_product(&g, &kq);
    }
    Ok(g)
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + i));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// Extremal construction showing the connectivity-to-curvature bound tight:
/// a graph on `n` vertices with connectivity `k` and a marked edge `xy` of
/// curvature exactly `(2k - n + 2) / k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpExample {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    /// Private neighbors of `x` (resp. `y`), each of size `(n-k-1)/2`.
    pub nx: Vec<usize>,
    pub ny: Vec<usize>,
    /// Common neighborhood of `x` and `y`, of size `(3k-n-1)/2`.
    pub a: Vec<usize>,
    /// Vertices adjacent to neither `x` nor `y`, of size `(n-k-1)/2`.
    pub b: Vec<usize>,
}

/// Builds the sharp example on `n` vertices with target connectivity `k`.
///
/// Requires `n - k` odd and `(n+1)/3 <= k <= n-1`. For `k = n-1` the
/// construction degenerates to the complete graph. Otherwise the graph is
/// complete on `{x, y} ∪ N_x ∪ N_y ∪ A ∪ B` minus the edges from `x` to
/// `B ∪ N_y`, from `y` to `B ∪ N_x`, and all pairs between `N_x` and `N_y`.
/// Vertices are laid out in the fixed block order x, y, N_x, N_y, A, B, so
/// `x = 0` and `y = 1` always.
pub fn sharp_example(n: usize, k: usize) -> Result<SharpExample, FamilyError> {
    if k == 0 || 3 * k < n + 1 || k > n.saturating_sub(1) {
        return Err(FamilyError::SharpExampleRange { n, k });
    }
    if (n - k) % 2 == 0 {
        return Err(FamilyError::SharpExampleParity { n, k });
    }
    if k == n - 1 {
        return Ok(SharpExample {
            graph: complete(n)?,
            x: 0,
            y: 1,
            nx: Vec::new(),
            ny: Vec::new(),
            a: (2..n).collect(),
            b: Vec::new(),
        });
    }
    let side = (n - k - 1) / 2;
    let common = (3 * k - n - 1) / 2;
    let nx: Vec<usize> = (2..2 + side).collect();
    let ny: Vec<usize> = (2 + side..2 + 2 * side).collect();
    let a: Vec<usize> = (2 + 2 * side..2 + 2 * side + common).collect();
    let b: Vec<usize> = (2 + 2 * side + common..n).collect();
    debug_assert_eq!(b.len(), side);

    let in_nx = |v: usize| (2..2 + side).contains(&v);
    let in_ny = |v: usize| (2 + side..2 + 2 * side).contains(&v);
    let in_b = |v: usize| v >= 2 + 2 * side + common;
    let removed = |u: usize, v: usize| {
        (u == 0 && (in_b(v) || in_ny(v)))
            || (u == 1 && (in_b(v) || in_nx(v)))
            || (in_nx(u) && in_ny(v))
    };
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !removed(u, v))
        .collect();
    Ok(SharpExample {
        graph: build(n, edges),
        x: 0,
        y: 1,
        nx,
        ny,
        a,
        b,
    })
}

/// Parameters of an amply regular graph: `degree`-regular, every edge has
/// `alpha` common neighbors, every distance-2 pair has `beta` common
/// neighbors. `beta` is `None` when the graph has no distance-2 pair (then
/// the condition is vacuous and any `beta` fits).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplyRegularParams {
    pub degree: usize,
    pub alpha: usize,
    pub beta: Option<usize>,
}

impl AmplyRegularParams {
    /// Whether the detected parameters are consistent with `(d, alpha, beta)`,
    /// treating a vacuous `beta` as matching anything.
    pub fn matches(&self, degree: usize, alpha: usize, beta: usize) -> bool {
        self.degree == degree && self.alpha == alpha && self.beta.map_or(true, |b| b == beta)
    }
}

fn common_neighbor_count(g: &Graph, u: usize, v: usize) -> usize {
    g.neighbors(u)
        .iter()
        .filter(|w| g.has_edge(v, **w))
        .count()
}

/// Detects amply-regular parameters, or `None` when the graph is not amply
/// regular. Disconnected input is an error.
pub fn amply_regular_params(g: &Graph) -> Result<Option<AmplyRegularParams>, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    let degree = g.degree(0);
    if (1..g.n()).any(|v| g.degree(v) != degree) {
        return Ok(None);
    }
    let mut alpha: Option<usize> = None;
    let mut beta: Option<usize> = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let slot = match g.distance(u, v) {
                Some(1) => &mut alpha,
                Some(2) => &mut beta,
                _ => continue,
            };
            let count = common_neighbor_count(g, u, v);
            match slot {
                Some(existing) if *existing != count => return Ok(None),
                Some(_) => {}
                None => *slot = Some(count),
            }
        }
    }
    Ok(Some(AmplyRegularParams {
        degree,
        alpha: alpha.unwrap_or(0),
        beta,
    }))
}

/// A generated graph with a canonical label and optionally marked vertices
/// (the `x`, `y` of a sharp example).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub marked: Option<(usize, usize)>,
}

/// Builds a family from its command-line name and positional parameters.
///
/// Families: `complete N`, `cycle N`, `path N`, `kn-minus-matching N M`,
/// `join2kn N T`, `hamming P Q`, `product N M` (K_N x K_M),
/// `sharp-example N K`, `random N A/B` (seeded).
pub fn generate_named(family: &str, params: &[&str], seed: u64) -> Result<NamedGraph, FamilyError> {
    fn arg<T: std::str::FromStr>(
        family: &str,
        params: &[&str],
        index: usize,
        name: &str,
    ) -> Result<T, FamilyError> {
        let raw = params.get(index).ok_or_else(|| FamilyError::BadParameter {
            family: family.to_string(),
            message: format!("missing parameter <{name}>"),
        })?;
        raw.parse().map_err(|_| FamilyError::BadParameter {
            family: family.to_string(),
            message: format!("cannot parse <{name}> from {raw:?}"),
        })
    }
    fn arity(family: &str, params: &[&str], expected: usize) -> Result<(), FamilyError> {
        if params.len() == expected {
            Ok(())
        } else {
            Err(FamilyError::BadParameter {
                family: family.to_string(),
                message: format!("expected {expected} parameter(s), got {}", params.len()),
            })
        }
    }

    let name = if params.is_empty() {
        family.to_string()
    } else {
        format!("{family}({})", params.join(","))
    };
    let mut marked = None;
    let graph = match family {
        "complete" => {
            arity(family, params, 1)?;
            complete(arg(family, params, 0, "n")?)?
        }
        "cycle" => {
            arity(family, params, 1)?;
            cycle(arg(family, params, 0, "n")?)?
        }
        "path" => {
            arity(family, params, 1)?;
            path(arg(family, params, 0, "n")?)?
        }
        "kn-minus-matching" => {
            arity(family, params, 2)?;
            complete_minus_matching(arg(family, params, 0, "n")?, arg(family, params, 1, "m")?)?
        }
        "join2kn" => {
            arity(family, params, 2)?;
            let n = arg(family, params, 0, "n")?;
            let isolated = arg(family, params, 1, "t")?;
            two_kn_join(n, &empty(isolated)?)?
        }
        "hamming" => {
            arity(family, params, 2)?;
            hamming(arg(family, params, 0, "p")?, arg(family, params, 1, "q")?)?
        }
        "product" => {
            arity(family, params, 2)?;
            let a = complete(arg(family, params, 0, "n")?)?;
            let b = complete(arg(family, params, 1, "m")?)?;
            cartesian_product(&a, &b)
        }
        "sharp-example" => {
            arity(family, params, 2)?;
            let se = sharp_example(arg(family, params, 0, "n")?, arg(family, params, 1, "k")?)?;
            marked = Some((se.x, se.y));
            se.graph
        }
        "random" => {
            arity(family, params, 2)?;
            let n = arg(family, params, 0, "n")?;
            let p: Rational = arg(family, params, 1, "probability")?;
            random_connected(n, &p, seed)?
        }
        other => return Err(FamilyError::UnknownFamily(other.to_string())),
    };
    Ok(NamedGraph {
        name,
        graph,
        marked,
    })
}

const RANDOM_ATTEMPT_CAP: usize = 1000;

/// Erdős–Rényi G(n, p) sample, resampled until connected. Deterministic for a
/// fixed seed; the probability is exact (`gen_ratio` on the reduced fraction).
pub fn random_connected(n: usize, p: &Rational, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooFewVertices {
            family: "random_connected",
            min: 1,
            got: n,
        });
    }
    if !p.is_positive() || p > &rat(1) {
        return Err(FamilyError::ProbabilityOutOfRange(p.to_string()));
    }
    let numer = p
        .numer()
        .to_u32()
        .ok_or_else(|| FamilyError::ProbabilityOutOfRange(p.to_string()))?;
    let denom = p
        .denom()
        .to_u32()
        .ok_or_else(|| FamilyError::ProbabilityOutOfRange(p.to_string()))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPT_CAP {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_ratio(numer, denom) {
                    edges.push((u, v));
                }
            }
        }
        let g = build(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::RandomAttemptsExhausted(RANDOM_ATTEMPT_CAP))
}
