//! Exact Wasserstein distance between finitely supported measures under the
//! graph hop metric.
//!
//! The solver scales both measures by the least common multiple of their mass
//! denominators, solves an integer min-cost flow on the complete bipartite
//! support-to-support network (successive shortest paths with potentials),
//! and descales. Every call returns three artifacts that certify each other:
//!
//! * the optimal value,
//! * a primal [`TransportPlan`] attaining it, and
//! * a [`DualCertificate`]: a 1-Lipschitz potential whose Kantorovich
//!   objective equals the value. Rational equality, no tolerances.
//!
//! The certificate is checked before it is returned; a failed check is a
//! solver bug and surfaces as [`TransportError::CertificateInvalid`].

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::{denominator_lcm, rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransportError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(String),
    #[error("isolated vertex {0} cannot spread mass to neighbors")]
    IsolatedVertex(usize),
    #[error("negative mass at vertex {0}")]
    NegativeMass(usize),
    #[error("negative mass on pair ({0}, {1})")]
    NegativePairMass(usize, usize),
    #[error("measure masses sum to {0}, expected 1")]
    TotalMassNotOne(String),
    #[error("measure supports lie in different components")]
    DisconnectedSupports,
    #[error("positive mass on unreachable pair ({0}, {1})")]
    UnreachablePair(usize, usize),
    #[error("forced entries are infeasible at vertex {0}")]
    InfeasibleForcing(usize),
    #[error("partial plan exceeds the row marginal at vertex {0}")]
    RowMarginalExceeded(usize),
    #[error("partial plan exceeds the column marginal at vertex {0}")]
    ColumnMarginalExceeded(usize),
    #[error("graph diameter exceeds two")]
    DiameterExceedsTwo,
    #[error("internal error: dual certificate failed verification")]
    CertificateInvalid,
}

/// Finitely supported probability measure on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    mass: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Builds a measure from `(vertex, mass)` entries. Duplicate vertices are
    /// accumulated, zero entries dropped. The masses must be nonnegative and
    /// sum to exactly 1.
    pub fn new(
        n: usize,
        entries: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self, TransportError> {
        let mut mass: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, m) in entries {
            if v >= n {
                return Err(TransportError::VertexOutOfRange { vertex: v, n });
            }
            *mass.entry(v).or_insert_with(Rational::zero) += m;
        }
        for (&v, m) in &mass {
            if m.is_negative() {
                return Err(TransportError::NegativeMass(v));
            }
        }
        mass.retain(|_, m| !m.is_zero());
        let total: Rational = mass.values().cloned().sum();
        if !total.is_one() {
            return Err(TransportError::TotalMassNotOne(total.to_string()));
        }
        Ok(Measure { mass })
    }

    pub fn get(&self, v: usize) -> Rational {
        self.mass.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mass.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.mass.iter().map(|(&v, m)| (v, m))
    }
}

/// The lazy random-walk measure `μ_x^p`: mass `p` at `x` and `(1-p)/d_x` at
/// each neighbor of `x`.
pub fn vertex_measure(g: &Graph, x: usize, p: &Rational) -> Result<Measure, TransportError> {
    if x >= g.n() {
        return Err(TransportError::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if p.is_negative() || p > &rat(1) {
        return Err(TransportError::ProbabilityOutOfRange(p.to_string()));
    }
    let rest = rat(1) - p;
    let mut entries = vec![(x, p.clone())];
    if !rest.is_zero() {
        let degree = g.degree(x);
        if degree == 0 {
            return Err(TransportError::IsolatedVertex(x));
        }
        let share = rest / rat(degree as i64);
        entries.extend(g.neighbors(x).iter().map(|&v| (v, share.clone())));
    }
    Measure::new(g.n(), entries)
}

/// Nonnegative mass assignment on vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransportPlan {
    mass: BTreeMap<(usize, usize), Rational>,
}

impl TransportPlan {
    /// Accumulates `((source, target), mass)` entries; zero entries are
    /// dropped, negative ones rejected.
    pub fn new(
        entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Result<Self, TransportError> {
        let mut mass: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (pair, m) in entries {
            *mass.entry(pair).or_insert_with(Rational::zero) += m;
        }
        for (&(u, v), m) in &mass {
            if m.is_negative() {
                return Err(TransportError::NegativePairMass(u, v));
            }
        }
        mass.retain(|_, m| !m.is_zero());
        Ok(TransportPlan { mass })
    }

    pub fn get(&self, u: usize, v: usize) -> Rational {
        self.mass
            .get(&(u, v))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.mass.iter().map(|(&p, m)| (p, m))
    }

    pub fn total_mass(&self) -> Rational {
        self.mass.values().cloned().sum()
    }

    /// Sum of each row, i.e. the measure this plan transports from.
    pub fn row_marginals(&self) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(u, _), m) in &self.mass {
            *out.entry(u).or_insert_with(Rational::zero) += m.clone();
        }
        out
    }

    /// Sum of each column, i.e. the measure this plan transports to.
    pub fn column_marginals(&self) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(_, v), m) in &self.mass {
            *out.entry(v).or_insert_with(Rational::zero) += m.clone();
        }
        out
    }

    /// Whether the marginals equal `mu1` and `mu2` exactly.
    pub fn is_coupling_of(&self, mu1: &Measure, mu2: &Measure) -> bool {
        self.row_marginals() == mu1.mass && self.column_marginals() == mu2.mass
    }
}

/// Exact cost `Σ d(u, v) π(u, v)` of a plan.
pub fn plan_cost(g: &Graph, plan: &TransportPlan) -> Result<Rational, TransportError> {
    let mut cost = Rational::zero();
    for ((u, v), m) in plan.iter() {
        match g.distance(u, v) {
            Some(d) => cost += rat(d as i64) * m.clone(),
            None => return Err(TransportError::UnreachablePair(u, v)),
        }
    }
    Ok(cost)
}

/// Kantorovich dual witness: a 1-Lipschitz potential whose objective
/// `Σ f (μ1 - μ2)` equals the primal optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    /// Potential values on the component containing both supports.
    pub potential: BTreeMap<usize, Rational>,
    pub objective: Rational,
}

impl DualCertificate {
    /// Re-checks the certificate from scratch: the potential must be
    /// 1-Lipschitz on every reachable pair of its domain, and its objective
    /// against `mu1 - mu2` must equal the stored objective exactly.
    pub fn verify(&self, g: &Graph, mu1: &Measure, mu2: &Measure) -> Result<(), TransportError> {
        let domain: Vec<usize> = self.potential.keys().copied().collect();
        for (i, &u) in domain.iter().enumerate() {
            for &v in &domain[i + 1..] {
                if let Some(d) = g.distance(u, v) {
                    let gap = (&self.potential[&u] - &self.potential[&v]).abs();
                    if gap > rat(d as i64) {
                        return Err(TransportError::CertificateInvalid);
                    }
                }
            }
        }
        let mut objective = Rational::zero();
        for (v, m) in mu1.iter() {
            match self.potential.get(&v) {
                Some(f) => objective += f * m,
                None => return Err(TransportError::CertificateInvalid),
            }
        }
        for (v, m) in mu2.iter() {
            match self.potential.get(&v) {
                Some(f) => objective -= f * m,
                None => return Err(TransportError::CertificateInvalid),
            }
        }
        if objective == self.objective {
            Ok(())
        } else {
            Err(TransportError::CertificateInvalid)
        }
    }
}

/// Optimal transport between two measures: value, an optimal plan, and a
/// dual certificate of optimality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    pub value: Rational,
    pub plan: TransportPlan,
    pub dual: DualCertificate,
}

/// Exact Wasserstein distance `W(mu1, mu2)` with primal and dual witnesses.
pub fn wasserstein(g: &Graph, mu1: &Measure, mu2: &Measure) -> Result<Transport, TransportError> {
    let anchor = mu1
        .support()
        .chain(mu2.support())
        .next()
        .expect("probability measures have nonempty support");
    for v in mu1.support().chain(mu2.support()) {
        if g.distance(anchor, v).is_none() {
            return Err(TransportError::DisconnectedSupports);
        }
    }

    let sources: Vec<(usize, Rational)> = mu1.iter().map(|(v, m)| (v, m.clone())).collect();
    let sinks: Vec<(usize, Rational)> = mu2.iter().map(|(v, m)| (v, m.clone())).collect();
    let scale = denominator_lcm(sources.iter().chain(sinks.iter()).map(|(_, m)| m));
    let scale_rat = Rational::from_integer(scale.clone());
    let to_int = |m: &Rational| (m * &scale_rat).to_integer();

    let supplies: Vec<BigInt> = sources.iter().map(|(_, m)| to_int(m)).collect();
    let demands: Vec<BigInt> = sinks.iter().map(|(_, m)| to_int(m)).collect();
    let costs: Vec<Vec<i64>> = sources
        .iter()
        .map(|&(u, _)| {
            sinks
                .iter()
                .map(|&(v, _)| i64::from(g.distance(u, v).expect("checked same component")))
                .collect()
        })
        .collect();

    let flow = min_cost_transport(&costs, &supplies, &demands);

    let value = Rational::new(flow.cost, scale.clone());
    let plan = TransportPlan::new(flow.flows.iter().map(|&(i, j, ref amount)| {
        (
            (sources[i].0, sinks[j].0),
            Rational::new(amount.clone(), scale.clone()),
        )
    }))?;

    // Kantorovich potential from the final sink potentials, extended to the
    // whole component by the tight Lipschitz extension
    //   f(v) = min over sinks w of (d(v, w) - phi(w)),
    // then shifted so the smallest domain vertex gets 0.
    let mut raw: BTreeMap<usize, i64> = BTreeMap::new();
    for v in 0..g.n() {
        let mut best: Option<i64> = None;
        for (j, &(w, _)) in sinks.iter().enumerate() {
            if let Some(d) = g.distance(v, w) {
                let candidate = i64::from(d) - flow.sink_potentials[j];
                best = Some(best.map_or(candidate, |b| b.min(candidate)));
            }
        }
        if let Some(f) = best {
            raw.insert(v, f);
        }
    }
    let shift = raw
        .first_key_value()
        .map(|(_, &f)| f)
        .expect("domain contains the supports");
    let potential: BTreeMap<usize, Rational> =
        raw.into_iter().map(|(v, f)| (v, rat(f - shift))).collect();
    let dual = DualCertificate {
        potential,
        objective: value.clone(),
    };
    dual.verify(g, mu1, mu2)?;

    Ok(Transport { value, plan, dual })
}

/// Minimum plan cost subject to fixed entries.
///
/// Forced masses are deducted from both marginals and their cost added as a
/// constant, so the same solver handles the remainder. Infeasible forcings
/// (exceeding a marginal, or positive mass on an unreachable pair) are
/// rejected.
pub fn wasserstein_forced(
    g: &Graph,
    mu1: &Measure,
    mu2: &Measure,
    forced: &[((usize, usize), Rational)],
) -> Result<Rational, TransportError> {
    let mut remaining1: BTreeMap<usize, Rational> =
        mu1.iter().map(|(v, m)| (v, m.clone())).collect();
    let mut remaining2: BTreeMap<usize, Rational> =
        mu2.iter().map(|(v, m)| (v, m.clone())).collect();
    let mut forced_cost = Rational::zero();
    for ((u, v), m) in forced {
        if m.is_negative() {
            return Err(TransportError::NegativePairMass(*u, *v));
        }
        if m.is_zero() {
            continue;
        }
        let d = g
            .distance(*u, *v)
            .ok_or(TransportError::UnreachablePair(*u, *v))?;
        forced_cost += rat(d as i64) * m;
        let row = remaining1
            .get_mut(u)
            .ok_or(TransportError::InfeasibleForcing(*u))?;
        *row -= m;
        if row.is_negative() {
            return Err(TransportError::InfeasibleForcing(*u));
        }
        let col = remaining2
            .get_mut(v)
            .ok_or(TransportError::InfeasibleForcing(*v))?;
        *col -= m;
        if col.is_negative() {
            return Err(TransportError::InfeasibleForcing(*v));
        }
    }
    remaining1.retain(|_, m| !m.is_zero());
    remaining2.retain(|_, m| !m.is_zero());
    if remaining1.is_empty() {
        return Ok(forced_cost);
    }

    let anchor = *remaining1.keys().next().unwrap();
    for v in remaining1.keys().chain(remaining2.keys()) {
        if g.distance(anchor, *v).is_none() {
            return Err(TransportError::DisconnectedSupports);
        }
    }
    let sources: Vec<(usize, Rational)> = remaining1.into_iter().collect();
    let sinks: Vec<(usize, Rational)> = remaining2.into_iter().collect();
    let scale = denominator_lcm(sources.iter().chain(sinks.iter()).map(|(_, m)| m));
    let scale_rat = Rational::from_integer(scale.clone());
    let supplies: Vec<BigInt> = sources.iter().map(|(_, m)| (m * &scale_rat).to_integer()).collect();
    let demands: Vec<BigInt> = sinks.iter().map(|(_, m)| (m * &scale_rat).to_integer()).collect();
    let costs: Vec<Vec<i64>> = sources
        .iter()
        .map(|&(u, _)| {
            sinks
                .iter()
                .map(|&(v, _)| i64::from(g.distance(u, v).expect("checked same component")))
                .collect()
        })
        .collect();
    let flow = min_cost_transport(&costs, &supplies, &demands);
    Ok(forced_cost + Rational::new(flow.cost, scale))
}

/// The diameter-two upper bound `2 (1 - Σ π₀) + Σ d(x, y) π₀(x, y)` for a
/// partial plan `π₀` whose row and column sums are dominated by `mu1` and
/// `mu2`. Requires the graph to have diameter at most two.
pub fn plan_upper_bound(
    g: &Graph,
    partial: &TransportPlan,
    mu1: &Measure,
    mu2: &Measure,
) -> Result<Rational, TransportError> {
    match g.diameter() {
        Some(d) if d <= 2 => {}
        _ => return Err(TransportError::DiameterExceedsTwo),
    }
    for (v, total) in partial.row_marginals() {
        if total > mu1.get(v) {
            return Err(TransportError::RowMarginalExceeded(v));
        }
    }
    for (v, total) in partial.column_marginals() {
        if total > mu2.get(v) {
            return Err(TransportError::ColumnMarginalExceeded(v));
        }
    }
    let moved = plan_cost(g, partial)?;
    Ok(rat(2) * (rat(1) - partial.total_mass()) + moved)
}

struct FlowResult {
    cost: BigInt,
    flows: Vec<(usize, usize, BigInt)>,
    sink_potentials: Vec<i64>,
}

struct Arc {
    to: usize,
    residual: BigInt,
    cost: i64,
}

/// Successive shortest paths with potentials on the bipartite
/// source-to-sink network.
///
/// Source→sink arcs get capacity `total + 1`, so they never saturate; this
/// keeps the forward residual alive on every pair, which is what makes the
/// final potentials dual-feasible on the whole support product (not just on
/// flow-carrying arcs).
fn min_cost_transport(costs: &[Vec<i64>], supplies: &[BigInt], demands: &[BigInt]) -> FlowResult {
    let ns = supplies.len();
    let nt = demands.len();
    let total: BigInt = supplies.iter().sum();
    debug_assert_eq!(total, demands.iter().sum::<BigInt>());

    let source = ns + nt;
    let target = source + 1;
    let node_count = target + 1;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let push_arc = |arcs: &mut Vec<Arc>,
                        adjacency: &mut Vec<Vec<usize>>,
                        from: usize,
                        to: usize,
                        capacity: BigInt,
                        cost: i64| {
        adjacency[from].push(arcs.len());
        arcs.push(Arc {
            to,
            residual: capacity,
            cost,
        });
        adjacency[to].push(arcs.len());
        arcs.push(Arc {
            to: from,
            residual: BigInt::zero(),
            cost: -cost,
        });
    };

    for (i, supply) in supplies.iter().enumerate() {
        push_arc(&mut arcs, &mut adjacency, source, i, supply.clone(), 0);
    }
    for (j, demand) in demands.iter().enumerate() {
        push_arc(&mut arcs, &mut adjacency, ns + j, target, demand.clone(), 0);
    }
    let unbounded = &total + BigInt::one();
    let mut pair_arc = vec![vec![0usize; nt]; ns];
    for i in 0..ns {
        for j in 0..nt {
            pair_arc[i][j] = arcs.len();
            push_arc(&mut arcs, &mut adjacency, i, ns + j, unbounded.clone(), costs[i][j]);
        }
    }

    const INF: i64 = i64::MAX / 4;
    let mut potential = vec![0i64; node_count];
    let mut remaining = total;
    while remaining.is_positive() {
        // Dijkstra over reduced costs.
        let mut dist = vec![INF; node_count];
        let mut parent: Vec<Option<usize>> = vec![None; node_count];
        let mut heap = BinaryHeap::new();
        dist[source] = 0;
        heap.push(Reverse((0i64, source)));
        while let Some(Reverse((du, u))) = heap.pop() {
            if du > dist[u] {
                continue;
            }
            for &a in &adjacency[u] {
                if !arcs[a].residual.is_positive() {
                    continue;
                }
                let v = arcs[a].to;
                let dv = du + arcs[a].cost + potential[u] - potential[v];
                if dv < dist[v] {
                    dist[v] = dv;
                    parent[v] = Some(a);
                    heap.push(Reverse((dv, v)));
                }
            }
        }
        assert!(dist[target] < INF, "transport network must stay connected");
        for v in 0..node_count {
            potential[v] += dist[v].min(dist[target]);
        }

        let mut bottleneck = remaining.clone();
        let mut v = target;
        while let Some(a) = parent[v] {
            bottleneck = bottleneck.min(arcs[a].residual.clone());
            v = arcs[a ^ 1].to;
        }
        let mut v = target;
        while let Some(a) = parent[v] {
            arcs[a].residual -= &bottleneck;
            arcs[a ^ 1].residual += &bottleneck;
            v = arcs[a ^ 1].to;
        }
        remaining -= bottleneck;
    }

    let mut cost = BigInt::zero();
    let mut flows = Vec::new();
    for i in 0..ns {
        for j in 0..nt {
            // The reverse arc's residual is exactly the flow pushed forward.
            let flow = arcs[pair_arc[i][j] ^ 1].residual.clone();
            if flow.is_positive() {
                cost += &flow * BigInt::from(costs[i][j]);
                flows.push((i, j, flow));
            }
        }
    }
    FlowResult {
        cost,
        flows,
        sink_potentials: (0..nt).map(|j| potential[ns + j]).collect(),
    }
}
