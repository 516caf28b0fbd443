//! Dynamic 4-coloring of connected graphs with no K5 minor, other than C5.
//!
//! The graph is split along a separation of order 1, 2 or 3, the pieces are
//! colored recursively and the colorings are glued after permuting colors.
//! Planar pieces, pieces on at most 8 vertices and subdivisions of V8 are
//! handed to the exact solver.

mod merge;

pub use merge::{
    check_order2, check_order3, lift_three_cut, merge_colorings, select_separation2, C5Table, NotApplicable,
};

use std::collections::BTreeSet;
use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::dynamic::{verify_dynamic, Coloring, ExactSolver, Timeout};
use crate::generate::complete;
use crate::graph::{suppress_degree_two, Graph, Separation, Vertex};
use crate::minor::{classify_3connected, has_minor, is_planar, HalinVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    PlanarBase,
    V8Base,
    Order1,
    Order2Case1,
    Order2Case2,
    Order3Case1,
    Order3Case2,
    Order3Case3,
    C5Fallback(C5Table),
    /// A side condition failed at run time and the piece went to the exact
    /// solver instead.
    OracleFallback,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::C5Fallback(t) => write!(f, "C5Fallback({t:?})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub rule: Rule,
    pub separator: Vec<Vertex>,
    pub vertices: usize,
    pub edges: usize,
    /// Graphs colored on behalf of this step (recursively or by table).
    pub children: Vec<Graph>,
    pub note: Option<String>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} n={} m={}", "  ".repeat(self.depth), self.rule, self.vertices, self.edges)?;
        if !self.separator.is_empty() {
            let sep: Vec<String> = self.separator.iter().map(|v| v.to_string()).collect();
            write!(f, " sep={{{}}}", sep.join(","))?;
        }
        if !self.children.is_empty() {
            let kids: Vec<String> =
                self.children.iter().map(|c| format!("({},{})", c.vertex_count(), c.edge_count())).collect();
            write!(f, " children=[{}]", kids.join(","))?;
        }
        if let Some(note) = &self.note {
            write!(f, " note=\"{note}\"")?;
        }
        Ok(())
    }
}

/// Which rule fired at each recursion step, in depth-first order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn fallbacks(&self) -> usize {
        self.steps.iter().filter(|s| s.rule == Rule::OracleFallback).count()
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    /// Every child graph has fewer edges than the graph of its step.
    pub fn edges_decrease(&self) -> bool {
        self.steps.iter().all(|s| s.children.iter().all(|c| c.edge_count() < s.edges))
    }
}

#[derive(Debug, Clone, Error)]
pub enum K5FreeError {
    #[error("C5 has no dynamic 4-coloring")]
    NotColorable,
    #[error("graph has a K5 minor")]
    HasK5Minor,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("internal error: {reason}")]
    Internal { reason: String, trace: ReductionTrace },
    #[error(transparent)]
    Timeout(#[from] Timeout),
}

/// Configuration for [`Colorer::color`].
#[derive(Debug, Clone)]
pub struct Colorer {
    check_minor: bool,
    time_limit: Option<Duration>,
}

impl Default for Colorer {
    fn default() -> Self {
        Colorer { check_minor: true, time_limit: None }
    }
}

/// Colors `g` with the default configuration.
pub fn color_k5free(g: &Graph) -> Result<(Coloring, ReductionTrace), K5FreeError> {
    Colorer::default().color(g)
}

impl Colorer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Skips the up-front K5-minor test, for callers that already know.
    pub fn trust_input(mut self) -> Self {
        self.check_minor = false;
        self
    }

    /// Bounds each exact-solver call.
    pub fn time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn color(&self, g: &Graph) -> Result<(Coloring, ReductionTrace), K5FreeError> {
        if !g.is_connected() {
            return Err(K5FreeError::Disconnected);
        }
        if g.is_c5() {
            return Err(K5FreeError::NotColorable);
        }
        if self.check_minor && has_minor(g, &complete(5)) {
            return Err(K5FreeError::HasK5Minor);
        }
        let mut run = Run { cfg: self, trace: ReductionTrace::default() };
        let c = run.color(g, 0)?;
        if !verify_dynamic(g, &c).ok {
            return Err(run.internal("final coloring failed verification"));
        }
        Ok((c, run.trace))
    }
}

struct Run<'a> {
    cfg: &'a Colorer,
    trace: ReductionTrace,
}

impl Run<'_> {
    fn internal(&self, reason: impl Into<String>) -> K5FreeError {
        K5FreeError::Internal { reason: reason.into(), trace: self.trace.clone() }
    }

    fn step(&mut self, depth: usize, rule: Rule, g: &Graph, separator: &BTreeSet<Vertex>) -> usize {
        self.trace.steps.push(TraceStep {
            depth,
            rule,
            separator: separator.iter().copied().collect(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            children: Vec::new(),
            note: None,
        });
        self.trace.steps.len() - 1
    }

    fn exact(&self, g: &Graph) -> Result<Option<Coloring>, K5FreeError> {
        let mut solver = ExactSolver::new(4);
        if let Some(limit) = self.cfg.time_limit {
            solver = solver.time_limit(limit);
        }
        Ok(solver.solve(g, &Coloring::new(4))?)
    }

    fn base(&mut self, g: &Graph, depth: usize, rule: Rule, note: Option<String>) -> Result<Coloring, K5FreeError> {
        let i = self.step(depth, rule, g, &BTreeSet::new());
        self.trace.steps[i].note = note;
        self.exact(g)?.ok_or_else(|| self.internal(format!("{rule} piece has no dynamic 4-coloring")))
    }

    fn fallback(&mut self, g: &Graph, depth: usize, reason: String) -> Result<Coloring, K5FreeError> {
        self.base(g, depth, Rule::OracleFallback, Some(reason))
    }

    /// Colors an auxiliary graph: by table when it is C5, else recursively.
    fn color_child(
        &mut self,
        step: usize,
        child: Graph,
        depth: usize,
        table: Option<(C5Table, Vertex, Option<Vertex>)>,
    ) -> Result<Coloring, K5FreeError> {
        self.trace.steps[step].children.push(child.clone());
        if child.is_c5() {
            let Some((t, start, last)) = table else {
                return Err(self.internal("unexpected C5 piece"));
            };
            self.step(depth + 1, Rule::C5Fallback(t), &child, &BTreeSet::from([start]));
            return Ok(t.apply(&child, start, last));
        }
        self.color(&child, depth + 1)
    }

    fn color(&mut self, g: &Graph, depth: usize) -> Result<Coloring, K5FreeError> {
        if g.vertex_count() <= 8 || is_planar(g) {
            return self.base(g, depth, Rule::PlanarBase, None);
        }
        let cuts = g.cut_vertices().map_err(|e| self.internal(e.to_string()))?;
        if let Some(&v) = cuts.first() {
            return self.order1(g, v, depth);
        }
        match select_separation2(g) {
            Ok(sep) => return self.order2(g, sep, depth),
            Err(_) if !g.nontrivial_two_cuts().is_empty() => {
                return self.fallback(g, depth, "no order-2 separation with a nonplanar side".into());
            }
            Err(_) => {}
        }
        let map = match suppress_degree_two(g) {
            Ok(m) => m,
            Err(e) => return self.fallback(g, depth, format!("suppression failed: {e}")),
        };
        match classify_3connected(&map.suppressed) {
            Ok(HalinVerdict::IsV8) => self.base(g, depth, Rule::V8Base, None),
            Ok(HalinVerdict::ThreeCut(x)) => {
                // Branch vertices keep their identifiers.
                let x: BTreeSet<Vertex> = x.iter().map(|v| map.branch_map[v]).collect();
                match lift_three_cut(g, &x) {
                    Ok(sep) => self.order3(g, sep, depth),
                    Err(e) => self.fallback(g, depth, e.to_string()),
                }
            }
            Ok(HalinVerdict::Planar) => self.fallback(g, depth, "suppressed graph is planar".into()),
            Err(e) => self.fallback(g, depth, e.to_string()),
        }
    }

    fn order1(&mut self, g: &Graph, v: Vertex, depth: usize) -> Result<Coloring, K5FreeError> {
        let vs = BTreeSet::from([v]);
        let comps = g.components_without(&vs);
        let mut a = comps[0].clone();
        a.insert(v);
        let mut b: BTreeSet<Vertex> = g.vertices().filter(|w| !a.contains(w)).collect();
        b.insert(v);
        if g.induced(&b).is_c5() {
            std::mem::swap(&mut a, &mut b);
        }
        let sep = Separation::new_unchecked(a, b);
        let step = self.step(depth, Rule::Order1, g, &vs);
        let (g1, g2) = (g.induced(sep.a()), g.induced(sep.b()));
        let c1 = self.color_child(step, g1, depth, Some((C5Table::Order1, v, None)))?;
        let c2 = self.color_child(step, g2, depth, None)?;
        merge_colorings(g, &sep, &c1, &c2).ok_or_else(|| self.internal("no permutation merges an order-1 split"))
    }

    fn order2(&mut self, g: &Graph, mut sep: Separation, depth: usize) -> Result<Coloring, K5FreeError> {
        if g.induced(sep.a()).is_c5() {
            sep = sep.swapped();
        }
        if let Err(e) = check_order2(g, &sep) {
            return self.fallback(g, depth, e.to_string());
        }
        let xs = sep.separator();
        let (x, y) = (*xs.first().unwrap(), *xs.last().unwrap());
        let g1 = g.induced(sep.a());
        let gb = g.induced(sep.b());
        if !valid_side(g, &g1) {
            return self.fallback(g, depth, "side A is not a valid piece".into());
        }
        let step = self.step(depth, Rule::Order2Case1, g, &xs);
        let c1 = self.color_child(step, g1, depth, None)?;
        let case1 = c1.get(x) != c1.get(y);
        let rule = if case1 { Rule::Order2Case1 } else { Rule::Order2Case2 };
        self.trace.steps[step].rule = rule;
        let c2 = if case1 {
            let aux = gb.add_edge(x, y).unwrap();
            self.guard(g, &aux)?;
            self.color_child(step, aux, depth, Some((C5Table::Order2Case1, x, Some(y))))?
        } else {
            if !merge::attached_exactly(g, &sep.b_only(), &xs).is_empty() {
                return Err(self.internal("order-2 case 2 with a vertex of B \\ A attached exactly to {x, y}"));
            }
            let aux = gb.identify(x, y).unwrap();
            self.guard(g, &aux)?;
            let c = self.color_child(step, aux, depth, Some((C5Table::Order2Case2, x, None)))?;
            expand(&c, &[(y, x)])
        };
        merge_colorings(g, &sep, &c1, &c2).ok_or_else(|| self.internal(format!("no permutation merges {rule}")))
    }

    fn order3(&mut self, g: &Graph, sep: Separation, depth: usize) -> Result<Coloring, K5FreeError> {
        let xs = sep.separator();
        let g1 = g.induced(sep.a());
        let gb = g.induced(sep.b());
        if !valid_side(g, &g1) {
            return self.fallback(g, depth, "side A is not a valid piece".into());
        }
        let step = self.step(depth, Rule::Order3Case1, g, &xs);
        let c1 = self.color_child(step, g1, depth, None)?;
        let v: Vec<Vertex> = xs.iter().copied().collect();
        let col: Vec<usize> = v.iter().map(|&s| c1.get(s).unwrap()).collect();
        let distinct = col.iter().collect::<BTreeSet<_>>().len();
        let rule = match distinct {
            3 => Rule::Order3Case1,
            2 => Rule::Order3Case2,
            _ => Rule::Order3Case3,
        };
        self.trace.steps[step].rule = rule;
        let c2 = match distinct {
            3 => {
                let aux = gb.add_edge(v[0], v[1]).unwrap().add_edge(v[1], v[2]).unwrap().add_edge(v[0], v[2]).unwrap();
                self.guard(g, &aux)?;
                self.color_child(step, aux, depth, None)?
            }
            2 => {
                // p, q share a color; r is the odd one out.
                let (p, q, r) = if col[0] == col[1] {
                    (v[0], v[1], v[2])
                } else if col[0] == col[2] {
                    (v[0], v[2], v[1])
                } else {
                    (v[1], v[2], v[0])
                };
                let aux = gb.add_edge(p, q).unwrap().add_edge(q, r).unwrap().contract_edge(p, q).unwrap();
                self.guard(g, &aux)?;
                let m = p.min(q);
                let c = self.color_child(step, aux, depth, Some((C5Table::Order3Case2, m, Some(r))))?;
                expand(&c, &[(p.max(q), m)])
            }
            _ => {
                if !merge::attached_exactly(g, &sep.b_only(), &xs).is_empty() {
                    return Err(self.internal("order-3 case 3 with a vertex of B \\ A attached exactly to the separator"));
                }
                let aux = gb
                    .add_edge(v[0], v[1])
                    .unwrap()
                    .add_edge(v[1], v[2])
                    .unwrap()
                    .contract_edge(v[0], v[1])
                    .unwrap()
                    .contract_edge(v[0], v[2])
                    .unwrap();
                self.guard(g, &aux)?;
                let c = self.color_child(step, aux, depth, Some((C5Table::Order3Case3, v[0], None)))?;
                expand(&c, &[(v[1], v[0]), (v[2], v[0])])
            }
        };
        merge_colorings(g, &sep, &c1, &c2).ok_or_else(|| self.internal(format!("no permutation merges {rule}")))
    }

    /// Auxiliary graphs must be connected and strictly smaller.
    fn guard(&self, g: &Graph, aux: &Graph) -> Result<(), K5FreeError> {
        if !aux.is_connected() {
            return Err(self.internal("auxiliary graph is disconnected"));
        }
        if aux.edge_count() >= g.edge_count() {
            return Err(self.internal("auxiliary graph does not have fewer edges"));
        }
        Ok(())
    }
}

/// Side `A` of a split is itself a valid input: connected, not C5, smaller.
fn valid_side(g: &Graph, g1: &Graph) -> bool {
    g1.is_connected() && !g1.is_c5() && g1.edge_count() < g.edge_count()
}

/// Gives each `(gone, kept)` vertex the color of `kept`.
fn expand(c: &Coloring, merged: &[(Vertex, Vertex)]) -> Coloring {
    let mut out = c.clone();
    for &(gone, kept) in merged {
        out.set(gone, c.get(kept).expect("merged vertex is colored")).unwrap();
    }
    out
}
