//! Desk-scale comparison of the constructive 4-colorer with the exact solver.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::dynamic::{verify_dynamic, ExactSolver, Coloring};
use crate::enumerate::connected_graphs_between;
use crate::generate::complete;
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::k5free::{Colorer, K5FreeError};
use crate::minor::has_minor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Verified coloring with this many colors.
    Colored { colors: usize },
    /// The five-cycle, correctly rejected.
    SkippedC5,
    /// Contains a K5 minor.
    FilteredK5,
    Disconnected,
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct SweepEntry {
    pub graph6: String,
    pub outcome: Outcome,
    pub fallbacks: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    /// Sorted by graph6 string.
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    fn count(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.entries.iter().filter(|e| f(&e.outcome)).count()
    }

    pub fn colored(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Colored { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| *o == Outcome::SkippedC5)
    }

    pub fn filtered(&self) -> usize {
        self.count(|o| matches!(o, Outcome::FilteredK5 | Outcome::Disconnected))
    }

    pub fn failures(&self) -> Vec<&SweepEntry> {
        self.entries.iter().filter(|e| matches!(e.outcome, Outcome::Failed(_))).collect()
    }

    pub fn fallbacks(&self) -> usize {
        self.entries.iter().map(|e| e.fallbacks).sum()
    }

    pub fn max_elapsed(&self) -> Duration {
        self.entries.iter().map(|e| e.elapsed).max().unwrap_or_default()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graphs={} colored={} skipped_c5={} filtered={} failures={} fallbacks={} max_time={:?}",
            self.entries.len(),
            self.colored(),
            self.skipped(),
            self.filtered(),
            self.failures().len(),
            self.fallbacks(),
            self.max_elapsed(),
        )?;
        for e in self.failures() {
            if let Outcome::Failed(why) = &e.outcome {
                writeln!(f, "FAIL {} {}", e.graph6, why)?;
            }
        }
        Ok(())
    }
}

/// Runs the colorer on one graph and cross-checks it against the exact
/// solver.
pub fn check_graph(g: &Graph, time_limit: Option<Duration>) -> SweepEntry {
    let (g, _) = g.relabel_dense();
    let graph6 = emit_graph6(&g).unwrap_or_else(|_| format!("<n={}>", g.vertex_count()));
    let start = Instant::now();
    let mut fallbacks = 0;
    let outcome = if !g.is_connected() {
        Outcome::Disconnected
    } else if g.is_c5() {
        Outcome::SkippedC5
    } else if has_minor(&g, &complete(5)) {
        Outcome::FilteredK5
    } else {
        let mut colorer = Colorer::new().trust_input();
        if let Some(l) = time_limit {
            colorer = colorer.time_limit(l);
        }
        match colorer.color(&g) {
            Ok((c, trace)) => {
                fallbacks = trace.fallbacks();
                judge(&g, &c, time_limit)
            }
            Err(K5FreeError::Internal { reason, trace }) => {
                fallbacks = trace.fallbacks();
                Outcome::Failed(format!("internal: {reason}"))
            }
            Err(e) => Outcome::Failed(e.to_string()),
        }
    };
    SweepEntry { graph6, outcome, fallbacks, elapsed: start.elapsed() }
}

fn judge(g: &Graph, c: &Coloring, time_limit: Option<Duration>) -> Outcome {
    if !verify_dynamic(g, c).ok {
        return Outcome::Failed("coloring fails verification".into());
    }
    if c.max_color() > 4 {
        return Outcome::Failed(format!("uses color {}", c.max_color()));
    }
    let mut solver = ExactSolver::new(4);
    if let Some(l) = time_limit {
        solver = solver.time_limit(l);
    }
    match solver.solve(g, &Coloring::new(4)) {
        Ok(Some(_)) => Outcome::Colored { colors: c.colors_used() },
        Ok(None) => Outcome::Failed("exact solver finds no 4-coloring".into()),
        Err(t) => Outcome::Failed(t.to_string()),
    }
}

/// Checks every graph of the corpus in parallel.
pub fn sweep(corpus: &[Graph], time_limit: Option<Duration>) -> SweepReport {
    let mut entries: Vec<SweepEntry> = corpus.par_iter().map(|g| check_graph(g, time_limit)).collect();
    entries.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    SweepReport { entries }
}

/// Sweep over all connected graphs on 3..=max_n vertices.
pub fn sweep_compare(max_n: usize, time_limit: Option<Duration>) -> SweepReport {
    sweep(&connected_graphs_between(3, max_n, None), time_limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::cycle;

    #[test]
    fn c5_and_k5() {
        let r = sweep(&[cycle(5), complete(5), cycle(4)], None);
        assert_eq!(r.skipped(), 1);
        assert_eq!(r.filtered(), 1);
        assert_eq!(r.colored(), 1);
        assert!(r.failures().is_empty());
        let names: Vec<&str> = r.entries.iter().map(|e| e.graph6.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn small_exhaustive() {
        let r = sweep_compare(5, None);
        assert_eq!(r.entries.len(), 2 + 6 + 21);
        assert!(r.failures().is_empty(), "{r}");
        assert_eq!(r.fallbacks(), 0);
    }
}
