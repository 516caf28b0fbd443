use std::collections::BTreeSet;

use thiserror::Error;

use super::is_planar;
use crate::generate::v8;
use crate::graph::{combinations, is_isomorphic, Graph, Vertex};

/// Outcome of the trichotomy for a 3-connected graph with no K5 minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalinVerdict {
    Planar,
    IsV8,
    /// Three vertices whose removal leaves at least three components.
    ThreeCut(BTreeSet<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("nonplanar 3-connected graph is neither V8 nor has a 3-cut with three components; it must contain a K5 minor")]
    TheoremViolation,
}

/// Classifies a 3-connected graph without a K5 minor, trying the verdicts
/// in the order Planar, IsV8, ThreeCut. The 3-cut is the lexicographically
/// first vertex triple leaving at least three components.
pub fn classify_3connected(g: &Graph) -> Result<HalinVerdict, MinorError> {
    if !g.is_3_connected() {
        return Err(MinorError::NotThreeConnected);
    }
    if is_planar(g) {
        return Ok(HalinVerdict::Planar);
    }
    if is_isomorphic(g, &v8()) {
        return Ok(HalinVerdict::IsV8);
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    combinations(&verts, 3)
        .into_iter()
        .map(|x| x.into_iter().collect::<BTreeSet<Vertex>>())
        .find(|x| g.components_without(x).len() >= 3)
        .map(HalinVerdict::ThreeCut)
        .ok_or(MinorError::TheoremViolation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle};

    #[test]
    fn examples() {
        assert_eq!(classify_3connected(&complete(4)), Ok(HalinVerdict::Planar));
        assert_eq!(classify_3connected(&v8()), Ok(HalinVerdict::IsV8));
        assert_eq!(
            classify_3connected(&complete_bipartite(3, 3)),
            Ok(HalinVerdict::ThreeCut(BTreeSet::from([0, 1, 2])))
        );
    }

    #[test]
    fn k5_violates_the_trichotomy() {
        assert_eq!(classify_3connected(&complete(5)), Err(MinorError::TheoremViolation));
    }

    #[test]
    fn low_connectivity_is_rejected() {
        assert_eq!(classify_3connected(&cycle(6)), Err(MinorError::NotThreeConnected));
    }
}
