//! Threshold graphs and their embedding into the universal threshold graph.

use super::{Mode, PatternWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Universal,
    Isolated,
    /// The last remaining vertex, which is both.
    Either,
}

/// Removal sequence by universal/isolated vertices, or `None` if `h` is not threshold.
fn removal_sequence(h: &Graph) -> Option<Vec<(usize, Kind)>> {
    let mut alive = h.all();
    let mut seq = Vec::with_capacity(h.n());
    while let Some(first) = alive.first() {
        if alive.len() == 1 {
            seq.push((first, Kind::Either));
            break;
        }
        let size = alive.len();
        let pick = alive.iter().find_map(|v| {
            let d = h.neighbors(v).intersection_len(&alive);
            if d + 1 == size {
                Some((v, Kind::Universal))
            } else if d == 0 {
                Some((v, Kind::Isolated))
            } else {
                None
            }
        })?;
        alive.remove(pick.0);
        seq.push(pick);
    }
    Some(seq)
}

pub fn is_threshold(h: &Graph) -> bool {
    removal_sequence(h).is_some()
}

/// Induced embedding of a threshold graph `h` with at most `k` vertices into `R_k`
/// (vertices `a_i = i - 1`, `b_j = k + j - 1`).
///
/// `R_k` is dismantled by the sequence `a_1` (universal), `b_1` (isolated),
/// `a_2`, `b_2`, ...; each vertex of `h`'s removal sequence is sent to the next
/// unused position of the same kind.
pub fn threshold_embed(h: &Graph, k: usize) -> Result<PatternWitness> {
    if h.n() > k {
        return Err(Error::InvalidParameter(format!(
            "graph on {} vertices does not fit into R_{k}",
            h.n()
        )));
    }
    let seq = removal_sequence(h)
        .ok_or_else(|| Error::InvalidParameter("graph is not a threshold graph".into()))?;
    let position_vertex = |p: usize| if p % 2 == 0 { p / 2 } else { k + p / 2 };
    let mut mapping = vec![0; h.n()];
    let mut next = 0;
    let mut previous = Kind::Universal;
    for (v, kind) in seq {
        let kind = match kind {
            // the last vertex fits anywhere; keep the previous kind when it fits
            Kind::Either if previous == Kind::Isolated && next + 1 - (next % 2) < 2 * k => {
                Kind::Isolated
            }
            Kind::Either if next + (next % 2) < 2 * k => Kind::Universal,
            other => other,
        };
        previous = kind;
        let p = match kind {
            Kind::Either => next,
            Kind::Universal => next + (next % 2),
            Kind::Isolated => next + 1 - (next % 2),
        };
        debug_assert!(p < 2 * k);
        mapping[v] = position_vertex(p);
        next = p + 1;
    }
    Ok(PatternWitness {
        mapping,
        mode: Mode::Induced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use crate::patterns::check_induced_witness;

    #[test]
    fn embeds_examples() {
        let r3 = universal_threshold(3).unwrap();
        let w = threshold_embed(&complete(3), 3).unwrap();
        let mut m = w.mapping.clone();
        m.sort();
        assert_eq!(m, vec![0, 1, 2]);

        let w = threshold_embed(&Graph::new(3), 3).unwrap();
        let mut m = w.mapping.clone();
        m.sort();
        assert_eq!(m, vec![3, 4, 5]);

        let star = complete_bipartite(1, 2).into_graph();
        let w = threshold_embed(&star, 3).unwrap();
        check_induced_witness(&r3, &star, &w).unwrap();
    }

    #[test]
    fn rejects_non_threshold_and_oversized() {
        assert!(threshold_embed(&path(4).unwrap(), 4).is_err());
        assert!(threshold_embed(&complete(4), 3).is_err());
        assert!(!is_threshold(&cycle(4).unwrap()));
    }
}
