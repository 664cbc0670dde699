//! 3-uniform word construction from an ordering certificate.
//!
//! The word is built from three copies of the Y labels, `1 2 .. n` repeated,
//! by inserting three copies of every X letter into the gaps. Gap `(k, j)`
//! is the position in copy `k` right after label `j` (`j = 0` is the start
//! of the copy). For a Type A vertex `[x, y]` and a Type C vertex
//! `[1, x] u [y, n]`, with `xl` the `x` of the last Type A vertex:
//!
//! | class | first          | second         | third       |
//! |-------|----------------|----------------|-------------|
//! | A     | `(1, x-1)`     | `(1, max(y, xl-1))` | `(2, y)` |
//! | C     | `(1, max(x, xl-1))` | `(2, x)`  | `(3, y-1)`  |
//!
//! Letters sharing a gap are ordered by slot (see [`Slot`]) and then by their
//! position in the certificate. Vertices without cross neighbours are placed
//! in closed form by [`place_empty_vertices`]. Every constructed word is
//! checked against the graph before it is returned.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{decompose, CoBipartite, SimpleGraph};
use crate::ordering::{check_conditions, recognize, OrderingCertificate, VertexClass};
use crate::orient::{find_transitive, SearchLimits};
use crate::word::{Letter, Word};

/// Tie-break order of letters inside one gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Slot {
    AFirst,
    EmptyFirst,
    CFirst,
    ASecond,
    EmptySecond,
    CSecond,
    AThird,
    EmptyThird,
    CThird,
}

/// One inserted copy of an X letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionEvent {
    pub letter: usize,
    /// Copy of the label sequence, 1 to 3.
    pub copy: usize,
    /// Number of labels of that copy preceding the letter, 0 to n.
    pub gap: usize,
    pub slot: Slot,
    /// Position of the letter's vertex in the certificate order.
    pub rank: usize,
}

/// Where an event lands relative to the label sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    /// Right after the given Y vertex in the given copy.
    After { copy: usize, label_vertex: usize },
    /// At the start of the given copy (before its first label).
    Start { copy: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPlan {
    y_labeling: Vec<usize>,
    events: Vec<InsertionEvent>,
}

impl InsertionPlan {
    /// Plan for the Type A and Type C vertices of a certificate; empty
    /// vertices are skipped. Fails on Type B vertices.
    pub fn for_certificate(cert: &OrderingCertificate) -> Result<Self> {
        if cert.has_type_b() {
            return Err(Error::TypeBPresent);
        }
        let xl = cert
            .classes
            .iter()
            .rev()
            .find_map(|c| match *c {
                VertexClass::TypeA { x, .. } => Some(x),
                _ => None,
            })
            .unwrap_or(1);
        let mut events = Vec::new();
        for (rank, (letter, class)) in cert.entries().enumerate() {
            let ev = |copy, gap, slot| InsertionEvent {
                letter,
                copy,
                gap,
                slot,
                rank,
            };
            match class {
                VertexClass::TypeA { x, y } => {
                    events.push(ev(1, x - 1, Slot::AFirst));
                    events.push(ev(1, y.max(xl - 1), Slot::ASecond));
                    events.push(ev(2, y, Slot::AThird));
                }
                VertexClass::TypeC { x, y } => {
                    events.push(ev(1, x.max(xl - 1), Slot::CFirst));
                    events.push(ev(2, x, Slot::CSecond));
                    events.push(ev(3, y - 1, Slot::CThird));
                }
                VertexClass::Empty => {}
                VertexClass::TypeB { .. } => unreachable!("rejected above"),
            }
        }
        Ok(InsertionPlan {
            y_labeling: cert.y_labeling.clone(),
            events,
        })
    }

    pub fn y_labeling(&self) -> &[usize] {
        &self.y_labeling
    }

    pub fn events(&self) -> &[InsertionEvent] {
        &self.events
    }

    pub fn anchor(&self, ev: &InsertionEvent) -> Anchor {
        if ev.gap == 0 {
            Anchor::Start { copy: ev.copy }
        } else {
            Anchor::After {
                copy: ev.copy,
                label_vertex: self.y_labeling[ev.gap - 1],
            }
        }
    }

    /// Realises the plan as a word over `0..n_vertices`.
    pub fn word(&self, n_vertices: usize) -> Word {
        let n = self.y_labeling.len();
        let mut sorted = self.events.clone();
        sorted.sort_by_key(|e| (e.copy, e.gap, e.slot, e.rank));
        let mut letters = Vec::with_capacity(3 * n_vertices);
        let mut it = sorted.iter().peekable();
        for copy in 1..=3 {
            for gap in 0..=n {
                while let Some(e) = it.next_if(|e| e.copy == copy && e.gap == gap) {
                    letters.push(Letter(e.letter as u32));
                }
                if gap < n {
                    letters.push(Letter(self.y_labeling[gap] as u32));
                }
            }
        }
        let alphabet = (0..n_vertices as u32).map(Letter);
        Word::new(letters, alphabet).expect("plan letters are vertices")
    }
}

/// Adds the empty vertices of `cert` to a plan built by
/// [`InsertionPlan::for_certificate`].
///
/// With `g` the largest gap used by a second A copy or a first C copy, all
/// those copies move to gap `(1, g)`. Each empty vertex then goes in that gap
/// before the first C copies and after the second A copies, and once more at
/// the very end of copy 2. This needs `g <= y_c - 1` for every Type C vertex.
pub fn place_empty_vertices(
    plan: &InsertionPlan,
    cert: &OrderingCertificate,
) -> Result<InsertionPlan> {
    let empties: Vec<(usize, usize)> = cert
        .entries()
        .enumerate()
        .filter(|(_, (_, c))| *c == VertexClass::Empty)
        .map(|(rank, (v, _))| (rank, v))
        .collect();
    if empties.is_empty() {
        return Ok(plan.clone());
    }
    let n = plan.y_labeling.len();
    let movable = |e: &InsertionEvent| matches!(e.slot, Slot::ASecond | Slot::CFirst);
    let g = plan
        .events
        .iter()
        .filter(|e| movable(e))
        .map(|e| e.gap)
        .max()
        .unwrap_or(0);
    if let Some(c) = plan
        .events
        .iter()
        .find(|e| e.slot == Slot::CThird && e.gap < g)
    {
        return Err(Error::NoEmptyPlacement(format!(
            "gap {g} lies past the last C copy of vertex {}",
            c.letter
        )));
    }
    let mut events: Vec<InsertionEvent> = plan
        .events
        .iter()
        .map(|&e| {
            if movable(&e) {
                InsertionEvent { gap: g, ..e }
            } else {
                e
            }
        })
        .collect();
    for (rank, letter) in empties {
        for (copy, gap, slot) in [
            (1, g, Slot::EmptyFirst),
            (1, g, Slot::EmptySecond),
            (2, n, Slot::EmptyThird),
        ] {
            events.push(InsertionEvent {
                letter,
                copy,
                gap,
                slot,
                rank,
            });
        }
    }
    Ok(InsertionPlan {
        y_labeling: plan.y_labeling.clone(),
        events,
    })
}

/// Builds a 3-uniform word representing the graph of `cb` from a valid
/// certificate without Type B vertices.
pub fn construct_word(cb: &CoBipartite, cert: &OrderingCertificate) -> Result<Word> {
    if let Some(v) = check_conditions(cert, &cb.matrix())? {
        return Err(Error::InvalidCertificate(v));
    }
    let plan = InsertionPlan::for_certificate(cert)?;
    let plan = place_empty_vertices(&plan, cert)?;
    let w = plan.word(cb.graph().n());
    if let Some((a, b)) = w.first_mismatch(cb.graph())? {
        return Err(Error::VerificationFailed(a, b));
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepresentationNumber {
    One,
    Two,
    Three,
    NotRepresentable,
}

impl RepresentationNumber {
    pub fn value(self) -> Option<u8> {
        match self {
            RepresentationNumber::One => Some(1),
            RepresentationNumber::Two => Some(2),
            RepresentationNumber::Three => Some(3),
            RepresentationNumber::NotRepresentable => None,
        }
    }
}

/// Representation number of a co-bipartite graph: 1 for complete graphs, 2
/// for other comparability graphs, 3 for the remaining word-representable
/// ones.
pub fn representation_number(
    g: &SimpleGraph,
    limits: &SearchLimits,
) -> Result<RepresentationNumber> {
    if decompose(g).is_empty() {
        return Err(Error::NotCoBipartite);
    }
    if g.is_complete() {
        return Ok(RepresentationNumber::One);
    }
    if find_transitive(g, limits)?.is_some() {
        return Ok(RepresentationNumber::Two);
    }
    Ok(match recognize(g, limits)? {
        Some(_) => RepresentationNumber::Three,
        None => RepresentationNumber::NotRepresentable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cobipartite_from_rows, gen_cartesian_kn_k2};
    use crate::ordering::find_ordering;

    fn rows(bits: &[&str]) -> Vec<Vec<bool>> {
        bits.iter()
            .map(|r| r.chars().map(|c| c == '1').collect())
            .collect()
    }

    fn build(m: usize, n: usize, r: &[&str]) -> (CoBipartite, Word) {
        let cb = cobipartite_from_rows(m, n, &rows(r));
        let cert = find_ordering(&cb, &SearchLimits::default())
            .unwrap()
            .unwrap();
        let w = construct_word(&cb, &cert).unwrap();
        (cb, w)
    }

    #[test]
    fn c4_word_matches_hand_construction() {
        // X = {0, 1}, Y = {2, 3}; 0 ~ 2 and 1 ~ 3
        let (cb, w) = build(2, 2, &["10", "01"]);
        assert!(w.represents(cb.graph()).unwrap());
        assert_eq!(w.uniformity().unwrap(), Some(3));
    }

    #[test]
    fn full_row_single_vertex() {
        let (cb, w) = build(1, 2, &["11"]);
        assert!(w.represents(cb.graph()).unwrap());
        assert_eq!(w.to_string(), "0 1 2 0 1 2 0 1 2");
    }

    #[test]
    fn empty_vertex_after_type_a() {
        let (cb, w) = build(2, 1, &["1", "0"]);
        assert!(w.represents(cb.graph()).unwrap());
        assert_eq!(w.to_string(), "0 2 1 0 1 2 0 1 2");
    }

    #[test]
    fn three_type_a_vertices() {
        let cb = gen_cartesian_kn_k2(3);
        let cert = find_ordering(&cb, &SearchLimits::default())
            .unwrap()
            .unwrap();
        let w = construct_word(&cb, &cert).unwrap();
        assert!(w.represents(cb.graph()).unwrap());
    }

    #[test]
    fn pairwise_relocation_breaks_on_three_type_a_vertices() {
        // K3 x K2 with a_i = 0..2 and labels 3..5. Moving each A letter only
        // past its direct predecessor's interval gives this first copy, where
        // a1 a1 a3 a3 already repeats and no suffix can repair it.
        let first_copy = Word::from_ids(&[0, 3, 1, 0, 4, 2, 1, 5, 2]);
        assert!(!first_copy.alternates(Letter(0), Letter(2)).unwrap());
        let cb = gen_cartesian_kn_k2(3);
        let cert = find_ordering(&cb, &SearchLimits::default())
            .unwrap()
            .unwrap();
        let w = construct_word(&cb, &cert).unwrap();
        assert!(w.alternates(Letter(0), Letter(2)).unwrap() || !cb.graph().adjacent(0, 2));
    }

    #[test]
    fn type_b_is_rejected() {
        let cb = cobipartite_from_rows(1, 2, &rows(&["10"]));
        let cert = OrderingCertificate {
            y_labeling: cb.y().to_vec(),
            x_order: vec![0],
            classes: vec![VertexClass::TypeB { x: 1, y: 1 }],
        };
        assert_eq!(construct_word(&cb, &cert), Err(Error::TypeBPresent));
    }

    #[test]
    fn representation_numbers() {
        let lim = SearchLimits::default();
        assert_eq!(
            representation_number(&SimpleGraph::complete(4), &lim).unwrap(),
            RepresentationNumber::One
        );
        let c4 = cobipartite_from_rows(2, 2, &rows(&["10", "01"]));
        assert_eq!(
            representation_number(c4.graph(), &lim).unwrap(),
            RepresentationNumber::Two
        );
        let prism = gen_cartesian_kn_k2(3);
        assert_eq!(
            representation_number(prism.graph(), &lim).unwrap(),
            RepresentationNumber::Three
        );
    }
}
