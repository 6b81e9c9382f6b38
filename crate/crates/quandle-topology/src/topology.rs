//! Finite topologies and their correspondence with strict orders.
//!
//! Every finite topology is Alexandroff (arbitrary intersections of opens
//! are open), so each point has a smallest open neighborhood, and T0
//! topologies are exactly the strict orders via `U_x = {w : x ≤ w}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poset::StrictOrder;

/// Points cap for materializing a topology (opens are per-subset bitmasks).
pub const MAX_TOPOLOGY_POINTS: usize = 20;

/// Cap on exhaustive T0-topology enumeration (families of subsets grow
/// doubly exponentially).
pub const T0_ENUMERATION_CAP: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("point {index} is outside 0..{n}")]
    OutOfRange { index: usize, n: usize },
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the full set is not open")]
    MissingFull,
    #[error("union of opens {a:#b} and {b:#b} is not open")]
    UnionEscapes { a: u64, b: u64 },
    #[error("intersection of opens {a:#b} and {b:#b} is not open")]
    IntersectionEscapes { a: u64, b: u64 },
    #[error("points {x} and {y} have the same neighborhoods (not T0)")]
    NotT0 { x: usize, y: usize },
    #[error("{n} points exceeds the cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
}

/// A topology on `{0..n-1}`: the sorted list of open sets as bitmasks.
/// Closure under pairwise union and intersection is verified at
/// construction, never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTopology {
    n: usize,
    opens: Vec<u64>,
}

impl FiniteTopology {
    pub fn from_open_masks(n: usize, opens: &[u64]) -> Result<FiniteTopology, TopologyError> {
        assert!(n <= MAX_TOPOLOGY_POINTS, "at most {MAX_TOPOLOGY_POINTS} points");
        let full = full_mask(n);
        let mut sorted: Vec<u64> = opens.to_vec();
        sorted.sort();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&s| s & !full != 0) {
            let index = (bad & !full).trailing_zeros() as usize;
            return Err(TopologyError::OutOfRange { index, n });
        }
        if sorted.binary_search(&0).is_err() {
            return Err(TopologyError::MissingEmpty);
        }
        if sorted.binary_search(&full).is_err() {
            return Err(TopologyError::MissingFull);
        }
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                if sorted.binary_search(&(a | b)).is_err() {
                    return Err(TopologyError::UnionEscapes { a, b });
                }
                if sorted.binary_search(&(a & b)).is_err() {
                    return Err(TopologyError::IntersectionEscapes { a, b });
                }
            }
        }
        Ok(FiniteTopology { n, opens: sorted })
    }

    pub fn from_open_sets(n: usize, sets: &[Vec<usize>]) -> Result<FiniteTopology, TopologyError> {
        let mut masks = Vec::with_capacity(sets.len());
        for s in sets {
            let mut m = 0u64;
            for &x in s {
                if x >= n {
                    return Err(TopologyError::OutOfRange { index: x, n });
                }
                m |= 1 << x;
            }
            masks.push(m);
        }
        FiniteTopology::from_open_masks(n, &masks)
    }

    pub fn discrete(n: usize) -> FiniteTopology {
        assert!(n <= MAX_TOPOLOGY_POINTS);
        FiniteTopology { n, opens: (0..1u64 << n).collect() }
    }

    pub fn indiscrete(n: usize) -> FiniteTopology {
        assert!(n <= MAX_TOPOLOGY_POINTS);
        let mut opens = vec![0];
        if n > 0 {
            opens.push(full_mask(n));
        }
        opens.dedup();
        FiniteTopology { n, opens }
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, mask: u64) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    /// The smallest open set containing `x` (the intersection of all of
    /// them, itself open in a finite space).
    pub fn minimal_open(&self, x: usize) -> u64 {
        assert!(x < self.n);
        self.opens
            .iter()
            .filter(|&&s| s >> x & 1 == 1)
            .fold(full_mask(self.n), |acc, &s| acc & s)
    }

    /// The complement of the minimal open set of `x` — a closed set. Note
    /// this is generally larger than the strict down-set of `x` in the
    /// specialization order: it holds every point not above `x`, not only
    /// those below.
    pub fn closed_complement(&self, x: usize) -> u64 {
        full_mask(self.n) & !self.minimal_open(x)
    }

    /// Distinct points are topologically distinguishable.
    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    fn t0_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.minimal_open(x) == self.minimal_open(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Every singleton is closed; on a finite set this forces discreteness.
    pub fn is_t1(&self) -> bool {
        (0..self.n).all(|x| self.minimal_open(x) == 1 << x)
    }

    /// The specialization order: `x < y` iff `x ≠ y` and `U_y ⊆ U_x`
    /// (equivalently `y ∈ U_x`). Fails when the topology is not T0.
    pub fn specialization_order(&self) -> Result<StrictOrder, TopologyError> {
        if let Some((x, y)) = self.t0_witness() {
            return Err(TopologyError::NotT0 { x, y });
        }
        let minimal: Vec<u64> = (0..self.n).map(|x| self.minimal_open(x)).collect();
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && minimal[y] & !minimal[x] == 0 {
                    edges.push((x, y));
                }
            }
        }
        StrictOrder::from_edges(self.n, &edges)
            .map_err(|_| unreachable!("specialization of a T0 topology is an order"))
    }

    /// Parses `{"n": .., "opens": [[int]]}` with validation.
    pub fn parse_json(input: &str) -> Result<FiniteTopology, crate::quandle::ParseError> {
        serde_json::from_str(input).map_err(|e| crate::quandle::ParseError {
            line: e.line().max(1),
            col: e.column().max(1),
            message: e.to_string(),
        })
    }
}

/// The Alexandroff topology of an order: opens are exactly the up-closed
/// sets of the reflexive closure.
pub fn order_to_topology(o: &StrictOrder) -> FiniteTopology {
    let n = o.point_count();
    assert!(n <= MAX_TOPOLOGY_POINTS, "at most {MAX_TOPOLOGY_POINTS} points");
    let mut opens = Vec::new();
    for mask in 0..1u64 << n {
        let up_closed = (0..n).all(|x| mask >> x & 1 == 0 || o.above(x) & !mask == 0);
        if up_closed {
            opens.push(mask);
        }
    }
    FiniteTopology { n, opens }
}

/// Synonym for [`FiniteTopology::specialization_order`], matching the
/// direction of [`order_to_topology`].
pub fn topology_to_order(t: &FiniteTopology) -> Result<StrictOrder, TopologyError> {
    t.specialization_order()
}

/// All T0 topologies on `n` labeled points, by filtering every family of
/// proper nonempty subsets for the closure axioms. Doubly exponential, and
/// deliberately so: this is the slow, obviously-correct side of the
/// order/topology correspondence check.
pub fn enumerate_t0(n: usize) -> Result<Vec<FiniteTopology>, TopologyError> {
    if n > T0_ENUMERATION_CAP {
        return Err(TopologyError::OrderTooLarge { n, cap: T0_ENUMERATION_CAP });
    }
    let full = full_mask(n);
    // Candidate members: subsets other than ∅ and X, which are always open.
    let middle: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for family in 0..1u64 << middle.len() {
        let mut opens = vec![0u64];
        for (i, &s) in middle.iter().enumerate() {
            if family >> i & 1 == 1 {
                opens.push(s);
            }
        }
        if n > 0 {
            opens.push(full);
        }
        let closed = opens.iter().enumerate().all(|(i, &a)| {
            opens[i + 1..]
                .iter()
                .all(|&b| opens.binary_search(&(a | b)).is_ok() && opens.binary_search(&(a & b)).is_ok())
        });
        if !closed {
            continue;
        }
        let t = FiniteTopology { n, opens };
        if t.is_t0() {
            out.push(t);
        }
    }
    Ok(out)
}

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (!0u64) >> (64 - n)
    }
}

#[derive(Serialize, Deserialize)]
struct TopologyWire {
    n: usize,
    opens: Vec<Vec<usize>>,
}

impl Serialize for FiniteTopology {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let opens = self
            .opens
            .iter()
            .map(|&m| (0..self.n).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        TopologyWire { n: self.n, opens }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteTopology {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = TopologyWire::deserialize(d)?;
        FiniteTopology::from_open_sets(wire.n, &wire.opens).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::enumerate_orders;

    fn masks(n: usize, opens: &[u64]) -> FiniteTopology {
        FiniteTopology::from_open_masks(n, opens).unwrap()
    }

    fn chain01() -> FiniteTopology {
        // The Sierpiński-style space of the chain 0 < 1.
        masks(2, &[0b00, 0b10, 0b11])
    }

    #[test]
    fn construction_validates_the_axioms() {
        assert_eq!(
            FiniteTopology::from_open_masks(2, &[0b01, 0b11]),
            Err(TopologyError::MissingEmpty)
        );
        assert_eq!(
            FiniteTopology::from_open_masks(2, &[0b00, 0b01]),
            Err(TopologyError::MissingFull)
        );
        assert_eq!(
            FiniteTopology::from_open_masks(3, &[0b000, 0b001, 0b010, 0b111]),
            Err(TopologyError::UnionEscapes { a: 0b001, b: 0b010 })
        );
        assert_eq!(
            FiniteTopology::from_open_masks(3, &[0b000, 0b011, 0b101, 0b111]),
            Err(TopologyError::IntersectionEscapes { a: 0b011, b: 0b101 })
        );
        assert_eq!(
            FiniteTopology::from_open_sets(2, &[vec![], vec![0, 5], vec![0, 1]]),
            Err(TopologyError::OutOfRange { index: 5, n: 2 })
        );
    }

    #[test]
    fn minimal_opens() {
        let d = FiniteTopology::discrete(4);
        for x in 0..4 {
            assert_eq!(d.minimal_open(x), 1 << x);
        }
        let i = FiniteTopology::indiscrete(3);
        for x in 0..3 {
            assert_eq!(i.minimal_open(x), 0b111);
        }
        assert_eq!(chain01().minimal_open(0), 0b11);
        assert_eq!(chain01().minimal_open(1), 0b10);
    }

    #[test]
    fn closed_complement_differs_from_strict_down_set() {
        // Antichain on two points: nothing is below 0, yet the complement
        // of its minimal open is {1}.
        let o = StrictOrder::empty(2);
        let t = order_to_topology(&o);
        assert_eq!(t.closed_complement(0), 0b10);
        assert!(o.pairs().is_empty());
    }

    #[test]
    fn order_to_topology_produces_up_sets() {
        let antichain = order_to_topology(&StrictOrder::empty(3));
        assert_eq!(antichain.open_count(), 8);
        let chain = order_to_topology(&StrictOrder::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(chain.opens(), &[0b00, 0b10, 0b11]);
        let v = order_to_topology(&StrictOrder::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
        assert_eq!(v.opens(), &[0b000, 0b100, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn specialization_recovers_orders() {
        assert!(topology_to_order(&FiniteTopology::discrete(3)).unwrap().is_empty_relation());
        assert_eq!(topology_to_order(&chain01()).unwrap().pairs(), vec![(0, 1)]);
        assert_eq!(
            topology_to_order(&FiniteTopology::indiscrete(2)),
            Err(TopologyError::NotT0 { x: 0, y: 1 })
        );
    }

    #[test]
    fn separation_axioms() {
        let d = FiniteTopology::discrete(4);
        assert!(d.is_t0() && d.is_t1());
        assert!(chain01().is_t0());
        assert!(!chain01().is_t1());
        assert!(!FiniteTopology::indiscrete(2).is_t0());
    }

    #[test]
    fn t1_means_discrete() {
        for t in enumerate_t0(3).unwrap() {
            assert_eq!(t.is_t1(), t.open_count() == 8, "T1 iff full power set on 3 points");
        }
    }

    #[test]
    fn round_trip_order_topology_order() {
        for n in 0..=4 {
            for o in enumerate_orders(n).unwrap() {
                let t = order_to_topology(&o);
                assert!(t.is_t0());
                assert_eq!(topology_to_order(&t).unwrap(), o);
                for x in 0..n {
                    let up = (1 << x) | o.above(x);
                    assert_eq!(t.minimal_open(x), up, "U_x is the up-set of x");
                }
            }
        }
    }

    #[test]
    fn t0_enumeration_matches_order_counts() {
        assert_eq!(enumerate_t0(0).unwrap().len(), 1);
        assert_eq!(enumerate_t0(1).unwrap().len(), 1);
        assert_eq!(enumerate_t0(2).unwrap().len(), 3);
        assert_eq!(enumerate_t0(3).unwrap().len(), 19);
        assert_eq!(
            enumerate_t0(5),
            Err(TopologyError::OrderTooLarge { n: 5, cap: T0_ENUMERATION_CAP })
        );
    }

    #[test]
    fn json_round_trip() {
        let t = chain01();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(FiniteTopology::parse_json(&js).unwrap(), t);
        assert_eq!(js, r#"{"n":2,"opens":[[],[1],[0,1]]}"#);
        assert!(FiniteTopology::parse_json(r#"{"n":2,"opens":[[],[0]]}"#).is_err());
    }
}
