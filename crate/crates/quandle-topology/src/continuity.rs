//! Strict orders making quandle multiplication continuous.
//!
//! For a finite quandle with the Alexandroff topology of an order, right
//! continuity of every `R_z` means `x < y ⇒ x∗z < y∗z` (strict, because
//! `R_z` is bijective), and left continuity of every `L_z` means
//! `x < y ⇒ z∗x ≤ z∗y`.
//!
//! Right-continuous relations are exactly the unions of diagonal-action
//! orbits of ordered pairs that happen to be strict orders, which reduces
//! the search to subsets of a small orbit list. Left-continuous orders are
//! found by filtering the full order census — there is no orbit shortcut on
//! the left, where multiplication need not be bijective.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poset::{
    enumerate_orders, is_crosspartite, poset_isomorphic, PosetError, StrictOrder, MAX_POINTS,
};
use crate::quandle::Quandle;

/// Cap on usable pair orbits before the subset walk (3^(k/2) leaves).
pub const PAIR_ORBIT_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContinuityError {
    #[error("orbit structure is {shape}, not one extra fixed point beside a single orbit")]
    WrongOrbitShape { shape: String },
    #[error("the quandle is connected; a ranking needs at least two orbits")]
    SingleOrbit,
    #[error("ranking {ranking:?} is not a permutation of the {count} orbit indices")]
    BadRanking { ranking: Vec<usize>, count: usize },
    #[error("{count} usable pair orbits exceed the search cap {cap}")]
    TooManyPairOrbits { count: usize, cap: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Which multiplications must stay continuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// How enumerated orders are folded into classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DedupMode {
    /// Every labeled order, untouched. The default: printed tables list
    /// labeled orders.
    #[default]
    None,
    /// Up to abstract poset isomorphism.
    Iso,
    /// Up to isomorphism or anti-isomorphism (order reversal).
    IsoDual,
    /// Up to relabeling by an automorphism of the quandle itself.
    QuandleAut,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl DedupMode {
    pub const ALL: [DedupMode; 4] =
        [DedupMode::None, DedupMode::Iso, DedupMode::IsoDual, DedupMode::QuandleAut];

    pub fn as_str(self) -> &'static str {
        match self {
            DedupMode::None => "none",
            DedupMode::Iso => "iso",
            DedupMode::IsoDual => "iso-dual",
            DedupMode::QuandleAut => "quandle-aut",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for DedupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(format!("unknown side {other:?}, expected right|left")),
        }
    }
}

impl FromStr for DedupMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(DedupMode::None),
            "iso" => Ok(DedupMode::Iso),
            "iso-dual" => Ok(DedupMode::IsoDual),
            "quandle-aut" => Ok(DedupMode::QuandleAut),
            other => {
                Err(format!("unknown dedup mode {other:?}, expected none|iso|iso-dual|quandle-aut"))
            }
        }
    }
}

impl Serialize for Side {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Serialize for DedupMode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One orbit of the diagonal action `(x, y) ↦ (x∗z, y∗z)` on ordered pairs
/// of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrbit {
    /// Sorted member pairs.
    pairs: Vec<(usize, usize)>,
    /// The least pair, naming the orbit.
    id: (usize, usize),
    /// Quandle orbits of the two components (constant across the orbit).
    blocks: (usize, usize),
    /// Row masks of the member pairs, ready to union into a relation.
    masks: Vec<u64>,
}

impl PairOrbit {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn id(&self) -> (usize, usize) {
        self.id
    }

    /// Do the two components live in distinct quandle orbits? Orbits of
    /// intra-block pairs can never embed in a strict order: with `y = φ(x)`
    /// the orbit carries the whole chain `x < φ(x) < φ²(x) < …`, and `φ`
    /// has finite order, so transitivity would force `x < x`.
    pub fn usable(&self) -> bool {
        self.blocks.0 != self.blocks.1
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an orbit always contains its seed pair
    }
}

/// Deterministic outcome of one enumeration run, ready for JSON or text.
#[derive(Clone, Debug)]
pub struct ContinuityReport {
    /// Compact encoding of the quandle's table.
    pub quandle: String,
    pub side: Side,
    pub dedup: DedupMode,
    /// The orders, deduplicated per `dedup`, sorted by pair list.
    pub orders: Vec<StrictOrder>,
    /// Representatives up to abstract poset isomorphism (computed
    /// regardless of `dedup`, as the coarsest view).
    pub iso_classes: Vec<StrictOrder>,
    /// Free-form mismatch notes filled in by diff passes; empty for plain
    /// enumeration.
    pub discrepancies: Vec<String>,
}

impl Serialize for ContinuityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let reduce = |orders: &[StrictOrder]| -> Vec<Vec<(usize, usize)>> {
            orders.iter().map(|o| o.transitive_reduction().edges).collect()
        };
        let mut st = s.serialize_struct("ContinuityReport", 6)?;
        st.serialize_field("quandle", &self.quandle)?;
        st.serialize_field("side", &self.side)?;
        st.serialize_field("dedup", &self.dedup)?;
        st.serialize_field("orders", &reduce(&self.orders))?;
        st.serialize_field("iso_classes", &reduce(&self.iso_classes))?;
        st.serialize_field("discrepancies", &self.discrepancies)?;
        st.end()
    }
}

/// `x < y ⇒ x∗z < y∗z` for every `z`.
pub fn is_right_continuous(q: &Quandle, o: &StrictOrder) -> bool {
    assert_eq!(q.order(), o.point_count());
    o.pairs().iter().all(|&(x, y)| (0..q.order()).all(|z| o.lt(q.op(x, z), q.op(y, z))))
}

/// `x < y ⇒ z∗x ≤ z∗y` for every `z`.
pub fn is_left_continuous(q: &Quandle, o: &StrictOrder) -> bool {
    assert_eq!(q.order(), o.point_count());
    o.pairs().iter().all(|&(x, y)| (0..q.order()).all(|z| o.le(q.op(z, x), q.op(z, y))))
}

/// The stronger collapse property: `x < y ⇒ z∗x = z∗y` for every `z`.
/// Left continuity is expected to imply this; the checker certifies each
/// instance instead of assuming it.
pub fn left_collapse_check(q: &Quandle, o: &StrictOrder) -> bool {
    assert_eq!(q.order(), o.point_count());
    o.pairs().iter().all(|&(x, y)| (0..q.order()).all(|z| q.op(z, x) == q.op(z, y)))
}

/// Partitions all ordered pairs of distinct points into diagonal-action
/// orbits, sorted by least pair.
pub fn pair_orbits(q: &Quandle) -> Vec<PairOrbit> {
    let n = q.order();
    assert!(n <= MAX_POINTS);
    let blocks = q.orbits();
    let mults: Vec<_> = (0..n).map(|z| q.right_mult(z)).collect();
    let mut seen = vec![vec![false; n]; n];
    let mut out = Vec::new();
    for sx in 0..n {
        for sy in 0..n {
            if sx == sy || seen[sx][sy] {
                continue;
            }
            let mut members = Vec::new();
            let mut stack = vec![(sx, sy)];
            seen[sx][sy] = true;
            while let Some((x, y)) = stack.pop() {
                members.push((x, y));
                for m in &mults {
                    let (nx, ny) = (m.apply(x), m.apply(y));
                    debug_assert_ne!(nx, ny, "bijections preserve distinctness");
                    if !seen[nx][ny] {
                        seen[nx][ny] = true;
                        stack.push((nx, ny));
                    }
                }
            }
            members.sort();
            let mut masks = vec![0u64; n];
            for &(x, y) in &members {
                masks[x] |= 1 << y;
            }
            debug_assert!(
                members.iter().all(|&(x, y)| {
                    (blocks.block_of(x), blocks.block_of(y))
                        == (blocks.block_of(sx), blocks.block_of(sy))
                }),
                "the diagonal action preserves orbit signatures"
            );
            out.push(PairOrbit {
                id: members[0],
                blocks: (blocks.block_of(sx), blocks.block_of(sy)),
                pairs: members,
                masks,
            });
        }
    }
    out.sort_by_key(|o| o.id);
    out
}

/// All nonempty right-continuous strict orders, as unions of usable pair
/// orbits.
///
/// Soundness: a relation closed under the diagonal action is preserved by
/// every `R_z`, which is the continuity condition. Completeness: continuity
/// forces the whole orbit of each related pair into the relation, so every
/// right-continuous order is a union of orbits — and each one is recovered
/// from exactly one subset, so no dedup across subsets is needed.
///
/// The walk skips an orbit whenever its reversal is already chosen (the one
/// possible antisymmetry clash: usable orbits cross blocks, so an orbit
/// never contains both a pair and its reverse). Transitivity is tested at
/// the leaves only — a union missing a composite can grow into a closed
/// superset, so pruning on it would lose results.
pub fn enumerate_right_orders(
    q: &Quandle,
    dedup: DedupMode,
) -> Result<ContinuityReport, ContinuityError> {
    let n = q.order();
    let orbits: Vec<PairOrbit> = pair_orbits(q).into_iter().filter(|o| o.usable()).collect();
    if orbits.len() > PAIR_ORBIT_CAP {
        return Err(ContinuityError::TooManyPairOrbits {
            count: orbits.len(),
            cap: PAIR_ORBIT_CAP,
        });
    }
    // reverse_of[i] = index of the orbit holding the reversed pairs of i.
    let reverse_of: Vec<usize> = orbits
        .iter()
        .map(|o| {
            let (x, y) = o.id;
            orbits
                .iter()
                .position(|c| c.pairs.binary_search(&(y, x)).is_ok())
                .expect("the reverse of a usable orbit is usable")
        })
        .collect();

    let mut found = Vec::new();
    let mut chosen = vec![false; orbits.len()];
    let mut union = vec![0u64; n];
    subset_walk(q, &orbits, &reverse_of, 0, &mut chosen, &mut union, &mut found);
    found.sort_by_key(|o: &StrictOrder| o.pairs());

    debug_assert!(found.iter().all(|o| is_right_continuous(q, o)));
    Ok(build_report(q, Side::Right, dedup, found))
}

fn subset_walk(
    q: &Quandle,
    orbits: &[PairOrbit],
    reverse_of: &[usize],
    idx: usize,
    chosen: &mut Vec<bool>,
    union: &mut Vec<u64>,
    found: &mut Vec<StrictOrder>,
) {
    if idx == orbits.len() {
        if chosen.iter().any(|&c| c) && is_closed(union) {
            found.push(StrictOrder::from_closed_masks(q.order(), union.clone()));
        }
        return;
    }
    // Branch 1: leave orbit idx out.
    subset_walk(q, orbits, reverse_of, idx + 1, chosen, union, found);
    // Branch 2: take it, unless its reversal is in (antisymmetry).
    if !chosen[reverse_of[idx]] {
        chosen[idx] = true;
        for x in 0..union.len() {
            union[x] |= orbits[idx].masks[x];
        }
        subset_walk(q, orbits, reverse_of, idx + 1, chosen, union, found);
        for x in 0..union.len() {
            union[x] &= !orbits[idx].masks[x];
        }
        chosen[idx] = false;
    }
}

/// Is the relation already transitively closed?
fn is_closed(up: &[u64]) -> bool {
    let n = up.len();
    (0..n).all(|x| {
        let mut reach = up[x];
        for y in 0..n {
            if up[x] >> y & 1 == 1 {
                reach |= up[y];
            }
        }
        reach == up[x]
    })
}

/// All nonempty left-continuous orders, by filtering the full order census.
pub fn enumerate_left_orders(
    q: &Quandle,
    dedup: DedupMode,
) -> Result<ContinuityReport, ContinuityError> {
    let found: Vec<StrictOrder> = enumerate_orders(q.order())?
        .into_iter()
        .filter(|o| !o.is_empty_relation() && is_left_continuous(q, o))
        .collect();
    Ok(build_report(q, Side::Left, dedup, found))
}

fn build_report(
    q: &Quandle,
    side: Side,
    dedup: DedupMode,
    all_orders: Vec<StrictOrder>,
) -> ContinuityReport {
    let iso_classes = dedup_orders(q, &all_orders, DedupMode::Iso);
    let orders = dedup_orders(q, &all_orders, dedup);
    ContinuityReport {
        quandle: q.encode(),
        side,
        dedup,
        orders,
        iso_classes,
        discrepancies: Vec::new(),
    }
}

/// First representative of each class, preserving the sorted input order.
pub fn dedup_orders(q: &Quandle, orders: &[StrictOrder], mode: DedupMode) -> Vec<StrictOrder> {
    match mode {
        DedupMode::None => orders.to_vec(),
        DedupMode::QuandleAut => {
            let auts = q.automorphisms();
            let mut seen: BTreeMap<Vec<(usize, usize)>, ()> = BTreeMap::new();
            let mut reps = Vec::new();
            for o in orders {
                let key = auts
                    .iter()
                    .map(|a| o.relabel(a).pairs())
                    .min()
                    .expect("the identity automorphism always exists");
                if seen.insert(key, ()).is_none() {
                    reps.push(o.clone());
                }
            }
            reps
        }
        DedupMode::Iso | DedupMode::IsoDual => {
            let dual_too = mode == DedupMode::IsoDual;
            if orders.iter().all(|o| o.point_count() <= 8) {
                // Exact canonical keys are affordable: group by key.
                let mut seen: BTreeMap<Vec<u64>, ()> = BTreeMap::new();
                let mut reps = Vec::new();
                for o in orders {
                    let mut key = o.canonical_key().expect("within canonical cap");
                    if dual_too {
                        key = key.min(o.dual().canonical_key().expect("within canonical cap"));
                    }
                    if seen.insert(key, ()).is_none() {
                        reps.push(o.clone());
                    }
                }
                reps
            } else {
                // Larger point sets: group by pairwise isomorphism tests.
                let mut reps: Vec<StrictOrder> = Vec::new();
                for o in orders {
                    let known = reps.iter().any(|r| {
                        poset_isomorphic(r, o).is_some()
                            || (dual_too && poset_isomorphic(r, &o.dual()).is_some())
                    });
                    if !known {
                        reps.push(o.clone());
                    }
                }
                reps
            }
        }
    }
}

/// For a quandle whose orbits are one block X₁ plus one fixed point `a`:
/// the order `{x < a : x ∈ X₁}`. When both blocks are singletons, `a` is
/// the one with the larger element.
pub fn single_extra_orbit_order(q: &Quandle) -> Result<StrictOrder, ContinuityError> {
    let orbits = q.orbits();
    let shape = || {
        let sizes: Vec<usize> = orbits.blocks().iter().map(|b| b.len()).collect();
        format!("{} orbit(s) of sizes {:?}", orbits.count(), sizes)
    };
    if orbits.count() != 2 {
        return Err(ContinuityError::WrongOrbitShape { shape: shape() });
    }
    let blocks = orbits.blocks();
    let (base, apex) = match (blocks[0].len(), blocks[1].len()) {
        (_, 1) => (&blocks[0], &blocks[1]),
        (1, _) => (&blocks[1], &blocks[0]),
        _ => return Err(ContinuityError::WrongOrbitShape { shape: shape() }),
    };
    let a = apex[0];
    let edges: Vec<(usize, usize)> = base.iter().map(|&x| (x, a)).collect();
    Ok(StrictOrder::from_edges(q.order(), &edges)?)
}

/// The complete multipartite order: `x < y` iff `x`'s orbit is ranked below
/// `y`'s. `ranking` lists orbit indices from lowest to highest.
pub fn complete_npartite_order(
    q: &Quandle,
    ranking: &[usize],
) -> Result<StrictOrder, ContinuityError> {
    let orbits = q.orbits();
    if orbits.count() < 2 {
        return Err(ContinuityError::SingleOrbit);
    }
    let count = orbits.count();
    let mut rank_of = vec![usize::MAX; count];
    for (r, &b) in ranking.iter().enumerate() {
        if b >= count || rank_of[b] != usize::MAX {
            return Err(ContinuityError::BadRanking { ranking: ranking.to_vec(), count });
        }
        rank_of[b] = r;
    }
    if ranking.len() != count {
        return Err(ContinuityError::BadRanking { ranking: ranking.to_vec(), count });
    }
    let n = q.order();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rank_of[orbits.block_of(x)] < rank_of[orbits.block_of(y)] {
                edges.push((x, y));
            }
        }
    }
    Ok(StrictOrder::from_edges(n, &edges)?)
}

/// Outcome of one structural check on one quandle.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    /// Whether the hypothesis applies to this quandle at all.
    pub applicable: bool,
    pub passed: bool,
    /// A counterexample description when failed.
    pub witness: Option<String>,
}

/// Structural facts about one quandle's continuous orders, each checked
/// against the enumeration rather than assumed.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub quandle: String,
    pub connected: bool,
    pub latin: bool,
    pub orbit_count: usize,
    pub right_order_count: usize,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the four right-side checks — connected ⇒ none, latin ⇒ none,
/// all orders cross-orbit, existence ⇔ several orbits — plus, when the
/// census cap allows, the left-side column-collapse sweep.
pub fn verify_quandle_theorems(q: &Quandle) -> Result<TheoremReport, ContinuityError> {
    let orbits = q.orbits();
    let connected = q.is_connected();
    let latin = q.is_latin();
    let right = enumerate_right_orders(q, DedupMode::None)?;
    let mut checks = Vec::new();

    let empty_witness = right.orders.first().map(|o| format!("found {o}"));
    checks.push(TheoremCheck {
        name: "connected-implies-no-right-orders",
        applicable: connected,
        passed: !connected || right.orders.is_empty(),
        witness: if connected { empty_witness.clone() } else { None },
    });
    checks.push(TheoremCheck {
        name: "latin-implies-no-right-orders",
        applicable: latin,
        passed: !latin || right.orders.is_empty(),
        witness: if latin { empty_witness } else { None },
    });

    let cross_fail = right.orders.iter().find(|o| !is_crosspartite(o, &orbits));
    checks.push(TheoremCheck {
        name: "right-orders-cross-orbits",
        applicable: true,
        passed: cross_fail.is_none(),
        witness: cross_fail.map(|o| format!("{o} relates points of one orbit")),
    });

    let expect_orders = orbits.count() > 1;
    checks.push(TheoremCheck {
        name: "right-orders-exist-iff-several-orbits",
        applicable: true,
        passed: right.orders.is_empty() != expect_orders,
        witness: if right.orders.is_empty() == expect_orders {
            Some(format!(
                "{} orbits but {} right orders",
                orbits.count(),
                right.orders.len()
            ))
        } else {
            None
        },
    });

    if let Ok(left) = enumerate_left_orders(q, DedupMode::None) {
        let collapse_fail = left.orders.iter().find(|o| !left_collapse_check(q, o));
        checks.push(TheoremCheck {
            name: "left-orders-collapse-columns",
            applicable: true,
            passed: collapse_fail.is_none(),
            witness: collapse_fail.map(|o| format!("{o} relates points with unequal columns")),
        });
    }

    Ok(TheoremReport {
        quandle: q.encode(),
        connected,
        latin,
        orbit_count: orbits.count(),
        right_order_count: right.orders.len(),
        checks,
    })
}
