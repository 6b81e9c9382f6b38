//! One-call audit: every structural claim the crate rests on, re-checked
//! from scratch over all small quandles, with witnesses on failure.
//!
//! The suite cross-validates the two independent routes wherever they
//! exist (pair-orbit engine vs. order-census filter, formula vs.
//! classifier, order vs. topology enumeration) and re-derives the example
//! catalogue. [`run_full_verification`]`(5, 8)` is the everything-on run;
//! lower caps shrink the sweep but never skip a check silently — each
//! check reports what range it covered.

use serde::Serialize;

use crate::continuity::{
    enumerate_left_orders, enumerate_right_orders, is_right_continuous, left_collapse_check,
    verify_quandle_theorems, complete_npartite_order, ContinuityError, DedupMode,
};
use crate::dihedral::{
    affine_iso_check, count_classes_formula, dihedral_report, distinct_chi_orders, DihedralError,
};
use crate::perm::all_permutations;
use crate::poset::{enumerate_orders, is_crosspartite, poset_isomorphic, PosetError, StrictOrder};
use crate::quandle::{enumerate_quandles, gcd, Quandle, QuandleError};
use crate::tables::{catalogue, reproduce_tables_capped, TableDiffReport};
use crate::topology::{enumerate_t0, order_to_topology, topology_to_order, TopologyError};

/// Caps for the everything-on audit.
pub const FULL_SWEEP_ORDER: usize = 5;
pub const FULL_DIHEDRAL_HALF: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Continuity(#[from] ContinuityError),
    #[error(transparent)]
    Dihedral(#[from] DihedralError),
}

/// One named check: what was swept, and the first witness if it failed.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuite {
    pub max_order: usize,
    pub dihedral_half_cap: usize,
    pub checks: Vec<SuiteCheck>,
    pub table_diff: TableDiffReport,
}

impl VerifySuite {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.table_diff.passed()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "audit sweep: quandle order <= {}, dihedral half <= {}\n",
            self.max_order, self.dihedral_half_cap
        );
        for c in &self.checks {
            s.push_str(&format!(
                "[{}] {}: {}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        s.push_str(&format!(
            "[{}] catalogue-rows-reproduced: {}/{} rows matched, {} allowlisted, {} unexpected\n",
            if self.table_diff.passed() { "pass" } else { "FAIL" },
            self.table_diff.rows_matched,
            self.table_diff.rows_total,
            self.table_diff.mismatches_allowlisted,
            self.table_diff.mismatches_unexpected,
        ));
        s.push_str(if self.all_passed() { "audit: all checks passed\n" } else { "audit: FAILURES\n" });
        s
    }
}

fn check(name: &'static str, witness: Option<String>, covered: String) -> SuiteCheck {
    match witness {
        None => SuiteCheck { name, passed: true, detail: covered },
        Some(w) => SuiteCheck { name, passed: false, detail: w },
    }
}

/// Every quandle of order 1..=cap, one per isomorphism class, plus the
/// standard named ones the claims call out by name.
fn sweep_quandles(cap: usize) -> Result<Vec<Quandle>, QuandleError> {
    let mut all = Vec::new();
    for n in 1..=cap {
        all.extend(enumerate_quandles(n)?);
    }
    Ok(all)
}

/// Runs the whole audit. `max_order` caps the census sweeps (full run: 5);
/// `dihedral_half_cap` caps the dihedral family checks (full run: 8).
pub fn run_full_verification(
    max_order: usize,
    dihedral_half_cap: usize,
) -> Result<VerifySuite, VerifyError> {
    let max_order = max_order.clamp(1, FULL_SWEEP_ORDER);
    let dihedral_half_cap = dihedral_half_cap.clamp(2, FULL_DIHEDRAL_HALF);
    let sweep = sweep_quandles(max_order)?;
    let mut checks = Vec::new();

    // Chi rows against the catalogue (covers the dihedral cells, orders
    // 4..10, independent of max_order: the chi construction is closed-form).
    {
        let mut witness = None;
        let mut rows = 0;
        for entry in catalogue().iter().filter(|p| p.table == 1) {
            let n = entry.quandle.order() / 2;
            let chis: Vec<StrictOrder> =
                distinct_chi_orders(n)?.into_iter().map(|c| c.into_order()).collect();
            for printed in &entry.right {
                rows += 1;
                let closed = StrictOrder::from_edges(entry.quandle.order(), printed)?;
                if !chis.contains(&closed) {
                    witness = Some(format!("{}: printed row {closed} is not a chi order", entry.label));
                }
            }
            if chis.len() != entry.right.len() {
                witness = Some(format!(
                    "{}: {} chi orders vs {} printed rows",
                    entry.label,
                    chis.len(),
                    entry.right.len()
                ));
            }
        }
        checks.push(check(
            "chi-rows-match-catalogue",
            witness,
            format!("{rows} rows over 4 dihedral quandles"),
        ));
    }

    // Connected quandles admit no right order (the named ones first, then
    // the whole census).
    {
        let named = vec![Quandle::dihedral(3), Quandle::dihedral(5), Quandle::alexander(5, 2)?];
        let mut witness = None;
        let mut swept = 0;
        for q in named.iter().chain(sweep.iter()) {
            if !q.is_connected() {
                continue;
            }
            swept += 1;
            let found = enumerate_right_orders(q, DedupMode::None)?.orders;
            if !found.is_empty() {
                witness =
                    Some(format!("connected {} carries {}", q.encode(), found[0]));
                break;
            }
        }
        checks.push(check(
            "connected-quandles-admit-no-right-orders",
            witness,
            format!("{swept} connected quandles checked"),
        ));
    }

    // Engine vs census, the core dual route.
    {
        let mut witness = None;
        let mut compared = 0;
        for q in &sweep {
            let engine = enumerate_right_orders(q, DedupMode::None)?.orders;
            let census: Vec<StrictOrder> = enumerate_orders(q.order())?
                .into_iter()
                .filter(|o| !o.is_empty_relation() && is_right_continuous(q, o))
                .collect();
            compared += 1;
            if engine != census {
                witness = Some(format!(
                    "{}: engine found {} orders, census {}",
                    q.encode(),
                    engine.len(),
                    census.len()
                ));
                break;
            }
        }
        checks.push(check(
            "engine-agrees-with-census",
            witness,
            format!("{compared} quandles, orders 1..={max_order}"),
        ));
    }

    // Left orders force column collapse.
    {
        let mut witness = None;
        let mut orders_seen = 0;
        for q in &sweep {
            for o in enumerate_left_orders(q, DedupMode::None)?.orders {
                orders_seen += 1;
                if !left_collapse_check(q, &o) {
                    witness = Some(format!("{}: {} relates unequal columns", q.encode(), o));
                }
            }
        }
        checks.push(check(
            "left-orders-collapse-columns",
            witness,
            format!("{orders_seen} left orders checked"),
        ));
    }

    // Right orders only relate points of distinct orbits.
    {
        let mut witness = None;
        let mut orders_seen = 0;
        for q in &sweep {
            let parts = q.orbits();
            for o in enumerate_right_orders(q, DedupMode::None)?.orders {
                orders_seen += 1;
                if !is_crosspartite(&o, &parts) {
                    witness = Some(format!("{}: {} relates an orbit to itself", q.encode(), o));
                }
            }
        }
        checks.push(check(
            "right-orders-cross-orbits",
            witness,
            format!("{orders_seen} right orders checked"),
        ));
    }

    // Every block ranking of every multi-orbit quandle yields a
    // right-continuous complete multipartite order.
    {
        let mut witness = None;
        let mut built = 0;
        let mut targets: Vec<Quandle> =
            sweep.iter().filter(|q| q.orbits().count() > 1).cloned().collect();
        for n in 2..=dihedral_half_cap {
            targets.push(Quandle::dihedral(2 * n));
        }
        for q in &targets {
            let k = q.orbits().count();
            for p in all_permutations(k) {
                let ranking: Vec<usize> = p.image().to_vec();
                let o = complete_npartite_order(q, &ranking)?;
                built += 1;
                if !is_right_continuous(q, &o) {
                    witness = Some(format!(
                        "{} ranking {:?}: {} is not right-continuous",
                        q.encode(),
                        ranking,
                        o
                    ));
                }
            }
        }
        checks.push(check(
            "block-ranked-orders-right-continuous",
            witness,
            format!("{built} rankings over {} quandles", targets.len()),
        ));
    }

    // Right orders exist exactly on multi-orbit quandles.
    {
        let mut witness = None;
        for q in &sweep {
            let nonempty = !enumerate_right_orders(q, DedupMode::None)?.orders.is_empty();
            let multi = q.orbits().count() > 1;
            if nonempty != multi {
                witness = Some(format!(
                    "{}: {} orbits but right orders {}",
                    q.encode(),
                    q.orbits().count(),
                    if nonempty { "exist" } else { "are absent" }
                ));
            }
        }
        checks.push(check(
            "right-orders-exist-iff-multiple-orbits",
            witness,
            format!("{} quandles checked", sweep.len()),
        ));
    }

    // Chi class count: classifier == closed formula, and the power-of-two
    // halves have a single class.
    {
        let mut witness = None;
        for n in 2..=dihedral_half_cap {
            let report = dihedral_report(n)?;
            if report.chi_class_count != count_classes_formula(n) {
                witness = Some(format!(
                    "half {n}: classifier {} vs formula {}",
                    report.chi_class_count,
                    count_classes_formula(n)
                ));
            }
            if [2usize, 4, 8].contains(&n) && report.chi_class_count != 1 {
                witness = Some(format!("half {n}: expected a single class"));
            }
            if !report.chi_all_right_continuous {
                witness = Some(format!("half {n}: a chi order failed the oracle"));
            }
        }
        checks.push(check(
            "chi-class-count-matches-formula",
            witness,
            format!("halves 2..={dihedral_half_cap}"),
        ));
    }

    // The affine map k -> 3k-2 links the printed same-class rows.
    {
        let mut witness = None;
        for (half, target) in [(4usize, 3usize), (5, 3)] {
            match affine_iso_check(half, 3, target) {
                Ok(true) => {}
                Ok(false) => {
                    witness = Some(format!("k -> 3k-2 fails on half {half}, target x={target}"))
                }
                Err(e) => witness = Some(format!("half {half}: {e}")),
            }
        }
        checks.push(check(
            "affine-map-links-chi-orders",
            witness,
            "k -> 3k-2 on the 8- and 10-point families".into(),
        ));
    }

    // Orders and T0 topologies are the same data, both pointwise (round
    // trip) and in bulk (census sizes agree).
    {
        let mut witness = None;
        let mut round_trips = 0;
        for n in 1..=max_order {
            for o in enumerate_orders(n)? {
                round_trips += 1;
                let back = topology_to_order(&order_to_topology(&o))?;
                if back != o {
                    witness = Some(format!("{o} came back as {back}"));
                }
            }
        }
        for n in 1..=max_order.min(4) {
            let orders = enumerate_orders(n)?.len();
            let spaces = enumerate_t0(n)?.len();
            if orders != spaces {
                witness = Some(format!("n={n}: {orders} orders vs {spaces} T0 topologies"));
            }
        }
        checks.push(check(
            "orders-and-topologies-correspond",
            witness,
            format!("{round_trips} round trips, censuses to n={}", max_order.min(4)),
        ));
    }

    // Per-quandle structural reports all agree with themselves.
    {
        let mut witness = None;
        for q in &sweep {
            let report = verify_quandle_theorems(q)?;
            if !report.all_passed() {
                let failed: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name)
                    .collect();
                witness = Some(format!("{}: {:?}", q.encode(), failed));
            }
        }
        checks.push(check(
            "per-quandle-reports-clean",
            witness,
            format!("{} quandles", sweep.len()),
        ));
    }

    // Duality: reversing every right order of every swept quandle lands
    // back in the enumeration.
    {
        let mut witness = None;
        let mut reversed = 0;
        for q in &sweep {
            let found = enumerate_right_orders(q, DedupMode::None)?.orders;
            for o in &found {
                reversed += 1;
                if !found.contains(&o.dual()) {
                    witness = Some(format!("{}: dual of {} missing", q.encode(), o));
                }
            }
        }
        checks.push(check(
            "right-orders-closed-under-reversal",
            witness,
            format!("{reversed} orders reversed"),
        ));
    }

    // Chi orders of the same half with the same coprimality signature are
    // isomorphic or not exactly as the classifier groups them; spot-check
    // that non-coprime x really separates (connectivity differs).
    {
        let mut witness = None;
        for n in 2..=dihedral_half_cap {
            let chis = distinct_chi_orders(n)?;
            for c in &chis {
                let coprime = gcd(c.x(), n) == 1;
                let base = distinct_chi_orders(n)?
                    .into_iter()
                    .find(|d| d.x() == 1)
                    .expect("x = 1 is always present");
                let iso = poset_isomorphic(c.order(), base.order()).is_some();
                if coprime != iso {
                    witness = Some(format!(
                        "half {n}, x={}: coprime={coprime} but iso-to-x1={iso}",
                        c.x()
                    ));
                }
            }
        }
        checks.push(check(
            "chi-classes-track-coprimality",
            witness,
            format!("halves 2..={dihedral_half_cap}"),
        ));
    }

    let table_diff = reproduce_tables_capped(if max_order >= FULL_SWEEP_ORDER {
        usize::MAX
    } else {
        max_order
    });

    Ok(VerifySuite { max_order, dihedral_half_cap, checks, table_diff })
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowered_cap_suite_passes() {
        let suite = run_full_verification(3, 3).unwrap();
        assert!(suite.all_passed(), "\n{}", suite.to_text());
        // Lower caps shrink the sweep: only orders 1..=3 in the diff.
        assert!(suite.table_diff.rows_total < 20);
    }

    #[test]
    fn full_suite_passes() {
        let suite = run_full_verification(5, 8).unwrap();
        assert!(suite.all_passed(), "\n{}", suite.to_text());
        assert_eq!(suite.checks.len(), 13);
        assert_eq!(suite.table_diff.rows_total, 135);
        let text = suite.to_text();
        assert!(text.contains("audit: all checks passed"));
        assert!(serde_json::to_string(&suite).unwrap().contains("engine-agrees-with-census"));
    }

    #[test]
    fn caps_are_clamped() {
        let suite = run_full_verification(99, 99).unwrap();
        assert_eq!(suite.max_order, FULL_SWEEP_ORDER);
        assert_eq!(suite.dihedral_half_cap, FULL_DIHEDRAL_HALF);
    }
}
