//! Finite quandles presented by Cayley tables.
//!
//! Convention: `table[i][j] = i * j`. Axioms: `i * i = i`; every column
//! (right multiplication) is a bijection; `(x*y)*z = (x*z)*(y*z)`.
//! Rows (left multiplications) need not be bijections.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::{all_permutations, point_orbits, PermGroup, Permutation};

/// Default cap on exhaustive quandle enumeration.
pub const QUANDLE_ENUMERATION_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuandleError {
    #[error("table must be a non-empty square matrix: {detail}")]
    BadShape { detail: String },
    #[error("entry at row {row}, column {col} is {value}, outside 0..{n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("idempotency fails at {point}: {point} * {point} != {point}")]
    NotIdempotent { point: usize },
    #[error("column {column} is not a bijection, so right multiplication by {column} is not invertible")]
    RightNotBijective { column: usize },
    #[error("self-distributivity fails at ({x}, {y}, {z}): ({x}*{y})*{z} != ({x}*{z})*({y}*{z})")]
    NotDistributive { x: usize, y: usize, z: usize },
    #[error("t = {t} is not a unit modulo {modulus}")]
    NotAUnit { t: usize, modulus: usize },
    #[error("order {n} exceeds the enumeration cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
}

/// Text / JSON syntax error with source position.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Partition of `{0..n-1}` into orbits, blocks sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    n: usize,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut block_of = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        OrbitPartition { n, block_of, blocks }
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>, // row-major, table[i*n + j] = i * j
}

impl Quandle {
    /// Validates a Cayley table. Axioms are checked in order — elements in
    /// range, idempotency, right invertibility, self-distributivity — and the
    /// first violation is reported with a witness.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Quandle, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::BadShape { detail: "no rows".into() });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::BadShape {
                    detail: format!("row {} has {} entries, expected {}", i, row.len(), n),
                });
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(QuandleError::OutOfRange { row: i, col: j, value: v, n });
                }
                table.push(v);
            }
        }
        let q = Quandle { n, table };
        q.check_axioms()?;
        Ok(q)
    }

    fn check_axioms(&self) -> Result<(), QuandleError> {
        let n = self.n;
        for i in 0..n {
            if self.op(i, i) != i {
                return Err(QuandleError::NotIdempotent { point: i });
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let v = self.op(i, j);
                if seen[v] {
                    return Err(QuandleError::RightNotBijective { column: j });
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op(self.op(x, y), z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Err(QuandleError::NotDistributive { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Internal constructor for tables already known to satisfy the axioms.
    fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Quandle {
        debug_assert_eq!(table.len(), n * n);
        let q = Quandle { n, table };
        debug_assert!(q.check_axioms().is_ok());
        q
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| self.table[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    /// Right multiplication `x ↦ x * y` (always a bijection).
    pub fn right_mult(&self, y: usize) -> Permutation {
        Permutation::new((0..self.n).map(|x| self.op(x, y)).collect())
            .expect("columns of a valid quandle are bijections")
    }

    /// Left multiplication `x ↦ y * x` (an arbitrary map, returned as its image vector).
    pub fn left_mult(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op(y, x)).collect()
    }

    /// The inner group: closure of all right multiplications.
    pub fn inner_group(&self) -> PermGroup {
        PermGroup::closure(self.n, (0..self.n).map(|y| self.right_mult(y)).collect())
    }

    /// Orbits of the inner group action, blocks sorted by least element.
    pub fn orbits(&self) -> OrbitPartition {
        let gens: Vec<Permutation> = (0..self.n).map(|y| self.right_mult(y)).collect();
        OrbitPartition::from_blocks(self.n, point_orbits(self.n, &gens))
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().count() == 1
    }

    /// Latin: every row is also a bijection.
    pub fn is_latin(&self) -> bool {
        (0..self.n).all(|i| {
            let mut seen = vec![false; self.n];
            (0..self.n).all(|j| {
                let v = self.op(i, j);
                !std::mem::replace(&mut seen[v], true)
            })
        })
    }

    /// The trivial quandle: `i * j = i`.
    pub fn trivial(n: usize) -> Quandle {
        assert!(n > 0, "order must be positive");
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = i;
            }
        }
        Quandle::from_flat_unchecked(n, table)
    }

    /// The dihedral quandle on `Z_m`: `i * j = 2j - i (mod m)`.
    pub fn dihedral(m: usize) -> Quandle {
        assert!(m > 0, "order must be positive");
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = (2 * j + m - i) % m; // (2j - i) mod m, i < m
            }
        }
        Quandle::from_flat_unchecked(m, table)
    }

    /// The affine quandle on `Z_n`: `i * j = t·i + (1-t)·j (mod n)`, `gcd(t, n) = 1`.
    pub fn alexander(n: usize, t: usize) -> Result<Quandle, QuandleError> {
        assert!(n > 0, "order must be positive");
        let t = t % n;
        if gcd(t, n) != 1 {
            return Err(QuandleError::NotAUnit { t, modulus: n });
        }
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                // t*i + (1-t)*j = t*i + j - t*j, computed without underflow.
                table[i * n + j] = (t * i + j + (n - t) * j) % n;
            }
        }
        Ok(Quandle::from_flat_unchecked(n, table))
    }

    /// Relabels points by `sigma`: in the new quandle, `sigma(i) * sigma(j) = sigma(i * j)`.
    pub fn relabel(&self, sigma: &Permutation) -> Quandle {
        assert_eq!(sigma.degree(), self.n);
        let n = self.n;
        let inv = sigma.inverse();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = sigma.apply(self.op(inv.apply(i), inv.apply(j)));
            }
        }
        Quandle::from_flat_unchecked(n, table)
    }

    /// Searches for an isomorphism onto `other`; deterministic first-found
    /// (candidate images tried in ascending order).
    pub fn isomorphism_to(&self, other: &Quandle) -> Option<Permutation> {
        if self.n != other.n {
            return None;
        }
        let mut sigma = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if self.iso_search(other, &mut sigma, &mut used, false, &mut Vec::new()) {
            return Some(Permutation::new(sigma).expect("search yields bijections"));
        }
        None
    }

    /// All automorphisms, sorted.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let mut sigma = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut out = Vec::new();
        self.iso_search(self, &mut sigma, &mut used, true, &mut out);
        out.sort();
        out
    }

    /// Backtracking over partial maps with forced-image propagation: once
    /// sigma is known on `a` and `b`, it is forced on `a * b`.
    fn iso_search(
        &self,
        other: &Quandle,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        collect_all: bool,
        out: &mut Vec<Permutation>,
    ) -> bool {
        let v = match sigma.iter().position(|&s| s == usize::MAX) {
            None => {
                let perm = Permutation::new(sigma.clone()).expect("complete map is a bijection");
                // Full re-check: propagation only guarantees consistency on
                // pairs seen while the map was being built.
                for a in 0..self.n {
                    for b in 0..self.n {
                        if perm.apply(self.op(a, b)) != other.op(perm.apply(a), perm.apply(b)) {
                            return false;
                        }
                    }
                }
                if collect_all {
                    out.push(perm);
                    return false; // keep searching
                }
                return true;
            }
            Some(v) => v,
        };
        for w in 0..self.n {
            if used[w] {
                continue;
            }
            let mut trail = Vec::new();
            if self.try_assign(other, sigma, used, v, w, &mut trail)
                && self.iso_search(other, sigma, used, collect_all, out)
            {
                // Leave sigma intact: it holds the witness being returned.
                return true;
            }
            for a in trail.into_iter().rev() {
                used[sigma[a]] = false;
                sigma[a] = usize::MAX;
            }
        }
        false
    }

    fn try_assign(
        &self,
        other: &Quandle,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        w: usize,
        trail: &mut Vec<usize>,
    ) -> bool {
        sigma[v] = w;
        used[w] = true;
        trail.push(v);
        // Propagate forced images until fixpoint or contradiction.
        loop {
            let mut changed = false;
            for a in 0..self.n {
                if sigma[a] == usize::MAX {
                    continue;
                }
                for b in 0..self.n {
                    if sigma[b] == usize::MAX {
                        continue;
                    }
                    let src = self.op(a, b);
                    let dst = other.op(sigma[a], sigma[b]);
                    if sigma[src] != usize::MAX {
                        if sigma[src] != dst {
                            return false;
                        }
                    } else {
                        if used[dst] {
                            return false;
                        }
                        sigma[src] = dst;
                        used[dst] = true;
                        trail.push(src);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Lexicographically least table over all relabelings (row-major order).
    pub fn canonical_table(&self) -> Vec<usize> {
        assert!(self.n <= 8, "canonical form capped at order 8");
        let mut best: Option<Vec<usize>> = None;
        for sigma in all_permutations(self.n) {
            let cand = self.relabel(&sigma).table;
            match &best {
                Some(b) if *b <= cand => {}
                _ => best = Some(cand),
            }
        }
        best.expect("at least the identity relabeling exists")
    }

    /// Compact single-line encoding, e.g. `"0,0,1|1,1,0|2,2,2"`.
    pub fn encode(&self) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n).map(|j| self.op(i, j).to_string()).collect::<Vec<_>>().join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parses the plain-text format: first line `n`, then `n` rows of `n`
    /// whitespace-separated integers.
    pub fn parse_text(input: &str) -> Result<Quandle, ParseError> {
        let mut lines = input.lines().enumerate();
        let (header_idx, header) = loop {
            match lines.next() {
                Some((i, l)) if !l.trim().is_empty() => break (i, l),
                Some(_) => continue,
                None => {
                    return Err(ParseError { line: 1, col: 1, message: "empty input".into() })
                }
            }
        };
        let col = header.len() - header.trim_start().len() + 1;
        let n: usize = header.trim().parse().map_err(|_| ParseError {
            line: header_idx + 1,
            col,
            message: format!("expected the order as a single integer, found {:?}", header.trim()),
        })?;
        if n == 0 {
            return Err(ParseError {
                line: header_idx + 1,
                col,
                message: "order must be positive".into(),
            });
        }
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(n);
            let mut pos = 0;
            let bytes = line.as_bytes();
            while pos < bytes.len() {
                if bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                    continue;
                }
                let start = pos;
                while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                let tok = &line[start..pos];
                let v: usize = tok.parse().map_err(|_| ParseError {
                    line: i + 1,
                    col: start + 1,
                    message: format!("expected an integer, found {tok:?}"),
                })?;
                row.push(v);
            }
            if row.len() != n {
                return Err(ParseError {
                    line: i + 1,
                    col: 1,
                    message: format!("expected {} entries, found {}", n, row.len()),
                });
            }
            rows.push(row);
            if rows.len() == n {
                break;
            }
        }
        if rows.len() != n {
            return Err(ParseError {
                line: header_idx + 1 + rows.len() + 1,
                col: 1,
                message: format!("expected {} rows, found {}", n, rows.len()),
            });
        }
        Quandle::from_rows(&rows).map_err(|e| ParseError {
            line: header_idx + 1,
            col: 1,
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.op(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the JSON wire form `{"n": .., "table": [[..]]}` with positions
    /// on syntax errors.
    pub fn parse_json(input: &str) -> Result<Quandle, ParseError> {
        serde_json::from_str(input).map_err(|e| ParseError {
            line: e.line().max(1),
            col: e.column().max(1),
            message: e.to_string(),
        })
    }
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

#[derive(Serialize, Deserialize)]
struct QuandleWire {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl Serialize for Quandle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuandleWire { n: self.n, table: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quandle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = QuandleWire::deserialize(d)?;
        if wire.table.len() != wire.n {
            return Err(D::Error::custom(format!(
                "declared order {} but table has {} rows",
                wire.n,
                wire.table.len()
            )));
        }
        Quandle::from_rows(&wire.table).map_err(D::Error::custom)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All quandles of order `n` up to isomorphism, as canonical (lex-least)
/// tables, sorted. Columns are generated by backtracking: fixing column `z`
/// and column `y` forces column `z(y)` to be the conjugate `z ∘ y ∘ z⁻¹`,
/// which is exactly self-distributivity.
pub fn enumerate_quandles(n: usize) -> Result<Vec<Quandle>, QuandleError> {
    if n == 0 || n > QUANDLE_ENUMERATION_CAP {
        return Err(QuandleError::OrderTooLarge { n, cap: QUANDLE_ENUMERATION_CAP });
    }
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut cols: Vec<Option<Permutation>> = vec![None; n];
    // Candidate columns: permutations fixing their own index (idempotency).
    let candidates: Vec<Vec<Permutation>> = (0..n)
        .map(|j| all_permutations(n).into_iter().filter(|p| p.apply(j) == j).collect())
        .collect();
    search_columns(n, &mut cols, &candidates, &mut canon);
    Ok(canon.into_iter().map(|t| Quandle::from_flat_unchecked(n, t)).collect())
}

fn search_columns(
    n: usize,
    cols: &mut Vec<Option<Permutation>>,
    candidates: &[Vec<Permutation>],
    out: &mut BTreeSet<Vec<usize>>,
) {
    let j = match cols.iter().position(|c| c.is_none()) {
        None => {
            let assigned: Vec<&Permutation> = cols.iter().map(|c| c.as_ref().unwrap()).collect();
            // Full conjugation check; propagation during search only prunes.
            for z in 0..n {
                for y in 0..n {
                    let target = assigned[z].apply(y);
                    let req = assigned[z].compose(assigned[y]).compose(&assigned[z].inverse());
                    if *assigned[target] != req {
                        return;
                    }
                }
            }
            let mut table = vec![0; n * n];
            for i in 0..n {
                for (j, col) in assigned.iter().enumerate() {
                    table[i * n + j] = col.apply(i);
                }
            }
            let q = Quandle { n, table };
            debug_assert!(q.check_axioms().is_ok());
            out.insert(q.canonical_table());
            return;
        }
        Some(j) => j,
    };
    for cand in &candidates[j] {
        let mut trail = Vec::new();
        if assign_column(n, cols, j, cand.clone(), &mut trail) {
            search_columns(n, cols, candidates, out);
        }
        for t in trail {
            cols[t] = None;
        }
    }
}

/// Assigns column `j` and propagates conjugation-forced columns. Returns
/// false on contradiction; `trail` records every column set here.
fn assign_column(
    n: usize,
    cols: &mut Vec<Option<Permutation>>,
    j: usize,
    cand: Permutation,
    trail: &mut Vec<usize>,
) -> bool {
    cols[j] = Some(cand);
    trail.push(j);
    loop {
        let mut changed = false;
        for z in 0..n {
            let sz = match &cols[z] {
                Some(p) => p.clone(),
                None => continue,
            };
            for y in 0..n {
                let sy = match &cols[y] {
                    Some(p) => p.clone(),
                    None => continue,
                };
                let target = sz.apply(y);
                let req = sz.compose(&sy).compose(&sz.inverse());
                match &cols[target] {
                    Some(existing) => {
                        if *existing != req {
                            return false;
                        }
                    }
                    None => {
                        cols[target] = Some(req);
                        trail.push(target);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[usize]]) -> Quandle {
        Quandle::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// The order-3 quandle with orbit structure {0,1},{2}.
    fn two_orbit_three() -> Quandle {
        q(&[&[0, 0, 1], &[1, 1, 0], &[2, 2, 2]])
    }

    #[test]
    fn axiom_violations_report_first_witness() {
        assert_eq!(
            Quandle::from_rows(&[vec![0, 0], vec![0, 1]]),
            Err(QuandleError::RightNotBijective { column: 0 })
        );
        assert_eq!(
            Quandle::from_rows(&[vec![1, 0], vec![1, 0]]),
            Err(QuandleError::NotIdempotent { point: 0 })
        );
        assert_eq!(
            Quandle::from_rows(&[vec![0, 2], vec![1, 1]]),
            Err(QuandleError::OutOfRange { row: 0, col: 1, value: 2, n: 2 })
        );
        // Idempotent with bijective columns but not self-distributive:
        // (1*0)*2 = 2 while (1*2)*(0*2) = 0.
        let bad = Quandle::from_rows(&[
            vec![0, 0, 1, 0],
            vec![2, 1, 0, 1],
            vec![3, 2, 2, 2],
            vec![1, 3, 3, 3],
        ]);
        assert!(matches!(bad, Err(QuandleError::NotDistributive { .. })));
    }

    #[test]
    fn dihedral_table_and_multiplications() {
        let d4 = Quandle::dihedral(4);
        assert_eq!(d4.right_mult(1).image(), &[2, 1, 0, 3]);
        assert_eq!(d4.left_mult(0), vec![0, 2, 0, 2]);
        assert!(!d4.is_latin());
        assert!(!d4.is_connected());
        let d5 = Quandle::dihedral(5);
        assert!(d5.is_latin());
        assert!(d5.is_connected());
    }

    #[test]
    fn trivial_quandle_left_mult_is_constant() {
        let t3 = Quandle::trivial(3);
        for y in 0..3 {
            assert_eq!(t3.left_mult(y), vec![y, y, y]);
            assert!(t3.right_mult(y).is_identity());
        }
        assert!(!t3.is_latin());
        assert_eq!(t3.inner_group().order(), 1);
    }

    #[test]
    fn inner_group_orders() {
        assert_eq!(Quandle::dihedral(3).inner_group().order(), 6);
        assert_eq!(Quandle::dihedral(4).inner_group().order(), 4);
        assert_eq!(Quandle::trivial(5).inner_group().order(), 1);
    }

    #[test]
    fn orbit_partitions() {
        let d6 = Quandle::dihedral(6);
        assert_eq!(d6.orbits().blocks(), &[vec![0, 2, 4], vec![1, 3, 5]]);
        let t = two_orbit_three();
        assert_eq!(t.orbits().blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(t.orbits().block_of(1), 0);
        assert_eq!(t.orbits().block_of(2), 1);
        assert!(Quandle::dihedral(3).is_connected());
        assert!(Quandle::trivial(1).is_connected());
    }

    #[test]
    fn alexander_constructor() {
        assert_eq!(
            Quandle::alexander(4, 2),
            Err(QuandleError::NotAUnit { t: 2, modulus: 4 })
        );
        let a = Quandle::alexander(5, 2).unwrap();
        assert!(a.is_latin());
        assert!(a.is_connected());
        // t = n-1 recovers the dihedral quandle.
        assert_eq!(Quandle::alexander(7, 6).unwrap(), Quandle::dihedral(7));
    }

    #[test]
    fn relabel_preserves_validity_and_isomorphism() {
        let t = two_orbit_three();
        let sigma = Permutation::new(vec![2, 0, 1]).unwrap();
        let r = t.relabel(&sigma);
        assert_eq!(t.isomorphism_to(&r).is_some(), true);
        assert!(t.isomorphism_to(&Quandle::trivial(3)).is_none());
    }

    #[test]
    fn isomorphism_agrees_with_exhaustive_search_at_small_orders() {
        let qs = enumerate_quandles(4).unwrap();
        for a in &qs {
            for b in &qs {
                let exhaustive = all_permutations(4).into_iter().any(|sigma| {
                    (0..4).all(|i| {
                        (0..4).all(|j| sigma.apply(a.op(i, j)) == b.op(sigma.apply(i), sigma.apply(j)))
                    })
                });
                assert_eq!(a.isomorphism_to(b).is_some(), exhaustive);
            }
        }
    }

    #[test]
    fn automorphism_groups() {
        // Dihedral quandle on Z_5: automorphisms are the affine maps x ↦ ax+b.
        assert_eq!(Quandle::dihedral(5).automorphisms().len(), 20);
        // Trivial quandle: every bijection.
        assert_eq!(Quandle::trivial(3).automorphisms().len(), 6);
        for a in Quandle::dihedral(4).automorphisms() {
            let d4 = Quandle::dihedral(4);
            assert_eq!(d4.relabel(&a), d4);
        }
    }

    #[test]
    fn enumeration_counts_up_to_isomorphism() {
        assert_eq!(enumerate_quandles(1).unwrap().len(), 1);
        assert_eq!(enumerate_quandles(2).unwrap().len(), 1);
        assert_eq!(enumerate_quandles(3).unwrap().len(), 3);
        assert_eq!(enumerate_quandles(4).unwrap().len(), 7);
        assert_eq!(
            enumerate_quandles(7),
            Err(QuandleError::OrderTooLarge { n: 7, cap: QUANDLE_ENUMERATION_CAP })
        );
    }

    #[test]
    fn enumeration_is_canonical_and_deduplicated() {
        let qs = enumerate_quandles(3).unwrap();
        for (i, a) in qs.iter().enumerate() {
            assert_eq!(a.canonical_table(), a.table, "representatives are canonical");
            for b in qs.iter().skip(i + 1) {
                assert!(a.isomorphism_to(b).is_none(), "distinct classes");
            }
        }
        // Every order-3 quandle is isomorphic to something in the list.
        assert!(qs.iter().any(|c| two_orbit_three().isomorphism_to(c).is_some()));
    }

    #[test]
    fn latin_implies_connected_for_enumerated_orders() {
        for n in 1..=5 {
            for q in enumerate_quandles(n).unwrap() {
                if q.is_latin() {
                    assert!(q.is_connected(), "latin quandle with order {n} must be connected");
                }
            }
        }
    }

    #[test]
    fn text_round_trip_and_diagnostics() {
        let t = two_orbit_three();
        assert_eq!(Quandle::parse_text(&t.to_text()).unwrap(), t);

        let err = Quandle::parse_text("2\n0 0\n0").unwrap_err();
        assert_eq!((err.line, err.col), (3, 1));
        let err = Quandle::parse_text("3\n0 x 1\n1 1 0\n2 2 2").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        let err = Quandle::parse_text("").unwrap_err();
        assert_eq!(err.line, 1);
        // Valid syntax, invalid algebra: surfaces the axiom in the message.
        let err = Quandle::parse_text("2\n0 0\n0 1").unwrap_err();
        assert!(err.message.contains("column 0"));
    }

    #[test]
    fn json_round_trip() {
        let t = two_orbit_three();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(Quandle::parse_json(&js).unwrap(), t);
        assert!(Quandle::parse_json("{\"n\": 2, \"table\": [[0,0],[0,1]]}").is_err());
        let err = Quandle::parse_json("{\"n\": 2,\n \"table\": [[0,0],").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
