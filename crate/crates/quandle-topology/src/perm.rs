//! Permutations of `{0..n-1}` and permutation groups generated by closure.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image {image:?} is not a bijection on 0..{degree}")]
    NotABijection { degree: usize, image: Vec<usize> },
}

/// A bijection on `{0..n-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn new(image: Vec<usize>) -> Result<Self, PermError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(PermError::NotABijection { degree: n, image });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))` — `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    /// Multiplicative order: least m ≥ 1 with self^m = id.
    pub fn multiplicative_order(&self) -> usize {
        let mut p = self.clone();
        let mut m = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            m += 1;
        }
        m
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "({start}")?;
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                write!(f, " {x}")?;
                seen[x] = true;
                x = self.image[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All n! permutations of `{0..n-1}`, in lexicographic order of image vectors.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if image.len() == n {
            out.push(Permutation { image: image.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                image.push(v);
                rec(n, image, used, out);
                image.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut image, &mut used, &mut out);
    out
}

/// A finite permutation group, stored as the full element set produced by
/// breadth-first closure of a generating set. Each element carries a witness
/// word: the generator indices whose left-to-right product reproduces it.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    words: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn closure(degree: usize, generators: Vec<Permutation>) -> PermGroup {
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut found: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
        let mut queue = vec![Permutation::identity(degree)];
        found.insert(Permutation::identity(degree), Vec::new());
        while let Some(cur) = queue.pop() {
            let word = found[&cur].clone();
            for (gi, g) in generators.iter().enumerate() {
                // Word order is "apply cur first, then g".
                let next = g.compose(&cur);
                if !found.contains_key(&next) {
                    let mut w = word.clone();
                    w.push(gi);
                    found.insert(next.clone(), w);
                    queue.push(next);
                }
            }
        }
        let mut elements: Vec<Permutation> = Vec::with_capacity(found.len());
        let mut words = Vec::with_capacity(found.len());
        for (p, w) in found {
            elements.push(p);
            words.push(w);
        }
        PermGroup { degree, generators, elements, words }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generator word for `elements()[i]`, applied left to right.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Re-multiplies the word of element `i`; used to audit the closure.
    pub fn evaluate_word(&self, i: usize) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for &gi in &self.words[i] {
            p = self.generators[gi].compose(&p);
        }
        p
    }
}

/// Orbits of a set of permutations acting on points, sorted by least element.
pub fn point_orbits(degree: usize, perms: &[Permutation]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; degree];
    let mut orbits = Vec::new();
    for start in 0..degree {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for p in perms {
                let y = p.apply(x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}
