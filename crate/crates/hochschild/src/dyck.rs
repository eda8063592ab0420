//! Dyck paths under the dexter covering moves, the triword-shaped interval
//! F(n), and the reading bijection between the two worlds.
//!
//! A Dyck path is stored as its step word: `1` is a north-east step, `0` a
//! south-east step. The dexter order is generated by moves that shift a
//! *movable subpath* (a primitive factor sitting after a descent run) to the
//! left across part of that run. `F(n)` is the interval between
//! `1100(10)^n` and `1 1^n 0^n 100` inside the paths of semilength `n + 2`;
//! reading its valleys produces triwords, and [`rho`]/[`rho_inv`] realize the
//! order isomorphism with `Tr(n)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::poset::FinitePoset;
use crate::triword::{hasse, Triword};
use crate::{Error, Result};

/// A Dyck path: balanced word over `{0,1}` whose prefixes never go below the
/// axis. Lexicographic `Ord` on the step word is provided for deterministic
/// output; it is unrelated to the dexter order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(Vec<u8>);

impl DyckPath {
    pub fn new(steps: Vec<u8>) -> Result<Self> {
        let mut height: i64 = 0;
        for (pos, &s) in steps.iter().enumerate() {
            match s {
                1 => height += 1,
                0 => {
                    height -= 1;
                    if height < 0 {
                        return Err(Error::NotADyckPath);
                    }
                }
                other => {
                    return Err(Error::BadAlphabet {
                        position: pos + 1,
                        letter: char::from_digit(other as u32, 10).unwrap_or('?'),
                    })
                }
            }
        }
        if height != 0 {
            return Err(Error::NotADyckPath);
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of north-east steps (the path's size).
    pub fn semilength(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    /// Heights after each step; entry `i` is the ordinate after step `i`.
    fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        self.0
            .iter()
            .map(|&s| {
                h += if s == 1 { 1 } else { -1 };
                h
            })
            .collect()
    }

    /// Valleys: factors `01`, reported as (index of the `0`, height of the
    /// valley floor).
    pub fn valleys(&self) -> Vec<(usize, i64)> {
        let heights = self.heights();
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] == 0 && self.0[i] == 1)
            .map(|i| (i - 1, heights[i - 1]))
            .collect()
    }

    /// All movable subpaths: primitive factors `x` preceded by `1 0^m`
    /// (`m ≥ 1`) and followed by the end of the path or a north-east step.
    pub fn movable_subpaths(&self) -> Vec<MovableSubpath> {
        let w = &self.0;
        let mut found = Vec::new();
        for start in 2..w.len() {
            if w[start] != 1 || w[start - 1] != 0 {
                continue;
            }
            // the only primitive factor starting here ends at the first
            // return to its starting level
            let mut depth: i64 = 0;
            let mut end = None;
            for (k, &s) in w.iter().enumerate().skip(start) {
                depth += if s == 1 { 1 } else { -1 };
                if depth == 0 {
                    end = Some(k);
                    break;
                }
            }
            let Some(end) = end else { continue };
            if end + 1 < w.len() && w[end + 1] != 1 {
                continue;
            }
            let mut m = 0;
            while m < start && w[start - 1 - m] == 0 {
                m += 1;
            }
            if start == m || w[start - m - 1] != 1 {
                continue; // descent run must be preceded by a north-east step
            }
            found.push(MovableSubpath {
                position: start,
                m,
                length: end - start + 1,
            });
        }
        found
    }

    /// All paths reached by one dexter move, deduplicated and sorted.
    pub fn dexter_covers(&self) -> Vec<DyckPath> {
        let mut out: Vec<DyckPath> = self
            .movable_subpaths()
            .iter()
            .flat_map(|mv| mv.moves())
            .map(|step| step.apply(self))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Reads the path into a triword: a consecutive-rise counter is kept
    /// (ignoring the initial double rise), and each valley of height `h`
    /// emits `h` followed by that many `2`s. Fails with
    /// [`Error::OutsideInterval`] when the result is not a triword that reads
    /// back to the same path.
    pub fn rho(&self) -> Result<Triword> {
        let w = &self.0;
        if self.semilength() < 2 {
            return Err(Error::OutsideInterval);
        }
        let n = self.semilength() - 2;
        let mut letters: Vec<u8> = Vec::with_capacity(n);
        let mut doubled_rises = 0usize;
        let mut height: i64 = 0;
        for i in 0..w.len() {
            if i >= 2 && w[i - 1] == 1 && w[i] == 1 {
                doubled_rises += 1;
            }
            if i >= 1 && w[i - 1] == 0 && w[i] == 1 {
                if !(0..=2).contains(&height) {
                    return Err(Error::OutsideInterval);
                }
                letters.push(height as u8);
                letters.extend(std::iter::repeat(2).take(doubled_rises));
                doubled_rises = 0;
            }
            height += if w[i] == 1 { 1 } else { -1 };
        }
        if letters.len() != n {
            return Err(Error::OutsideInterval);
        }
        let word = Triword::new(letters).map_err(|_| Error::OutsideInterval)?;
        if rho_inv(&word) == *self {
            Ok(word)
        } else {
            Err(Error::OutsideInterval)
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::BadAlphabet {
                    position: pos + 1,
                    letter: other,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        DyckPath::new(steps)
    }
}

/// A movable subpath of a fixed Dyck path: the factor starts at `position`,
/// spans `length` steps, and is preceded by exactly `m` south-east steps
/// (themselves preceded by a north-east step).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MovableSubpath {
    pub position: usize,
    pub m: usize,
    pub length: usize,
}

impl MovableSubpath {
    /// The dexter moves available on this subpath: one per split
    /// `α + β = m` with `β ≥ 1`.
    pub fn moves(&self) -> Vec<DexterMove> {
        (1..=self.m)
            .map(|beta| DexterMove {
                prefix_length: self.position - self.m - 1,
                m: self.m,
                subpath_length: self.length,
                alpha: self.m - beta,
                beta,
            })
            .collect()
    }
}

/// One dexter covering move on `d = p 1 0^m x s`: rebuild as
/// `p 1 0^α x 0^β s` with `α + β = m`, `β ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DexterMove {
    pub prefix_length: usize,
    pub m: usize,
    pub subpath_length: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl DexterMove {
    pub fn apply(&self, d: &DyckPath) -> DyckPath {
        assert_eq!(self.alpha + self.beta, self.m, "split must cover the run");
        let w = d.steps();
        let x_start = self.prefix_length + 1 + self.m;
        let x_end = x_start + self.subpath_length;
        let mut out = Vec::with_capacity(w.len());
        out.extend_from_slice(&w[..=self.prefix_length]);
        out.extend(std::iter::repeat(0).take(self.alpha));
        out.extend_from_slice(&w[x_start..x_end]);
        out.extend(std::iter::repeat(0).take(self.beta));
        out.extend_from_slice(&w[x_end..]);
        DyckPath::new(out).expect("dexter moves preserve Dyck paths")
    }
}

/// Bottom of the interval F(n): `1100(10)^n`.
pub fn bottom_path(n: usize) -> DyckPath {
    let mut steps = vec![1, 1, 0, 0];
    for _ in 0..n {
        steps.extend_from_slice(&[1, 0]);
    }
    DyckPath(steps)
}

/// Top of the interval F(n): `1 1^n 0^n 100`.
pub fn top_path(n: usize) -> DyckPath {
    let mut steps = vec![1];
    steps.extend(std::iter::repeat(1).take(n));
    steps.extend(std::iter::repeat(0).take(n));
    steps.extend_from_slice(&[1, 0, 0]);
    DyckPath(steps)
}

/// The elements of F(n) = [`bottom_path`, `top_path`] in the dexter order on
/// paths of semilength n + 2, sorted by step word.
pub fn interval_elements(n: usize) -> Result<Vec<DyckPath>> {
    if n < 1 {
        return Err(Error::BadParameter(format!(
            "the interval needs n ≥ 1, got {n}"
        )));
    }
    let bottom = bottom_path(n);
    let top = top_path(n);
    // upward closure of the bottom
    let mut seen: HashSet<DyckPath> = HashSet::new();
    let mut queue = VecDeque::from([bottom.clone()]);
    seen.insert(bottom);
    while let Some(d) = queue.pop_front() {
        for up in d.dexter_covers() {
            if seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    // intersect with the downward closure of the top: reverse reachability
    let mut kept: HashSet<DyckPath> = HashSet::new();
    if seen.contains(&top) {
        let up_edges: HashMap<&DyckPath, Vec<DyckPath>> = seen
            .iter()
            .map(|d| (d, d.dexter_covers()))
            .collect();
        let mut down_of: HashMap<&DyckPath, Vec<&DyckPath>> = HashMap::new();
        for (d, ups) in &up_edges {
            for up in ups {
                if let Some(key) = seen.get(up) {
                    down_of.entry(key).or_default().push(d);
                }
            }
        }
        let mut queue = VecDeque::from([seen.get(&top).unwrap()]);
        kept.insert(top.clone());
        while let Some(d) = queue.pop_front() {
            for &below in down_of.get(d).into_iter().flatten() {
                if kept.insert(below.clone()) {
                    queue.push_back(below);
                }
            }
        }
    }
    let mut elements: Vec<DyckPath> = kept.into_iter().collect();
    elements.sort();
    for d in &elements {
        assert!(
            interval_shape_ok(d),
            "interval element {d} violates the expected shape"
        );
    }
    Ok(elements)
}

/// The interval F(n) as a finite poset under the induced dexter covers,
/// labeled by step words.
pub fn generate_f(n: usize) -> Result<FinitePoset> {
    let elements = interval_elements(n)?;
    let inside: HashSet<&DyckPath> = elements.iter().collect();
    let labels: Vec<String> = elements.iter().map(|d| d.to_string()).collect();
    Ok(FinitePoset::from_elements_and_upper_covers(labels, |i| {
        elements[i]
            .dexter_covers()
            .into_iter()
            .filter(|d| inside.contains(d))
            .map(|d| d.to_string())
            .collect()
    }))
}

/// Shape facts true of every element of F(n): starts with a double rise,
/// valley floors are at height 0 or 1 and weakly decrease left to right, and
/// the path ends with `010` or `0100`.
fn interval_shape_ok(d: &DyckPath) -> bool {
    let w = d.steps();
    if w.len() < 4 || w[0] != 1 || w[1] != 1 {
        return false;
    }
    let heights: Vec<i64> = d.valleys().iter().map(|&(_, h)| h).collect();
    if heights.iter().any(|&h| h > 1) {
        return false;
    }
    if heights.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    w.ends_with(&[0, 1, 0]) || w.ends_with(&[0, 1, 0, 0])
}

/// Rebuilds the unique path of F(n) that reads to the given triword: the
/// inverse of [`DyckPath::rho`], computed directly from the letter blocks
/// rather than by searching the interval.
pub fn rho_inv(word: &Triword) -> DyckPath {
    // split into blocks: each 0/1 letter opens a block, the 2s following it
    // record doubled rises
    let mut blocks: Vec<(u8, usize)> = Vec::new();
    for &letter in word.letters() {
        match letter {
            2 => blocks.last_mut().expect("triwords cannot start with 2").1 += 1,
            digit => blocks.push((digit, 0)),
        }
    }
    let mut steps: Vec<u8> = vec![1, 1];
    let mut height: i64 = 2;
    for &(floor, doubled) in &blocks {
        steps.extend(std::iter::repeat(1).take(doubled));
        height += doubled as i64;
        let descent = height - floor as i64;
        steps.extend(std::iter::repeat(0).take(descent as usize));
        steps.push(1);
        height = floor as i64 + 1;
    }
    steps.extend(std::iter::repeat(0).take(height as usize));
    DyckPath::new(steps).expect("reconstructed step word is a Dyck path")
}

/// Outcome of checking that reading is an order isomorphism F(n) → Tr(n).
#[derive(Debug, Clone)]
pub struct IsomorphismReport {
    pub n: usize,
    pub interval_size: usize,
    pub triword_size: usize,
    pub matched_edges: usize,
    pub failures: Vec<String>,
}

impl IsomorphismReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IsomorphismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(
                f,
                "n={}: isomorphic, {} elements, {} edges matched",
                self.n, self.interval_size, self.matched_edges
            )
        } else {
            write!(
                f,
                "n={}: NOT isomorphic ({} vs {} elements): {}",
                self.n,
                self.interval_size,
                self.triword_size,
                self.failures.join("; ")
            )
        }
    }
}

/// Checks that reading paths is a bijection F(n) → Tr(n) preserving covers in
/// both directions, by relabeling the interval poset through [`DyckPath::rho`]
/// and comparing it with the triword Hasse diagram.
pub fn verify_isomorphism(n: usize) -> Result<IsomorphismReport> {
    let interval = generate_f(n)?;
    let triwords = hasse(n);
    let mut failures = Vec::new();

    let mut images: Vec<String> = Vec::with_capacity(interval.len());
    for label in interval.elements() {
        let path: DyckPath = label.parse().expect("interval labels are paths");
        match path.rho() {
            Ok(word) => images.push(word.to_string()),
            Err(e) => {
                failures.push(format!("rho({label}) failed: {e}"));
                images.push(String::new());
            }
        }
    }
    if failures.is_empty() {
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != interval.len() {
            failures.push("rho is not injective on the interval".into());
        } else if sorted != triwords.elements() {
            failures.push("rho image differs from the triword set".into());
        }
    }
    if failures.is_empty() {
        let relabeled = FinitePoset::new(
            images.clone(),
            &interval
                .covers()
                .iter()
                .map(|&(a, b)| (images[a].clone(), images[b].clone()))
                .collect::<Vec<_>>(),
        )?;
        if relabeled != triwords {
            let relabeled_edges: HashSet<_> = relabeled.covers().iter().collect();
            let triword_edges: HashSet<_> = triwords.covers().iter().collect();
            for &&(a, b) in relabeled_edges.difference(&triword_edges) {
                failures.push(format!(
                    "cover {} -> {} exists in F(n) but not in Tr(n)",
                    relabeled.label(a),
                    relabeled.label(b)
                ));
            }
            for &&(a, b) in triword_edges.difference(&relabeled_edges) {
                failures.push(format!(
                    "cover {} -> {} exists in Tr(n) but not in F(n)",
                    triwords.label(a),
                    triwords.label(b)
                ));
            }
        }
    }
    Ok(IsomorphismReport {
        n,
        interval_size: interval.len(),
        triword_size: triwords.len(),
        matched_edges: interval.covers().len(),
        failures,
    })
}
