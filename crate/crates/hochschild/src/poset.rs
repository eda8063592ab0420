//! Explicit finite posets: element labels plus covering pairs.
//!
//! `FinitePoset` is the common container for `Tr(n)`, the Dyck interval
//! `F(n)`, spines, doubled posets and ideal lattices. Elements are kept in
//! canonical lexicographic order and covers as sorted `(lower, upper)` index
//! pairs, so structural equality is plain `==` and exports are reproducible.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// Builds a poset from sorted-or-not labels and explicit cover pairs given
    /// by label. Labels are deduplicated and sorted; covers are validated to
    /// be acyclic (Hasse irredundancy is the caller's responsibility and can
    /// be asserted separately with [`FinitePoset::validate_hasse`]).
    pub fn new(labels: Vec<String>, cover_labels: &[(String, String)]) -> Result<Self> {
        let mut elements = labels;
        elements.sort();
        elements.dedup();
        let index: HashMap<&str, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut covers = Vec::with_capacity(cover_labels.len());
        for (a, b) in cover_labels {
            let ia = *index.get(a.as_str()).ok_or_else(|| Error::NoSuchElement(a.clone()))?;
            let ib = *index.get(b.as_str()).ok_or_else(|| Error::NoSuchElement(b.clone()))?;
            covers.push((ia, ib));
        }
        covers.sort_unstable();
        covers.dedup();
        let poset = FinitePoset { elements, covers };
        poset.check_acyclic()?;
        Ok(poset)
    }

    /// Builds from a label list and a per-element upper-cover callback
    /// (receiving the index of the element in the *sorted* label order).
    /// Used for `Tr(n)` where covers come from a direct rule rather than an
    /// all-pairs scan.
    pub fn from_elements_and_upper_covers<F>(labels: Vec<String>, upper: F) -> Self
    where
        F: Fn(usize) -> Vec<String>,
    {
        let mut elements = labels;
        elements.sort();
        elements.dedup();
        let index: HashMap<&str, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut covers = Vec::new();
        for i in 0..elements.len() {
            for up in upper(i) {
                let j = *index
                    .get(up.as_str())
                    .unwrap_or_else(|| panic!("upper cover {up} not among the elements"));
                covers.push((i, j));
            }
        }
        covers.sort_unstable();
        covers.dedup();
        FinitePoset { elements, covers }
    }

    /// Builds the poset of an arbitrary order relation by transitive
    /// reduction. `leq` must be a partial order on the given labels.
    pub fn from_leq<F>(labels: Vec<String>, leq: F) -> Self
    where
        F: Fn(&str, &str) -> bool,
    {
        let mut elements = labels;
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let mut up = vec![Bits::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(&elements[i], &elements[j]) {
                    up[i].set(j);
                }
            }
        }
        let covers = reduction_from_strict_up(&up);
        FinitePoset { elements, covers }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(label)).ok()
    }

    /// Upward adjacency lists (covers leaving each element).
    pub fn up_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            adj[a].push(b);
        }
        adj
    }

    /// Downward adjacency lists (covers entering each element).
    pub fn down_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            adj[b].push(a);
        }
        adj
    }

    /// Reflexive-transitive closure of the covering relation.
    pub fn closure(&self) -> Closure {
        let n = self.len();
        let up_adj = self.up_adjacency();
        let order = self.topological_order().expect("covers are acyclic");
        let mut up = vec![Bits::new(n); n];
        for &i in order.iter().rev() {
            up[i].set(i);
            let succ: Vec<usize> = up_adj[i].clone();
            for j in succ {
                let (a, b) = split_two(&mut up, i, j);
                a.union_with(b);
            }
        }
        let mut down = vec![Bits::new(n); n];
        for i in 0..n {
            for j in up[i].iter() {
                down[j].set(i);
            }
        }
        Closure { up, down }
    }

    /// Unique minimal element, if there is exactly one.
    pub fn bottom(&self) -> Option<usize> {
        let mut have_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            have_lower[b] = true;
        }
        let mins: Vec<usize> = (0..self.len()).filter(|&i| !have_lower[i]).collect();
        match mins.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// Unique maximal element, if there is exactly one.
    pub fn top(&self) -> Option<usize> {
        let mut have_upper = vec![false; self.len()];
        for &(a, _) in &self.covers {
            have_upper[a] = true;
        }
        let maxs: Vec<usize> = (0..self.len()).filter(|&i| !have_upper[i]).collect();
        match maxs.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// A linear extension of the order (topological order of the covers).
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let up_adj = self.up_adjacency();
        let mut indegree = vec![0usize; n];
        for &(_, b) in &self.covers {
            indegree[b] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        ready.sort_unstable_by(|a, b| b.cmp(a));
        let mut order = Vec::with_capacity(n);
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in &up_adj[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    // keep determinism: smallest index first
                    let pos = ready.binary_search_by(|x| j.cmp(x)).unwrap_or_else(|p| p);
                    ready.insert(pos, j);
                }
            }
        }
        if order.len() != n {
            return Err(Error::MalformedChain("covering relation has a cycle".into()));
        }
        Ok(order)
    }

    fn check_acyclic(&self) -> Result<()> {
        self.topological_order().map(|_| ())
    }

    /// Asserts the Hasse condition: no cover pair is implied by transitivity
    /// of the remaining covers.
    pub fn validate_hasse(&self) -> Result<()> {
        let closure = self.closure();
        let up_adj = self.up_adjacency();
        for &(a, b) in &self.covers {
            for &mid in &up_adj[a] {
                if mid != b && closure.leq(mid, b) {
                    return Err(Error::MalformedChain(format!(
                        "cover {} -> {} is implied via {}",
                        self.elements[a], self.elements[b], self.elements[mid]
                    )));
                }
            }
        }
        Ok(())
    }

    /// JSON export: `{"n": …, "elements": […], "covers": [[i, j], …]}`.
    pub fn to_json(&self, n: usize) -> String {
        let doc = PosetJson {
            n,
            elements: self.elements.clone(),
            covers: self.covers.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> Result<(usize, FinitePoset)> {
        let doc: PosetJson = serde_json::from_str(text)
            .map_err(|e| Error::MalformedChain(format!("bad poset JSON: {e}")))?;
        let poset = FinitePoset {
            elements: doc.elements,
            covers: doc.covers,
        };
        if poset.elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedChain("elements not sorted and unique".into()));
        }
        if poset.covers.iter().any(|&(a, b)| a >= poset.elements.len() || b >= poset.elements.len()) {
            return Err(Error::MalformedChain("cover index out of range".into()));
        }
        poset.check_acyclic()?;
        Ok((doc.n, poset))
    }

    /// Hasse diagram in DOT, edges directed upward (lower -> upper).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for label in &self.elements {
            let shown = if label.is_empty() { "ε" } else { label };
            let _ = writeln!(out, "  \"{shown}\";");
        }
        for &(a, b) in &self.covers {
            let la = if self.elements[a].is_empty() { "ε" } else { &self.elements[a] };
            let lb = if self.elements[b].is_empty() { "ε" } else { &self.elements[b] };
            let _ = writeln!(out, "  \"{la}\" -> \"{lb}\";");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
}

/// Reflexive up-sets and down-sets of a poset as bitsets.
pub struct Closure {
    up: Vec<Bits>,
    down: Vec<Bits>,
}

impl Closure {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn up_set(&self, i: usize) -> &Bits {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &Bits {
        &self.down[i]
    }

    /// Index of the least upper bound of `a` and `b`, when unique.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.up[a].clone();
        common.intersect_with(&self.up[b]);
        let minimals: Vec<usize> = common
            .iter()
            .filter(|&m| {
                let mut below = self.down[m].clone();
                below.intersect_with(&common);
                below.count() == 1
            })
            .collect();
        match minimals.as_slice() {
            [only] if common.count() > 0 => Some(*only),
            _ => None,
        }
    }

    /// Index of the greatest lower bound of `a` and `b`, when unique.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.down[a].clone();
        common.intersect_with(&self.down[b]);
        let maximals: Vec<usize> = common
            .iter()
            .filter(|&m| {
                let mut above = self.up[m].clone();
                above.intersect_with(&common);
                above.count() == 1
            })
            .collect();
        match maximals.as_slice() {
            [only] if common.count() > 0 => Some(*only),
            _ => None,
        }
    }
}

/// True when every pair of elements has a unique join and a unique meet.
pub fn is_lattice(p: &FinitePoset) -> bool {
    let closure = p.closure();
    let n = p.len();
    for a in 0..n {
        for b in a..n {
            if closure.join(a, b).is_none() || closure.meet(a, b).is_none() {
                return false;
            }
        }
    }
    true
}

/// Searches for an isomorphism of Hasse diagrams (equivalently of posets) by
/// backtracking with degree/height invariants. Returns the image of each
/// `a`-index in `b`, or None.
pub fn isomorphism(a: &FinitePoset, b: &FinitePoset) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.covers().len() != b.covers().len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // match rarest signatures first
    let mut order: Vec<usize> = (0..n).collect();
    let mut freq: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for s in &sig_a {
        *freq.entry(*s).or_default() += 1;
    }
    order.sort_by_key(|&i| (freq[&sig_a[i]], sig_a[i]));

    let up_a: Vec<Vec<usize>> = a.up_adjacency();
    let down_a: Vec<Vec<usize>> = a.down_adjacency();
    let adj_b: Vec<Bits> = {
        let mut adj = vec![Bits::new(n); n];
        for &(x, y) in b.covers() {
            adj[x].set(y);
        }
        adj
    };

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn backtrack(
        pos: usize,
        order: &[usize],
        sig_a: &[(usize, usize, usize)],
        sig_b: &[(usize, usize, usize)],
        up_a: &[Vec<usize>],
        down_a: &[Vec<usize>],
        adj_b: &[Bits],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for cand in 0..sig_b.len() {
            if used[cand] || sig_b[cand] != sig_a[v] {
                continue;
            }
            let ok = up_a[v]
                .iter()
                .filter(|&&w| image[w] != usize::MAX)
                .all(|&w| adj_b[cand].get(image[w]))
                && down_a[v]
                    .iter()
                    .filter(|&&w| image[w] != usize::MAX)
                    .all(|&w| adj_b[image[w]].get(cand));
            if !ok {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if backtrack(pos + 1, order, sig_a, sig_b, up_a, down_a, adj_b, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    if backtrack(0, &order, &sig_a, &sig_b, &up_a, &down_a, &adj_b, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// (height, indegree, outdegree) triple per element — a cheap isomorphism
/// invariant used for pruning.
fn signatures(p: &FinitePoset) -> Vec<(usize, usize, usize)> {
    let n = p.len();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(a, b) in p.covers() {
        outdeg[a] += 1;
        indeg[b] += 1;
    }
    let order = p.topological_order().expect("acyclic");
    let down_adj = p.down_adjacency();
    let mut height = vec![0usize; n];
    for &i in &order {
        for &j in &down_adj[i] {
            height[i] = height[i].max(height[j] + 1);
        }
    }
    (0..n).map(|i| (height[i], indeg[i], outdeg[i])).collect()
}

/// Covers from strict up-set bitsets: `y` covers `x` iff `y ∈ up(x)` and no
/// `z ∈ up(x)` lies strictly below `y`.
fn reduction_from_strict_up(up: &[Bits]) -> Vec<(usize, usize)> {
    let n = up.len();
    let mut covers = Vec::new();
    for x in 0..n {
        for y in up[x].iter() {
            let mut implied = false;
            for z in up[x].iter() {
                if z != y && up[z].get(y) {
                    implied = true;
                    break;
                }
            }
            if !implied {
                covers.push((x, y));
            }
        }
    }
    covers.sort_unstable();
    covers
}

fn split_two<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &T) {
    assert_ne!(i, j);
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &a[j])
    }
}

/// Plain growable bitset over `usize` indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triword::{generate, hasse};

    #[test]
    fn closure_and_reduction_agree_with_the_order() {
        for n in 1..=4 {
            let p = hasse(n);
            let closure = p.closure();
            let words = generate(n);
            for (i, u) in words.iter().enumerate() {
                for (j, v) in words.iter().enumerate() {
                    assert_eq!(
                        closure.leq(i, j),
                        u.leq(v).unwrap(),
                        "closure vs componentwise at ({u}, {v})"
                    );
                }
            }
            p.validate_hasse().unwrap();
        }
    }

    #[test]
    fn join_meet_tables_match_the_word_operations() {
        let p = hasse(3);
        let closure = p.closure();
        let words = generate(3);
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                let join = closure.join(i, j).unwrap();
                let meet = closure.meet(i, j).unwrap();
                assert_eq!(p.label(join), u.join(v).unwrap().to_string());
                assert_eq!(p.label(meet), u.meet(v).unwrap().to_string());
            }
        }
        assert!(is_lattice(&p));
    }

    #[test]
    fn json_round_trip() {
        let p = hasse(2);
        let text = p.to_json(2);
        let (n, q) = FinitePoset::from_json(&text).unwrap();
        assert_eq!(n, 2);
        assert_eq!(p, q);
    }

    #[test]
    fn dot_contains_every_edge() {
        let p = hasse(2);
        let dot = p.to_dot();
        for &(a, b) in p.covers() {
            assert!(dot.contains(&format!("\"{}\" -> \"{}\";", p.label(a), p.label(b))));
        }
    }

    #[test]
    fn isomorphism_finds_relabelings_and_rejects_non_isomorphic() {
        let p = hasse(3);
        // relabel arbitrarily but order-compatibly
        let q = FinitePoset::from_leq(
            generate(3).iter().map(|u| format!("x{u}")).collect(),
            |a, b| {
                let u: crate::Triword = a[1..].parse().unwrap();
                let v: crate::Triword = b[1..].parse().unwrap();
                u.leq(&v).unwrap()
            },
        );
        let map = isomorphism(&p, &q).expect("posets are isomorphic");
        for &(a, b) in p.covers() {
            assert!(q.covers().contains(&(map[a], map[b])));
        }
        let chain = FinitePoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
        )
        .unwrap();
        let vee = FinitePoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("a".into(), "c".into())],
        )
        .unwrap();
        assert!(isomorphism(&chain, &vee).is_none());
    }

    #[test]
    fn from_leq_matches_direct_construction() {
        for n in 1..=4 {
            let direct = hasse(n);
            let reduced = FinitePoset::from_leq(
                generate(n).iter().map(|u| u.to_string()).collect(),
                |a, b| {
                    let u: crate::Triword = a.parse().unwrap();
                    let v: crate::Triword = b.parse().unwrap();
                    u.leq(&v).unwrap()
                },
            );
            assert_eq!(direct, reduced);
        }
    }
}
