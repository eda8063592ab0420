//! Structural invariants of the triword lattices: the EL-labeling with its
//! shellability certificate, Möbius values, join/meet-irreducibles, the
//! longest-chain statistics, the spine with its Birkhoff reconstruction, and
//! the semidistributive/extremal/trim checks.
//!
//! Everything here is certified by exhaustive computation at small sizes; the
//! reports carry enough witnesses (chains, violating triples) to debug any
//! failure without rerunning.

use std::collections::HashMap;

use serde::Serialize;

use crate::exec;
use crate::poset::{isomorphism, Closure, FinitePoset};
use crate::triword::{generate, hasse, Triword};
use crate::{Error, Result};

/// Edge label of the EL-labeling: an upward cover `u ⋖ v` differing at
/// `position` (1-based) is labeled `(position, u[position])`. Labels compare
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ELLabel {
    pub position: usize,
    pub letter: u8,
}

/// Label of the cover `u ⋖ v`: the differing position paired with the letter
/// of the *lower* word there.
pub fn el_label(u: &Triword, v: &Triword) -> Result<ELLabel> {
    if !u.covers(v)? {
        return Err(Error::NotACover);
    }
    let i = u
        .letters()
        .iter()
        .zip(v.letters())
        .position(|(a, b)| a != b)
        .expect("cover pairs differ");
    Ok(ELLabel {
        position: i + 1,
        letter: u.letters()[i],
    })
}

/// All saturated chains from `u` to `v` (inclusive), in lexicographic order
/// of the visited words. The chain for `u = v` is the singleton `[u]`.
pub fn saturated_chains(u: &Triword, v: &Triword) -> Result<Vec<Vec<Triword>>> {
    if !u.leq(v)? {
        return Err(Error::NotAnInterval {
            lo: u.to_string(),
            hi: v.to_string(),
        });
    }
    fn dfs(current: &mut Vec<Triword>, top: &Triword, out: &mut Vec<Vec<Triword>>) {
        let last = current.last().unwrap();
        if last == top {
            out.push(current.clone());
            return;
        }
        for next in last.upper_covers() {
            if next.leq(top).unwrap() {
                current.push(next);
                dfs(current, top, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    dfs(&mut vec![u.clone()], v, &mut out);
    Ok(out)
}

/// The label word of a saturated chain.
pub fn chain_labels(chain: &[Triword]) -> Result<Vec<ELLabel>> {
    chain.windows(2).map(|w| el_label(&w[0], &w[1])).collect()
}

fn is_strictly_increasing(labels: &[ELLabel]) -> bool {
    labels.windows(2).all(|w| w[0] < w[1])
}

fn is_weakly_decreasing(labels: &[ELLabel]) -> bool {
    labels.windows(2).all(|w| w[0] >= w[1])
}

/// Shellability facts for one interval.
#[derive(Debug, Clone, Serialize)]
pub struct ShellabilityReport {
    pub interval: (String, String),
    pub increasing_chains: usize,
    pub weakly_decreasing_chains: usize,
    pub increasing_is_lex_min: bool,
}

impl ShellabilityReport {
    /// The EL-shellability conditions for this interval: a unique increasing
    /// chain which is lexicographically first, and at most one weakly
    /// decreasing chain.
    pub fn holds(&self) -> bool {
        self.increasing_chains == 1
            && self.increasing_is_lex_min
            && self.weakly_decreasing_chains <= 1
    }
}

impl std::fmt::Display for ShellabilityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}]: increasing={} weakly-decreasing={} lex-min={}",
            self.interval.0,
            self.interval.1,
            self.increasing_chains,
            self.weakly_decreasing_chains,
            self.increasing_is_lex_min
        )
    }
}

/// Certifies the EL-labeling on every comparable pair of `Tr(n)`, one report
/// per interval, sorted by interval endpoints.
pub fn certify_el_shellability(n: usize) -> Vec<ShellabilityReport> {
    let words = generate(n);
    let mut pairs = Vec::new();
    for u in &words {
        for v in &words {
            if u.leq(v).unwrap() {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    pairs.sort_by_key(|(u, v)| (u.to_string(), v.to_string()));
    exec::map_collect(pairs, |(u, v)| {
        let chains = saturated_chains(&u, &v).unwrap();
        let labeled: Vec<Vec<ELLabel>> = chains
            .iter()
            .map(|c| chain_labels(c).unwrap())
            .collect();
        let increasing: Vec<&Vec<ELLabel>> = labeled
            .iter()
            .filter(|l| is_strictly_increasing(l))
            .collect();
        let weakly_decreasing = labeled.iter().filter(|l| is_weakly_decreasing(l)).count();
        let lex_min = labeled.iter().min();
        let increasing_is_lex_min = match (increasing.as_slice(), lex_min) {
            ([only], Some(min)) => *only == min,
            _ => false,
        };
        ShellabilityReport {
            interval: (u.to_string(), v.to_string()),
            increasing_chains: increasing.len(),
            weakly_decreasing_chains: weakly_decreasing,
            increasing_is_lex_min,
        }
    })
}

/// Möbius value of the interval `[u, v]`, by the defining recursion.
pub fn mobius(u: &Triword, v: &Triword) -> Result<i64> {
    if !u.leq(v)? {
        return Err(Error::NotAnInterval {
            lo: u.to_string(),
            hi: v.to_string(),
        });
    }
    let interval: Vec<Triword> = generate(u.size())
        .into_iter()
        .filter(|z| u.leq(z).unwrap() && z.leq(v).unwrap())
        .collect();
    let index: HashMap<&Triword, usize> = interval.iter().enumerate().map(|(i, z)| (z, i)).collect();
    let mut memo: Vec<Option<i64>> = vec![None; interval.len()];
    fn value(
        k: usize,
        interval: &[Triword],
        index: &HashMap<&Triword, usize>,
        memo: &mut Vec<Option<i64>>,
    ) -> i64 {
        if let Some(v) = memo[k] {
            return v;
        }
        let target = &interval[k];
        let mut sum = 0;
        for (j, z) in interval.iter().enumerate() {
            if j != k && z.leq(target).unwrap() {
                sum += value(j, interval, index, memo);
            }
        }
        // μ(u,u) = 1 falls out: the sum below u itself is empty
        let v = if interval[k] == interval[0] { 1 } else { -sum };
        memo[k] = Some(v);
        v
    }
    // interval[0] is u: generate() is sorted and u is its own minimum
    debug_assert_eq!(&interval[0], u);
    Ok(value(index[v], &interval, &index, &mut memo))
}

/// Elements of `Tr(n)` with exactly one lower cover, sorted.
pub fn join_irreducibles(n: usize) -> Vec<Triword> {
    generate(n)
        .into_iter()
        .filter(|u| u.lower_covers().len() == 1)
        .collect()
}

/// Elements of `Tr(n)` with exactly one upper cover, sorted.
pub fn meet_irreducibles(n: usize) -> Vec<Triword> {
    generate(n)
        .into_iter()
        .filter(|u| u.upper_covers().len() == 1)
        .collect()
}

/// Shape `1⁺0*` or `0⁺20*`: what the join-irreducibles of `Tr(n)` look like.
pub fn is_join_irreducible_shape(u: &Triword) -> bool {
    let w = u.letters();
    let ones = w.iter().take_while(|&&c| c == 1).count();
    if ones >= 1 && w[ones..].iter().all(|&c| c == 0) {
        return true;
    }
    let zeros = w.iter().take_while(|&&c| c == 0).count();
    zeros >= 1
        && w.len() > zeros
        && w[zeros] == 2
        && w[zeros + 1..].iter().all(|&c| c == 0)
}

/// Shape `12*12*`, `12*02*` or `02*`: what the meet-irreducibles of `Tr(n)`
/// look like.
pub fn is_meet_irreducible_shape(u: &Triword) -> bool {
    let w = u.letters();
    if w.is_empty() {
        return false;
    }
    if w[0] == 0 {
        return w[1..].iter().all(|&c| c == 2);
    }
    if w[0] != 1 {
        return false;
    }
    let twos = w[1..].iter().take_while(|&&c| c == 2).count();
    let rest = &w[1 + twos..];
    match rest.first() {
        None => false,
        Some(&c) if c == 0 || c == 1 => rest[1..].iter().all(|&d| d == 2),
        _ => false,
    }
}

/// Longest saturated chain length from bottom to top, together with the set
/// of elements lying on some maximum-length chain.
pub fn maximal_chain_stats(n: usize) -> (usize, Vec<Triword>) {
    let words = generate(n);
    let poset = hasse(n);
    let order = poset.topological_order().expect("acyclic");
    let up = poset.up_adjacency();
    let down = poset.down_adjacency();
    let mut from_bottom = vec![0usize; poset.len()];
    for &i in &order {
        for &j in &down[i] {
            from_bottom[i] = from_bottom[i].max(from_bottom[j] + 1);
        }
    }
    let mut to_top = vec![0usize; poset.len()];
    for &i in order.iter().rev() {
        for &j in &up[i] {
            to_top[i] = to_top[i].max(to_top[j] + 1);
        }
    }
    let longest = (0..poset.len()).map(|i| from_bottom[i]).max().unwrap_or(0);
    let members: Vec<Triword> = (0..poset.len())
        .filter(|&i| from_bottom[i] + to_top[i] == longest)
        .map(|i| words[i].clone())
        .collect();
    (longest, members)
}

/// Spine membership: all zeros, or a leading 1 followed by letters in {1,2}
/// and then only zeros.
pub fn is_spine_word(u: &Triword) -> bool {
    let w = u.letters();
    if w.iter().all(|&c| c == 0) {
        return true;
    }
    if w.first() != Some(&1) {
        return false;
    }
    let inner = w[1..].iter().take_while(|&&c| c == 1 || c == 2).count();
    w[1 + inner..].iter().all(|&c| c == 0)
}

/// Join-irreducible shape inside the spine: `1⁺0*` or `1⁺20*`.
pub fn is_spine_join_irreducible_shape(u: &Triword) -> bool {
    let w = u.letters();
    let ones = w.iter().take_while(|&&c| c == 1).count();
    if ones == 0 {
        return false;
    }
    let rest = &w[ones..];
    if rest.iter().all(|&c| c == 0) {
        return true;
    }
    rest[0] == 2 && rest[1..].iter().all(|&c| c == 0)
}

/// The spine of `Tr(n)` as an induced subposet (in fact a distributive
/// sublattice).
pub fn spine(n: usize) -> FinitePoset {
    let labels: Vec<String> = generate(n)
        .into_iter()
        .filter(is_spine_word)
        .map(|u| u.to_string())
        .collect();
    FinitePoset::from_leq(labels, |a, b| {
        let u: Triword = a.parse().unwrap();
        let v: Triword = b.parse().unwrap();
        u.leq(&v).unwrap()
    })
}

/// The induced subposet of the spine on its join-irreducible elements
/// (those with exactly one lower cover in the spine).
pub fn spine_join_irreducibles(n: usize) -> FinitePoset {
    let s = spine(n);
    let down = s.down_adjacency();
    let labels: Vec<String> = (0..s.len())
        .filter(|&i| down[i].len() == 1)
        .map(|i| s.label(i).to_string())
        .collect();
    FinitePoset::from_leq(labels, |a, b| {
        let u: Triword = a.parse().unwrap();
        let v: Triword = b.parse().unwrap();
        u.leq(&v).unwrap()
    })
}

/// The lattice of down-closed subsets of `p`, ordered by inclusion. Ideals
/// are labeled by membership masks (character `i` says whether element `i`
/// of `p` belongs).
pub fn order_ideals(p: &FinitePoset) -> Result<FinitePoset> {
    if p.len() > 20 {
        return Err(Error::TooLarge {
            size: p.len(),
            limit: 20,
        });
    }
    let n = p.len();
    let closure = p.closure();
    let strict_down: Vec<u32> = (0..n)
        .map(|i| {
            closure
                .down_set(i)
                .iter()
                .filter(|&j| j != i)
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect();
    let mut seen = std::collections::HashSet::from([0u32]);
    let mut queue = std::collections::VecDeque::from([0u32]);
    let mut covers: Vec<(u32, u32)> = Vec::new();
    while let Some(mask) = queue.pop_front() {
        for x in 0..n {
            if mask >> x & 1 == 0 && strict_down[x] & !mask == 0 {
                let next = mask | 1 << x;
                covers.push((mask, next));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    let label = |m: u32| -> String {
        (0..n)
            .map(|i| if m >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    };
    let cover_labels: Vec<(String, String)> =
        covers.iter().map(|&(a, b)| (label(a), label(b))).collect();
    FinitePoset::new(seen.iter().map(|&m| label(m)).collect(), &cover_labels)
}

/// Checks that the spine is recovered from its join-irreducibles as an
/// ideal lattice.
pub fn birkhoff_reconstruction(n: usize) -> Result<bool> {
    let s = spine(n);
    let ideals = order_ideals(&spine_join_irreducibles(n))?;
    Ok(isomorphism(&s, &ideals).is_some())
}

fn op_tables(n: usize) -> (FinitePoset, Closure) {
    let p = hasse(n);
    let c = p.closure();
    (p, c)
}

/// Semidistributivity scan over all triples.
#[derive(Debug, Clone, Serialize)]
pub struct SemidistributivityReport {
    pub n: usize,
    pub triples: usize,
    pub join_violations: Vec<(String, String, String)>,
    pub meet_violations: Vec<(String, String, String)>,
}

impl SemidistributivityReport {
    pub fn holds(&self) -> bool {
        self.join_violations.is_empty() && self.meet_violations.is_empty()
    }
}

/// Exhaustively verifies both semidistributive laws on `Tr(n)`:
/// `x∨y = x∨z ⇒ x∨y = x∨(y∧z)` and its dual.
pub fn check_semidistributive(n: usize) -> SemidistributivityReport {
    let (p, c) = op_tables(n);
    semidistributivity_scan(&p, &c, n)
}

/// The same scan over an arbitrary finite lattice; `n` only tags the report.
/// Panics if some pair has no join or meet — check [`crate::poset::is_lattice`]
/// first when the input is not known to be a lattice.
pub fn check_semidistributive_poset(p: &FinitePoset, n: usize) -> SemidistributivityReport {
    let c = p.closure();
    semidistributivity_scan(p, &c, n)
}

fn semidistributivity_scan(p: &FinitePoset, c: &Closure, n: usize) -> SemidistributivityReport {
    let size = p.len();
    let join: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| c.join(a, b).unwrap()).collect())
        .collect();
    let meet: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| c.meet(a, b).unwrap()).collect())
        .collect();
    let per_x = exec::map_indices(size, |x| {
        let mut join_bad = Vec::new();
        let mut meet_bad = Vec::new();
        for y in 0..size {
            for z in 0..size {
                if join[x][y] == join[x][z] && join[x][y] != join[x][meet[y][z]] {
                    join_bad.push((x, y, z));
                }
                if meet[x][y] == meet[x][z] && meet[x][y] != meet[x][join[y][z]] {
                    meet_bad.push((x, y, z));
                }
            }
        }
        (join_bad, meet_bad)
    });
    let name = |i: usize| p.label(i).to_string();
    let mut join_violations = Vec::new();
    let mut meet_violations = Vec::new();
    for (jb, mb) in per_x {
        join_violations.extend(jb.into_iter().map(|(x, y, z)| (name(x), name(y), name(z))));
        meet_violations.extend(mb.into_iter().map(|(x, y, z)| (name(x), name(y), name(z))));
    }
    SemidistributivityReport {
        n,
        triples: size * size * size,
        join_violations,
        meet_violations,
    }
}

/// Extremality data: irreducible counts against the longest chain.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalityReport {
    pub n: usize,
    pub join_irreducibles: usize,
    pub meet_irreducibles: usize,
    pub longest_chain: usize,
}

impl ExtremalityReport {
    pub fn holds(&self) -> bool {
        self.join_irreducibles == self.longest_chain
            && self.meet_irreducibles == self.longest_chain
    }
}

pub fn check_extremal(n: usize) -> ExtremalityReport {
    ExtremalityReport {
        n,
        join_irreducibles: join_irreducibles(n).len(),
        meet_irreducibles: meet_irreducibles(n).len(),
        longest_chain: maximal_chain_stats(n).0,
    }
}

/// Trimness data: the left-modular elements and a maximal chain through them.
#[derive(Debug, Clone, Serialize)]
pub struct TrimReport {
    pub n: usize,
    pub left_modular: Vec<String>,
    pub chain: Option<Vec<String>>,
    pub longest_chain: usize,
}

impl TrimReport {
    /// Trim: extremal plus a maximal chain consisting of left-modular
    /// elements (its length necessarily matches the irreducible counts).
    pub fn holds(&self) -> bool {
        matches!(&self.chain, Some(c) if c.len() == self.longest_chain + 1)
    }
}

/// Finds the left-modular elements (`(y ∨ x) ∧ z = y ∨ (x ∧ z)` for all
/// `y ≤ z`) and a bottom-to-top saturated chain inside them of maximal
/// length.
pub fn check_trim(n: usize) -> TrimReport {
    let (p, c) = op_tables(n);
    let size = p.len();
    let join: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| c.join(a, b).unwrap()).collect())
        .collect();
    let meet: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| c.meet(a, b).unwrap()).collect())
        .collect();
    let comparable: Vec<(usize, usize)> = (0..size)
        .flat_map(|y| (0..size).filter(move |&z| y != z).map(move |z| (y, z)))
        .filter(|&(y, z)| c.leq(y, z))
        .collect();
    let left_modular_flags = exec::map_indices(size, |x| {
        comparable
            .iter()
            .all(|&(y, z)| meet[join[y][x]][z] == join[y][meet[x][z]])
    });
    let left_modular: Vec<usize> = (0..size).filter(|&i| left_modular_flags[i]).collect();

    // longest bottom-to-top saturated chain through left-modular elements
    let (longest_chain, _) = maximal_chain_stats(n);
    let order = p.topological_order().unwrap();
    let down = p.down_adjacency();
    let bottom = p.bottom().unwrap();
    let top = p.top().unwrap();
    let mut best: Vec<Option<(usize, Option<usize>)>> = vec![None; size];
    for &i in &order {
        if !left_modular_flags[i] {
            continue;
        }
        if i == bottom {
            best[i] = Some((0, None));
            continue;
        }
        let mut incoming: Option<(usize, Option<usize>)> = None;
        for &j in &down[i] {
            if let Some((len, _)) = best[j] {
                if incoming.is_none() || incoming.unwrap().0 < len + 1 {
                    incoming = Some((len + 1, Some(j)));
                }
            }
        }
        best[i] = incoming;
    }
    let chain = best[top].map(|_| {
        let mut labels = Vec::new();
        let mut cursor = Some(top);
        while let Some(i) = cursor {
            labels.push(p.label(i).to_string());
            cursor = best[i].and_then(|(_, prev)| prev);
        }
        labels.reverse();
        labels
    });
    let chain = match chain {
        Some(c) if c.len() == longest_chain + 1 => Some(c),
        _ => None,
    };
    TrimReport {
        n,
        left_modular: left_modular
            .into_iter()
            .map(|i| p.label(i).to_string())
            .collect(),
        chain,
        longest_chain,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Triword {
        s.parse().unwrap()
    }

    fn named_chain(chain: &[Triword]) -> Vec<String> {
        chain.iter().map(|u| u.to_string()).collect()
    }

    #[test]
    fn label_examples() {
        assert_eq!(
            el_label(&w("000"), &w("100")).unwrap(),
            ELLabel { position: 1, letter: 0 }
        );
        assert_eq!(
            el_label(&w("121"), &w("122")).unwrap(),
            ELLabel { position: 3, letter: 1 }
        );
        assert_eq!(
            el_label(&w("00"), &w("02")).unwrap(),
            ELLabel { position: 2, letter: 0 }
        );
        assert_eq!(el_label(&w("00"), &w("12")).unwrap_err(), Error::NotACover);
        assert!(ELLabel { position: 1, letter: 1 } < ELLabel { position: 2, letter: 0 });
    }

    #[test]
    fn chains_of_the_full_interval() {
        let chains = saturated_chains(&w("000"), &w("122")).unwrap();
        let named: Vec<Vec<String>> = chains.iter().map(|c| named_chain(c)).collect();
        assert!(named.contains(&vec![
            "000".into(),
            "100".into(),
            "110".into(),
            "120".into(),
            "121".into(),
            "122".into()
        ]));
        assert!(named.contains(&vec![
            "000".into(),
            "002".into(),
            "022".into(),
            "122".into()
        ]));
        assert_eq!(
            saturated_chains(&w("11"), &w("11")).unwrap(),
            vec![vec![w("11")]]
        );
        assert!(matches!(
            saturated_chains(&w("02"), &w("10")),
            Err(Error::NotAnInterval { .. })
        ));
    }

    #[test]
    fn displayed_chains_have_the_displayed_labels() {
        let increasing = vec![w("000"), w("100"), w("110"), w("120"), w("121"), w("122")];
        let labels = chain_labels(&increasing).unwrap();
        let expected: Vec<(usize, u8)> = vec![(1, 0), (2, 0), (2, 1), (3, 0), (3, 1)];
        assert_eq!(
            labels
                .iter()
                .map(|l| (l.position, l.letter))
                .collect::<Vec<_>>(),
            expected
        );
        assert!(is_strictly_increasing(&labels));

        let decreasing = vec![w("000"), w("002"), w("022"), w("122")];
        let labels = chain_labels(&decreasing).unwrap();
        assert_eq!(
            labels
                .iter()
                .map(|l| (l.position, l.letter))
                .collect::<Vec<_>>(),
            vec![(3, 0), (2, 0), (1, 0)]
        );
        assert!(is_weakly_decreasing(&labels));
    }

    #[test]
    fn shellability_certificates() {
        let reports = certify_el_shellability(2);
        assert_eq!(reports.len(), 13);
        assert!(reports.iter().all(|r| r.holds()), "n=2 intervals");

        let reports = certify_el_shellability(3);
        assert!(reports.iter().all(|r| r.holds()), "n=3 intervals");
        let full = reports
            .iter()
            .find(|r| r.interval == ("000".to_string(), "122".to_string()))
            .unwrap();
        assert_eq!(full.increasing_chains, 1);
        assert_eq!(full.weakly_decreasing_chains, 1);

        let reports = certify_el_shellability(4);
        assert!(reports.iter().all(|r| r.holds()), "n=4 intervals");
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(&w("11"), &w("11")).unwrap(), 1);
        assert_eq!(mobius(&w("00"), &w("10")).unwrap(), -1);
        for n in 1..=4 {
            let words = generate(n);
            for u in &words {
                for v in &words {
                    if u.leq(v).unwrap() {
                        let value = mobius(u, v).unwrap();
                        assert!((-1..=1).contains(&value), "mobius({u},{v}) = {value}");
                    }
                }
            }
        }
        assert!(matches!(
            mobius(&w("02"), &w("10")),
            Err(Error::NotAnInterval { .. })
        ));
    }

    #[test]
    fn irreducibles_and_their_shapes() {
        let j2: Vec<String> = join_irreducibles(2).iter().map(|u| u.to_string()).collect();
        assert_eq!(j2, vec!["02", "10", "11"]);
        let m2: Vec<String> = meet_irreducibles(2).iter().map(|u| u.to_string()).collect();
        assert_eq!(m2, vec!["02", "10", "11"]);
        assert_eq!(
            join_irreducibles(1).iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            vec!["1"]
        );
        assert_eq!(
            meet_irreducibles(1).iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            vec!["0"]
        );
        for n in 1..=6 {
            let j = join_irreducibles(n);
            let m = meet_irreducibles(n);
            assert_eq!(j.len(), 2 * n - 1, "|J(Tr({n}))|");
            assert_eq!(m.len(), 2 * n - 1, "|M(Tr({n}))|");
            assert!(j.iter().all(is_join_irreducible_shape));
            assert!(m.iter().all(is_meet_irreducible_shape));
            for u in generate(n) {
                assert_eq!(is_join_irreducible_shape(&u), j.contains(&u), "join shape of {u}");
                assert_eq!(is_meet_irreducible_shape(&u), m.contains(&u), "meet shape of {u}");
            }
        }
    }

    #[test]
    fn longest_chains_trace_the_spine() {
        let (len3, members3) = maximal_chain_stats(3);
        assert_eq!(len3, 5);
        let spine_words: Vec<Triword> = generate(3).into_iter().filter(is_spine_word).collect();
        assert_eq!(members3, spine_words);
        assert_eq!(maximal_chain_stats(1).0, 1);
        assert_eq!(maximal_chain_stats(4).0, 7);
        for n in 1..=5 {
            let (len, members) = maximal_chain_stats(n);
            assert_eq!(len, 2 * n - 1);
            assert!(members.iter().all(is_spine_word));
            assert_eq!(members.len(), 1 << n, "spine size at n={n}");
        }
    }

    #[test]
    fn spine_structure() {
        let s2 = spine(2);
        assert_eq!(s2.elements(), &["00", "10", "11", "12"]);
        assert_eq!(spine(3).len(), 8);
        for n in 1..=5 {
            let words: Vec<Triword> = generate(n).into_iter().filter(is_spine_word).collect();
            assert_eq!(words.len(), 1 << n);
            // closure under the lattice operations
            for u in &words {
                for v in &words {
                    assert!(words.contains(&u.join(v).unwrap()));
                    assert!(words.contains(&u.meet(v).unwrap()));
                }
            }
            // distributivity
            for x in &words {
                for y in &words {
                    for z in &words {
                        let lhs = x.meet(&y.join(z).unwrap()).unwrap();
                        let rhs = x.meet(y).unwrap().join(&x.meet(z).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "distributivity at ({x},{y},{z})");
                    }
                }
            }
        }
    }

    #[test]
    fn spine_irreducibles_form_a_ladder() {
        for n in 1..=6 {
            let j = spine_join_irreducibles(n);
            assert_eq!(j.len(), 2 * n - 1, "|J(spine)| at n={n}");
            for label in j.elements() {
                assert!(is_spine_join_irreducible_shape(&label.parse().unwrap()));
            }
            // expected ladder: the chain of 1^k 0^{n-k} plus one tooth
            // 1^{k-1} 2 0^{n-k} above each chain element with k ≥ 2
            let rung = |k: usize| format!("{}{}", "1".repeat(k), "0".repeat(n - k));
            let tooth = |k: usize| format!("{}2{}", "1".repeat(k - 1), "0".repeat(n - k));
            let mut labels: Vec<String> = (1..=n).map(rung).collect();
            labels.extend((2..=n).map(tooth));
            let mut covers: Vec<(String, String)> =
                (1..n).map(|k| (rung(k), rung(k + 1))).collect();
            covers.extend((2..=n).map(|k| (rung(k), tooth(k))));
            let expected = FinitePoset::new(labels, &covers).unwrap();
            assert_eq!(j, expected, "ladder at n={n}");
        }
    }

    #[test]
    fn ideal_lattices() {
        let antichain = FinitePoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[],
        )
        .unwrap();
        let boolean = order_ideals(&antichain).unwrap();
        assert_eq!(boolean.len(), 8);
        assert_eq!(boolean.covers().len(), 12);
        assert!(crate::poset::is_lattice(&boolean));

        let two_chain = FinitePoset::new(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into())],
        )
        .unwrap();
        let three_chain = order_ideals(&two_chain).unwrap();
        assert_eq!(three_chain.len(), 3);
        assert_eq!(three_chain.covers().len(), 2);

        let big = FinitePoset::new((0..21).map(|i| format!("e{i:02}")).collect(), &[]).unwrap();
        assert!(matches!(order_ideals(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn spine_is_recovered_from_its_irreducibles() {
        for n in 1..=5 {
            assert!(birkhoff_reconstruction(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn semidistributivity_scan() {
        for n in 1..=4 {
            let report = check_semidistributive(n);
            assert!(report.holds(), "n={n}: {:?}", report);
            assert_eq!(report.triples, generate(n).len().pow(3));
        }
    }

    #[test]
    fn extremality() {
        for n in 1..=5 {
            let report = check_extremal(n);
            assert!(report.holds(), "n={n}");
            assert_eq!(report.longest_chain, 2 * n - 1);
        }
    }

    #[test]
    fn trimness() {
        for n in 1..=4 {
            let report = check_trim(n);
            assert!(report.holds(), "n={n}: {:?}", report);
        }
        let r3 = check_trim(3);
        for word in ["000", "100", "110", "120", "121", "122"] {
            assert!(
                r3.left_modular.contains(&word.to_string()),
                "{word} should be left-modular"
            );
        }
    }
}
