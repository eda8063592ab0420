//! Interval doubling and the reconstruction of the triword lattices from a
//! point.
//!
//! Doubling replaces an interval `I` of a poset `P` by two stacked copies
//! `I × {0,1}` and extends the order by four case rules. Every `Tr(n)` arises
//! from the one-element poset by `2n − 1` such steps: one whole-poset
//! doubling to reach the 2-chain, then two steps per size increment — double
//! everything (appending the new last letter 0/2), then double the interval
//! of words `1(1+2)*0` (turning their last letter into 1).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::poset::{is_lattice, FinitePoset};
use crate::triword::hasse;
use crate::{Error, Result};

/// Doubles the interval `[lo, hi]` of `p`, labeling the two copies of an
/// interval element by appending the tag digit to its label.
pub fn double_interval(p: &FinitePoset, lo: &str, hi: &str) -> Result<FinitePoset> {
    double_interval_with(p, lo, hi, |base, tag| format!("{base}{tag}"))
}

/// Doubles the interval `[lo, hi]` of `p` with a caller-chosen relabeling of
/// the doubled copies. `relabel(base, tag)` is invoked with tag 0 for the
/// lower copy and tag 1 for the upper copy; elements outside the interval
/// keep their labels. All resulting labels must be distinct.
pub fn double_interval_with<F>(p: &FinitePoset, lo: &str, hi: &str, relabel: F) -> Result<FinitePoset>
where
    F: Fn(&str, u8) -> String,
{
    let a = p
        .index_of(lo)
        .ok_or_else(|| Error::NoSuchElement(lo.to_string()))?;
    let b = p
        .index_of(hi)
        .ok_or_else(|| Error::NoSuchElement(hi.to_string()))?;
    let closure = p.closure();
    if !closure.leq(a, b) {
        return Err(Error::NotAnInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    let mut labels: Vec<String> = Vec::new();
    let mut node_of: HashMap<String, (usize, Option<u8>)> = HashMap::new();
    for i in 0..p.len() {
        let doubled = closure.leq(a, i) && closure.leq(i, b);
        let tags: &[Option<u8>] = if doubled { &[Some(0), Some(1)] } else { &[None] };
        for &tag in tags {
            let label = match tag {
                None => p.label(i).to_string(),
                Some(t) => relabel(p.label(i), t),
            };
            if node_of.insert(label.clone(), (i, tag)).is_some() {
                return Err(Error::BadParameter(format!(
                    "relabeling produced the duplicate label {label:?}"
                )));
            }
            labels.push(label);
        }
    }
    Ok(FinitePoset::from_leq(labels, |x, y| {
        let (xi, xt) = node_of[x];
        let (yi, yt) = node_of[y];
        closure.leq(xi, yi)
            && match (xt, yt) {
                (Some(tx), Some(ty)) => tx <= ty,
                _ => true,
            }
    }))
}

fn replace_last(label: &str, letter: char) -> String {
    let mut s = label.to_string();
    s.pop();
    s.push(letter);
    s
}

fn append_letter(p: &FinitePoset, letter: char) -> FinitePoset {
    let labels: Vec<String> = p
        .elements()
        .iter()
        .map(|l| format!("{l}{letter}"))
        .collect();
    let covers: Vec<(String, String)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
        .collect();
    FinitePoset::new(labels, &covers).expect("relabeling keeps the poset valid")
}

/// The two doubling steps that grow word size `n` to `n + 1`:
/// `T0` (everything gets a trailing 0), `T02` (doubling all of `T0`; upper
/// copies end in 2), and `T` (doubling the interval of words `1(1+2)*0`;
/// upper copies end in 1). `T` is exactly the size-`n+1` triword lattice.
pub fn build_step_posets(n: usize) -> Result<(FinitePoset, FinitePoset, FinitePoset)> {
    if n < 1 {
        return Err(Error::BadParameter(format!(
            "the step construction needs n ≥ 1, got {n}"
        )));
    }
    let t0 = append_letter(&hasse(n), '0');
    let bottom = t0.label(t0.bottom().expect("lattice has a bottom")).to_string();
    let top = t0.label(t0.top().expect("lattice has a top")).to_string();
    let t02 = double_interval_with(&t0, &bottom, &top, |base, tag| {
        if tag == 0 {
            base.to_string()
        } else {
            replace_last(base, '2')
        }
    })?;
    let lo = format!("{}0", "1".repeat(n));
    let hi = format!("1{}0", "2".repeat(n - 1));
    let t = double_interval_with(&t02, &lo, &hi, |base, tag| {
        if tag == 0 {
            base.to_string()
        } else {
            replace_last(base, '1')
        }
    })?;
    Ok((t0, t02, t))
}

/// All posets on the way from the one-element poset to `Tr(n)`: the singleton,
/// then the result of each of the `2n − 1` doubling steps.
pub fn doubling_sequence(n: usize) -> Result<Vec<FinitePoset>> {
    let mut sequence = vec![FinitePoset::new(vec![String::new()], &[]).expect("singleton")];
    if n == 0 {
        return Ok(sequence);
    }
    let two_chain = double_interval(sequence.last().unwrap(), "", "")?;
    sequence.push(two_chain);
    for k in 1..n {
        let (_, t02, t) = build_step_posets(k)?;
        sequence.push(t02);
        sequence.push(t);
    }
    Ok(sequence)
}

/// Outcome of replaying the doubling construction from the singleton up to
/// `Tr(n + 1)`.
#[derive(Debug, Clone, Serialize)]
pub struct DoublingReport {
    pub source: usize,
    pub target: usize,
    pub steps_from_singleton: usize,
    pub expected_steps: usize,
    pub reconstructed_exactly: bool,
    pub lattices_checked: usize,
    pub failures: Vec<String>,
}

impl DoublingReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
            && self.reconstructed_exactly
            && self.steps_from_singleton == self.expected_steps
    }
}

impl fmt::Display for DoublingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tr({}) from Tr({}): steps {}/{} exact={} lattices-checked={}{}",
            self.target,
            self.source,
            self.steps_from_singleton,
            self.expected_steps,
            self.reconstructed_exactly,
            self.lattices_checked,
            if self.failures.is_empty() {
                String::new()
            } else {
                format!(" failures: {}", self.failures.join("; "))
            }
        )
    }
}

/// Replays the doubling sequence up to `Tr(n+1)`, checking that each stage
/// with triword labels equals the corresponding Hasse diagram and that each
/// intermediate of manageable size is a lattice.
pub fn verify_doubling_construction(n: usize) -> Result<DoublingReport> {
    const LATTICE_CHECK_LIMIT: usize = 160;
    let target = n + 1;
    let sequence = doubling_sequence(target)?;
    let mut failures = Vec::new();
    let mut lattices_checked = 0;
    for (index, poset) in sequence.iter().enumerate() {
        if poset.len() <= LATTICE_CHECK_LIMIT {
            lattices_checked += 1;
            if !is_lattice(poset) {
                failures.push(format!(
                    "stage {index} ({} elements) is not a lattice",
                    poset.len()
                ));
            }
        }
        // stage 0 is the singleton and stage 2m−1 is the size-m lattice; the
        // even stages in between are the half-way T02 posets
        if index == 0 || index % 2 == 1 {
            let size = index.div_ceil(2);
            if *poset != hasse(size) {
                failures.push(format!("stage {index} differs from the size-{size} lattice"));
            }
        }
    }
    let reconstructed_exactly = *sequence.last().unwrap() == hasse(target);
    Ok(DoublingReport {
        source: n,
        target,
        steps_from_singleton: sequence.len() - 1,
        expected_steps: 2 * target - 1,
        reconstructed_exactly,
        lattices_checked,
        failures,
    })
}

/// The words of the doubled interval `I_0` at size `n`, and their upper
/// copies `I_1` (last letter 1 instead of 0): shapes `1(1+2)*0` and
/// `1(1+2)*1`.
pub fn step_intervals(n: usize) -> (Vec<String>, Vec<String>) {
    fn expand(n: usize, last: char) -> Vec<String> {
        if n < 2 {
            return Vec::new();
        }
        let mut words = vec![];
        let middle = n - 2;
        for mask in 0..(1u32 << middle) {
            let mut w = String::from("1");
            for bit in 0..middle {
                w.push(if mask >> bit & 1 == 1 { '2' } else { '1' });
            }
            w.push(last);
            words.push(w);
        }
        words.sort();
        words
    }
    (expand(n, '0'), expand(n, '1'))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::check_semidistributive_poset;
    use crate::triword::generate;

    #[test]
    fn doubling_the_singleton_gives_the_two_chain() {
        let point = FinitePoset::new(vec![String::new()], &[]).unwrap();
        let chain = double_interval(&point, "", "").unwrap();
        assert_eq!(chain, hasse(1));
    }

    #[test]
    fn step_posets_small() {
        let (t0, t02, t) = build_step_posets(1).unwrap();
        assert_eq!(t0.elements(), &["00", "10"]);
        assert_eq!(t02.len(), 4);
        assert_eq!(t, hasse(2));

        let (t0, t02, t) = build_step_posets(2).unwrap();
        assert_eq!(t0.len(), 5);
        assert_eq!(t02.len(), 10);
        assert_eq!(
            t02.elements(),
            &["000", "002", "020", "022", "100", "102", "110", "112", "120", "122"]
        );
        assert_eq!(t, hasse(3));
        assert!(matches!(build_step_posets(0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn half_step_posets_are_induced_subposets() {
        // T02 carries the componentwise order of its labels
        for n in 1..=4 {
            let (_, t02, _) = build_step_posets(n).unwrap();
            let by_words = FinitePoset::from_leq(
                t02.elements().to_vec(),
                |a, b| {
                    let u: crate::Triword = a.parse().unwrap();
                    let v: crate::Triword = b.parse().unwrap();
                    u.leq(&v).unwrap()
                },
            );
            assert_eq!(t02, by_words, "n={n}");
        }
    }

    #[test]
    fn doubled_interval_memberships() {
        let (i0, i1) = step_intervals(3);
        assert_eq!(i0, vec!["110", "120"]);
        assert_eq!(i1, vec!["111", "121"]);
        let (i0, i1) = step_intervals(4);
        assert_eq!(i0, vec!["1110", "1120", "1210", "1220"]);
        assert_eq!(i1, vec!["1111", "1121", "1211", "1221"]);
        // the doubled interval of the step really is [1^{n-1}0, 12^{n-2}0]
        for n in 2..=5 {
            let (i0, _) = step_intervals(n);
            let lo = format!("{}0", "1".repeat(n - 1));
            let hi = format!("1{}0", "2".repeat(n - 2));
            let members: Vec<String> = generate(n)
                .into_iter()
                .filter(|u| {
                    let lo: crate::Triword = lo.parse().unwrap();
                    let hi: crate::Triword = hi.parse().unwrap();
                    lo.leq(u).unwrap() && u.leq(&hi).unwrap()
                })
                .map(|u| u.to_string())
                .collect();
            assert_eq!(i0, members, "interval contents at n={n}");
        }
    }

    #[test]
    fn double_interval_error_cases() {
        let p = hasse(2);
        assert!(matches!(
            double_interval(&p, "02", "10"),
            Err(Error::NotAnInterval { .. })
        ));
        assert!(matches!(
            double_interval(&p, "99", "12"),
            Err(Error::NoSuchElement(_))
        ));
        // identity relabeling collides with the untouched elements
        assert!(matches!(
            double_interval_with(&p, "10", "11", |base, _| base.to_string()),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn reconstruction_reports() {
        for n in 1..=4 {
            let report = verify_doubling_construction(n).unwrap();
            assert!(report.holds(), "{report}");
            assert_eq!(report.expected_steps, 2 * (n + 1) - 1);
        }
        let r2 = verify_doubling_construction(2).unwrap();
        assert_eq!(r2.steps_from_singleton, 5);
        assert!(r2.reconstructed_exactly);
    }

    #[test]
    fn intermediates_are_semidistributive() {
        for (index, poset) in doubling_sequence(4).unwrap().iter().enumerate() {
            assert!(is_lattice(poset), "stage {index}");
            let report = check_semidistributive_poset(poset, index);
            assert!(report.holds(), "stage {index}: {report:?}");
        }
    }
}
