//! Chain counting: degree and h-polynomials, the classification of weakly
//! increasing k-tuples by their zero-free tail, the letter-dropping bijection
//! behind the counting recurrence, exact matrix solutions of that recurrence,
//! and the closed-form chain counts for both word families.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exec;
use crate::matrix::IntMatrix;
use crate::poly::{interpolate, BivarPoly, IntPoly, RatPoly};
use crate::poset::{self, FinitePoset};
use crate::triword::{self, Triword};
use crate::{invariants, Error, Result};

/// Which word family a count refers to: all triwords, or only those whose
/// first letter is 1 (the "mini" subfamily).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    Tr,
    Mu,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Tr => "tr",
            Variant::Mu => "mu",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Triwords of size `n` whose first letter is 1. There are 2^{n-2}(n+1)
/// of them.
pub fn generate_mu(n: usize) -> Vec<Triword> {
    triword::generate(n)
        .into_iter()
        .filter(|u| u.letters().first() == Some(&1))
        .collect()
}

fn words_for(n: usize, variant: Variant) -> Vec<Triword> {
    match variant {
        Variant::Tr => triword::generate(n),
        Variant::Mu => generate_mu(n),
    }
}

/// Sum of x^{in(u)} y^{out(u)} over all triwords of size `n`, where in and
/// out count lower and upper covers.
pub fn degree_profile(n: usize) -> BivarPoly {
    let degrees = exec::map_collect(triword::generate(n), |u| {
        (u.lower_covers().len() as u32, u.upper_covers().len() as u32)
    });
    let mut poly = BivarPoly::zero();
    for (xin, yout) in degrees {
        poly.add_term(xin, yout, BigInt::one());
    }
    poly
}

/// Closed form (x + y)^{n-2} (x^2 + (n+1)xy + y^2) of the degree profile;
/// needs n >= 2.
pub fn degree_profile_closed_form(n: usize) -> BivarPoly {
    assert!(n >= 2, "closed form needs n >= 2");
    let linear = {
        let mut p = BivarPoly::monomial(1, 0, 1);
        p.add_term(0, 1, BigInt::one());
        p
    };
    let mut quadratic = BivarPoly::monomial(2, 0, 1);
    quadratic.add_term(1, 1, BigInt::from(n as u64 + 1));
    quadratic.add_term(0, 2, BigInt::one());
    linear.pow((n - 2) as u32).mul(&quadratic)
}

/// The degree profile with x = 1: the generating polynomial of out-degrees.
pub fn h_polynomial(n: usize) -> IntPoly {
    degree_profile(n).substitute_x_one()
}

/// Closed form (y + 1)^{n-2} (y^2 + (n+1)y + 1); needs n >= 2.
pub fn h_polynomial_closed_form(n: usize) -> IntPoly {
    assert!(n >= 2, "closed form needs n >= 2");
    let quadratic = IntPoly::from_i64(&[1, n as i64 + 1, 1]);
    IntPoly::from_i64(&[1, 1]).pow(n - 2).mul(&quadratic)
}

fn zero_free(u: &Triword) -> bool {
    u.letters().iter().all(|&c| c != 0)
}

/// Number of zero-free words at the top of a weakly increasing chain.
/// Letters only grow along the order, so the zero-free words of a chain
/// always form a suffix.
pub fn chain_class(chain: &[Triword]) -> usize {
    chain.iter().rev().take_while(|u| zero_free(u)).count()
}

/// All weakly increasing `k`-tuples over the size-`n` words of the family,
/// grouped by `chain_class` into buckets Z_0 .. Z_k. Brute force; meant for
/// small n and k.
pub fn classify_chains(n: usize, k: usize, variant: Variant) -> Vec<Vec<Vec<Triword>>> {
    assert!(k >= 1, "chains need length at least 1");
    let words = words_for(n, variant);
    let up: Vec<Vec<usize>> = exec::map_indices(words.len(), |i| {
        (0..words.len())
            .filter(|&j| words[i].leq(&words[j]).expect("equal sizes"))
            .collect()
    });

    fn extend(
        words: &[Triword],
        up: &[Vec<usize>],
        k: usize,
        stack: &mut Vec<usize>,
        buckets: &mut [Vec<Vec<Triword>>],
    ) {
        if stack.len() == k {
            let chain: Vec<Triword> = stack.iter().map(|&i| words[i].clone()).collect();
            let class = chain_class(&chain);
            buckets[class].push(chain);
            return;
        }
        let candidates: Vec<usize> = match stack.last() {
            Some(&last) => up[last].clone(),
            None => (0..words.len()).collect(),
        };
        for j in candidates {
            stack.push(j);
            extend(words, up, k, stack, buckets);
            stack.pop();
        }
    }

    let mut buckets = vec![Vec::new(); k + 1];
    let mut stack = Vec::with_capacity(k);
    extend(&words, &up, k, &mut stack, &mut buckets);
    buckets
}

fn validate_chain(chain: &[Triword]) -> Result<usize> {
    if chain.is_empty() {
        return Err(Error::MalformedChain("empty chain".into()));
    }
    let n = chain[0].size();
    for pair in chain.windows(2) {
        if !pair[0].leq(&pair[1])? {
            return Err(Error::MalformedChain(format!(
                "{} does not precede {}",
                pair[0], pair[1]
            )));
        }
    }
    Ok(n)
}

/// Drop the final letter of every word in the chain; also report how many
/// words ended in 2. Given the chain's class, the pair determines the
/// original chain uniquely.
pub fn phi(chain: &[Triword]) -> Result<(usize, Vec<Triword>)> {
    let n = validate_chain(chain)?;
    if n < 2 {
        return Err(Error::BadParameter(
            "phi needs words of size at least 2".into(),
        ));
    }
    let t = chain
        .iter()
        .filter(|u| u.letters().last() == Some(&2))
        .count();
    let shorter = chain
        .iter()
        .map(|u| Triword::new(u.letters()[..n - 1].to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok((t, shorter))
}

/// Rebuild the unique class-`i` chain that `phi` sends to `(t, shorter)`.
///
/// When `shorter` has class `i` too, the appended letters are 0 on words
/// containing 0 and 1 on zero-free words, except that the last `t` words get
/// a 2 (any t in 0..=k). When `shorter` has a larger class `j`, the first
/// k-i words get a 0, the rest a 1, again with the last `t` words getting a
/// 2 (t in 0..=i). A class below `i` cannot arise from a class-`i` chain.
pub fn phi_inverse(i: usize, t: usize, shorter: &[Triword]) -> Result<Vec<Triword>> {
    validate_chain(shorter)?;
    let k = shorter.len();
    if i > k {
        return Err(Error::BadParameter(format!(
            "class {i} exceeds chain length {k}"
        )));
    }
    let j = chain_class(shorter);
    let appended: Vec<u8> = if j == i {
        if t > k {
            return Err(Error::BadParameter(format!(
                "t = {t} exceeds chain length {k}"
            )));
        }
        (0..k)
            .map(|r| {
                if r >= k - t {
                    2
                } else if zero_free(&shorter[r]) {
                    1
                } else {
                    0
                }
            })
            .collect()
    } else if j > i {
        if t > i {
            return Err(Error::BadParameter(format!("t = {t} exceeds class {i}")));
        }
        (0..k)
            .map(|r| {
                if r >= k - t {
                    2
                } else if r >= k - i {
                    1
                } else {
                    0
                }
            })
            .collect()
    } else {
        return Err(Error::MalformedChain(format!(
            "shortened chain has class {j}, below the target class {i}"
        )));
    };
    let rebuilt = shorter
        .iter()
        .zip(appended)
        .map(|(u, a)| {
            let mut letters = u.letters().to_vec();
            letters.push(a);
            Triword::new(letters)
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(chain_class(&rebuilt), i);
    Ok(rebuilt)
}

/// Matrix form of the class-size recurrence for k-chains:
/// z_i(n) = (k+1) z_i(n-1) + (i+1) sum_{j>i} z_j(n-1).
#[derive(Debug, Clone)]
pub struct ZSystem {
    k: usize,
    matrix: IntMatrix,
    initial: Vec<BigInt>,
}

impl ZSystem {
    /// System of dimension k+1. The initial vector holds the class sizes at
    /// n = 1: all ones for the full family (the two words 0 and 1 spread one
    /// chain into every class), the last unit vector for the mini family
    /// (whose only size-1 word is zero-free).
    pub fn new(k: usize, variant: Variant) -> Self {
        assert!(k >= 1, "chains need length at least 1");
        let dim = k + 1;
        let matrix = IntMatrix::from_fn(dim, |r, c| {
            if r == c {
                BigInt::from(dim as u64)
            } else if c > r {
                BigInt::from(r as u64 + 1)
            } else {
                BigInt::zero()
            }
        });
        let initial = match variant {
            Variant::Tr => vec![BigInt::one(); dim],
            Variant::Mu => {
                let mut v = vec![BigInt::zero(); dim];
                v[k] = BigInt::one();
                v
            }
        };
        ZSystem { k, matrix, initial }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Class-size vector (z_0, ..., z_k) at word size `n` (n >= 1).
    pub fn counts(&self, n: usize) -> Vec<BigInt> {
        assert!(n >= 1, "word size starts at 1");
        let mut v = self.initial.clone();
        for _ in 1..n {
            v = mat_vec(&self.matrix, &v);
        }
        v
    }

    /// Total number of k-chains at word size `n`.
    pub fn total(&self, n: usize) -> BigInt {
        self.counts(n).into_iter().sum()
    }
}

fn mat_vec(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.at(r, c) * &v[c]).sum())
        .collect()
}

/// Class-size vector and total for the k-chains of size-`n` words.
pub fn z_counts(n: usize, k: usize, variant: Variant) -> (Vec<BigInt>, BigInt) {
    let system = ZSystem::new(k, variant);
    let counts = system.counts(n);
    let total = counts.iter().sum();
    (counts, total)
}

fn big_pow(base: &BigInt, exponent: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exponent {
        acc *= base;
    }
    acc
}

/// (k+1)^{n-k-1} as an exact rational; the exponent may be negative.
fn prefactor(k: usize, n: usize) -> BigRational {
    let base = BigInt::from(k as u64 + 1);
    if n >= k + 1 {
        BigRational::from_integer(big_pow(&base, n - k - 1))
    } else {
        BigRational::new(BigInt::one(), big_pow(&base, k + 1 - n))
    }
}

/// The polynomial part of a chain-count: totals factor as
/// (k+1)^{n-k-1} P_k(n) with P_k monic of degree k.
#[derive(Debug, Clone)]
pub struct ChainPolynomial {
    pub k: usize,
    pub variant: Variant,
    pub poly: RatPoly,
    pub constant_term: BigRational,
    pub value_at_one: BigRational,
}

fn interpolate_window(system: &ZSystem, start: usize) -> RatPoly {
    let k = system.k();
    let points: Vec<(BigRational, BigRational)> = (start..=start + k)
        .map(|n| {
            let value = BigRational::from_integer(system.total(n)) / prefactor(k, n);
            (BigRational::from_integer(BigInt::from(n as u64)), value)
        })
        .collect();
    interpolate(&points)
}

/// Recover P_k by exact interpolation of (k+1)^{k+1-n} · total(n) at the k+1
/// nodes n = k+2 .. 2k+2, where the prefactor exponent is at least one. A
/// second, disjoint window must produce the same polynomial. The result is
/// checked monic of degree k; for the full family P_k(1) = (k+1)^{k+1}.
pub fn chain_polynomial(k: usize, variant: Variant) -> ChainPolynomial {
    assert!((1..=6).contains(&k), "supported for 1 <= k <= 6");
    let system = ZSystem::new(k, variant);
    let poly = interpolate_window(&system, k + 2);
    let second = interpolate_window(&system, 2 * k + 3);
    assert!(poly == second, "interpolation window changed the polynomial");
    assert_eq!(poly.degree(), Some(k), "chain polynomial must have degree k");
    assert!(poly.is_monic(), "chain polynomial must be monic");
    let value_at_one = poly.eval_int(&BigInt::one());
    if variant == Variant::Tr {
        let expected = BigRational::from_integer(big_pow(&BigInt::from(k as u64 + 1), k + 1));
        assert_eq!(value_at_one, expected, "P_k(1) must be (k+1)^(k+1)");
    }
    let constant_term = poly.coeff(0);
    ChainPolynomial {
        k,
        variant,
        poly,
        constant_term,
        value_at_one,
    }
}

/// The stored closed forms P_k for k = 1..=5, with exact rational
/// coefficients in little-endian order.
///
/// For the mini family at k = 4 the linear coefficient is 2075/6; that value
/// matches the recurrence totals and gives P_4(1) = 5^4, in line with every
/// other k.
pub fn closed_form_polynomial(k: usize, variant: Variant) -> Result<RatPoly> {
    let coeffs: &[(i64, i64)] = match (variant, k) {
        (Variant::Tr, 1) => &[(3, 1), (1, 1)],
        (Variant::Tr, 2) => &[(17, 1), (9, 1), (1, 1)],
        (Variant::Tr, 3) => &[(142, 1), (93, 1), (20, 1), (1, 1)],
        (Variant::Tr, 4) => &[(1569, 1), (3490, 3), (355, 1), (110, 3), (1, 1)],
        (Variant::Tr, 5) => &[
            (21576, 1),
            (17363, 1),
            (13261, 2),
            (1026, 1),
            (119, 2),
            (1, 1),
        ],
        (Variant::Mu, 1) => &[(1, 1), (1, 1)],
        (Variant::Mu, 2) => &[(2, 1), (6, 1), (1, 1)],
        (Variant::Mu, 3) => &[(6, 1), (41, 1), (16, 1), (1, 1)],
        (Variant::Mu, 4) => &[(24, 1), (2075, 6), (445, 2), (95, 3), (1, 1)],
        (Variant::Mu, 5) => &[(120, 1), (3599, 1), (6505, 2), (750, 1), (107, 2), (1, 1)],
        _ => {
            return Err(Error::BadParameter(format!(
                "no closed form stored for k = {k}"
            )))
        }
    };
    Ok(RatPoly::from_fracs(coeffs))
}

/// Evaluate the closed-form count (k+1)^{n-k-1} P_k(n). The result is an
/// integer even where the prefactor exponent is negative.
pub fn closed_form_chain_count(n: usize, k: usize, variant: Variant) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::BadParameter("word size starts at 1".into()));
    }
    let poly = closed_form_polynomial(k, variant)?;
    let value = poly.eval_int(&BigInt::from(n as u64)) * prefactor(k, n);
    assert!(
        value.is_integer(),
        "closed-form count must be integral at n = {n}, k = {k}"
    );
    Ok(value.to_integer())
}

/// N = M - (k+1)I for the k-chain system: the strictly upper triangular part
/// of the recurrence matrix.
pub fn n_matrix(k: usize) -> IntMatrix {
    let system = ZSystem::new(k, Variant::Tr);
    let dim = k + 1;
    let scaled_identity = IntMatrix::identity(dim).scale(&BigInt::from(dim as u64));
    system.matrix().sub(&scaled_identity)
}

fn factorial_ratio(numerator: usize, denominator: usize) -> BigInt {
    // numerator! / denominator!, assuming numerator >= denominator
    let mut acc = BigInt::one();
    for v in denominator + 1..=numerator {
        acc *= BigInt::from(v as u64);
    }
    acc
}

/// Outcome of checking the entries of powers of N against the factorial
/// ratios (i+l-1)!/(i-1)!.
#[derive(Debug, Clone, Serialize)]
pub struct NPowerReport {
    pub k: usize,
    pub entries_checked: usize,
    pub failures: Vec<String>,
}

impl NPowerReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check N^l(i, i+l) = (i+l-1)!/(i-1)! for every 1 <= l <= k and valid i
/// (1-based), and that N^k vanishes except for the single entry k! at
/// (1, k+1).
pub fn verify_n_powers(k: usize) -> NPowerReport {
    let n = n_matrix(k);
    let dim = k + 1;
    let mut failures = Vec::new();
    let mut entries_checked = 0;
    let mut power = IntMatrix::identity(dim);
    for l in 1..=k {
        power = power.mul(&n);
        for i in 1..=dim - l {
            let expected = factorial_ratio(i + l - 1, i - 1);
            let got = power.at(i - 1, i + l - 1);
            entries_checked += 1;
            if *got != expected {
                failures.push(format!(
                    "N^{l}({i},{}) = {got}, expected {expected}",
                    i + l
                ));
            }
        }
    }
    // After the loop `power` is N^k; it must be zero away from (1, k+1).
    for r in 0..dim {
        for c in 0..dim {
            if (r, c) != (0, dim - 1) && !power.at(r, c).is_zero() {
                failures.push(format!(
                    "N^{k} has an unexpected entry {} at ({}, {})",
                    power.at(r, c),
                    r + 1,
                    c + 1
                ));
            }
        }
    }
    entries_checked += 1;
    let last = factorial_ratio(k, 0);
    if *power.at(0, dim - 1) != last {
        failures.push(format!(
            "N^{k}(1,{dim}) = {}, expected {last}",
            power.at(0, dim - 1)
        ));
    }
    NPowerReport {
        k,
        entries_checked,
        failures,
    }
}

/// One row of the chain-count table.
#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub k: usize,
    pub variant: String,
    pub z: Vec<String>,
    pub total: String,
}

/// Chain-count rows for both families, over 1 <= n <= n_max and
/// 1 <= k <= k_max, in a fixed order.
pub fn count_table(n_max: usize, k_max: usize) -> Vec<CountRow> {
    let mut jobs = Vec::new();
    for variant in [Variant::Tr, Variant::Mu] {
        for k in 1..=k_max {
            for n in 1..=n_max {
                jobs.push((n, k, variant));
            }
        }
    }
    exec::map_collect(jobs, |(n, k, variant)| {
        let (z, total) = z_counts(n, k, variant);
        CountRow {
            n,
            k,
            variant: variant.name().to_string(),
            z: z.iter().map(|v| v.to_string()).collect(),
            total: total.to_string(),
        }
    })
}

/// Render count rows as CSV; the z-vector column holds space-separated
/// entries.
pub fn count_table_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("n,k,variant,z_vector,total\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.n,
            row.k,
            row.variant,
            row.z.join(" "),
            row.total
        ));
    }
    out
}

/// Report-only observations about the mini subposet (first letter 1, induced
/// order). Nothing here is asserted; the struct records which properties of
/// the full lattice carry over at this size.
#[derive(Debug, Clone, Serialize)]
pub struct MiniObservations {
    pub n: usize,
    pub size: usize,
    pub is_lattice: bool,
    pub is_semidistributive: Option<bool>,
    pub constant_degree_sum: Option<usize>,
}

/// The mini subposet on size-`n` words with the induced order.
pub fn mini_poset(n: usize) -> FinitePoset {
    let labels: Vec<String> = generate_mu(n).iter().map(|u| u.to_string()).collect();
    FinitePoset::from_leq(labels, |a, b| {
        let u: Triword = a.parse().expect("label is a valid word");
        let v: Triword = b.parse().expect("label is a valid word");
        u.leq(&v).expect("equal sizes")
    })
}

pub fn mini_observations(n: usize) -> MiniObservations {
    let poset = mini_poset(n);
    let size = poset.len();
    let is_lattice = poset::is_lattice(&poset);
    let is_semidistributive = if is_lattice {
        Some(invariants::check_semidistributive_poset(&poset, n).holds())
    } else {
        None
    };
    let up = poset.up_adjacency();
    let down = poset.down_adjacency();
    let mut degree_sums = (0..size).map(|i| up[i].len() + down[i].len());
    let constant_degree_sum = match degree_sums.next() {
        Some(first) if degree_sums.all(|d| d == first) => Some(first),
        _ => None,
    };
    MiniObservations {
        n,
        size,
        is_lattice,
        is_semidistributive,
        constant_degree_sum,
    }
}
