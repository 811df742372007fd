//! Kronecker coefficients g(λ,μ,ν) by the class-wise character sum
//!
//!   g = Σ_ρ z_ρ^{-1} χ^λ(ρ) χ^μ(ρ) χ^ν(ρ),
//!
//! accumulated exactly over the common denominator n! with the final
//! integrality asserted, never rounded. Also the full expansion
//! s_μ * s_ν and the maximal-coefficient scanners.

use std::str::FromStr;

use dashmap::DashMap;
use num::bigint::Sign;
use num::{BigInt, BigUint, Integer, Zero};
use serde_json::{json, Value};

use crate::chartab::{class_size, dimension, factorial, full_table, CharStore, CharacterTable};
use crate::partition::{enumerate, EnumFilter, Partition};
use crate::{exec, guard, Error, Result};

type TripleKey = (Box<[u32]>, Box<[u32]>, Box<[u32]>);

type Hit = (BigUint, (usize, usize, usize));
type Best = Option<Hit>;

/// The oracle of record: every other result in the crate is validated
/// against the character sum computed here. Values are cached under the
/// canonically sorted triple, which is sound by the S₃ symmetry of g.
#[derive(Default)]
pub struct Oracle {
    pub chars: CharStore,
    memo: DashMap<TripleKey, BigUint>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact g(λ,μ,ν). Errors on size mismatch; aborts (rather than
    /// rounding) if the class sum fails to be a non-negative integer.
    pub fn kron(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
        let n = self.check_sizes(lam, mu, nu)?;
        let mut triple = [lam, mu, nu];
        triple.sort();
        let key: TripleKey = (
            triple[0].parts().into(),
            triple[1].parts().into(),
            triple[2].parts().into(),
        );
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mut sum = BigInt::zero();
        for rho in enumerate(n, EnumFilter::all()) {
            let term = BigInt::from(class_size(&rho))
                * self.chars.character(triple[0], &rho)?
                * self.chars.character(triple[1], &rho)?
                * self.chars.character(triple[2], &rho)?;
            sum += term;
        }
        let g = finish_class_sum(sum, &BigInt::from(factorial(n)), || {
            format!("{},{},{}", triple[0], triple[1], triple[2])
        })?;
        self.memo.insert(key, g.clone());
        Ok(g)
    }

    /// Full expansion s_μ * s_ν = Σ_λ g(λ,μ,ν) s_λ in one table pass.
    pub fn expansion(&self, mu: &Partition, nu: &Partition, max_n: u32) -> Result<KroneckerExpansion> {
        let n = self.check_sizes(mu, mu, nu)?;
        guard("kronecker expansion", n, max_n)?;
        let table = full_table(&self.chars, n, max_n)?;
        let (mu_idx, nu_idx) = {
            let find = |p: &Partition| {
                table
                    .lambdas()
                    .iter()
                    .position(|l| l == p)
                    .expect("partition of n is in the table")
            };
            (find(mu), find(nu))
        };
        let weights = class_weights(&table, mu_idx, nu_idx);
        let nf = BigInt::from(factorial(n));
        let computed = exec::map_indexed(table.lambdas().len(), |li| {
            coefficient_from_rows(&table, li, &weights, &nf)
        });
        let mut coefficients = Vec::new();
        for (li, g) in computed.into_iter().enumerate() {
            let g = g?;
            if !g.is_zero() {
                coefficients.push((table.lambdas()[li].clone(), g));
            }
        }
        Ok(KroneckerExpansion {
            mu: mu.clone(),
            nu: nu.clone(),
            coefficients,
        })
    }

    /// Exhaustive maximum of one of the statistics K, K^s, K^fs, A, A^s,
    /// B, B^fs, with the first attaining triple in canonical order as the
    /// witness. Deterministic for any thread count.
    pub fn scan_max(&self, stat: MaxStat, n: u32, k: Option<u32>, max_n: u32) -> Result<MaxStatistic> {
        guard("triple scan", n, max_n)?;
        if stat.needs_k() && k.is_none() {
            return Err(Error::InvalidParameter(format!(
                "statistic {stat} requires k"
            )));
        }
        if !stat.needs_k() && k.is_some() {
            return Err(Error::InvalidParameter(format!(
                "statistic {stat} does not take k"
            )));
        }
        let filter = match (stat, k) {
            (MaxStat::A | MaxStat::As, Some(k)) => EnumFilter::max_length(k),
            (MaxStat::B, Some(k)) => EnumFilter::max_durfee(k),
            (MaxStat::Bfs, Some(k)) => EnumFilter {
                max_durfee: Some(k),
                self_conjugate: true,
                ..EnumFilter::default()
            },
            (MaxStat::Kfs, None) => EnumFilter::self_conjugate(),
            _ => EnumFilter::all(),
        };
        let pool = enumerate(n, filter);
        if pool.is_empty() {
            return Err(Error::EmptyConstraintSet(n));
        }
        let best = if stat.diagonal() {
            let computed = exec::map_indexed(pool.len(), |i| {
                self.kron(&pool[i], &pool[i], &pool[i]).map(|g| (g, (i, i, i)))
            });
            reduce_best(computed)?
        } else {
            let table = full_table(&self.chars, n, max_n)?;
            let nf = BigInt::from(factorial(n));
            let index_of: Vec<usize> = pool
                .iter()
                .map(|p| {
                    table
                        .lambdas()
                        .iter()
                        .position(|l| l == p)
                        .expect("pool partitions are in the table")
                })
                .collect();
            let mut pairs = Vec::new();
            for a in 0..pool.len() {
                for b in a..pool.len() {
                    pairs.push((a, b));
                }
            }
            let computed = exec::map_indexed(pairs.len(), |pi| -> Result<Best> {
                let (a, b) = pairs[pi];
                let weights = class_weights(&table, index_of[a], index_of[b]);
                let mut local = None;
                for (c, &lam_idx) in index_of.iter().enumerate().skip(b) {
                    let g = coefficient_from_rows(&table, lam_idx, &weights, &nf)?;
                    local = better(local, Some((g, (a, b, c))));
                }
                Ok(local)
            });
            let mut best = None;
            for item in computed {
                best = better(best, item?);
            }
            best.ok_or(Error::EmptyConstraintSet(n))?
        };
        let (value, (a, b, c)) = best;
        Ok(MaxStatistic {
            name: stat,
            n,
            k,
            value,
            witness: [pool[a].clone(), pool[b].clone(), pool[c].clone()],
        })
    }

    fn check_sizes(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u32> {
        let n = lam.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "kron: sizes {}, {}, {} differ",
                lam.size(),
                mu.size(),
                nu.size()
            )));
        }
        Ok(n)
    }
}

fn reduce_best(computed: Vec<Result<Hit>>) -> Result<Hit> {
    let mut best = None;
    for item in computed {
        best = better(best, Some(item?));
    }
    best.ok_or(Error::EmptyConstraintSet(0))
}

/// Larger value wins; ties go to the lexicographically smaller index
/// triple, so the reduction is associative and order-independent.
fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Per-class weight z_ρ^{-1}·n! · χ^μ(ρ) · χ^ν(ρ) shared by a whole
/// expansion pass.
fn class_weights(table: &CharacterTable, mu_idx: usize, nu_idx: usize) -> Vec<BigInt> {
    table
        .classes()
        .iter()
        .enumerate()
        .map(|(ri, rho)| {
            BigInt::from(class_size(rho)) * table.value(mu_idx, ri) * table.value(nu_idx, ri)
        })
        .collect()
}

fn coefficient_from_rows(
    table: &CharacterTable,
    lam_idx: usize,
    weights: &[BigInt],
    nf: &BigInt,
) -> Result<BigUint> {
    let sum: BigInt = weights
        .iter()
        .enumerate()
        .map(|(ri, w)| w * table.value(lam_idx, ri))
        .sum();
    finish_class_sum(sum, nf, || table.lambdas()[lam_idx].to_string())
}

fn finish_class_sum(sum: BigInt, nf: &BigInt, what: impl Fn() -> String) -> Result<BigUint> {
    let (q, r) = sum.div_rem(nf);
    if !r.is_zero() || q.sign() == Sign::Minus {
        return Err(Error::Integrality(what()));
    }
    Ok(q.magnitude().clone())
}

/// The whole Kronecker tensor at size n, one value per unordered triple.
/// Triples are indexed by sorted positions into the partition pool.
pub struct KronTensor {
    pool: Vec<Partition>,
    values: Vec<BigUint>,
}

impl KronTensor {
    pub fn pool(&self) -> &[Partition] {
        &self.pool
    }

    /// g at pool indices; the indices are sorted internally, so any order
    /// works.
    pub fn value_by_index(&self, a: usize, b: usize, c: usize) -> &BigUint {
        let mut idx = [a, b, c];
        idx.sort_unstable();
        &self.values[self.rank(idx[0], idx[1], idx[2])]
    }

    pub fn value(&self, x: &Partition, y: &Partition, z: &Partition) -> &BigUint {
        let pos = |p: &Partition| {
            self.pool
                .iter()
                .position(|q| q == p)
                .expect("partition of n")
        };
        self.value_by_index(pos(x), pos(y), pos(z))
    }

    /// Rank of a sorted triple a ≤ b ≤ c in lexicographic order.
    fn rank(&self, a: usize, b: usize, c: usize) -> usize {
        let m = self.pool.len();
        let pairs_from = |x: usize| (m - x) * (m - x + 1) / 2;
        let tri_base: usize = (0..a).map(pairs_from).sum();
        let pair_base: usize = (a..b).map(|x| m - x).sum();
        tri_base + pair_base + (c - b)
    }
}

/// Builds the full tensor in one pass per (μ,ν) pair.
pub fn kron_tensor(oracle: &Oracle, n: u32, max_n: u32) -> Result<KronTensor> {
    guard("kronecker tensor", n, max_n)?;
    let table = full_table(&oracle.chars, n, max_n)?;
    let pool = table.lambdas().to_vec();
    let nf = BigInt::from(factorial(n));
    let mut pairs = Vec::new();
    for a in 0..pool.len() {
        for b in a..pool.len() {
            pairs.push((a, b));
        }
    }
    let chunks = exec::map_indexed(pairs.len(), |pi| -> Result<Vec<BigUint>> {
        let (a, b) = pairs[pi];
        let weights = class_weights(&table, a, b);
        (b..pool.len())
            .map(|c| coefficient_from_rows(&table, c, &weights, &nf))
            .collect()
    });

    let mut values = Vec::new();
    for chunk in chunks {
        values.extend(chunk?);
    }
    Ok(KronTensor { pool, values })
}

/// Expansion s_μ * s_ν with only the nonzero coefficients, sorted by λ.
pub struct KroneckerExpansion {
    pub mu: Partition,
    pub nu: Partition,
    pub coefficients: Vec<(Partition, BigUint)>,
}

impl KroneckerExpansion {
    pub fn coefficient(&self, lam: &Partition) -> BigUint {
        self.coefficients
            .iter()
            .find(|(l, _)| l == lam)
            .map(|(_, g)| g.clone())
            .unwrap_or_else(BigUint::zero)
    }

    /// Σ_λ g(λ,μ,ν)·f^λ = f^μ·f^ν, the defining identity evaluated at the
    /// identity permutation.
    pub fn check_dimension_identity(&self) -> bool {
        let lhs: BigUint = self
            .coefficients
            .iter()
            .map(|(lam, g)| g * dimension(lam))
            .sum();
        lhs == dimension(&self.mu) * dimension(&self.nu)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu.to_string(),
            "nu": self.nu.to_string(),
            "coefficients": self
                .coefficients
                .iter()
                .map(|(lam, g)| json!({"lambda": lam.to_string(), "g": g.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// The seven maximal-coefficient statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxStat {
    /// max g(λ,μ,ν) over all triples
    K,
    /// max g(λ,λ,λ)
    Ks,
    /// max g(λ,λ,λ) over self-conjugate λ
    Kfs,
    /// max g(λ,μ,ν) with all lengths ≤ k
    A,
    /// max g(λ,λ,λ) with ℓ(λ) ≤ k
    As,
    /// max g(λ,μ,ν) with all Durfee sizes ≤ k
    B,
    /// max g(λ,λ,λ) over self-conjugate λ with d(λ) ≤ k
    Bfs,
}

impl MaxStat {
    pub fn needs_k(self) -> bool {
        matches!(self, MaxStat::A | MaxStat::As | MaxStat::B | MaxStat::Bfs)
    }

    fn diagonal(self) -> bool {
        matches!(self, MaxStat::Ks | MaxStat::Kfs | MaxStat::As | MaxStat::Bfs)
    }

    pub fn name(self) -> &'static str {
        match self {
            MaxStat::K => "K",
            MaxStat::Ks => "Ks",
            MaxStat::Kfs => "Kfs",
            MaxStat::A => "A",
            MaxStat::As => "As",
            MaxStat::B => "B",
            MaxStat::Bfs => "Bfs",
        }
    }
}

impl std::fmt::Display for MaxStat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MaxStat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(MaxStat::K),
            "Ks" => Ok(MaxStat::Ks),
            "Kfs" => Ok(MaxStat::Kfs),
            "A" => Ok(MaxStat::A),
            "As" => Ok(MaxStat::As),
            "B" => Ok(MaxStat::B),
            "Bfs" => Ok(MaxStat::Bfs),
            other => Err(Error::InvalidParameter(format!(
                "unknown statistic {other:?} (expected K|Ks|Kfs|A|As|B|Bfs)"
            ))),
        }
    }
}

/// Result of a scan: the maximum and its first witness in canonical order.
pub struct MaxStatistic {
    pub name: MaxStat,
    pub n: u32,
    pub k: Option<u32>,
    pub value: BigUint,
    pub witness: [Partition; 3],
}

impl MaxStatistic {
    pub fn to_json(&self) -> Value {
        json!({
            "stat": self.name.name(),
            "n": self.n,
            "k": self.k,
            "value": self.value.to_string(),
            "witness": self.witness.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}
