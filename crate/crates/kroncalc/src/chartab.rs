//! Exact symmetric-group characters χ^λ(ρ) via the Murnaghan-Nakayama
//! border-strip recursion, conjugacy-class sizes, hook-length dimensions,
//! and a persistent memo cache.
//!
//! The memo is keyed by (shape, remaining cycle type); cycles are consumed
//! largest-first, so intermediate states are themselves character values of
//! smaller symmetric groups and the cache is shared across all sizes.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use num::bigint::Sign;
use num::{BigInt, BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::{enumerate, EnumFilter, Partition};
use crate::{exec, guard, Error, Result};

pub fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// Order of the centralizer z_ρ = Π i^{m_i} m_i!.
pub fn centralizer_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (part, m) in mult {
        z *= BigUint::from(part).pow(m) * factorial(m);
    }
    z
}

/// Size of the conjugacy class with cycle type ρ, i.e. n!/z_ρ.
pub fn class_size(rho: &Partition) -> BigUint {
    factorial(rho.size()) / centralizer_order(rho)
}

/// Sign of the class: (−1)^{n−ℓ(ρ)}.
pub fn class_sign(rho: &Partition) -> i8 {
    if (rho.size() - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of standard Young tableaux f^λ by the hook-length product.
pub fn dimension(lam: &Partition) -> BigUint {
    let num = factorial(lam.size());
    let mut hooks = BigUint::one();
    for row in lam.hook_lengths() {
        for h in row {
            hooks *= BigUint::from(h);
        }
    }
    let (q, r) = num::Integer::div_rem(&num, &hooks);
    debug_assert!(r.is_zero(), "hook product must divide n!");
    q
}

type MemoKey = (Box<[u32]>, Box<[u32]>);

/// Memoized character evaluator. Safe for concurrent use: lookups and
/// inserts race benignly because every insert writes the same value.
#[derive(Default)]
pub struct CharStore {
    memo: DashMap<MemoKey, BigInt>,
    hits: AtomicU64,
}

impl CharStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact χ^λ(ρ). Errors when |λ| ≠ |ρ|.
    pub fn character(&self, lam: &Partition, rho: &Partition) -> Result<BigInt> {
        if lam.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "character: |{lam}| = {} but |{rho}| = {}",
                lam.size(),
                rho.size()
            )));
        }
        Ok(self.chi(lam.parts(), rho.parts()))
    }

    pub fn cache_hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn entry_count(&self) -> usize {
        self.memo.len()
    }

    fn chi(&self, lam: &[u32], rho: &[u32]) -> BigInt {
        if lam.is_empty() {
            return BigInt::one();
        }
        let key: MemoKey = (lam.into(), rho.into());
        if let Some(v) = self.memo.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return v.clone();
        }
        let strip = rho[0];
        let rest = &rho[1..];
        // first-column hook lengths (beta numbers), strictly decreasing
        let rows = lam.len();
        let betas: Vec<u32> = lam
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (rows - 1 - i) as u32)
            .collect();
        let mut total = BigInt::zero();
        for (idx, &b) in betas.iter().enumerate() {
            if b < strip {
                break;
            }
            let nb = b - strip;
            if betas.contains(&nb) {
                continue;
            }
            // removing the strip moves beta b down to nb; the strip height
            // parity is the number of betas it jumps over
            let crossed = betas.iter().filter(|&&c| nb < c && c < b).count();
            let mut nbetas = betas.clone();
            nbetas[idx] = nb;
            nbetas.sort_unstable_by(|a, b| b.cmp(a));
            let sub: Vec<u32> = nbetas
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (rows - 1 - i) as u32)
                .filter(|&p| p > 0)
                .collect();
            let term = self.chi(&sub, rest);
            if crossed % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// Writes one `chartab_<n>.json` per size present in the memo.
    /// Entries are sorted, so identical stores produce identical bytes.
    pub fn save_dir(&self, dir: &Path) -> Result<Vec<(u32, usize)>> {
        let mut by_n: BTreeMap<u32, Vec<(Partition, Partition, BigInt)>> = BTreeMap::new();
        for entry in self.memo.iter() {
            let (lam, rho) = entry.key();
            let lam = Partition::new(lam.to_vec()).expect("memo keys are valid partitions");
            let rho = Partition::new(rho.to_vec()).expect("memo keys are valid partitions");
            by_n
                .entry(lam.size())
                .or_default()
                .push((lam, rho, entry.value().clone()));
        }
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for (n, mut entries) in by_n {
            entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
            let file = CacheFile {
                version: 1,
                n,
                entries: entries
                    .into_iter()
                    .map(|(lam, rho, value)| CacheEntry {
                        lambda: lam.to_string(),
                        rho: rho.to_string(),
                        value: value.to_string(),
                    })
                    .collect(),
            };
            let count = file.entries.len();
            let path = dir.join(format!("chartab_{n}.json"));
            std::fs::write(&path, serde_json::to_string(&file)?)?;
            written.push((n, count));
        }
        Ok(written)
    }

    /// Loads every `chartab_<n>.json` under `dir`, validating each file
    /// before trusting it (see [`validate_cache_file`]).
    pub fn load_dir(&self, dir: &Path) -> Result<Vec<(u32, usize)>> {
        let mut loaded = Vec::new();
        if !dir.is_dir() {
            return Ok(loaded);
        }
        let mut paths: Vec<_> = std::fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|f| f.to_str())
                    .map(|f| f.starts_with("chartab_") && f.ends_with(".json"))
                    .unwrap_or(false)
            })
            .collect();
        paths.sort();
        for path in paths {
            let file: CacheFile = serde_json::from_str(&std::fs::read_to_string(&path)?)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            let entries = validate_cache_file(&file)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            let count = entries.len();
            for (lam, rho, value) in entries {
                self.memo
                    .insert((lam.parts().into(), rho.parts().into()), value);
            }
            loaded.push((file.n, count));
        }
        Ok(loaded)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    n: u32,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    lambda: String,
    rho: String,
    value: String,
}

/// Checks a cache file before use: every identity-column entry must match
/// the hook-length dimension, and when the identity column is complete the
/// squares must sum to n! (column orthogonality).
fn validate_cache_file(file: &CacheFile) -> std::result::Result<Vec<(Partition, Partition, BigInt)>, String> {
    if file.version != 1 {
        return Err(format!("unsupported cache version {}", file.version));
    }
    let n = file.n;
    let identity = Partition::rectangle(1, n);
    let mut parsed = Vec::with_capacity(file.entries.len());
    let mut square_sum = BigUint::zero();
    let mut identity_entries = 0usize;
    for e in &file.entries {
        let lam: Partition = e.lambda.parse().map_err(|err| format!("{err}"))?;
        let rho: Partition = e.rho.parse().map_err(|err| format!("{err}"))?;
        let value: BigInt = e
            .value
            .parse()
            .map_err(|_| format!("bad integer {:?}", e.value))?;
        if lam.size() != n || rho.size() != n {
            return Err(format!("entry ({lam}, {rho}) does not have size {n}"));
        }
        if rho == identity {
            identity_entries += 1;
            let dim = dimension(&lam);
            if value.sign() != Sign::Plus || *value.magnitude() != dim {
                return Err(format!(
                    "identity value for λ = {lam} is {value}, hook formula gives {dim}"
                ));
            }
            square_sum += &dim * &dim;
        }
        parsed.push((lam, rho, value));
    }
    if n > 0 && identity_entries == enumerate(n, EnumFilter::all()).len() {
        let nf = factorial(n);
        if square_sum != nf {
            return Err(format!(
                "orthogonality failed: Σ f² = {square_sum} but n! = {nf}"
            ));
        }
    }
    Ok(parsed)
}

/// Full table of χ^λ(ρ) over all λ, ρ ⊢ n, rows and columns in
/// enumeration order.
pub struct CharacterTable {
    n: u32,
    lambdas: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    /// Classes in enumeration order (same index set as the rows).
    pub fn classes(&self) -> &[Partition] {
        &self.lambdas
    }

    pub fn value(&self, lam_idx: usize, rho_idx: usize) -> &BigInt {
        &self.values[lam_idx][rho_idx]
    }

    pub fn row(&self, lam_idx: usize) -> &[BigInt] {
        &self.values[lam_idx]
    }

    /// Σ_λ χ^λ(1^n)² = n!.
    pub fn check_orthogonality(&self) -> bool {
        let id_idx = self.lambdas.len() - 1; // (1^n) is last in enumeration order
        let sum: BigInt = self.values.iter().map(|row| &row[id_idx] * &row[id_idx]).sum();
        sum == BigInt::from(factorial(self.n))
    }
}

/// Builds the full character table for S_n. Refuses n > max_n.
pub fn full_table(store: &CharStore, n: u32, max_n: u32) -> Result<CharacterTable> {
    guard("full character table", n, max_n)?;
    let lambdas = enumerate(n, EnumFilter::all());
    let values = exec::map_indexed(lambdas.len(), |li| {
        lambdas
            .iter()
            .map(|rho| store.chi(lambdas[li].parts(), rho.parts()))
            .collect()
    });
    Ok(CharacterTable { n, lambdas, values })
}
