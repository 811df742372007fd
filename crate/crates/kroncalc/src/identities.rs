//! Numeric verification of the symmetric-function identities: the
//! h/contingency-array identity, Littlewood's identity, and the truncated
//! triple Cauchy identity. Everything is compared exactly; a mismatch is a
//! bug somewhere in the stack, never a tolerance issue.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num::{BigUint, One, Zero};
use serde_json::{json, Value};

use crate::kronecker::Oracle;
use crate::partition::{compositions, enumerate, EnumFilter, Partition};
use crate::symfunc::{kostka, schur_product};
use crate::{guard, Error, Result};

/// Sparse polynomial over non-negative integer coefficients, exponent
/// vectors of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Poly {
    terms: HashMap<Box<[u32]>, BigUint>,
}

impl Poly {
    fn add_term(&mut self, exps: Box<[u32]>, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(exps).or_insert_with(BigUint::zero) += coeff;
    }

    /// Product, dropping any term whose exponent exceeds `cap` in some
    /// variable. Sound when only capped coefficients are read afterwards,
    /// since exponents never decrease.
    fn mul_capped(&self, other: &Poly, cap: u32) -> Poly {
        let mut out = Poly::default();
        for (ea, ca) in &self.terms {
            'terms: for (eb, cb) in &other.terms {
                let mut exps = Vec::with_capacity(ea.len());
                for (x, y) in ea.iter().zip(eb.iter()) {
                    let e = x + y;
                    if e > cap {
                        continue 'terms;
                    }
                    exps.push(e);
                }
                out.add_term(exps.into(), ca * cb);
            }
        }
        out
    }

    fn coefficient(&self, exps: &[u32]) -> BigUint {
        self.terms.get(exps).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// The k×k×k contingency-array family: all axis sums equal a.
#[derive(Clone, Copy, Debug)]
pub struct ContingencySpec {
    pub k: u32,
    pub a: u32,
}

impl ContingencySpec {
    pub fn new(k: u32, a: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter("contingency spec needs k >= 1".into()));
        }
        Ok(ContingencySpec { k, a })
    }

    pub fn n(&self) -> u32 {
        self.k * self.a
    }
}

/// Default feasibility limits for contingency counting.
pub const CONTINGENCY_MAX_K: u32 = 3;
pub const CONTINGENCY_MAX_A: u32 = 4;

/// The coefficient [x₁^a…x_k^a y₁^a…y_k^a] (h_a[xy])^k, computed two
/// independent ways that must agree: direct enumeration of the arrays and
/// explicit polynomial expansion.
pub fn count_contingency(spec: ContingencySpec, max_k: u32, max_a: u32) -> Result<BigUint> {
    guard("contingency count (k)", spec.k, max_k)?;
    guard("contingency count (a)", spec.a, max_a)?;
    let direct = count_by_enumeration(spec);
    let expanded = count_by_expansion(spec);
    if direct != expanded {
        return Err(Error::Integrality(format!(
            "contingency paths disagree at k={} a={}: {direct} vs {expanded}",
            spec.k, spec.a
        )));
    }
    Ok(direct)
}

/// DFS over the k³ cells with one running remainder per axis line.
fn count_by_enumeration(spec: ContingencySpec) -> BigUint {
    let k = spec.k as usize;
    let a = spec.a;
    let mut rem_i = vec![a; k];
    let mut rem_j = vec![a; k];
    let mut rem_t = vec![a; k];
    let mut count = BigUint::zero();

    fn rec(
        cell: usize,
        k: usize,
        rem_i: &mut [u32],
        rem_j: &mut [u32],
        rem_t: &mut [u32],
        count: &mut BigUint,
    ) {
        if cell == k * k * k {
            *count += 1u32;
            return;
        }
        let (i, j, t) = (cell / (k * k), (cell / k) % k, cell % k);
        let hi = rem_i[i].min(rem_j[j]).min(rem_t[t]);
        // the last cell of a line must absorb that line's remainder
        let mut lo = 0;
        if j == k - 1 && t == k - 1 {
            lo = lo.max(rem_i[i]);
        }
        if i == k - 1 && t == k - 1 {
            lo = lo.max(rem_j[j]);
        }
        if i == k - 1 && j == k - 1 {
            lo = lo.max(rem_t[t]);
        }
        for v in lo..=hi {
            rem_i[i] -= v;
            rem_j[j] -= v;
            rem_t[t] -= v;
            rec(cell + 1, k, rem_i, rem_j, rem_t, count);
            rem_i[i] += v;
            rem_j[j] += v;
            rem_t[t] += v;
        }
    }

    rec(0, k, &mut rem_i, &mut rem_j, &mut rem_t, &mut count);
    count
}

/// h_a[xy] as a polynomial in x_1..x_k, y_1..y_k, then the k-th power.
fn count_by_expansion(spec: ContingencySpec) -> BigUint {
    let k = spec.k as usize;
    let a = spec.a;
    let mut h = Poly::default();
    for mat in compositions(a, (k * k) as u32) {
        let mut exps = vec![0u32; 2 * k];
        for (idx, &v) in mat.iter().enumerate() {
            exps[idx / k] += v;
            exps[k + idx % k] += v;
        }
        h.add_term(exps.into(), BigUint::one());
    }
    let mut power = h.clone();
    for _ in 1..k {
        power = power.mul_capped(&h, a);
    }
    power.coefficient(&vec![a; 2 * k])
}

/// One verification result, serializable to the fixed JSON schema
/// {identity, parameters, lhs, rhs, equal}.
pub struct IdentityReport {
    pub identity: &'static str,
    pub parameters: BTreeMap<&'static str, String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub instances: u64,
    pub equal: bool,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "instances": self.instances,
            "equal": self.equal,
        })
    }
}

/// Σ_{λ,μ,ν} g(λ,μ,ν)·K_{λ,a^k}·K_{μ,a^k}·K_{ν,a^k} against the
/// contingency count of the same coefficient.
pub fn verify_h_identity(
    oracle: &Oracle,
    spec: ContingencySpec,
    max_k: u32,
    max_a: u32,
) -> Result<IdentityReport> {
    let lhs = count_contingency(spec, max_k, max_a)?;
    let n = spec.n();
    let content = vec![spec.a; spec.k as usize];
    let pool = enumerate(n, EnumFilter::max_length(spec.k));
    let kostkas: Vec<BigUint> = pool
        .iter()
        .map(|lam| kostka(lam, &content))
        .collect::<Result<_>>()?;
    let mut rhs = BigUint::zero();
    for (a, lam) in pool.iter().enumerate() {
        if kostkas[a].is_zero() {
            continue;
        }
        for (b, mu) in pool.iter().enumerate() {
            if kostkas[b].is_zero() {
                continue;
            }
            for (c, nu) in pool.iter().enumerate() {
                if kostkas[c].is_zero() {
                    continue;
                }
                let g = oracle.kron(lam, mu, nu)?;
                if !g.is_zero() {
                    rhs += g * &kostkas[a] * &kostkas[b] * &kostkas[c];
                }
            }
        }
    }
    Ok(IdentityReport {
        identity: "h-cauchy",
        parameters: BTreeMap::from([
            ("k", spec.k.to_string()),
            ("a", spec.a.to_string()),
        ]),
        equal: lhs == rhs,
        lhs: Some(lhs.to_string()),
        rhs: Some(rhs.to_string()),
        instances: 1,
    })
}

/// Littlewood's identity paired against s_μ, for one λ and one split
/// (m, n−m), exhaustive over α ⊢ m, β ⊢ n−m, μ ⊢ n:
///
///   Σ_ν c^ν_{αβ} g(λ,ν,μ) = Σ_{θ,η,γ,ξ} c^λ_{θη} c^μ_{γξ} g(θ,α,γ) g(η,β,ξ)
pub fn verify_littlewood(
    oracle: &Oracle,
    lam: &Partition,
    m: u32,
    max_n: u32,
) -> Result<IdentityReport> {
    let n = lam.size();
    guard("littlewood verification", n, max_n)?;
    if m > n {
        return Err(Error::InvalidParameter(format!(
            "split {m} exceeds |λ| = {n}"
        )));
    }
    let p_m = enumerate(m, EnumFilter::all());
    let p_rest = enumerate(n - m, EnumFilter::all());
    let p_n = enumerate(n, EnumFilter::all());

    // c^λ_{θη} for θ ⊢ m, η ⊢ n−m
    let lam_lr: Vec<Vec<BigUint>> = p_m
        .iter()
        .map(|theta| {
            p_rest
                .iter()
                .map(|eta| crate::symfunc::lr(lam, theta, eta).expect("sizes match"))
                .collect()
        })
        .collect();

    let mut instances = 0u64;
    let mut equal = true;
    for alpha in &p_m {
        for beta in &p_rest {
            // expansion s_α · s_β = Σ_ν c^ν_{αβ} s_ν
            let ab = schur_product(alpha, beta);
            for mu in &p_n {
                let mut lhs = BigUint::zero();
                for (nu, c) in &ab {
                    let g = oracle.kron(lam, nu, mu)?;
                    lhs += c * g;
                }
                let mut rhs = BigUint::zero();
                for (ti, theta) in p_m.iter().enumerate() {
                    for (ei, eta) in p_rest.iter().enumerate() {
                        let c_lam = &lam_lr[ti][ei];
                        if c_lam.is_zero() {
                            continue;
                        }
                        for gamma in &p_m {
                            let g1 = oracle.kron(theta, alpha, gamma)?;
                            if g1.is_zero() {
                                continue;
                            }
                            for xi in &p_rest {
                                let c_mu = crate::symfunc::lr(mu, gamma, xi)?;
                                if c_mu.is_zero() {
                                    continue;
                                }
                                let g2 = oracle.kron(eta, beta, xi)?;
                                rhs += c_lam * c_mu * &g1 * g2;
                            }
                        }
                    }
                }
                instances += 1;
                if lhs != rhs {
                    equal = false;
                }
            }
        }
    }
    Ok(IdentityReport {
        identity: "littlewood",
        parameters: BTreeMap::from([
            ("lambda", lam.to_string()),
            ("split", format!("{m},{}", n - m)),
        ]),
        lhs: None,
        rhs: None,
        instances,
        equal,
    })
}

/// All λ ⊢ n and all splits.
pub fn verify_littlewood_all(oracle: &Oracle, n: u32, max_n: u32) -> Result<IdentityReport> {
    let mut instances = 0;
    let mut equal = true;
    for lam in enumerate(n, EnumFilter::all()) {
        for m in 0..=n {
            let r = verify_littlewood(oracle, &lam, m, max_n)?;
            instances += r.instances;
            equal &= r.equal;
        }
    }
    Ok(IdentityReport {
        identity: "littlewood",
        parameters: BTreeMap::from([("n", n.to_string())]),
        lhs: None,
        rhs: None,
        instances,
        equal,
    })
}

/// Schur polynomial s_λ(v_1..v_m) as exponent-vector terms, via
/// K_{λ,content} over all weak compositions.
fn schur_poly(
    lam: &Partition,
    vars: usize,
    kostka_memo: &mut HashMap<(Partition, Vec<u32>), BigUint>,
) -> Vec<(Vec<u32>, BigUint)> {
    let n = lam.size();
    let mut out = Vec::new();
    for comp in compositions(n, vars as u32) {
        let sorted = Partition::from_unsorted(comp.clone());
        let key = (lam.clone(), sorted.parts().to_vec());
        let value = kostka_memo
            .entry(key)
            .or_insert_with(|| kostka(lam, sorted.parts()).expect("sizes match"))
            .clone();
        if !value.is_zero() {
            out.push((comp, value));
        }
    }
    out
}

/// Expands s_λ[xy] in k + k variables and matches it against
/// Σ_{μ,ν} g(λ,μ,ν) s_μ(x) s_ν(y), coefficient by coefficient, for every
/// λ ⊢ n.
pub fn verify_cauchy(oracle: &Oracle, n: u32, k: u32, max_n: u32, max_k: u32) -> Result<IdentityReport> {
    guard("cauchy verification (n)", n, max_n)?;
    guard("cauchy verification (k)", k, max_k)?;
    let kk = (k * k) as usize;
    let mut memo = HashMap::new();
    let p_n = enumerate(n, EnumFilter::all());
    // Schur polynomials in k variables for the right-hand side
    let schur_k: Vec<Vec<(Vec<u32>, BigUint)>> = p_n
        .iter()
        .map(|mu| {
            if mu.len() > k {
                Vec::new()
            } else {
                schur_poly(mu, k as usize, &mut memo)
            }
        })
        .collect();
    let mut instances = 0u64;
    let mut equal = true;
    for lam in &p_n {
        // LHS: substitute the k² products x_i y_j into s_λ
        let mut lhs = Poly::default();
        for (comp, coeff) in schur_poly(lam, kk, &mut memo) {
            let mut exps = vec![0u32; 2 * k as usize];
            for (idx, &e) in comp.iter().enumerate() {
                exps[idx / k as usize] += e;
                exps[k as usize + idx % k as usize] += e;
            }
            lhs.add_term(exps.into(), coeff);
        }
        // RHS: Σ g(λ,μ,ν) s_μ(x) s_ν(y)
        let mut rhs = Poly::default();
        for (mi, mu) in p_n.iter().enumerate() {
            if schur_k[mi].is_empty() {
                continue;
            }
            for (ni, nu) in p_n.iter().enumerate() {
                if schur_k[ni].is_empty() {
                    continue;
                }
                let g = oracle.kron(lam, mu, nu)?;
                if g.is_zero() {
                    continue;
                }
                for (ex, cx) in &schur_k[mi] {
                    for (ey, cy) in &schur_k[ni] {
                        let mut exps = Vec::with_capacity(2 * k as usize);
                        exps.extend_from_slice(ex);
                        exps.extend_from_slice(ey);
                        rhs.add_term(exps.into(), &g * cx * cy);
                    }
                }
            }
        }
        instances += 1;
        if lhs != rhs {
            equal = false;
        }
    }
    Ok(IdentityReport {
        identity: "cauchy",
        parameters: BTreeMap::from([("n", n.to_string()), ("k", k.to_string())]),
        lhs: None,
        rhs: None,
        instances,
        equal,
    })
}
