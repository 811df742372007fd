//! Constructive lower-bound machinery: replayable certificate chains built
//! from the monotonicity property and the symmetry/conjugation relations,
//! the symmetrization and self-conjugate embeddings, the iterated
//! conjugation square chain, the special shapes, and stability sequences.
//!
//! A certificate claims g(target) ≥ g(source). Replaying the steps from
//! the source triple must reproduce the target triple exactly; the claim
//! is effective when every monotone step carries a positive witness
//! (computed, or one of the two cited axioms).

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::kronecker::Oracle;
use crate::partition::{enumerate, EnumFilter, Partition};
use crate::{guard, Error, Result};

/// Positivity evidence attached to a monotone step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// g of the summand triple, computed by the character oracle.
    Computed(BigUint),
    /// A cited positivity fact out of computational reach.
    Axiom(AxiomTag),
}

impl Witness {
    pub fn is_positive(&self) -> bool {
        match self {
            Witness::Computed(v) => !v.is_zero(),
            Witness::Axiom(_) => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomTag {
    /// g(λ,λ,λ) ≥ 1 for every self-conjugate λ.
    SelfConjugatePositive,
    /// Positivity of the square-shape base triple of the doubling chain.
    SquareBase,
}

impl AxiomTag {
    fn as_str(self) -> &'static str {
        match self {
            AxiomTag::SelfConjugatePositive => "SELF_CONJUGATE_POSITIVE",
            AxiomTag::SquareBase => "SQUARE_BASE",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "SELF_CONJUGATE_POSITIVE" => Ok(AxiomTag::SelfConjugatePositive),
            "SQUARE_BASE" => Ok(AxiomTag::SquareBase),
            other => Err(Error::InvalidParameter(format!("unknown axiom tag {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// (λ,μ,ν) → (λ+α, μ+β, ν+γ); sound when g(α,β,γ) > 0.
    MonotoneAdd {
        summands: [Partition; 3],
        witness: Witness,
    },
    /// Conjugates coordinates i and j (0-based), an equality of g.
    ConjugatePair { i: usize, j: usize },
    /// new[i] = old[perm[i]], an equality of g.
    Permute { perm: [usize; 3] },
}

/// A replayable chain from source_triple to target_triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub source: [Partition; 3],
    pub target: [Partition; 3],
    pub steps: Vec<Step>,
    /// g(source) when computed; None leaves the symbolic reference
    /// "g(source_triple)".
    pub certified_value: Option<BigUint>,
}

impl LowerBoundCertificate {
    /// Applies every step starting from the source and checks the result
    /// against the stored target.
    pub fn replay(&self) -> Result<[Partition; 3]> {
        let mut current = self.source.clone();
        let sizes_equal =
            |t: &[Partition; 3]| t[0].size() == t[1].size() && t[1].size() == t[2].size();
        if !sizes_equal(&current) {
            return Err(Error::SizeMismatch("certificate source sizes differ".into()));
        }
        for (idx, step) in self.steps.iter().enumerate() {
            match step {
                Step::MonotoneAdd { summands, witness: _ } => {
                    if !sizes_equal(summands) {
                        return Err(Error::SizeMismatch(format!(
                            "step {idx}: summand sizes differ"
                        )));
                    }
                    current = [
                        current[0].add(&summands[0]),
                        current[1].add(&summands[1]),
                        current[2].add(&summands[2]),
                    ];
                }
                Step::ConjugatePair { i, j } => {
                    if i == j || *i > 2 || *j > 2 {
                        return Err(Error::InvalidParameter(format!(
                            "step {idx}: conjugate_pair needs two distinct coordinates"
                        )));
                    }
                    current[*i] = current[*i].conjugate();
                    current[*j] = current[*j].conjugate();
                }
                Step::Permute { perm } => {
                    let mut sorted = *perm;
                    sorted.sort_unstable();
                    if sorted != [0, 1, 2] {
                        return Err(Error::InvalidParameter(format!(
                            "step {idx}: {perm:?} is not a permutation"
                        )));
                    }
                    current = [
                        current[perm[0]].clone(),
                        current[perm[1]].clone(),
                        current[perm[2]].clone(),
                    ];
                }
            }
        }
        if current != self.target {
            return Err(Error::InvalidParameter(format!(
                "replay reached ({};{};{}) instead of the stated target",
                current[0], current[1], current[2]
            )));
        }
        Ok(current)
    }

    /// Whether every monotone step carries a positive witness, i.e. the
    /// chain actually certifies g(target) ≥ g(source).
    pub fn is_effective(&self) -> bool {
        self.steps.iter().all(|s| match s {
            Step::MonotoneAdd { witness, .. } => witness.is_positive(),
            _ => true,
        })
    }

    /// Independent confirmation by the character oracle: g(target) ≥
    /// g(source). Returns None when the target is beyond `max_n`.
    pub fn confirm(&self, oracle: &Oracle, max_n: u32) -> Result<Option<bool>> {
        if self.target[0].size() > max_n {
            return Ok(None);
        }
        self.replay()?;
        let target = oracle.kron(&self.target[0], &self.target[1], &self.target[2])?;
        let source = oracle.kron(&self.source[0], &self.source[1], &self.source[2])?;
        Ok(Some(target >= source))
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::MonotoneAdd { summands, witness } => {
                    let w = match witness {
                        Witness::Computed(v) => json!({"kind": "computed", "value": v.to_string()}),
                        Witness::Axiom(tag) => json!({"kind": "axiom", "tag": tag.as_str()}),
                    };
                    json!({
                        "type": "monotone_add",
                        "summands": summands.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        "witness": w,
                    })
                }
                Step::ConjugatePair { i, j } => json!({"type": "conjugate_pair", "i": i, "j": j}),
                Step::Permute { perm } => json!({"type": "permute", "perm": perm}),
            })
            .collect();
        json!({
            "source": self.source.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "target": self.target.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "steps": steps,
            "certified_value": self.certified_value.as_ref().map(|v| v.to_string()),
            "claim": "g(target) >= g(source)",
            "effective": self.is_effective(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let dto: CertificateDto = serde_json::from_value(value.clone())?;
        dto.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateDto {
    source: [String; 3],
    target: [String; 3],
    steps: Vec<StepDto>,
    certified_value: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum StepDto {
    MonotoneAdd {
        summands: [String; 3],
        witness: WitnessDto,
    },
    ConjugatePair {
        i: usize,
        j: usize,
    },
    Permute {
        perm: [usize; 3],
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessDto {
    Computed { value: String },
    Axiom { tag: String },
}

impl TryFrom<CertificateDto> for LowerBoundCertificate {
    type Error = Error;

    fn try_from(dto: CertificateDto) -> Result<Self> {
        let triple = |s: &[String; 3]| -> Result<[Partition; 3]> {
            Ok([s[0].parse()?, s[1].parse()?, s[2].parse()?])
        };
        let steps = dto
            .steps
            .into_iter()
            .map(|s| {
                Ok(match s {
                    StepDto::MonotoneAdd { summands, witness } => Step::MonotoneAdd {
                        summands: triple(&summands)?,
                        witness: match witness {
                            WitnessDto::Computed { value } => Witness::Computed(
                                value.parse().map_err(|_| {
                                    Error::InvalidParameter(format!("bad witness value {value:?}"))
                                })?,
                            ),
                            WitnessDto::Axiom { tag } => Witness::Axiom(AxiomTag::parse(&tag)?),
                        },
                    },
                    StepDto::ConjugatePair { i, j } => Step::ConjugatePair { i, j },
                    StepDto::Permute { perm } => Step::Permute { perm },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let certified_value = dto
            .certified_value
            .map(|v| {
                v.parse::<BigUint>()
                    .map_err(|_| Error::InvalidParameter(format!("bad certified value {v:?}")))
            })
            .transpose()?;
        Ok(LowerBoundCertificate {
            source: triple(&dto.source)?,
            target: triple(&dto.target)?,
            steps,
            certified_value,
        })
    }
}

/// Outcome of a monotonicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonotoneOutcome {
    /// g(λ+α, μ+β, ν+γ) ≥ g(λ,μ,ν), with both values.
    Holds { lower: BigUint, upper: BigUint },
    /// The inequality failed; on a correct build this never occurs.
    Violated { lower: BigUint, upper: BigUint },
    /// g(α,β,γ) = 0: the theorem does not assert anything here.
    ZeroWitness,
}

/// Checks g(λ+α, μ+β, ν+γ) ≥ g(λ,μ,ν) for a witness triple with
/// g(α,β,γ) > 0; a zero witness is flagged, not failed.
pub fn monotone_check(
    oracle: &Oracle,
    base: [&Partition; 3],
    summands: [&Partition; 3],
) -> Result<MonotoneOutcome> {
    let w = oracle.kron(summands[0], summands[1], summands[2])?;
    if w.is_zero() {
        return Ok(MonotoneOutcome::ZeroWitness);
    }
    let lower = oracle.kron(base[0], base[1], base[2])?;
    let upper = oracle.kron(
        &base[0].add(summands[0]),
        &base[1].add(summands[1]),
        &base[2].add(summands[2]),
    )?;
    if upper >= lower {
        Ok(MonotoneOutcome::Holds { lower, upper })
    } else {
        Ok(MonotoneOutcome::Violated { lower, upper })
    }
}

/// g(λ,λ,λ) ≥ g(α,β,γ) at λ = α+β+γ, by two monotone steps that rotate
/// the summands through the triple.
pub fn symmetrize(
    oracle: &Oracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<LowerBoundCertificate> {
    let w = oracle.kron(alpha, beta, gamma)?;
    let s = alpha.add(beta).add(gamma);
    let cert = LowerBoundCertificate {
        source: [alpha.clone(), beta.clone(), gamma.clone()],
        target: [s.clone(), s.clone(), s],
        steps: vec![
            Step::MonotoneAdd {
                summands: [beta.clone(), gamma.clone(), alpha.clone()],
                witness: Witness::Computed(w.clone()),
            },
            Step::MonotoneAdd {
                summands: [gamma.clone(), alpha.clone(), beta.clone()],
                witness: Witness::Computed(w.clone()),
            },
        ],
        certified_value: Some(w),
    };
    cert.replay()?;
    Ok(cert)
}

/// The alternating add/conjugate chain embedding g(α,α,α) into the
/// self-conjugate triple μ = (δ_k + 2α) ∪ (2α)′ of size 4|α| + k².
/// Requires ℓ(α) ≤ k.
pub fn fullsym_embed(
    oracle: &Oracle,
    alpha: &Partition,
    k: u32,
    witness_max_n: u32,
) -> Result<LowerBoundCertificate> {
    if alpha.len() > k {
        return Err(Error::InvalidParameter(format!(
            "fullsym_embed needs ℓ(α) ≤ k, got ℓ({alpha}) = {} > {k}",
            alpha.len()
        )));
    }
    let delta = Partition::rectangle(k, k);
    let delta_witness = if k * k <= witness_max_n {
        Witness::Computed(oracle.kron(&delta, &delta, &delta)?)
    } else {
        Witness::Axiom(AxiomTag::SelfConjugatePositive)
    };
    let alpha_witness = if alpha.size() <= witness_max_n {
        Witness::Computed(oracle.kron(alpha, alpha, alpha)?)
    } else if alpha.is_self_conjugate() {
        Witness::Axiom(AxiomTag::SelfConjugatePositive)
    } else {
        return Err(Error::GuardExceeded {
            what: format!("witness g({alpha},{alpha},{alpha})"),
            n: alpha.size(),
            max: witness_max_n,
        });
    };
    let certified_value = match &alpha_witness {
        Witness::Computed(v) => Some(v.clone()),
        Witness::Axiom(_) => None,
    };
    let two_alpha = alpha.scale(2);
    let mu = delta.add(&two_alpha).union(&two_alpha.conjugate());
    let ma = |witness: &Witness| Step::MonotoneAdd {
        summands: [alpha.clone(), alpha.clone(), alpha.clone()],
        witness: witness.clone(),
    };
    let cert = LowerBoundCertificate {
        source: [alpha.clone(), alpha.clone(), alpha.clone()],
        target: [mu.clone(), mu.clone(), mu.clone()],
        steps: vec![
            Step::MonotoneAdd {
                summands: [delta.clone(), delta.clone(), delta],
                witness: delta_witness,
            },
            Step::ConjugatePair { i: 0, j: 1 },
            ma(&alpha_witness),
            Step::ConjugatePair { i: 1, j: 2 },
            ma(&alpha_witness),
            Step::ConjugatePair { i: 0, j: 1 },
            ma(&alpha_witness),
        ],
        certified_value,
    };
    cert.replay()?;
    assert!(mu.is_self_conjugate(), "embedding output must be self-conjugate");
    assert!(mu.durfee() <= k, "embedding output must have Durfee size ≤ k");
    assert_eq!(mu.size(), 4 * alpha.size() + k * k);
    Ok(cert)
}

/// The doubling/conjugation chain from the square base triple
/// ((2s)^{2s}, (2s)^{2s}, (k,k)) with s = 2^r, k = 2s², up to the square
/// triple (δ_k, δ_k, δ_k). Positivity rests on the cited base case, so
/// every monotone witness carries the SQUARE_BASE tag.
pub fn square_chain(r: u32) -> Result<LowerBoundCertificate> {
    if r > 7 {
        return Err(Error::InvalidParameter(
            "square_chain: r > 7 overflows desk-scale sizes".into(),
        ));
    }
    let s = 1u32 << r;
    let k = 2 * s * s;
    let base = [
        Partition::rectangle(2 * s, 2 * s),
        Partition::rectangle(2 * s, 2 * s),
        Partition::rectangle(k, 2),
    ];
    let mut steps = Vec::new();
    let mut current = base.clone();
    // (k,k) ↔ (2^k): conjugate the third coordinate against the
    // self-conjugate square partner
    steps.push(Step::ConjugatePair { i: 1, j: 2 });
    current[1] = current[1].conjugate();
    current[2] = current[2].conjugate();
    for _ in 0..r {
        for half in 0..2 {
            steps.push(Step::MonotoneAdd {
                summands: current.clone(),
                witness: Witness::Axiom(AxiomTag::SquareBase),
            });
            current = [
                current[0].add(&current[0].clone()),
                current[1].add(&current[1].clone()),
                current[2].add(&current[2].clone()),
            ];
            if half == 0 {
                steps.push(Step::ConjugatePair { i: 0, j: 1 });
                current[0] = current[0].conjugate();
                current[1] = current[1].conjugate();
            }
        }
    }
    let cert = LowerBoundCertificate {
        source: base,
        target: current,
        steps,
        certified_value: None,
    };
    cert.replay()?;
    let delta_k = Partition::rectangle(k, k);
    assert_eq!(cert.target, [delta_k.clone(), delta_k.clone(), delta_k]);
    Ok(cert)
}

/// The allowed chop sizes: every residue class mod 12 is reachable, and 2
/// is excluded because no self-conjugate partition of 2 exists.
pub const CHOP_SIZES: [u32; 12] = [0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    Staircase,
    Square,
    Caret,
    ChoppedSquare,
}

impl std::str::FromStr for ShapeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "staircase" => Ok(ShapeKind::Staircase),
            "square" => Ok(ShapeKind::Square),
            "caret" => Ok(ShapeKind::Caret),
            "chopped_square" | "chopped-square" => Ok(ShapeKind::ChoppedSquare),
            other => Err(Error::InvalidParameter(format!(
                "unknown shape {other:?} (expected staircase|square|caret|chopped_square)"
            ))),
        }
    }
}

/// The special shapes: staircase ρ_k, square δ_k, caret τ_k (from its
/// explicit part list), and the chopped symmetric square of size k² − t.
pub fn shape(kind: ShapeKind, k: u32, t: Option<u32>) -> Result<Partition> {
    if k < 1 {
        return Err(Error::InvalidParameter("shape needs k >= 1".into()));
    }
    if t.is_some() && kind != ShapeKind::ChoppedSquare {
        return Err(Error::InvalidParameter("t only applies to chopped_square".into()));
    }
    match kind {
        ShapeKind::Staircase => Ok(Partition::new((1..k).rev().collect()).expect("decreasing")),
        ShapeKind::Square => Ok(Partition::rectangle(k, k)),
        ShapeKind::Caret => {
            if k < 2 {
                return Err(Error::InvalidParameter("caret needs k >= 2".into()));
            }
            // (3k−1, 3k−3, …, k+3, (k+1)², (k−1)², …, 2², 1²)
            let mut parts: Vec<u32> = (0..k - 1).map(|i| 3 * k - 1 - 2 * i).collect();
            parts.push(k + 1);
            parts.push(k + 1);
            for j in (1..k).rev() {
                parts.push(j);
                parts.push(j);
            }
            let tau = Partition::new(parts).expect("decreasing by construction");
            debug_assert_eq!(tau.size(), 3 * k * k + 1);
            debug_assert!(tau.is_self_conjugate());
            Ok(tau)
        }
        ShapeKind::ChoppedSquare => {
            let t = t.ok_or_else(|| {
                Error::InvalidParameter("chopped_square needs t".into())
            })?;
            if !CHOP_SIZES.contains(&t) {
                return Err(Error::InvalidParameter(format!(
                    "t = {t} not in the allowed set {CHOP_SIZES:?}"
                )));
            }
            // first self-conjugate partition of t that fits in the corner
            let sigma = enumerate(t, EnumFilter::self_conjugate())
                .into_iter()
                .find(|s| s.first() <= k)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "no self-conjugate partition of {t} fits in a {k}x{k} square"
                    ))
                })?;
            let parts: Vec<u32> = (1..=k)
                .map(|i| k - sigma.part((k - i + 1) as usize))
                .filter(|&p| p > 0)
                .collect();
            let chopped = Partition::new(parts).expect("decreasing by construction");
            debug_assert_eq!(chopped.size(), k * k - t);
            debug_assert!(chopped.is_self_conjugate());
            Ok(chopped)
        }
    }
}

/// The caret certificate: fullsym_embed instantiated at α = ρ_k with box
/// size k+1, landing exactly on τ_k.
pub fn caret_certificate(
    oracle: &Oracle,
    k: u32,
    witness_max_n: u32,
) -> Result<LowerBoundCertificate> {
    if k < 2 {
        return Err(Error::InvalidParameter("caret certificate needs k >= 2".into()));
    }
    let rho = shape(ShapeKind::Staircase, k, None)?;
    let cert = fullsym_embed(oracle, &rho, k + 1, witness_max_n)?;
    let tau = shape(ShapeKind::Caret, k, None)?;
    if cert.target[0] != tau {
        return Err(Error::InvalidParameter(format!(
            "embedding produced {} instead of the caret {tau}",
            cert.target[0]
        )));
    }
    Ok(cert)
}

/// Report for one stability sequence a_d = g(λ+dα, μ+dβ, ν+dγ).
pub struct StabilityReport {
    pub values: Vec<BigUint>,
    pub increment_g: BigUint,
    pub non_decreasing: bool,
    /// a_d ≥ d+1, checked only when g(α,β,γ) > 1.
    pub linear_lower_ok: Option<bool>,
}

impl StabilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "increment_g": self.increment_g.to_string(),
            "non_decreasing": self.non_decreasing,
            "linear_lower_ok": self.linear_lower_ok,
        })
    }
}

/// Computes [a_0, …, a_{d_max}] and checks the monotone consequences.
pub fn stability_sequence(
    oracle: &Oracle,
    base: [&Partition; 3],
    incr: [&Partition; 3],
    d_max: u32,
    max_n: u32,
) -> Result<StabilityReport> {
    let n = base[0].size();
    let m = incr[0].size();
    if base[1].size() != n || base[2].size() != n || incr[1].size() != m || incr[2].size() != m {
        return Err(Error::SizeMismatch("stability sequence sizes differ".into()));
    }
    guard("stability sequence", n + d_max * m, max_n)?;
    let w = oracle.kron(incr[0], incr[1], incr[2])?;
    if w.is_zero() {
        return Err(Error::InvalidParameter(
            "increment triple has g = 0; the sequence is not covered by monotonicity".into(),
        ));
    }
    let mut values = Vec::with_capacity(d_max as usize + 1);
    let mut current = [base[0].clone(), base[1].clone(), base[2].clone()];
    for _ in 0..=d_max {
        values.push(oracle.kron(&current[0], &current[1], &current[2])?);
        current = [
            current[0].add(incr[0]),
            current[1].add(incr[1]),
            current[2].add(incr[2]),
        ];
    }
    let non_decreasing = values.windows(2).all(|w| w[0] <= w[1]);
    let linear_lower_ok = if w > BigUint::one() {
        Some(
            values
                .iter()
                .enumerate()
                .all(|(d, a)| *a >= BigUint::from(d as u32 + 1)),
        )
    } else {
        None
    };
    Ok(StabilityReport {
        values,
        increment_g: w,
        non_decreasing,
        linear_lower_ok,
    })
}

/// g(λ,λ,λ) ≥ 1 for every self-conjugate λ ⊢ n.
pub struct SaxlReport {
    pub n: u32,
    pub checked: u64,
    pub failures: Vec<Partition>,
}

impl SaxlReport {
    pub fn all_positive(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": "saxl",
            "parameters": BTreeMap::from([("n", self.n.to_string())]),
            "instances": self.checked,
            "equal": self.all_positive(),
            "failures": self.failures.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_saxl(oracle: &Oracle, n: u32, max_n: u32) -> Result<SaxlReport> {
    guard("saxl positivity check", n, max_n)?;
    let mut report = SaxlReport {
        n,
        checked: 0,
        failures: Vec::new(),
    };
    for lam in enumerate(n, EnumFilter::self_conjugate()) {
        report.checked += 1;
        if oracle.kron(&lam, &lam, &lam)?.is_zero() {
            report.failures.push(lam);
        }
    }
    Ok(report)
}

/// Exhaustive (1)-increment monotonicity over all unordered triples ⊢ n.
pub struct MonotoneReport {
    pub instances: u64,
    pub zero_witness: u64,
    pub violations: Vec<String>,
}

impl MonotoneReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_monotone_increments(oracle: &Oracle, n: u32, max_n: u32) -> Result<MonotoneReport> {
    guard("monotonicity sweep", n, max_n)?;
    let one = Partition::row(1);
    let all = enumerate(n, EnumFilter::all());
    let mut report = MonotoneReport {
        instances: 0,
        zero_witness: 0,
        violations: Vec::new(),
    };
    for (a, lam) in all.iter().enumerate() {
        for (b, mu) in all.iter().enumerate().skip(a) {
            for nu in all.iter().skip(b) {
                match monotone_check(oracle, [lam, mu, nu], [&one, &one, &one])? {
                    MonotoneOutcome::Holds { .. } => report.instances += 1,
                    MonotoneOutcome::ZeroWitness => report.zero_witness += 1,
                    MonotoneOutcome::Violated { lower, upper } => {
                        report.instances += 1;
                        report.violations.push(format!(
                            "({lam};{mu};{nu}) + (1,1,1): {upper} < {lower}"
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Deterministic xorshift-style generator for the randomized checks, so
/// the sampled instances are identical across platforms and runs.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Random Theorem-2.1 instances with base and increment sizes ≤ size_max;
/// draws with zero witness are flagged and redrawn so exactly `count`
/// effective instances are checked.
pub fn verify_monotone_random(
    oracle: &Oracle,
    count: u64,
    size_max: u32,
    seed: u64,
    max_n: u32,
) -> Result<MonotoneReport> {
    guard("random monotonicity check", 2 * size_max, max_n)?;
    let pools: Vec<Vec<Partition>> = (0..=size_max)
        .map(|n| enumerate(n, EnumFilter::all()))
        .collect();
    let mut rng = SplitMix64::new(seed);
    let mut report = MonotoneReport {
        instances: 0,
        zero_witness: 0,
        violations: Vec::new(),
    };
    while report.instances < count {
        let n = 1 + rng.below(size_max as u64) as usize;
        let m = 1 + rng.below(size_max as u64) as usize;
        let pick = |rng: &mut SplitMix64, pool: &[Partition]| -> Partition {
            pool[rng.below(pool.len() as u64) as usize].clone()
        };
        let lam = pick(&mut rng, &pools[n]);
        let mu = pick(&mut rng, &pools[n]);
        let nu = pick(&mut rng, &pools[n]);
        let alpha = pick(&mut rng, &pools[m]);
        let beta = pick(&mut rng, &pools[m]);
        let gamma = pick(&mut rng, &pools[m]);
        match monotone_check(oracle, [&lam, &mu, &nu], [&alpha, &beta, &gamma])? {
            MonotoneOutcome::Holds { .. } => report.instances += 1,
            MonotoneOutcome::ZeroWitness => report.zero_witness += 1,
            MonotoneOutcome::Violated { lower, upper } => {
                report.instances += 1;
                report.violations.push(format!(
                    "({lam};{mu};{nu}) + ({alpha};{beta};{gamma}): {upper} < {lower}"
                ));
            }
        }
    }
    Ok(report)
}
