//! Kostka and skew Kostka numbers counted by Pieri chains of horizontal
//! strips, and Littlewood-Richardson coefficients counted by depth-first
//! lattice-word search with column-strictness pruning.

use std::collections::HashMap;

use num::{BigUint, One, Zero};

use crate::partition::{enumerate, EnumFilter, Partition, SkewShape};
use crate::{Error, Result};

/// K_{λ,α}: semistandard tableaux of shape λ and content α, counted as
/// chains ∅ ⊂ λ^(1) ⊂ … ⊂ λ where step i adds a horizontal strip of size
/// α_i. The content is a composition; zero entries are allowed and the
/// count is invariant under permuting it.
pub fn kostka(lam: &Partition, content: &[u32]) -> Result<BigUint> {
    let shape = SkewShape::new(lam.clone(), Partition::empty())?;
    skew_kostka(&shape, content)
}

/// K_{λ/μ,α}: same chains, starting at μ instead of the empty shape.
pub fn skew_kostka(shape: &SkewShape, content: &[u32]) -> Result<BigUint> {
    let total: u32 = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "content sums to {total} but |{}/{}| = {}",
            shape.outer(),
            shape.inner(),
            shape.size()
        )));
    }
    let mut states: HashMap<Partition, BigUint> = HashMap::new();
    states.insert(shape.inner().clone(), BigUint::one());
    for &step in content {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (kappa, count) in &states {
            for ext in horizontal_strip_extensions(kappa, step, shape.outer()) {
                *next.entry(ext).or_insert_with(BigUint::zero) += count;
            }
        }
        states = next;
    }
    Ok(states.remove(shape.outer()).unwrap_or_else(BigUint::zero))
}

/// All κ̃ with κ ⊆ κ̃ ⊆ cap, |κ̃/κ| = size and κ̃/κ a horizontal strip
/// (at most one new cell per column, i.e. κ̃_{i+1} ≤ κ_i).
fn horizontal_strip_extensions(kappa: &Partition, size: u32, cap: &Partition) -> Vec<Partition> {
    let max_rows = (kappa.len() as usize + 1).min(cap.len() as usize);
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(max_rows);
    strip_rec(kappa, cap, size, 1, max_rows, &mut parts, &mut out);
    out
}

fn strip_rec(
    kappa: &Partition,
    cap: &Partition,
    budget: u32,
    row: usize,
    max_rows: usize,
    parts: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row > max_rows {
        if budget == 0 {
            out.push(Partition::from_unsorted(parts.clone()));
        }
        return;
    }
    let low = kappa.part(row);
    let mut high = cap.part(row).min(low + budget);
    if row > 1 {
        high = high.min(kappa.part(row - 1));
    }
    if low == 0 && budget == 0 {
        // nothing left to place and no forced rows below
        out.push(Partition::from_unsorted(parts.clone()));
        return;
    }
    for c in (low..=high).rev() {
        parts.push(c);
        strip_rec(kappa, cap, budget - (c - low), row + 1, max_rows, parts, out);
        parts.pop();
    }
}

/// c^λ_{μν}: Littlewood-Richardson tableaux of shape λ/μ and content ν,
/// i.e. semistandard fillings whose reverse reading word is a lattice word.
/// Zero when μ ⊄ λ.
pub fn lr(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    if lam.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lam}| = {} but |{mu}| + |{nu}| = {}",
            lam.size(),
            mu.size() + nu.size()
        )));
    }
    let mut count = BigUint::zero();
    lr_dfs(lam, mu, nu, &mut |_| count += 1u32);
    Ok(count)
}

/// Runs the lattice-word search, invoking `on_tableau` with each completed
/// filling (rows of λ, value 0 on cells of μ).
pub(crate) fn lr_dfs(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    on_tableau: &mut impl FnMut(&[Vec<u32>]),
) {
    if !mu.contained_in(lam) {
        return;
    }
    if lam.size() == mu.size() {
        if nu.is_empty() {
            let grid: Vec<Vec<u32>> = lam
                .parts()
                .iter()
                .map(|&r| vec![0; r as usize])
                .collect();
            on_tableau(&grid);
        }
        return;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    let mut cells = Vec::with_capacity((lam.size() - mu.size()) as usize);
    for r in 0..lam.len() as usize {
        for c in (mu.part(r + 1)..lam.parts()[r]).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut grid: Vec<Vec<u32>> = lam
        .parts()
        .iter()
        .map(|&r| vec![0; r as usize])
        .collect();
    let mut counts = vec![0u32; nu.len() as usize + 1];
    fill(&cells, 0, mu, nu, &mut grid, &mut counts, on_tableau);
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    on_tableau: &mut impl FnMut(&[Vec<u32>]),
) {
    if at == cells.len() {
        on_tableau(grid);
        return;
    }
    let (r, c) = cells[at];
    let row_cap = if c + 1 < grid[r].len() {
        grid[r][c + 1]
    } else {
        u32::MAX
    };
    let col_floor = if r > 0 && c >= mu.part(r) as usize {
        grid[r - 1][c]
    } else {
        0
    };
    for v in 1..=nu.len() {
        if counts[v as usize] >= nu.part(v as usize) {
            continue; // content exhausted
        }
        if v > 1 && counts[v as usize] >= counts[v as usize - 1] {
            continue; // reverse reading word must stay a lattice word
        }
        if v > row_cap || v <= col_floor {
            continue;
        }
        // lattice + column strictness force entries in row r to be ≤ r+1
        debug_assert!(v as usize <= r + 1);
        grid[r][c] = v;
        counts[v as usize] += 1;
        fill(cells, at + 1, mu, nu, grid, counts, on_tableau);
        counts[v as usize] -= 1;
        grid[r][c] = 0;
    }
}

/// Full expansion s_μ · s_ν = Σ_λ c^λ_{μν} s_λ, sorted by λ; only nonzero
/// coefficients are kept.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, BigUint)> {
    let n = mu.size() + nu.size();
    enumerate(n, EnumFilter::all())
        .into_iter()
        .filter(|lam| mu.contained_in(lam) && nu.contained_in(lam))
        .filter_map(|lam| {
            let c = lr(&lam, mu, nu).expect("sizes match by construction");
            if c.is_zero() {
                None
            } else {
                Some((lam, c))
            }
        })
        .collect()
}

/// Coefficient of s_λ in s_μ · h_{α_1} ··· h_{α_r}, computed by iterated
/// Schur products (h_a = s_(a)). Independent of the Pieri-chain count, so
/// the two routes cross-check each other.
pub fn h_expansion_coefficient(mu: &Partition, content: &[u32], lam: &Partition) -> BigUint {
    let mut expansion: HashMap<Partition, BigUint> = HashMap::new();
    expansion.insert(mu.clone(), BigUint::one());
    for &a in content {
        if a == 0 {
            continue;
        }
        let h = Partition::row(a);
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (kappa, coeff) in &expansion {
            for (target, c) in schur_product(kappa, &h) {
                // skip terms that can never reach λ
                if !target.contained_in(lam) {
                    continue;
                }
                *next.entry(target).or_insert_with(BigUint::zero) += c * coeff;
            }
        }
        expansion = next;
    }
    expansion.remove(lam).unwrap_or_else(BigUint::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{binomial, dimension};
    use crate::partition::compositions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]).unwrap(), BigUint::from(2u32));
        assert_eq!(
            kostka(&p("2,2"), &[1, 1, 1, 1]).unwrap(),
            dimension(&p("2,2"))
        );
        for lam in enumerate(6, EnumFilter::all()) {
            assert_eq!(kostka(&lam, lam.parts()).unwrap(), BigUint::one());
        }
        assert!(kostka(&p("2,1"), &[1, 1]).is_err());
    }

    #[test]
    fn kostka_content_permutation_invariance() {
        for n in 1..=6u32 {
            for lam in enumerate(n, EnumFilter::all()) {
                for alpha in compositions(n, 3) {
                    let sorted = Partition::from_unsorted(alpha.clone());
                    assert_eq!(
                        kostka(&lam, &alpha).unwrap(),
                        kostka(&lam, sorted.parts()).unwrap(),
                        "λ={lam} α={alpha:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn skew_kostka_examples() {
        assert_eq!(
            skew_kostka(&skew("2,1", "1"), &[1, 1]).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(skew_kostka(&skew("2,1", "2,1"), &[]).unwrap(), BigUint::one());
        assert_eq!(
            skew_kostka(&skew("2,2", "1"), &[2, 1]).unwrap(),
            h_expansion_coefficient(&p("1"), &[2, 1], &p("2,2"))
        );
        assert_eq!(
            skew_kostka(&skew("2,2", "1"), &[2, 1]).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn skew_kostka_zero_steps_allowed() {
        assert_eq!(
            skew_kostka(&skew("2,1", "1"), &[1, 0, 1]).unwrap(),
            skew_kostka(&skew("2,1", "1"), &[1, 1]).unwrap()
        );
    }

    #[test]
    fn kostka_matches_iterated_h_expansion() {
        // eq-style cross-check of the two routes, exhaustive for n ≤ 6
        for n in 1..=6u32 {
            for lam in enumerate(n, EnumFilter::all()) {
                for alpha in enumerate(n, EnumFilter::all()) {
                    assert_eq!(
                        kostka(&lam, alpha.parts()).unwrap(),
                        h_expansion_coefficient(&Partition::empty(), alpha.parts(), &lam),
                        "λ={lam} α={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr(&p("2,1"), &p("1"), &p("2")).unwrap(), BigUint::one());
        assert_eq!(lr(&p("2,1"), &p("1"), &p("1,1")).unwrap(), BigUint::one());
        // empty second factor: c^λ_{μ,∅} = δ_{λμ}
        for lam in enumerate(4, EnumFilter::all()) {
            for mu in enumerate(4, EnumFilter::all()) {
                let expected = if lam == mu { 1u32 } else { 0 };
                assert_eq!(
                    lr(&lam, &mu, &Partition::empty()).unwrap(),
                    BigUint::from(expected)
                );
            }
        }
        assert!(lr(&p("2,1"), &p("1"), &p("3")).is_err());
    }

    #[test]
    fn schur_product_examples() {
        let one = BigUint::one();
        assert_eq!(
            schur_product(&p("1"), &p("1")),
            vec![(p("2"), one.clone()), (p("1,1"), one.clone())]
        );
        assert_eq!(
            schur_product(&p("2,1"), &Partition::empty()),
            vec![(p("2,1"), one.clone())]
        );
        assert_eq!(
            schur_product(&p("2"), &p("1,1")),
            vec![(p("3,1"), one.clone()), (p("2,1,1"), one)]
        );
    }

    #[test]
    fn lr_symmetry_and_support() {
        for n in 2..=6u32 {
            for lam in enumerate(n, EnumFilter::all()) {
                for m in 0..=n {
                    for mu in enumerate(m, EnumFilter::all()) {
                        for nu in enumerate(n - m, EnumFilter::all()) {
                            let c = lr(&lam, &mu, &nu).unwrap();
                            assert_eq!(c, lr(&lam, &nu, &mu).unwrap(), "λ={lam} μ={mu} ν={nu}");
                            if !c.is_zero() {
                                assert!(mu.contained_in(&lam) && nu.contained_in(&lam));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_row_constraint() {
        // every counted tableau has entries ≤ its (1-based) row index
        for n in 2..=6u32 {
            for lam in enumerate(n, EnumFilter::all()) {
                for m in 1..n {
                    for mu in enumerate(m, EnumFilter::all()) {
                        for nu in enumerate(n - m, EnumFilter::all()) {
                            lr_dfs(&lam, &mu, &nu, &mut |grid| {
                                for (r, row) in grid.iter().enumerate() {
                                    for &v in row {
                                        assert!(
                                            v as usize <= r + 1,
                                            "entry {v} in row {} of λ/μ = {lam}/{mu}",
                                            r + 1
                                        );
                                    }
                                }
                            });
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn schur_product_dimension_consistency() {
        // Σ_λ c^λ_{μν} f^λ = C(n, |μ|) f^μ f^ν
        for n in 2..=6u32 {
            for m in 0..=n {
                for mu in enumerate(m, EnumFilter::all()) {
                    for nu in enumerate(n - m, EnumFilter::all()) {
                        let lhs: BigUint = schur_product(&mu, &nu)
                            .iter()
                            .map(|(lam, c)| c * dimension(lam))
                            .sum();
                        let rhs = binomial(n, m) * dimension(&mu) * dimension(&nu);
                        assert_eq!(lhs, rhs, "μ={mu} ν={nu}");
                    }
                }
            }
        }
    }
}
