//! Algebraic invariants of the model: the quadratic relations attached to
//! incomparable lattice pairs, their expansions in genotype-probability
//! coordinates, and exact/numeric residual checks.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::moebius::moebius_transform;
use crate::algebra::poly::SymbolicPolynomial;
use crate::config;
use crate::error::{CbnError, Result};
use crate::genotype::Genotype;
use crate::lattice::GenotypeLattice;
use crate::poset::Poset;

/// A polynomial that vanishes on every distribution realized by the model.
///
/// Indices refer to positions in the canonical lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadricSpec {
    /// q_i·q_j − q_k·q_l in superset-sum coordinates, where (i, j) is an
    /// incomparable pair and (k, l) = (meet, join).
    QBinomial { positive: (usize, usize), negative: (usize, usize) },
    /// Σ c_{ij} p_i p_j in genotype-probability coordinates; keys are
    /// index pairs with i ≤ j.
    PQuadric { terms: BTreeMap<(usize, usize), i64> },
    /// Σ c_i p_i + constant; used for the normalization Σ p_g − 1.
    Linear { coefficients: Vec<i64>, constant: i64 },
}

impl QuadricSpec {
    /// Evaluates the residual. `QBinomial` expects superset-sum (q)
    /// coordinates; the other variants expect probability (p) coordinates.
    pub fn evaluate(&self, values: &[f64]) -> f64 {
        match self {
            QuadricSpec::QBinomial { positive: (i, j), negative: (k, l) } => {
                values[*i] * values[*j] - values[*k] * values[*l]
            }
            QuadricSpec::PQuadric { terms } => terms
                .iter()
                .map(|(&(i, j), &c)| c as f64 * values[i] * values[j])
                .sum(),
            QuadricSpec::Linear { coefficients, constant } => {
                let dot: f64 =
                    coefficients.iter().zip(values).map(|(&c, &v)| c as f64 * v).sum();
                dot + *constant as f64
            }
        }
    }

    /// Exact-rational counterpart of [`evaluate`](Self::evaluate).
    pub fn evaluate_exact(&self, values: &[BigRational]) -> BigRational {
        match self {
            QuadricSpec::QBinomial { positive: (i, j), negative: (k, l) } => {
                values[*i].clone() * values[*j].clone()
                    - values[*k].clone() * values[*l].clone()
            }
            QuadricSpec::PQuadric { terms } => {
                let mut acc = BigRational::zero();
                for (&(i, j), &c) in terms {
                    acc += BigRational::from_integer(c.into())
                        * values[i].clone()
                        * values[j].clone();
                }
                acc
            }
            QuadricSpec::Linear { coefficients, constant } => {
                let mut acc = BigRational::from_integer((*constant).into());
                for (&c, v) in coefficients.iter().zip(values) {
                    acc += BigRational::from_integer(c.into()) * v.clone();
                }
                acc
            }
        }
    }
}

/// One binomial q_g·q_h − q_{g∧h}·q_{g∨h} per incomparable lattice pair.
///
/// These generate the ideal cutting out the model in q-coordinates; a chain
/// lattice yields none.
pub fn hibi_quadrics(lattice: &GenotypeLattice) -> Vec<QuadricSpec> {
    lattice
        .incomparable_pairs()
        .into_iter()
        .map(|(i, j)| {
            let meet = lattice.meet(i, j);
            let join = lattice.join(i, j);
            QuadricSpec::QBinomial { positive: (i, j), negative: (meet, join) }
        })
        .collect()
}

/// Rewrites every Hibi binomial in probability coordinates by substituting
/// q_h = Σ_{g ⊇ h} p_g and expanding, then appends the normalization
/// Σ p_g − 1 as a `Linear` invariant.
pub fn p_coordinate_quadrics(lattice: &GenotypeLattice) -> Result<Vec<QuadricSpec>> {
    check_symbolic_cap(lattice.len())?;
    let ideals = lattice.ideals();
    let supersets: Vec<Vec<usize>> = ideals
        .iter()
        .map(|h| {
            (0..ideals.len()).filter(|&g| h.is_subset_of(&ideals[g])).collect()
        })
        .collect();

    let mut out = Vec::new();
    for quadric in hibi_quadrics(lattice) {
        let QuadricSpec::QBinomial { positive: (i, j), negative: (k, l) } = quadric else {
            unreachable!("hibi_quadrics only produces QBinomial");
        };
        let mut terms: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        let mut accumulate = |a: usize, b: usize, sign: i64| {
            for &x in &supersets[a] {
                for &y in &supersets[b] {
                    let key = (x.min(y), x.max(y));
                    let entry = terms.entry(key).or_insert(0);
                    *entry += sign;
                    if *entry == 0 {
                        terms.remove(&key);
                    }
                }
            }
        };
        accumulate(i, j, 1);
        accumulate(k, l, -1);
        out.push(QuadricSpec::PQuadric { terms });
    }
    out.push(QuadricSpec::Linear {
        coefficients: vec![1; ideals.len()],
        constant: -1,
    });
    Ok(out)
}

/// The genotype probability as an exact polynomial in t_0..t_{n−1}:
/// ∏_{e ∈ g} t_e · ∏_{e ∈ exit(g)} (1 − t_e).
pub fn symbolic_genotype_polynomial(poset: &Poset, g: &Genotype) -> Result<SymbolicPolynomial> {
    let n = poset.n();
    if g.width() != n {
        return Err(CbnError::DimensionMismatch { expected: n, got: g.width() });
    }
    let exits = poset.min_complement(g)?;
    let mut acc = SymbolicPolynomial::one(n);
    for e in g.events() {
        acc = acc.mul(&SymbolicPolynomial::variable(n, e));
    }
    let one = SymbolicPolynomial::one(n);
    for e in exits.events() {
        acc = acc.mul(&one.sub(&SymbolicPolynomial::variable(n, e)));
    }
    Ok(acc)
}

/// Σ_g P_g over the whole lattice as a polynomial; telescopes to the
/// constant 1 for every poset, which makes it a sharp self-test of the
/// parameterization.
pub fn symbolic_sum_check(poset: &Poset) -> Result<SymbolicPolynomial> {
    let lattice = GenotypeLattice::enumerate(poset)?;
    check_symbolic_cap(lattice.len())?;
    let mut acc = SymbolicPolynomial::zero(poset.n());
    for g in lattice.ideals() {
        acc = acc.add(&symbolic_genotype_polynomial(poset, g)?);
    }
    Ok(acc)
}

/// The model distribution with exact rational arithmetic: each lattice
/// genotype's probability at the given rational parameters.
pub fn exact_distribution(
    poset: &Poset,
    theta: &[BigRational],
) -> Result<(GenotypeLattice, Vec<BigRational>)> {
    if theta.len() != poset.n() {
        return Err(CbnError::DimensionMismatch { expected: poset.n(), got: theta.len() });
    }
    for t in theta {
        if t.is_negative() || t > &BigRational::one() {
            return Err(CbnError::Domain(format!(
                "exact parameter {t} is outside [0, 1]"
            )));
        }
    }
    let lattice = GenotypeLattice::enumerate(poset)?;
    let one = BigRational::one();
    let mut probs = Vec::with_capacity(lattice.len());
    for g in lattice.ideals() {
        let mut p = BigRational::one();
        for e in g.events() {
            p *= theta[e].clone();
        }
        for e in poset.min_complement(g)?.events() {
            p *= one.clone() - theta[e].clone();
        }
        probs.push(p);
    }
    Ok((lattice, probs))
}

/// Checks every invariant against a probability vector and returns the
/// largest absolute residual: the normalization, each p-coordinate quadric,
/// and each Hibi binomial evaluated on the transformed coordinates.
pub fn verify_invariants(lattice: &GenotypeLattice, p: &[f64]) -> Result<f64> {
    lattice.require_len(p.len())?;
    let q = moebius_transform(lattice, p)?;
    let mut worst: f64 = 0.0;
    for spec in p_coordinate_quadrics(lattice)? {
        worst = worst.max(spec.evaluate(p).abs());
    }
    for spec in hibi_quadrics(lattice) {
        worst = worst.max(spec.evaluate(&q).abs());
    }
    Ok(worst)
}

/// Exact-rational counterpart of [`verify_invariants`]; the result is zero
/// exactly when every invariant vanishes identically on the input.
pub fn verify_invariants_exact(
    lattice: &GenotypeLattice,
    p: &[BigRational],
) -> Result<BigRational> {
    lattice.require_len(p.len())?;
    let q = moebius_transform(lattice, p)?;
    let mut worst = BigRational::zero();
    for spec in p_coordinate_quadrics(lattice)? {
        let r = spec.evaluate_exact(p).abs();
        if r > worst {
            worst = r;
        }
    }
    for spec in hibi_quadrics(lattice) {
        let r = spec.evaluate_exact(&q).abs();
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

fn check_symbolic_cap(len: usize) -> Result<()> {
    let cap = config::SYMBOLIC_LATTICE_CAP;
    if len as u64 > cap {
        return Err(CbnError::CapExceeded { size: len.to_string(), cap });
    }
    Ok(())
}
