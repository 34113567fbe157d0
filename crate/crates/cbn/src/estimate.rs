//! Closed-form maximum-likelihood estimation and likelihood evaluation,
//! for the pure model and for the error-tolerant mixture.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::counts::CountVector;
use crate::error::{CbnError, Result};
use crate::genotype::Genotype;
use crate::poset::Poset;

/// Result of the closed-form θ estimate. Events whose denominator mass is
/// zero are not determined by the data: they get θ̂ = 0 and are flagged.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaEstimate {
    pub theta: Vec<f64>,
    pub unidentified: Vec<usize>,
}

fn check_widths(p: &Poset, n: usize) -> Result<()> {
    if n != p.n() {
        return Err(CbnError::DimensionMismatch { expected: p.n(), got: n });
    }
    Ok(())
}

fn check_theta(p: &Poset, theta: &[f64]) -> Result<()> {
    check_widths(p, theta.len())?;
    for (e, &t) in theta.iter().enumerate() {
        if !(0.0..=1.0).contains(&t) {
            return Err(CbnError::Domain(format!("theta[{e}] = {t} is outside [0, 1]")));
        }
    }
    Ok(())
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(CbnError::Domain(format!("lambda = {lambda} is outside [0, 1]")));
    }
    Ok(())
}

/// The ML parameters in closed form:
/// `θ̂_e = Σ_{g: e∈g} u_g / Σ_{g: below(e)⊆g} u_g`.
///
/// The denominator is the mass of genotypes in which `e` has occurred or
/// could occur next; it dominates the numerator, so θ̂ ∈ [0,1].
pub fn mle_theta(p: &Poset, u: &CountVector) -> Result<ThetaEstimate> {
    check_widths(p, u.n())?;
    if u.total() <= 0.0 {
        return Err(CbnError::EmptyData);
    }
    let bad = u.incompatible_support(p);
    if !bad.is_empty() {
        return Err(CbnError::IncompatibleData(
            bad.iter().map(Genotype::to_bitstring).collect(),
        ));
    }
    let n = p.n();
    let mut numer = vec![0.0; n];
    let mut denom = vec![0.0; n];
    for (g, c) in u.support() {
        let bits = g.bits();
        for e in 0..n {
            if bits & (1 << e) != 0 {
                numer[e] += c;
            }
            if p.below_mask(e) & !bits == 0 {
                denom[e] += c;
            }
        }
    }
    let mut theta = vec![0.0; n];
    let mut unidentified = Vec::new();
    for e in 0..n {
        if denom[e] > 0.0 {
            theta[e] = numer[e] / denom[e];
        } else {
            unidentified.push(e);
        }
    }
    Ok(ThetaEstimate { theta, unidentified })
}

/// `ℓ_u(θ) = Σ_g u_g (Σ_{e∈g} log θ_e + Σ_{e∈min(g^c)} log(1−θ_e))`.
///
/// Returns −∞ iff some positive-mass genotype has probability zero —
/// in particular whenever the data is incompatible with the poset.
pub fn log_likelihood(p: &Poset, theta: &[f64], u: &CountVector) -> Result<f64> {
    check_theta(p, theta)?;
    check_widths(p, u.n())?;
    let mut acc = 0.0;
    for (g, c) in u.support() {
        if !p.is_order_ideal(g) {
            return Ok(f64::NEG_INFINITY);
        }
        let ready = p.min_complement(g).expect("checked ideal");
        let mut term = 0.0;
        for e in g.events() {
            term += theta[e].ln();
        }
        for e in ready.events() {
            term += (1.0 - theta[e]).ln();
        }
        acc += c * term;
    }
    Ok(acc)
}

fn states_outside_lattice(n: usize, lattice_size: &BigUint) -> BigUint {
    (BigUint::one() << n) - lattice_size
}

/// The two-branch mixture probability: `λ·P_g(θ)` on the lattice,
/// `(1−λ)/(2^n − |G|)` uniformly off it.
pub fn mixture_probability(
    p: &Poset,
    theta: &[f64],
    lambda: f64,
    lattice_size: &BigUint,
    g: &Genotype,
) -> Result<f64> {
    check_theta(p, theta)?;
    check_lambda(lambda)?;
    check_widths(p, g.width())?;
    if p.is_order_ideal(g) {
        let ready = p.min_complement(g).expect("checked ideal");
        let mut prob = 1.0;
        for e in g.events() {
            prob *= theta[e];
        }
        for e in ready.events() {
            prob *= 1.0 - theta[e];
        }
        Ok(lambda * prob)
    } else {
        let outside = states_outside_lattice(p.n(), lattice_size);
        if outside.is_zero() {
            return Err(CbnError::DegenerateMixture);
        }
        Ok((1.0 - lambda) / outside.to_f64().expect("finite"))
    }
}

/// `λ̂` = the fraction of the data mass compatible with `p`.
pub fn mle_lambda(p: &Poset, u: &CountVector) -> Result<f64> {
    check_widths(p, u.n())?;
    let total = u.total();
    if total <= 0.0 {
        return Err(CbnError::EmptyData);
    }
    Ok(u.mass_where(|g| p.is_order_ideal(g)) / total)
}

/// The mixture log-likelihood
/// `Σ_{g∈G} u_g [log λ + log P_g(θ)] + Σ_{g∉G} u_g [log(1−λ) − log(2^n − |G|)]`
/// with the convention that zero-mass terms contribute nothing.
pub fn mixture_log_likelihood(
    p: &Poset,
    theta: &[f64],
    lambda: f64,
    u: &CountVector,
) -> Result<f64> {
    check_theta(p, theta)?;
    check_lambda(lambda)?;
    check_widths(p, u.n())?;
    let lattice_size = p.count_order_ideals();
    let outside = states_outside_lattice(p.n(), &lattice_size);
    let mut acc = 0.0;
    for (g, c) in u.support() {
        if p.is_order_ideal(g) {
            let ready = p.min_complement(g).expect("checked ideal");
            let mut term = lambda.ln();
            for e in g.events() {
                term += theta[e].ln();
            }
            for e in ready.events() {
                term += (1.0 - theta[e]).ln();
            }
            acc += c * term;
        } else {
            if outside.is_zero() {
                return Err(CbnError::DegenerateMixture);
            }
            acc += c * ((1.0 - lambda).ln() - outside.to_f64().expect("finite").ln());
        }
    }
    Ok(acc)
}

/// The bound function `f_{a,b}(x, y) = x^b (y−a)^{1−a} / (y (x−a)^{b−a})`,
/// which is ≤ 1 on the admissible chain 0 ≤ a ≤ b ≤ x ≤ y ≤ 1.
pub fn mle_degree_check_ratio(a: f64, b: f64, x: f64, y: f64) -> Result<f64> {
    let ordered = 0.0 <= a && a <= b && b <= x && x <= y && y <= 1.0;
    if !ordered {
        return Err(CbnError::Domain(format!(
            "need 0 ≤ a ≤ b ≤ x ≤ y ≤ 1, got a={a}, b={b}, x={x}, y={y}"
        )));
    }
    if y == 0.0 {
        return Err(CbnError::Domain("y must be positive".to_string()));
    }
    if x == a && b > a {
        return Err(CbnError::Domain(
            "need x > a unless b = a (negative power of zero)".to_string(),
        ));
    }
    Ok(x.powf(b) * (y - a).powf(1.0 - a) / (y * (x - a).powf(b - a)))
}

/// Finds the single relation by which `p2` extends `p1`.
fn single_extra_relation(p1: &Poset, p2: &Poset) -> Result<(usize, usize)> {
    if p1.n() != p2.n() {
        return Err(CbnError::DimensionMismatch { expected: p1.n(), got: p2.n() });
    }
    if !p1.is_refinement(p2)? {
        return Err(CbnError::NotNested);
    }
    let extra: Vec<(usize, usize)> = p2
        .relations()
        .into_iter()
        .filter(|&(e, f)| !p1.lt(e, f))
        .collect();
    match extra.as_slice() {
        [pair] => Ok(*pair),
        _ => Err(CbnError::NotNested),
    }
}

/// Likelihood ratio between nested models differing by one relation `e<f`,
/// returned two ways: `direct` from the two maximized log-likelihoods and
/// `closed_form` from the mass statistics
/// `V1` (mass containing `e`), `V2` (mass containing `f`), and `N`/`M`
/// (mass with all of `f`'s predecessors present, per poset):
/// `M^V1 (N−V2)^(1−V2) / (N (M−V2)^(V1−V2))`.
///
/// The two agree whenever every observed genotype contains `below(f)` of
/// the smaller poset (in particular when `f` is minimal there); both are
/// returned so callers can compare.
pub fn nested_likelihood_ratio(
    p1: &Poset,
    p2: &Poset,
    u: &CountVector,
) -> Result<(f64, f64)> {
    let (e, f) = single_extra_relation(p1, p2)?;
    check_widths(p1, u.n())?;
    let un = u.normalized()?;
    let bad = un.incompatible_support(p2);
    if !bad.is_empty() {
        return Err(CbnError::IncompatibleData(
            bad.iter().map(Genotype::to_bitstring).collect(),
        ));
    }

    let est1 = mle_theta(p1, &un)?;
    let est2 = mle_theta(p2, &un)?;
    let l1 = log_likelihood(p1, &est1.theta, &un)?;
    let l2 = log_likelihood(p2, &est2.theta, &un)?;
    let direct = (l1 - l2).exp();

    let v1 = un.mass_where(|g| g.contains(e));
    let v2 = un.mass_where(|g| g.contains(f));
    let below1 = p1.below_mask(f);
    let below2 = p2.below_mask(f);
    let n_mass = un.mass_where(|g| below1 & !g.bits() == 0);
    let m_mass = un.mass_where(|g| below2 & !g.bits() == 0);
    let closed_form = if n_mass == 0.0 {
        // f is never ready in the data: θ̂_f drops out of both models and
        // the likelihoods coincide.
        1.0
    } else {
        m_mass.powf(v1) * (n_mass - v2).powf(1.0 - v2)
            / (n_mass * (m_mass - v2).powf(v1 - v2))
    };
    Ok((direct, closed_form))
}
