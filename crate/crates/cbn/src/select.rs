//! Model selection: event separation and merging, the maximal compatible
//! poset, ε-tolerant posets, end-to-end mixture fitting, ε-scans and the
//! bootstrap.

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::counts::CountVector;
use crate::error::{CbnError, Result};
use crate::estimate::{mixture_log_likelihood, mle_theta};
use crate::genotype::Genotype;
use crate::poset::Poset;

/// A partition of the events into classes that the data cannot tell apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventMerge {
    /// Classes of original events, each ascending, ordered by first member.
    pub groups: Vec<Vec<usize>>,
    /// Original event → class index.
    pub mapping: Vec<usize>,
    pub reduced_n: usize,
}

impl EventMerge {
    pub fn is_identity(&self) -> bool {
        self.reduced_n == self.mapping.len()
    }
}

/// Whether the data distinguishes every pair of events: two events are
/// inseparable iff they occur in exactly the same support genotypes.
/// Returns the partition into classes of pairwise-inseparable events.
pub fn separates_events(u: &CountVector) -> Result<(bool, Vec<Vec<usize>>)> {
    if u.total() <= 0.0 {
        return Err(CbnError::EmptyData);
    }
    let n = u.n();
    // Column signature of each event over the support, as a bitset.
    let words = u.support_len().div_ceil(64);
    let mut signatures = vec![vec![0u64; words]; n];
    for (i, (g, _)) in u.support().enumerate() {
        for e in g.events() {
            signatures[e][i / 64] |= 1 << (i % 64);
        }
    }
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for e in 0..n {
        if class_of[e].is_some() {
            continue;
        }
        let k = groups.len();
        class_of[e] = Some(k);
        groups.push(vec![e]);
        for f in (e + 1)..n {
            if class_of[f].is_none() && signatures[e] == signatures[f] {
                class_of[f] = Some(k);
                groups[k].push(f);
            }
        }
    }
    let separated = groups.len() == n;
    Ok((separated, groups))
}

/// Collapses each class of inseparable events into a single event. A
/// merged event is present in a reduced genotype iff its members are
/// (members co-occur by construction).
pub fn merge_events(u: &CountVector) -> Result<(CountVector, EventMerge)> {
    let (_, groups) = separates_events(u)?;
    let n = u.n();
    let reduced_n = groups.len();
    let mut mapping = vec![0usize; n];
    for (k, group) in groups.iter().enumerate() {
        for &e in group {
            mapping[e] = k;
        }
    }
    let mut reduced = CountVector::new(reduced_n);
    for (g, c) in u.support() {
        let mut bits = 0u64;
        for (k, group) in groups.iter().enumerate() {
            if g.contains(group[0]) {
                bits |= 1 << k;
            }
        }
        reduced.add(Genotype::from_bits(bits, reduced_n), c);
    }
    Ok((reduced, EventMerge { groups, mapping, reduced_n }))
}

/// The largest poset compatible with the data: `e < f` iff no support
/// genotype contains `f` without `e`. Requires separated events.
pub fn maximal_compatible_poset(u: &CountVector) -> Result<Poset> {
    let (separated, _) = separates_events(u)?;
    if !separated {
        return Err(CbnError::CallerMustMerge);
    }
    let n = u.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // blocked[f] = events e for which some support genotype has f but not e.
    let mut blocked = vec![0u64; n];
    for (g, _) in u.support() {
        let absent = !g.bits() & full;
        for f in g.events() {
            blocked[f] |= absent;
        }
    }
    let mut pairs = Vec::new();
    for e in 0..n {
        for f in 0..n {
            if e != f && blocked[f] & (1 << e) == 0 {
                pairs.push((e, f));
            }
        }
    }
    Poset::from_relations(n, &pairs)
}

/// For every ordered pair `(e, f)`, the fraction of the data mass that
/// violates the relation `e < f`, i.e. has `f` without `e`.
pub fn violation_fractions(u: &CountVector) -> Result<Vec<Vec<f64>>> {
    let total = u.total();
    if total <= 0.0 {
        return Err(CbnError::EmptyData);
    }
    let n = u.n();
    let mut viol = vec![vec![0.0; n]; n];
    for (g, c) in u.support() {
        for f in g.events() {
            for e in 0..n {
                if !g.contains(e) {
                    viol[e][f] += c;
                }
            }
        }
    }
    for row in &mut viol {
        for v in row {
            *v /= total;
        }
    }
    Ok(viol)
}

/// The ε-tolerant poset: all relations violated by at most a fraction ε
/// of the data. Pairs passing the threshold in both directions are
/// dropped entirely; the remainder is transitively closed. At ε = 0 this
/// is exactly `maximal_compatible_poset`.
pub fn epsilon_poset(u: &CountVector, epsilon: f64) -> Result<Poset> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(CbnError::Domain(format!("epsilon = {epsilon} is outside [0, 1]")));
    }
    let (separated, _) = separates_events(u)?;
    if !separated {
        return Err(CbnError::CallerMustMerge);
    }
    let n = u.n();
    let viol = violation_fractions(u)?;
    let mut keep = vec![vec![false; n]; n];
    for e in 0..n {
        for f in 0..n {
            if e != f && viol[e][f] <= epsilon {
                keep[e][f] = true;
            }
        }
    }
    for e in 0..n {
        for f in (e + 1)..n {
            if keep[e][f] && keep[f][e] {
                keep[e][f] = false;
                keep[f][e] = false;
            }
        }
    }
    // A directed cycle cannot survive the mutual-pair removal: around any
    // cycle the forward and backward violation masses telescope to equal
    // sums, so if every forward edge passed the threshold some backward
    // edge did too, and that pair was dropped. The repair loop below is a
    // cheap guard kept in case the input violates that reasoning (it
    // removes the worst-supported in-cycle relation until acyclic).
    loop {
        let mut reach = vec![0u64; n];
        for e in 0..n {
            for f in 0..n {
                if keep[e][f] {
                    reach[e] |= 1 << f;
                }
            }
        }
        for k in 0..n {
            for e in 0..n {
                if reach[e] & (1 << k) != 0 {
                    reach[e] |= reach[k];
                }
            }
        }
        let mut worst: Option<(f64, usize, usize)> = None;
        for e in 0..n {
            for f in 0..n {
                if keep[e][f] && reach[f] & (1 << e) != 0 {
                    let cand = (viol[e][f], e, f);
                    if worst.is_none_or(|w| (cand.0, cand.1, cand.2) > w) {
                        worst = Some(cand);
                    }
                }
            }
        }
        match worst {
            Some((_, e, f)) => keep[e][f] = false,
            None => break,
        }
    }
    let mut pairs = Vec::new();
    for e in 0..n {
        for f in 0..n {
            if keep[e][f] {
                pairs.push((e, f));
            }
        }
    }
    Poset::from_relations(n, &pairs)
}

/// All ε values at which the ε-poset can change: the distinct violation
/// fractions in the data, plus 0.
pub fn auto_epsilon_grid(u: &CountVector) -> Result<Vec<f64>> {
    let (separated, _) = separates_events(u)?;
    let working;
    let viol = if separated {
        violation_fractions(u)?
    } else {
        working = merge_events(u)?.0;
        violation_fractions(&working)?
    };
    let mut grid = vec![0.0];
    for (e, row) in viol.iter().enumerate() {
        for (f, &v) in row.iter().enumerate() {
            if e != f {
                grid.push(v);
            }
        }
    }
    grid.sort_by(|a, b| a.partial_cmp(b).expect("fractions are finite"));
    grid.dedup();
    Ok(grid)
}

/// A fitted error-tolerant mixture model.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureFit {
    pub poset: Poset,
    pub theta_hat: Vec<f64>,
    pub lambda_hat: f64,
    pub epsilon: f64,
    pub lattice_size: BigUint,
    pub log_lik: f64,
    pub n_compatible: f64,
    pub n_total: f64,
    pub unidentified_events: Vec<usize>,
    /// Present when inseparable events had to be merged first; the fit is
    /// then expressed on the reduced event set.
    pub merge: Option<EventMerge>,
}

/// Fits the mixture model at tolerance ε: merge inseparable events if
/// necessary, build the ε-poset, estimate θ̂ from the compatible data and
/// λ̂ from all of it, and evaluate the mixture log-likelihood.
pub fn fit(u: &CountVector, epsilon: f64) -> Result<MixtureFit> {
    let (separated, _) = separates_events(u)?;
    let (working, merge) = if separated {
        (u.clone(), None)
    } else {
        let (reduced, m) = merge_events(u)?;
        (reduced, Some(m))
    };
    let poset = epsilon_poset(&working, epsilon)?;
    let (compatible, _) = working.split_compatible(&poset);
    let n = poset.n();
    let (theta_hat, unidentified_events) = if compatible.is_empty() {
        // No compatible mass: the likelihood is flat in every θ_e.
        (vec![0.0; n], (0..n).collect())
    } else {
        let est = mle_theta(&poset, &compatible)?;
        (est.theta, est.unidentified)
    };
    let n_total = working.total();
    let n_compatible = compatible.total();
    let lambda_hat = n_compatible / n_total;
    let log_lik = mixture_log_likelihood(&poset, &theta_hat, lambda_hat, &working)?;
    Ok(MixtureFit {
        lattice_size: poset.count_order_ideals(),
        poset,
        theta_hat,
        lambda_hat,
        epsilon,
        log_lik,
        n_compatible,
        n_total,
        unidentified_events,
        merge,
    })
}

/// One scan point: a fitted model and the ε-interval it covers.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub epsilon_min: f64,
    pub epsilon_max: f64,
    pub fraction_incompatible: f64,
    pub fit: MixtureFit,
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub entries: Vec<ScanEntry>,
}

/// Fits the mixture at every ε in the grid, collapsing consecutive ε
/// values that produce the same poset into one entry with an ε-interval.
pub fn scan(u: &CountVector, epsilons: &[f64]) -> Result<ScanResult> {
    if epsilons.is_empty() {
        return Err(CbnError::Domain("empty epsilon grid".to_string()));
    }
    for w in epsilons.windows(2) {
        if w[0] >= w[1] {
            return Err(CbnError::Domain(format!(
                "epsilon grid must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    let mut entries: Vec<ScanEntry> = Vec::new();
    for &eps in epsilons {
        let f = fit(u, eps)?;
        if let Some(last) = entries.last_mut() {
            if last.fit.poset == f.poset {
                last.epsilon_max = eps;
                continue;
            }
        }
        entries.push(ScanEntry {
            epsilon_min: eps,
            epsilon_max: eps,
            fraction_incompatible: 1.0 - f.lambda_hat,
            fit: f,
        });
    }
    Ok(ScanResult { entries })
}

/// Five-number summary of bootstrap log-likelihood replicates.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BootstrapSummary {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl BootstrapSummary {
    /// Whether the full ranges `[min, max]` intersect; disjoint ranges
    /// mark a significant likelihood difference between two models.
    pub fn overlaps(&self, other: &BootstrapSummary) -> bool {
        self.min <= other.max && other.min <= self.max
    }
}

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (h - lo as f64)
}

/// Bootstraps the mixture log-likelihood for a fixed poset: resamples the
/// data with replacement, re-estimates θ̂ and λ̂ per replicate, and
/// summarizes the replicate log-likelihoods. Replicate `r` draws from a
/// generator seeded with `seed + r`, so results are reproducible and
/// independent of evaluation order.
pub fn bootstrap_loglik(
    u: &CountVector,
    poset: &Poset,
    b: usize,
    seed: u64,
) -> Result<BootstrapSummary> {
    if b < 1 {
        return Err(CbnError::Domain("bootstrap needs at least one replicate".to_string()));
    }
    let total = u.total();
    if total <= 0.0 {
        return Err(CbnError::EmptyData);
    }
    let mut genotypes = Vec::with_capacity(u.support_len());
    let mut cumulative = Vec::with_capacity(u.support_len());
    let mut acc = 0.0;
    for (g, c) in u.support() {
        acc += c;
        genotypes.push(*g);
        cumulative.push(acc);
    }
    let draws = total.round().max(1.0) as u64;
    let mut lls = Vec::with_capacity(b);
    for r in 0..b {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(r as u64));
        let mut sample = CountVector::new(u.n());
        for _ in 0..draws {
            let x = rng.random::<f64>() * total;
            let idx = cumulative.partition_point(|&c| c <= x).min(genotypes.len() - 1);
            sample.add(genotypes[idx], 1.0);
        }
        let (compatible, _) = sample.split_compatible(poset);
        let theta = if compatible.is_empty() {
            vec![0.0; u.n()]
        } else {
            mle_theta(poset, &compatible)?.theta
        };
        let lambda = compatible.total() / sample.total();
        lls.push(mixture_log_likelihood(poset, &theta, lambda, &sample)?);
    }
    lls.sort_by(|a, b| a.partial_cmp(b).expect("replicate log-likelihoods are comparable"));
    Ok(BootstrapSummary {
        min: lls[0],
        q1: quantile(&lls, 0.25),
        median: quantile(&lls, 0.5),
        q3: quantile(&lls, 0.75),
        max: lls[lls.len() - 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimate::log_likelihood;
    use crate::model::CbnModel;

    fn diamond() -> Poset {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn g(s: &str) -> Genotype {
        Genotype::parse_bitstring(s).unwrap()
    }

    fn diamond_support_counts() -> CountVector {
        CountVector::from_pairs(
            4,
            &[
                (g("0000"), 2.0),
                (g("1000"), 3.0),
                (g("0100"), 3.0),
                (g("1100"), 4.0),
                (g("1110"), 5.0),
                (g("1101"), 2.0),
                (g("1111"), 5.0),
            ],
        )
    }

    #[test]
    fn separation_examples() {
        let sep = CountVector::from_pairs(2, &[(g("10"), 1.0), (g("01"), 1.0)]);
        let (ok, groups) = separates_events(&sep).unwrap();
        assert!(ok);
        assert_eq!(groups, vec![vec![0], vec![1]]);

        let unsep = CountVector::from_pairs(2, &[(g("00"), 1.0), (g("11"), 1.0)]);
        let (ok, groups) = separates_events(&unsep).unwrap();
        assert!(!ok);
        assert_eq!(groups, vec![vec![0, 1]]);

        let (ok, _) = separates_events(&diamond_support_counts()).unwrap();
        assert!(ok);
    }

    #[test]
    fn merge_examples() {
        let u = CountVector::from_pairs(2, &[(g("00"), 3.0), (g("11"), 7.0)]);
        let (reduced, merge) = merge_events(&u).unwrap();
        assert_eq!(merge.reduced_n, 1);
        assert_eq!(merge.groups, vec![vec![0, 1]]);
        assert_eq!(reduced.mass(&g("0")), 3.0);
        assert_eq!(reduced.mass(&g("1")), 7.0);
        assert!(separates_events(&reduced).unwrap().0);

        let u2 = CountVector::from_pairs(
            3,
            &[(g("000"), 1.0), (g("110"), 2.0), (g("111"), 4.0)],
        );
        let (reduced2, merge2) = merge_events(&u2).unwrap();
        assert_eq!(merge2.groups, vec![vec![0, 1], vec![2]]);
        assert_eq!(merge2.mapping, vec![0, 0, 1]);
        assert_eq!(reduced2.mass(&g("00")), 1.0);
        assert_eq!(reduced2.mass(&g("10")), 2.0);
        assert_eq!(reduced2.mass(&g("11")), 4.0);

        let sep = diamond_support_counts();
        let (_, id) = merge_events(&sep).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn maximal_poset_examples() {
        let u = CountVector::from_pairs(2, &[(g("00"), 1.0), (g("10"), 1.0), (g("11"), 1.0)]);
        let p = maximal_compatible_poset(&u).unwrap();
        assert_eq!(p.relations(), vec![(0, 1)]);

        let p2 = maximal_compatible_poset(&diamond_support_counts()).unwrap();
        assert_eq!(p2, diamond());

        let mut all = CountVector::new(3);
        for bits in 0..8u64 {
            all.add(Genotype::from_bits(bits, 3), 1.0);
        }
        assert_eq!(maximal_compatible_poset(&all).unwrap(), Poset::antichain(3));

        let unsep = CountVector::from_pairs(2, &[(g("00"), 1.0), (g("11"), 1.0)]);
        assert!(matches!(
            maximal_compatible_poset(&unsep),
            Err(CbnError::CallerMustMerge)
        ));
    }

    #[test]
    fn maximality_of_the_data_poset() {
        // Adding any missing relation to E_u breaks compatibility.
        let u = diamond_support_counts();
        let p = maximal_compatible_poset(&u).unwrap();
        for (g, _) in u.support() {
            assert!(p.is_order_ideal(g));
        }
        for e in 0..4 {
            for f in 0..4 {
                if e != f && !p.lt(e, f) {
                    match p.with_relation(e, f) {
                        Ok(bigger) => {
                            assert!(u.support().any(|(g, _)| !bigger.is_order_ideal(g)));
                        }
                        Err(CbnError::Cycle(_)) => {} // reverse already present
                        Err(other) => panic!("unexpected error: {other:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn violation_fraction_example() {
        let u = CountVector::from_pairs(
            2,
            &[(g("00"), 90.0), (g("01"), 10.0), (g("11"), 100.0)],
        );
        let viol = violation_fractions(&u).unwrap();
        assert!((viol[0][1] - 0.05).abs() < 1e-15);
        assert_eq!(viol[1][0], 0.0);
    }

    #[test]
    fn epsilon_poset_thresholds_and_mutual_removal() {
        let u = CountVector::from_pairs(
            2,
            &[(g("00"), 90.0), (g("01"), 10.0), (g("11"), 100.0)],
        );
        // Below the 0.05 threshold only the unviolated direction survives.
        let low = epsilon_poset(&u, 0.04).unwrap();
        assert_eq!(low.relations(), vec![(1, 0)]);
        assert_eq!(epsilon_poset(&u, 0.0).unwrap(), maximal_compatible_poset(&u).unwrap());
        // At ε ≥ 0.05 both directions pass and the pair is dropped.
        assert_eq!(epsilon_poset(&u, 0.05).unwrap(), Poset::antichain(2));
        assert_eq!(epsilon_poset(&u, 1.0).unwrap(), Poset::antichain(2));
    }

    #[test]
    fn epsilon_zero_matches_maximal_poset() {
        for seed in 0..20u64 {
            let m = CbnModel::new(diamond(), vec![0.6, 0.4, 0.7, 0.3]).unwrap();
            let u = m.sample(200, seed);
            if !separates_events(&u).unwrap().0 {
                continue;
            }
            assert_eq!(
                epsilon_poset(&u, 0.0).unwrap(),
                maximal_compatible_poset(&u).unwrap()
            );
        }
    }

    #[test]
    fn auto_grid_lists_distinct_fractions() {
        let u = CountVector::from_pairs(
            2,
            &[(g("00"), 90.0), (g("01"), 10.0), (g("11"), 100.0)],
        );
        assert_eq!(auto_epsilon_grid(&u).unwrap(), vec![0.0, 0.05]);
    }

    #[test]
    fn fit_recovers_a_clean_model() {
        let m = CbnModel::new(diamond(), vec![0.5; 4]).unwrap();
        let u = m.sample(3000, 11);
        let f = fit(&u, 0.0).unwrap();
        assert_eq!(f.poset, diamond());
        assert_eq!(f.lambda_hat, 1.0);
        assert!(f.merge.is_none());
        assert!(f.unidentified_events.is_empty());
        let plain = log_likelihood(&f.poset, &f.theta_hat, &u).unwrap();
        assert!((f.log_lik - plain).abs() < 1e-9);
        assert_eq!(f.lattice_size, BigUint::from(7u32));
    }

    #[test]
    fn fit_on_full_support_gives_marginal_frequencies() {
        let mut all = CountVector::new(4);
        for bits in 0..16u64 {
            all.add(Genotype::from_bits(bits, 4), 1.0);
        }
        let f = fit(&all, 0.0).unwrap();
        assert_eq!(f.poset, Poset::antichain(4));
        assert_eq!(f.lambda_hat, 1.0);
        assert_eq!(f.theta_hat, vec![0.5; 4]);
    }

    #[test]
    fn fit_merges_inseparable_events() {
        let u = CountVector::from_pairs(2, &[(g("00"), 3.0), (g("11"), 7.0)]);
        let f = fit(&u, 0.0).unwrap();
        let merge = f.merge.expect("must merge");
        assert_eq!(merge.groups, vec![vec![0, 1]]);
        assert_eq!(f.poset.n(), 1);
        assert_eq!(f.theta_hat, vec![0.7]);
    }

    #[test]
    fn scan_dedups_and_tracks_incompatible_fraction() {
        // Clean diamond data plus one stray genotype {2} (event 2 without
        // its predecessors), mass 1 of 25 total. The stray violates only
        // 0<2 and 1<2; every other violated pair carries more mass.
        let mut u = diamond_support_counts();
        u.add(g("0010"), 1.0);
        let total = u.total();
        let stray = 1.0 / total;

        let grid = [0.0, stray / 2.0, stray, 1.0];
        let result = scan(&u, &grid).unwrap();
        // ε = 0 and ε = stray/2 give the same poset: relations into event
        // 2 are violated, so only 0<3 and 1<3 survive.
        assert_eq!(result.entries.len(), 3);
        let first = &result.entries[0];
        assert_eq!(first.epsilon_min, 0.0);
        assert_eq!(first.epsilon_max, stray / 2.0);
        assert_eq!(first.fit.poset.relations(), vec![(0, 3), (1, 3)]);
        assert_eq!(first.fraction_incompatible, 0.0);
        // At ε = stray the full diamond returns and the stray genotype
        // becomes incompatible.
        let second = &result.entries[1];
        assert_eq!(second.fit.poset, diamond());
        assert!((second.fraction_incompatible - stray).abs() < 1e-12);
        assert!(first.fraction_incompatible <= second.fraction_incompatible);
        // ε = 1 collapses to the antichain, where everything is compatible.
        let last = &result.entries[2];
        assert_eq!(last.fit.poset, Poset::antichain(4));
        assert_eq!(last.fraction_incompatible, 0.0);

        assert!(scan(&u, &[]).is_err());
        assert!(scan(&u, &[0.2, 0.1]).is_err());
        let single = scan(&u, &[0.0]).unwrap();
        assert_eq!(single.entries.len(), 1);
        assert_eq!(single.entries[0].fit.poset, fit(&u, 0.0).unwrap().poset);
    }

    #[test]
    fn bootstrap_point_mass_is_degenerate() {
        let u = CountVector::from_pairs(2, &[(g("11"), 5.0)]);
        let s = bootstrap_loglik(&u, &Poset::chain(2), 3, 99).unwrap();
        assert_eq!(s.min, 0.0);
        assert_eq!(s.q1, 0.0);
        assert_eq!(s.median, 0.0);
        assert_eq!(s.q3, 0.0);
        assert_eq!(s.max, 0.0);
    }

    #[test]
    fn bootstrap_is_deterministic_and_ordered() {
        let m = CbnModel::new(diamond(), vec![0.5; 4]).unwrap();
        let u = m.sample(500, 3);
        let a = bootstrap_loglik(&u, &diamond(), 50, 7).unwrap();
        let b = bootstrap_loglik(&u, &diamond(), 50, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.min <= a.q1 && a.q1 <= a.median && a.median <= a.q3 && a.q3 <= a.max);
        assert!(a.min < a.max);
        let c = bootstrap_loglik(&u, &diamond(), 50, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bootstrap_overlap_test() {
        let a = BootstrapSummary { min: -10.0, q1: -9.0, median: -8.0, q3: -7.0, max: -6.0 };
        let b = BootstrapSummary { min: -7.5, q1: -7.0, median: -6.5, q3: -6.0, max: -5.0 };
        let c = BootstrapSummary { min: -5.0, q1: -4.0, median: -3.5, q3: -3.0, max: -2.0 };
        assert!(a.overlaps(&b));
        assert!(b.overlaps(&a));
        assert!(!a.overlaps(&c));
    }
}
