//! Split-to-diameter ratio maximization.
//!
//! Both solvers walk the split values upward. Each outer iteration builds a
//! partition of the current supervertices, scores the induced partition of
//! the original objects, and then merges every schedule edge no heavier than
//! that partition's split. The next partition therefore has a strictly
//! larger split, and the loop ends after at most `n - 1` iterations.
//!
//! * [`mrsd_bipartition`] bicolors a maximum spanning tree of the contracted
//!   graph and is exact for `k = 2`, with or without the triangle inequality.
//! * [`mrsd_multipartition`] picks `k` representatives by farthest-point
//!   traversal and assigns every supervertex to its nearest one. On metric
//!   inputs the result is within a factor 2 of the optimum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contraction::MergeState;
use crate::error::{Error, Result};
use crate::metric::{
    cost, diameter, split, validate_metric, ClusteringResult, DissimilarityMatrix, Iteration,
    Partition,
};
use crate::spanning::{bicolor, maximum_spanning_tree, minimum_spanning_tree};

/// What to do when the input violates the triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MetricCheck {
    #[default]
    Warn,
    Error,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrsdConfig {
    pub k: usize,
    /// Seeds the choice of the first representative in every iteration.
    pub seed: u64,
    /// Independent runs with seeds `seed, seed + 1, ...`; the best cost is
    /// kept. Values above 1 go beyond the single-pass algorithm.
    pub restarts: usize,
    pub metric_check: MetricCheck,
}

impl MrsdConfig {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            seed: 0,
            restarts: 1,
            metric_check: MetricCheck::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_metric_check(mut self, check: MetricCheck) -> Self {
        self.metric_check = check;
        self
    }
}

struct Proposal {
    reps: Partition,
    delta: Option<f64>,
}

/// Shared outer loop. `propose` partitions the current supervertices; the
/// loop runs while at least `k` supervertices remain.
fn contract_and_search(
    d: &DissimilarityMatrix,
    k: usize,
    mut propose: impl FnMut(&MergeState) -> Result<Proposal>,
) -> Result<ClusteringResult> {
    let mst = minimum_spanning_tree(d);
    let mut state = MergeState::new(d, &mst)?;
    let mut best: Option<(Partition, f64, f64, f64)> = None;
    let mut split_trace = Vec::new();
    let mut iterations = Vec::new();

    while state.schedule().len() + 1 >= k {
        let Proposal { reps, delta } = propose(&state)?;
        let p = state.induced_partition(&reps)?;
        let s = split(&p, d)?;
        let dia = diameter(&p, d)?;
        let c = cost(s, dia);
        debug_assert!(split_trace.last().is_none_or(|&prev| prev < s));
        split_trace.push(s);

        let supervertices = state.active_count();
        let contracted_diameter = state.contracted_diameter(&reps);
        if best.as_ref().is_none_or(|b| c > b.1) {
            best = Some((p, c, s, dia));
        }

        let merged = state.merge_front(s);
        // The lightest cross-cluster schedule edge weighs exactly `s`.
        assert!(merged >= 1, "no schedule edge at or below split {s}");
        iterations.push(Iteration {
            supervertices,
            split: s,
            diameter: dia,
            contracted_diameter,
            delta,
            merged,
        });
    }

    let (partition, c, s, dia) = best.ok_or(Error::InvalidK { k, n: d.len() })?;
    Ok(ClusteringResult {
        partition,
        split: s,
        diameter: dia,
        cost: c,
        split_trace,
        iterations,
    })
}

/// Exact maximum of split/diameter over all bipartitions.
pub fn mrsd_bipartition(d: &DissimilarityMatrix) -> Result<ClusteringResult> {
    if d.len() < 2 {
        return Err(Error::TooFewObjects(d.len()));
    }
    contract_and_search(d, 2, |state| {
        let tree = maximum_spanning_tree(state.contracted(), &state.representatives())?;
        let colors = bicolor(&tree);
        let labels: Vec<usize> = colors.colors().iter().map(|&c| c as usize).collect();
        Ok(Proposal {
            reps: Partition::from_labels(labels)?,
            delta: None,
        })
    })
}

/// Greedy farthest-point selection of `k` representatives, starting from
/// `first`. Also returns the distance from the set to the best remaining
/// candidate, if any remain.
fn farthest_point_traversal(
    state: &MergeState,
    k: usize,
    first: usize,
) -> Result<(Vec<usize>, Option<f64>)> {
    let reps = state.representatives();
    if k == 0 || k > reps.len() {
        return Err(Error::InvalidK { k, n: reps.len() });
    }
    let start = reps
        .binary_search(&first)
        .map_err(|_| Error::NotRepresentative(first))?;

    let mut chosen = vec![false; reps.len()];
    let mut near: Vec<f64> = reps.iter().map(|&r| state.distance(first, r)).collect();
    chosen[start] = true;
    let mut selected = vec![first];

    let farthest = |chosen: &[bool], near: &[f64]| {
        let mut pick: Option<usize> = None;
        for i in (0..reps.len()).filter(|&i| !chosen[i]) {
            if pick.is_none_or(|p| near[i] > near[p]) {
                pick = Some(i);
            }
        }
        pick
    };

    while selected.len() < k {
        let i = farthest(&chosen, &near).expect("k <= number of representatives");
        chosen[i] = true;
        selected.push(reps[i]);
        for (j, &r) in reps.iter().enumerate() {
            near[j] = near[j].min(state.distance(reps[i], r));
        }
    }
    let delta = farthest(&chosen, &near).map(|i| near[i]);
    Ok((selected, delta))
}

/// Farthest-point traversal over the current supervertices under contracted
/// distances. Each step adds the representative farthest from the chosen
/// set, ties going to the smallest index.
pub fn farthest_point_representatives(
    state: &MergeState,
    k: usize,
    first: usize,
) -> Result<Vec<usize>> {
    farthest_point_traversal(state, k, first).map(|(s, _)| s)
}

/// Partition of the current supervertices (aligned with
/// [`MergeState::representatives`]) by nearest member of `selected`. Ties go
/// to the earlier entry of `selected`; each selected vertex anchors its own
/// cluster.
pub fn assign_to_representatives(state: &MergeState, selected: &[usize]) -> Result<Partition> {
    if selected.is_empty() {
        return Err(Error::EmptyReferenceSet);
    }
    if let Some(&bad) = selected.iter().find(|&&s| !state.is_representative(s)) {
        return Err(Error::NotRepresentative(bad));
    }
    let labels: Vec<usize> = state
        .representatives()
        .into_iter()
        .map(|r| {
            if let Some(pos) = selected.iter().position(|&s| s == r) {
                return pos;
            }
            let mut best = 0;
            for (pos, &s) in selected.iter().enumerate().skip(1) {
                if state.distance(r, s) < state.distance(r, selected[best]) {
                    best = pos;
                }
            }
            best
        })
        .collect();
    Partition::from_labels(labels)
}

fn check_metric(d: &DissimilarityMatrix, check: MetricCheck) -> Result<()> {
    if check == MetricCheck::Skip {
        return Ok(());
    }
    let violations = validate_metric(d);
    if let Some(&(i, j, w)) = violations.first() {
        match check {
            MetricCheck::Error => {
                return Err(Error::NotMetric {
                    count: violations.len(),
                    i,
                    j,
                    w,
                })
            }
            MetricCheck::Warn => log::warn!(
                "{} triangle inequality violations (first: d({i},{j}) > d({i},{w}) + d({w},{j})); \
                 the factor-2 guarantee does not apply",
                violations.len()
            ),
            MetricCheck::Skip => {}
        }
    }
    Ok(())
}

fn multipartition_run(d: &DissimilarityMatrix, k: usize, seed: u64) -> Result<ClusteringResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    contract_and_search(d, k, |state| {
        let reps = state.representatives();
        let first = reps[rng.gen_range(0..reps.len())];
        let (selected, delta) = farthest_point_traversal(state, k, first)?;
        Ok(Proposal {
            reps: assign_to_representatives(state, &selected)?,
            delta,
        })
    })
}

/// Factor-2 approximation for `k >= 2` clusters on metric inputs.
/// Deterministic for a given matrix and configuration.
pub fn mrsd_multipartition(d: &DissimilarityMatrix, cfg: &MrsdConfig) -> Result<ClusteringResult> {
    let n = d.len();
    if cfg.k < 2 || cfg.k > n {
        return Err(Error::InvalidK { k: cfg.k, n });
    }
    if cfg.restarts == 0 {
        return Err(Error::InvalidRestarts);
    }
    check_metric(d, cfg.metric_check)?;

    let mut best: Option<ClusteringResult> = None;
    for r in 0..cfg.restarts as u64 {
        let run = multipartition_run(d, cfg.k, cfg.seed.wrapping_add(r))?;
        if best.as_ref().is_none_or(|b| run.cost > b.cost) {
            best = Some(run);
        }
    }
    Ok(best.expect("restarts >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_mrsd;
    use crate::spanning::minimum_spanning_tree;

    fn line(xs: &[f64]) -> DissimilarityMatrix {
        DissimilarityMatrix::from_points(xs, |a, b| (a - b).abs()).unwrap()
    }

    fn state(d: &DissimilarityMatrix) -> MergeState {
        MergeState::new(d, &minimum_spanning_tree(d)).unwrap()
    }

    fn triangle() -> DissimilarityMatrix {
        DissimilarityMatrix::from_fn(3, |_, _| 1.0).unwrap()
    }

    #[test]
    fn bipartition_instance_a() {
        let d = line(&[0.0, 1.0, 10.0, 11.0]);
        let r = mrsd_bipartition(&d).unwrap();
        assert_eq!(r.partition.labels(), &[0, 0, 1, 1]);
        assert_eq!((r.split, r.diameter, r.cost), (9.0, 1.0, 9.0));
        assert_eq!(r.split_trace, vec![9.0]);
    }

    #[test]
    fn bipartition_two_points() {
        let d = DissimilarityMatrix::from_vec(2, vec![0.0, 5.0, 5.0, 0.0]).unwrap();
        let r = mrsd_bipartition(&d).unwrap();
        assert_eq!(r.partition, Partition::singletons(2));
        assert_eq!(r.cost, f64::INFINITY);
    }

    #[test]
    fn bipartition_duplicates() {
        let d = DissimilarityMatrix::from_fn(4, |_, _| 0.0).unwrap();
        let r = mrsd_bipartition(&d).unwrap();
        assert_eq!(r.cost, 0.0);
        assert_eq!(r.partition.k(), 2);
        assert_eq!(r.split_trace, vec![0.0]);
    }

    #[test]
    fn farthest_point_examples() {
        let d = line(&[0.0, 1.0, 10.0]);
        let s = state(&d);
        assert_eq!(
            farthest_point_representatives(&s, 2, 0).unwrap(),
            vec![0, 2]
        );
        assert_eq!(
            farthest_point_representatives(&s, 3, 0).unwrap(),
            vec![0, 2, 1]
        );
        assert_eq!(
            farthest_point_representatives(&state(&triangle()), 2, 1).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            farthest_point_representatives(&s, 4, 0),
            Err(Error::InvalidK { k: 4, n: 3 })
        );
        assert_eq!(
            farthest_point_representatives(&s, 2, 5),
            Err(Error::NotRepresentative(5))
        );
        let (_, delta) = farthest_point_traversal(&s, 2, 0).unwrap();
        assert_eq!(delta, Some(1.0));
        let (_, delta) = farthest_point_traversal(&s, 3, 0).unwrap();
        assert_eq!(delta, None);
    }

    #[test]
    fn assignment_examples() {
        let d = line(&[0.0, 1.0, 10.0]);
        let s = state(&d);
        assert_eq!(
            assign_to_representatives(&s, &[0, 2]).unwrap().labels(),
            &[0, 0, 1]
        );
        let t = state(&triangle());
        assert_eq!(
            assign_to_representatives(&t, &[0, 1]).unwrap().labels(),
            &[0, 1, 0]
        );
        assert_eq!(
            assign_to_representatives(&s, &[2, 0, 1]).unwrap(),
            Partition::singletons(3)
        );
        assert_eq!(
            assign_to_representatives(&s, &[]),
            Err(Error::EmptyReferenceSet)
        );
    }

    #[test]
    fn assignment_keeps_duplicate_representatives_apart() {
        let d = DissimilarityMatrix::from_fn(3, |_, _| 0.0).unwrap();
        let s = state(&d);
        assert_eq!(
            assign_to_representatives(&s, &[0, 1]).unwrap().labels(),
            &[0, 1, 0]
        );
    }

    #[test]
    fn multipartition_line() {
        let d = line(&[0.0, 1.0, 10.0, 11.0, 20.0, 21.0]);
        let r = mrsd_multipartition(&d, &MrsdConfig::new(3)).unwrap();
        assert_eq!(r.partition.labels(), &[0, 0, 1, 1, 2, 2]);
        assert_eq!((r.split, r.diameter, r.cost), (9.0, 1.0, 9.0));
        let oracle = brute_force_mrsd(&d, 3).unwrap();
        assert_eq!(oracle.cost, 9.0);
    }

    #[test]
    fn multipartition_k_equals_n() {
        let d = line(&[0.0, 1.0, 3.0, 7.0]);
        let r = mrsd_multipartition(&d, &MrsdConfig::new(4)).unwrap();
        assert_eq!(r.partition, Partition::singletons(4));
        assert_eq!(r.cost, f64::INFINITY);
        assert_eq!(r.iterations.len(), 1);
    }

    #[test]
    fn multipartition_rejects_bad_config() {
        let d = line(&[0.0, 1.0, 3.0]);
        assert_eq!(
            mrsd_multipartition(&d, &MrsdConfig::new(4)),
            Err(Error::InvalidK { k: 4, n: 3 })
        );
        assert_eq!(
            mrsd_multipartition(&d, &MrsdConfig::new(1)),
            Err(Error::InvalidK { k: 1, n: 3 })
        );
        assert_eq!(
            mrsd_multipartition(&d, &MrsdConfig::new(2).with_restarts(0)),
            Err(Error::InvalidRestarts)
        );
    }

    #[test]
    fn metric_check_modes() {
        let d = DissimilarityMatrix::from_rows(vec![
            vec![0.0, 10.0, 1.0, 2.0],
            vec![10.0, 0.0, 1.0, 2.0],
            vec![1.0, 1.0, 0.0, 2.0],
            vec![2.0, 2.0, 2.0, 0.0],
        ])
        .unwrap();
        let cfg = MrsdConfig::new(3).with_metric_check(MetricCheck::Error);
        assert!(matches!(
            mrsd_multipartition(&d, &cfg),
            Err(Error::NotMetric { .. })
        ));
        for check in [MetricCheck::Warn, MetricCheck::Skip] {
            let cfg = MrsdConfig::new(3).with_metric_check(check);
            assert_eq!(mrsd_multipartition(&d, &cfg).unwrap().partition.k(), 3);
        }
    }

    #[test]
    fn multipartition_is_deterministic() {
        let pts: Vec<(f64, f64)> = (0..25)
            .map(|i| (((i * 37) % 23) as f64, ((i * 11) % 17) as f64))
            .collect();
        let d =
            DissimilarityMatrix::from_points(&pts, |a, b| (a.0 - b.0).abs() + (a.1 - b.1).abs())
                .unwrap();
        let cfg = MrsdConfig::new(4).with_seed(7).with_restarts(3);
        assert_eq!(
            mrsd_multipartition(&d, &cfg).unwrap(),
            mrsd_multipartition(&d, &cfg).unwrap()
        );
        let single = mrsd_multipartition(&d, &MrsdConfig::new(4).with_seed(7)).unwrap();
        assert!(mrsd_multipartition(&d, &cfg).unwrap().cost >= single.cost);
    }

    #[test]
    fn multipartition_accepts_k2() {
        let d = line(&[0.0, 1.0, 10.0, 11.0]);
        let r = mrsd_multipartition(&d, &MrsdConfig::new(2)).unwrap();
        assert_eq!(r.partition.k(), 2);
        assert!(r.cost >= 9.0 / 2.0);
    }
}
