//! Classic agglomerative baselines: single linkage (maximum split) and
//! complete linkage (greedy small diameter).

use crate::error::{Error, Result};
use crate::metric::{DissimilarityMatrix, Partition};
use crate::spanning::minimum_spanning_tree;
use crate::union_find::DisjointSet;

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        Err(Error::InvalidK { k, n })
    } else {
        Ok(())
    }
}

/// Cuts the `k - 1` heaviest minimum-spanning-tree edges and returns the
/// remaining components.
pub fn single_linkage(d: &DissimilarityMatrix, k: usize) -> Result<Partition> {
    let n = d.len();
    check_k(k, n)?;
    let mst = minimum_spanning_tree(d);
    let keep = n - k;
    let mut sets = DisjointSet::new(n);
    for e in &mst.edges()[..keep] {
        sets.union(e.u, e.v);
    }
    Partition::from_labels((0..n).map(|v| sets.find(v)).collect::<Vec<_>>())
}

/// Agglomerative complete linkage: starting from singletons, repeatedly joins
/// the two clusters whose farthest members are closest, until `k` remain.
/// Clusters are identified by their smallest member; ties go to the pair
/// with the smallest identifiers.
pub fn complete_linkage(d: &DissimilarityMatrix, k: usize) -> Result<Partition> {
    let n = d.len();
    check_k(k, n)?;
    let mut link: Vec<f64> = (0..n * n).map(|i| d.get(i / n, i % n)).collect();
    let mut alive = vec![true; n];
    let mut owner: Vec<usize> = (0..n).collect();

    for _ in 0..(n - k) {
        let mut best: Option<(f64, usize, usize)> = None;
        for a in (0..n).filter(|&a| alive[a]) {
            for b in ((a + 1)..n).filter(|&b| alive[b]) {
                let w = link[a * n + b];
                if best.is_none_or(|(bw, _, _)| w < bw) {
                    best = Some((w, a, b));
                }
            }
        }
        let (_, a, b) = best.expect("at least two clusters remain");
        alive[b] = false;
        for o in owner.iter_mut() {
            if *o == b {
                *o = a;
            }
        }
        for c in (0..n).filter(|&c| alive[c] && c != a) {
            let m = link[a * n + c].max(link[b * n + c]);
            link[a * n + c] = m;
            link[c * n + a] = m;
        }
    }
    Partition::from_labels(owner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::split;

    fn line(xs: &[f64]) -> DissimilarityMatrix {
        DissimilarityMatrix::from_points(xs, |a, b| (a - b).abs()).unwrap()
    }

    #[test]
    fn single_linkage_examples() {
        let d = line(&[0.0, 1.0, 10.0, 11.0]);
        let p = single_linkage(&d, 2).unwrap();
        assert_eq!(p.labels(), &[0, 0, 1, 1]);
        assert_eq!(split(&p, &d).unwrap(), 9.0);

        let p = single_linkage(&d, 3).unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(split(&p, &d).unwrap(), 1.0);

        assert_eq!(single_linkage(&d, 4).unwrap(), Partition::singletons(4));
        assert!(matches!(single_linkage(&d, 1), Err(Error::InvalidK { .. })));
        assert!(matches!(single_linkage(&d, 5), Err(Error::InvalidK { .. })));
    }

    #[test]
    fn complete_linkage_examples() {
        let d = line(&[0.0, 1.0, 10.0, 11.0]);
        assert_eq!(complete_linkage(&d, 2).unwrap().labels(), &[0, 0, 1, 1]);
        assert_eq!(complete_linkage(&d, 4).unwrap(), Partition::singletons(4));

        let chain = line(&[0.0, 1.0, 2.0]);
        assert_eq!(complete_linkage(&chain, 2).unwrap().labels(), &[0, 0, 1]);
        assert!(matches!(
            complete_linkage(&d, 0),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn complete_linkage_uses_max_linkage() {
        // Single linkage would chain 0-1-2; complete linkage joins 2 with 3.
        let d = line(&[0.0, 2.0, 4.0, 5.5]);
        assert_eq!(complete_linkage(&d, 2).unwrap().labels(), &[0, 0, 1, 1]);
    }
}
