//! Lloyd's k-means with k-means++ seeding over raw window vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::series::Window;

use super::{KMeansParams, Symbol, SymbolSequence, Symbolizer};

/// Clusters `windows` into `k` groups; the symbol of a window is its
/// cluster index after relabeling clusters by lexicographic centroid order.
pub fn kmeans_symbolize(
    windows: &[Window],
    k: usize,
    seed: u64,
    max_iter: usize,
) -> Result<SymbolSequence> {
    let params = KMeansParams { k, seed, max_iter };
    let dim = windows.first().map(Window::len).unwrap_or(0);
    Symbolizer::KMeans(params).validate(dim.max(2))?;
    if windows.iter().any(|w| w.len() != dim) {
        return Err(Error::InvalidParameters("windows differ in length".into()));
    }
    let flat: Vec<f64> = windows
        .iter()
        .flat_map(|w| w.elements().iter().copied())
        .collect();
    let symbols = cluster_flat(&flat, dim, &params)?;
    Ok(SymbolSequence::from_parts(
        symbols,
        k as u64,
        Symbolizer::KMeans(params),
    ))
}

/// Row-major points of dimension `dim`.
pub(crate) fn cluster_flat(data: &[f64], dim: usize, params: &KMeansParams) -> Result<Vec<Symbol>> {
    let k = params.k;
    let n = data.len().checked_div(dim).unwrap_or(0);
    if n < k {
        return Err(Error::TooFewWindows { k, windows: n });
    }
    let points: Vec<&[f64]> = data.chunks_exact(dim).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut centroids = seed_plus_plus(&points, k, &mut rng);
    let mut labels = assign(&points, &centroids);
    for _ in 0..params.max_iter {
        repair_empty(&points, &mut centroids, &mut labels);
        centroids = means(&points, &labels, &centroids);
        let next = assign(&points, &centroids);
        if next == labels {
            break;
        }
        labels = next;
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| lex_cmp(&centroids[a], &centroids[b]));
    let mut relabel = vec![0; k];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as Symbol;
    }
    Ok(labels.iter().map(|&l| relabel[l]).collect())
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn seed_plus_plus(points: &[&[f64]], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut centroids = vec![points[rng.random_range(0..n)].to_vec()];
    let mut d2: Vec<f64> = points.iter().map(|p| sq_dist(p, &centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut chosen = n - 1;
            for (i, &d) in d2.iter().enumerate() {
                if target < d {
                    chosen = i;
                    break;
                }
                target -= d;
            }
            chosen
        } else {
            rng.random_range(0..n)
        };
        let c = points[pick].to_vec();
        for (d, p) in d2.iter_mut().zip(points) {
            *d = d.min(sq_dist(p, &c));
        }
        centroids.push(c);
    }
    centroids
}

// Nearest centroid; ties go to the lower cluster index.
fn assign(points: &[&[f64]], centroids: &[Vec<f64>]) -> Vec<usize> {
    points
        .iter()
        .map(|p| {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (c, centroid) in centroids.iter().enumerate() {
                let d = sq_dist(p, centroid);
                if d < best_d {
                    best = c;
                    best_d = d;
                }
            }
            best
        })
        .collect()
}

/// Moves the point farthest from its own centroid into each empty cluster.
fn repair_empty(points: &[&[f64]], centroids: &mut [Vec<f64>], labels: &mut [usize]) {
    let k = centroids.len();
    let mut sizes = vec![0usize; k];
    for &l in labels.iter() {
        sizes[l] += 1;
    }
    for empty in 0..k {
        if sizes[empty] > 0 {
            continue;
        }
        let farthest = (0..points.len())
            .filter(|&i| sizes[labels[i]] > 1)
            .map(|i| (i, sq_dist(points[i], &centroids[labels[i]])))
            .fold(None, |best: Option<(usize, f64)>, (i, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((i, d)),
            });
        if let Some((i, _)) = farthest {
            sizes[labels[i]] -= 1;
            sizes[empty] = 1;
            labels[i] = empty;
            centroids[empty] = points[i].to_vec();
        }
    }
}

fn means(points: &[&[f64]], labels: &[usize], previous: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let dim = previous[0].len();
    let mut sums = vec![vec![0.0; dim]; previous.len()];
    let mut counts = vec![0usize; previous.len()];
    for (p, &l) in points.iter().zip(labels) {
        counts[l] += 1;
        for (s, v) in sums[l].iter_mut().zip(p.iter()) {
            *s += v;
        }
    }
    sums.into_iter()
        .zip(counts)
        .zip(previous)
        .map(|((s, c), prev)| {
            if c == 0 {
                prev.clone()
            } else {
                s.into_iter().map(|v| v / c as f64).collect()
            }
        })
        .collect()
}
