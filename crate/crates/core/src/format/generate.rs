use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::set::ElementId;

use super::{InstanceFile, MatroidSpec, ObjectiveSpec, FORMAT_VERSION};

/// Matroid family of a generated instance. The objective is always a
/// weighted coverage function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Uniform matroid of rank `r`.
    Coverage,
    /// Partition matroid whose capacities sum to `r`.
    Partition,
    /// Graphic matroid on `r + 1` vertices: a random spanning tree plus extra edges.
    Graphic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Coverage => "coverage",
            Family::Partition => "partition",
            Family::Graphic => "graphic",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerateOptions {
    /// Number of partition blocks; defaults to `r`.
    pub blocks: Option<usize>,
}

/// Largest per-point weight in generated coverage objectives.
const MAX_POINT_WEIGHT: usize = 5;
/// Largest number of points one element covers.
const MAX_COVER: usize = 4;

/// A seeded random instance; identical arguments give identical files.
pub fn generate(family: Family, n: usize, r: usize, seed: u64, options: GenerateOptions) -> Result<InstanceFile> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::InvalidInstance(format!(
            "need 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let mut rng = RandomSource::new(seed);
    let objective = coverage(&mut rng, n);
    let (matroid, expected_rank) = match family {
        Family::Coverage => (MatroidSpec::Uniform { k: r }, r),
        Family::Partition => partition(&mut rng, n, r, options.blocks.unwrap_or(r))?,
        Family::Graphic => (graphic(&mut rng, n, r), r),
    };
    Ok(InstanceFile {
        format_version: FORMAT_VERSION,
        name: format!("{}-n{n}-r{r}-s{seed}", family.name()),
        n,
        expected_rank: Some(expected_rank),
        objective,
        matroid,
        regularizer: None,
    })
}

/// Coverage over `2n` named points with weights in `1..=5`; every element
/// covers between one and four distinct points.
fn coverage(rng: &mut RandomSource, n: usize) -> ObjectiveSpec {
    let points = 2 * n;
    let universe: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
    let weights = (0..points).map(|_| 1 + rng.below(MAX_POINT_WEIGHT) as u64).collect();
    let pool: Vec<ElementId> = (0..points).map(ElementId).collect();
    let covers = (0..n)
        .map(|_| {
            let size = 1 + rng.below(MAX_COVER.min(points));
            let mut chosen: Vec<usize> = rng
                .sample_slice(&pool, size)
                .expect("size is at most the pool")
                .into_iter()
                .map(|p| p.index())
                .collect();
            chosen.sort_unstable();
            chosen.into_iter().map(|p| universe[p].clone()).collect()
        })
        .collect();
    ObjectiveSpec::Coverage {
        universe,
        weights,
        covers,
    }
}

/// Elements are dealt to `b` blocks in a random order; the rank `r` is spread
/// over the blocks as evenly as possible.
fn partition(rng: &mut RandomSource, n: usize, r: usize, b: usize) -> Result<(MatroidSpec, usize)> {
    if b == 0 || b > n {
        return Err(Error::InvalidInstance(format!("need 1 <= blocks <= n, got {b}")));
    }
    let pool: Vec<ElementId> = (0..n).map(ElementId).collect();
    let order = rng.sample_slice(&pool, n)?;
    let mut blocks = vec![Vec::new(); b];
    for (i, u) in order.into_iter().enumerate() {
        blocks[i % b].push(u.index());
    }
    for block in &mut blocks {
        block.sort_unstable();
    }
    let capacities: Vec<usize> = (0..b).map(|i| r / b + usize::from(i < r % b)).collect();
    let rank = blocks
        .iter()
        .zip(&capacities)
        .map(|(block, &cap)| cap.min(block.len()))
        .sum();
    Ok((MatroidSpec::Partition { blocks, capacities }, rank))
}

/// A random spanning tree on `r + 1` vertices plus `n − r` extra edges
/// between distinct vertices, in random order.
fn graphic(rng: &mut RandomSource, n: usize, r: usize) -> MatroidSpec {
    let vertices = r + 1;
    let ids: Vec<ElementId> = (0..vertices).map(ElementId).collect();
    let label: Vec<usize> = rng
        .sample_slice(&ids, vertices)
        .expect("full permutation")
        .into_iter()
        .map(|v| v.index())
        .collect();
    let mut edges: Vec<[usize; 2]> = (1..vertices).map(|i| [label[rng.below(i)], label[i]]).collect();
    while edges.len() < n {
        let a = rng.below(vertices);
        let b = rng.below(vertices - 1);
        let b = if b >= a { b + 1 } else { b };
        edges.push([a, b]);
    }
    let slots: Vec<ElementId> = (0..n).map(ElementId).collect();
    let order = rng.sample_slice(&slots, n).expect("full permutation");
    let edges = order.into_iter().map(|i| edges[i.index()]).collect();
    MatroidSpec::Graphic { vertices, edges }
}
