//! Deterministic batch generation, serial or parallel.
//!
//! A batch is split into fixed-size chunks; chunk `k` is always generated
//! from `XoshiroSource::substream(seed, k)`, regardless of how many worker
//! threads run. Output order is chunk order, so a parallel run is
//! byte-identical to a serial one.

use rayon::prelude::*;

use crate::error::Result;
use crate::marginal::MarginalModel;
use crate::point::SimplexPoint;
use crate::sampler::SamplerMethod;
use crate::source::XoshiroSource;

/// Points generated per substream chunk.
pub const CHUNK_SIZE: usize = 4096;

fn generate_chunk(
    method: SamplerMethod,
    model: MarginalModel,
    n: usize,
    seed: u64,
    chunk_index: u64,
    len: usize,
) -> Result<Vec<SimplexPoint>> {
    let mut source = XoshiroSource::substream(seed, chunk_index);
    (0..len)
        .map(|_| method.sample(n, model, &mut source))
        .collect()
}

/// Generate `count` points. `jobs = 1` runs serially; larger values use a
/// thread pool of that size. Output is identical for every `jobs` value.
pub fn generate_batch(
    method: SamplerMethod,
    model: MarginalModel,
    n: usize,
    count: usize,
    seed: u64,
    jobs: usize,
) -> Result<Vec<SimplexPoint>> {
    let chunk_lens: Vec<(u64, usize)> = (0..count)
        .step_by(CHUNK_SIZE)
        .enumerate()
        .map(|(k, start)| (k as u64, CHUNK_SIZE.min(count - start)))
        .collect();

    let chunks: Vec<Vec<SimplexPoint>> = if jobs <= 1 {
        chunk_lens
            .iter()
            .map(|&(k, len)| generate_chunk(method, model, n, seed, k, len))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool construction");
        pool.install(|| {
            chunk_lens
                .par_iter()
                .map(|&(k, len)| generate_chunk(method, model, n, seed, k, len))
                .collect::<Result<_>>()
        })?
    };

    Ok(chunks.into_iter().flatten().collect())
}
