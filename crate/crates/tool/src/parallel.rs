//! Multi-threaded drivers for the bounded searches. Branches are explored
//! concurrently and merged in branch order, so the result does not depend
//! on the thread count.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};
use sqwalk::search::{
    coloured_walk_search, colourings_up_to_permutation, Constraint, GammaReport, Search,
};
use sqwalk::{Graph, SearchError, SearchResult};

/// A pool with `threads` workers; `0` means one per available core.
pub fn pool(threads: usize) -> Result<ThreadPool, ThreadPoolBuildError> {
    ThreadPoolBuilder::new().num_threads(threads).build()
}

pub fn run<C>(search: &Search<C>, pool: &ThreadPool) -> SearchResult
where
    C: Constraint + Sync,
{
    let branches = search.branches();
    let results = pool.install(|| {
        branches
            .par_iter()
            .map(|&start| search.run_branch(start))
            .collect::<Vec<_>>()
    });
    search.merge(results)
}

/// Parallel version of [`sqwalk::search::verify_gamma_lower_bound`]: each
/// colouring class is searched on its own worker.
pub fn verify_gamma_lower_bound(
    graph: &Graph,
    colours: usize,
    cap: usize,
    pool: &ThreadPool,
) -> Result<GammaReport, SearchError> {
    if colours == 0 {
        return Err(SearchError::NoColours);
    }
    let classes = colourings_up_to_permutation(graph.vertex_count(), colours);
    let colourings = pool.install(|| {
        classes
            .into_par_iter()
            .map(|phi| {
                let result = coloured_walk_search(graph, &phi, cap)?.run();
                Ok((phi, result))
            })
            .collect::<Result<Vec<_>, SearchError>>()
    })?;
    let confirmed = colourings.iter().all(|(_, r)| r.is_bounded());
    Ok(GammaReport {
        colourings,
        confirmed,
    })
}
