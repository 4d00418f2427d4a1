//! Worker pool for grid evaluation. `CQNC_WORKERS` overrides the thread
//! count (default: available parallelism). Results are collected in input
//! order, so the output is identical for any worker count.

use crate::error::CliError;

pub const WORKERS_ENV: &str = "CQNC_WORKERS";

pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var(WORKERS_ENV) {
        Ok(raw) => raw.trim().parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(|| {
            CliError::Usage(format!(
                "{WORKERS_ENV} must be a positive integer, got `{raw}`"
            ))
        })?,
        Err(_) => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|err| CliError::Usage(format!("cannot build worker pool: {err}")))
}
