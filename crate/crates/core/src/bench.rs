//! Input generators and a timing harness comparing the stack reducer with
//! the sort + union-find baseline.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::line::{line_persistence, PairTally};
use crate::oracle::oracle_line_persistence;

pub const DEFAULT_SEED: u64 = 0x5eed_1d0f;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Uniform in `[0, 1)`.
    Random,
    /// Strictly increasing.
    Monotonic,
    /// All zeros.
    Constant,
    /// `0, n, 1, n-1, ...`: the reducer stack grows to `n / 2`.
    Narrowing,
}

impl Generator {
    pub const ALL: [Generator; 4] = [
        Generator::Random,
        Generator::Monotonic,
        Generator::Constant,
        Generator::Narrowing,
    ];

    pub fn generate(self, n: usize, seed: u64) -> Vec<f64> {
        match self {
            Generator::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..n).map(|_| rng.random::<f64>()).collect()
            }
            Generator::Monotonic => (0..n).map(|i| i as f64).collect(),
            Generator::Constant => vec![0.0; n],
            Generator::Narrowing => (0..n)
                .map(|i| {
                    let k = (i / 2) as f64;
                    if i % 2 == 0 {
                        k
                    } else {
                        n as f64 - k
                    }
                })
                .collect(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Random => "random",
            Generator::Monotonic => "monotonic",
            Generator::Constant => "constant",
            Generator::Narrowing => "narrowing",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub n: usize,
    pub generator: Generator,
    pub repetitions: usize,
    pub seed: u64,
    /// Also time the sort + union-find baseline.
    pub oracle: bool,
}

impl BenchConfig {
    pub fn new(n: usize, generator: Generator) -> Self {
        Self {
            n,
            generator,
            repetitions: 5,
            seed: DEFAULT_SEED,
            oracle: true,
        }
    }
}

/// Wall times of one repetition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRun {
    pub generation: Duration,
    pub copy: Duration,
    pub reducer: Duration,
    pub oracle: Option<Duration>,
    pub pairs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub runs: Vec<BenchRun>,
}

pub fn median(mut times: Vec<Duration>) -> Duration {
    assert!(!times.is_empty(), "median of nothing");
    times.sort();
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2
    }
}

impl BenchReport {
    pub fn median_generation(&self) -> Duration {
        median(self.runs.iter().map(|r| r.generation).collect())
    }

    pub fn median_copy(&self) -> Duration {
        median(self.runs.iter().map(|r| r.copy).collect())
    }

    pub fn median_reducer(&self) -> Duration {
        median(self.runs.iter().map(|r| r.reducer).collect())
    }

    pub fn median_oracle(&self) -> Option<Duration> {
        let times: Vec<_> = self.runs.iter().filter_map(|r| r.oracle).collect();
        (!times.is_empty()).then(|| median(times))
    }

    pub fn pairs(&self) -> usize {
        self.runs.first().map_or(0, |r| r.pairs)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "generator={} n={} repetitions={} seed={}",
            c.generator, c.n, c.repetitions, c.seed
        )?;
        writeln!(
            f,
            "{:>4} {:>12} {:>12} {:>12} {:>12}",
            "run", "generate_s", "copy_s", "reducer_s", "oracle_s"
        )?;
        let secs =
            |d: Option<Duration>| d.map_or("-".to_string(), |d| format!("{:.6}", d.as_secs_f64()));
        for (i, r) in self.runs.iter().enumerate() {
            writeln!(
                f,
                "{:>4} {:>12} {:>12} {:>12} {:>12}",
                i,
                secs(Some(r.generation)),
                secs(Some(r.copy)),
                secs(Some(r.reducer)),
                secs(r.oracle)
            )?;
        }
        writeln!(
            f,
            "{:>4} {:>12} {:>12} {:>12} {:>12}",
            "med",
            secs(Some(self.median_generation())),
            secs(Some(self.median_copy())),
            secs(Some(self.median_reducer())),
            secs(self.median_oracle())
        )?;
        write!(f, "pairs={}", self.pairs())
    }
}

/// Times the reducer on `values`; returns the wall time and the pair tally.
pub fn time_reducer(values: &[f64]) -> (Duration, PairTally) {
    let mut tally = PairTally::default();
    let start = Instant::now();
    line_persistence(values, &mut tally).expect("generated values are valid");
    (start.elapsed(), tally)
}

/// Times the sort + union-find baseline on `values`.
pub fn time_oracle(values: &[f64]) -> (Duration, PairTally) {
    let mut tally = PairTally::default();
    let start = Instant::now();
    oracle_line_persistence(values, &mut tally).expect("generated values are valid");
    (start.elapsed(), tally)
}

pub fn run_bench(config: BenchConfig) -> BenchReport {
    assert!(config.n >= 1, "n must be positive");
    let mut runs = Vec::with_capacity(config.repetitions);
    for rep in 0..config.repetitions.max(1) {
        let start = Instant::now();
        let values = config
            .generator
            .generate(config.n, config.seed.wrapping_add(rep as u64));
        let generation = start.elapsed();

        let start = Instant::now();
        let copy = std::hint::black_box(values.clone());
        let copy_time = start.elapsed();
        drop(copy);

        let (reducer, tally) = time_reducer(&values);
        let oracle = config.oracle.then(|| {
            let (elapsed, oracle_tally) = time_oracle(&values);
            assert_eq!(
                oracle_tally.count, tally.count,
                "oracle and reducer disagree"
            );
            elapsed
        });
        runs.push(BenchRun {
            generation,
            copy: copy_time,
            reducer,
            oracle,
            pairs: tally.count,
        });
    }
    BenchReport { config, runs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(
            Generator::Narrowing.generate(6, 0),
            vec![0.0, 6.0, 1.0, 5.0, 2.0, 4.0]
        );
        assert_eq!(Generator::Monotonic.generate(3, 0), vec![0.0, 1.0, 2.0]);
        assert_eq!(
            Generator::Random.generate(100, 9),
            Generator::Random.generate(100, 9)
        );
        assert_ne!(
            Generator::Random.generate(100, 9),
            Generator::Random.generate(100, 10)
        );
    }

    #[test]
    fn tiny_bench() {
        for generator in Generator::ALL {
            let report = run_bench(BenchConfig {
                repetitions: 2,
                ..BenchConfig::new(1, generator)
            });
            assert_eq!(report.runs.len(), 2);
            assert_eq!(report.pairs(), 1);
        }
        let report = run_bench(BenchConfig::new(10_000, Generator::Constant));
        assert_eq!(report.pairs(), 1);
        assert!(report.to_string().contains("med"));
    }

    #[test]
    fn median_of_even_and_odd() {
        let ms = Duration::from_millis;
        assert_eq!(median(vec![ms(3), ms(1), ms(2)]), ms(2));
        assert_eq!(
            median(vec![ms(4), ms(1), ms(2), ms(3)]),
            Duration::from_micros(2500)
        );
    }
}
