//! Runs the theorem suite over graph corpora and aggregates the verdicts.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::emit_graph6;
use crate::generators::{enumerate_labeled, sample_gnp_stream, LABELED_CAP};
use crate::graph::Graph;
use crate::theorems::{run_suite, SuiteTally, Witness};

pub const SCHEMA: &str = "stablecore/1";

/// Graphs evaluated per parallel batch.
const BATCH: usize = 2048;

/// A corpus description. Exhaustive orders run first, then each sampled
/// `(n, p)` pair in the given order.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    /// Every labeled graph on each of these orders.
    pub exhaustive: RangeInclusive<usize>,
    pub sample_orders: Vec<usize>,
    pub edge_probs: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive(orders: RangeInclusive<usize>) -> Self {
        CorpusSpec {
            exhaustive: orders,
            sample_orders: Vec::new(),
            edge_probs: Vec::new(),
            samples: 0,
            seed: 0,
        }
    }

    pub fn sampled(orders: Vec<usize>, edge_probs: Vec<f64>, samples: usize, seed: u64) -> Self {
        CorpusSpec {
            #[allow(clippy::reversed_empty_ranges)]
            exhaustive: 1..=0,
            sample_orders: orders,
            edge_probs,
            samples,
            seed,
        }
    }

    /// The ChaCha stream used for order `n` and the `p_index`-th probability.
    pub fn stream(n: usize, p_index: usize) -> u64 {
        ((n as u64) << 16) | p_index as u64
    }

    /// Rejects orders that cannot be enumerated or sampled.
    pub fn validate(&self) -> Result<()> {
        if self.exhaustive.clone().any(|n| n > LABELED_CAP) {
            return Err(Error::param(
                "exhaustive",
                format!("orders above {LABELED_CAP} are not supported"),
            ));
        }
        for &n in &self.sample_orders {
            Graph::empty(n)?;
        }
        for &p in &self.edge_probs {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param("gnp", format!("edge probability {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    /// Iterates the corpus in its canonical order.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
        self.validate()?;
        let mut parts: Vec<Box<dyn Iterator<Item = Graph> + Send>> = Vec::new();
        for n in self.exhaustive.clone() {
            parts.push(Box::new(enumerate_labeled(n)?));
        }
        for &n in &self.sample_orders {
            for (i, &p) in self.edge_probs.iter().enumerate() {
                let s = sample_gnp_stream(n, p, self.seed, Self::stream(n, i), self.samples)?;
                parts.push(Box::new(s));
            }
        }
        Ok(Box::new(parts.into_iter().flatten()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub id: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifySummary {
    pub schema: &'static str,
    #[serde(flatten)]
    pub tally: SuiteTally,
    pub failures: Vec<Failure>,
    pub ok: bool,
}

impl VerifySummary {
    /// Key-sorted JSON on one line.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string(&v).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub k_range: RangeInclusive<usize>,
    pub fail_fast: bool,
    /// Worker threads; 1 evaluates on the calling thread.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            k_range: crate::theorems::DEFAULT_K_RANGE,
            fail_fast: false,
            jobs: 1,
        }
    }
}

fn evaluate(g: &Graph, k_range: &RangeInclusive<usize>) -> (SuiteTally, Vec<Failure>) {
    let verdicts = run_suite(g, k_range.clone());
    let mut tally = SuiteTally::default();
    tally.add(&verdicts);
    let mut failures = Vec::new();
    for v in verdicts {
        if let Some(witness) = v.witness {
            failures.push(Failure {
                graph6: emit_graph6(g),
                id: v.id,
                witness,
            });
        }
    }
    (tally, failures)
}

/// Runs the suite on every graph of `corpus`. Results are folded in corpus
/// order, so the summary does not depend on `jobs`.
pub fn verify_corpus(corpus: &CorpusSpec, opts: &VerifyOptions) -> Result<VerifySummary> {
    let graphs = corpus.graphs()?;
    verify_graphs(graphs, opts)
}

/// Like [`verify_corpus`] for an arbitrary sequence of graphs.
pub fn verify_graphs(
    graphs: impl Iterator<Item = Graph>,
    opts: &VerifyOptions,
) -> Result<VerifySummary> {
    let pool = (opts.jobs > 1)
        .then(|| rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build())
        .transpose()
        .map_err(|e| Error::param("jobs", e.to_string()))?;
    let mut tally = SuiteTally::default();
    let mut failures = Vec::new();
    let mut graphs = graphs.peekable();
    'outer: while graphs.peek().is_some() {
        let batch: Vec<Graph> = graphs.by_ref().take(BATCH).collect();
        let results: Vec<(SuiteTally, Vec<Failure>)> = match &pool {
            None => batch.iter().map(|g| evaluate(g, &opts.k_range)).collect(),
            Some(pool) => pool.install(|| {
                batch
                    .par_iter()
                    .map(|g| evaluate(g, &opts.k_range))
                    .collect()
            }),
        };
        for (t, f) in results {
            tally.merge(&t);
            let failed = !f.is_empty();
            failures.extend(f);
            if failed && opts.fail_fast {
                break 'outer;
            }
        }
    }
    Ok(VerifySummary {
        schema: SCHEMA,
        ok: failures.is_empty(),
        tally,
        failures,
    })
}
