//! Machine-readable violation reports and the tuple scanner behind every
//! exhaustive check.

use std::fmt::Write as _;

use crate::algebra::{Element, GradedBasis};
use crate::scalar::Scalar;

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<S> {
    pub identity: String,
    /// Basis indices the identity was evaluated at.
    pub tuple: Vec<usize>,
    /// Exact left-minus-right value; never zero.
    pub residual: Element<S>,
}

/// Result of checking one identity over all basis tuples of a fixed arity.
#[derive(Clone, Debug, PartialEq)]
pub struct ViolationReport<S> {
    pub identity: String,
    pub arity: usize,
    /// Number of tuples evaluated.
    pub tested: usize,
    pub entries: Vec<Violation<S>>,
}

impl<S: Scalar> ViolationReport<S> {
    pub fn new(identity: impl Into<String>, arity: usize, tested: usize, mut entries: Vec<Violation<S>>) -> Self {
        entries.sort_by(|a, b| (&a.identity, &a.tuple).cmp(&(&b.identity, &b.tuple)));
        Self { identity: identity.into(), arity, tested, entries }
    }

    pub fn passed(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&Violation<S>> {
        self.entries.first()
    }

    /// Looks up the violation recorded at `tuple`, if any.
    pub fn at(&self, tuple: &[usize]) -> Option<&Violation<S>> {
        self.entries.iter().find(|v| v.tuple == tuple)
    }

    pub fn unit(&self) -> &'static str {
        match self.arity {
            1 => "entries",
            2 => "pairs",
            _ => "triples",
        }
    }

    /// Merges reports of several identities into one sorted report.
    pub fn merge(identity: impl Into<String>, reports: impl IntoIterator<Item = Self>) -> Self {
        let mut arity = 0;
        let mut tested = 0;
        let mut entries = Vec::new();
        for r in reports {
            arity = arity.max(r.arity);
            tested += r.tested;
            entries.extend(r.entries);
        }
        Self::new(identity, arity, tested, entries)
    }
}

impl<S: Scalar> Violation<S> {
    /// `eps-jacobi @ (a1,a1,a2) residual -2*a2`.
    pub fn render(&self, basis: &GradedBasis) -> String {
        let mut s = format!("{} @ (", self.identity);
        for (k, &i) in self.tuple.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}", basis.name(i));
        }
        let _ = write!(s, ") residual {}", self.residual.render(basis));
        s
    }
}

pub(crate) type Residuals<S> = Vec<(Vec<usize>, Element<S>)>;

/// Evaluates `residual` on every tuple in `0..dim` of the given arity, in
/// lexicographic order, optionally split across `workers` threads. The output
/// is sorted by tuple and therefore independent of the worker count.
pub(crate) fn scan<S, F>(dim: usize, arity: usize, workers: usize, residual: F) -> (usize, Residuals<S>)
where
    S: Scalar,
    F: Fn(&[usize]) -> Element<S> + Sync,
{
    let total = dim.pow(arity as u32);
    let decode = |mut k: usize| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = k % dim;
            k /= dim;
        }
        t
    };
    let run = |range: std::ops::Range<usize>| {
        range
            .filter_map(|k| {
                let t = decode(k);
                let r = residual(&t);
                (!r.is_zero()).then_some((t, r))
            })
            .collect::<Vec<_>>()
    };

    let workers = workers.max(1).min(total.max(1));
    let mut found = if workers == 1 {
        run(0..total)
    } else {
        let chunk = total.div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let run = &run;
                    s.spawn(move || run(w * chunk..((w + 1) * chunk).min(total)))
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("check worker panicked")).collect()
        })
    };
    found.sort_by(|a, b| a.0.cmp(&b.0));
    (total, found)
}

/// Runs [`scan`] and wraps the result as a report for `identity`.
pub(crate) fn scan_report<S, F>(identity: &str, dim: usize, arity: usize, workers: usize, residual: F) -> ViolationReport<S>
where
    S: Scalar,
    F: Fn(&[usize]) -> Element<S> + Sync,
{
    let (tested, found) = scan(dim, arity, workers, residual);
    let entries = found
        .into_iter()
        .map(|(tuple, residual)| Violation { identity: identity.to_owned(), tuple, residual })
        .collect();
    ViolationReport::new(identity, arity, tested, entries)
}
