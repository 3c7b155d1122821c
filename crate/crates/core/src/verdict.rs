//! Three-valued predicate results and the search limits that produce them.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Undecided,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    /// Conjunction: any false wins, then any undecided.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::True,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Undecided => "undecided",
        })
    }
}

/// How a verdict was reached. `Sampled` verdicts of `true` are probabilistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Constructive,
    Exhaustive,
    Sampled,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Constructive => "constructive",
            Strategy::Exhaustive => "exhaustive",
            Strategy::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub predicate: String,
    pub verdict: Verdict,
    pub strategy: Strategy,
    /// Certificate for `true`, counterexample for `false`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<VerdictReport>,
}

impl VerdictReport {
    pub fn new(predicate: impl Into<String>, verdict: Verdict, strategy: Strategy) -> Self {
        VerdictReport {
            predicate: predicate.into(),
            verdict,
            strategy,
            witness: None,
            details: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn holds(predicate: impl Into<String>, strategy: Strategy) -> Self {
        VerdictReport::new(predicate, Verdict::True, strategy)
    }

    pub fn fails(predicate: impl Into<String>, strategy: Strategy, witness: impl Into<String>) -> Self {
        VerdictReport::new(predicate, Verdict::False, strategy).with_witness(witness)
    }

    pub fn undecided(predicate: impl Into<String>, reason: impl Into<String>) -> Self {
        VerdictReport::new(predicate, Verdict::Undecided, Strategy::Sampled).with_detail(reason)
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.details.push(d.into());
        self
    }

    pub fn with_child(mut self, c: VerdictReport) -> Self {
        self.children.push(c);
        self
    }

    /// Report whose verdict is the conjunction of its children; the weakest
    /// child strategy is inherited.
    pub fn all_of(predicate: impl Into<String>, children: Vec<VerdictReport>) -> Self {
        let verdict = children.iter().fold(Verdict::True, |acc, c| acc.and(c.verdict));
        let strategy = children
            .iter()
            .map(|c| c.strategy)
            .max()
            .unwrap_or(Strategy::Constructive);
        let mut r = VerdictReport::new(predicate, verdict, strategy);
        r.children = children;
        r
    }

    pub fn is_true(&self) -> bool {
        self.verdict.is_true()
    }

    pub fn is_false(&self) -> bool {
        self.verdict.is_false()
    }

    /// Depth-first search for a sub-report by predicate name.
    pub fn find(&self, predicate: &str) -> Option<&VerdictReport> {
        if self.predicate == predicate {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(predicate))
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(r: &VerdictReport, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let pad = "  ".repeat(depth);
            write!(f, "{pad}{}: {} ({})", r.predicate, r.verdict, r.strategy)?;
            if let Some(w) = &r.witness {
                write!(f, " witness: {w}")?;
            }
            writeln!(f)?;
            for d in &r.details {
                writeln!(f, "{pad}  - {d}")?;
            }
            for c in &r.children {
                go(c, depth + 1, f)?;
            }
            Ok(())
        }
        go(self, 0, f)
    }
}

/// Limits for enumerations and the seed for sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of elements an exhaustive scan may visit.
    pub budget: u64,
    /// Random probes used when exhaustive search is impossible.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1 << 20,
            samples: 64,
            seed: 0,
        }
    }
}
