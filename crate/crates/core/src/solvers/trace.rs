use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Input,
    Component,
    Decomposition,
    PathPartition,
    Shortening,
    Lemma,
    Removal,
    Patch,
    Closure,
    Fallback,
    Result,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Input => "input",
            Stage::Component => "component",
            Stage::Decomposition => "decomposition",
            Stage::PathPartition => "paths",
            Stage::Shortening => "shortening",
            Stage::Lemma => "lemma",
            Stage::Removal => "removal",
            Stage::Patch => "patch",
            Stage::Closure => "closure",
            Stage::Fallback => "fallback",
            Stage::Result => "result",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub stage: Stage,
    pub detail: String,
}

/// Ordered log of the decisions a solver made. Solvers are deterministic,
/// so the same input replays the same trace and output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolveTrace {
    pub events: Vec<TraceEvent>,
}

impl SolveTrace {
    pub fn push(&mut self, stage: Stage, detail: impl Into<String>) {
        self.events.push(TraceEvent {
            stage,
            detail: detail.into(),
        });
    }

    pub fn count(&self, stage: Stage) -> usize {
        self.events.iter().filter(|e| e.stage == stage).count()
    }

    pub fn used_fallback(&self) -> bool {
        self.count(Stage::Fallback) > 0
    }

    /// A one-line digest: the sequence of stages with repeats collapsed.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut last: Option<(Stage, usize)> = None;
        for e in &self.events {
            match &mut last {
                Some((s, k)) if *s == e.stage => *k += 1,
                _ => {
                    if let Some((s, k)) = last.take() {
                        parts.push(if k > 1 { format!("{s}x{k}") } else { s.to_string() });
                    }
                    last = Some((e.stage, 1));
                }
            }
        }
        if let Some((s, k)) = last {
            parts.push(if k > 1 { format!("{s}x{k}") } else { s.to_string() });
        }
        parts.join(">")
    }
}

impl fmt::Display for SolveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{}: {}", e.stage, e.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_collapses_repeats() {
        let mut t = SolveTrace::default();
        t.push(Stage::Input, "n = 3");
        t.push(Stage::Removal, "a");
        t.push(Stage::Removal, "b");
        t.push(Stage::Result, "2 cycles");
        assert_eq!(t.summary(), "input>removalx2>result");
        assert_eq!(t.to_string().lines().count(), 4);
        assert!(!t.used_fallback());
    }
}
