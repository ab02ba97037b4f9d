use std::fmt::Write;

use super::Verdict;

impl Verdict {
    /// Line-oriented report: `verdict <kind>`, sampling metadata when
    /// relevant, `losing-count <k>`, then the listed losing configurations.
    pub fn report(&self) -> String {
        let mut out = String::new();
        match self {
            Verdict::Solved => {
                out.push_str("verdict solved\nlosing-count 0\n");
            }
            Verdict::NotSolvedBy {
                losing,
                count,
                truncated,
            } => {
                let _ = writeln!(out, "verdict not-solved\nlosing-count {count}");
                if *truncated {
                    let _ = writeln!(out, "listed {}", losing.len());
                }
                for x in losing {
                    let _ = writeln!(out, "{x}");
                }
            }
            Verdict::SampledClean { samples, seed } => {
                let _ = writeln!(
                    out,
                    "verdict sampled-clean\nsamples {samples}\nseed {seed}\nlosing-count 0"
                );
            }
            Verdict::SampledCounterexample {
                config,
                sample_index,
                seed,
            } => {
                let _ = writeln!(
                    out,
                    "verdict sampled-counterexample\nsample-index {sample_index}\nseed {seed}\nlosing-count 1\n{config}"
                );
            }
        }
        out
    }
}
