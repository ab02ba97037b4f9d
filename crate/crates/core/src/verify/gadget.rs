use std::collections::HashMap;

use super::losing_set;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::strategy::Gadget;

/// Recomputes the losing set of a gadget's strategy and checks that the
/// pivot colour is a function of the other colours on it.
///
/// Returns the induced `phi` table (zero off the losing set's projection)
/// after checking it agrees with `gadget.phi` wherever the losing set pins
/// it down. The non-solvability of the underlying graph is *not* checked
/// here, only the non-emptiness of this strategy's losing set.
pub fn certify_gadget(gadget: &Gadget, max_configs: u64) -> Result<Vec<u8>> {
    let losing = losing_set(
        &gadget.graph,
        gadget.q,
        &gadget.strategy,
        max_configs,
        Execution::default(),
    )?;
    if losing.is_empty() {
        return Err(Error::EmptyLosingSet);
    }
    let pivot = gadget.pivot;
    let mut seen: HashMap<usize, &[u8]> = HashMap::new();
    let mut induced = vec![0u8; gadget.phi.len()];
    for config in &losing {
        let x = config.values();
        let key = gadget.phi_index(x);
        if let Some(prev) = seen.insert(key, x) {
            if prev[pivot] != x[pivot] {
                return Err(Error::NotAFunction {
                    first: prev.to_vec(),
                    second: x.to_vec(),
                });
            }
        }
        induced[key] = x[pivot];
    }
    if let Some(config) = losing.iter().find(|c| {
        let x = c.values();
        gadget.phi[gadget.phi_index(x)] != x[pivot]
    }) {
        return Err(Error::PhiMismatch {
            config: config.values().to_vec(),
        });
    }
    Ok(induced)
}
