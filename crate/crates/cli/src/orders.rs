//! The `--orders` mini-language.

use renyi_core::{ExtendedOrder, OrderGrid};

use crate::error::{CliError, Result};

/// Finite orders closer to zero than this are read as exactly 0.
pub const SNAP_TO_ZERO: f64 = 1e-12;

fn snap(r: f64) -> f64 {
    if r.abs() < SNAP_TO_ZERO {
        0.0
    } else {
        r
    }
}

/// Parses `named`, `default`, a linear grid `a:b:n`, or a comma list that may
/// contain `inf` and `-inf`.
pub fn parse_orders(spec: &str) -> Result<OrderGrid> {
    let spec = spec.trim();
    let grid = match spec {
        "named" => OrderGrid::named(),
        "default" => OrderGrid::default_dense(),
        s if s.contains(':') => {
            let parts: Vec<&str> = s.split(':').map(str::trim).collect();
            let [a, b, n] = parts[..] else {
                return Err(CliError::Orders(format!("linear grid {s:?} must look like a:b:n")));
            };
            let bound = |t: &str| {
                t.parse::<f64>()
                    .map_err(|_| CliError::Orders(format!("grid bound {t:?} is not a number")))
            };
            let n: usize = n
                .parse()
                .map_err(|_| CliError::Orders(format!("grid size {n:?} is not a count")))?;
            let linear = OrderGrid::linear(bound(a)?, bound(b)?, n)?;
            let snapped = linear.finite_orders().iter().map(|&r| snap(r)).collect();
            OrderGrid::new(snapped, false, false)?
        }
        s => {
            let orders = s
                .split(',')
                .map(|t| {
                    let o: ExtendedOrder = t
                        .parse()
                        .map_err(|_| CliError::Orders(format!("cannot read order {:?}", t.trim())))?;
                    Ok(match o {
                        ExtendedOrder::Finite(r) => ExtendedOrder::Finite(snap(r)),
                        inf => inf,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            OrderGrid::from_orders(&orders)?
        }
    };
    Ok(grid)
}
