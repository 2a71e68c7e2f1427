use std::path::{Path, PathBuf};

use renyi_core::{
    invert_probability, recover_distribution_probe, sample_spectrum, shifted_divergence, shifted_entropy,
    ExtendedOrder, LogBase, MassMeasure, OrderGrid,
};

use crate::error::{CliError, Result};
use crate::input::read_measure;
use crate::output::{plot_data, write_all_atomic, Cell, Format, Table};

pub struct SpectrumArgs<'a> {
    pub input: &'a Path,
    pub grid: &'a OrderGrid,
    pub base: LogBase,
    pub normalize: bool,
    pub format: Format,
    pub plot_data: Option<&'a Path>,
}

/// Returns the rendered table; plot files, if requested, are already written.
pub fn spectrum(args: &SpectrumArgs) -> Result<String> {
    let m = read_measure(args.input)?;
    let (table, plots) = spectrum_table(&m, args.grid, args.base, args.normalize)?;
    if let Some(prefix) = args.plot_data {
        write_all_atomic(&plot_files(prefix, args.grid, &plots)?)?;
    }
    Ok(table.render(args.format))
}

type PlotPoints = (Vec<(ExtendedOrder, f64)>, Vec<(ExtendedOrder, f64)>);

pub fn spectrum_table(
    m: &MassMeasure,
    grid: &OrderGrid,
    base: LogBase,
    normalize: bool,
) -> Result<(Table, PlotPoints)> {
    let p = m.normalize();
    let spec = sample_spectrum(&p, grid, base)?;
    let mut columns = vec!["order", "entropy", "equiv_prob", "potential", "derivative"];
    if normalize {
        columns.push("displaced_entropy");
    }
    columns.extend(["n", "total_mass", "base"]);
    let mut table = Table::new(columns);
    for row in &spec.rows {
        let mut cells = vec![
            Cell::Order(row.order),
            row.entropy.into(),
            row.equiv_prob.into(),
            row.potential.into(),
            row.derivative.into(),
        ];
        if normalize {
            cells.push(shifted_entropy(m, row.order, base).value.into());
        }
        cells.extend([
            Cell::Int(m.len() as u64),
            m.total_mass().into(),
            Cell::Text(base.to_string()),
        ]);
        table.push(cells);
    }
    let entropy = spec.rows.iter().map(|r| (r.order, r.entropy)).collect();
    let equiv = spec.rows.iter().map(|r| (r.order, r.equiv_prob)).collect();
    Ok((table, (entropy, equiv)))
}

fn plot_files(prefix: &Path, grid: &OrderGrid, (entropy, equiv): &PlotPoints) -> Result<Vec<(PathBuf, String)>> {
    let finite = grid.finite_orders();
    let (Some(&lo), Some(&hi)) = (finite.first(), finite.last()) else {
        return Err(CliError::Orders("plot data needs at least one finite order".into()));
    };
    let named = |suffix: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    };
    Ok(vec![
        (named("_spectrum.dat"), plot_data("entropy", entropy, (lo, hi))),
        (named("_eqprob.dat"), plot_data("equiv_prob", equiv, (lo, hi))),
    ])
}

pub fn divergence(p_path: &Path, q_path: &Path, grid: &OrderGrid, base: LogBase, format: Format) -> Result<String> {
    let p = read_measure(p_path)?.normalize();
    let q = read_measure(q_path)?.normalize();
    let uniform = q.is_uniform();
    let mut columns = vec!["order", "divergence"];
    if uniform {
        columns.push("log_n_minus_entropy");
    }
    columns.extend(["n", "base"]);
    let mut table = Table::new(columns);
    let log_n = base.from_nats((q.len() as f64).ln());
    for order in grid.orders() {
        let d = shifted_divergence(&p, &q, order, base)?;
        let mut cells = vec![Cell::Order(order), d.value.into()];
        if uniform {
            cells.push((log_n - shifted_entropy(&p, order, base).value).into());
        }
        cells.extend([Cell::Int(p.len() as u64), Cell::Text(base.to_string())]);
        table.push(cells);
    }
    Ok(table.render(format))
}

/// A probability given as a decimal or as a fraction `a/b`.
pub fn parse_target(s: &str) -> Result<f64> {
    let bad = || CliError::Input(format!("target {s:?} is not a probability"));
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    let v = match s.split_once('/') {
        Some((a, b)) => num(a)? / num(b)?,
        None => num(s)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

pub fn invert(input: &Path, target: Option<f64>, tol: f64) -> Result<String> {
    let m = read_measure(input)?;
    let mut table = Table::new(["labels", "target", "order", "achieved"]);
    match target {
        Some(t) => {
            let order = invert_probability(&m, t, 1.0, tol)?;
            let achieved = renyi_core::equivalent_probability(&m.normalize(), order);
            table.push(vec![Cell::Empty, t.into(), Cell::Order(order), achieved.into()]);
        }
        None => {
            for row in recover_distribution_probe(&m, tol)? {
                table.push(vec![
                    Cell::Text(row.labels.join(";")),
                    row.probability.into(),
                    Cell::Order(row.order),
                    row.achieved.into(),
                ]);
            }
        }
    }
    Ok(table.render(Format::Csv))
}
