//! Flat result schema shared by the synthetic and real-data experiments.

use std::cmp::Ordering;

pub const CSV_HEADER: &str =
    "dataset,strategy,params,trial,x_value,n,entropy_bits,emd,avg_cost,std_cost,dropped_queries";

/// One (dataset, strategy, parameters, trial) measurement.
#[derive(Debug, Clone)]
pub struct ResultRow {
    pub dataset: String,
    pub strategy: String,
    pub params: String,
    pub trial: u32,
    /// Shift for synthetic runs, train fraction for real runs.
    pub x_value: f64,
    pub n: usize,
    pub entropy_bits: f64,
    pub emd: f64,
    pub avg_cost: f64,
    pub std_cost: f64,
    pub dropped_queries: u64,
}

impl ResultRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{}",
            self.dataset,
            self.strategy,
            self.params,
            self.trial,
            self.x_value,
            self.n,
            self.entropy_bits,
            self.emd,
            self.avg_cost,
            self.std_cost,
            self.dropped_queries
        )
    }

    fn sort_key(&self) -> (&str, &str, &str, f64, u32) {
        (
            &self.dataset,
            &self.strategy,
            &self.params,
            self.x_value,
            self.trial,
        )
    }
}

/// Deterministic output order regardless of how cells were scheduled.
pub fn sort_rows(rows: &mut [ResultRow]) {
    rows.sort_by(|a, b| {
        let (ad, as_, ap, ax, at) = a.sort_key();
        let (bd, bs, bp, bx, bt) = b.sort_key();
        ad.cmp(bd)
            .then(as_.cmp(bs))
            .then(ap.cmp(bp))
            .then(ax.total_cmp(&bx))
            .then(at.cmp(&bt))
    });
    debug_assert!(rows.windows(2).all(|w| {
        let (ad, as_, ap, ax, at) = w[0].sort_key();
        let (bd, bs, bp, bx, bt) = w[1].sort_key();
        (ad, as_, ap, ax.to_bits(), at) != (bd, bs, bp, bx.to_bits(), bt)
    }));
}

/// Fills `std_cost` with the population standard deviation of `avg_cost`
/// across the trials of each (dataset, strategy, params, x_value) group.
/// Assumes the rows are already sorted.
pub fn fill_trial_std(rows: &mut [ResultRow]) {
    let mut start = 0;
    while start < rows.len() {
        let mut end = start + 1;
        while end < rows.len() && same_group(&rows[start], &rows[end]) {
            end += 1;
        }
        let group = &rows[start..end];
        let mean = group.iter().map(|r| r.avg_cost).sum::<f64>() / group.len() as f64;
        let var = group
            .iter()
            .map(|r| (r.avg_cost - mean).powi(2))
            .sum::<f64>()
            / group.len() as f64;
        let std = var.sqrt();
        for row in &mut rows[start..end] {
            row.std_cost = std;
        }
        start = end;
    }
}

fn same_group(a: &ResultRow, b: &ResultRow) -> bool {
    a.dataset == b.dataset
        && a.strategy == b.strategy
        && a.params == b.params
        && a.x_value.total_cmp(&b.x_value) == Ordering::Equal
}

pub fn to_csv(rows: &[ResultRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}
