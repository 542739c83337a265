//! Serializable result types shared by the library, the CLI and the Python
//! bindings.
//!
//! Reports are deliberately deterministic: tables are ordered maps, class
//! entries follow the group's fixed element order, and timing data is only
//! attached on request so that identical inputs produce byte-identical
//! JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// A table of homology dimensions indexed by `(q, D)`: homological degree
/// and internal (polynomial) degree.  Only non-zero entries are stored;
/// `get` treats anything inside the computed range as zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DimTable {
    q_max: usize,
    d_max: usize,
    dims: BTreeMap<(usize, usize), usize>,
}

impl DimTable {
    pub fn new(q_max: usize, d_max: usize) -> Self {
        DimTable { q_max, d_max, dims: BTreeMap::new() }
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn set(&mut self, q: usize, d: usize, dim: usize) {
        if dim == 0 {
            self.dims.remove(&(q, d));
        } else {
            self.dims.insert((q, d), dim);
        }
    }

    pub fn get(&self, q: usize, d: usize) -> usize {
        self.dims.get(&(q, d)).copied().unwrap_or(0)
    }

    /// Non-zero entries in `(q, D)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    /// Pointwise sum, used to total per-class tables.
    pub fn accumulate(&mut self, other: &DimTable) {
        self.q_max = self.q_max.max(other.q_max);
        self.d_max = self.d_max.max(other.d_max);
        for ((q, d), v) in other.iter() {
            let cur = self.get(q, d);
            self.set(q, d, cur + v);
        }
    }

    /// Sum of all entries with the given homological degree.
    pub fn total_in_degree(&self, q: usize) -> usize {
        self.dims.iter().filter(|((qq, _), _)| *qq == q).map(|(_, v)| v).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

impl Serialize for DimTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            q: usize,
            d: usize,
            dim: usize,
        }
        let entries: Vec<Entry> =
            self.iter().map(|((q, d), dim)| Entry { q, d, dim }).collect();
        let mut s = serializer.serialize_struct("DimTable", 3)?;
        s.serialize_field("q_max", &self.q_max)?;
        s.serialize_field("d_max", &self.d_max)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

impl fmt::Display for DimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "      ")?;
        for d in 0..=self.d_max {
            write!(f, " D={d:<3}")?;
        }
        writeln!(f)?;
        for q in 0..=self.q_max {
            write!(f, "q={q:<3} ")?;
            for d in 0..=self.d_max {
                write!(f, " {:<4}", self.get(q, d))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Description of the fixed-point set of one group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixedSetDesc {
    /// Linear subspace of affine space.
    Linear { dim: usize },
    /// Subtorus, one coordinate per cycle of the permutation part.  Cycles
    /// are reported 1-based.
    Torus { rank: usize, cycles: Vec<Vec<usize>> },
    /// No fixed points.
    Empty,
}

/// Per-conjugacy-class results.
#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub representative: String,
    pub size: usize,
    pub centralizer_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_set: Option<FixedSetDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hp: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hh: Option<DimTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc: Option<DimTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_checked: Option<bool>,
}

impl ClassEntry {
    pub fn new(representative: String, size: usize, centralizer_order: usize) -> Self {
        ClassEntry {
            representative,
            size,
            centralizer_order,
            fixed_set: None,
            hp: None,
            hh: None,
            hc: None,
            oracle_checked: None,
        }
    }
}

/// Aggregated results over all classes.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Totals {
    pub group_order: usize,
    pub class_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hp: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hh: Option<DimTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc: Option<DimTable>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub total_ms: u128,
}

/// Top-level report emitted by the CLI and the bindings.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: serde_json::Value,
    pub per_class: Vec<ClassEntry>,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        writeln!(
            f,
            "group order {}, {} conjugacy classes",
            self.totals.group_order, self.totals.class_count
        )?;
        for (i, c) in self.per_class.iter().enumerate() {
            writeln!(f, "\nclass {}: {} (size {}, centralizer order {})", i, c.representative, c.size, c.centralizer_order)?;
            if let Some(fs) = &c.fixed_set {
                match fs {
                    FixedSetDesc::Linear { dim } => writeln!(f, "  fixed set: linear, dim {dim}")?,
                    FixedSetDesc::Torus { rank, .. } => writeln!(f, "  fixed set: torus, rank {rank}")?,
                    FixedSetDesc::Empty => writeln!(f, "  fixed set: empty")?,
                }
            }
            if let Some([even, odd]) = c.hp {
                writeln!(f, "  HP_even = {even}, HP_odd = {odd}")?;
            }
            if let Some(t) = &c.hh {
                writeln!(f, "  HH dims:\n{t}")?;
            }
            if let Some(t) = &c.hc {
                writeln!(f, "  HC dims:\n{t}")?;
            }
            if let Some(ok) = c.oracle_checked {
                writeln!(f, "  oracle check: {}", if ok { "agreed" } else { "MISMATCH" })?;
            }
        }
        writeln!(f, "\ntotals:")?;
        if let Some([even, odd]) = self.totals.hp {
            writeln!(f, "  HP_even = {even}, HP_odd = {odd}")?;
        }
        if let Some(t) = &self.totals.hh {
            writeln!(f, "  HH dims:\n{t}")?;
        }
        if let Some(t) = &self.totals.hc {
            writeln!(f, "  HC dims:\n{t}")?;
        }
        Ok(())
    }
}

/// Closed-form affine Weyl group report.
#[derive(Debug, Clone, Serialize)]
pub struct WeylReport {
    pub n: usize,
    pub per_partition: Vec<PartitionEntry>,
    /// `[even, odd]` totals of the periodic theory.
    pub totals: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionEntry {
    pub partition: Vec<usize>,
    pub distinct_parts: usize,
    pub sigma_cycles: String,
    pub fixed_rank: usize,
    pub hp: [usize; 2],
}

impl fmt::Display for WeylReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "affine Weyl computation for n = {}", self.n)?;
        for p in &self.per_partition {
            let parts: Vec<String> = p.partition.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "  lambda = ({}): sigma = {}, fixed torus rank {}, distinct parts {}, HP contribution ({}, {})",
                parts.join(","),
                p.sigma_cycles,
                p.fixed_rank,
                p.distinct_parts,
                p.hp[0],
                p.hp[1]
            )?;
        }
        writeln!(f, "totals: HP_even = {}, HP_odd = {}", self.totals[0], self.totals[1])?;
        if let Some(ok) = self.cross_check {
            writeln!(f, "cross-check against crossed-product route: {}", if ok { "agreed" } else { "MISMATCH" })?;
        }
        Ok(())
    }
}
