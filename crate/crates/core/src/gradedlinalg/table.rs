use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Finite box in `(q, t)`; the `a` direction is always finite and enumerated
/// from the complex itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub qmin: i32,
    pub qmax: i32,
    pub tmin: i32,
    pub tmax: i32,
}

impl Window {
    pub fn contains(&self, q: i32, t: i32) -> bool {
        q >= self.qmin && q <= self.qmax && t >= self.tmin && t <= self.tmax
    }

    pub fn enlarged(&self, dq: i32, dt: i32) -> Window {
        Window {
            qmin: self.qmin - dq,
            qmax: self.qmax + dq,
            tmin: self.tmin - dt,
            tmax: self.tmax + dt,
        }
    }
}

/// Normalization and provenance metadata attached to a table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub strands: usize,
    pub writhe: i64,
    pub components: usize,
    pub braid: Option<String>,
    /// (a, q, t) shifts applied to raw braid-complex gradings.
    pub shifts: (i32, i32, i32),
    /// grading convention notes, e.g. the tri-degree assigned to the
    /// Hochschild exterior generators
    pub convention: String,
}

/// Map `(a, q, t) -> dimension` with metadata. All entries lie in the
/// declared window (plus the finite `a` range).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriGradedTable {
    pub dims: BTreeMap<(i32, i32, i32), u64>,
    pub meta: TableMeta,
    pub window: Window,
}

impl TriGradedTable {
    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn get(&self, a: i32, q: i32, t: i32) -> u64 {
        self.dims.get(&(a, q, t)).copied().unwrap_or(0)
    }

    /// Apply grading shifts: the entry at (a, q, t) moves to
    /// (a + da, q + dq, t + dt). The window moves along.
    pub fn shifted(&self, da: i32, dq: i32, dt: i32) -> TriGradedTable {
        let dims = self
            .dims
            .iter()
            .map(|(&(a, q, t), &d)| ((a + da, q + dq, t + dt), d))
            .collect();
        let mut meta = self.meta.clone();
        meta.shifts = (meta.shifts.0 + da, meta.shifts.1 + dq, meta.shifts.2 + dt);
        TriGradedTable {
            dims,
            meta,
            window: Window {
                qmin: self.window.qmin + dq,
                qmax: self.window.qmax + dq,
                tmin: self.window.tmin + dt,
                tmax: self.window.tmax + dt,
            },
        }
    }

    /// Restrict to a smaller window.
    pub fn restricted(&self, w: &Window) -> TriGradedTable {
        TriGradedTable {
            dims: self
                .dims
                .iter()
                .filter(|(&(_, q, t), _)| w.contains(q, t))
                .map(|(&k, &v)| (k, v))
                .collect(),
            meta: self.meta.clone(),
            window: w.clone(),
        }
    }

    /// Dimensions agree on the intersection of the two windows.
    pub fn agrees_with(&self, other: &TriGradedTable) -> bool {
        let w = Window {
            qmin: self.window.qmin.max(other.window.qmin),
            qmax: self.window.qmax.min(other.window.qmax),
            tmin: self.window.tmin.max(other.window.tmin),
            tmax: self.window.tmax.min(other.window.tmax),
        };
        self.restricted(&w).dims == other.restricted(&w).dims
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .dims
            .iter()
            .map(|(&(a, q, t), &dim)| {
                serde_json::json!({"a": a, "q": q, "t": t, "dim": dim})
            })
            .collect();
        serde_json::json!({
            "meta": {
                "strands": self.meta.strands,
                "writhe": self.meta.writhe,
                "components": self.meta.components,
                "braid": self.meta.braid,
                "shifts": {"a": self.meta.shifts.0, "q": self.meta.shifts.1, "t": self.meta.shifts.2},
                "convention": self.meta.convention,
                "window": {"qmin": self.window.qmin, "qmax": self.window.qmax,
                            "tmin": self.window.tmin, "tmax": self.window.tmax},
            },
            "entries": entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,q,t,dim\n");
        for (&(a, q, t), &dim) in &self.dims {
            let _ = writeln!(out, "{},{},{},{}", a, q, t, dim);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TriGradedTable {
        let mut dims = BTreeMap::new();
        dims.insert((0, 0, 0), 1);
        dims.insert((2, -2, 1), 1);
        TriGradedTable {
            dims,
            meta: TableMeta::default(),
            window: Window { qmin: -4, qmax: 4, tmin: -2, tmax: 2 },
        }
    }

    #[test]
    fn shifts_move_entries_and_window() {
        let t = sample().shifted(0, 2, -1);
        assert_eq!(t.get(0, 2, -1), 1);
        assert_eq!(t.get(2, 0, 0), 1);
        assert_eq!(t.window.qmin, -2);
    }

    #[test]
    fn json_and_csv_shapes() {
        let t = sample();
        let j = t.to_json();
        assert_eq!(j["entries"].as_array().unwrap().len(), 2);
        assert!(t.to_csv().starts_with("a,q,t,dim\n"));
    }

    #[test]
    fn agreement_on_overlap() {
        let a = sample();
        let mut b = sample();
        b.window = Window { qmin: -2, qmax: 2, tmin: 0, tmax: 2 };
        b.dims.retain(|&(_, q, t), _| b.window.contains(q, t));
        assert!(a.agrees_with(&b));
    }
}
