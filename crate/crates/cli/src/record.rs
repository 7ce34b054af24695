//! Output records shared by the text and JSON printers.
//!
//! The JSON form is one object per line, tagged by `kind`. Field names are
//! part of the command-line contract.

use cubesum_core::{cube_mod, DensityReport, Modulus, Representation};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityRecord {
    pub modulus: u64,
    pub exact: String,
    pub predicted: String,
    pub matches: bool,
}

impl From<DensityReport> for DensityRecord {
    fn from(r: DensityReport) -> Self {
        DensityRecord {
            modulus: r.modulus.get(),
            exact: r.exact.to_string(),
            predicted: r.predicted.to_string(),
            matches: r.matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OutputRecord {
    Residues {
        modulus: u64,
        members: Vec<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witnesses: Option<Vec<(u64, u64)>>,
    },
    Density(DensityRecord),
    #[serde(rename = "representation")]
    Represented {
        modulus: u64,
        n: u64,
        representable: bool,
        u: u64,
        v: u64,
    },
    #[serde(rename = "representation")]
    NotRepresentable {
        modulus: u64,
        n: u64,
        representable: bool,
        failing_modulus: u64,
        failing_residue: u64,
        admissible: Vec<u64>,
    },
    Verification {
        modulus: u64,
        n: u64,
        u: u64,
        v: u64,
        ok: bool,
    },
    Table {
        base: u64,
        admissible: Vec<u64>,
    },
    ScanRow(DensityRecord),
    ScanSummary {
        rows: u64,
        mismatches: u64,
    },
}

/// Longest admissible list spelled out in a text failure message.
const MAX_LISTED: usize = 64;

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl OutputRecord {
    pub fn represented(rep: Representation) -> Self {
        OutputRecord::Represented {
            modulus: rep.modulus.get(),
            n: rep.n,
            representable: true,
            u: rep.u,
            v: rep.v,
        }
    }

    /// Plain-text rendering.
    pub fn text(&self) -> String {
        match self {
            OutputRecord::Residues {
                members,
                witnesses: None,
                ..
            } => join(members),
            OutputRecord::Residues {
                members,
                witnesses: Some(w),
                ..
            } => members
                .iter()
                .zip(w)
                .map(|(m, (u, v))| format!("{m} ({u},{v})"))
                .collect::<Vec<_>>()
                .join("\n"),
            OutputRecord::Density(d) | OutputRecord::ScanRow(d) => format!(
                "N={} exact={} predicted={} {}",
                d.modulus,
                d.exact,
                d.predicted,
                if d.matches { "MATCH" } else { "MISMATCH" }
            ),
            OutputRecord::Represented { u, v, .. } => format!("u={u} v={v}"),
            OutputRecord::NotRepresentable {
                failing_modulus,
                failing_residue,
                admissible,
                ..
            } => {
                if admissible.len() <= MAX_LISTED {
                    let list = admissible
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{failing_residue} mod {failing_modulus} not in {{{list}}}")
                } else {
                    format!("{failing_residue} mod {failing_modulus} not in A({failing_modulus})")
                }
            }
            OutputRecord::Verification { ok: true, .. } => "OK".to_string(),
            OutputRecord::Verification {
                modulus,
                n,
                u,
                v,
                ok: false,
            } => {
                let m = Modulus::new(*modulus).expect("checked before printing");
                let got = m.reduce(cube_mod(*u, m) + cube_mod(*v, m));
                format!("FAIL: {u}^3 + {v}^3 = {got} (mod {modulus}), not {n}")
            }
            OutputRecord::Table { admissible, .. } => join(admissible),
            OutputRecord::ScanSummary { rows, mismatches } => {
                format!("scanned {rows} moduli, {mismatches} mismatches")
            }
        }
    }
}
