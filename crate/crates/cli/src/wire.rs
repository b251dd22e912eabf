//! JSON wire forms. Field order here is the canonical key order of the
//! output; coefficients are canonical residues, never signed.

use serde::{Deserialize, Serialize};

use z4lcd::lcdenum::{Census, LcdCatalog};
use z4lcd::oracle::{Check, SweepReport};
use z4lcd::{CodeSpec, DivisorSet, FactorKind, FactorTable, HullReport, PairClass, PairKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorTableWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub records: Vec<FactorRecordWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecordWire {
    pub id: usize,
    pub label: String,
    pub n: u64,
    pub i: usize,
    pub kind: KindWire,
    pub partner: usize,
    pub coset: Vec<u64>,
    pub poly: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum KindWire {
    SelfReciprocal,
    PairFirst,
    PairSecond,
}

impl From<FactorKind> for KindWire {
    fn from(k: FactorKind) -> Self {
        match k {
            FactorKind::SelfReciprocal => KindWire::SelfReciprocal,
            FactorKind::PairFirst => KindWire::PairFirst,
            FactorKind::PairSecond => KindWire::PairSecond,
        }
    }
}

impl From<&FactorTable> for FactorTableWire {
    fn from(t: &FactorTable) -> Self {
        FactorTableWire {
            length: t.length(),
            records: t
                .records()
                .iter()
                .map(|r| FactorRecordWire {
                    id: r.id,
                    label: r.label(),
                    n: r.n,
                    i: r.i,
                    kind: r.kind.into(),
                    partner: r.partner,
                    coset: r.coset.clone(),
                    poly: r.poly.to_text(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub divisors: Vec<PairClassWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairClassWire {
    pub n: u64,
    pub order2: u32,
    pub phi: u64,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<u64>,
}

impl From<&PairClass> for PairClassWire {
    fn from(c: &PairClass) -> Self {
        PairClassWire {
            n: c.n,
            order2: c.order2,
            phi: c.phi,
            kind: match c.kind {
                PairKind::Good => "good".into(),
                PairKind::Bad => "bad".into(),
            },
            gamma: c.gamma(),
            beta: c.beta(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub h: Vec<usize>,
}

impl CodeSpecWire {
    pub fn from_sets(length: u64, f: &DivisorSet, g: &DivisorSet, h: &DivisorSet) -> Self {
        CodeSpecWire { length, f: f.to_vec(), g: g.to_vec(), h: h.to_vec() }
    }
}

impl From<&CodeSpec<'_>> for CodeSpecWire {
    fn from(c: &CodeSpec<'_>) -> Self {
        Self::from_sets(c.table().length(), c.f(), c.g(), c.h())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HullReportWire {
    pub deg_h: usize,
    pub deg_g: usize,
    pub hull_size: u128,
    pub lcd: bool,
    #[serde(rename = "H")]
    pub h_ids: Vec<usize>,
    #[serde(rename = "G")]
    pub g_ids: Vec<usize>,
}

impl From<&HullReport> for HullReportWire {
    fn from(r: &HullReport) -> Self {
        HullReportWire {
            deg_h: r.deg_h,
            deg_g: r.deg_g,
            hull_size: r.hull_size().expect("hull size fits in u128 for supported lengths"),
            lcd: r.lcd,
            h_ids: r.h_set.to_vec(),
            g_ids: r.g_set.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullWire {
    pub code: CodeSpecWire,
    pub report: HullReportWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub nsrf: u64,
    pub count: usize,
    pub entries: Vec<CatalogEntryWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryWire {
    pub f: Vec<usize>,
    pub generator: String,
    pub label: String,
}

impl From<&LcdCatalog> for CatalogWire {
    fn from(c: &LcdCatalog) -> Self {
        CatalogWire {
            length: c.length,
            nsrf: c.nsrf,
            count: c.entries.len(),
            entries: c
                .entries
                .iter()
                .map(|e| CatalogEntryWire {
                    f: e.f.to_vec(),
                    generator: e.generator.to_text(),
                    label: e.label.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub nsrf: u64,
    pub count: u128,
    pub enumerated: u128,
    /// `null` when the partition sweep was skipped for budget.
    pub swept: Option<u128>,
}

impl CountWire {
    pub fn new(length: u64, nsrf: u64, census: &Census) -> Self {
        CountWire {
            length,
            nsrf,
            count: census.formula,
            enumerated: census.enumerated,
            swept: census.swept,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepWire {
    #[serde(rename = "N")]
    pub length: u64,
    pub partitions: u64,
    pub mismatches: Vec<MismatchWire>,
    pub lcd_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchWire {
    pub spec: CodeSpecWire,
    pub check: String,
    pub expected: u128,
    pub got: u128,
}

impl From<&SweepReport> for SweepWire {
    fn from(r: &SweepReport) -> Self {
        SweepWire {
            length: r.length,
            partitions: r.partitions,
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchWire {
                    spec: CodeSpecWire::from_sets(r.length, &m.f, &m.g, &m.h),
                    check: match m.check {
                        Check::HullSize => "hullSize",
                        Check::CodeSize => "codeSize",
                        Check::LcdCriterion => "lcdCriterion",
                    }
                    .into(),
                    expected: m.expected,
                    got: m.got,
                })
                .collect(),
            lcd_count: r.lcd_count,
        }
    }
}
