use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::GrowthRecord;
use crate::error::Result;

pub const GROWTH_HEADER: &str = "n,length,sup_norm,normalized_length,certified,dolzhenko_ratio,prop1_ratio,upper_ratio";

/// Flat CSV form of a [`GrowthRecord`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub n: usize,
    pub length: f64,
    pub sup_norm: f64,
    pub normalized_length: f64,
    pub certified: bool,
    pub dolzhenko_ratio: f64,
    pub prop1_ratio: Option<f64>,
    pub upper_ratio: Option<f64>,
}

impl From<&GrowthRecord> for GrowthRow {
    fn from(r: &GrowthRecord) -> Self {
        Self {
            n: r.degree,
            length: r.length,
            sup_norm: r.sup_norm,
            normalized_length: r.normalized_length,
            certified: r.certified,
            dolzhenko_ratio: r.bounds.dolzhenko_ratio,
            prop1_ratio: r.bounds.prop1_ratio,
            upper_ratio: r.bounds.univalent_upper_ratio,
        }
    }
}

pub fn write_records<W: Write>(out: W, records: &[GrowthRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(GrowthRow::from(r))?;
    }
    if records.is_empty() {
        w.write_record(GROWTH_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<GrowthRow>> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}
