use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::conjecture::catalog::ConjectureClass;
use crate::error::{Error, Result};

const REFERENCE: &str = include_str!("../../fixtures/reference_counts.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Paper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub class: ConjectureClass,
    pub a: usize,
    pub c: usize,
    pub value: BigUint,
    pub provenance: Provenance,
}

#[derive(Deserialize)]
struct RawRow {
    class: String,
    a: usize,
    c: usize,
    value: String,
    provenance: Provenance,
}

/// `(class, a, c) → value` rows. Missing cells are absent, never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    rows: BTreeMap<(ConjectureClass, usize, usize), TableRow>,
}

impl CountTable {
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| Error::Fixture(e.to_string()))?;
        if headers != vec!["class", "a", "c", "value", "provenance"] {
            return Err(Error::Fixture(format!("unexpected header {headers:?}")));
        }
        let mut table = CountTable::default();
        for record in reader.deserialize::<RawRow>() {
            let raw = record.map_err(|e| Error::Fixture(e.to_string()))?;
            let class = raw.class.parse().map_err(|e: Error| Error::Fixture(e.to_string()))?;
            let value = raw
                .value
                .parse()
                .map_err(|_| Error::Fixture(format!("bad value {:?}", raw.value)))?;
            table.insert(TableRow {
                class,
                a: raw.a,
                c: raw.c,
                value,
                provenance: raw.provenance,
            })?;
        }
        Ok(table)
    }

    /// The embedded reference counts.
    pub fn reference() -> Self {
        Self::from_csv(REFERENCE).expect("embedded fixture parses")
    }

    /// Adds a row; a second row for the same cell is an error.
    pub fn insert(&mut self, row: TableRow) -> Result<()> {
        let key = (row.class, row.a, row.c);
        if self.rows.contains_key(&key) {
            return Err(Error::Fixture(format!("duplicate cell {} a={} c={}", row.class, row.a, row.c)));
        }
        self.rows.insert(key, row);
        Ok(())
    }

    pub fn get(&self, class: ConjectureClass, a: usize, c: usize) -> Option<&BigUint> {
        self.rows.get(&(class, a, c)).map(|r| &r.value)
    }

    pub fn rows(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.values()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["class", "a", "c", "value", "provenance"])
            .map_err(|e| Error::Fixture(e.to_string()))?;
        for r in self.rows() {
            let prov = match r.provenance {
                Provenance::Computed => "computed",
                Provenance::Paper => "paper",
            };
            w.write_record([r.class.name(), &r.a.to_string(), &r.c.to_string(), &r.value.to_string(), prov])
                .map_err(|e| Error::Fixture(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Fixture(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_rejects() {
        let t = CountTable::reference();
        assert_eq!(CountTable::from_csv(&t.to_csv().unwrap()).unwrap(), t);
        assert!(CountTable::from_csv("x,y\n1,2\n").is_err());
        assert!(CountTable::from_csv("class,a,c,value,provenance\nqspp,1,1,2,paper\nqspp,1,1,2,paper\n").is_err());
        assert!(CountTable::from_csv("class,a,c,value,provenance\nqspp,1,1,-2,paper\n").is_err());
        assert!(CountTable::from_csv("class,a,c,value,provenance\nfoo,1,1,2,paper\n").is_err());
    }
}
