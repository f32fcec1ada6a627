//! JSON file formats for the core types: one object per UTF-8 file,
//! round-trip identity.

use fewcol::report::{ExactRecord, GuaranteeReport, ValKind};
use fewcol::{ColourSet, EdgeColouring, Hypergraph};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FormatError {
    /// serde_json error, already naming the offending field/position.
    Parse(String),
    /// The parsed object violates a domain invariant.
    Domain(String),
}

impl core::fmt::Display for FormatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FormatError::Parse(m) => write!(f, "parse error: {m}"),
            FormatError::Domain(m) => write!(f, "invalid object: {m}"),
        }
    }
}

/// `{"n":int,"r":int,"colours":[int;n(n-1)/2]}` in pair-rank order.
#[derive(Debug, Serialize, Deserialize)]
pub struct ColouringFile {
    pub n: u32,
    pub r: u32,
    pub colours: Vec<u16>,
}

impl From<&EdgeColouring> for ColouringFile {
    fn from(c: &EdgeColouring) -> Self {
        ColouringFile { n: c.n(), r: c.r(), colours: c.colours().to_vec() }
    }
}

impl TryFrom<ColouringFile> for EdgeColouring {
    type Error = FormatError;

    fn try_from(f: ColouringFile) -> Result<Self, FormatError> {
        EdgeColouring::new(f.n, f.r, f.colours).map_err(|e| FormatError::Domain(e.to_string()))
    }
}

/// `{"r":int,"edges":[[int,...],...]}`, edge order preserved.
#[derive(Debug, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub r: u32,
    pub edges: Vec<Vec<u32>>,
}

impl From<&Hypergraph> for HypergraphFile {
    fn from(h: &Hypergraph) -> Self {
        HypergraphFile { r: h.r(), edges: h.edge_lists() }
    }
}

impl TryFrom<HypergraphFile> for Hypergraph {
    type Error = FormatError;

    fn try_from(f: HypergraphFile) -> Result<Self, FormatError> {
        for (i, e) in f.edges.iter().enumerate() {
            if e.iter().any(|&v| v >= 128) {
                return Err(FormatError::Domain(format!("edge {i} has a vertex >= 128")));
            }
        }
        let masks = f
            .edges
            .iter()
            .map(|e| e.iter().fold(0u128, |m, &v| m | 1u128 << v))
            .collect();
        Hypergraph::new(f.r, masks).map_err(|e| FormatError::Domain(e.to_string()))
    }
}

/// Exact rational as a numerator/denominator pair.
#[derive(Debug, Serialize, Deserialize)]
pub struct RationalFile {
    pub num: i128,
    pub den: i128,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub colours: Vec<u32>,
    pub witness_vertices: Vec<u32>,
    pub claimed_bound: RationalFile,
    pub achieved: u32,
    pub k: u32,
    pub certified: bool,
}

impl From<&GuaranteeReport> for ReportFile {
    fn from(rep: &GuaranteeReport) -> Self {
        ReportFile {
            colours: rep.colours.iter().collect(),
            witness_vertices: rep.witness_vertices.clone(),
            claimed_bound: RationalFile {
                num: *rep.claimed_bound.numer(),
                den: *rep.claimed_bound.denom(),
            },
            achieved: rep.achieved,
            k: rep.k,
            certified: rep.certified,
        }
    }
}

impl TryFrom<ReportFile> for GuaranteeReport {
    type Error = FormatError;

    fn try_from(f: ReportFile) -> Result<Self, FormatError> {
        if f.claimed_bound.den == 0 {
            return Err(FormatError::Domain("claimed_bound has zero denominator".into()));
        }
        if f.witness_vertices.len() as u32 != f.achieved {
            return Err(FormatError::Domain("achieved does not equal the witness size".into()));
        }
        let colours: ColourSet = f.colours.iter().copied().collect();
        Ok(GuaranteeReport {
            colours,
            witness_vertices: f.witness_vertices,
            claimed_bound: fewcol::ratio::rat(f.claimed_bound.num, f.claimed_bound.den),
            achieved: f.achieved,
            k: f.k,
            certified: f.certified,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RecordFile {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub kind: String,
    pub value: u32,
    pub extremal_colouring: ColouringFile,
}

impl From<&ExactRecord> for RecordFile {
    fn from(rec: &ExactRecord) -> Self {
        RecordFile {
            n: rec.n,
            r: rec.r,
            s: rec.s,
            kind: rec.kind.to_string(),
            value: rec.value,
            extremal_colouring: (&rec.extremal_colouring).into(),
        }
    }
}

impl TryFrom<RecordFile> for ExactRecord {
    type Error = FormatError;

    fn try_from(f: RecordFile) -> Result<Self, FormatError> {
        let kind = parse_kind(&f.kind)?;
        let extremal_colouring: EdgeColouring = f.extremal_colouring.try_into()?;
        Ok(ExactRecord { n: f.n, r: f.r, s: f.s, kind, value: f.value, extremal_colouring })
    }
}

pub fn parse_kind(kind: &str) -> Result<ValKind, FormatError> {
    match kind {
        "f" => Ok(ValKind::F),
        "g" => Ok(ValKind::G),
        other => Err(FormatError::Domain(format!("kind must be \"f\" or \"g\", got {other:?}"))),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable types")
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colouring_round_trip() {
        let c = EdgeColouring::new(2, 1, vec![0]).unwrap();
        let json = to_json(&ColouringFile::from(&c));
        assert_eq!(json.replace(['\n', ' '], ""), r#"{"n":2,"r":1,"colours":[0]}"#);
        let back: EdgeColouring = from_json::<ColouringFile>(&json).unwrap().try_into().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn hypergraph_round_trip_preserves_order() {
        let h = fewcol::construct::certificate_catalogue("fano").unwrap();
        let json = to_json(&HypergraphFile::from(&h));
        let back: Hypergraph = from_json::<HypergraphFile>(&json).unwrap().try_into().unwrap();
        assert_eq!(back, h);
        assert_eq!(back.edges(), h.edges());
    }

    #[test]
    fn truncated_json_names_missing_field() {
        let err = from_json::<ColouringFile>(r#"{"n":2,"r":1}"#).unwrap_err();
        assert!(err.to_string().contains("colours"), "{err}");
    }

    #[test]
    fn record_round_trip() {
        let rec = fewcol::oracle::exact_value(4, 2, 1, ValKind::F).unwrap();
        let json = to_json(&RecordFile::from(&rec));
        let back: ExactRecord = from_json::<RecordFile>(&json).unwrap().try_into().unwrap();
        assert_eq!(back, rec);
    }
}
