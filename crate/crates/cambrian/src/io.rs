//! File formats: matrix input, fan JSON and rational strings.

use anyhow::{anyhow, bail, Context};
use cambrian_core::fan::{Provenance, SimplicialCone};
use cambrian_core::{ExchangeMatrix, Vector, Q};
use serde::{Deserialize, Serialize};

/// `{"n": 2, "B": [[0, 2], [-2, 0]]}`: row `i`, column `j` holds `b_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
}

pub fn parse_matrix(text: &str) -> anyhow::Result<ExchangeMatrix> {
    let m: MatrixFile = serde_json::from_str(text).map_err(|e| anyhow!("invalid matrix JSON at line {} column {}: {e}", e.line(), e.column()))?;
    if m.b.len() != m.n || m.b.iter().any(|r| r.len() != m.n) {
        bail!("\"B\" is not {n}x{n}", n = m.n);
    }
    ExchangeMatrix::validate(m.b).context("invalid exchange matrix")
}

pub fn rational(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> anyhow::Result<Q> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let (p, q): (i128, i128) = (p.trim().parse()?, q.trim().parse()?);
    if q == 0 {
        bail!("zero denominator in {s:?}");
    }
    Ok(Q::new(p, q))
}

pub fn rationals(v: &[Q]) -> Vec<String> {
    v.iter().map(rational).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProvenanceTag {
    FromC,
    FromAntiCinv,
    Both,
}

impl From<Provenance> for ProvenanceTag {
    fn from(p: Provenance) -> Self {
        match p {
            Provenance::FromC => ProvenanceTag::FromC,
            Provenance::FromAntiCinv => ProvenanceTag::FromAntiCinv,
            Provenance::Both => ProvenanceTag::Both,
        }
    }
}

impl From<ProvenanceTag> for Provenance {
    fn from(p: ProvenanceTag) -> Self {
        match p {
            ProvenanceTag::FromC => Provenance::FromC,
            ProvenanceTag::FromAntiCinv => Provenance::FromAntiCinv,
            ProvenanceTag::Both => Provenance::Both,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRecord {
    pub rays: Vec<Vector>,
    pub normals: Vec<Vector>,
    pub provenance: ProvenanceTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanFile {
    pub cones: Vec<ConeRecord>,
}

impl FanFile {
    pub fn from_cones(cones: &[SimplicialCone]) -> Self {
        let cones = cones
            .iter()
            .map(|c| ConeRecord { rays: c.rays.clone(), normals: c.normals.clone(), provenance: c.provenance.into() })
            .collect();
        FanFile { cones }
    }

    pub fn to_cones(&self) -> Vec<SimplicialCone> {
        self.cones
            .iter()
            .map(|c| SimplicialCone { rays: c.rays.clone(), normals: c.normals.clone(), provenance: c.provenance.into() })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip() {
        for (p, q) in [(3, 4), (-4, 1), (0, 1), (6, -4)] {
            let x = Q::new(p, q);
            assert_eq!(parse_rational(&rational(&x)).unwrap(), x);
        }
        assert_eq!(rational(&Q::new(6, -4)), "-3/2");
        assert_eq!(parse_rational("7").unwrap(), Q::from_integer(7));
    }

    #[test]
    fn matrix_errors_carry_positions() {
        let err = parse_matrix("{\"n\": 2,\n \"B\": [[0, 1], [-1 0]]}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(parse_matrix("{\"n\": 2, \"B\": [[0, 1], [1, 0]]}").is_err());
        assert!(parse_matrix("{\"n\": 3, \"B\": [[0, 1], [-1, 0]]}").is_err());
    }
}
