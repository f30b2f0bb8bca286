//! Chart coordinates for plotting fans.

use cambrian_core::fan::{self, PointKind, SimplicialCone};
use cambrian_core::{Error, RootSystem, Vector, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `{⟨x,δ⟩ = 1}`.
    V1,
    /// `{⟨x,δ⟩ = −1}`.
    VMinus1,
    /// `δ⊥`.
    V0,
    /// Unit sphere, then stereographic projection.
    Sphere,
    /// Angle of each ray in the plane, for rank two.
    Angle,
}

impl Chart {
    pub fn name(self) -> &'static str {
        match self {
            Chart::V1 => "v1",
            Chart::VMinus1 => "v-1",
            Chart::V0 => "v0",
            Chart::Sphere => "sphere",
            Chart::Angle => "angle",
        }
    }

    pub fn parse(s: &str) -> Option<Chart> {
        [Chart::V1, Chart::VMinus1, Chart::V0, Chart::Sphere, Chart::Angle].into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub chart: Chart,
    pub cone: String,
    pub provenance: String,
    pub kind: PointKind,
    pub coords: Vec<f64>,
}

fn to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Euclidean vector of the functional `⟨·,δ⟩` in weight coordinates.
fn delta_functional(sys: &RootSystem, delta: &[i64]) -> Vec<f64> {
    delta.iter().zip(sys.symmetrizer()).map(|(&a, &d)| (a * d) as f64).collect()
}

/// Default pole: the direction on which `⟨·,δ⟩` is most negative, or
/// `−(1,…,1)` without `δ`.
pub fn default_pole(sys: &RootSystem, delta: Option<&[i64]>) -> Vec<f64> {
    let v = match delta {
        Some(d) => delta_functional(sys, d),
        None => vec![1.0; sys.rank()],
    };
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| -x / norm).collect()
}

/// Orthonormal basis of the plane orthogonal to `pole` in `R³`.
fn tangent_basis(pole: &[f64]) -> [Vec<f64>; 2] {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for i in 0..3 {
        let mut v = [0.0; 3];
        v[i] = 1.0;
        for b in std::iter::once(pole.to_vec()).chain(out.iter().cloned()) {
            let d: f64 = v.iter().zip(&b).map(|(x, y)| x * y).sum();
            v.iter_mut().zip(&b).for_each(|(x, y)| *x -= d * y);
        }
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-9 && out.len() < 2 {
            out.push(v.iter().map(|x| x / n).collect());
        }
    }
    [out[0].clone(), out[1].clone()]
}

/// Stereographic projection of the normalized ray from `pole`.
pub fn stereographic(ray: &[i64], pole: &[f64]) -> Result<[f64; 2], Error> {
    let norm = ray.iter().map(|&x| (x * x) as f64).sum::<f64>().sqrt();
    let p: Vec<f64> = ray.iter().map(|&x| x as f64 / norm).collect();
    let along: f64 = p.iter().zip(pole).map(|(a, b)| a * b).sum();
    if (1.0 - along).abs() < 1e-12 {
        return Err(Error::ChartPole);
    }
    let [e1, e2] = tangent_basis(pole);
    let u: f64 = p.iter().zip(&e1).map(|(a, b)| a * b).sum();
    let v: f64 = p.iter().zip(&e2).map(|(a, b)| a * b).sum();
    Ok([u / (1.0 - along), v / (1.0 - along)])
}

/// Image of the antipodal ray: inversion through the unit circle composed
/// with the point reflection.
pub fn antipode(p: [f64; 2]) -> [f64; 2] {
    let r2 = p[0] * p[0] + p[1] * p[1];
    [-p[0] / r2, -p[1] / r2]
}

/// Slice coordinates: the `S₀` weight coordinates of the point.
fn slice_coords(point: &[Q], s0: &[usize]) -> Vec<f64> {
    s0.iter().map(|&i| to_f64(&point[i])).collect()
}

pub struct Projection<'a> {
    pub sys: &'a RootSystem,
    pub delta: Option<&'a [i64]>,
    pub s0: Option<&'a [usize]>,
    pub pole: Vec<f64>,
}

impl Projection<'_> {
    pub fn rows(&self, chart: Chart, name: &str, provenance: &str, cone: &SimplicialCone) -> Result<Vec<Row>, Error> {
        let row = |kind, coords| Row { chart, cone: name.to_string(), provenance: provenance.to_string(), kind, coords };
        match chart {
            Chart::V1 | Chart::VMinus1 | Chart::V0 => {
                let (delta, s0) = (self.delta.ok_or(Error::NotAffine)?, self.s0.ok_or(Error::NotAffine)?);
                let level = match chart {
                    Chart::V1 => 1,
                    Chart::VMinus1 => -1,
                    _ => 0,
                };
                Ok(fan::slice(self.sys, delta, cone, level)
                    .into_iter()
                    .map(|(kind, p)| row(kind, slice_coords(&p, s0)))
                    .collect())
            }
            Chart::Sphere => {
                if self.sys.rank() != 3 {
                    return Err(Error::IndexOutOfRange(self.sys.rank()));
                }
                cone.rays
                    .iter()
                    .map(|r| stereographic(r, &self.pole).map(|p| row(PointKind::Point, p.to_vec())))
                    .collect()
            }
            Chart::Angle => {
                if self.sys.rank() != 2 {
                    return Err(Error::IndexOutOfRange(self.sys.rank()));
                }
                Ok(cone.rays.iter().map(|r| row(PointKind::Direction, vec![(r[1] as f64).atan2(r[0] as f64)])).collect())
            }
        }
    }

    /// Rays of the region given by `rays` written as a direction list in `δ⊥`.
    pub fn region(&self, name: &str, rays: &[Vector]) -> Result<Vec<Row>, Error> {
        let s0 = self.s0.ok_or(Error::NotAffine)?;
        Ok(rays
            .iter()
            .map(|r| Row {
                chart: Chart::V0,
                cone: name.to_string(),
                provenance: "complement".to_string(),
                kind: PointKind::Direction,
                coords: s0.iter().map(|&i| r[i] as f64).collect(),
            })
            .collect())
    }
}

pub fn to_csv(rows: &[Row]) -> anyhow::Result<String> {
    let width = rows.iter().map(|r| r.coords.len()).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    if !rows.is_empty() {
        let mut header = vec!["chart".to_string(), "cone".into(), "provenance".into(), "kind".into()];
        header.extend((0..width).map(|i| format!("x{i}")));
        w.write_record(&header)?;
    }
    for r in rows {
        let mut rec = vec![r.chart.name().to_string(), r.cone.clone(), r.provenance.clone()];
        rec.push(match r.kind {
            PointKind::Point => "point".into(),
            PointKind::Direction => "direction".into(),
        });
        rec.extend(r.coords.iter().map(|x| format!("{x:.9}")));
        rec.resize(4 + width, String::new());
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antipodal_rays_map_to_antipodes() {
        let pole = [0.0, 0.0, -1.0];
        for r in [[1, 2, 0], [3, -1, 2], [0, 1, 1]] {
            let p = stereographic(&r, &pole).unwrap();
            let q = stereographic(&[-r[0], -r[1], -r[2]], &pole).unwrap();
            let a = antipode(p);
            assert!((a[0] - q[0]).abs() < 1e-9 && (a[1] - q[1]).abs() < 1e-9);
        }
        assert_eq!(stereographic(&[0, 0, -4], &pole), Err(Error::ChartPole));
    }
}
