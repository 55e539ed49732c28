//! Volume bounds for spatial-graph exteriors.
//!
//! Upper bounds multiply the crossing count of the supplied diagram by the
//! maximal volume of a generalized octahedron. The diagram count is at
//! least the crossing number, so the bound stays valid for non-minimal
//! diagrams. Every upper bound is conditional on the exterior being
//! tg-hyperbolic, which is not decidable here; the crossing-free cycle test
//! is the one necessary condition that is checked.

use std::fmt;

use thiserror::Error;

use crate::constants::{VolumeConstant, B4TRUNC, QCUBOCT};
use crate::diagram::{AmbientSpace, GraphDiagram};
use crate::format::sig15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `vol < value`
    StrictUpper,
    /// `vol ≥ value`
    Lower,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::StrictUpper => "strict-upper",
            BoundKind::Lower => "lower",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("ambient is {found}; this bound needs {expected}")]
    WrongAmbient {
        expected: &'static str,
        found: AmbientSpace,
    },
    #[error("surface has Euler characteristic {chi}; the thickened-surface bound needs χ < 1")]
    EulerCharacteristic { chi: i64 },
    #[error("diagram has no crossings, so it contains a crossing-free cycle and its exterior is not hyperbolic")]
    NoCrossings,
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeBoundReport {
    pub kind: BoundKind,
    pub value: f64,
    /// Crossings of the diagram used; `None` for the doubling bound.
    pub crossings: Option<usize>,
    pub ambient: Option<AmbientSpace>,
    pub constant: Option<&'static VolumeConstant>,
    pub warnings: Vec<String>,
    /// Hypotheses the bound relies on but does not check.
    pub assumptions: Vec<&'static str>,
}

impl VolumeBoundReport {
    /// `BOUND <kind> <value> crossings=<c> constant=<name> [WARN ...]`
    pub fn line(&self) -> String {
        let mut s = format!(
            "BOUND {} {} crossings={} constant={}",
            self.kind.as_str(),
            sig15(self.value),
            self.crossings.map_or_else(|| "n/a".to_string(), |c| c.to_string()),
            self.constant.map_or("none", |c| c.name)
        );
        for w in &self.warnings {
            s.push_str(" WARN ");
            s.push_str(w);
        }
        s
    }
}

impl fmt::Display for VolumeBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

const TG_HYPERBOLIC: &str = "exterior is tg-hyperbolic";

fn upper(d: &GraphDiagram, constant: &'static VolumeConstant) -> Result<VolumeBoundReport, BoundError> {
    let c = d.crossing_count();
    if c == 0 {
        return Err(BoundError::NoCrossings);
    }
    let warnings = d
        .find_crossing_free_cycle()
        .map(|edges| {
            vec![format!(
                "crossing-free cycle {}: exterior not hyperbolic, bound vacuous",
                edges.join(",")
            )]
        })
        .unwrap_or_default();
    Ok(VolumeBoundReport {
        kind: BoundKind::StrictUpper,
        value: c as f64 * constant.value(),
        crossings: Some(c),
        ambient: Some(d.ambient()),
        constant: Some(constant),
        warnings,
        assumptions: vec![TG_HYPERBOLIC],
    })
}

/// `vol < c · vol(Q_cuboct)` for a diagram on a surface with `χ < 1`.
pub fn upper_bound_thickened(d: &GraphDiagram) -> Result<VolumeBoundReport, BoundError> {
    match d.ambient().euler_characteristic() {
        None => Err(BoundError::WrongAmbient {
            expected: "a thickened surface",
            found: d.ambient(),
        }),
        Some(chi) if chi >= 1 => Err(BoundError::EulerCharacteristic { chi }),
        Some(_) => upper(d, &QCUBOCT),
    }
}

/// `vol < c · vol(B4trunc)` for a diagram in S³.
pub fn upper_bound_s3(d: &GraphDiagram) -> Result<VolumeBoundReport, BoundError> {
    match d.ambient() {
        AmbientSpace::S3 => upper(d, &B4TRUNC),
        found => Err(BoundError::WrongAmbient { expected: "S3", found }),
    }
}

/// The bound for whichever ambient the diagram declares.
pub fn upper_bound(d: &GraphDiagram) -> Result<VolumeBoundReport, BoundError> {
    match d.ambient() {
        AmbientSpace::S3 => upper_bound_s3(d),
        AmbientSpace::Thickened { .. } => upper_bound_thickened(d),
    }
}

/// `vol(M) ≥ ½ vol(D(M∖F)) + vol(F×I ∖ G)`, from externally supplied volumes.
pub fn doubling_lower_bound(vol_double_cut: f64, vol_thickened: f64) -> Result<VolumeBoundReport, BoundError> {
    for (name, v) in [("vol_double_cut", vol_double_cut), ("vol_thickened", vol_thickened)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(BoundError::NonPositive {
                name,
                value: v.to_string(),
            });
        }
    }
    Ok(VolumeBoundReport {
        kind: BoundKind::Lower,
        value: 0.5 * vol_double_cut + vol_thickened,
        crossings: None,
        ambient: None,
        constant: None,
        warnings: Vec::new(),
        assumptions: vec!["both input manifolds are tg-hyperbolic", "inputs are their volumes"],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse;

    fn loops(ambient: &str, c: usize) -> GraphDiagram {
        // A single closed curve with c kinks.
        let mut text = format!("ambient {ambient}\nedge k loop\n");
        let mut passes = String::new();
        for i in 0..c {
            text.push_str(&format!("crossing x{i}\n"));
            passes.push_str(&format!(" x{i}:over x{i}:under"));
        }
        if c > 0 {
            text.push_str(&format!("edge k passes{passes}\n"));
        }
        parse(&text).unwrap()
    }

    #[test]
    fn s3_trefoil_value() {
        let r = upper_bound_s3(&loops("s3", 3)).unwrap();
        assert_eq!(
            r.line(),
            "BOUND strict-upper 15.2241240961448 crossings=3 constant=B4TRUNC"
        );
        assert!(upper_bound_thickened(&loops("s3", 3)).is_err());
    }

    #[test]
    fn thickened_value_and_hypotheses() {
        let r = upper_bound_thickened(&loops("thickened genus=2 boundary=0", 7)).unwrap();
        assert_eq!(sig15(r.value), "84.3226442806606");
        assert_eq!(r.constant.unwrap().name, "QCUBOCT");
        for (g, b) in [(0, 1), (0, 0)] {
            let d = loops(&format!("thickened genus={g} boundary={b}"), 2);
            assert!(matches!(
                upper_bound_thickened(&d),
                Err(BoundError::EulerCharacteristic { .. })
            ));
        }
        let annulus = loops("thickened genus=0 boundary=2", 2);
        assert!(upper_bound_thickened(&annulus).is_ok());
        assert!(matches!(upper_bound_s3(&annulus), Err(BoundError::WrongAmbient { .. })));
    }

    #[test]
    fn zero_crossings_rejected() {
        assert_eq!(upper_bound_s3(&loops("s3", 0)), Err(BoundError::NoCrossings));
    }

    #[test]
    fn crossing_free_cycle_warns() {
        let d = parse(
            "ambient thickened genus=2 boundary=0\ncrossing c\nvertex p e1 e2 e3\nvertex q e3 e2 e1\n\
             edge e1 from p.0 to q.2\nedge e1 passes c:over c:under\nedge e2 from p.1 to q.1\nedge e3 from p.2 to q.0\n",
        )
        .unwrap();
        let r = upper_bound_thickened(&d).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.line().contains(" WARN crossing-free cycle"));
    }

    #[test]
    fn doubling() {
        let r = doubling_lower_bound(10.0, 3.0).unwrap();
        assert_eq!(r.value, 8.0);
        assert_eq!(r.line(), "BOUND lower 8 crossings=n/a constant=none");
        assert!(doubling_lower_bound(0.0, 3.0).is_err());
        assert!(doubling_lower_bound(1.0, f64::NAN).is_err());
        assert!(doubling_lower_bound(f64::INFINITY, 1.0).is_err());
    }
}
