//! Published volume constants, stored as the printed decimal strings.

use crate::format::sig15;
use crate::hypgeom;
use crate::lobachevsky::{self, NumericsError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeConstant {
    pub name: &'static str,
    pub digits: &'static str,
    pub provenance: &'static str,
}

impl VolumeConstant {
    pub fn value(&self) -> f64 {
        self.digits.parse().expect("constant digits are a valid decimal")
    }
}

/// Volume of the ideal right-angled cuboctahedron, the supremum of proper
/// generalized octahedron volumes.
pub const QCUBOCT: VolumeConstant = VolumeConstant {
    name: "QCUBOCT",
    digits: "12.04609204009437764726837862923",
    provenance:
        "vol(Q_cuboct), 8Λ(π/2-θ)+16Λ(θ)-6Λ(2θ)+Λ(4θ) at θ=arctan(√2), printed as 12.04609204009437764726837862923",
};

/// Volume of the maximal 4-bipyramid with truncated apexes.
pub const B4TRUNC: VolumeConstant = VolumeConstant {
    name: "B4TRUNC",
    digits: "5.07470803204826812510601277",
    provenance:
        "vol(B4trunc), maximal-volume 4-bipyramid with truncated apexes, printed as 5.07470803204826812510601277",
};

pub fn cuboct_volume() -> &'static VolumeConstant {
    &QCUBOCT
}

pub fn b4trunc_volume() -> &'static VolumeConstant {
    &B4TRUNC
}

/// Tolerance for comparing computed values against the printed digits.
pub const CHECK_TOL: f64 = 1e-12;

/// One line of the constants audit.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantCheck {
    pub name: &'static str,
    pub value: f64,
    pub provenance: String,
    pub checks: Vec<(&'static str, bool)>,
}

impl ConstantCheck {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    /// `CONST <name> <value> <PASS|FAIL> provenance="…" checks=…`
    pub fn line(&self) -> String {
        let checks: Vec<String> = self
            .checks
            .iter()
            .map(|(n, ok)| format!("{n}:{}", if *ok { "ok" } else { "bad" }))
            .collect();
        format!(
            "CONST {} {} {} provenance=\"{}\" checks={}",
            self.name,
            sig15(self.value),
            if self.pass() { "PASS" } else { "FAIL" },
            self.provenance,
            checks.join(",")
        )
    }
}

/// Recompute every published constant and cross-check it.
pub fn audit(tol: f64) -> Result<Vec<ConstantCheck>, NumericsError> {
    let close = |a: f64, b: f64| (a - b).abs() <= CHECK_TOL;
    let closed = lobachevsky::cuboct_volume_closed_form(tol)?;
    let unfolded = lobachevsky::cuboct_volume_unfolded(tol)?;
    let decomposed = lobachevsky::cuboct_volume_by_decomposition(tol)?;
    let ten_lambda = 10.0 * lobachevsky::lobachevsky(std::f64::consts::PI / 6.0, tol)?;
    let octahedron = lobachevsky::regular_ideal_octahedron_volume(tol)?;
    let theta = lobachevsky::cuboct_theta();
    let derived_theta = hypgeom::verify_theta().map(|r| r.angle);

    Ok(vec![
        ConstantCheck {
            name: QCUBOCT.name,
            value: QCUBOCT.value(),
            provenance: QCUBOCT.provenance.to_string(),
            checks: vec![
                ("closed-form", close(closed, QCUBOCT.value())),
                ("unfolded-form", close(unfolded, closed)),
                ("13-tetrahedra", close(decomposed, closed)),
            ],
        },
        ConstantCheck {
            name: B4TRUNC.name,
            value: B4TRUNC.value(),
            provenance: B4TRUNC.provenance.to_string(),
            checks: vec![
                ("10Λ(π/6)", close(ten_lambda, B4TRUNC.value())),
                ("exceeds-regular-octahedron", B4TRUNC.value() > octahedron),
                ("below-QCUBOCT", B4TRUNC.value() < QCUBOCT.value()),
            ],
        },
        ConstantCheck {
            name: "THETA",
            value: theta,
            provenance: "arctan(√2), cuboctahedron tetrahedron dihedral angle".to_string(),
            checks: vec![("ball-model-derivation", derived_theta.is_ok_and(|a| close(a, theta)))],
        },
        ConstantCheck {
            name: "VOCT",
            value: octahedron,
            provenance: "8Λ(π/4), regular ideal octahedron (computed)".to_string(),
            checks: vec![("four-tetrahedra", {
                let quarter = lobachevsky::ideal_tet_volume(
                    &lobachevsky::TetAngles::new(
                        std::f64::consts::FRAC_PI_2,
                        std::f64::consts::FRAC_PI_4,
                        std::f64::consts::FRAC_PI_4,
                    )?,
                    tol,
                )?;
                close(4.0 * quarter, octahedron)
            })],
        },
    ])
}
