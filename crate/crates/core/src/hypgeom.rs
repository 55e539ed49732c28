//! Euclidean computations in the Poincaré ball that recover the dihedral
//! angle `θ = arctan(√2)` of the cuboctahedron's corner tetrahedra.
//!
//! Geodesic planes of the ball model are Euclidean planes through the ball
//! or spheres meeting the unit sphere orthogonally. Angles between them are
//! Euclidean angles, reported on the acute branch.

use std::ops::{Add, Mul, Sub};

use thiserror::Error;

/// Residual allowed by [`on_surface`].
pub const MEMBERSHIP_TOL: f64 = 1e-10;
/// Allowed defect in `|c|² = r² + 1` for geodesic spheres.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Slack on `|p|² ≤ 1` for ball points.
pub const BALL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("point {0:?} lies outside the closed unit ball")]
    OutsideBall(Vec3),
    #[error("plane normal must be non-zero")]
    ZeroNormal,
    #[error("plane offset {0} does not meet the open ball")]
    PlaneMissesBall(f64),
    #[error("sphere (|c|² = {center_sq}, r² = {radius_sq}) is not orthogonal to the unit sphere")]
    NotOrthogonal { center_sq: f64, radius_sq: f64 },
    #[error("sphere radius must be positive, got {0}")]
    BadRadius(f64),
    #[error("surfaces do not intersect")]
    NonIntersecting,
    #[error("point {point} is not on {surface}")]
    Membership { point: &'static str, surface: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// A point of the closed unit ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BallPoint(Vec3);

impl BallPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, GeomError> {
        let p = Vec3::new(x, y, z);
        if p.norm_sq() > 1.0 + BALL_TOL {
            return Err(GeomError::OutsideBall(p));
        }
        Ok(BallPoint(p))
    }

    pub fn coords(self) -> Vec3 {
        self.0
    }
}

impl From<BallPoint> for Vec3 {
    fn from(p: BallPoint) -> Vec3 {
        p.0
    }
}

/// A totally geodesic plane of the Poincaré ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeodesicSurface {
    /// `normal · p = offset`, with a unit normal.
    Plane {
        normal: Vec3,
        offset: f64,
    },
    Sphere {
        center: Vec3,
        radius: f64,
    },
}

impl GeodesicSurface {
    /// Plane `n · p = d`; `n` need not be normalised.
    pub fn plane(normal: Vec3, offset: f64) -> Result<Self, GeomError> {
        let len = normal.norm();
        if len == 0.0 || !len.is_finite() {
            return Err(GeomError::ZeroNormal);
        }
        let offset = offset / len;
        if offset.is_nan() || offset.abs() >= 1.0 {
            return Err(GeomError::PlaneMissesBall(offset));
        }
        Ok(GeodesicSurface::Plane {
            normal: normal * (1.0 / len),
            offset,
        })
    }

    pub fn sphere(center: Vec3, radius: f64) -> Result<Self, GeomError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeomError::BadRadius(radius));
        }
        let center_sq = center.norm_sq();
        let radius_sq = radius * radius;
        if (center_sq - radius_sq - 1.0).abs() > ORTHOGONALITY_TOL {
            return Err(GeomError::NotOrthogonal { center_sq, radius_sq });
        }
        Ok(GeodesicSurface::Sphere { center, radius })
    }

    /// Signed residual of the defining equation at `p`.
    pub fn residual(&self, p: Vec3) -> f64 {
        match *self {
            GeodesicSurface::Plane { normal, offset } => normal.dot(p) - offset,
            GeodesicSurface::Sphere { center, radius } => (p - center).norm_sq() - radius * radius,
        }
    }

    /// Apply a linear isometry of R³ given by its action on coordinates.
    pub fn transform(&self, f: impl Fn(Vec3) -> Vec3) -> Self {
        match *self {
            GeodesicSurface::Plane { normal, offset } => GeodesicSurface::Plane {
                normal: f(normal),
                offset,
            },
            GeodesicSurface::Sphere { center, radius } => GeodesicSurface::Sphere {
                center: f(center),
                radius,
            },
        }
    }
}

/// Whether `p` satisfies the surface equation. Points outside the ball are
/// accepted: this is raw Euclidean membership.
pub fn on_surface(p: Vec3, s: &GeodesicSurface) -> bool {
    s.residual(p).abs() <= MEMBERSHIP_TOL
}

pub fn euclid_dist(p: Vec3, q: Vec3) -> f64 {
    (p - q).norm()
}

/// Acute intersection angle of two geodesic surfaces.
pub fn surface_angle(s1: &GeodesicSurface, s2: &GeodesicSurface) -> Result<f64, GeomError> {
    use GeodesicSurface::{Plane, Sphere};
    let cosine = match (*s1, *s2) {
        (Plane { normal: n1, offset: d1 }, Plane { normal: n2, offset: d2 }) => {
            let c = n1.dot(n2).abs();
            if c >= 1.0 - 1e-15 {
                let same = (n1.dot(n2).signum() * d1 - d2).abs() <= MEMBERSHIP_TOL;
                if !same {
                    return Err(GeomError::NonIntersecting);
                }
            }
            c
        }
        (Plane { normal, offset }, Sphere { center, radius })
        | (Sphere { center, radius }, Plane { normal, offset }) => {
            let dist = (normal.dot(center) - offset).abs();
            if dist > radius {
                return Err(GeomError::NonIntersecting);
            }
            dist / radius
        }
        (Sphere { center: c1, radius: r1 }, Sphere { center: c2, radius: r2 }) => {
            let d_sq = (c1 - c2).norm_sq();
            let d = d_sq.sqrt();
            if d > r1 + r2 || d < (r1 - r2).abs() {
                return Err(GeomError::NonIntersecting);
            }
            (r1 * r1 + r2 * r2 - d_sq).abs() / (2.0 * r1 * r2)
        }
    };
    Ok(cosine.clamp(0.0, 1.0).acos())
}

/// Outcome of the dihedral-angle derivation.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaDerivation {
    /// Angle between the two face surfaces.
    pub angle: f64,
    /// The same angle from the chord `|u₁u₂|` by Pythagoras in the slice
    /// `x = z`.
    pub chord_angle: f64,
    pub chord: f64,
    pub memberships: Vec<(&'static str, &'static str, bool)>,
}

/// Ideal vertices of the corner tetrahedron `v₁v₂v₃v₄`.
pub fn corner_tetrahedron() -> [Vec3; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [
        Vec3::new(0.0, s, s),
        Vec3::new(s, 0.0, s),
        Vec3::new(s, s, 0.0),
        Vec3::new(s, 0.0, -s),
    ]
}

/// Sphere through `v₁v₂v₃` and plane through `v₁v₃v₄`.
pub fn corner_faces() -> (GeodesicSurface, GeodesicSurface) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let sphere = GeodesicSurface::sphere(Vec3::new(s, s, s), s).expect("orthogonal by construction");
    let plane = GeodesicSurface::plane(Vec3::new(1.0, -1.0, 1.0), 0.0).expect("through the origin");
    (sphere, plane)
}

/// The two points where the faces meet the slicing plane `x = z`.
pub fn slice_points() -> (Vec3, Vec3) {
    let r2 = std::f64::consts::SQRT_2;
    let u1 = Vec3::new(1.0 / (3.0 * r2), r2 / 3.0, 1.0 / (3.0 * r2));
    let u2 = Vec3::new(1.0 / r2, r2, 1.0 / r2);
    (u1, u2)
}

/// Rebuild the two face surfaces, confirm `u₁`, `u₂` lie on both and on the
/// slicing plane, and return the angle between the faces.
pub fn verify_theta() -> Result<ThetaDerivation, GeomError> {
    let (sphere, plane) = corner_faces();
    let slice = GeodesicSurface::plane(Vec3::new(1.0, 0.0, -1.0), 0.0)?;
    let (u1, u2) = slice_points();

    let mut memberships = Vec::new();
    for (pname, p) in [("u1", u1), ("u2", u2)] {
        for (sname, s) in [("sphere", &sphere), ("plane", &plane), ("slice", &slice)] {
            memberships.push((pname, sname, on_surface(p, s)));
        }
    }
    if let Some(&(point, surface, _)) = memberships.iter().find(|m| !m.2) {
        return Err(GeomError::Membership { point, surface });
    }
    for v in corner_tetrahedron() {
        debug_assert!((v.norm_sq() - 1.0).abs() < 1e-15);
    }

    let angle = surface_angle(&sphere, &plane)?;
    // u₁u₂ is a chord of the sphere's great circle in the slice; its half
    // length a and the distance h from the centre give tan θ = a / h.
    let chord = euclid_dist(u1, u2);
    let GeodesicSurface::Sphere { radius, .. } = sphere else {
        unreachable!()
    };
    let half = chord / 2.0;
    let chord_angle = half.atan2((radius * radius - half * half).sqrt());
    Ok(ThetaDerivation {
        angle,
        chord_angle,
        chord,
        memberships,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, SQRT_2};

    #[test]
    fn slice_points_on_faces() {
        let (sphere, plane) = corner_faces();
        let (u1, u2) = slice_points();
        assert!(on_surface(u1, &plane) && on_surface(u1, &sphere));
        assert!(on_surface(u2, &plane) && on_surface(u2, &sphere));
        assert!(on_surface(Vec3::ZERO, &plane));
        assert!(BallPoint::new(u2.x, u2.y, u2.z).is_err());
        assert!(BallPoint::new(u1.x, u1.y, u1.z).is_ok());
    }

    #[test]
    fn corner_vertices_lie_on_their_faces() {
        let (sphere, plane) = corner_faces();
        let [v1, v2, v3, v4] = corner_tetrahedron();
        for v in [v1, v2, v3] {
            assert!(on_surface(v, &sphere));
        }
        for v in [v1, v3, v4] {
            assert!(on_surface(v, &plane));
        }
    }

    #[test]
    fn face_angle_is_arctan_sqrt2() {
        let (sphere, plane) = corner_faces();
        let a = surface_angle(&plane, &sphere).unwrap();
        assert!((a - SQRT_2.atan()).abs() < 1e-12);
        assert!((a.cos() - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn plane_pairs() {
        let p = GeodesicSurface::plane(Vec3::new(1.0, 0.0, 0.0), 0.0).unwrap();
        let q = GeodesicSurface::plane(Vec3::new(0.0, 1.0, 0.0), 0.0).unwrap();
        assert!((surface_angle(&p, &q).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(surface_angle(&p, &p).unwrap(), 0.0);
        let shifted = GeodesicSurface::plane(Vec3::new(1.0, 0.0, 0.0), 0.5).unwrap();
        assert_eq!(surface_angle(&p, &shifted), Err(GeomError::NonIntersecting));
        let flipped = GeodesicSurface::plane(Vec3::new(-2.0, 0.0, 0.0), 0.0).unwrap();
        assert_eq!(surface_angle(&p, &flipped).unwrap(), 0.0);
    }

    #[test]
    fn sphere_pairs() {
        let s = FRAC_1_SQRT_2;
        let a = GeodesicSurface::sphere(Vec3::new(s, s, s), s).unwrap();
        let b = GeodesicSurface::sphere(Vec3::new(-s, -s, -s), s).unwrap();
        assert_eq!(surface_angle(&a, &b), Err(GeomError::NonIntersecting));
        assert!(surface_angle(&a, &a).unwrap().abs() < 1e-7);
        let c = GeodesicSurface::sphere(Vec3::new(s, s, -s), s).unwrap();
        // |c1 - c2|² = 2, r1² + r2² = 1: cos = 1 / 1 → tangent.
        assert!(surface_angle(&a, &c).is_ok());
    }

    #[test]
    fn constructors_validate() {
        assert!(GeodesicSurface::sphere(Vec3::new(1.0, 0.0, 0.0), 0.5).is_err());
        assert!(GeodesicSurface::sphere(Vec3::ZERO, -1.0).is_err());
        assert_eq!(GeodesicSurface::plane(Vec3::ZERO, 0.0), Err(GeomError::ZeroNormal));
        assert!(GeodesicSurface::plane(Vec3::new(0.0, 0.0, 2.0), 2.0).is_err());
    }

    #[test]
    fn distances() {
        let (u1, u2) = slice_points();
        assert!((euclid_dist(u1, u2) - 2.0 / 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(euclid_dist(u1, u1), 0.0);
        assert_eq!(euclid_dist(Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0)), 1.0);
    }

    #[test]
    fn derivation_matches_arctan() {
        let d = verify_theta().unwrap();
        assert!((d.angle - 0.9553166181245093).abs() < 1e-12);
        assert!((d.chord_angle - d.angle).abs() < 1e-12);
        assert!(d.memberships.iter().all(|m| m.2));
        assert_eq!(d.memberships.len(), 6);
    }
}
