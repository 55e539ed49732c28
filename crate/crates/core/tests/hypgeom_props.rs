use graphvol_core::hypgeom::{
    corner_faces, corner_tetrahedron, on_surface, slice_points, surface_angle, verify_theta, GeodesicSurface, Vec3,
};
use proptest::prelude::*;

fn signed_permutation(perm: [usize; 3], signs: [bool; 3]) -> impl Fn(Vec3) -> Vec3 {
    move |v: Vec3| {
        let a = v.to_array();
        let s = |i: usize| if signs[i] { -a[perm[i]] } else { a[perm[i]] };
        Vec3::from_array([s(0), s(1), s(2)])
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[test]
fn derivation_values() {
    let r = verify_theta().unwrap();
    let theta = 2f64.sqrt().atan();
    assert!((r.angle - theta).abs() < 1e-12);
    assert!((r.chord_angle - theta).abs() < 1e-12);
    assert!((r.chord - 2.0 / 3f64.sqrt()).abs() < 1e-12);
    assert_eq!(r.memberships.len(), 6);
    assert!(r.memberships.iter().all(|m| m.2));
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

proptest! {
    #[test]
    fn angle_invariant_under_signed_permutations(p in 0usize..6, signs in any::<[bool; 3]>()) {
        let f = signed_permutation(PERMS[p], signs);
        let (sphere, plane) = corner_faces();
        let (s2, p2) = (sphere.transform(&f), plane.transform(&f));
        let base = surface_angle(&sphere, &plane).unwrap();
        prop_assert!((surface_angle(&s2, &p2).unwrap() - base).abs() < 1e-14);
        let (u1, u2) = slice_points();
        for u in [f(u1), f(u2)] {
            prop_assert!(on_surface(u, &s2) && on_surface(u, &p2));
        }
        if let GeodesicSurface::Sphere { center, radius } = s2 {
            prop_assert!((center.norm_sq() - radius * radius - 1.0).abs() < 1e-12);
        }
    }
}
