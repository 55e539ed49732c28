//! Hyperbolic volume bounds for spatial graphs, and machine checks of the
//! supporting numerics, geometry and free-group computations.

pub mod bounds;
pub mod constants;
pub mod diagram;
pub mod format;
pub mod freegroup;
pub mod hypgeom;
pub mod lobachevsky;
pub mod octdecomp;

pub use bounds::{
    doubling_lower_bound, upper_bound, upper_bound_s3, upper_bound_thickened, BoundError, BoundKind, VolumeBoundReport,
};
pub use constants::{audit, b4trunc_volume, cuboct_volume, ConstantCheck, VolumeConstant, B4TRUNC, QCUBOCT};
pub use diagram::{
    parse as parse_diagram, AmbientSpace, DiagramError, DiagramReport, GraphDiagram, Obstruction, VertexType,
};
pub use format::sig15;
pub use freegroup::{
    claim_suite, conjugate_test, fold, rank, verify_injectivity, Alphabet, ClaimReport, FreeGroupError, SubgroupGraph,
    Word,
};
pub use hypgeom::{verify_theta, GeomError, ThetaDerivation};
pub use lobachevsky::{
    cuboct_volume_by_decomposition, cuboct_volume_closed_form, ideal_tet_volume, lobachevsky, NumericsError, TetAngles,
    DEFAULT_TOL, MIN_TOL,
};
pub use octdecomp::{decompose, parse_export, DecomposeError, OctComplex, ValidationReport};
