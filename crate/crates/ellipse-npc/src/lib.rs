//! Negative pedal curves of an ellipse.
//!
//! For a pole M on the boundary of an axis-aligned ellipse, the envelope of
//! the lines through P(t) perpendicular to P(t) - M is a constant-area
//! 3-cusp deltoid. This crate implements that curve family in closed form
//! together with everything attached to it: the general-pole envelope and an
//! independent finite-difference oracle, the affine decomposition onto the
//! canonical hypocycloid, the cusp / pre-image / osculating-center triangle
//! triad with their circles, conics and catalogued centers, the global loci
//! over pole revolutions, the tangency and intersection structure against
//! the ellipse, the rotated-line variant, and a verification suite that
//! numerically certifies every invariant the library claims.
//!
//! All geometry is generic over the scalar type ([`Scalar`], i.e. `f32` or
//! `f64`); `f64` aliases for the main types live at the crate root. The
//! certified tolerances of the verification suite assume `f64`.

pub mod affine;
pub mod centers;
pub mod circle;
pub mod conic;
pub mod deltoid;
pub mod ellipse;
pub mod envelope;
pub mod loci;
pub mod point;
pub mod poly;
pub mod quadrature;
pub mod scalar;
pub mod tangency;
pub mod tolerance;
pub mod triangle;
pub mod verify;

pub use affine::AffineMap;
pub use centers::{
    center, coincidence_table_check, triangle_center, CenterError, CenterIndex, CoincidenceRow,
    Partner, COINCIDENCE_PAIRS, SUPPORTED_CENTERS,
};
pub use circle::{Circle, CircleError};
pub use conic::{ConicError, ConicImplicit};
pub use deltoid::{
    circle_k, deltoid_area, deltoid_centroid_numeric, osculating_circle, rotated_frame, DeltoidError,
    DeltoidFrame, RotatedFrame,
};
pub use ellipse::Ellipse;
pub use envelope::{
    affine_decomposition, classify_pole, deltoid_centroid, deltoid_point, npc_envelope_numeric,
    npc_envelope_point, npc_line, npc_signed_area_numeric, rotated_npc_line, rotated_npc_point,
    steiner_hypocycloid, EnvelopeError, LineEq, Pole, PoleClass,
};
pub use loci::{
    c2_crossing_params, c2_crossings, c2_locus, c2_locus_exteriority_margin, cusp_crossing_params,
    cusp_crossings, cusp_locus_implicit, cusp_locus_point, cusp_locus_self_intersections,
    nearest_preimage, sign_change_params, ImplicitPoly2,
};
pub use point::{orient2, Point2};
pub use poly::{cubic_roots_closed_form, PolyError, RealPolynomial, Root};
pub use quadrature::{polygon_centroid, sample_closed, shoelace_area, QuadratureError};
pub use scalar::Scalar;
pub use tangency::{
    apollonius_hyperbola, apollonius_is_degenerate, contact_quartic_eval,
    deltoid_ellipse_intersections, evolute_crossings, evolute_regime, intersection_quadratic,
    tangency_cubic_discriminant,
    intersection_quadratic_roots, nearest_deltoid_distance, tangency_cubic, EvoluteRegime,
    TangencyError, TangencyReport,
};
pub use tolerance::Tolerance;
pub use triangle::{
    concurrency_sigma_min, cusp_circumcircle, euler_line, orthology_centers, perspector, perspectrix,
    radical_axis, TriadError, Triangle,
};

/// Concrete `f64` aliases for the main types.
pub type Point2f = Point2<f64>;
pub type Ellipsef = Ellipse<f64>;
pub type Circlef = Circle<f64>;
pub type Conicf = ConicImplicit<f64>;
pub type LineEqf = LineEq<f64>;
pub type Tolerancef = Tolerance<f64>;
pub type Trianglef = Triangle<f64>;
pub type DeltoidFramef = DeltoidFrame<f64>;
pub type AffineMapf = AffineMap<f64>;
