//! Extremal forms: vertices of fixed-diagonal reduced domains, minimal
//! determinants, the reduced-triangle scan and the rank-4 / rank-5 solid
//! angle comparison.

mod barnes;
mod derivative;
mod polytope;
mod reproduce;
mod scan;

pub use barnes::barnes_min_det;
pub use derivative::partial_det_direction_check;
pub use polytope::{
    det_polynomial, enumerate_vertex_classes, enumerate_vertices, min_det_vertex, Affine, Entry, Facet,
    FacetSystem, MinDet, Polynomial, VertexClass,
};
pub use reproduce::{
    lemma23_reference, lemma24_reference, match_vertex_classes, reproduce_counterexample, reproduce_table,
    Comparison, CounterexampleReport, FormOmega, ReferenceVertex, ReproTable, TableName, TableRow, Value, Verdict,
    VertexMatch, INTEGRAL_REFERENCE, INTEGRAL_TOL, OMEGA_TOL, RANK4_REFERENCE, RANK5_REFERENCE,
    SECOND_DERIVATIVE_REFERENCE, SLIDE_DERIVATIVE_REFERENCE,
};
pub use scan::{edge_profile, triangle_scan, Corner, Edge, EdgeProfile, ScanPoint, TriangleScan, DEFAULT_GRID};
