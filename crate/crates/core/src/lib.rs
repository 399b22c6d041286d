pub mod codekit;
mod conway;
pub mod error;
pub mod fixtures;
pub mod fmatrix;
pub mod galois;
pub mod grslab;
pub mod known;
pub mod qparams;
pub mod tables;
mod weights;

pub use codekit::{
    apply_monomial, dual, hull, hull_of_derived, information_set, inner, make_lcd, min_distance, puncture,
    relative_min_weight, shorten, within_information_set, Budget, DeriveMode, DerivedHull, HullRegime, HullReport,
    InnerProduct, LinearCode, MonomialMap,
};
pub use error::{Error, Result};
pub use fmatrix::FMatrix;
pub use galois::{field_with_order, make_field, parse_field_name, quadratic_field, Felt, Field, FieldSpec};
pub use grslab::{
    build_ext_cyclic, grs_code, grscon1, grscon2, grscon3, grscon4, ht_bound, hull_mds_from_codeword,
    parse_construction, rains_p, rains_p_pair, standard_points, trace_codeword, ExtCyclicSpec, GrsSpec,
    TraceAssignment,
};
pub use qparams::{
    eaqecc_bounds, eaqecc_from_code, eaqecc_pair, propagate_eaqecc, propagate_subsystem, subsystem_bounds,
    subsystem_from_code, BoundId, BoundVerdict, EaqeccParams, ParamRecord, PropagateOptions, Purity, SubsystemParams,
};
