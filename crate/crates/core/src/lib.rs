//! Exact-arithmetic toolkit for split matroids: a matroid kernel over
//! explicit bases, split/paving/nested classification, corank lifts,
//! regular subdivisions of hypersimplices with certificates, secondary-cone
//! dimensions, Dressian ray verification and small-matroid census tooling.

pub mod census;
pub mod error;
pub mod lift;
pub mod linalg;
pub mod lp;
pub mod matrix;
pub mod matroid;
pub mod split;
pub mod subdivision;
pub mod subsets;

pub use error::{Error, Result};
pub use lift::{
    check_corank_inequality, corank_vector, lift_elements, nested_matroid_nf,
    parallel_cofree_lift, predicted_ray_cells, series_free_lift, CorankInequality,
    CorankRelation, LiftVector,
};
pub use matrix::{matroid_from_int_matrix, matroid_from_matrix};
pub use matroid::{Flat, Matroid, DEFAULT_ISO_LIMIT};
pub use split::{
    classify, dressian_dim_bounds, flacets, hyperplane_of_flacet, is_nested, is_paving,
    is_sparse_paving, is_split, knuth_stable_set, matroid_to_stable_set, split_flacets,
    splits_compatible, splits_compatible_geometric, stable_set_to_matroid,
    ClassificationReport, SplitHyperplane,
};
pub use subdivision::{
    cell_to_matroid, export_subdivision, is_matroid_subdivision, regular_subdivision,
    regular_subdivision_with_limit, secondary_cone_dimension, tropical_linear_space, verify_ray,
    verify_ray_with_limit, RayReport, SecondaryConeInfo, Subdivision, DEFAULT_MAX_VERTICES,
};
pub use subsets::{binomial, codec, lex_cmp, Bitmap, Subset, SubsetCodec};
