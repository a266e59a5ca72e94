//! Serialization of patches and reports: JSON, OBJ meshes, parameter grids
//! and survey tables.

pub mod grid;
pub mod json;
pub mod obj;
pub mod survey;

pub use grid::{parse_grid, parse_params, Grid};
pub use json::{patch_from_json, patch_to_json};
pub use obj::{write_obj, DECIMAL_DIGITS};
pub use survey::{survey, survey_row, SurveyRow};
