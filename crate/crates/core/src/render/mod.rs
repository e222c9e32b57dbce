//! Serializers for a finished layout: SVG for viewing, JSON for exchange.

mod json;
pub mod palette;
mod svg;

pub use json::{emit_json, parse_json, SCHEMA_DOCUMENT, SCHEMA_ID};
pub use svg::emit_svg;
