use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::LayoutResult;

/// Value of the top-level `schema` key.
pub const SCHEMA_ID: &str = "layout-schema v1";

/// JSON Schema (draft 2020-12) describing the layout document.
pub const SCHEMA_DOCUMENT: &str = include_str!("../../schema/layout-schema-v1.json");

#[derive(Serialize)]
struct DocumentRef<'a> {
    schema: &'a str,
    #[serde(flatten)]
    layout: &'a LayoutResult,
}

#[derive(Deserialize)]
struct Document {
    schema: String,
    #[serde(flatten)]
    layout: LayoutResult,
}

/// Canonical JSON layout document: compact, keys in declaration order,
/// coordinates rounded to 6 decimals, one trailing newline.
pub fn emit_json(result: &LayoutResult) -> String {
    let doc = DocumentRef {
        schema: SCHEMA_ID,
        layout: result,
    };
    let mut s = serde_json::to_string(&doc).expect("layout serializes");
    s.push('\n');
    s
}

/// Read a document produced by [`emit_json`].
pub fn parse_json(text: &str) -> Result<LayoutResult> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Document(format!("layout document: {e}")))?;
    if doc.schema != SCHEMA_ID {
        return Err(Error::Document(format!(
            "unsupported layout schema {:?}, expected {SCHEMA_ID:?}",
            doc.schema
        )));
    }
    Ok(doc.layout)
}
