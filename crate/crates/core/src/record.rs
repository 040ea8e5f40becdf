//! Schema-tagged JSON records.
//!
//! Every structured output is a single object whose first field is
//! `"schema"`, e.g. `{"schema":"primdisk.sequence/1", ...}`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::RecordError;

pub const SEQUENCE_SCHEMA: &str = "primdisk.sequence/1";
pub const STRIP_SCHEMA: &str = "primdisk.strip/1";
pub const REPORT_SCHEMA: &str = "primdisk.report/1";
pub const TRACE_SCHEMA: &str = "primdisk.primitive/1";
pub const SWEEP_SCHEMA: &str = "primdisk.sweep/1";

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Deserialize)]
struct OwnedEnvelope<T> {
    schema: String,
    #[serde(flatten)]
    body: T,
}

/// Pretty-printed record with a trailing newline.
pub fn to_record<T: Serialize>(schema: &str, body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope { schema, body }).expect("record types serialize infallibly");
    s.push('\n');
    s
}

pub fn from_record<T: DeserializeOwned>(schema: &str, text: &str) -> Result<T, RecordError> {
    let env: OwnedEnvelope<T> = serde_json::from_str(text)?;
    if env.schema != schema {
        return Err(RecordError::Schema {
            expected: schema.to_string(),
            found: env.schema,
        });
    }
    Ok(env.body)
}
