//! Reading and writing every representation: ranking expressions and raw
//! vectors as text, all objects as `"kind"`-tagged JSON, and line-oriented
//! ranking batches. Cook-Seiford values are carried as exact decimal
//! strings throughout; nothing here touches binary floating point.

pub mod json;
pub mod text;

pub use json::{decode_json, encode_json, DecodeError, Document, Kind};
pub use text::{
    format_cs_text, format_pm_text, format_ranking, parse_cs_text, parse_pm_text, parse_ranking,
    parse_ranking_batch, BatchError, ParseError,
};
