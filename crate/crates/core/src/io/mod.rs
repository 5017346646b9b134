//! Readers and writers for the external document formats.

pub mod coco;
pub mod detections;
pub mod library;
pub mod rico;
pub mod screen;

use std::fs;
use std::path::Path;

use serde::Serializer;

use crate::error::{Error, Result};

/// Largest magnitude at which every integer is exactly representable in f64.
const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// Writes integral values without a fractional part so `10.0` becomes `10`.
pub(crate) fn serialize_num<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.fract() == 0.0 && v.abs() < EXACT_INT_LIMIT {
        s.serialize_i64(*v as i64)
    } else {
        s.serialize_f64(*v)
    }
}

pub(crate) fn serialize_nums<S: Serializer>(v: &[f64; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(4)?;
    for x in v {
        t.serialize_element(&Num(*x))?;
    }
    t.end()
}

struct Num(f64);

impl serde::Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_num(&self.0, s)
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub(crate) fn write_json<T: serde::Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::json(path.display().to_string(), e))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub(crate) fn parse_json<T: serde::de::DeserializeOwned>(text: &str, context: &Path) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::json(context.display().to_string(), e))
}
