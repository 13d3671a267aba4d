use std::fmt::Display;

use serde::Serializer;

/// Serializes any `Display` value as a JSON string; used for big integers.
pub(crate) fn display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}
