use std::fmt::Display;

use serde::Serialize;
use serde_json::value::RawValue;

/// A decimal integer of any size, emitted as a bare JSON number.
pub fn number(x: impl Display) -> Box<RawValue> {
    RawValue::from_string(x.to_string()).expect("decimal integers are valid JSON")
}

/// A string emitted as a JSON string literal.
pub fn string(s: impl Display) -> Box<RawValue> {
    let quoted = serde_json::to_string(&s.to_string()).expect("strings serialize");
    RawValue::from_string(quoted).expect("quoted strings are valid JSON")
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}
