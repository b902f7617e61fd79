//! Deterministic serialization: JSON with 17-significant-digit numbers and
//! plain comma/newline CSV.

use std::io::{self, Write};

use serde::Serialize;

/// JSON formatter that renders every float with 17 significant digits
/// (one leading digit plus 16 after the point, exponent form).
struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        debug_assert!(value.is_finite(), "non-finite value in report");
        let v = if value == 0.0 { 0.0 } else { value }; // normalize -0.0
        write!(writer, "{v:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.write_f64(writer, value as f64)
    }
}

/// Serialize to JSON bytes with the fixed float format and a trailing newline.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigitFormatter);
    value.serialize(&mut ser).expect("report serialization cannot fail");
    buf.push(b'\n');
    buf
}

/// CSV with a header row, comma delimiter, `\n` line ends, numbers at
/// 17 significant digits.
pub struct Csv {
    buf: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = String::new();
        buf.push_str(&header.join(","));
        buf.push('\n');
        Self { buf, columns: header.len() }
    }

    pub fn row(&mut self, values: &[f64]) {
        assert_eq!(values.len(), self.columns, "column count mismatch");
        let mut first = true;
        for v in values {
            if !first {
                self.buf.push(',');
            }
            first = false;
            let v = if *v == 0.0 { 0.0 } else { *v };
            self.buf.push_str(&format!("{v:.16e}"));
        }
        self.buf.push('\n');
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf.into_bytes()
    }
}

/// Write to a file path or stdout ("-").
pub fn write_out(path: &str, bytes: &[u8]) -> io::Result<()> {
    if path == "-" {
        io::stdout().write_all(bytes)
    } else {
        std::fs::write(path, bytes)
    }
}
