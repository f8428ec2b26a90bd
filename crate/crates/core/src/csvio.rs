//! Minimal CSV emission with RFC-style quoting.
//!
//! Output here is deterministic byte-for-byte: fields are quoted exactly
//! when they contain a comma, quote, or newline (partition labels like
//! `"2,1"` need it; cycle-type labels never do).

/// Escapes one field.
pub(crate) fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Appends one comma-joined, LF-terminated row.
pub(crate) fn push_row(out: &mut String, fields: &[String]) {
    let mut first = true;
    for f in fields {
        if !first {
            out.push(',');
        }
        out.push_str(&field(f));
        first = false;
    }
    out.push('\n');
}
