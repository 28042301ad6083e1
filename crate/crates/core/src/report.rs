//! CSV and JSON serialization of report rows.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;

/// Header row plus one row per record.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

/// Pretty JSON with a trailing newline; key order follows field declaration order.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        n: u32,
        ratio: f64,
        pass: bool,
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = [Row { n: 1, ratio: 0.5, pass: true }, Row { n: 2, ratio: 1.25, pass: false }];
        assert_eq!(to_csv_string(&rows).unwrap(), "n,ratio,pass\n1,0.5,true\n2,1.25,false\n");
    }

    #[test]
    fn json_keeps_field_order() {
        let s = to_json_string(&Row { n: 3, ratio: 2.0, pass: true }).unwrap();
        assert_eq!(s, "{\n  \"n\": 3,\n  \"ratio\": 2.0,\n  \"pass\": true\n}\n");
    }
}
