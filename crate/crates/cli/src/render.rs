use eqcodes::construct::{Table1Row, Table2Row};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::Value;

pub fn big(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn layout(header: &[String], rows: &[Vec<String>], csv: bool) -> String {
    let mut out = String::new();
    if csv {
        for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
            out.push_str(&line.join(","));
            out.push('\n');
        }
        return out;
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table1(rows: &[Table1Row], csv: bool) -> String {
    let header = ["q", "q^2+q+1", "E_q(3)"].map(String::from);
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.q.to_string(), r.family_size.to_string(), r.max_code_size.to_string()])
        .collect();
    layout(&header, &body, csv)
}

pub fn table2(q: u32, rows: &[Table2Row], csv: bool) -> String {
    let header = ["n".to_string(), format!("E_{q}(n,1)"), format!("|P_{q}(n)|")];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.n.to_string(), r.max_code_size.to_string(), r.space_size.to_string()])
        .collect();
    layout(&header, &body, csv)
}
