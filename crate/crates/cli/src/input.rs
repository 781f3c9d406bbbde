//! Diagram arguments: a JSON file, inline JSON, or an inline edge list such
//! as `T1-B2,T2-T3` (which needs `--k`).

use std::path::Path;

use motzkin_core::diagrams::MotzkinDiagram;

pub fn parse_diagram(arg: &str, k: Option<usize>) -> Result<MotzkinDiagram, String> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return from_json_text(trimmed);
    }
    if Path::new(trimmed).is_file() {
        let text = std::fs::read_to_string(trimmed).map_err(|e| format!("{trimmed}: {e}"))?;
        return from_json_text(&text);
    }
    let k = k.ok_or_else(|| format!("inline edge list {trimmed:?} needs --k"))?;
    let edges = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed
            .split(',')
            .map(|e| parse_edge(k, e))
            .collect::<Result<Vec<_>, _>>()?
    };
    MotzkinDiagram::from_edges(k, &edges).map_err(|e| e.to_string())
}

fn from_json_text(text: &str) -> Result<MotzkinDiagram, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    MotzkinDiagram::from_json(&value).map_err(|e| e.to_string())
}

fn parse_edge(k: usize, text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once('-')
        .ok_or_else(|| format!("edge {text:?} is not of the form T1-B2"))?;
    Ok((vertex(k, a)?, vertex(k, b)?))
}

/// `Ti` is vertex `i - 1`, `Bi` is vertex `k + i - 1`.
fn vertex(k: usize, label: &str) -> Result<usize, String> {
    let label = label.trim();
    let bad = || format!("bad vertex label {label:?}");
    let (row, num) = label.split_at(1.min(label.len()));
    let i: usize = num.parse().map_err(|_| bad())?;
    if i == 0 || i > k {
        return Err(format!("vertex {label} out of range for k = {k}"));
    }
    match row {
        "T" | "t" => Ok(i - 1),
        "B" | "b" => Ok(k + i - 1),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_edges() {
        let d = parse_diagram("T1-T2,B1-B2", Some(2)).unwrap();
        assert_eq!(d.top_arcs(), vec![(0, 1)]);
        assert_eq!(d.bottom_arcs(), vec![(0, 1)]);
        assert_eq!(parse_diagram("", Some(1)).unwrap().edge_count(), 0);
        assert!(parse_diagram("T1-B1", None).is_err());
        assert!(parse_diagram("T1-B3", Some(2)).is_err());
        assert!(parse_diagram("T1B1", Some(2)).is_err());
        assert!(parse_diagram("T1-B2,T2-B1", Some(2)).is_err());
    }

    #[test]
    fn inline_json_round_trip() {
        let d = parse_diagram("T1-B2,T2-T3", Some(3)).unwrap();
        let text = d.to_json().to_string();
        assert_eq!(parse_diagram(&text, None).unwrap(), d);
    }
}
