use super::MotzkinDiagram;

fn depths(arcs: &[(usize, usize)]) -> Vec<usize> {
    arcs.iter()
        .map(|&(a, b)| arcs.iter().filter(|&&(c, d)| c < a && b < d).count())
        .collect()
}

/// Arc lines ordered from the row outwards.
fn arc_lines(k: usize, arcs: &[(usize, usize)]) -> Vec<String> {
    let depth = depths(arcs);
    let Some(&max) = depth.iter().max() else {
        return Vec::new();
    };
    (0..=max)
        .rev()
        .map(|level| {
            let mut line = vec![' '; 2 * k];
            for (&(a, b), &d) in arcs.iter().zip(&depth) {
                if d == level {
                    for c in line.iter_mut().take(2 * b).skip(2 * a + 1) {
                        *c = '-';
                    }
                    line[2 * a] = '+';
                    line[2 * b] = '+';
                } else if d < level {
                    line[2 * a] = '|';
                    line[2 * b] = '|';
                }
            }
            line.into_iter().collect::<String>().trim_end().to_string()
        })
        .collect()
}

/// Two rows of `o` vertices. Arcs are drawn outside the rows and the two
/// ends of each vertical edge carry the same letter.
pub fn ascii(d: &MotzkinDiagram) -> String {
    let k = d.k();
    let mut out: Vec<String> = arc_lines(k, &d.top_arcs()).into_iter().rev().collect();
    out.push(vec!["o"; k].join(" "));
    let mut top_marks = vec![' '; 2 * k];
    let mut bottom_marks = vec![' '; 2 * k];
    const NAMES: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    for (n, (t, b)) in d.verticals().into_iter().enumerate() {
        let c = NAMES[n % NAMES.len()] as char;
        top_marks[2 * t] = c;
        bottom_marks[2 * b] = c;
    }
    out.push(
        top_marks
            .into_iter()
            .collect::<String>()
            .trim_end()
            .to_string(),
    );
    out.push(
        bottom_marks
            .into_iter()
            .collect::<String>()
            .trim_end()
            .to_string(),
    );
    out.push(vec!["o"; k].join(" "));
    out.extend(arc_lines(k, &d.bottom_arcs()));
    out.join("\n")
}
