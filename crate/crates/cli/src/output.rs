use recdet::RingValue;

use crate::Format;

const GREEN: &str = "\x1b[32m";
const RED: &str = "\x1b[31m";
const RESET: &str = "\x1b[0m";

/// ANSI styling is on for terminals unless `RECDET_COLOR=0`.
pub fn color_enabled(is_terminal: bool) -> bool {
    is_terminal && std::env::var("RECDET_COLOR").map_or(true, |v| v != "0")
}

pub fn status(ok: bool, color: bool) -> String {
    let (word, code) = if ok { ("ok", GREEN) } else { ("MISMATCH", RED) };
    if color {
        format!("{code}{word}{RESET}")
    } else {
        word.to_string()
    }
}

pub fn value(v: &RingValue, format: Format) -> String {
    match format {
        Format::Latex => v.to_latex(),
        _ => v.to_string(),
    }
}

/// `index: value` lines.
pub fn indexed_lines(values: &[RingValue], format: Format) -> String {
    values
        .iter()
        .enumerate()
        .map(|(idx, v)| format!("{}: {}\n", idx + 1, value(v, format)))
        .collect()
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| visible_len(&r[c]))
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - visible_len(c))))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn visible_len(s: &str) -> usize {
    let mut n = 0;
    let mut in_escape = false;
    for c in s.chars() {
        match (in_escape, c) {
            (false, '\x1b') => in_escape = true,
            (true, 'm') => in_escape = false,
            (true, _) => {}
            (false, _) => n += 1,
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escapes_do_not_count_towards_width() {
        assert_eq!(visible_len(&status(true, true)), 2);
        let t = table(&["k", "status"], &[vec!["1".into(), status(false, true)], vec!["10".into(), "ok".into()]]);
        assert_eq!(t.lines().nth(2).unwrap(), "10  ok");
    }
}
