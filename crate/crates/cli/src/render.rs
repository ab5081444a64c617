//! Deterministic report rendering: JSON with a fixed key order and every
//! float printed with 17 significant digits, so identical inputs produce
//! byte-identical output.

/// A JSON value with insertion-ordered object keys.
#[derive(Debug, Clone)]
pub enum Val {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    List(Vec<Val>),
    Obj(Vec<(&'static str, Val)>),
}

impl Val {
    pub fn opt_num(v: Option<f64>) -> Val {
        v.map(Val::Num).unwrap_or(Val::Null)
    }

    pub fn num_list(v: &[f64]) -> Val {
        Val::List(v.iter().map(|&x| Val::Num(x)).collect())
    }
}

/// 17 significant digits; enough to reconstruct any f64 exactly.
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        return "\"nan\"".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "\"inf\"".into() } else { "\"-inf\"".into() };
    }
    format!("{v:.16e}")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn write_val(out: &mut String, v: &Val, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Val::Null => out.push_str("null"),
        Val::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Val::Int(i) => out.push_str(&i.to_string()),
        Val::Num(n) => out.push_str(&fmt_f64(*n)),
        Val::Str(s) => out.push_str(&escape(s)),
        Val::List(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            let flat = items
                .iter()
                .all(|i| matches!(i, Val::Num(_) | Val::Int(_) | Val::Str(_) | Val::Bool(_) | Val::Null));
            if flat {
                out.push('[');
                for (idx, item) in items.iter().enumerate() {
                    if idx > 0 {
                        out.push_str(", ");
                    }
                    write_val(out, item, 0);
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (idx, item) in items.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str("  ");
                    write_val(out, item, indent + 1);
                    if idx + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&pad);
                out.push(']');
            }
        }
        Val::Obj(fields) => {
            if fields.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (idx, (key, val)) in fields.iter().enumerate() {
                out.push_str(&pad);
                out.push_str("  ");
                out.push_str(&escape(key));
                out.push_str(": ");
                write_val(out, val, indent + 1);
                if idx + 1 < fields.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
    }
}

/// Renders a report document, newline-terminated.
pub fn render(v: &Val) -> String {
    let mut out = String::new();
    write_val(&mut out, v, 0);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_carry_17_significant_digits() {
        assert_eq!(fmt_f64(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_f64(-0.75), "-7.5000000000000000e-1");
        let v: f64 = fmt_f64(std::f64::consts::PI)
            .parse()
            .unwrap();
        assert_eq!(v, std::f64::consts::PI);
    }

    #[test]
    fn rendering_is_deterministic() {
        let doc = Val::Obj(vec![
            ("a", Val::Num(1.0)),
            ("b", Val::List(vec![Val::Int(1), Val::Int(2)])),
            ("c", Val::Obj(vec![("nested", Val::Bool(true))])),
        ]);
        assert_eq!(render(&doc), render(&doc));
        assert!(render(&doc).contains("\"a\": 1.0000000000000000e0"));
    }
}
