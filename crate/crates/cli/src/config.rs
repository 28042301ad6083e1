//! Flat `key = value` files merged into the argument vector.

use std::fs;

use crate::usage;

/// Flags that take no value; a config value of `true` adds them.
const SWITCHES: &[&str] = &["deterministic"];

pub fn parse(text: &str) -> anyhow::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", i + 1)))?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() || key == "config" {
            return Err(usage(format!("config line {}: invalid key {:?}", i + 1, k.trim())));
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

fn config_path(argv: &[String]) -> anyhow::Result<Option<String>> {
    for (i, a) in argv.iter().enumerate() {
        if let Some(p) = a.strip_prefix("--config=") {
            return Ok(Some(p.to_string()));
        }
        if a == "--config" {
            return argv
                .get(i + 1)
                .cloned()
                .map(Some)
                .ok_or_else(|| usage("--config needs a path"));
        }
    }
    Ok(None)
}

fn has_flag(argv: &[String], key: &str) -> bool {
    let flag = format!("--{key}");
    let prefixed = format!("{flag}=");
    argv.iter().any(|a| *a == flag || a.starts_with(&prefixed))
}

/// Appends config entries whose flags are absent from `argv`.
pub fn merge(mut argv: Vec<String>, entries: &[(String, String)]) -> anyhow::Result<Vec<String>> {
    let mut extra = Vec::new();
    for (key, value) in entries {
        if has_flag(&argv, key) {
            continue;
        }
        if SWITCHES.contains(&key.as_str()) {
            match value.as_str() {
                "true" => extra.push(format!("--{key}")),
                "false" => {}
                _ => return Err(usage(format!("{key} must be true or false"))),
            }
        } else {
            extra.push(format!("--{key}={value}"));
        }
    }
    argv.extend(extra);
    Ok(argv)
}

pub fn expand(argv: Vec<String>) -> anyhow::Result<Vec<String>> {
    match config_path(&argv)? {
        None => Ok(argv),
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read config {path}: {e}")))?;
            merge(argv, &parse(&text)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parses_comments_and_underscores() {
        let e = parse("# c\n\nlog2_lo = -40\ncap=6\n").unwrap();
        assert_eq!(e, vec![("log2-lo".into(), "-40".into()), ("cap".into(), "6".into())]);
    }

    #[test]
    fn rejects_missing_equals() {
        assert!(parse("cap 6").unwrap_err().is::<crate::UsageError>());
    }

    #[test]
    fn flags_override_file() {
        let e = parse("cap = 6\np = 1.5\ndeterministic = true").unwrap();
        let out = merge(argv("bin cesaro --cap=3"), &e).unwrap();
        assert_eq!(out, argv("bin cesaro --cap=3 --p=1.5 --deterministic"));
    }
}
