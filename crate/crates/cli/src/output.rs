//! Run directories and manifests.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use serde::Serialize;

use crate::chart::{self, Series};
use crate::Common;

#[derive(Serialize, Debug)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// Paths relative to the run directory.
    pub outputs: Vec<String>,
    pub seed: u64,
    pub version: String,
}

pub struct Run {
    dir: PathBuf,
    deterministic: bool,
    manifest: RunManifest,
}

/// Flattens a serialized argument struct into kebab-case flag names.
fn flatten_params(value: serde_json::Value, out: &mut BTreeMap<String, String>) {
    let serde_json::Value::Object(map) = value else {
        return;
    };
    for (k, v) in map {
        let key = k.replace('_', "-");
        match v {
            serde_json::Value::Null => {}
            serde_json::Value::Object(_) => flatten_params(v, out),
            serde_json::Value::String(s) => {
                out.insert(key, s);
            }
            serde_json::Value::Array(items) => {
                let joined: Vec<String> = items
                    .iter()
                    .map(|i| match i {
                        serde_json::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                out.insert(key, joined.join(","));
            }
            other => {
                out.insert(key, other.to_string());
            }
        }
    }
}

impl Run {
    pub fn create<P: Serialize>(command: &str, params: &P, seed: u64, common: &Common) -> anyhow::Result<Self> {
        let label = match &common.label {
            Some(l) => l.clone(),
            None => {
                let now = SystemTime::now().duration_since(UNIX_EPOCH)?;
                format!("run-{}-{:09}", now.as_secs(), now.subsec_nanos())
            }
        };
        if label.is_empty() || label.contains(['/', '\\']) || label == ".." {
            return Err(crate::usage(format!("invalid label {label:?}")));
        }
        let dir = common.outdir.join(command.replace(' ', "-")).join(label);
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        let mut parameters = BTreeMap::new();
        flatten_params(serde_json::to_value(params)?, &mut parameters);
        Ok(Self {
            dir,
            deterministic: common.deterministic,
            manifest: RunManifest {
                command: command.to_string(),
                parameters,
                outputs: Vec::new(),
                seed,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
        })
    }

    #[cfg(test)]
    pub fn dir(&self) -> &std::path::Path {
        &self.dir
    }

    pub fn write(&mut self, name: &str, contents: &str) -> anyhow::Result<()> {
        let path = self.dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        self.manifest.outputs.push(name.to_string());
        Ok(())
    }

    pub fn json<T: Serialize + ?Sized>(&mut self, name: &str, value: &T) -> anyhow::Result<()> {
        self.write(name, &orlicz_lab::report::to_json_string(value)?)
    }

    pub fn csv<T: Serialize>(&mut self, name: &str, rows: &[T]) -> anyhow::Result<()> {
        self.write(name, &orlicz_lab::report::to_csv_string(rows)?)
    }

    pub fn chart(&mut self, name: &str, title: &str, series: &[Series]) -> anyhow::Result<()> {
        chart::emit_chart(series, title, &self.dir.join(name), self.deterministic)?;
        self.manifest.outputs.push(name.to_string());
        Ok(())
    }

    /// Writes `manifest.json` and prints a one-line summary.
    pub fn finish(mut self, pass: bool, summary: &str) -> anyhow::Result<bool> {
        self.manifest.outputs.push("manifest.json".to_string());
        let text = orlicz_lab::report::to_json_string(&self.manifest)?;
        fs::write(self.dir.join("manifest.json"), text)?;
        println!(
            "{} {}: {} -> {}",
            if pass { "PASS" } else { "FAIL" },
            self.manifest.command,
            summary,
            self.dir.display()
        );
        Ok(pass)
    }
}
