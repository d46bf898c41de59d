//! Settings layered as defaults, then a TOML file, then `TFPL_*` environment
//! variables, then command-line flags.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use tfpl_core::{Error, Limits, Result};

pub const ENV_PREFIX: &str = "TFPL_";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub fpl_max_n: usize,
    pub tfpl_max_n: usize,
    pub puzzle_max_n: usize,
    pub parallelism: usize,
    pub output_dir: PathBuf,
}

impl Default for Config {
    fn default() -> Self {
        let l = Limits::default();
        Config {
            fpl_max_n: l.fpl_max_n,
            tfpl_max_n: l.tfpl_max_n,
            puzzle_max_n: l.puzzle_max_n,
            parallelism: std::thread::available_parallelism().map_or(1, |p| p.get()),
            output_dir: PathBuf::from("out"),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileLayer {
    fpl_max_n: Option<usize>,
    tfpl_max_n: Option<usize>,
    puzzle_max_n: Option<usize>,
    parallelism: Option<usize>,
    output_dir: Option<PathBuf>,
}

/// Values given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
}

impl Config {
    pub fn limits(&self) -> Limits {
        Limits { fpl_max_n: self.fpl_max_n, tfpl_max_n: self.tfpl_max_n, puzzle_max_n: self.puzzle_max_n }
    }

    pub fn load(file: Option<&Path>, overrides: &Overrides) -> Result<Self> {
        Config::load_with_env(file, overrides, |k| std::env::var(k).ok())
    }

    /// [`load`](Self::load) with an explicit environment lookup.
    pub fn load_with_env(
        file: Option<&Path>,
        overrides: &Overrides,
        env: impl Fn(&str) -> Option<String>,
    ) -> Result<Self> {
        let mut c = Config::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::io(format!("reading config {}", path.display()), e))?;
            let layer: FileLayer =
                toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            c.apply(layer);
        }
        c.apply(env_layer(env)?);
        if let Some(j) = overrides.jobs {
            c.parallelism = j;
        }
        if let Some(o) = &overrides.out {
            c.output_dir = o.clone();
        }
        c.validate()?;
        Ok(c)
    }

    fn apply(&mut self, layer: FileLayer) {
        if let Some(v) = layer.fpl_max_n {
            self.fpl_max_n = v;
        }
        if let Some(v) = layer.tfpl_max_n {
            self.tfpl_max_n = v;
        }
        if let Some(v) = layer.puzzle_max_n {
            self.puzzle_max_n = v;
        }
        if let Some(v) = layer.parallelism {
            self.parallelism = v;
        }
        if let Some(v) = layer.output_dir {
            self.output_dir = v;
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("fpl_max_n", self.fpl_max_n),
            ("tfpl_max_n", self.tfpl_max_n),
            ("puzzle_max_n", self.puzzle_max_n),
            ("parallelism", self.parallelism),
        ];
        for (name, v) in fields {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be at least 1")));
            }
        }
        if self.fpl_max_n > tfpl_core::fpl::MAX_REPRESENTABLE_N {
            return Err(Error::Config(format!(
                "fpl_max_n above {} is not supported",
                tfpl_core::fpl::MAX_REPRESENTABLE_N
            )));
        }
        Ok(())
    }
}

fn env_layer(env: impl Fn(&str) -> Option<String>) -> Result<FileLayer> {
    let num = |key: &str| -> Result<Option<usize>> {
        let name = format!("{ENV_PREFIX}{key}");
        env(&name)
            .map(|v| v.trim().parse().map_err(|_| Error::Config(format!("{name}={v:?} is not a count"))))
            .transpose()
    };
    Ok(FileLayer {
        fpl_max_n: num("FPL_MAX_N")?,
        tfpl_max_n: num("TFPL_MAX_N")?,
        puzzle_max_n: num("PUZZLE_MAX_N")?,
        parallelism: num("PARALLELISM")?,
        output_dir: env(&format!("{ENV_PREFIX}OUTPUT_DIR")).map(PathBuf::from),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn env(pairs: &[(&str, &str)]) -> impl Fn(&str) -> Option<String> {
        let map: HashMap<String, String> = pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        move |k| map.get(k).cloned()
    }

    #[test]
    fn layering() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        std::fs::write(&path, "tfpl_max_n = 3\nparallelism = 2\noutput_dir = \"a\"\n").unwrap();
        let c = Config::load_with_env(Some(&path), &Overrides::default(), env(&[])).unwrap();
        assert_eq!((c.tfpl_max_n, c.parallelism), (3, 2));
        let c = Config::load_with_env(Some(&path), &Overrides::default(), env(&[("TFPL_TFPL_MAX_N", "2")])).unwrap();
        assert_eq!(c.tfpl_max_n, 2);
        let flags = Overrides { jobs: Some(5), out: Some("b".into()) };
        let c = Config::load_with_env(Some(&path), &flags, env(&[("TFPL_PARALLELISM", "3")])).unwrap();
        assert_eq!(c.parallelism, 5);
        assert_eq!(c.output_dir, PathBuf::from("b"));
    }

    #[test]
    fn rejects_bad_values() {
        let zero = Overrides { jobs: Some(0), out: None };
        assert!(Config::load_with_env(None, &zero, env(&[])).is_err());
        assert!(Config::load_with_env(None, &Overrides::default(), env(&[("TFPL_FPL_MAX_N", "x")])).is_err());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        std::fs::write(&path, "bogus = 1\n").unwrap();
        assert!(Config::load_with_env(Some(&path), &Overrides::default(), env(&[])).is_err());
        assert!(Config::load_with_env(Some(&dir.path().join("missing.toml")), &Overrides::default(), env(&[])).is_err());
    }
}
