use std::path::Path;

use serde::Deserialize;
use supoly::poly::DEFAULT_DEGREE_CAP;
use supoly::selftest::DEFAULT_SEED;

use crate::cli::GlobalArgs;

/// Defaults read from `--config`. Every key is optional.
#[derive(Deserialize, Debug, Default, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub degree_cap: Option<usize>,
    pub seed: Option<u64>,
    pub timing: Option<bool>,
    pub property_cases: Option<usize>,
}

#[derive(Deserialize, Copy, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub format: Format,
    pub degree_cap: usize,
    pub seed: u64,
    pub timing: bool,
    pub property_cases: usize,
}

pub const DEFAULT_PROPERTY_CASES: usize = 10_000;

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Flags win over the config file, which wins over the built-in defaults.
pub fn resolve(args: &GlobalArgs) -> Result<Settings, String> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let format = if args.text {
        Format::Text
    } else if args.json {
        Format::Json
    } else {
        file.format.unwrap_or(Format::Json)
    };
    Ok(Settings {
        format,
        degree_cap: args.degree_cap.or(file.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP),
        seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        timing: args.timing || file.timing.unwrap_or(false),
        property_cases: file.property_cases.unwrap_or(DEFAULT_PROPERTY_CASES),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        std::fs::write(&path, "format = \"text\"\ndegree_cap = 12\nseed = 5\n").unwrap();
        let mut args = GlobalArgs { config: Some(path.clone()), ..Default::default() };
        let s = resolve(&args).unwrap();
        assert_eq!((s.format, s.degree_cap, s.seed), (Format::Text, 12, 5));
        args.json = true;
        args.seed = Some(9);
        let s = resolve(&args).unwrap();
        assert_eq!((s.format, s.degree_cap, s.seed), (Format::Json, 12, 9));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<FileConfig>("colour = 1").is_err());
    }
}
