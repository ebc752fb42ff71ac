//! Defaults from `--config`, the environment and the command line.
//!
//! Precedence for the genus cap: `--genus-cap`, then `NUMSGPS_GENUS_CAP`,
//! then the config file, then the library default.

use std::path::Path;

use serde::Deserialize;

use numsgps::oracle::DEFAULT_GENUS_CAP;

pub const GENUS_CAP_ENV: &str = "NUMSGPS_GENUS_CAP";

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub genus_cap: Option<u32>,
    pub jobs: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub genus_cap: u32,
    pub jobs: Option<usize>,
}

impl Settings {
    pub fn resolve(
        flag_cap: Option<u32>,
        flag_jobs: Option<usize>,
        env_cap: Option<&str>,
        file: &FileConfig,
    ) -> Result<Self, String> {
        let env_cap = env_cap
            .map(|v| {
                v.trim()
                    .parse::<u32>()
                    .map_err(|e| format!("{GENUS_CAP_ENV}={v:?}: {e}"))
            })
            .transpose()?;
        let jobs = flag_jobs.or(file.jobs);
        if jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        Ok(Settings {
            genus_cap: flag_cap
                .or(env_cap)
                .or(file.genus_cap)
                .unwrap_or(DEFAULT_GENUS_CAP),
            jobs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let file = FileConfig {
            genus_cap: Some(20),
            jobs: Some(2),
        };
        let s = Settings::resolve(None, None, None, &file).unwrap();
        assert_eq!((s.genus_cap, s.jobs), (20, Some(2)));
        let s = Settings::resolve(None, Some(4), Some("30"), &file).unwrap();
        assert_eq!((s.genus_cap, s.jobs), (30, Some(4)));
        let s = Settings::resolve(Some(12), None, Some("30"), &file).unwrap();
        assert_eq!(s.genus_cap, 12);
        let s = Settings::resolve(None, None, None, &FileConfig::default()).unwrap();
        assert_eq!(s.genus_cap, DEFAULT_GENUS_CAP);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Settings::resolve(None, None, Some("many"), &FileConfig::default()).is_err());
        assert!(Settings::resolve(None, Some(0), None, &FileConfig::default()).is_err());
        assert!(toml::from_str::<FileConfig>("depth = 3").is_err());
        let f: FileConfig = toml::from_str("genus_cap = 18\n").unwrap();
        assert_eq!(f.genus_cap, Some(18));
    }
}
