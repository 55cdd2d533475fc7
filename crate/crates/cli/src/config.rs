//! Run configuration: TOML file, command-line overrides, stable hash.
//!
//! The defaults reproduce the acceptance suite exactly: p-table to
//! 10^4, truncation (p, h_max, bits) = (3, 5, 128), conjecture windows
//! k in 1..=10 with n up to 1000, p-difference range 71..=2000.

use krank::partition::MAX_TABLE_N;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct TruncationCfg {
    pub p: u32,
    pub h_max: u32,
    pub mantissa_bits: u32,
}

impl Default for TruncationCfg {
    fn default() -> Self {
        Self {
            p: 3,
            h_max: 5,
            mantissa_bits: 128,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct ScanCfg {
    pub k_lo: u32,
    pub k_hi: u32,
    pub n_hi: u64,
    pub l_lo: u64,
    pub l_hi: u64,
}

impl Default for ScanCfg {
    fn default() -> Self {
        Self {
            k_lo: 1,
            k_hi: 10,
            n_hi: 1000,
            l_lo: 71,
            l_hi: 2000,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub truncation: TruncationCfg,
    pub ptable: usize,
    /// 0 means all available parallelism
    pub workers: usize,
    pub out_dir: String,
    pub formats: Vec<String>,
    pub scan: ScanCfg,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            truncation: TruncationCfg::default(),
            ptable: 10_000,
            workers: 0,
            out_dir: "out".into(),
            formats: vec!["csv".into(), "json".into()],
            scan: ScanCfg::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let cfg = match path {
            None => Self::default(),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
                toml::from_str(&text).map_err(|e| format!("invalid config: {e}"))?
            }
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.ptable > MAX_TABLE_N {
            return Err(format!(
                "ptable {} exceeds the cap of {MAX_TABLE_N}",
                self.ptable
            ));
        }
        if self.truncation.p < 1 || self.truncation.h_max < 1 {
            return Err("truncation orders must be >= 1".into());
        }
        if self.truncation.mantissa_bits < 53 {
            return Err("mantissa_bits must be >= 53".into());
        }
        for f in &self.formats {
            if !matches!(f.as_str(), "csv" | "json" | "svg") {
                return Err(format!("unknown output format {f:?}"));
            }
        }
        if self.scan.k_lo < 1 || self.scan.k_lo > self.scan.k_hi {
            return Err("scan k range must satisfy 1 <= k_lo <= k_hi".into());
        }
        if self.scan.l_lo < 1 {
            return Err("scan l range must start at 1".into());
        }
        Ok(())
    }

    /// Stable hash of the effective configuration (first 16 hex chars of
    /// the sha256 of its canonical JSON form).
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("config serializes");
        let digest = Sha256::digest(canonical.as_bytes());
        let mut out = String::with_capacity(16);
        for b in digest.iter().take(8) {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate_and_hash_is_stable() {
        let c = RunConfig::default();
        c.validate().unwrap();
        assert_eq!(c.hash(), c.hash());
        assert_eq!(c.hash().len(), 16);
        let mut d = c.clone();
        d.ptable = 9_999;
        assert_ne!(c.hash(), d.hash());
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = RunConfig::default();
        c.formats.push("yaml".into());
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.truncation.p = 0;
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.ptable = MAX_TABLE_N + 1;
        assert!(c.validate().is_err());
    }

    #[test]
    fn toml_roundtrip() {
        let c = RunConfig::default();
        let text = toml::to_string(&c).unwrap();
        let back: RunConfig = toml::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
