//! Sweep configuration: which statement to check over which parameter
//! ranges, how to render the reports, and how wide to parallelize.
//!
//! A configuration can come from a `key = value` text file, from command
//! line flags, or both; flags win.  The same keys work in both places:
//! `statement`, `r`, `n`, `lambda-max`, `format`, `jobs`, `seed`.  Range
//! values accept a single integer (`r = 2`) or an inclusive span
//! (`r = 1..3`).

use std::fmt;

/// Which family of checks a sweep runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statement {
    Main,
    Tokuyama,
    Classic,
    MN,
    F,
    Longword,
    Branching,
    Gauss,
}

impl Statement {
    /// The command line token, also used in report output.
    pub fn token(self) -> &'static str {
        match self {
            Statement::Main => "main",
            Statement::Tokuyama => "tokuyama",
            Statement::Classic => "classic",
            Statement::MN => "MN",
            Statement::F => "F",
            Statement::Longword => "longword",
            Statement::Branching => "branching",
            Statement::Gauss => "gauss",
        }
    }

    pub fn parse(s: &str) -> Result<Statement, ConfigError> {
        match s {
            "main" => Ok(Statement::Main),
            "tokuyama" => Ok(Statement::Tokuyama),
            "classic" => Ok(Statement::Classic),
            "MN" => Ok(Statement::MN),
            "F" => Ok(Statement::F),
            "longword" => Ok(Statement::Longword),
            "branching" => Ok(Statement::Branching),
            "gauss" => Ok(Statement::Gauss),
            _ => Err(ConfigError::UnknownStatement(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<OutputFormat, ConfigError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(ConfigError::UnknownFormat(s.to_string())),
        }
    }
}

/// Inclusive integer span for the rank and degree sweeps.
pub fn parse_range(s: &str) -> Result<(u32, u32), ConfigError> {
    let bad = || ConfigError::BadValue { key: "range".to_string(), value: s.to_string() };
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse::<u32>().map_err(|_| bad())?;
        let hi = hi.trim().parse::<u32>().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let v = s.trim().parse::<u32>().map_err(|_| bad())?;
        Ok((v, v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    UnknownStatement(String),
    UnknownFormat(String),
    UnknownKey(String),
    BadValue { key: String, value: String },
    BadLine(String),
    /// Range or bound constraints: non-empty spans, rank and degree at
    /// least one, non-negative weight bound.
    InvalidRanges(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::UnknownStatement(s) => write!(
                f,
                "unknown statement {s:?} (expected main, tokuyama, classic, MN, F, \
                 longword, branching, or gauss)"
            ),
            ConfigError::UnknownFormat(s) => {
                write!(f, "unknown format {s:?} (expected text or json)")
            }
            ConfigError::UnknownKey(s) => write!(f, "unknown configuration key {s:?}"),
            ConfigError::BadValue { key, value } => {
                write!(f, "cannot parse {value:?} as a value for {key}")
            }
            ConfigError::BadLine(s) => {
                write!(f, "expected `key = value`, got {s:?}")
            }
            ConfigError::InvalidRanges(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// A fully resolved sweep request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub statement: Statement,
    /// Inclusive rank span.
    pub r: (u32, u32),
    /// Inclusive degree span.
    pub n: (u32, u32),
    /// Largest first entry of swept dominant weights.
    pub lambda_max: i64,
    pub format: OutputFormat,
    /// Worker threads; zero means one per core.
    pub jobs: usize,
    /// Seed for the numeric sample points of the gauss checks.
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            statement: Statement::Main,
            r: (1, 2),
            n: (1, 2),
            lambda_max: 2,
            format: OutputFormat::Text,
            jobs: 0,
            seed: 0,
        }
    }
}

impl SweepConfig {
    /// Fold one `key = value` assignment into the config.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = || ConfigError::BadValue { key: key.to_string(), value: value.to_string() };
        match key {
            "statement" => self.statement = Statement::parse(value)?,
            "r" => self.r = parse_range(value)?,
            "n" => self.n = parse_range(value)?,
            "lambda-max" => self.lambda_max = value.parse().map_err(|_| bad())?,
            "format" => self.format = OutputFormat::parse(value)?,
            "jobs" => self.jobs = value.parse().map_err(|_| bad())?,
            "seed" => self.seed = value.parse().map_err(|_| bad())?,
            _ => return Err(ConfigError::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Fold a whole configuration file into the config.  Blank lines and
    /// `#` comments are ignored.
    pub fn apply_file(&mut self, text: &str) -> Result<(), ConfigError> {
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::BadLine(line.to_string()))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.r.0 < 1 || self.r.0 > self.r.1 {
            return Err(ConfigError::InvalidRanges(format!(
                "rank span {}..{} must be non-empty with lower end at least 1",
                self.r.0, self.r.1
            )));
        }
        if self.n.0 < 1 || self.n.0 > self.n.1 {
            return Err(ConfigError::InvalidRanges(format!(
                "degree span {}..{} must be non-empty with lower end at least 1",
                self.n.0, self.n.1
            )));
        }
        if self.lambda_max < 0 {
            return Err(ConfigError::InvalidRanges(
                "the weight bound must be non-negative".to_string(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_tokens_round_trip() {
        for s in [
            Statement::Main,
            Statement::Tokuyama,
            Statement::Classic,
            Statement::MN,
            Statement::F,
            Statement::Longword,
            Statement::Branching,
            Statement::Gauss,
        ] {
            assert_eq!(Statement::parse(s.token()).unwrap(), s);
        }
        assert!(matches!(
            Statement::parse("Main"),
            Err(ConfigError::UnknownStatement(_))
        ));
    }

    #[test]
    fn ranges_parse_single_values_and_spans() {
        assert_eq!(parse_range("2").unwrap(), (2, 2));
        assert_eq!(parse_range("1..3").unwrap(), (1, 3));
        assert_eq!(parse_range(" 1 .. 3 ").unwrap(), (1, 3));
        assert!(parse_range("x").is_err());
        assert!(parse_range("1..x").is_err());
    }

    #[test]
    fn file_assignments_and_overrides() {
        let mut cfg = SweepConfig::default();
        cfg.apply_file(
            "# sweep at degree two\nstatement = tokuyama\nr = 1..3\nn = 2\n\
             lambda-max = 3\nformat = json\njobs = 4\nseed = 11\n",
        )
        .unwrap();
        assert_eq!(cfg.statement, Statement::Tokuyama);
        assert_eq!(cfg.r, (1, 3));
        assert_eq!(cfg.n, (2, 2));
        assert_eq!(cfg.lambda_max, 3);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.jobs, 4);
        assert_eq!(cfg.seed, 11);
        // A later flag-style assignment wins.
        cfg.set("n", "1..2").unwrap();
        assert_eq!(cfg.n, (1, 2));
    }

    #[test]
    fn file_errors() {
        let mut cfg = SweepConfig::default();
        assert!(matches!(
            cfg.apply_file("statement tokuyama"),
            Err(ConfigError::BadLine(_))
        ));
        assert!(matches!(
            cfg.apply_file("colour = blue"),
            Err(ConfigError::UnknownKey(_))
        ));
        assert!(matches!(
            cfg.apply_file("jobs = many"),
            Err(ConfigError::BadValue { .. })
        ));
    }

    #[test]
    fn validation_rejects_empty_and_degenerate_ranges() {
        let mut cfg = SweepConfig::default();
        cfg.r = (2, 1);
        assert!(cfg.validate().is_err());
        cfg.r = (0, 1);
        assert!(cfg.validate().is_err());
        cfg.r = (1, 1);
        cfg.n = (0, 0);
        assert!(cfg.validate().is_err());
        cfg.n = (1, 1);
        cfg.lambda_max = -1;
        assert!(cfg.validate().is_err());
        cfg.lambda_max = 0;
        assert!(cfg.validate().is_ok());
    }
}
