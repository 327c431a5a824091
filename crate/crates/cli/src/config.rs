use serde::{Deserialize, Serialize};

use specht_core::exactlin::Field;
use specht_core::rootsys::{CartanType, RootSystem};
use specht_core::weyl::{ReflectionGroup, DEFAULT_CAP};
use specht_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verb {
    Roots,
    Subsystems,
    Classes,
    Specht,
}

/// One computation request, as given on the command line or as an element
/// of a batch file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Verb,
    #[serde(rename = "type")]
    pub system: String,
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub rows: Option<String>,
    #[serde(default)]
    pub cols: Option<String>,
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default)]
    pub list_tabloids: bool,
    #[serde(default)]
    pub list_polytabloid: bool,
}

fn default_field() -> String {
    "q".into()
}

/// A [`RunConfig`] whose type and field have been checked.
#[derive(Debug, Clone)]
pub struct Plan {
    pub verb: Verb,
    pub cartan: CartanType,
    pub field: Field,
    pub rows: String,
    pub cols: String,
    pub list_tabloids: bool,
    pub list_polytabloid: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<Plan> {
        let cartan = parse_type(&self.system, self.rank)?;
        let field: Field = self.field.parse()?;
        if self.verb_needs_frame() && (self.rows.is_none() || self.cols.is_none()) {
            return Err(Error::Precondition("specht needs --rows and --cols (use \"\" for ∅)".into()));
        }
        Ok(Plan {
            verb: self.command,
            cartan,
            field,
            rows: self.rows.clone().unwrap_or_default(),
            cols: self.cols.clone().unwrap_or_default(),
            list_tabloids: self.list_tabloids,
            list_polytabloid: self.list_polytabloid,
        })
    }

    fn verb_needs_frame(&self) -> bool {
        self.command == Verb::Specht
    }
}

/// Accepts `G2`, or a bare letter with a separate rank.
pub fn parse_type(text: &str, rank: Option<usize>) -> Result<CartanType> {
    let text = text.trim();
    let has_digits = text.chars().skip(1).any(|c| c.is_ascii_digit());
    match (has_digits, rank) {
        (true, None) => text.parse(),
        (true, Some(r)) => {
            let t: CartanType = text.parse()?;
            if t.rank() != r {
                return Err(Error::UnsupportedType(format!("{text} with --rank {r}")));
            }
            Ok(t)
        }
        (false, Some(r)) if text.chars().count() == 1 => CartanType::new(text.chars().next().unwrap_or('?'), r),
        _ => Err(Error::UnsupportedType(format!("{text} (expected e.g. G2, or B with --rank 3)"))),
    }
}

/// `--cap` wins over `SPECHT_CAP`, which wins over the default.
pub fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("SPECHT_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("SPECHT_CAP={v} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

pub fn build_group(cartan: CartanType, cap: usize) -> Result<ReflectionGroup> {
    ReflectionGroup::generate(RootSystem::new(cartan)?, cap)
}
