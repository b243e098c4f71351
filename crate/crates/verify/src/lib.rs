//! Seeded property suites with per-property tallies. The acceptance tests and
//! the `verify` command both run these.

pub mod sample;
mod suites;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use tamerep::check::CheckList;
use tamerep::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Euler,
    Classification,
    Torsion,
    Towers,
    Generic,
    Coextension,
    Duality,
    AlmostSplit,
    Atlas,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Euler,
        Suite::Classification,
        Suite::Torsion,
        Suite::Towers,
        Suite::Generic,
        Suite::Coextension,
        Suite::Duality,
        Suite::AlmostSplit,
        Suite::Atlas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::Classification => "classification",
            Suite::Torsion => "torsion",
            Suite::Towers => "towers",
            Suite::Generic => "generic",
            Suite::Coextension => "coextension",
            Suite::Duality => "duality",
            Suite::AlmostSplit => "almost-split",
            Suite::Atlas => "atlas",
        }
    }

    /// Seeds differ per suite, so a suite gives the same report alone or inside `all`.
    fn rng(self, seed: u64) -> ChaCha8Rng {
        let salt = Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64;
        ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Every suite, or a single one.
pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub property: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

/// Tallies in first-seen order.
#[derive(Clone, Debug, Default)]
pub struct Tallies {
    items: Vec<Tally>,
    notes: Vec<String>,
}

impl Tallies {
    pub fn record(&mut self, property: &str, ok: bool, case: impl FnOnce() -> String) {
        let idx = match self.items.iter().position(|t| t.property == property) {
            Some(i) => i,
            None => {
                self.items.push(Tally {
                    property: property.to_string(),
                    checked: 0,
                    failed: 0,
                    first_failure: None,
                });
                self.items.len() - 1
            }
        };
        let t = &mut self.items[idx];
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(case());
            }
        }
    }

    /// Folds a check list into one property; the first failing check names the case.
    pub fn record_list(&mut self, property: &str, list: &CheckList, context: &str) {
        let failed = list.failures().next().map(|c| c.name.clone());
        let ok = failed.is_none() && !list.is_empty();
        self.record(property, ok, || format!("{context}: {}", failed.unwrap_or_else(|| "no checks".into())));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub properties: Vec<Tally>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&Tally> {
        self.properties.iter().find(|t| t.property == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteReport> {
    let mut rng = suite.rng(seed);
    let mut t = Tallies::default();
    match suite {
        Suite::Euler => suites::euler(&mut rng, &mut t)?,
        Suite::Classification => suites::classification(&mut t)?,
        Suite::Torsion => suites::torsion(&mut rng, &mut t)?,
        Suite::Towers => suites::towers(&mut t)?,
        Suite::Generic => suites::generic(&mut rng, &mut t)?,
        Suite::Coextension => suites::coextension(&mut t)?,
        Suite::Duality => suites::duality(&mut rng, &mut t)?,
        Suite::AlmostSplit => suites::almost_split(&mut t)?,
        Suite::Atlas => suites::atlas(&mut t)?,
    }
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        passed: t.items.iter().all(Tally::passed),
        properties: t.items,
        notes: t.notes,
    })
}

pub fn run(suites: &[Suite], seed: u64) -> Result<VerifyReport> {
    let reports = suites.iter().map(|&s| run_suite(s, seed)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        seed,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    })
}
