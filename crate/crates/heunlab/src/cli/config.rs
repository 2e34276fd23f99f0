//! Line-oriented configuration: bracketed sections, `key = value`, `#`
//! comments. Every key has a default; unknown sections and keys are
//! rejected with line numbers.

use crate::bannai_ito::BIParams;
use crate::exact::{int, parse_rat, rat, Rat};
use crate::grids::BICase;
use crate::heun_racah::TauParams;
use crate::racah::{RacahParams, Truncation};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("invalid {field}: {reason}")]
    Value { field: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Racah,
    HeunRacah,
    BannaiIto,
    HeunBi,
    Upsilon,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Racah,
        Suite::HeunRacah,
        Suite::BannaiIto,
        Suite::HeunBi,
        Suite::Upsilon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Racah => "racah",
            Suite::HeunRacah => "heun-racah",
            Suite::BannaiIto => "bannai-ito",
            Suite::HeunBi => "heun-bi",
            Suite::Upsilon => "upsilon",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s)
    }
}

/// Fixed Racah parameter block, as raw values; validated into
/// [`RacahParams`] on use so guard messages carry the field names.
#[derive(Debug, Clone)]
pub struct RacahBlock {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
    pub n: usize,
    pub truncation: Truncation,
}

impl RacahBlock {
    pub fn build(&self) -> Result<RacahParams, ConfigError> {
        RacahParams::new(
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.delta.clone(),
            self.n,
            self.truncation,
        )
        .map_err(|e| ConfigError::Value {
            field: "[racah]".into(),
            reason: e.to_string(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct BIBlock {
    pub rho1: Rat,
    pub rho2: Rat,
    pub r1: Rat,
    pub r2: Rat,
    pub n: usize,
    pub case: BICase,
}

impl BIBlock {
    pub fn build(&self) -> Result<BIParams, ConfigError> {
        BIParams::new(
            self.rho1.clone(),
            self.rho2.clone(),
            self.r1.clone(),
            self.r2.clone(),
            self.n,
            self.case,
        )
        .map_err(|e| ConfigError::Value {
            field: "[bannai_ito]".into(),
            reason: e.to_string(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct UpsilonBlock {
    pub a1: Rat,
    pub a2: Rat,
    pub c1: Rat,
    pub c2: Rat,
}

#[derive(Debug, Clone)]
pub struct Sampling {
    pub seed: u64,
    pub trials: usize,
    pub numerator_bound: i64,
    pub denominator_bound: i64,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub racah: RacahBlock,
    pub bannai_ito: BIBlock,
    pub tau_hr: TauParams,
    pub tau_hb: TauParams,
    pub upsilon: UpsilonBlock,
    pub sampling: Sampling,
    pub suites: Vec<Suite>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            racah: RacahBlock {
                alpha: int(-3),
                beta: rat(1, 2),
                gamma: rat(1, 2),
                delta: rat(1, 3),
                n: 2,
                truncation: Truncation::Alpha,
            },
            bannai_ito: BIBlock {
                rho1: rat(-7, 3),
                rho2: rat(1, 3),
                r1: rat(1, 5),
                r2: rat(2, 7),
                n: 3,
                case: BICase::OddRho,
            },
            tau_hr: TauParams {
                tau0: rat(1, 2),
                tau1: int(2),
                tau2: rat(-1, 3),
                tau3: int(1),
                tau4: rat(3, 4),
            },
            tau_hb: TauParams {
                tau0: rat(1, 2),
                tau1: int(2),
                tau2: rat(-1, 3),
                tau3: int(1),
                tau4: rat(3, 4),
            },
            upsilon: UpsilonBlock {
                a1: int(-2),
                a2: int(-2),
                c1: rat(3, 2),
                c2: rat(-5, 3),
            },
            sampling: Sampling {
                seed: 42,
                trials: 5,
                numerator_bound: 12,
                denominator_bound: 6,
            },
            suites: Suite::ALL.to_vec(),
        }
    }
}

impl Config {
    pub fn from_file(path: &std::path::Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        let mut section = String::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest.strip_suffix(']').ok_or_else(|| {
                    ConfigError::Line(lineno, "unterminated section header".into())
                })?;
                section = name.trim().to_string();
                match section.as_str() {
                    "racah" | "bannai_ito" | "tau_hr" | "tau_hb" | "upsilon" | "sampling"
                    | "run" => {}
                    other => {
                        return Err(ConfigError::Line(
                            lineno,
                            format!("unknown section [{other}]"),
                        ))
                    }
                }
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                ConfigError::Line(lineno, format!("expected key = value, got {line:?}"))
            })?;
            let (key, value) = (key.trim(), value.trim());
            cfg.apply(&section, key, value)
                .map_err(|msg| ConfigError::Line(lineno, msg))?;
        }
        Ok(cfg)
    }

    fn apply(&mut self, section: &str, key: &str, value: &str) -> Result<(), String> {
        let r = |v: &str| parse_rat(v).map_err(|e| format!("bad rational {v:?}: {e}"));
        let u = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("bad unsigned integer {v:?}"))
        };
        match section {
            "racah" => match key {
                "alpha" => self.racah.alpha = r(value)?,
                "beta" => self.racah.beta = r(value)?,
                "gamma" => self.racah.gamma = r(value)?,
                "delta" => self.racah.delta = r(value)?,
                "n" => self.racah.n = u(value)?,
                "truncation" => {
                    self.racah.truncation = match value {
                        "alpha" => Truncation::Alpha,
                        "beta-delta" => Truncation::BetaDelta,
                        "gamma" => Truncation::Gamma,
                        other => {
                            return Err(format!(
                                "unknown truncation {other:?} (alpha, beta-delta, gamma)"
                            ))
                        }
                    }
                }
                other => return Err(format!("unknown key {other:?} in [racah]")),
            },
            "bannai_ito" => match key {
                "rho1" => self.bannai_ito.rho1 = r(value)?,
                "rho2" => self.bannai_ito.rho2 = r(value)?,
                "r1" => self.bannai_ito.r1 = r(value)?,
                "r2" => self.bannai_ito.r2 = r(value)?,
                "n" => self.bannai_ito.n = u(value)?,
                "case" => {
                    self.bannai_ito.case = match value {
                        "odd-rho" => BICase::OddRho,
                        "odd-r" => BICase::OddR,
                        "even" => BICase::EvenRhoR {
                            i: 1,
                            j: 1,
                            anchor: 1,
                            difference_form: true,
                        },
                        other => {
                            return Err(format!("unknown case {other:?} (odd-rho, odd-r, even)"))
                        }
                    }
                }
                "i" | "j" | "anchor" | "difference_form" => {
                    let mut even = match self.bannai_ito.case {
                        BICase::EvenRhoR { .. } => self.bannai_ito.case,
                        _ => {
                            return Err(format!("key {key:?} requires case = even first"));
                        }
                    };
                    if let BICase::EvenRhoR {
                        ref mut i,
                        ref mut j,
                        ref mut anchor,
                        ref mut difference_form,
                    } = even
                    {
                        match key {
                            "i" => *i = parse_index(value)?,
                            "j" => *j = parse_index(value)?,
                            "anchor" => *anchor = parse_index(value)?,
                            _ => {
                                *difference_form = match value {
                                    "true" => true,
                                    "false" => false,
                                    other => return Err(format!("bad boolean {other:?}")),
                                }
                            }
                        }
                    }
                    self.bannai_ito.case = even;
                }
                other => return Err(format!("unknown key {other:?} in [bannai_ito]")),
            },
            "tau_hr" | "tau_hb" => {
                let t = if section == "tau_hr" {
                    &mut self.tau_hr
                } else {
                    &mut self.tau_hb
                };
                match key {
                    "tau0" => t.tau0 = r(value)?,
                    "tau1" => t.tau1 = r(value)?,
                    "tau2" => t.tau2 = r(value)?,
                    "tau3" => t.tau3 = r(value)?,
                    "tau4" => t.tau4 = r(value)?,
                    other => return Err(format!("unknown key {other:?} in [{section}]")),
                }
            }
            "upsilon" => match key {
                "a1" => self.upsilon.a1 = r(value)?,
                "a2" => self.upsilon.a2 = r(value)?,
                "c1" => self.upsilon.c1 = r(value)?,
                "c2" => self.upsilon.c2 = r(value)?,
                other => return Err(format!("unknown key {other:?} in [upsilon]")),
            },
            "sampling" => match key {
                "seed" => {
                    self.sampling.seed = value
                        .parse::<u64>()
                        .map_err(|_| format!("bad seed {value:?}"))?
                }
                "trials" => self.sampling.trials = u(value)?,
                "numerator_bound" => {
                    let b = value
                        .parse::<i64>()
                        .map_err(|_| format!("bad bound {value:?}"))?;
                    if b < 1 {
                        return Err("numerator_bound must be at least 1".into());
                    }
                    self.sampling.numerator_bound = b;
                }
                "denominator_bound" => {
                    let b = value
                        .parse::<i64>()
                        .map_err(|_| format!("bad bound {value:?}"))?;
                    if b < 1 {
                        return Err("denominator_bound must be at least 1".into());
                    }
                    self.sampling.denominator_bound = b;
                }
                other => return Err(format!("unknown key {other:?} in [sampling]")),
            },
            "run" => match key {
                "suites" => {
                    let mut suites = Vec::new();
                    for part in value.split(',') {
                        let name = part.trim();
                        match Suite::from_name(name) {
                            Some(s) if !suites.contains(&s) => suites.push(s),
                            Some(_) => {}
                            None => return Err(format!("unknown suite {name:?}")),
                        }
                    }
                    if suites.is_empty() {
                        return Err("suites list is empty".into());
                    }
                    self.suites = suites;
                }
                other => return Err(format!("unknown key {other:?} in [run]")),
            },
            "" => return Err(format!("key {key:?} appears before any section header")),
            other => return Err(format!("unknown section [{other}]")),
        }
        Ok(())
    }
}

fn parse_index(value: &str) -> Result<u8, String> {
    match value {
        "1" => Ok(1),
        "2" => Ok(2),
        other => Err(format!("index must be 1 or 2, got {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_build() {
        let cfg = Config::default();
        assert!(cfg.racah.build().is_ok());
        assert!(cfg.bannai_ito.build().is_ok());
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let cfg = Config::parse(
            "# comment\n[racah]\nalpha = -4\nn = 3\ngamma = 2/7\n\n[sampling]\ntrials = 0\nseed = 7\n[run]\nsuites = racah, upsilon\n",
        )
        .unwrap();
        assert_eq!(cfg.racah.n, 3);
        assert_eq!(cfg.racah.gamma, rat(2, 7));
        assert_eq!(cfg.sampling.trials, 0);
        assert_eq!(cfg.suites, vec![Suite::Racah, Suite::Upsilon]);

        let err = Config::parse("[racah]\nomega = 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = Config::parse("[nope]\n").unwrap_err();
        assert!(err.to_string().contains("unknown section"), "{err}");
        let err = Config::parse("alpha = 1\n").unwrap_err();
        assert!(err.to_string().contains("before any section"), "{err}");
        let err = Config::parse("[racah]\nalpha = 1/0\n").unwrap_err();
        assert!(err.to_string().contains("bad rational"), "{err}");
    }

    #[test]
    fn guard_violations_named() {
        // alpha truncation requires alpha + 1 = -N
        let cfg = Config::parse("[racah]\nalpha = -5\nn = 2\n").unwrap();
        let err = cfg.racah.build().unwrap_err();
        assert!(err.to_string().contains("alpha+1"), "{err}");
    }
}
