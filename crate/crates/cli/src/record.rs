//! One-line `key=value` result records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use varregion::ExtendedReal;

use crate::number::{parse_extended, parse_f64, render_extended, render_f64};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ClassTag {
    S,
    Star,
    Convex,
    Ctc,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::S => "s",
            ClassTag::Star => "star",
            ClassTag::Convex => "convex",
            ClassTag::Ctc => "ctc",
        }
    }
}

impl FromStr for ClassTag {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "s" => Ok(ClassTag::S),
            "star" => Ok(ClassTag::Star),
            "convex" => Ok(ClassTag::Convex),
            "ctc" => Ok(ClassTag::Ctc),
            _ => Err(CliError::Parse(format!("unknown class {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functional {
    PhiPlus,
    PhiMinus,
    Psi,
    PsiMinus,
    Power,
    B0,
}

impl Functional {
    pub fn as_str(self) -> &'static str {
        match self {
            Functional::PhiPlus => "phi_plus",
            Functional::PhiMinus => "phi_minus",
            Functional::Psi => "psi",
            Functional::PsiMinus => "psi_minus",
            Functional::Power => "power",
            Functional::B0 => "b0",
        }
    }
}

impl FromStr for Functional {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "phi_plus" => Functional::PhiPlus,
            "phi_minus" => Functional::PhiMinus,
            "psi" => Functional::Psi,
            "psi_minus" => Functional::PsiMinus,
            "power" => Functional::Power,
            "b0" => Functional::B0,
            _ => return Err(CliError::Parse(format!("unknown functional {s:?}"))),
        })
    }
}

/// Whether the value is a lower or upper bound; only reported where it is not
/// implied by the functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Inf,
    Sup,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub class: ClassTag,
    pub functional: Functional,
    pub params: BTreeMap<String, f64>,
    pub value: ExtendedReal,
    pub bound: Option<Bound>,
    pub method: Option<String>,
}

const RESERVED: [&str; 5] = ["class", "functional", "value", "bound", "method"];

impl ResultRecord {
    pub fn new(class: ClassTag, functional: Functional, value: ExtendedReal) -> Self {
        ResultRecord { class, functional, params: BTreeMap::new(), value, bound: None, method: None }
    }

    pub fn param(mut self, name: &str, v: f64) -> Self {
        self.params.insert(name.to_string(), v);
        self
    }

    pub fn with_bound(mut self, b: Bound) -> Self {
        self.bound = Some(b);
        self
    }

    pub fn with_method(mut self, m: &str) -> Self {
        self.method = Some(m.to_string());
        self
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(line: &str) -> Result<Self, CliError> {
        line.parse()
    }
}

impl fmt::Display for ResultRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class={} functional={}", self.class.as_str(), self.functional.as_str())?;
        if let Some(m) = &self.method {
            write!(f, " method={m}")?;
        }
        for (k, v) in &self.params {
            write!(f, " {k}={}", render_f64(*v))?;
        }
        if let Some(b) = self.bound {
            write!(f, " bound={}", if b == Bound::Inf { "inf" } else { "sup" })?;
        }
        write!(f, " value={}", render_extended(self.value))
    }
}

impl FromStr for ResultRecord {
    type Err = CliError;

    fn from_str(line: &str) -> Result<Self, CliError> {
        let (mut class, mut functional, mut value) = (None, None, None);
        let mut rec_bound = None;
        let mut method = None;
        let mut params = BTreeMap::new();
        for field in line.split_whitespace() {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("field without '=': {field:?}")))?;
            match k {
                "class" => class = Some(v.parse()?),
                "functional" => functional = Some(v.parse()?),
                "value" => value = Some(parse_extended(v)?),
                "method" => method = Some(v.to_string()),
                "bound" => {
                    rec_bound = Some(match v {
                        "inf" => Bound::Inf,
                        "sup" => Bound::Sup,
                        _ => return Err(CliError::Parse(format!("unknown bound {v:?}"))),
                    })
                }
                _ => {
                    if params.insert(k.to_string(), parse_f64(v)?).is_some() {
                        return Err(CliError::Parse(format!("duplicate key {k:?}")));
                    }
                }
            }
        }
        let missing = |what: &str| CliError::Parse(format!("record lacks {what}"));
        Ok(ResultRecord {
            class: class.ok_or_else(|| missing("class"))?,
            functional: functional.ok_or_else(|| missing("functional"))?,
            params,
            value: value.ok_or_else(|| missing("value"))?,
            bound: rec_bound,
            method,
        })
    }
}

/// Parameter names usable in a record: nonempty, no `=` or whitespace, not a
/// reserved key.
pub fn valid_param_name(k: &str) -> bool {
    !k.is_empty() && !RESERVED.contains(&k) && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_example() {
        let r = ResultRecord::new(ClassTag::Ctc, Functional::PhiMinus, ExtendedReal::Finite(-(4f64.ln()))).param("b", 0.0);
        assert_eq!(r.render(), "class=ctc functional=phi_minus b=0.00000000 value=-1.3862943611198906");
        assert_eq!(ResultRecord::parse(&r.render()).unwrap(), r);
    }

    #[test]
    fn rejects_garbage() {
        assert!(ResultRecord::parse("class=ctc value=1").is_err());
        assert!(ResultRecord::parse("class=foo functional=psi value=1").is_err());
        assert!(ResultRecord::parse("class=s functional=psi b=1 b=2 value=1").is_err());
        assert!(ResultRecord::parse("class=s functional=psi value").is_err());
    }
}
