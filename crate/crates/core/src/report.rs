//! Verification reports and the sweep runner that produces them.
//!
//! Every `check_*` function in the crate enumerates its cases in a fixed
//! (lexicographic) order, evaluates them in parallel and reports the first
//! failing case in that order, so reports do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input_error",
        }
    }

    fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "input_error" => Some(Status::InputError),
            _ => None,
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first failing case of a sweep, in exact text form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: BTreeMap<String, i64>,
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn index(mut self, name: &str, value: i64) -> Self {
        self.indices.insert(name.to_string(), value);
        self
    }

    pub fn input(mut self, input: impl Display) -> Self {
        self.input = single_line(input);
        self
    }

    pub fn expected(mut self, expected: impl Display) -> Self {
        self.expected = single_line(expected);
        self
    }

    pub fn actual(mut self, actual: impl Display) -> Self {
        self.actual = single_line(actual);
        self
    }
}

fn single_line(x: impl Display) -> String {
    x.to_string().replace('\n', " ")
}

/// Compares `expected` and `actual`; on mismatch builds a counterexample via `build`.
pub fn expect_eq<T: PartialEq + Display>(
    expected: &T,
    actual: &T,
    build: impl FnOnce() -> Counterexample,
) -> Option<Counterexample> {
    if expected == actual {
        None
    } else {
        Some(build().expected(expected).actual(actual))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub checked_count: u64,
    /// Set for `input_error` reports only.
    pub message: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn input_error(check: Check, message: impl Display) -> Self {
        VerificationReport {
            check_name: check.name,
            parameters: check.parameters,
            status: Status::InputError,
            counterexample: None,
            checked_count: 0,
            message: Some(single_line(message)),
        }
    }

    /// Line-oriented `key: value` rendering; [`VerificationReport::from_text`]
    /// reads it back.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("check: {}\n", self.check_name));
        out.push_str(&format!("status: {}\n", self.status));
        out.push_str(&format!("checked_count: {}\n", self.checked_count));
        for (k, v) in &self.parameters {
            out.push_str(&format!("param {k}: {v}\n"));
        }
        if let Some(cx) = &self.counterexample {
            for (k, v) in &cx.indices {
                out.push_str(&format!("counterexample index {k}: {v}\n"));
            }
            out.push_str(&format!("counterexample input: {}\n", cx.input));
            out.push_str(&format!("counterexample expected: {}\n", cx.expected));
            out.push_str(&format!("counterexample actual: {}\n", cx.actual));
        }
        if let Some(msg) = &self.message {
            out.push_str(&format!("message: {msg}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, String> {
        let mut check_name = None;
        let mut status = None;
        let mut checked_count = None;
        let mut parameters = BTreeMap::new();
        let mut cx: Option<Counterexample> = None;
        let mut message = None;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (key, value) = line
                .split_once(": ")
                .or_else(|| line.strip_suffix(':').map(|k| (k, "")))
                .ok_or_else(|| format!("malformed report line {line:?}"))?;
            let value = value.to_string();
            if let Some(name) = key.strip_prefix("param ") {
                parameters.insert(name.to_string(), value);
            } else if let Some(name) = key.strip_prefix("counterexample index ") {
                let idx = value
                    .parse()
                    .map_err(|_| format!("bad index in line {line:?}"))?;
                cx.get_or_insert_with(Counterexample::new)
                    .indices
                    .insert(name.to_string(), idx);
            } else {
                match key {
                    "check" => check_name = Some(value),
                    "status" => {
                        status = Some(
                            Status::parse(&value).ok_or_else(|| format!("bad status {value:?}"))?,
                        )
                    }
                    "checked_count" => {
                        checked_count = Some(
                            value
                                .parse()
                                .map_err(|_| format!("bad checked_count {value:?}"))?,
                        )
                    }
                    "counterexample input" => {
                        cx.get_or_insert_with(Counterexample::new).input = value
                    }
                    "counterexample expected" => {
                        cx.get_or_insert_with(Counterexample::new).expected = value
                    }
                    "counterexample actual" => {
                        cx.get_or_insert_with(Counterexample::new).actual = value
                    }
                    "message" => message = Some(value),
                    other => return Err(format!("unknown report key {other:?}")),
                }
            }
        }
        Ok(VerificationReport {
            check_name: check_name.ok_or("missing check")?,
            parameters,
            status: status.ok_or("missing status")?,
            counterexample: cx,
            checked_count: checked_count.ok_or("missing checked_count")?,
            message,
        })
    }
}

/// A named check with its parameters, ready to run a sweep.
#[derive(Debug, Clone)]
pub struct Check {
    name: String,
    parameters: BTreeMap<String, String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Evaluates `case` on every element of `cases` and reports the first
    /// failure in slice order.
    pub fn run<T, F>(self, cases: &[T], case: F) -> VerificationReport
    where
        T: Sync,
        F: Fn(&T) -> Option<Counterexample> + Sync,
    {
        let failure = cases
            .par_iter()
            .map(&case)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        self.finish(cases.len() as u64, failure)
    }

    pub fn finish(self, checked_count: u64, failure: Option<Counterexample>) -> VerificationReport {
        VerificationReport {
            check_name: self.name,
            parameters: self.parameters,
            status: if failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample: failure,
            checked_count,
            message: None,
        }
    }
}

/// All integers in `[-bound, bound]`.
pub fn symmetric_range(bound: u64) -> std::ops::RangeInclusive<i64> {
    let b = bound as i64;
    -b..=b
}
