//! Generator specs: `family:key=val,...[:seed=s]`.
//!
//! | family           | keys                                        |
//! |------------------|---------------------------------------------|
//! | `gk`             | `k`                                         |
//! | `crown`          | `n`                                         |
//! | `grid`           | `r`, `c`                                    |
//! | `random_hconvex` | `kind` (path, cycle, tree), `a`, `b`, `t`, `delta` (tree only) |
//! | `chordal`        | `a`, `b`                                    |
//!
//! Dashes and underscores are interchangeable in family names.

use std::collections::BTreeMap;
use std::str::FromStr;

use hconvex_core::families::{
    gen_crown, gen_gk, gen_grid, gen_random_chordal_bipartite, gen_random_hconvex, HostShape,
};
use hconvex_core::{BipartiteGraph, SupportWitness};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
}

impl FromStr for GenSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| CliError::Invalid(format!("generator spec `{s}`: {why}"));
        let mut parts = s.split(':');
        let family = parts.next().unwrap_or_default().trim().replace('-', "_");
        if family.is_empty() {
            return Err(bad("missing family"));
        }
        let mut params = BTreeMap::new();
        let mut seed = None;
        for (i, part) in parts.enumerate() {
            if let Some(value) = part.strip_prefix("seed=") {
                seed = Some(value.parse().map_err(|_| bad("seed is not an integer"))?);
                continue;
            }
            if i > 0 || seed.is_some() {
                return Err(bad("expected `family:key=val,...[:seed=s]`"));
            }
            for pair in part.split(',').filter(|p| !p.is_empty()) {
                let (key, value) = pair.split_once('=').ok_or_else(|| bad("parameters are `key=val`"))?;
                if params.insert(key.trim().to_string(), value.trim().to_string()).is_some() {
                    return Err(bad(&format!("parameter `{key}` repeated")));
                }
            }
        }
        Ok(GenSpec { family, params, seed })
    }
}

impl GenSpec {
    fn int(&self, key: &str) -> Result<usize> {
        let v = self
            .params
            .get(key)
            .ok_or_else(|| CliError::Invalid(format!("{}: missing parameter `{key}`", self.family)))?;
        v.parse()
            .map_err(|_| CliError::Invalid(format!("{}: parameter `{key}` is not a non-negative integer", self.family)))
    }

    fn only(&self, keys: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(CliError::Invalid(format!("{}: unknown parameter `{k}`", self.family))),
            None => Ok(()),
        }
    }

    /// The graph and, where the family plants one, its support.
    pub fn generate(&self, default_seed: u64) -> Result<(BipartiteGraph, Option<SupportWitness>)> {
        let seed = self.seed.unwrap_or(default_seed);
        match self.family.as_str() {
            "gk" => {
                self.only(&["k"])?;
                Ok((gen_gk(self.int("k")?)?, None))
            }
            "crown" => {
                self.only(&["n"])?;
                let n = self.int("n")?;
                if n < 2 {
                    return Err(CliError::Invalid("crown: n must be at least 2".into()));
                }
                let (g, w) = gen_crown(n);
                Ok((g, Some(w)))
            }
            "grid" => {
                self.only(&["r", "c"])?;
                let (r, c) = (self.int("r")?, self.int("c")?);
                if r == 0 || c == 0 {
                    return Err(CliError::Invalid("grid: r and c must be positive".into()));
                }
                Ok((gen_grid(r, c), None))
            }
            "random_hconvex" => {
                let kind = self.params.get("kind").map(String::as_str).unwrap_or("path");
                let shape = match kind {
                    "path" => HostShape::Path,
                    "cycle" => HostShape::Cycle,
                    "tree" => HostShape::Tree { t: self.int("t")?, delta: self.int("delta")? },
                    other => return Err(CliError::Invalid(format!("random_hconvex: unknown kind `{other}`"))),
                };
                if kind == "tree" {
                    self.only(&["kind", "a", "b", "t", "delta"])?;
                } else {
                    self.only(&["kind", "a", "b"])?;
                }
                let (g, w) = gen_random_hconvex(shape, self.int("a")?, self.int("b")?, seed)?;
                Ok((g, Some(w)))
            }
            "chordal" => {
                self.only(&["a", "b"])?;
                Ok((gen_random_chordal_bipartite(self.int("a")?, self.int("b")?, seed), None))
            }
            other => Err(CliError::Invalid(format!("unknown family `{other}`"))),
        }
    }

    /// File stem naming the instance, e.g. `crown_n4` or `grid_r3_c3_s0`.
    pub fn stem(&self, default_seed: u64) -> String {
        let mut stem = self.family.clone();
        for (k, v) in &self.params {
            stem.push_str(&format!("_{k}{v}"));
        }
        if matches!(self.family.as_str(), "random_hconvex" | "chordal") {
            stem.push_str(&format!("_s{}", self.seed.unwrap_or(default_seed)));
        }
        stem
    }
}
