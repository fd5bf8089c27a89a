use std::collections::BTreeMap;
use std::fmt;

use crate::arith::factor::FactorCert;
use crate::geometry::PrimeDivisor;

/// The identity a certificate speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    KerDiv,
    TameImage,
    ComplexSquareZero,
    Reciprocity,
    DiagramCommutes,
    TangentCocycle,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::KerDiv => "ker-div",
            Claim::TameImage => "tame-image",
            Claim::ComplexSquareZero => "complex-square-zero",
            Claim::Reciprocity => "reciprocity",
            Claim::DiagramCommutes => "diagram-commutes",
            Claim::TangentCocycle => "tangent-cocycle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Seed and irreducibility evidence behind a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub seed: u64,
    pub factors: BTreeMap<PrimeDivisor, FactorCert>,
}

impl Provenance {
    pub fn new(seed: u64) -> Self {
        Provenance { seed, factors: BTreeMap::new() }
    }

    pub fn record(&mut self, p: &PrimeDivisor) {
        if !p.is_inf() {
            self.factors.insert(p.clone(), p.cert());
        }
    }

    pub fn record_all<'a>(&mut self, ps: impl IntoIterator<Item = &'a PrimeDivisor>) {
        for p in ps {
            self.record(p);
        }
    }
}

/// A self-contained record of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: Claim,
    pub inputs: Vec<(String, String)>,
    pub verdict: Verdict,
    /// Canonical rendering of the object that must vanish for a pass.
    pub witness: String,
    pub detail: Vec<String>,
    pub provenance: Provenance,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(claim: Claim, seed: u64) -> Self {
        Certificate {
            claim,
            inputs: Vec::new(),
            verdict: Verdict::Fail,
            witness: String::new(),
            detail: Vec::new(),
            provenance: Provenance::new(seed),
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    /// `key: value` lines with list items indented two spaces; field order is fixed.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("claim: {}", self.claim), "inputs:".to_string()];
        out.extend(self.inputs.iter().map(|(k, v)| format!("  {k}: {v}")));
        out.push(format!("verdict: {}", self.verdict));
        out.push(format!("witness: {}", self.witness));
        if !self.detail.is_empty() {
            out.push("detail:".to_string());
            out.extend(self.detail.iter().map(|d| format!("  {d}")));
        }
        out.push("provenance:".to_string());
        out.push(format!("  seed: {}", self.provenance.seed));
        for (p, c) in &self.provenance.factors {
            out.push(format!("  factor {p}: {c}"));
        }
        if !self.notes.is_empty() {
            out.push("notes:".to_string());
            out.extend(self.notes.iter().map(|n| format!("  {n}")));
        }
        out
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
