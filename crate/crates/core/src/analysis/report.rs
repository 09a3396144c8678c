use std::fmt;

use serde::{Deserialize, Serialize};

use crate::adinkra::{Adinkra, AdinkraDoc};
use crate::codes::BinaryCode;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub instance: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything needed to replay a failed instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
    /// Generator matrix text of the code, when the instance came from one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adinkra: Option<AdinkraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub switch_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Counterexample {
    pub fn new(instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Counterexample { instance: instance.into(), detail: detail.into(), ..Default::default() }
    }

    pub fn with_code(mut self, code: &BinaryCode) -> Self {
        self.code = Some(code.to_generator_text());
        self
    }

    pub fn with_adinkra(mut self, a: &Adinkra) -> Self {
        self.adinkra = Some(AdinkraDoc::from(a));
        self
    }

    pub fn with_switch(mut self, switch: &[usize], seed: u64) -> Self {
        self.switch_set = Some(switch.to_vec());
        self.seed = Some(seed);
        self
    }

    /// The recorded Adinkra, with the switch set applied if there is one.
    pub fn replay_adinkra(&self) -> Result<Option<Adinkra>> {
        let Some(doc) = &self.adinkra else { return Ok(None) };
        let a = doc.to_adinkra_unchecked()?;
        match &self.switch_set {
            Some(w) => Ok(Some(a.vertex_switch(w)?)),
            None => Ok(Some(a)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instances: Vec<InstanceResult>,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>) -> Self {
        TheoremReport { theorem: theorem.into(), instances: Vec::new(), pass: true, counterexample: None }
    }

    /// Records an instance. On the first failure `bundle` supplies the counterexample.
    pub fn record(&mut self, instance: impl Into<String>, pass: bool, detail: impl Into<String>, bundle: impl FnOnce() -> Counterexample) {
        let instance = instance.into();
        let detail = detail.into();
        if !pass && self.counterexample.is_none() {
            let mut c = bundle();
            if c.instance.is_empty() {
                c.instance = instance.clone();
            }
            if c.detail.is_empty() {
                c.detail = detail.clone();
            }
            self.counterexample = Some(c);
        }
        self.pass &= pass;
        self.instances.push(InstanceResult { instance, pass, detail });
    }

    /// Records an instance whose counterexample is just its own name and detail.
    pub fn check(&mut self, instance: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.record(instance, pass, detail, Counterexample::default);
    }

    /// Appends the instances of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: TheoremReport) {
        if !other.pass && self.counterexample.is_none() {
            self.counterexample = other.counterexample.map(|mut c| {
                c.instance = format!("{prefix}{}", c.instance);
                c
            });
        }
        self.pass &= other.pass;
        self.instances.extend(other.instances.into_iter().map(|mut i| {
            i.instance = format!("{prefix}{}", i.instance);
            i
        }));
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|i| !i.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} ({} instances, {failed} failed)",
            self.theorem,
            if self.pass { "PASS" } else { "FAIL" },
            self.instances.len()
        )?;
        for i in &self.instances {
            writeln!(f, "  {} {}: {}", if i.pass { "ok  " } else { "FAIL" }, i.instance, i.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adinkra::hypercube_adinkra;

    #[test]
    fn first_failure_is_kept() {
        let mut r = TheoremReport::new("demo");
        r.check("a", true, "fine");
        assert!(r.pass && r.counterexample.is_none());
        let a = hypercube_adinkra(2).unwrap();
        r.record("b", false, "broken", || Counterexample::default().with_adinkra(&a).with_switch(&[0], 9));
        r.check("c", false, "also broken");
        assert!(!r.pass);
        let c = r.counterexample.as_ref().unwrap();
        assert_eq!(c.instance, "b");
        assert_eq!(c.seed, Some(9));
        let replayed = c.replay_adinkra().unwrap().unwrap();
        assert_eq!(replayed, a.vertex_switch(&[0]).unwrap());
        let json = r.to_json();
        assert_eq!(json["theorem"], "demo");
        assert_eq!(json["pass"], false);
        assert_eq!(json["instances"].as_array().unwrap().len(), 3);
        let back: TheoremReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn absorb_prefixes() {
        let mut outer = TheoremReport::new("outer");
        let mut inner = TheoremReport::new("inner");
        inner.check("x", false, "bad");
        outer.absorb("d4/", inner);
        assert!(!outer.pass);
        assert_eq!(outer.instances[0].instance, "d4/x");
        assert_eq!(outer.counterexample.unwrap().instance, "d4/x");
    }
}
