use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Group of related checks, e.g. one congruence block.
    pub block: String,
    pub name: String,
    pub status: Status,
    pub evidence: String,
    pub mandatory: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, block: &str, name: impl Into<String>, ok: bool, evidence: impl Into<String>) {
        self.checks.push(Check {
            block: block.into(),
            name: name.into(),
            status: Status::from_bool(ok),
            evidence: evidence.into(),
            mandatory: true,
        });
    }

    pub fn skip(&mut self, block: &str, name: impl Into<String>, reason: impl Into<String>, mandatory: bool) {
        self.checks.push(Check {
            block: block.into(),
            name: name.into(),
            status: Status::Skipped,
            evidence: reason.into(),
            mandatory,
        });
    }

    /// No mandatory check failed or was skipped.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.mandatory || c.status == Status::Pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.mandatory && c.status != Status::Pass)
    }

    pub fn block(&self, block: &str) -> impl Iterator<Item = &Check> {
        let block = String::from(block);
        self.checks.iter().filter(move |c| c.block == block)
    }

    /// Every check in `block` passed; `None` when the block is empty.
    pub fn block_passed(&self, block: &str) -> Option<bool> {
        let mut any = false;
        for c in self.block(block) {
            any = true;
            if c.status != Status::Pass {
                return Some(false);
            }
        }
        any.then_some(true)
    }

    pub fn find(&self, block: &str, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.block == block && c.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {} ({})", c.status.as_str(), c.block, c.name, c.evidence)?;
        }
        write!(f, "overall: {}", if self.passed() { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let mut r = CheckReport::default();
        assert!(r.passed());
        r.push("b", "x", true, "");
        assert!(r.passed());
        r.skip("b", "optional", "no data", false);
        assert!(r.passed());
        assert_eq!(r.block_passed("b"), Some(false));
        r.skip("c", "required", "no data", true);
        assert!(!r.passed());
        assert_eq!(r.failing().count(), 1);
        assert_eq!(r.block_passed("zzz"), None);
    }
}
