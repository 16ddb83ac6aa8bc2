//! Check-row bookkeeping shared by every reporting surface.
//!
//! Two kinds of rows: identities the toolkit can decide on its own
//! (failures here are bugs or broken input) and comparisons against
//! recorded construction values (disagreement is worth flagging but
//! does not invalidate the run).

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// Internally decidable; a failure is a hard error.
    Identity,
    /// Comparison against a recorded construction value.
    Recorded,
}

impl Category {
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Identity => "identity",
            Category::Recorded => "recorded",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A failed identity.
    Fail,
    /// A recorded value the recomputation does not reproduce.
    Mismatch,
}

impl Status {
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub category: Category,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Where the expected side comes from: an oracle name or the
    /// recorded construction data.
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    title: String,
    checks: Vec<Check>,
}

impl Report {
    #[must_use]
    pub fn new(title: &str) -> Self {
        Report {
            title: String::from(title),
            checks: Vec::new(),
        }
    }

    #[must_use]
    pub fn title(&self) -> &str {
        &self.title
    }

    #[must_use]
    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    fn push(&mut self, check: Check) {
        assert!(
            self.checks.iter().all(|c| c.name != check.name),
            "duplicate check name: {}",
            check.name
        );
        self.checks.push(check);
    }

    /// Adds an identity row; `ok` decides pass versus hard failure.
    pub fn identity(
        &mut self,
        name: &str,
        ok: bool,
        computed: String,
        expected: String,
        note: &str,
    ) {
        self.push(Check {
            name: String::from(name),
            category: Category::Identity,
            status: if ok { Status::Pass } else { Status::Fail },
            computed,
            expected,
            note: String::from(note),
        });
    }

    /// Adds a comparison row against a recorded value; disagreement is
    /// a mismatch, never a hard failure.
    pub fn recorded(
        &mut self,
        name: &str,
        agrees: bool,
        computed: String,
        recorded: String,
        note: &str,
    ) {
        self.push(Check {
            name: String::from(name),
            category: Category::Recorded,
            status: if agrees {
                Status::Pass
            } else {
                Status::Mismatch
            },
            computed,
            expected: recorded,
            note: String::from(note),
        });
    }

    /// Appends all rows of `other`, keeping name uniqueness.
    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    #[must_use]
    pub fn hard_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    #[must_use]
    pub fn mismatches(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Mismatch)
            .count()
    }

    /// True when no identity row failed; mismatches are tolerated.
    #[must_use]
    pub fn is_clean(&self) -> bool {
        self.hard_failures() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn statuses_follow_category_rules() {
        let mut r = Report::new("demo");
        r.identity("sum", true, format!("{}", 4), format!("{}", 4), "oracle");
        r.identity(
            "product",
            false,
            format!("{}", 5),
            format!("{}", 6),
            "oracle",
        );
        r.recorded(
            "count",
            false,
            format!("{}", 10),
            format!("{}", 8),
            "recorded value",
        );
        assert_eq!(r.checks()[0].status, Status::Pass);
        assert_eq!(r.checks()[1].status, Status::Fail);
        assert_eq!(r.checks()[2].status, Status::Mismatch);
        assert_eq!(r.hard_failures(), 1);
        assert_eq!(r.mismatches(), 1);
        assert!(!r.is_clean());
    }

    #[test]
    fn merge_preserves_rows_and_uniqueness() {
        let mut a = Report::new("a");
        a.identity("one", true, String::from("x"), String::from("x"), "");
        let mut b = Report::new("b");
        b.recorded("two", true, String::from("y"), String::from("y"), "");
        a.merge(b);
        assert_eq!(a.checks().len(), 2);
        assert!(a.is_clean());
        assert_eq!(a.mismatches(), 0);
    }

    #[test]
    #[should_panic(expected = "duplicate check name")]
    fn duplicate_names_are_rejected() {
        let mut r = Report::new("demo");
        r.identity("same", true, String::new(), String::new(), "");
        r.identity("same", true, String::new(), String::new(), "");
    }
}
