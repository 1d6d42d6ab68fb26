use serde::Serialize;

/// The first input at which a checked claim broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of checking one claim over a stated range.
///
/// `passed` is true exactly when `counterexample` is absent. `note` carries
/// an erratum annotation and never affects `passed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub claim_id: String,
    pub range: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl VerificationOutcome {
    pub fn pass(claim_id: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationOutcome {
            claim_id: claim_id.into(),
            range: range.into(),
            passed: true,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(
        claim_id: impl Into<String>,
        range: impl Into<String>,
        counterexample: Counterexample,
    ) -> Self {
        VerificationOutcome {
            claim_id: claim_id.into(),
            range: range.into(),
            passed: false,
            counterexample: Some(counterexample),
            note: None,
        }
    }

    /// Pass when `counterexample` is `None`, fail otherwise.
    pub fn from_check(
        claim_id: impl Into<String>,
        range: impl Into<String>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        match counterexample {
            None => Self::pass(claim_id, range),
            Some(cx) => Self::fail(claim_id, range, cx),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl Counterexample {
    pub fn new(
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        Counterexample {
            input: input.into(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}
