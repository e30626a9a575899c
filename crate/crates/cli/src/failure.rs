use serde::Serialize;

/// A failed invocation: the error document and the process exit code.
#[derive(Debug, Serialize)]
pub struct Failure {
    pub error: &'static str,
    pub message: String,
    #[serde(skip)]
    pub code: i32,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure { error: "parse", message: message.into(), code: 1 }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure { error: "io", message: message.into(), code: 1 }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Failure { error: "precondition", message: message.into(), code: 2 }
    }
}

impl From<concyclic::Error> for Failure {
    fn from(e: concyclic::Error) -> Self {
        use concyclic::Error::*;
        let (error, code) = match e {
            PreconditionViolated(_) => ("precondition", 2),
            TooLarge { .. } | SearchTooWide(_) => ("guard", 2),
            _ => ("input", 1),
        };
        Failure { error, message: e.to_string(), code }
    }
}
