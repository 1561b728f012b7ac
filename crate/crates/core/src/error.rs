use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("enumeration guard exceeded: {0} (set REGMA_GUARD_OVERRIDE=1 to lift)")]
    Guard(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("no solution: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// True when REGMA_GUARD_OVERRIDE is set to anything but "" or "0".
pub fn guard_overridden() -> bool {
    match std::env::var("REGMA_GUARD_OVERRIDE") {
        Ok(v) => !v.is_empty() && v != "0",
        Err(_) => false,
    }
}

pub(crate) fn check_guard(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok || guard_overridden() {
        Ok(())
    } else {
        Err(Error::Guard(what()))
    }
}
