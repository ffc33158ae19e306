/// Outcome of an exhaustive property check.
///
/// `Fails` carries the first witness found in the canonical scan order, so
/// two runs over the same input report the same witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }
}

impl<W> From<Result<(), W>> for Verdict<W> {
    fn from(r: Result<(), W>) -> Self {
        match r {
            Ok(()) => Verdict::Holds,
            Err(w) => Verdict::Fails(w),
        }
    }
}
