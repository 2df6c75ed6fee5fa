/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First violating basis indices, when the check failed on a component.
    pub witness: Option<Vec<usize>>,
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            witness,
            detail: None,
        }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, Some(w)),
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool) -> Self {
        if passed {
            Self::pass(name)
        } else {
            Self::fail(name, None)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// First index tuple in `0..dim` (lexicographic, `arity` slots) where `pred` is false.
pub fn first_failure(dim: usize, arity: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut idx = vec![0usize; arity];
    loop {
        if !pred(&idx) {
            return Some(idx);
        }
        let mut s = arity;
        loop {
            if s == 0 {
                return None;
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < dim {
                break;
            }
            idx[s] = 0;
        }
    }
}
