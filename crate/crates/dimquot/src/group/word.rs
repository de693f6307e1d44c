use std::fmt;

/// Word in named generators: a sequence of `(name, exponent)` terms.
/// Names resolve against a group's bound generator names at evaluation
/// time; exponents may be negative or zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    terms: Vec<(String, i64)>,
}

impl Word {
    pub fn new(terms: Vec<(String, i64)>) -> Self {
        Word { terms }
    }

    pub fn terms(&self) -> &[(String, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        for (i, (name, exp)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}
