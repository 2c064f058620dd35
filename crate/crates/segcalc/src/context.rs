use crate::error::{Error, Result};
use crate::sign::Sign;

/// Arithmetic context shared by every command: the degree `d` of the central
/// division algebra (so `dim D = d^2`) and the value of `eta_{E/F}` at -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Context {
    d: u32,
    eta: Sign,
}

impl Context {
    pub fn new(d: u32, eta: Sign) -> Result<Context> {
        if d == 0 {
            return Err(Error::Precondition("d must be a positive integer".into()));
        }
        Ok(Context { d, eta })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn eta(&self) -> Sign {
        self.eta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_degree() {
        assert!(Context::new(0, Sign::Plus).is_err());
        assert!(Context::new(1, Sign::Minus).is_ok());
    }
}
