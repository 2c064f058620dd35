//! Root-number sign bookkeeping for distinguished standard modules.
//!
//! Given the involution produced by the classifier, the product of root
//! numbers `eps(pi) eps(pi (x) eta)` factors over the orbits of the
//! involution:
//!
//! * a dual pair {i, sigma(i)} contributes `eta(-1)^(n_i d)` (the central
//!   characters square away),
//! * a fixed point contributes `(-1)^(n_i) eta(-1)^(n_i d / 2)` from the
//!   essentially square-integrable base case,
//!
//! and the total always equals the predicted `(-1)^n eta(-1)^(n d / 2)`.
//! Only the sign relations are modeled; exponents live in Z/2.

use crate::context::Context;
use crate::error::{Error, Result};
use crate::perm::Involution;
use crate::sign::Sign;

/// The data a sign computation consumes: the context, the involution, the
/// group sizes `n_i` and the formal central-character values `omega_i(-1)`.
#[derive(Debug, Clone)]
pub struct SignConfig {
    ctx: Context,
    sigma: Involution,
    sizes: Vec<u64>,
    omega: Vec<Sign>,
}

impl SignConfig {
    /// Validates the invariants: matching lengths, `n_{sigma(i)} = n_i`,
    /// `omega_{sigma(i)} = omega_i`, positive sizes, and the embedding
    /// condition `n_i * d` even at every fixed point.
    pub fn new(
        ctx: Context,
        sigma: Involution,
        sizes: Vec<u64>,
        omega: Vec<Sign>,
    ) -> Result<SignConfig> {
        let t = sigma.size();
        if sizes.len() != t || omega.len() != t {
            return Err(Error::Precondition(
                "sizes and omega must match the involution's domain".into(),
            ));
        }
        if sizes.contains(&0) {
            return Err(Error::Precondition("group sizes must be positive".into()));
        }
        for i in 0..t {
            let j = sigma.apply(i);
            if sizes[j] != sizes[i] {
                return Err(Error::Precondition(format!(
                    "paired indices {} and {} must have equal group sizes",
                    i + 1,
                    j + 1
                )));
            }
            if omega[j] != omega[i] {
                return Err(Error::Precondition(format!(
                    "paired indices {} and {} must share omega(-1)",
                    i + 1,
                    j + 1
                )));
            }
        }
        for i in sigma.fixed_points() {
            if (sizes[i] * ctx.d() as u64) % 2 != 0 {
                return Err(Error::NoEmbedding {
                    n: sizes[i],
                    d: ctx.d(),
                });
            }
        }
        Ok(SignConfig {
            ctx,
            sigma,
            sizes,
            omega,
        })
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn sigma(&self) -> &Involution {
        &self.sigma
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn omega(&self) -> &[Sign] {
        &self.omega
    }

    pub fn total_group_size(&self) -> u64 {
        self.sizes.iter().sum()
    }
}

/// Contribution of the unordered pair {i, sigma(i)}: `eta(-1)^(n_i d)`. The
/// two `omega_i(-1)` factors cancel.
pub fn paired_contribution(cfg: &SignConfig, i: usize) -> Result<Sign> {
    if cfg.sigma.apply(i) == i {
        return Err(Error::Precondition(format!(
            "index {} is a fixed point of sigma",
            i + 1
        )));
    }
    Ok(cfg.ctx.eta().pow(cfg.sizes[i] * cfg.ctx.d() as u64))
}

/// Contribution of a fixed point: `(-1)^(n_i) eta(-1)^(n_i d / 2)`.
pub fn fixed_contribution(cfg: &SignConfig, i: usize) -> Result<Sign> {
    if cfg.sigma.apply(i) != i {
        return Err(Error::Precondition(format!(
            "index {} is not a fixed point of sigma",
            i + 1
        )));
    }
    let nd = cfg.sizes[i] * cfg.ctx.d() as u64;
    if nd % 2 != 0 {
        return Err(Error::NoEmbedding {
            n: cfg.sizes[i],
            d: cfg.ctx.d(),
        });
    }
    Ok(Sign::neg_one_pow(cfg.sizes[i]) * cfg.ctx.eta().pow(nd / 2))
}

/// Product over the orbits of the involution.
pub fn total_sign(cfg: &SignConfig) -> Result<Sign> {
    let mut total = Sign::Plus;
    for (i, _) in cfg.sigma.pairs() {
        total = total * paired_contribution(cfg, i)?;
    }
    for i in cfg.sigma.fixed_points() {
        total = total * fixed_contribution(cfg, i)?;
    }
    Ok(total)
}

/// The predicted value `(-1)^n eta(-1)^(n d / 2)` for total group size n.
pub fn predicted_sign(n: u64, ctx: Context) -> Result<Sign> {
    let nd = n * ctx.d() as u64;
    if nd % 2 != 0 {
        return Err(Error::NoEmbedding { n, d: ctx.d() });
    }
    Ok(Sign::neg_one_pow(n) * ctx.eta().pow(nd / 2))
}

/// The identity `total = predicted`; a `false` return is a bug report.
pub fn verify_sign_identity(cfg: &SignConfig) -> Result<bool> {
    Ok(total_sign(cfg)? == predicted_sign(cfg.total_group_size(), cfg.ctx)?)
}
