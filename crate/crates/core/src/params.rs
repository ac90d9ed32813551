use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{consts, RatFuncQ};

/// Scalars that fix a Freidel-Maillet presentation: `k+`, `k-` and the seed
/// diagonal `eps+`, `eps-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMParams {
    pub k_plus: RatFuncQ,
    pub k_minus: RatFuncQ,
    pub eps_plus: RatFuncQ,
    pub eps_minus: RatFuncQ,
    rho_bar: RatFuncQ,
}

impl FMParams {
    pub fn new(
        k_plus: RatFuncQ,
        k_minus: RatFuncQ,
        eps_plus: RatFuncQ,
        eps_minus: RatFuncQ,
    ) -> Result<Self> {
        if k_plus.is_zero() || k_minus.is_zero() {
            return Err(Error::ConfigInvalid(
                "k+ and k- must be nonzero (rho-bar would vanish)".into(),
            ));
        }
        let rho_bar = &(&k_plus * &k_minus) * &consts::qp().pow(2);
        Ok(FMParams {
            k_plus,
            k_minus,
            eps_plus,
            eps_minus,
            rho_bar,
        })
    }

    /// `rho-bar = k+ k- (q + q^-1)^2`
    pub fn rho_bar(&self) -> &RatFuncQ {
        &self.rho_bar
    }

    /// Same `k` and `eps` values with every generator-level formula using `rho`
    /// in place of `k+ k- (q+q^-1)^2`. Only the alternating-generator recursions
    /// consult this override (used for the q -> 1 specialization).
    pub fn with_rho_bar(mut self, rho: RatFuncQ) -> Result<Self> {
        if rho.is_zero() {
            return Err(Error::ConfigInvalid("rho-bar must be nonzero".into()));
        }
        self.rho_bar = rho;
        Ok(self)
    }

    /// `rho-bar / (q - q^-1)`, the scalar playing the role of `G_0 = G~_0`.
    pub fn g0(&self) -> RatFuncQ {
        &self.rho_bar / &consts::qm()
    }

    pub fn summary(&self) -> ParamSummary {
        ParamSummary {
            k_plus: self.k_plus.to_string(),
            k_minus: self.k_minus.to_string(),
            eps_plus: self.eps_plus.to_string(),
            eps_minus: self.eps_minus.to_string(),
            rho_bar: self.rho_bar.to_string(),
        }
    }
}

impl Default for FMParams {
    /// `k+ = q^2`, `k- = -q^-1`, `eps+ = eps- = 1`, so `rho-bar = -q (q + q^-1)^2`.
    fn default() -> Self {
        FMParams::new(
            RatFuncQ::q_pow(2),
            -RatFuncQ::q_pow(-1),
            RatFuncQ::one(),
            RatFuncQ::one(),
        )
        .expect("default parameters are valid")
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParamSummary {
    pub k_plus: String,
    pub k_minus: String,
    pub eps_plus: String,
    pub eps_minus: String,
    pub rho_bar: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_rho() {
        let p = FMParams::default();
        assert_eq!(*p.rho_bar(), -(RatFuncQ::q() * consts::qp().pow(2)));
    }

    #[test]
    fn rejects_zero_k() {
        assert!(FMParams::new(
            RatFuncQ::zero(),
            RatFuncQ::one(),
            RatFuncQ::one(),
            RatFuncQ::one()
        )
        .is_err());
    }
}
