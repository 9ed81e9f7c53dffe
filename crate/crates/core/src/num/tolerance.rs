use super::Real;

/// Working precision plus the tolerances derived from it.
///
/// `eps_residual` and `eps_rank` are both 2^(-p/2); they are never set
/// independently of the precision. Root clustering uses the square
/// root of the residual tolerance, 2^(-p/4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToleranceProfile {
    pub precision_bits: u32,
    pub max_precision_doublings: u32,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            precision_bits: 256,
            max_precision_doublings: 4,
        }
    }
}

impl ToleranceProfile {
    pub fn new(precision_bits: u32) -> Self {
        ToleranceProfile {
            precision_bits,
            ..Default::default()
        }
    }

    pub fn bits(&self) -> u32 {
        self.precision_bits
    }

    /// Residual acceptance threshold 2^(-p/2), relative to the data norm.
    pub fn eps_residual(&self) -> Real {
        Real::exp2(-(self.precision_bits as i64) / 2, self.precision_bits)
    }

    /// Rank decision threshold 2^(-p/2), relative to the largest singular value.
    pub fn eps_rank(&self) -> Real {
        self.eps_residual()
    }

    /// Root clustering radius 2^(-p/4) = sqrt(eps_residual).
    pub fn cluster_eps(&self) -> Real {
        Real::exp2(-(self.precision_bits as i64) / 4, self.precision_bits)
    }

    /// Doubled-precision profile for escalation.
    pub fn doubled(&self) -> Self {
        ToleranceProfile {
            precision_bits: self.precision_bits * 2,
            max_precision_doublings: self.max_precision_doublings,
        }
    }

    /// The escalation ladder: this profile followed by up to
    /// `max_precision_doublings` doublings.
    pub fn ladder(&self) -> Vec<ToleranceProfile> {
        let mut out = vec![*self];
        for _ in 0..self.max_precision_doublings {
            out.push(out.last().unwrap().doubled());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_tolerances() {
        let p = ToleranceProfile::new(256);
        assert_eq!(p.eps_residual(), Real::exp2(-128, 256));
        assert_eq!(p.cluster_eps(), Real::exp2(-64, 256));
        let ladder = p.ladder();
        assert_eq!(ladder.len(), 5);
        assert_eq!(ladder[4].precision_bits, 4096);
    }
}
