use num_rational::Ratio;

use super::ReductionError;

/// Parameters of the reduction for a subdivided graph on `n_prime` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionParams {
    pub n_prime: usize,
    /// `c * n'`, a power of two.
    pub cn: usize,
    pub c: Ratio<u64>,
    pub h: usize,
    pub l1: usize,
    pub l2: usize,
    pub d1: usize,
    pub d2: usize,
    pub m: usize,
}

/// Picks `cn` as the power of two in `[4n', 8n')` and derives the rest.
pub fn choose_params(n_prime: usize) -> Result<ReductionParams, ReductionError> {
    if n_prime < 6 || n_prime % 2 == 1 {
        return Err(ReductionError::BadOrder(n_prime));
    }
    let cn = (4 * n_prime).next_power_of_two();
    let h = cn.trailing_zeros() as usize + 2;
    Ok(ReductionParams {
        n_prime,
        cn,
        c: Ratio::new(cn as u64, n_prime as u64),
        h,
        l1: (cn - 2 * h) / 2,
        l2: cn / 2 + 2,
        d1: n_prime / 4 + cn / 2,
        d2: n_prime.div_ceil(4) + cn / 2 + 1,
        m: cn + 3,
    })
}

impl ReductionParams {
    pub fn btp_vertex_count(&self) -> usize {
        crate::gadgets::btp_vertex_count(self.h, self.l1, self.l2)
    }

    /// Closed-form `|V(H)|` given `|E(G')|`.
    pub fn h_vertex_count(&self, edges_prime: usize) -> usize {
        self.n_prime
            + edges_prime * self.btp_vertex_count()
            + crate::gadgets::y_vertex_count(self.d1, self.d2)
            + crate::gadgets::c_vertex_count(self.m)
    }

    /// Length of the witness built from a cover of size `k`.
    pub fn threshold(&self, k: usize) -> usize {
        k + self.cn + 3
    }

    /// `key<TAB>value` lines.
    pub fn to_kv(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n_prime", self.n_prime.to_string()),
            ("cn", self.cn.to_string()),
            ("c", self.c.to_string()),
            ("h", self.h.to_string()),
            ("l1", self.l1.to_string()),
            ("l2", self.l2.to_string()),
            ("d1", self.d1.to_string()),
            ("d2", self.d2.to_string()),
            ("m", self.m.to_string()),
        ]
    }
}
