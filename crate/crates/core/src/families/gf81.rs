use crate::error::{Error, Result};
use crate::graph::Graph;

/// The field with 81 elements as `GF(3)[x]/(x⁴ + x + 2)`.
///
/// Element `a₀ + a₁x + a₂x² + a₃x³` is numbered `a₀ + 3a₁ + 9a₂ + 27a₃`.
#[derive(Debug, Clone)]
pub struct Gf81 {
    mul: Vec<[u8; 81]>,
}

fn digits(a: usize) -> [u8; 4] {
    [(a % 3) as u8, (a / 3 % 3) as u8, (a / 9 % 3) as u8, (a / 27) as u8]
}

fn number(d: [u8; 4]) -> usize {
    d[0] as usize + 3 * d[1] as usize + 9 * d[2] as usize + 27 * d[3] as usize
}

impl Gf81 {
    /// Builds the multiplication table and checks that every nonzero element
    /// is invertible, which makes the quotient ring a field.
    pub fn new() -> Result<Self> {
        let mut mul = vec![[0u8; 81]; 81];
        for a in 0..81 {
            for b in 0..81 {
                mul[a][b] = Self::slow_mul(a, b) as u8;
            }
        }
        for (a, row) in mul.iter().enumerate().skip(1) {
            if !row.contains(&1) {
                return Err(Error::Internal(format!("element {a} has no inverse in GF(81)")));
            }
        }
        Ok(Gf81 { mul })
    }

    fn slow_mul(a: usize, b: usize) -> usize {
        let (da, db) = (digits(a), digits(b));
        let mut prod = [0u8; 7];
        for i in 0..4 {
            for j in 0..4 {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % 3;
            }
        }
        // x⁴ = 2x + 1
        for deg in (4..7).rev() {
            let c = prod[deg];
            prod[deg] = 0;
            prod[deg - 4] = (prod[deg - 4] + c) % 3;
            prod[deg - 3] = (prod[deg - 3] + 2 * c) % 3;
        }
        number([prod[0], prod[1], prod[2], prod[3]])
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (digits(a), digits(b));
        number([0, 1, 2, 3].map(|i| (da[i] + db[i]) % 3))
    }

    pub fn neg(&self, a: usize) -> usize {
        number(digits(a).map(|x| (3 - x) % 3))
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn pow(&self, a: usize, e: u32) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The 20 nonzero fourth powers, ascending.
    pub fn fourth_powers(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (1..81).map(|a| self.pow(a, 4)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Cayley graph on GF(81) with connection set the nonzero fourth powers; an
/// `srg(81, 20, 1, 6)`.
pub fn brouwer_haemers() -> Result<Graph> {
    let f = Gf81::new()?;
    let mut is_power = [false; 81];
    for p in f.fourth_powers() {
        is_power[p] = true;
    }
    if is_power.iter().filter(|&&b| b).count() != 20 || !is_power[f.neg(1)] {
        return Err(Error::Internal("fourth powers of GF(81) are not a symmetric set of size 20".into()));
    }
    Ok(Graph::from_fn(81, |u, v| is_power[f.sub(u, v)])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_laws_on_samples() {
        let f = Gf81::new().unwrap();
        for a in 0..81 {
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            for b in [2, 5, 40, 80] {
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
        // the multiplicative group is cyclic of order 80
        assert!((1..81).any(|g| (1..80).all(|e| f.pow(g, e) != 1)));
    }

    #[test]
    fn modulus_has_no_roots() {
        for x in 0..3u32 {
            assert_ne!((x.pow(4) + x + 2) % 3, 0);
        }
    }

    #[test]
    fn cayley_graph_degree() {
        let g = brouwer_haemers().unwrap();
        assert_eq!(g.regular_degree(), Some(20));
    }
}
