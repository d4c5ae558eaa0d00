use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::tau_rho::TauRhoSystem;
use crate::linalg::{hermite_rows, integer_kernel, IntMatrix};

/// `a · z + b ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Halfspace {
    a: Vec<BigInt>,
    b: BigInt,
}

impl Halfspace {
    /// Divides by the gcd of `a` and rounds `b` down, which keeps every
    /// integer point.
    fn normalized(mut self) -> Self {
        let g = self.a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g > BigInt::from(1) {
            for x in &mut self.a {
                *x /= &g;
            }
            self.b = self.b.div_floor(&g);
        }
        self
    }
}

/// Fourier–Motzkin elimination of variable `t`.
fn eliminate(hs: &[Halfspace], t: usize) -> Vec<Halfspace> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for h in hs {
        match h.a[t].sign() {
            num_bigint::Sign::Plus => pos.push(h),
            num_bigint::Sign::Minus => neg.push(h),
            num_bigint::Sign::NoSign => out.push(h.clone()),
        }
    }
    for p in &pos {
        for q in &neg {
            let (cp, cq) = (-&q.a[t], p.a[t].clone());
            let a = p.a.iter().zip(&q.a).map(|(x, y)| &cp * x + &cq * y).collect();
            out.push(Halfspace { a, b: &cp * &p.b + &cq * &q.b }.normalized());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Integer range of `z[t]` given `z[..t]`, from constraints in `z[..=t]`.
/// `None` if empty.
fn range(hs: &[Halfspace], z: &[BigInt], t: usize) -> Option<(BigInt, BigInt)> {
    let (mut lo, mut hi): (Option<BigInt>, Option<BigInt>) = (None, None);
    for h in hs {
        let rest: BigInt = &h.b + h.a[..t].iter().zip(z).map(|(a, x)| a * x).sum::<BigInt>();
        let c = &h.a[t];
        if c.is_zero() {
            if rest.is_negative() {
                return None;
            }
        } else if c.is_positive() {
            // z ≥ −rest / c
            let bound = -(rest.div_floor(c));
            lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
        } else {
            // z ≤ rest / (−c)
            let bound = rest.div_floor(&-c);
            hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
        }
    }
    let (lo, hi) = (lo.expect("solution polytope is bounded"), hi.expect("solution polytope is bounded"));
    (lo <= hi).then_some((lo, hi))
}

/// An integer `x` with `coeffs · x = rhs`, if one exists.
fn particular_solution(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    // U aᵀ = H, so a Uᵀ = Hᵀ; solve Hᵀ y = b and set x = Uᵀ y.
    let hf = hermite_rows(&a.transpose());
    let mut y = vec![BigInt::zero(); hf.rank];
    for r in 0..hf.rank {
        let c = hf.pivots[r];
        let s: BigInt = &b[c] - (0..r).map(|i| &y[i] * &hf.h[(i, c)]).sum::<BigInt>();
        let (q, rem) = s.div_rem(&hf.h[(r, c)]);
        if !rem.is_zero() {
            return None;
        }
        y[r] = q;
    }
    for (c, bc) in b.iter().enumerate() {
        let lhs: BigInt = (0..hf.rank).map(|i| &y[i] * &hf.h[(i, c)]).sum();
        if &lhs != bc {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); a.cols()];
    for (i, yi) in y.iter().enumerate() {
        for (xj, u) in x.iter_mut().zip(hf.u.row(i)) {
            *xj += yi * u;
        }
    }
    Some(x)
}

/// A non-negative integer solution of the `τ, ρ` system, or `None` after
/// exhausting the bounded solution polytope.
///
/// The integer solutions form `x₀ + z·K` with `K` a kernel basis. Bounds on
/// each `z_t` come from Fourier–Motzkin projections of `x ≥ 0`, and `z` is
/// scanned lexicographically, so the witness is the lexicographically first
/// `z` for that basis.
pub fn solve_nonneg_integer(sys: &TauRhoSystem) -> Option<Vec<BigInt>> {
    let x0 = particular_solution(&sys.coeffs, &sys.rhs)?;
    let kernel = integer_kernel(&sys.coeffs);
    let dim = kernel.rows();
    if dim == 0 {
        return x0.iter().all(|x| !x.is_negative()).then_some(x0);
    }
    let full: Vec<Halfspace> = (0..x0.len())
        .map(|j| Halfspace { a: (0..dim).map(|t| kernel[(t, j)].clone()).collect(), b: x0[j].clone() })
        .collect();
    // levels[t] involves only z[..=t]
    let mut levels = vec![full];
    for t in (1..dim).rev() {
        let next = eliminate(levels.last().expect("nonempty"), t);
        levels.push(next);
    }
    levels.reverse();
    let mut z = Vec::with_capacity(dim);
    search(&levels, &mut z).map(|z| {
        let mut x = x0.clone();
        for (t, zt) in z.iter().enumerate() {
            for (xj, k) in x.iter_mut().zip(kernel.row(t)) {
                *xj += zt * k;
            }
        }
        x
    })
}

fn search(levels: &[Vec<Halfspace>], z: &mut Vec<BigInt>) -> Option<Vec<BigInt>> {
    let t = z.len();
    let (lo, hi) = range(&levels[t], z, t)?;
    if t + 1 == levels.len() {
        let mut done = z.clone();
        done.push(lo);
        return Some(done);
    }
    let mut v = lo;
    while v <= hi {
        z.push(v.clone());
        if let Some(found) = search(levels, z) {
            return Some(found);
        }
        z.pop();
        v += 1;
    }
    None
}
