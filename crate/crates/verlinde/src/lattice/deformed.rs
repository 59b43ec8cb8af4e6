//! The `s`-deformed vertex weights: a family `Rt^{a,b}_{c,d}(u, s)` fixed by
//! two index-raising recursions from the seed `Rt^{0,0}_{0,0} = 1`, whose
//! leading behaviour as `s -> 0` (after stripping `s^d`) recovers the plain
//! vertex weight of [`super::boltzmann`].

use crate::mvpoly::{var, MPoly};

use super::boltzmann;

fn s_pow(e: u32) -> MPoly {
    let mut exps = vec![0; var::NVARS];
    exps[var::S] = e as i32;
    MPoly::monomial(&exps, 1)
}

fn us_monomial(u_exp: u32, s_exp: u32, c: i64) -> MPoly {
    let mut exps = vec![0; var::NVARS];
    exps[var::U] = u_exp as i32;
    exps[var::S] = s_exp as i32;
    MPoly::monomial(&exps, c)
}

/// The closed form of the deformed weight.  Nonzero only for `a + b = c +
/// d`, where it is `s^d` for `a = 0`; for `a > 0` it is `u^a s^d (1 - s^2)`
/// when `c <= b` and `-u^a s^{a+1}` when `c = b + 1`.
pub fn rtilde(a: u32, b: u32, c: u32, d: u32) -> MPoly {
    if a + b != c + d {
        return MPoly::zero(var::NVARS);
    }
    if a == 0 {
        // c = b - d <= b automatically.
        return s_pow(d);
    }
    if c <= b {
        &us_monomial(a, d, 1) - &us_monomial(a, d + 2, 1)
    } else if c == b + 1 {
        us_monomial(a, a + 1, -1)
    } else {
        MPoly::zero(var::NVARS)
    }
}

fn rtilde_rec(a: i64, b: i64, c: i64, d: i64) -> MPoly {
    if a < 0 || b < 0 || c < 0 || d < 0 {
        return MPoly::zero(var::NVARS);
    }
    if a == 0 && b == 0 {
        return if c == 0 && d == 0 {
            MPoly::one(var::NVARS)
        } else {
            MPoly::zero(var::NVARS)
        };
    }
    if a > 0 {
        // Raise the first index: Rt^{a,b}_{c,d} =
        //   -u s^2 d_{a-1,0} Rt^{a-1,b}_{c-1,d}
        //   + u s (1 - s^2 d_{a-1,0} d_{c,0}) Rt^{a-1,b}_{c,d-1}.
        let mut out = MPoly::zero(var::NVARS);
        if a - 1 == 0 {
            out = &out + &(&us_monomial(1, 2, -1) * &rtilde_rec(a - 1, b, c - 1, d));
        }
        let mut factor = us_monomial(1, 1, 1);
        if a - 1 == 0 && c == 0 {
            factor = &factor - &us_monomial(1, 3, 1);
        }
        &out + &(&factor * &rtilde_rec(a - 1, b, c, d - 1))
    } else {
        // Raise the second index: Rt^{a,b}_{c,d} =
        //   Rt^{a,b-1}_{c-1,d} + s d_{c,0} Rt^{a,b-1}_{c,d-1}.
        let mut out = rtilde_rec(a, b - 1, c - 1, d);
        if c == 0 {
            out = &out + &(&s_pow(1) * &rtilde_rec(a, b - 1, c, d - 1));
        }
        out
    }
}

/// The deformed weight computed purely from the recursions and the seed.
pub fn rtilde_from_recursion(a: u32, b: u32, c: u32, d: u32) -> MPoly {
    rtilde_rec(a as i64, b as i64, c as i64, d as i64)
}

fn closed(a: i64, b: i64, c: i64, d: i64) -> MPoly {
    if a < 0 || b < 0 || c < 0 || d < 0 {
        MPoly::zero(var::NVARS)
    } else {
        rtilde(a as u32, b as u32, c as u32, d as u32)
    }
}

/// Verify, for all indices up to `dmax`:
///
/// 1. the closed forms satisfy the first-index-raising recursion;
/// 2. the closed forms satisfy the second-index-raising recursion;
/// 3. the table built from the seed by the recursions alone equals the
///    closed forms;
/// 4. after dividing by `s^d`, the weights have no pole at `s = 0` and their
///    value there is exactly the plain vertex weight.
pub fn check_deformed_weights(dmax: u32) -> Result<(), String> {
    let d = dmax as i64;
    for a in 0..=d {
        for b in 0..=d {
            for c in 0..=a + b + 1 {
                let dd = a + b + 1 - c;
                // Recursion 1 produces Rt^{a+1,b}_{c,dd}.
                let lhs = closed(a + 1, b, c, dd);
                let mut rhs = MPoly::zero(var::NVARS);
                if a == 0 {
                    rhs = &rhs + &(&us_monomial(1, 2, -1) * &closed(a, b, c - 1, dd));
                }
                let mut factor = us_monomial(1, 1, 1);
                if a == 0 && c == 0 {
                    factor = &factor - &us_monomial(1, 3, 1);
                }
                rhs = &rhs + &(&factor * &closed(a, b, c, dd - 1));
                if lhs != rhs {
                    return Err(format!(
                        "first recursion fails at a={}, b={b}, c={c}, d={dd}",
                        a + 1
                    ));
                }
                // Recursion 2 produces Rt^{a,b+1}_{c,dd}.
                let lhs = closed(a, b + 1, c, dd);
                let mut rhs = closed(a, b, c - 1, dd);
                if c == 0 {
                    rhs = &rhs + &(&s_pow(1) * &closed(a, b, c, dd - 1));
                }
                if lhs != rhs {
                    return Err(format!(
                        "second recursion fails at a={a}, b={}, c={c}, d={dd}",
                        b + 1
                    ));
                }
            }
        }
    }
    for a in 0..=dmax {
        for b in 0..=dmax {
            for c in 0..=a + b {
                let dd = a + b - c;
                let built = rtilde_from_recursion(a, b, c, dd);
                let direct = rtilde(a, b, c, dd);
                if built != direct {
                    return Err(format!(
                        "seed-built table differs from closed form at a={a}, b={b}, c={c}, d={dd}"
                    ));
                }
                // Strip s^d and take the value at s = 0.
                let mut shift = vec![0; var::NVARS];
                shift[var::S] = -(dd as i32);
                let scaled = direct.mul_monomial(&shift, 1);
                if let Some(min) = scaled.min_exponent(var::S) {
                    if min < 0 {
                        return Err(format!(
                            "s^-d scaling leaves a pole at a={a}, b={b}, c={c}, d={dd}"
                        ));
                    }
                }
                let limit = scaled.coeff_of(var::S, 0);
                if limit != boltzmann(a, b, c, dd) {
                    return Err(format!(
                        "s -> 0 limit differs from the plain weight at a={a}, b={b}, c={c}, d={dd}"
                    ));
                }
            }
        }
    }
    Ok(())
}
