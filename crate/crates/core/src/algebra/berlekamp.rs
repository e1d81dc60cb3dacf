use super::Gf2Poly;

/// Shortest linear recurrence of `s`, returned as the characteristic
/// polynomial `f` with `Σ f_k s_{n+k} = 0` and `deg f` equal to the linear
/// complexity. An all-zero sequence gives the constant `1`.
pub fn berlekamp_massey(s: &[bool]) -> Gf2Poly {
    // connection polynomial c with s_n = Σ_{i=1}^{l} c_i s_{n-i}
    let n = s.len();
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let d = (1..=l).fold(s[i], |acc, k| acc ^ (c[k] & s[i - k]));
        if !d {
            m += 1;
            continue;
        }
        let t = c.clone();
        for k in 0..=n - m {
            c[k + m] ^= b[k];
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            m += 1;
        }
    }
    Gf2Poly::from_exponents((0..=l).filter(|&k| c[k]).map(|k| l - k))
}

pub fn linear_complexity(s: &[bool]) -> usize {
    berlekamp_massey(s).degree().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;

    #[test]
    fn zero_sequence() {
        assert_eq!(berlekamp_massey(&[false; 10]), Gf2Poly::one());
        assert_eq!(linear_complexity(&[]), 0);
    }

    #[test]
    fn example_pn_sequence() {
        let s = bits![1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0];
        assert_eq!(berlekamp_massey(&s), Gf2Poly::from_exponents([0, 2, 3]));
        let t = bits![1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1];
        assert_eq!(berlekamp_massey(&t), Gf2Poly::from_exponents([0, 1, 4]));
    }

    #[test]
    fn impulse_has_full_complexity() {
        let mut s = vec![false; 8];
        s[7] = true;
        assert_eq!(linear_complexity(&s), 8);
    }
}
