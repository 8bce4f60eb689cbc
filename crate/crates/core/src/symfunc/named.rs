use std::fmt;
use std::str::FromStr;

use super::ZSeries;
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// The closed-form generating functions, each a ratio whose numerator and
/// denominator both vanish at `t = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    Phi,
    Tphi,
    Psi,
    PsiPlus,
    PsiMinus,
    CGamma,
    TphiNr,
    TphiPlus,
    TphiMinus,
    TphiPlusR,
    Rees2,
    PhiNr,
    PhiNrPlus,
    PhiNrMinus,
}

impl SeriesName {
    pub const ALL: [SeriesName; 14] = [
        SeriesName::Phi,
        SeriesName::Tphi,
        SeriesName::Psi,
        SeriesName::PsiPlus,
        SeriesName::PsiMinus,
        SeriesName::CGamma,
        SeriesName::TphiNr,
        SeriesName::TphiPlus,
        SeriesName::TphiMinus,
        SeriesName::TphiPlusR,
        SeriesName::Rees2,
        SeriesName::PhiNr,
        SeriesName::PhiNrPlus,
        SeriesName::PhiNrMinus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::Phi => "phi",
            SeriesName::Tphi => "tphi",
            SeriesName::Psi => "psi",
            SeriesName::PsiPlus => "psi_plus",
            SeriesName::PsiMinus => "psi_minus",
            SeriesName::CGamma => "c_gamma",
            SeriesName::TphiNr => "tphi_nr",
            SeriesName::TphiPlus => "tphi_plus",
            SeriesName::TphiMinus => "tphi_minus",
            SeriesName::TphiPlusR => "tphi_plus_r",
            SeriesName::Rees2 => "rees2",
            SeriesName::PhiNr => "phi_nr",
            SeriesName::PhiNrPlus => "phi_nr_plus",
            SeriesName::PhiNrMinus => "phi_nr_minus",
        }
    }

    /// Smallest admissible number of colors.
    pub fn min_r(self) -> usize {
        match self {
            SeriesName::PhiNrPlus | SeriesName::PhiNrMinus => 2,
            _ => 1,
        }
    }

    /// Whether the series depends on `r` at all.
    pub fn uses_r(self) -> bool {
        !matches!(self, SeriesName::Phi | SeriesName::Tphi | SeriesName::Rees2)
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        SeriesName::ALL
            .into_iter()
            .find(|n| n.as_str() == key)
            .ok_or_else(|| Error::domain(format!("unknown series {s:?}")))
    }
}

/// `num / den` where both are divisible by `1 - t` and `den / (1 - t)` has constant term 1.
fn ratio(num: &ZSeries, den: &ZSeries, context: &str) -> Result<ZSeries> {
    let num = num.div_one_minus_t(context)?;
    let den = den.div_one_minus_t(context)?;
    Ok(&num * &den.inverse()?)
}

/// Truncated expansion of the named generating function with `r` colors to order `z^N`.
pub fn named_series(name: SeriesName, r: usize, truncation: usize) -> Result<ZSeries> {
    if r < name.min_r() {
        return Err(Error::domain(format!("{name} needs r >= {}", name.min_r())));
    }
    let t = IntPolynomial::from_i64s(&[0, 1]);
    let one_minus_t = IntPolynomial::from_i64s(&[1, -1]);
    let h = ZSeries::h(truncation);
    let ht = h.t_scaled();
    let den = |r: usize| &ht.pow(r) - &h.pow(r).mul_poly(&t);
    let ctx = name.as_str();

    match name {
        SeriesName::Phi => ratio(&h.mul_poly(&one_minus_t), &den(1), ctx),
        SeriesName::Tphi => ratio(&(&h * &ht).mul_poly(&one_minus_t), &den(1), ctx),
        SeriesName::Psi => ratio(&ht.pow(r - 1).mul_poly(&one_minus_t), &den(r), ctx),
        SeriesName::PsiPlus => ratio(&(&ht.pow(r - 1) - &h.pow(r - 1).mul_poly(&t)), &den(r), ctx),
        SeriesName::PsiMinus => ratio(&(&h.pow(r - 1) - &ht.pow(r - 1)).mul_poly(&t), &den(r), ctx),
        SeriesName::CGamma => {
            let num = &(&h * &ht.pow(r - 1)) - &h.pow(r).mul_poly(&t);
            ratio(&num, &den(r), ctx)
        }
        SeriesName::TphiNr => ratio(&(&h * &ht.pow(r)).mul_poly(&one_minus_t), &den(r), ctx),
        SeriesName::TphiPlus | SeriesName::TphiPlusR => {
            let num = &(&h * &ht.pow(r)) - &(&h.pow(r) * &ht).mul_poly(&t);
            ratio(&num, &den(r), ctx)
        }
        SeriesName::TphiMinus => {
            let num = (&(&h * &ht) * &(&h.pow(r - 1) - &ht.pow(r - 1))).mul_poly(&t);
            ratio(&num, &den(r), ctx)
        }
        SeriesName::Rees2 => {
            let e = ZSeries::e(truncation);
            let et = e.t_scaled();
            let num = (&e * &et.pow(2)).mul_poly(&one_minus_t);
            let den = &et.pow(2) - &e.pow(2).mul_poly(&t);
            Ok(ratio(&num, &den, ctx)?.omega())
        }
        SeriesName::PhiNr => ratio(&(&h * &ht.pow(r - 1)).mul_poly(&one_minus_t), &den(r), ctx),
        SeriesName::PhiNrPlus => {
            let num = &(&h * &ht) * &(&ht.pow(r - 2) - &h.pow(r - 2).mul_poly(&t));
            ratio(&num, &den(r), ctx)
        }
        SeriesName::PhiNrMinus => {
            let num = (&(&h * &ht) * &(&h.pow(r - 2) - &ht.pow(r - 2))).mul_poly(&t);
            ratio(&num, &den(r), ctx)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{Partition, SymF, TPoly};

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn names_round_trip() {
        for n in SeriesName::ALL {
            assert_eq!(n.as_str().parse::<SeriesName>().unwrap(), n);
        }
        assert_eq!("psi-plus".parse::<SeriesName>().unwrap(), SeriesName::PsiPlus);
        assert!("chi".parse::<SeriesName>().is_err());
    }

    #[test]
    fn phi_and_tphi_low_terms() {
        let phi = named_series(SeriesName::Phi, 1, 3).unwrap();
        assert_eq!(phi.term(0), &TPoly::one());
        assert_eq!(phi.term(2), &TPoly::constant(SymF::h(2)).mul_poly(&poly(&[1, 1])));

        let tphi = named_series(SeriesName::Tphi, 1, 2).unwrap();
        let h11 = SymF::p(Partition::new(vec![1, 1]).unwrap());
        let expected = &TPoly::constant(SymF::h(2)).mul_poly(&poly(&[1, 1, 1])) + &TPoly::monomial(h11, 1);
        assert_eq!(tphi.term(2), &expected);
    }

    #[test]
    fn psi_shadows() {
        let psi = named_series(SeriesName::Psi, 2, 2).unwrap();
        assert_eq!(psi.term(2).dimension_shadow().unwrap(), poly(&[0, 4, 1]));
        let psi1 = named_series(SeriesName::Psi, 1, 2).unwrap();
        assert_eq!(psi1.term(2).dimension_shadow().unwrap(), poly(&[0, 1]));
    }

    #[test]
    fn phi_nr_split_needs_two_colors() {
        assert!(named_series(SeriesName::PhiNrPlus, 1, 2).is_err());
        assert!(named_series(SeriesName::PhiNrMinus, 2, 2).is_ok());
    }

    #[test]
    fn z_zero_term_is_one() {
        for name in SeriesName::ALL {
            let s = named_series(name, 2, 0).unwrap();
            let expected = match name {
                SeriesName::PsiMinus | SeriesName::TphiMinus | SeriesName::PhiNrMinus => TPoly::zero(0),
                _ => TPoly::one(),
            };
            assert_eq!(s.term(0), &expected, "{name}");
        }
    }
}
