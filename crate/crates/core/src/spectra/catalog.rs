//! Closed-form spectrum of `P_m` for three variables, by shape class of `λ`.

use serde::Serialize;

use crate::arith::{Scalar, ScalarPoly, ThetaMode};
use crate::error::{Error, Result};
use crate::operators::t_power_sum_matrix;
use crate::poly::{Exponents, Partition, VLambda};
use crate::settings::Settings;

use super::brute::{isotypic_blocks, Verdict};
use super::closed::{ell, h_complete, h_subset_sum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CatalogValue {
    Exact { value: Scalar },
    /// Roots of `t² - sum·t + product`.
    Quadratic { sum: Scalar, product: Scalar },
}

impl CatalogValue {
    /// Monic polynomial in descending coefficients whose roots are the value(s).
    pub fn polynomial(&self, mode: &ThetaMode) -> ScalarPoly {
        match self {
            CatalogValue::Exact { value } => ScalarPoly::linear_factor(value, mode),
            CatalogValue::Quadratic { sum, product } => {
                ScalarPoly::new(vec![mode.one(), -sum, product.clone()], mode)
            }
        }
    }
}

impl std::fmt::Display for CatalogValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogValue::Exact { value } => write!(f, "{value}"),
            CatalogValue::Quadratic { sum, product } => {
                write!(f, "roots of t^2 - ({sum})*t + ({product})")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub item: &'static str,
    pub tau: Partition,
    pub value: CatalogValue,
    /// Number of eigenfunctions per root.
    pub mult: usize,
    pub leading: String,
}

fn mono(e: [u32; 3]) -> String {
    Exponents::new(e.to_vec()).to_string()
}

fn signed_sum(terms: &[(i8, [u32; 3])]) -> String {
    let mut s = String::new();
    for (k, (sign, e)) in terms.iter().enumerate() {
        if k > 0 {
            s.push_str(if *sign > 0 { " + " } else { " - " });
        } else if *sign < 0 {
            s.push('-');
        }
        s.push_str(&mono(*e));
    }
    s
}

fn two_block_entries(
    big: Scalar,
    small: Scalar,
    mb: i64,
    ms: i64,
    m: u32,
    mode: &ThetaMode,
    items: (&'static str, &'static str),
    leading: (String, String),
) -> Vec<CatalogEntry> {
    let base = &big.pow(m).scale_int(mb) + &small.pow(m).scale_int(ms);
    let th = &mode.theta() * &h_complete(m as i64 - 1, &[big, small], mode);
    vec![
        CatalogEntry {
            item: items.0,
            tau: Partition::from_unsorted(vec![3]),
            value: CatalogValue::Exact {
                value: &base - &th.scale_int(2),
            },
            mult: 1,
            leading: leading.0,
        },
        CatalogEntry {
            item: items.1,
            tau: Partition::from_unsorted(vec![2, 1]),
            value: CatalogValue::Exact { value: &base + &th },
            mult: 2,
            leading: leading.1,
        },
    ]
}

/// `t² - S t + P` for the two pairs of irrational eigenvalues of a
/// distinct-part `λ`, with `ℓ = (a+2θ, b+θ, c)`.
pub fn quadratic_pair(l: &[Scalar], m: u32, mode: &ThetaMode) -> (Scalar, Scalar) {
    let theta = mode.theta();
    let t2 = &theta * &theta;
    let pm = l.iter().fold(mode.zero(), |acc, x| &acc + &x.pow(m));
    let h = h_complete(m as i64 - 2, l, mode);
    let half = mode.ratio(1, 2);
    let centre = &pm - &(&(&t2 * &half) * &h);
    let p2 = l.iter().fold(mode.zero(), |acc, x| &acc + &x.pow(2));
    let e2 = &(&(&l[0] * &l[1]) + &(&l[0] * &l[2])) + &(&l[1] * &l[2]);
    let disc = &(&p2.scale_int(4) - &e2.scale_int(4)) - &t2.scale_int(3);
    let sum = centre.scale_int(2);
    let spread = &(&(&t2 * &h) * &h) * &disc;
    let product = &(&centre * &centre) - &(&spread * &mode.ratio(1, 4));
    (sum, product)
}

/// Catalogue of the eigenvalues of `P_m` with eigenfunctions led by `V_λ`,
/// for three variables.
pub fn n3_catalog(lambda: &Partition, m: u32, mode: &ThetaMode) -> Result<Vec<CatalogEntry>> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let p = lambda.padded(3)?;
    let (a, b, c) = (p[0], p[1], p[2]);
    let ai = a as i64;
    let bi = b as i64;
    let out = if a == b && b == c {
        vec![CatalogEntry {
            item: "1",
            tau: Partition::from_unsorted(vec![3]),
            value: CatalogValue::Exact {
                value: mode.int(ai).pow(m).scale_int(3),
            },
            mult: 1,
            leading: mono([a, a, a]),
        }]
    } else if a == b {
        two_block_entries(
            mode.linear(ai, 1),
            mode.int(c as i64),
            2,
            1,
            m,
            mode,
            ("2a", "2b"),
            (
                signed_sum(&[(1, [a, a, c]), (1, [a, c, a]), (1, [c, a, a])]),
                format!(
                    "span of {}, {}",
                    signed_sum(&[(1, [a, a, c]), (-1, [a, c, a])]),
                    signed_sum(&[(1, [a, a, c]), (-1, [c, a, a])])
                ),
            ),
        )
    } else if b == c {
        two_block_entries(
            mode.linear(ai, 2),
            mode.int(bi),
            1,
            2,
            m,
            mode,
            ("3a", "3b"),
            (
                signed_sum(&[(1, [a, b, b]), (1, [b, a, b]), (1, [b, b, a])]),
                format!(
                    "span of {}, {}",
                    signed_sum(&[(1, [a, b, b]), (-1, [b, a, b])]),
                    signed_sum(&[(1, [a, b, b]), (-1, [b, b, a])])
                ),
            ),
        )
    } else {
        let l = ell(lambda, 3, mode)?;
        let mi = m as i64;
        let h1 = h_subset_sum(1, mi, &l, mode);
        let h2 = &mode.theta() * &h_subset_sum(2, mi - 1, &l, mode);
        let t2 = mode.theta().pow(2);
        let h3 = &t2 * &h_subset_sum(3, mi - 2, &l, mode);
        let (sum, product) = quadratic_pair(&l, m, mode);
        let perms = [[a, b, c], [b, a, c], [a, c, b], [c, b, a], [b, c, a], [c, a, b]];
        let signs = [1, -1, -1, -1, 1, 1];
        vec![
            CatalogEntry {
                item: "4a",
                tau: Partition::from_unsorted(vec![3]),
                value: CatalogValue::Exact {
                    value: &(&h1 - &h2) + &h3,
                },
                mult: 1,
                leading: signed_sum(&perms.map(|e| (1, e))),
            },
            CatalogEntry {
                item: "4b",
                tau: Partition::from_unsorted(vec![2, 1]),
                value: CatalogValue::Quadratic { sum, product },
                mult: 2,
                leading: format!(
                    "span of {}, {}, {}, {}",
                    signed_sum(&[(1, [a, b, c]), (-1, [b, c, a])]),
                    signed_sum(&[(1, [a, b, c]), (-1, [c, a, b])]),
                    signed_sum(&[(1, [b, a, c]), (-1, [a, c, b])]),
                    signed_sum(&[(1, [b, a, c]), (-1, [c, b, a])])
                ),
            },
            CatalogEntry {
                item: "4c",
                tau: Partition::from_unsorted(vec![1, 1, 1]),
                value: CatalogValue::Exact {
                    value: &(&h1 + &h2) + &h3,
                },
                mult: 1,
                leading: signed_sum(&std::array::from_fn::<_, 6, _>(|i| (signs[i], perms[i]))),
            },
        ]
    };
    Ok(out)
}

/// Compare every catalogue entry with the characteristic polynomial of the
/// matching isotypic block of `Σ_i T_i^m` on `V_λ`: each block polynomial
/// must be the product of its entries' polynomials raised to their
/// multiplicities.
pub fn check_catalog(
    lambda: &Partition,
    m: u32,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Vec<Verdict>> {
    let entries = n3_catalog(lambda, m, mode)?;
    let vl = VLambda::new(lambda, 3)?;
    let op = t_power_sum_matrix(&vl, m, mode, settings)?;
    let mut verdicts = Vec::new();
    for block in isotypic_blocks(&vl, &op, mode)? {
        let cp = ScalarPoly::new(block.restricted.charpoly_with_cap(settings.symbolic_cap)?, mode);
        let mut want = ScalarPoly::one(mode);
        let mut items = Vec::new();
        for e in entries.iter().filter(|e| e.tau == block.tau) {
            want = want.mul(&e.value.polynomial(mode).pow(e.mult));
            items.push(e.item);
        }
        verdicts.push(Verdict {
            check: format!(
                "λ={lambda} m={m} τ={}: items [{}] give the block characteristic polynomial",
                block.tau,
                items.join(",")
            ),
            ok: cp == want,
        });
    }
    Ok(verdicts)
}
