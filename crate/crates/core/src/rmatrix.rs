//! Graded matrices and the R-matrix identities.
//!
//! Tensor indices are flattened row-major with the first index slowest:
//! `(i, j) ↦ 2i + j` and `(a, b, c) ↦ 4a + 2b + c`, with 0-based indices
//! whose grade equals their value (index 0 even, index 1 odd).

use std::fmt;

use crate::algebra::{AlgebraElement, Presentation};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::scalars::GrassmannScalar;
use crate::Parity;

#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    row_grades: Vec<Parity>,
    col_grades: Vec<Parity>,
    entries: Vec<AlgebraElement>,
}

/// Grade of a flattened multi-index: the parity of its bit count.
pub fn index_grade(n: usize) -> Parity {
    Parity::from_bit(n.count_ones() % 2 == 1)
}

fn sign(odd: bool, e: AlgebraElement) -> AlgebraElement {
    if odd {
        e.neg()
    } else {
        e
    }
}

impl GradedMatrix {
    pub fn zeros(n: usize) -> Self {
        let grades: Vec<Parity> = (0..n).map(index_grade).collect();
        GradedMatrix {
            row_grades: grades.clone(),
            col_grades: grades,
            entries: vec![AlgebraElement::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GradedMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, AlgebraElement::one());
        }
        m
    }

    /// Square matrix from rows; grades follow [`index_grade`].
    pub fn from_rows(rows: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "expected {n} entries in every row"
            )));
        }
        let mut m = GradedMatrix::zeros(n);
        m.entries = rows.into_iter().flatten().collect();
        Ok(m)
    }

    /// Square matrix of ground-ring scalars.
    pub fn from_scalars(rows: Vec<Vec<GrassmannScalar>>) -> Result<Self> {
        GradedMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(AlgebraElement::scalar).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.row_grades.len()
    }

    pub fn row_grades(&self) -> &[Parity] {
        &self.row_grades
    }

    pub fn col_grades(&self) -> &[Parity] {
        &self.col_grades
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: AlgebraElement) {
        let n = self.dim();
        self.entries[i * n + j] = e;
    }

    pub fn map(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> Self {
        GradedMatrix {
            row_grades: self.row_grades.clone(),
            col_grades: self.col_grades.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&AlgebraElement) -> Result<AlgebraElement>) -> Result<Self> {
        Ok(GradedMatrix {
            row_grades: self.row_grades.clone(),
            col_grades: self.col_grades.clone(),
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn map_scalars(&self, f: impl Fn(&GrassmannScalar) -> GrassmannScalar) -> Self {
        self.map(|e| e.map_scalars(&f))
    }

    fn check_same(&self, o: &GradedMatrix, op: &str) -> Result<()> {
        if self.dim() != o.dim() {
            return Err(Error::Dimension(format!(
                "{op} of {}x{} and {}x{}",
                self.dim(),
                self.dim(),
                o.dim(),
                o.dim()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, o: &GradedMatrix) -> Result<GradedMatrix> {
        self.check_same(o, "product")?;
        let n = self.dim();
        let mut out = GradedMatrix::zeros(n);
        out.row_grades = self.row_grades.clone();
        out.col_grades = o.col_grades.clone();
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &GradedMatrix) -> Result<GradedMatrix> {
        self.check_same(o, "sum")?;
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&o.entries) {
            *x = x.add(y);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &GradedMatrix) -> Result<GradedMatrix> {
        self.add(&o.map(AlgebraElement::neg))
    }

    pub fn scale(&self, s: &GrassmannScalar) -> GradedMatrix {
        self.map(|e| e.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    /// The two-index label of a 4×4 position, e.g. `12` for flat index 1.
    fn label(&self, n: usize) -> String {
        match self.dim() {
            4 => format!("{}{}", n / 2 + 1, n % 2 + 1),
            8 => format!("{}{}{}", n / 4 + 1, (n / 2) % 2 + 1, n % 2 + 1),
            _ => format!("{}", n + 1),
        }
    }

    /// One residue per entry; `passed` iff every entry is zero.
    pub fn residual_report(&self, identity: impl Into<String>) -> VerificationReport {
        let mut r = VerificationReport::new(identity);
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                r.push(
                    format!("({},{})", self.label(i), self.label(j)),
                    self.get(i, j).clone(),
                );
            }
        }
        r
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..n {
            f.write_str("[ ")?;
            for j in 0..n {
                write!(f, "{:>width$}", cells[i * n + j])?;
                if j + 1 < n {
                    f.write_str("  ")?;
                }
            }
            f.write_str(" ]")?;
            if i + 1 < n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMatrix(\n{self}\n)")
    }
}

fn require_dim(m: &GradedMatrix, n: usize, what: &str) -> Result<()> {
    if m.dim() != n {
        return Err(Error::Dimension(format!(
            "{what} must be {n}x{n}, got {}x{}",
            m.dim(),
            m.dim()
        )));
    }
    Ok(())
}

/// `(T₁)^{ij}_{kl} = (−1)^{k(j+l)} T^i_k δ^j_l`.
pub fn t1_of(t: &GradedMatrix) -> Result<GradedMatrix> {
    require_dim(t, 2, "T")?;
    let mut out = GradedMatrix::zeros(4);
    for (i, j, k, l) in quad() {
        if j == l {
            out.set(
                2 * i + j,
                2 * k + l,
                sign(k * (j + l) % 2 == 1, t.get(i, k).clone()),
            );
        }
    }
    Ok(out)
}

/// `(T₂)^{ij}_{kl} = (−1)^{i(j+l)} T^j_l δ^i_k`.
pub fn t2_of(t: &GradedMatrix) -> Result<GradedMatrix> {
    require_dim(t, 2, "T")?;
    let mut out = GradedMatrix::zeros(4);
    for (i, j, k, l) in quad() {
        if i == k {
            out.set(
                2 * i + j,
                2 * k + l,
                sign(i * (j + l) % 2 == 1, t.get(j, l).clone()),
            );
        }
    }
    Ok(out)
}

fn quad() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1))
}

/// Super permutation `P^{ij}_{kl} = (−1)^{ij} δ^i_l δ^j_k`.
pub fn super_permutation() -> GradedMatrix {
    let mut p = GradedMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            p.set(
                2 * i + j,
                2 * j + i,
                sign(i * j == 1, AlgebraElement::one()),
            );
        }
    }
    p
}

/// Plain permutation `δ^i_l δ^j_k` without the odd–odd sign.
pub fn ungraded_permutation() -> GradedMatrix {
    let mut p = GradedMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            p.set(2 * i + j, 2 * j + i, AlgebraElement::one());
        }
    }
    p
}

fn s(text: &str) -> GrassmannScalar {
    crate::cli::parser::parse_element(text, None)
        .ok()
        .and_then(|e| e.as_scalar())
        .unwrap_or_else(|| panic!("built-in scalar `{text}`"))
}

fn scalar_matrix(rows: &[[&str; 4]]) -> GradedMatrix {
    GradedMatrix::from_scalars(
        rows.iter()
            .map(|r| r.iter().map(|t| s(t)).collect())
            .collect(),
    )
    .expect("square built-in")
}

/// The (p,q)-deformed R-matrix of GL_{p,q}(1|1).
pub fn r_pq() -> GradedMatrix {
    scalar_matrix(&[
        ["q", "0", "0", "0"],
        ["0", "q/p", "0", "0"],
        ["0", "q - 1/p", "1", "0"],
        ["0", "0", "0", "1/p"],
    ])
}

/// The two-parameter h-deformed R-matrix.
pub fn r_h1h2() -> GradedMatrix {
    scalar_matrix(&[
        ["1 - h1*h2", "-h2", "h2", "0"],
        ["-h1", "1", "-h1*h2", "h2"],
        ["h1", "-h1*h2", "1", "h2"],
        ["0", "h1", "h1", "1 + h1*h2"],
    ])
}

pub fn r_h1() -> GradedMatrix {
    scalar_matrix(&[
        ["1", "0", "0", "0"],
        ["-h1", "1", "0", "0"],
        ["h1", "0", "1", "0"],
        ["0", "h1", "h1", "1"],
    ])
}

pub fn r_h2() -> GradedMatrix {
    scalar_matrix(&[
        ["1", "-h2", "h2", "0"],
        ["0", "1", "0", "h2"],
        ["0", "0", "1", "h2"],
        ["0", "0", "0", "1"],
    ])
}

/// `R̂ = P·R` with the super permutation.
pub fn rhat(r: &GradedMatrix) -> Result<GradedMatrix> {
    super_permutation().mul(r)
}

/// A built-in matrix by name: `Rpq`, `Rh1h2`, `Rh1`, `Rh2`, `P`, or the
/// braid forms `Rhat_h1h2`, `Rhat_h1`, `Rhat_h2`.
pub fn builtin_matrix(name: &str) -> Option<GradedMatrix> {
    Some(match name {
        "Rpq" => r_pq(),
        "Rh1h2" => r_h1h2(),
        "Rh1" => r_h1(),
        "Rh2" => r_h2(),
        "P" => super_permutation(),
        "Rhat_h1h2" => rhat(&r_h1h2()).ok()?,
        "Rhat_h1" => rhat(&r_h1()).ok()?,
        "Rhat_h2" => rhat(&r_h2()).ok()?,
        _ => return None,
    })
}

/// The generic supermatrix `T = (a β; γ d)`, or its primed version.
pub fn t_matrix(primed: bool) -> GradedMatrix {
    let suffix = if primed { "'" } else { "" };
    let e = |n: &str| AlgebraElement::named(&format!("{n}{suffix}"));
    GradedMatrix::from_rows(vec![vec![e("a"), e("beta")], vec![e("gamma"), e("d")]]).expect("2x2")
}

/// `R·T₁·T₂ − T₂·T₁·R`, each entry reduced in `p`.
pub fn rtt_residual(
    r: &GradedMatrix,
    t: &GradedMatrix,
    p: &Presentation,
) -> Result<VerificationReport> {
    require_dim(r, 4, "R")?;
    let t1 = t1_of(t)?;
    let t2 = t2_of(t)?;
    let lhs = r.mul(&t1)?.mul(&t2)?;
    let rhs = t2.mul(&t1)?.mul(r)?;
    let res = lhs.sub(&rhs)?.try_map(|e| p.normal_form(e))?;
    Ok(res.residual_report(format!("RTT relation in {}", p.name())))
}

/// `R₁₂`, `R₁₃`, `R₂₃` on three copies of the (1|1) space; signs as in
/// the graded embedding when `graded`, none otherwise.
pub fn embeddings(r: &GradedMatrix, graded: bool) -> Result<[GradedMatrix; 3]> {
    require_dim(r, 4, "R")?;
    let mut r12 = GradedMatrix::zeros(8);
    let mut r13 = GradedMatrix::zeros(8);
    let mut r23 = GradedMatrix::zeros(8);
    let g = |b: bool| graded && b;
    for row in 0..8 {
        let (a, b, c) = (row >> 2 & 1, row >> 1 & 1, row & 1);
        for col in 0..8 {
            let (d, e, f) = (col >> 2 & 1, col >> 1 & 1, col & 1);
            if c == f {
                r12.set(row, col, r.get(2 * a + b, 2 * d + e).clone());
            }
            if b == e {
                let odd = g(b * (c + f) % 2 == 1);
                r13.set(row, col, sign(odd, r.get(2 * a + c, 2 * d + f).clone()));
            }
            if a == d {
                let odd = g(a * (b + c + e + f) % 2 == 1);
                r23.set(row, col, sign(odd, r.get(2 * b + c, 2 * e + f).clone()));
            }
        }
    }
    Ok([r12, r13, r23])
}

fn mode(graded: bool) -> &'static str {
    if graded {
        "graded"
    } else {
        "ungraded"
    }
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂`.
pub fn ybe_residual(r: &GradedMatrix, graded: bool) -> Result<VerificationReport> {
    let [r12, r13, r23] = embeddings(r, graded)?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    Ok(lhs
        .sub(&rhs)?
        .residual_report(format!("{} Yang-Baxter equation", mode(graded))))
}

/// `R̂₁₂R̂₂₃R̂₁₂ − R̂₂₃R̂₁₂R̂₂₃`.
pub fn braid_residual(rhat: &GradedMatrix, graded: bool) -> Result<VerificationReport> {
    let [r12, _, r23] = embeddings(rhat, graded)?;
    let lhs = r12.mul(&r23)?.mul(&r12)?;
    let rhs = r23.mul(&r12)?.mul(&r23)?;
    Ok(lhs
        .sub(&rhs)?
        .residual_report(format!("{} braid equation", mode(graded))))
}

/// `(P·R)² − I`.
pub fn rhat_involution(r: &GradedMatrix) -> Result<VerificationReport> {
    let h = rhat(r)?;
    let res = h.mul(&h)?.sub(&GradedMatrix::identity(4))?;
    Ok(res.residual_report("Rhat^2 = I"))
}

/// `R_{h1,h2} − R_{h1}·R_{h2}` modulo `h1h2`.
pub fn factorization_check() -> Result<VerificationReport> {
    let prod = r_h1().mul(&r_h2())?;
    let res = r_h1h2()
        .sub(&prod)?
        .map_scalars(GrassmannScalar::without_h1h2);
    Ok(res.residual_report("R_h1h2 = R_h1 * R_h2 (h1h2 = 0)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_embeds_to_identity() {
        let i = GradedMatrix::identity(2);
        assert_eq!(t1_of(&i).unwrap(), GradedMatrix::identity(4));
        assert_eq!(t2_of(&i).unwrap(), GradedMatrix::identity(4));
    }

    #[test]
    fn t1_sign_at_21_11() {
        // i=2, j=1, k=1, l=1: sign (−1)^{0} in 0-based grades, entry γ
        let t = t_matrix(false);
        let t1 = t1_of(&t).unwrap();
        assert_eq!(t1.get(2, 0), &AlgebraElement::named("gamma"));
    }

    #[test]
    fn permutation_squares_to_identity() {
        let p = super_permutation();
        assert_eq!(p.mul(&p).unwrap(), GradedMatrix::identity(4));
        assert_eq!(p.get(3, 3), &AlgebraElement::int(-1));
    }

    #[test]
    fn identity_satisfies_both_ybe() {
        let i = GradedMatrix::identity(4);
        assert!(ybe_residual(&i, true).unwrap().passed);
        assert!(ybe_residual(&i, false).unwrap().passed);
    }

    #[test]
    fn permutation_is_a_braiding() {
        assert!(braid_residual(&super_permutation(), true).unwrap().passed);
        assert!(rhat_involution(&super_permutation()).unwrap().passed);
    }

    #[test]
    fn dimension_errors() {
        assert!(t1_of(&GradedMatrix::identity(4)).is_err());
        assert!(ybe_residual(&GradedMatrix::identity(2), true).is_err());
    }
}
