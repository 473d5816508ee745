use super::algebra::FrobeniusAlgebra;
use super::operator::{coords, q_mode, supercommutator_apply, virasoro};
use super::space::{FockSpace, FockVector};
use crate::error::Result;
use crate::exact::rat;
use crate::report::VerificationReport;

fn basis_vectors(space: &FockSpace, upto: usize) -> Vec<FockVector> {
    space.basis_upto(upto).into_iter().map(FockVector::monomial).collect()
}

/// `[𝔮_n(e_i), 𝔮_m(e_j)] = n δ_{n,−m} ∫ e_i e_j` on all monomials of weight
/// `≤ upto`, for `0 < |n|, |m| ≤ modes`.
pub fn verify_fock_heisenberg(a: &FrobeniusAlgebra, modes: i64, upto: usize) -> Result<VerificationReport> {
    let space = FockSpace::from_algebra(a);
    let vs = basis_vectors(&space, upto);
    let mut report = VerificationReport::new("fock-heisenberg");
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for n in (-modes..=modes).filter(|&n| n != 0) {
                for m in (-modes..=modes).filter(|&m| m != 0) {
                    let qa = q_mode(&space, n, &coords(&a.basis(i)))?;
                    let qb = q_mode(&space, m, &coords(&a.basis(j)))?;
                    let c = if n + m == 0 {
                        rat(n) * a.integral(&a.mul(&a.basis(i), &a.basis(j)))
                    } else {
                        rat(0)
                    };
                    for v in &vs {
                        let lhs = supercommutator_apply(&space, &qa, &qb, v)?;
                        let label = format!("[q_{n}({}), q_{m}({})] {}", a.labels()[i], a.labels()[j], v.display(&space));
                        report.check(label, &lhs, &v.scale_rational(&c));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `[𝔏_n(α), 𝔏_m(β)] = (n−m) 𝔏_{n+m}(αβ) − (n³−n)/12 δ_{n,−m} ∫ c₂ αβ` for
/// basis elements α, β, on monomials of weight `≤ upto`, `|n|, |m| ≤ modes`.
pub fn verify_virasoro(a: &FrobeniusAlgebra, modes: i64, upto: usize) -> Result<VerificationReport> {
    let space = FockSpace::from_algebra(a);
    let cutoff = upto + modes as usize;
    let c2 = a.euler_class().cloned().unwrap_or_else(|| a.zero());
    let vs = basis_vectors(&space, upto);
    let mut report = VerificationReport::new("virasoro");
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (x, y) = (a.basis(i), a.basis(j));
            let xy = a.mul(&x, &y);
            for n in -modes..=modes {
                for m in -modes..=modes {
                    let ln = virasoro(a, n, &x, cutoff)?;
                    let lm = virasoro(a, m, &y, cutoff)?;
                    let lnm = virasoro(a, n + m, &xy, cutoff)?;
                    let central = if n + m == 0 {
                        -rat(n * n * n - n) / rat(12) * a.integral(&a.mul(&c2, &xy))
                    } else {
                        rat(0)
                    };
                    for v in &vs {
                        let lhs = supercommutator_apply(&space, &ln, &lm, v)?;
                        let rhs = lnm.apply(&space, v)?.scale_rational(&rat(n - m)).add(&v.scale_rational(&central));
                        let label = format!("[L_{n}({}), L_{m}({})] {}", a.labels()[i], a.labels()[j], v.display(&space));
                        report.check(label, &lhs, &rhs);
                    }
                }
            }
        }
    }
    Ok(report)
}
