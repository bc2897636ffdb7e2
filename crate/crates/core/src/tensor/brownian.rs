use super::fockvec::{annihilate, create, expectation, FockVector, Op};
use super::hspace::{StepBasis, StepFunction};
use crate::hypercomplex::Quaternion;
use crate::Result;

/// `⟨X(t)𝟏, X(s)𝟏⟩` for `X(t) = T_{1_[0,t]} + T*_{1_[0,t]}` on the full
/// Fock module over `L²(ℝ⁺, dx)`; equals `min{t, s}`.
pub fn brownian_cov(t: f64, s: f64) -> Result<Quaternion> {
    let ft = StepFunction::indicator(t)?;
    let fs = StepFunction::indicator(s)?;
    let basis = StepBasis::refining(&[&ft, &fs]);
    let vac = FockVector::vacuum(basis.dim());
    let x_vac = |f: &StepFunction| -> Result<FockVector> {
        let u = basis.coordinates(f);
        create(&u, &vac)?.add(&annihilate(&u, &vac)?)
    };
    x_vac(&ft)?.inner(&x_vac(&fs)?)
}

/// `E(X(s)* X(t)) = ⟨X(s) X(t) 𝟏, 𝟏⟩`, using that `X(s)` is self-adjoint.
pub fn brownian_expectation(s: f64, t: f64) -> Result<Quaternion> {
    let ft = StepFunction::indicator(t)?;
    let fs = StepFunction::indicator(s)?;
    let basis = StepBasis::refining(&[&ft, &fs]);
    let (ut, us) = (basis.coordinates(&ft), basis.coordinates(&fs));
    let products: Vec<Vec<Op>> = [Op::Create(us.clone()), Op::Annihilate(us)]
        .into_iter()
        .flat_map(|left| {
            [Op::Create(ut.clone()), Op::Annihilate(ut.clone())].map(move |right| vec![left.clone(), right])
        })
        .collect();
    expectation(basis.dim(), &products)
}
