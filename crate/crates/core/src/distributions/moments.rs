use std::f64::consts::PI;

use super::{closed_kind, Closed, DistributionForm, EvenSeries};
use crate::billiards::{BilliardSpec, Eigenstate, Shape};
use crate::error::{Error, Result};
use crate::quadrature::cubature::integrate_2d_with;
use crate::quadrature::integrate_1d;

/// k-th moment (k = 1 or 2) of the amplitude under the uniform measure.
///
/// The second moment of a closed-form state (other than the approximate
/// disk model) is read off the xi^2 coefficient of its characteristic
/// function. First moments vanish for
/// sign-symmetric states; otherwise, and for states without a closed form,
/// the moment is a domain quadrature of Psi^k divided by the area.
pub fn moment(spec: &BilliardSpec, k: u32) -> Result<f64> {
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidArgument(format!("moment order {k} is not 1 or 2")));
    }
    let form = DistributionForm::new(spec)?;
    if k == 2 {
        // The disk closed form is an approximation, so its series
        // coefficient is not the moment of the actual eigenfunction.
        match closed_kind(spec)? {
            Some(Closed::Circle(_)) | None => {}
            Some(closed) => return Ok(EvenSeries::of(&closed).second_moment()),
        }
    } else if form.has_closed_form() && form.asymmetry_coefficient == 0.0 {
        return Ok(0.0);
    }
    quadrature_moment(spec, k, form.area())
}

fn quadrature_moment(spec: &BilliardSpec, k: u32, area: f64) -> Result<f64> {
    let st = Eigenstate::new(*spec)?;
    let what = "moment quadrature";
    let r = if spec.shape == Shape::Box1D {
        integrate_1d(|x| st.amplitude(x, 0.0).powi(k as i32), 0.0, PI, 1e-12)?.require(what)?
    } else {
        let region = spec.domain().region().expect("two-dimensional shape");
        integrate_2d_with(|x, y| st.amplitude(x, y).powi(k as i32), &region, 1e-12, 1e-11)?.require(what)?
    };
    Ok(r.value / area)
}

/// Factor c such that c Psi has unit L2 norm over the domain.
pub fn normalization_constant(spec: &BilliardSpec) -> Result<f64> {
    let area = spec.domain().area();
    Ok(1.0 / (area * moment(spec, 2)?).sqrt())
}
