//! Names accepted by `build-example`.
//!
//! ```text
//! group:<G>  dual-group:<G>  sweedler:<λ>  uq-sl2:<ℓ>  double:<hopf name>
//! modular:double:<G>  modular:semion  modular:rep-z2  modular:trivial
//! algebra:matrix<n>  algebra:split<n>  algebra:group:<G>  algebra:poly:<c0,c1,…>
//! table:<G>
//! ```
//!
//! A group `<G>` is `cyclic<n>`, `symmetric<k>` or a `x`-separated product
//! such as `cyclic2xsymmetric3`.

use crate::azumaya::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::exact::CycloScalar;
use crate::format::{write_algebra, write_group, write_hopf, write_modular};
use crate::group::FiniteGroup;
use crate::hopf::{build_example, drinfeld_double, ExampleName, HopfPresentation, RMatrix};
use crate::modular::{double_modular_data, semion, symmetric_rep_z2, trivial_data};

fn unknown(name: &str) -> Error {
    Error::UnsupportedParams(format!("unknown example '{name}'"))
}

pub fn group(name: &str) -> Result<FiniteGroup> {
    let mut factors = name.split('x').filter(|s| !s.is_empty()).map(|f| {
        let n = |s: &str| s.parse::<usize>().map_err(|_| unknown(name));
        if let Some(k) = f.strip_prefix("cyclic") {
            let k = n(k)?;
            if k == 0 {
                return Err(unknown(name));
            }
            Ok(FiniteGroup::cyclic(k))
        } else if let Some(k) = f.strip_prefix("symmetric") {
            let k = n(k)?;
            if !(1..=5).contains(&k) {
                return Err(Error::UnsupportedParams(format!("symmetric{k}: degree must be 1..=5")));
            }
            Ok(FiniteGroup::symmetric(k))
        } else {
            Err(unknown(name))
        }
    });
    let first = factors.next().ok_or_else(|| unknown(name))??;
    factors.try_fold(first, |acc, g| Ok(acc.direct_product(&g?)))
}

pub fn hopf(name: &str) -> Result<(HopfPresentation, Option<RMatrix>)> {
    let (kind, arg) = name.split_once(':').ok_or_else(|| unknown(name))?;
    let example = match kind {
        "group" => ExampleName::GroupAlgebra(group(arg)?),
        "dual-group" => ExampleName::DualGroupAlgebra(group(arg)?),
        "sweedler" => ExampleName::Sweedler(CycloScalar::parse(arg).map_err(|_| unknown(name))?),
        "uq-sl2" => ExampleName::UqSl2(arg.parse().map_err(|_| unknown(name))?),
        "double" => {
            let (inner, _) = hopf(arg)?;
            let (d, r) = drinfeld_double(&inner);
            return Ok((d, Some(r)));
        }
        _ => return Err(unknown(name)),
    };
    build_example(&example)
}

fn algebra(name: &str) -> Result<AlgebraPresentation> {
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| unknown(name));
    if let Some(n) = name.strip_prefix("matrix") {
        Ok(AlgebraPresentation::matrix_algebra(num(n)?))
    } else if let Some(n) = name.strip_prefix("split") {
        Ok(AlgebraPresentation::split(num(n)?))
    } else if let Some(g) = name.strip_prefix("group:") {
        Ok(AlgebraPresentation::group_algebra(&group(g)?))
    } else if let Some(c) = name.strip_prefix("poly:") {
        let coeffs = c
            .split(',')
            .map(|x| CycloScalar::parse(x).map_err(|_| unknown(name)))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::monogenic(&coeffs)
    } else {
        Err(unknown(name))
    }
}

/// The file text of a named example, and its kind.
pub fn example_file(name: &str) -> Result<(String, &'static str)> {
    if let Some(rest) = name.strip_prefix("modular:") {
        let d = match rest {
            "semion" => semion(),
            "rep-z2" => symmetric_rep_z2(),
            "trivial" => trivial_data(),
            _ => match rest.strip_prefix("double:") {
                Some(g) => double_modular_data(&group(g)?)?,
                None => return Err(unknown(name)),
            },
        };
        return Ok((write_modular(&d), "modular"));
    }
    if let Some(rest) = name.strip_prefix("algebra:") {
        return Ok((write_algebra(&algebra(rest)?), "algebra"));
    }
    if let Some(rest) = name.strip_prefix("table:") {
        return Ok((write_group(&group(rest)?), "group"));
    }
    let (p, r) = hopf(name)?;
    Ok((write_hopf(&p, r.as_ref()), "hopf"))
}
