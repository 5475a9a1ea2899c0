//! Identity checks on the named elements, exact at a fixed precision.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ffield::Field;
use crate::finmodel::{build_model, mvn_check, DEFAULT_SIZE_CAP};
use crate::funcfield::RationalFunction;
use crate::symcross::{check_identity, Algebra, CrossedElement, DEFAULT_PRECISION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub precision: usize,
    /// how many irreducibles f_i the invariance checks use
    pub irreducibles: usize,
    /// finite-model levels n for the partial isometry relations
    pub mvn_levels: usize,
    pub size_cap: usize,
    /// replace w_chi by w_chi + 1_1 (negative control)
    pub corrupt_w: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { precision: DEFAULT_PRECISION, irreducibles: 5, mvn_levels: 2, size_cap: DEFAULT_SIZE_CAP, corrupt_w: false }
    }
}

struct Suite {
    out: Vec<CheckResult>,
}

impl Suite {
    fn eq(&mut self, name: String, lhs: Result<CrossedElement>, rhs: Result<CrossedElement>) {
        let res = match (lhs, rhs) {
            (Ok(l), Ok(r)) => check_identity(&l, &r),
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
        };
        self.out.push(CheckResult { name, passed: res.is_ok(), detail: res.err() });
    }

    fn flag(&mut self, name: String, res: Result<(bool, String)>) {
        let (passed, detail) = match res {
            Ok((p, d)) => (p, d),
            Err(e) => (false, e.to_string()),
        };
        self.out.push(CheckResult { name, passed, detail: (!detail.is_empty()).then_some(detail) });
    }
}

pub fn run_suite(q: u64, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let field = Field::with_order(q)?;
    let mut a = Algebra::new(&field, opts.precision);
    let chars = (q - 1) as u32;
    let mut s = Suite { out: Vec::new() };
    let w = |a: &Algebra, chi: u32| -> Result<CrossedElement> {
        let w = a.w(chi)?;
        Ok(if opts.corrupt_w { w.add(&a.one_n(1)) } else { w })
    };

    for chi in 1..chars {
        let ws = w(&a, chi).and_then(|w| Ok((w.star()?, w)));
        s.eq(format!("w_chi{chi} w* = 1"), ws.as_ref().map_err(Clone::clone).and_then(|(st, w)| w.mul(st)), Ok(a.unit()));
        s.eq(format!("w_chi{chi}* w = 1"), ws.as_ref().map_err(Clone::clone).and_then(|(st, w)| st.mul(w)), Ok(a.unit()));
    }

    for i in 1..=opts.irreducibles {
        let fi = a.irreducible(i)?;
        for chi in 0..chars {
            let op = a.one_p(chi);
            s.eq(format!("mu_f{i}(1.p_chi{chi}) = 1.p_chi{chi}"), op.as_ref().map_err(Clone::clone).and_then(|x| x.mu(&fi)), op.clone());
            let x = a.x_bar(chi);
            s.eq(format!("mu_f{i}(x_chi{chi}bar) = x_chi{chi}bar"), x.as_ref().map_err(Clone::clone).and_then(|x| x.mu(&fi)), x.clone());
        }
        for chi in 1..chars {
            let wc = w(&a, chi);
            s.eq(format!("mu_f{i}(w_chi{chi}) = w_chi{chi}"), wc.as_ref().map_err(Clone::clone).and_then(|x| x.mu(&fi)), wc.clone());
        }
    }

    let t = RationalFunction::t_pow(1);
    for n in -1..=3 {
        s.eq(format!("mu_T(1_{n}) = 1_{}", n + 1), a.one_n(n).mu(&t), Ok(a.one_n(n + 1)));
    }
    for chi in 0..chars {
        let rhs = a.p(chi).and_then(|p| a.one_n(1).mul(&p));
        s.eq(format!("mu_T(1.p_chi{chi}) = 1_1.p_chi{chi}"), a.one_p(chi).and_then(|x| x.mu(&t)), rhs);
    }

    let ranges = || -> Result<CrossedElement> {
        let mut sum = CrossedElement::zero(&field, opts.precision);
        for c in field.elements() {
            let g = a.v(RationalFunction::constant(c)).mul(&a.t(t.clone())?)?;
            sum = sum.add(&g.mul(&a.one_n(0))?.mul(&g.star()?)?);
        }
        Ok(sum)
    };
    s.eq("sum_a (v^a t_T) 1 (v^a t_T)* = 1".into(), ranges(), Ok(a.one_n(0)));

    for n in 0..opts.mvn_levels {
        let model = build_model(q, n + 1, opts.size_cap)?;
        for psi in field.characters() {
            for chi in field.characters() {
                let res = mvn_check(&model, psi, chi).map(|r| {
                    let how = match (r.stated_orientation, r.swapped_orientation) {
                        (true, true) => "",
                        (true, false) => "source and range as stated",
                        (false, true) => "source and range exchanged",
                        (false, false) => "source and range do not match",
                    };
                    (r.holds(), how.to_string())
                });
                s.flag(format!("MvN level {n} {psi} {chi}"), res);
            }
        }
    }
    Ok(s.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_and_control_fails() {
        let opts = VerifyOptions { irreducibles: 2, mvn_levels: 1, ..Default::default() };
        let r = run_suite(3, &opts).unwrap();
        let bad: Vec<_> = r.iter().filter(|c| !c.passed).collect();
        assert!(bad.is_empty(), "{bad:?}");
        let r = run_suite(3, &VerifyOptions { corrupt_w: true, ..opts }).unwrap();
        assert!(r.iter().any(|c| !c.passed && c.name.starts_with("w_chi1 w*")));
    }
}
