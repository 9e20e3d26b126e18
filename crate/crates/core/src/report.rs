//! Human-readable key/value reports.
//!
//! Every number is printed twice: rounded to six significant digits for
//! reading, then in full precision for machines.

use std::fmt::Write;

use serde::Serialize;

use crate::model::{atomic_steady_state, AtomicSteadyState, SystemParams};
use crate::single_mode::{
    field_moments, mean_photon_number, quadrature_report, FieldMoments, PhotonReport,
    QuadratureReport,
};
use crate::superposed::{superposed_report, SuperposedReport};
use crate::Result;

/// `%g`-style rendering with six significant digits.
pub fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Full-precision rendering that round-trips.
pub fn full(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Default, Clone)]
pub struct TextReport {
    out: String,
}

impl TextReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn section(&mut self, name: &str) -> &mut Self {
        if !self.out.is_empty() {
            self.out.push('\n');
        }
        writeln!(self.out, "[{name}]").unwrap();
        self
    }

    pub fn num(&mut self, key: &str, v: f64) -> &mut Self {
        writeln!(self.out, "{key} = {} ({})", sig6(v), full(v)).unwrap();
        self
    }

    pub fn text(&mut self, key: &str, v: impl std::fmt::Display) -> &mut Self {
        writeln!(self.out, "{key} = {v}").unwrap();
        self
    }

    pub fn finish(self) -> String {
        self.out
    }
}

/// Every closed-form steady-state result at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FullReport {
    pub parameters: SystemParams,
    pub atomic: AtomicSteadyState,
    pub photons: PhotonReport,
    pub field_moments: FieldMoments,
    pub quadratures: QuadratureReport,
    pub superposed: SuperposedReport,
}

pub fn full_report(params: &SystemParams) -> Result<FullReport> {
    Ok(FullReport {
        parameters: *params,
        atomic: atomic_steady_state(params)?,
        photons: mean_photon_number(params)?,
        field_moments: field_moments(params)?,
        quadratures: quadrature_report(params)?,
        superposed: superposed_report(params)?,
    })
}

impl FullReport {
    /// `(section, [(key, value)])` in display order.
    pub fn entries(&self) -> Vec<(&'static str, Vec<(&'static str, f64)>)> {
        let p = &self.parameters;
        let a = &self.atomic;
        let n = &self.photons;
        let m = &self.field_moments;
        let q = &self.quadratures;
        let s = &self.superposed;
        vec![
            (
                "parameters",
                vec![
                    ("g", p.g()),
                    ("kappa", p.kappa()),
                    ("eta", p.eta()),
                    ("gamma", p.gamma()),
                    ("gamma_c", p.gamma_c()),
                    ("epsilon", p.epsilon()),
                ],
            ),
            (
                "atomic",
                vec![
                    ("sigma_a", a.sigma_a),
                    ("sigma_b", a.sigma_b),
                    ("sigma_c", a.sigma_c),
                    ("eta_a", a.eta_a),
                    ("eta_b", a.eta_b),
                    ("eta_c", a.eta_c),
                    ("population_sum", a.population_sum()),
                ],
            ),
            (
                "photons",
                vec![
                    ("n_bar", n.n_bar),
                    ("drive_term", n.drive_term),
                    ("absorbed_term", n.absorbed_term),
                    ("emitted_term", n.emitted_term),
                    ("mean_b", m.mean_b),
                    ("mean_b_squared", m.mean_b_squared),
                ],
            ),
            (
                "quadratures",
                vec![
                    ("var_plus", q.var_plus),
                    ("var_minus", q.var_minus),
                    ("vacuum_level", q.vacuum_level),
                    ("f_a", q.f_lower),
                    ("f_b", q.f_product),
                    ("s_plus", q.s_plus),
                    ("s_minus", q.s_minus),
                ],
            ),
            (
                "superposed",
                vec![
                    ("n_s", s.n_s),
                    ("var_plus", s.var_plus),
                    ("var_minus", s.var_minus),
                    ("vacuum_level", s.vacuum_level),
                    ("f_c", s.f_lower),
                    ("f_d", s.f_product),
                    ("s_sup_plus", s.s_sup_plus),
                    ("s_sup_minus", s.s_sup_minus),
                ],
            ),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut r = TextReport::new();
        for (section, entries) in self.entries() {
            r.section(section);
            for (key, v) in entries {
                r.num(key, v);
            }
        }
        r.finish()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,key,value\n");
        for (section, entries) in self.entries() {
            for (key, v) in entries {
                writeln!(out, "{section},{key},{v}").unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::params_from_plot_set;

    #[test]
    fn full_report_at_plot_point() {
        let r = full_report(&params_from_plot_set(0.5, 0.8, 0.3, 0.6).unwrap()).unwrap();
        let text = r.to_text();
        assert!(
            text.contains("[quadratures]\nvar_plus = 0.299486 ("),
            "{text}"
        );
        assert!(text.contains("s_plus = 0.520822 ("));
        let csv = r.to_csv();
        assert!(csv.starts_with("section,key,value\nparameters,g,"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let s_plus = json["quadratures"]["s_plus"].as_f64().unwrap();
        assert_eq!(s_plus, r.quadratures.s_plus);
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.520822065981612), "0.520822");
        assert_eq!(sig6(2.89360465116279), "2.89360".trim_end_matches('0'));
        assert_eq!(sig6(0.625), "0.625");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(-0.0001234567), "-0.000123457");
        assert_eq!(sig6(1.234567e-7), "1.23457e-7");
        assert_eq!(sig6(1234567.0), "1.23457e6");
        assert_eq!(sig6(999999.6), "1e6");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn full_precision_round_trips() {
        for v in [0.1, 1.0 / 3.0, 2.89360465116279e-300, -7.5] {
            assert_eq!(full(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn sections_and_entries() {
        let mut r = TextReport::new();
        r.section("atom").num("eta_a", 0.25).text("note", "ok");
        r.section("field");
        assert_eq!(
            r.finish(),
            "[atom]\neta_a = 0.25 (2.5000000000000000e-1)\nnote = ok\n\n[field]\n"
        );
    }
}
