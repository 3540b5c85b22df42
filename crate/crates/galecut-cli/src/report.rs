//! Instance files, run reports, and the report-time re-verification pass.
//!
//! Every certificate a command emits is re-checked here from scratch against
//! the instance before the report is written; the verification field is
//! never copied from the solver.

use galecut::equipartition::{
    delta_bounds, DeltaBounds, EquipartitionCertificate, MassInstance,
};
use galecut::gale::{gale_transform, PointConfig};
use galecut::kneser::{
    chromatic_number, nonface_complex, verify_coloring, ChromaticOutcome, Coloring,
    ColoringVerdict, SetFamily,
};
use galecut::linalg;
use galecut::radon::{hulls_intersect, RadonPair};
use galecut::transversal::{verify_transversal_certificate, Polytope, TransversalCertificate};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "camelCase")]
pub enum InstancePayload {
    PointConfig(PointConfig),
    MassInstance(MassInstance),
    PolytopeFamily(PolytopeFamilyPayload),
    SetFamily(SetFamily),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFamilyPayload {
    pub c: usize,
    pub polytopes: Vec<Polytope>,
    /// 1-based class labels, one per polytope.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

impl PolytopeFamilyPayload {
    pub fn classes(&self) -> Result<Vec<usize>, String> {
        let coloring = self
            .coloring
            .as_ref()
            .ok_or("instance has no coloring field")?;
        if coloring.len() != self.polytopes.len() {
            return Err("coloring length does not match the polytope count".into());
        }
        coloring
            .iter()
            .map(|&c| c.checked_sub(1).ok_or_else(|| "colors are 1-based".into()))
            .collect()
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(flatten)]
    pub payload: InstancePayload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl InstanceFile {
    pub fn point_config(&self) -> Result<&PointConfig, String> {
        match &self.payload {
            InstancePayload::PointConfig(c) => Ok(c),
            _ => Err("expected a pointConfig instance".into()),
        }
    }

    pub fn mass_instance(&self) -> Result<&MassInstance, String> {
        match &self.payload {
            InstancePayload::MassInstance(m) => Ok(m),
            _ => Err("expected a massInstance instance".into()),
        }
    }

    pub fn polytope_family(&self) -> Result<&PolytopeFamilyPayload, String> {
        match &self.payload {
            InstancePayload::PolytopeFamily(f) => Ok(f),
            _ => Err("expected a polytopeFamily instance".into()),
        }
    }

    pub fn set_family(&self) -> Result<&SetFamily, String> {
        match &self.payload {
            InstancePayload::SetFamily(f) => Ok(f),
            _ => Err("expected a setFamily instance".into()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Certificate {
    DualConfig {
        config: PointConfig,
    },
    PrimalConfig {
        config: PointConfig,
    },
    RadonPair {
        pair: RadonPair,
    },
    RadonPairs {
        pairs: Vec<RadonPair>,
    },
    RadonTuple {
        pairs: Vec<RadonPair>,
    },
    Transversal {
        certificate: TransversalCertificate,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        regime: Option<String>,
    },
    Equipartition {
        certificate: EquipartitionCertificate,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        regime: Option<String>,
    },
    Chromatic {
        r: usize,
        /// `None` when the search exceeded the color budget.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<usize>,
        /// 1-based member colors for the witness coloring.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coloring: Option<Vec<usize>>,
    },
    Facets {
        /// 1-based facets of the non-face complex.
        facets: Vec<Vec<usize>>,
    },
    Bounds {
        bounds: DeltaBounds,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub verification: String,
    pub anomalies: Vec<String>,
    pub timing_ms: u128,
}

/// Recomputes the defining property of a certificate against its instance.
/// Only the bound table needs no instance.
pub fn verify_certificate(
    cert: &Certificate,
    instance: Option<&InstanceFile>,
) -> Result<(), String> {
    let instance = |cert_name: &str| {
        instance.ok_or_else(|| format!("{cert_name} certificate needs its instance"))
    };
    match cert {
        Certificate::DualConfig { config: dual } => {
            let primal = instance("dual-config")?.point_config()?;
            let n = primal.len();
            if dual.len() != n {
                return Err("dual and primal point counts differ".into());
            }
            if n < primal.dim() + 1 || dual.dim() != n - primal.dim() - 1 {
                return Err("dual dimension is not n - d - 1".into());
            }
            if !linalg::is_zero_vec(&dual.sum()) {
                return Err("dual does not sum to zero".into());
            }
            if dual.point_matrix().rank() != dual.dim() {
                return Err("dual does not linearly span".into());
            }
            let lifted = primal.lifted_matrix();
            for row in dual.point_matrix().row_vectors() {
                if !linalg::is_zero_vec(&lifted.mul_vec(&row)) {
                    return Err("dual rows do not annihilate the lifted primal".into());
                }
            }
            Ok(())
        }
        Certificate::PrimalConfig { config: primal } => {
            let dual = instance("primal-config")?.point_config()?;
            let re = gale_transform(primal).map_err(|e| e.to_string())?;
            if re.point_matrix().row_space_canonical()
                != dual.point_matrix().row_space_canonical()
            {
                return Err("transform of the output does not match the dual row space".into());
            }
            Ok(())
        }
        Certificate::RadonPair { pair } => {
            let cfg = instance("radon-pair")?.point_config()?;
            pair.verify(cfg).map_err(|e| e.to_string())?;
            verify_minimality(cfg, pair)
        }
        Certificate::RadonPairs { pairs } => {
            let cfg = instance("radon-pairs")?.point_config()?;
            for p in pairs {
                p.verify(cfg).map_err(|e| e.to_string())?;
            }
            Ok(())
        }
        Certificate::RadonTuple { pairs } => {
            let cfg = instance("radon-tuple")?.point_config()?;
            for p in pairs {
                p.verify(cfg).map_err(|e| e.to_string())?;
                verify_minimality(cfg, p)?;
            }
            Ok(())
        }
        Certificate::Transversal { certificate, .. } => {
            let fam = instance("transversal")?.polytope_family()?;
            verify_transversal_certificate(certificate, &fam.polytopes)
                .map_err(|e| e.to_string())
        }
        Certificate::Equipartition { certificate, .. } => {
            let inst = instance("equipartition")?.mass_instance()?;
            certificate.verify(inst).map_err(|e| e.to_string())
        }
        Certificate::Chromatic { r, value, coloring } => {
            let family = instance("chromatic")?.set_family()?;
            match value {
                None => Ok(()), // exceeded budgets carry no claim to recheck
                Some(m) => {
                    let colors = coloring
                        .as_ref()
                        .ok_or("chromatic certificate lacks its witness coloring")?;
                    let zero_based = Coloring {
                        colors: colors
                            .iter()
                            .map(|&c| c.checked_sub(1).ok_or("colors are 1-based".to_string()))
                            .collect::<Result<_, _>>()?,
                    };
                    if zero_based.num_colors() > *m {
                        return Err("witness coloring uses more colors than claimed".into());
                    }
                    match verify_coloring(family, &zero_based, *r).map_err(|e| e.to_string())? {
                        ColoringVerdict::Valid => {}
                        ColoringVerdict::Violation { .. } => {
                            return Err("witness coloring has a monochromatic hyperedge".into())
                        }
                    }
                    if *m > 1 {
                        match chromatic_number(family, *r, m - 1).map_err(|e| e.to_string())? {
                            ChromaticOutcome::Exceeds => {}
                            ChromaticOutcome::Number(better, _) => {
                                return Err(format!(
                                    "a valid coloring with {better} colors exists"
                                ))
                            }
                        }
                    }
                    Ok(())
                }
            }
        }
        Certificate::Facets { facets } => {
            let family = instance("facets")?.set_family()?;
            let recomputed: Vec<Vec<usize>> = nonface_complex(family)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|f| f.into_iter().map(|i| i + 1).collect())
                .collect();
            if &recomputed != facets {
                return Err("facet list does not match a recomputation".into());
            }
            Ok(())
        }
        Certificate::Bounds { bounds } => {
            let fresh = delta_bounds(bounds.m, bounds.k).map_err(|e| e.to_string())?;
            if fresh != *bounds {
                return Err("bounds do not match a recomputation".into());
            }
            Ok(())
        }
    }
}

/// Minimality certification: dropping any single index from either side
/// leaves disjoint hulls, checked by one LP per drop.
fn verify_minimality(cfg: &PointConfig, pair: &RadonPair) -> Result<(), String> {
    for (own, other) in [
        (pair.plus(), pair.minus()),
        (pair.minus(), pair.plus()),
    ] {
        if own.len() <= 1 {
            continue;
        }
        for drop in 0..own.len() {
            let trial: Vec<usize> = own
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &v)| v)
                .collect();
            if hulls_intersect(cfg, &trial, other)
                .map_err(|e| e.to_string())?
                .is_some()
            {
                return Err(format!(
                    "pair is not minimal: index {} is redundant",
                    own[drop] + 1
                ));
            }
        }
    }
    Ok(())
}

/// Human-readable rendering of a report.
pub fn render_markdown(report: &RunReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "# {}", report.command).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "- input digest: `{}`", report.input_digest).unwrap();
    writeln!(out, "- verification: **{}**", report.verification).unwrap();
    writeln!(out, "- time: {} ms", report.timing_ms).unwrap();
    for a in &report.anomalies {
        writeln!(out, "- anomaly: {a}").unwrap();
    }
    if let Some(cert) = &report.certificate {
        writeln!(out).unwrap();
        match cert {
            Certificate::DualConfig { config } | Certificate::PrimalConfig { config } => {
                writeln!(out, "{} points in R^{}", config.len(), config.dim()).unwrap();
            }
            Certificate::RadonPair { pair } => {
                writeln!(out, "{}", pair_line(pair)).unwrap();
            }
            Certificate::RadonPairs { pairs } => {
                writeln!(out, "{} minimal pairs", pairs.len()).unwrap();
                for p in pairs {
                    writeln!(out, "- {}", pair_line(p)).unwrap();
                }
            }
            Certificate::RadonTuple { pairs } => {
                for p in pairs {
                    writeln!(out, "- {}", pair_line(p)).unwrap();
                }
            }
            Certificate::Transversal { certificate, regime } => {
                for h in &certificate.hyperplanes {
                    writeln!(out, "- hyperplane {:?} = {}", h.normal(), h.offset()).unwrap();
                }
                if let Some(r) = regime {
                    writeln!(out, "- regime: {r}").unwrap();
                } else {
                    writeln!(out, "- regime: empirical (outside guarantee)").unwrap();
                }
            }
            Certificate::Equipartition { certificate, regime } => {
                for h in &certificate.hyperplanes {
                    writeln!(out, "- hyperplane {:?} = {}", h.normal(), h.offset()).unwrap();
                }
                writeln!(out, "- orthant counts:").unwrap();
                for (g, row) in certificate.table.counts.iter().enumerate() {
                    writeln!(
                        out,
                        "  - {}: {:?}",
                        certificate.table.orthant_label(g),
                        row
                    )
                    .unwrap();
                }
                if let Some(r) = regime {
                    writeln!(out, "- regime: {r}").unwrap();
                } else {
                    writeln!(out, "- regime: empirical (outside guarantee)").unwrap();
                }
            }
            Certificate::Chromatic { r, value, .. } => match value {
                Some(v) => writeln!(out, "chromatic number for r = {r}: {v}").unwrap(),
                None => writeln!(out, "exceeds the color budget for r = {r}").unwrap(),
            },
            Certificate::Facets { facets } => {
                writeln!(out, "{} facets", facets.len()).unwrap();
                for f in facets {
                    writeln!(out, "- {f:?}").unwrap();
                }
            }
            Certificate::Bounds { bounds } => {
                writeln!(
                    out,
                    "m = {}, k = {}: lower {}, upper {}, exact {}",
                    bounds.m,
                    bounds.k,
                    bounds.lower,
                    bounds.upper,
                    bounds
                        .exact
                        .map_or("unknown".to_string(), |e| e.to_string())
                )
                .unwrap();
            }
        }
    }
    out
}

fn pair_line(pair: &RadonPair) -> String {
    format!(
        "plus {:?} minus {:?}",
        pair.plus().iter().map(|i| i + 1).collect::<Vec<_>>(),
        pair.minus().iter().map(|i| i + 1).collect::<Vec<_>>()
    )
}
