//! JSON rendering of classification and theorem results.
//!
//! Reports are plain data with label strings instead of element indices, so
//! they stay meaningful outside the process that produced them. Serialization
//! is deterministic: struct fields keep declaration order, maps are sorted,
//! and [`to_json_pretty`] always ends with a newline — goldens can be
//! compared byte for byte.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::essentiality::{
    closed_elements, is_extending, is_uc, is_uniform, uniform_dimension, DualNotionSuite,
};
use crate::galois::{
    ClauseStatus, CorrespondenceMode, CorrespondenceResult, DualCorrespondenceReport,
    ExtendingReport, GaloisConnection, GaloisError, UdimReport,
};
use crate::lattice::{Elem, Lattice};

/// Version stamp written into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Structural summary of one lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub schema: u32,
    pub lattice: String,
    pub size: usize,
    pub modular: bool,
    pub distributive: bool,
    /// Whether every element has a unique closure.
    pub uc: bool,
    pub uniform: bool,
    /// `None` when the lattice is not modular (the notion is not evaluated
    /// there).
    pub extending: Option<bool>,
    pub cyclically_generated: bool,
    pub uniform_dimension: usize,
    pub uniform_dimension_witness: Vec<String>,
    pub closed: Vec<String>,
    pub coclosed: Vec<String>,
    pub cyclic: Vec<String>,
}

/// Builds the structural summary of `l`.
pub fn lattice_report(l: &Lattice) -> LatticeReport {
    let labels = |elems: &[Elem]| elems.iter().map(|&e| l.label(e).to_owned()).collect();
    let dim = uniform_dimension(l);
    let suite = DualNotionSuite::new(l);
    LatticeReport {
        schema: SCHEMA_VERSION,
        lattice: l.name().to_owned(),
        size: l.n(),
        modular: l.is_modular(),
        distributive: l.is_distributive(),
        uc: is_uc(l),
        uniform: is_uniform(l),
        extending: l
            .is_modular()
            .then(|| is_extending(l).expect("modularity was checked")),
        cyclically_generated: l.is_cyclically_generated(),
        uniform_dimension: dim.value,
        uniform_dimension_witness: labels(&dim.witness),
        closed: labels(&closed_elements(l)),
        coclosed: labels(&suite.coclosed_elements()),
        cyclic: labels(&l.cyclic_elements()),
    }
}

/// Property flags with witnesses for the failing ones, in label form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertiesJson {
    pub essential: bool,
    pub cyclically_essential: bool,
    pub retractable: bool,
    pub uc: bool,
    pub coessential: bool,
    pub coretractable: bool,
    pub ucc: bool,
    pub beta_additive: bool,
    pub alpha_top: bool,
    pub beta_bottom: bool,
    /// One entry per failing flag: the minimal counterexample (a label, or a
    /// label pair for `beta_additive`).
    pub witnesses: BTreeMap<String, Value>,
}

/// Theorem verdicts; each value is one of the `theorem_*` shapes below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremsJson {
    pub udim: Value,
    pub correspondence: Value,
    pub extending: Value,
    pub dual_correspondence: Value,
}

/// Full connection report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionReport {
    pub schema: u32,
    pub connection: String,
    pub domain: String,
    pub codomain: String,
    pub adjunction: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertiesJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<TheoremsJson>,
}

impl ConnectionReport {
    /// Whether any theorem verdict is a violation (the alarm case).
    pub fn has_violation(&self) -> bool {
        self.theorems.as_ref().is_some_and(|t| {
            [&t.udim, &t.correspondence, &t.extending, &t.dual_correspondence]
                .iter()
                .any(|v| v["status"] == "violation")
        })
    }
}

/// Report for a pair of maps that failed to form a connection.
pub fn adjunction_failure(
    name: &str,
    domain: &str,
    codomain: &str,
    error: &GaloisError,
) -> ConnectionReport {
    ConnectionReport {
        schema: SCHEMA_VERSION,
        connection: name.to_owned(),
        domain: domain.to_owned(),
        codomain: codomain.to_owned(),
        adjunction: false,
        error: Some(error.to_string()),
        properties: None,
        theorems: None,
    }
}

/// Classifies `conn` and verifies every applicable theorem, rendering the
/// outcome with label strings.
pub fn connection_report(conn: &GaloisConnection) -> ConnectionReport {
    let report = conn.classify();
    let a_label = |e: Elem| conn.a().label(e).to_owned();
    let b_label = |e: Elem| conn.b().label(e).to_owned();

    let mut witnesses = BTreeMap::new();
    let mut single = |name: &str, witness: Option<Elem>, label: &dyn Fn(Elem) -> String| {
        if let Some(e) = witness {
            witnesses.insert(name.to_owned(), Value::String(label(e)));
        }
    };
    single("essential", report.essential.witness, &a_label);
    single("cyclically_essential", report.cyclically_essential.witness, &a_label);
    single("retractable", report.retractable.witness, &b_label);
    single("uc", report.uc.witness, &b_label);
    single("coessential", report.coessential.witness, &b_label);
    single("coretractable", report.coretractable.witness, &a_label);
    single("ucc", report.ucc.witness, &a_label);
    if let Some((y, y2)) = report.beta_additive.witness {
        witnesses.insert("beta_additive".to_owned(), json!([b_label(y), b_label(y2)]));
    }

    let properties = PropertiesJson {
        essential: report.essential.holds,
        cyclically_essential: report.cyclically_essential.holds,
        retractable: report.retractable.holds,
        uc: report.uc.holds,
        coessential: report.coessential.holds,
        coretractable: report.coretractable.holds,
        ucc: report.ucc.holds,
        beta_additive: report.beta_additive.holds,
        alpha_top: report.alpha_top,
        beta_bottom: report.beta_bottom,
        witnesses,
    };

    let theorems = TheoremsJson {
        udim: udim_json(conn),
        correspondence: correspondence_json(conn),
        extending: extending_json(conn),
        dual_correspondence: dual_correspondence_json(conn),
    };

    ConnectionReport {
        schema: SCHEMA_VERSION,
        connection: conn.name().to_owned(),
        domain: conn.a().name().to_owned(),
        codomain: conn.b().name().to_owned(),
        adjunction: true,
        error: None,
        properties: Some(properties),
        theorems: Some(theorems),
    }
}

fn clause_json(status: ClauseStatus) -> Value {
    match status {
        ClauseStatus::Passed => json!("passed"),
        ClauseStatus::NotApplicable => json!("not_applicable"),
    }
}

fn theorem_error_json(e: &GaloisError) -> Value {
    match e {
        GaloisError::HypothesisNotMet { missing } => {
            json!({ "status": "hypotheses_not_met", "missing": missing })
        }
        other => json!({ "status": "violation", "description": other.to_string() }),
    }
}

/// Dimension-theorem verdict for `conn` as a JSON value: `"status"` is
/// `"passed"`, `"hypotheses_not_met"` (with the missing list), or
/// `"violation"`.
pub fn udim_json(conn: &GaloisConnection) -> Value {
    match conn.verify_udim_theorem() {
        Ok(UdimReport { udim_a, udim_b, comparison, essential_equality, cyclic_equality }) => {
            json!({
                "status": "passed",
                "domain_dimension": udim_a.value,
                "codomain_dimension": udim_b.value,
                "comparison": clause_json(comparison),
                "essential_equality": clause_json(essential_equality),
                "cyclic_equality": clause_json(cyclic_equality),
            })
        }
        Err(e) => theorem_error_json(&e),
    }
}

fn pairs_json(pairs: &[(Elem, Elem)], from: &Lattice, to: &Lattice) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|&(x, y)| json!([from.label(x), to.label(y)]))
            .collect(),
    )
}

/// Closed-element correspondence verdict as JSON, trying the modular mode
/// first and falling back to the general one when its extra hypotheses are
/// missing.
pub fn correspondence_json(conn: &GaloisConnection) -> Value {
    let result = match conn.closed_correspondence(CorrespondenceMode::Modular) {
        Ok(r) => Ok(r),
        Err(GaloisError::HypothesisNotMet { .. }) => {
            conn.closed_correspondence(CorrespondenceMode::General)
        }
        Err(e) => Err(e),
    };
    match result {
        Ok(CorrespondenceResult {
            mode,
            script_a,
            script_b,
            phi,
            psi,
            psi_well_defined,
            mutually_inverse,
            psi_order_preserving,
            phi_order_preserving,
            ..
        }) => {
            let labels = |elems: &[Elem], l: &Lattice| {
                Value::Array(elems.iter().map(|&e| json!(l.label(e))).collect())
            };
            json!({
                "status": "passed",
                "mode": match mode {
                    CorrespondenceMode::Modular => "modular",
                    CorrespondenceMode::General => "general",
                },
                "domain_set": labels(&script_a, conn.a()),
                "codomain_set": labels(&script_b, conn.b()),
                "domain_to_codomain": pairs_json(&phi, conn.a(), conn.b()),
                "codomain_to_domain": pairs_json(&psi, conn.b(), conn.a()),
                "well_defined": psi_well_defined,
                "mutually_inverse": mutually_inverse,
                "codomain_to_domain_order_preserving": psi_order_preserving,
                "domain_to_codomain_order_preserving": phi_order_preserving,
            })
        }
        Err(e) => theorem_error_json(&e),
    }
}

/// Extending-transfer verdict as JSON.
pub fn extending_json(conn: &GaloisConnection) -> Value {
    match conn.verify_extending_transfer() {
        Ok(ExtendingReport { a_extending, b_extending, to_domain, to_codomain }) => json!({
            "status": "passed",
            "domain_extending": a_extending,
            "codomain_extending": b_extending,
            "to_domain": clause_json(to_domain),
            "to_codomain": clause_json(to_codomain),
        }),
        Err(e) => theorem_error_json(&e),
    }
}

/// Coclosed-correspondence verdict as JSON.
pub fn dual_correspondence_json(conn: &GaloisConnection) -> Value {
    match conn.verify_dual_correspondence() {
        Ok(DualCorrespondenceReport {
            coclosed_a,
            coclosed_b,
            a_to_b,
            b_to_a,
            order_preserving,
        }) => {
            let labels = |elems: &[Elem], l: &Lattice| {
                Value::Array(elems.iter().map(|&e| json!(l.label(e))).collect())
            };
            json!({
                "status": "passed",
                "coclosed_domain": labels(&coclosed_a, conn.a()),
                "coclosed_codomain": labels(&coclosed_b, conn.b()),
                "domain_to_codomain": pairs_json(&a_to_b, conn.a(), conn.b()),
                "codomain_to_domain": pairs_json(&b_to_a, conn.b(), conn.a()),
                "order_preserving": order_preserving,
            })
        }
        Err(e) => theorem_error_json(&e),
    }
}

/// Pretty-prints any report with a trailing newline (byte-stable).
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    s.push('\n');
    s
}
