//! Acceptance suite: one test per headline guarantee of the library, each
//! printing a single `PASS` verdict line (run with `--nocapture` to see
//! them). The CLI contract has its own verdict line in the `latgal-cli`
//! crate's end-to-end tests.

use std::time::{Duration, Instant};

use latgal::abelian::{
    self, AbelianError, FinAbGroup, MAX_SEMI_SCAN_ORDER,
};
use latgal::essentiality::{
    closed_elements, closures_of, hollow_dimension, is_essential_in, is_join_independent,
    is_uc, is_uniform, join_independent_incremental, uniform_dimension,
};
use latgal::fixtures;
use latgal::galois::{CorrespondenceMode, GaloisConnection};
use latgal::lattice::{Elem, Lattice};
use latgal::search::{enumerate_connections, enumerate_lattices, run_theorem_suite};

/// Worked-example checks must be effectively instant.
const INSTANT_BUDGET: Duration = Duration::from_secs(1);
/// The exhaustive theorem sweep over all small adjoint pairs.
const SUITE_BUDGET: Duration = Duration::from_secs(600);
/// The abelian-group sweep over all pairs of groups of order at most eight.
const MODULE_BUDGET: Duration = Duration::from_secs(300);

fn elems(l: &Lattice, labels: &[&str]) -> Vec<Elem> {
    let mut out: Vec<Elem> = labels
        .iter()
        .map(|s| {
            l.index_of(s)
                .unwrap_or_else(|| panic!("no element `{s}` in `{}`", l.name()))
        })
        .collect();
    out.sort_unstable();
    out
}

fn elem(l: &Lattice, label: &str) -> Elem {
    elems(l, &[label])[0]
}

/// All abelian groups of order at most eight, one per isomorphism class.
fn small_groups() -> Vec<FinAbGroup> {
    [
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ]
    .into_iter()
    .map(|orders| FinAbGroup::new(&orders).expect("valid orders"))
    .collect()
}

#[test]
fn acceptance_criterion_1_grid_connection_classification() {
    let started = Instant::now();
    let conn = fixtures::grid_pair();
    let report = conn.classify();
    assert!(report.essential.holds, "grid_pair must be essential");
    assert!(report.retractable.holds, "grid_pair must be retractable");
    assert!(report.uc.holds, "grid_pair must have unique closures");

    let (galois_a, galois_b) = conn.galois_elements();
    assert_eq!(galois_a, elems(conn.a(), &["0", "H3", "H5", "G"]));
    assert_eq!(galois_b, elems(conn.b(), &["0", "H1", "H2", "H4"]));

    let closed = closed_elements(conn.b());
    assert_eq!(closed, elems(conn.b(), &["0", "H3", "H5", "G"]));
    let h3 = elem(conn.b(), "H3");
    assert!(closed.contains(&h3) && !galois_b.contains(&h3));

    assert!(started.elapsed() < INSTANT_BUDGET);
    println!("acceptance criterion 1 (grid connection classification): PASS");
}

#[test]
fn acceptance_criterion_2_subgroup_inclusion_closures() {
    let started = Instant::now();
    let conn = fixtures::inclusion_floor();
    let report = conn.classify();
    assert!(report.essential.holds);
    assert!(report.retractable.holds);
    assert!(!report.uc.holds);
    let witness = report.uc.witness.expect("failing flag carries a witness");
    assert_eq!(conn.b().label(witness), "H6");

    let closures = closures_of(conn.b(), elem(conn.b(), "H3"));
    assert_eq!(closures.closures, elems(conn.b(), &["H5", "H6"]));

    assert!(started.elapsed() < INSTANT_BUDGET);
    println!("acceptance criterion 2 (subgroup inclusion closures): PASS");
}

#[test]
fn acceptance_criterion_3_negative_examples() {
    let started = Instant::now();

    // A connection with none of the three transfer properties, with the
    // first failing element of each kind pinned by label.
    let mixed = fixtures::mixed_pair();
    let report = mixed.classify();
    assert!(!report.essential.holds);
    assert!(!report.retractable.holds);
    assert!(!report.uc.holds);
    let (a, b) = (mixed.a(), mixed.b());
    assert_eq!(a.label(report.essential.witness.expect("witness")), "a3");
    assert_eq!(b.label(report.retractable.witness.expect("witness")), "b2");
    assert_eq!(b.label(report.uc.witness.expect("witness")), "b5");

    // `a4` is a fixed point of the round trip yet has a proper essential
    // extension, so being a Galois element does not imply being closed.
    let a4 = elem(a, "a4");
    let (galois_a, _) = mixed.galois_elements();
    assert!(galois_a.contains(&a4));
    assert!(!closed_elements(a).contains(&a4));

    // Two pinned failures of essentiality preservation, one per direction:
    // α maps a4 ≤e a6 to b1, not essential below α(a6) = 1; β maps
    // b2 ≤e b4 to 0, not essential below β(b4) = a2.
    let a6 = elem(a, "a6");
    assert!(is_essential_in(a, a4, a6).unwrap());
    assert_eq!(b.label(mixed.alpha(a4)), "b1");
    assert_eq!(mixed.alpha(a6), b.top());
    assert!(!is_essential_in(b, mixed.alpha(a4), mixed.alpha(a6)).unwrap());

    let (b2, b4) = (elem(b, "b2"), elem(b, "b4"));
    assert!(is_essential_in(b, b2, b4).unwrap());
    assert_eq!(mixed.beta(b2), a.bottom());
    assert_eq!(a.label(mixed.beta(b4)), "a2");
    assert!(!is_essential_in(a, mixed.beta(b2), mixed.beta(b4)).unwrap());

    // A retractable connection that is neither essential nor unique-closure.
    let retract = fixtures::retract_pair().classify();
    assert!(retract.retractable.holds);
    assert!(!retract.essential.holds);
    assert!(!retract.uc.holds);

    // A cyclically essential connection that is not essential, and the
    // cyclic elements of its domain.
    let ceiling = fixtures::ceiling_pair();
    let report = ceiling.classify();
    assert!(report.cyclically_essential.holds);
    assert!(!report.essential.holds);
    assert_eq!(ceiling.a().label(report.essential.witness.expect("witness")), "c5");
    assert_eq!(
        ceiling.a().cyclic_elements(),
        elems(ceiling.a(), &["0", "c1", "c2", "c3", "c4"])
    );

    assert!(started.elapsed() < INSTANT_BUDGET);
    println!("acceptance criterion 3 (negative examples): PASS");
}

#[test]
fn acceptance_criterion_4_theorem_suite_small_sizes() {
    let started = Instant::now();
    let suite = run_theorem_suite(5).expect("suite within budget");
    assert_eq!(suite.total_failures(), 0, "no theorem clause may fail");
    assert!(suite.all_clauses_exercised());
    for clause in &suite.clauses {
        assert!(clause.instances > 0, "clause `{}` never ran", clause.name);
        assert!(clause.failures.is_empty(), "clause `{}` failed", clause.name);
    }
    assert!(suite.lattices_tested > 0 && suite.connections_tested > 0);
    assert!(started.elapsed() <= SUITE_BUDGET);
    println!(
        "acceptance criterion 4 (theorem suite, {} lattices / {} connections): PASS",
        suite.lattices_tested, suite.connections_tested
    );
}

#[test]
fn acceptance_criterion_5_dimension_checks() {
    let grid = fixtures::grid3x3();
    let dim = uniform_dimension(&grid);
    assert_eq!(dim.value, 2);
    assert_eq!(dim.witness, elems(&grid, &["H1", "H2"]));

    for n in 2..=6 {
        for l in enumerate_lattices(n).expect("within enumeration budget") {
            // Dimension one characterizes the uniform lattices.
            assert_eq!(uniform_dimension(&l).value == 1, is_uniform(&l), "{}", l.name());

            // On modular lattices the prefix-wise independence test agrees
            // with the all-subsets definition, in any order.
            if !l.is_modular() {
                continue;
            }
            let nonzero: Vec<Elem> = l.elements().filter(|&x| x != l.bottom()).collect();
            for mask in 1usize..(1 << nonzero.len()) {
                let subset: Vec<Elem> = (0..nonzero.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| nonzero[i])
                    .collect();
                let full = is_join_independent(&l, &subset);
                let reversed: Vec<Elem> = subset.iter().rev().copied().collect();
                assert_eq!(full, join_independent_incremental(&l, &subset), "{}", l.name());
                assert_eq!(full, join_independent_incremental(&l, &reversed), "{}", l.name());
            }
        }
    }
    println!("acceptance criterion 5 (dimension checks): PASS");
}

#[test]
fn acceptance_criterion_6_module_layer() {
    let started = Instant::now();

    // The kernel and image connections exist (construction runs the
    // exhaustive adjunction check) on the two worked self-Hom cases.
    for orders in [vec![4], vec![2, 4]] {
        let m = FinAbGroup::new(&orders).unwrap();
        abelian::connection_rm_lu(&m, &m).expect("kernel connection is adjoint");
        abelian::connection_rn_lu(&m, &m).expect("image connection is adjoint");
    }

    let mut pairs_checked = 0;
    let mut equalities_from_semi = 0;
    for m in small_groups() {
        for n in small_groups() {
            let retractable = abelian::is_retractable_module(&m, &n).unwrap();
            let coretractable = abelian::is_coretractable_module(&m, &n).unwrap();

            // Module-level predicates match the connection-level flags, and
            // the upper adjoint of the image connection is additive.
            match abelian::connection_rn_lu(&m, &n) {
                Ok(conn) => {
                    assert_eq!(retractable, conn.is_retractable(), "images({m},{n})");
                    assert!(conn.is_beta_additive(), "images({m},{n})");
                    pairs_checked += 1;
                }
                Err(AbelianError::TooLarge { .. }) => {}
                Err(e) => panic!("images({m},{n}): {e}"),
            }
            match abelian::connection_rm_lu(&m, &n) {
                Ok(conn) => {
                    assert_eq!(coretractable, conn.is_retractable(), "kernels({m},{n})");
                }
                Err(AbelianError::TooLarge { .. }) => {}
                Err(e) => panic!("kernels({m},{n}): {e}"),
            }

            // Dimension comparisons between a group lattice and the
            // submodule lattice it transfers to, with equality under the
            // lifting/extension scans.
            let (s_lattice, t_lattice) = match (
                abelian::s_submodule_lattice(&m, &n),
                abelian::t_submodule_lattice(&m, &n),
            ) {
                (Ok(s), Ok(t)) => (s, t),
                _ => continue,
            };
            let udim_n = uniform_dimension(&abelian::subgroup_lattice(&n).unwrap()).value;
            let hdim_m = hollow_dimension(&abelian::subgroup_lattice(&m).unwrap()).value;
            let within_scan =
                m.order() <= MAX_SEMI_SCAN_ORDER && n.order() <= MAX_SEMI_SCAN_ORDER;
            if retractable {
                let udim_s = uniform_dimension(&s_lattice).value;
                assert!(udim_n <= udim_s, "images({m},{n})");
                if within_scan && abelian::is_semi_projective(&m, &n).unwrap() {
                    assert_eq!(udim_n, udim_s, "images({m},{n})");
                    equalities_from_semi += 1;
                }
            }
            if coretractable {
                let udim_t = uniform_dimension(&t_lattice).value;
                assert!(hdim_m <= udim_t, "kernels({m},{n})");
                if within_scan && abelian::is_semi_injective(&m, &n).unwrap() {
                    assert_eq!(hdim_m, udim_t, "kernels({m},{n})");
                }
            }
        }
    }
    assert!(pairs_checked > 50, "sweep too small: {pairs_checked}");
    assert!(equalities_from_semi > 10);

    assert!(started.elapsed() <= MODULE_BUDGET);
    println!("acceptance criterion 6 (module layer, {pairs_checked} pairs): PASS");
}

#[test]
fn acceptance_criterion_7_closed_correspondence() {
    let mut verified = 0;
    let mut check = |conn: &GaloisConnection| {
        let report = conn.classify();
        let applicable = report.essential.holds
            && report.retractable.holds
            && report.uc.holds
            && conn.a().is_modular()
            && conn.b().is_modular();
        if !applicable {
            return;
        }
        let c = conn
            .closed_correspondence(CorrespondenceMode::Modular)
            .unwrap_or_else(|e| panic!("{}: {e}", conn.name()));
        assert!(c.verified, "{}", conn.name());
        assert!(c.psi_well_defined && c.closed_image_coincidence, "{}", conn.name());
        assert_eq!(c.mutually_inverse, Some(true), "{}", conn.name());
        assert_eq!(c.psi_order_preserving, Some(true), "{}", conn.name());
        if is_uc(conn.b()) {
            assert_eq!(c.phi_order_preserving, Some(true), "{}", conn.name());
        }
        verified += 1;
    };

    let lattices: Vec<Lattice> = (2..=5)
        .flat_map(|n| enumerate_lattices(n).expect("within enumeration budget"))
        .collect();
    for a in &lattices {
        for b in &lattices {
            for conn in enumerate_connections(a, b).expect("within pair budget") {
                check(&conn);
            }
        }
    }

    for m in small_groups() {
        for n in small_groups() {
            for conn in [abelian::connection_rm_lu(&m, &n), abelian::connection_rn_lu(&m, &n)] {
                match conn {
                    Ok(conn) => check(&conn),
                    Err(AbelianError::TooLarge { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    assert!(verified > 100, "too few applicable instances: {verified}");
    println!("acceptance criterion 7 (closed correspondence, {verified} instances): PASS");
}
