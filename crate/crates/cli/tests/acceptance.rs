//! One pass/fail line per acceptance criterion. All comparisons are exact;
//! the only tolerances are the wall-clock limits below.

use std::sync::Arc;
use std::time::{Duration, Instant};

use algebroid::algebra::{FinDimAlgebra, Group, Subalgebra};
use algebroid::bialgebroid::{
    build_s, build_t, check_lu_formula_s, check_lu_formula_t, lu_enveloping_hopf_algebroid, smash_endomorphism_iso,
    tensor_hopf_algebroid, BCentralBialgebroid, EndomorphismBialgebroid,
};
use algebroid::coring::correspondence::{extension_coring_report, ImplicationStatus};
use algebroid::extension::{QuasiBasis, RingExtension, SweepConfig};
use algebroid::hopf::{
    check_double_relation, drinfeld_double, hgalois_top_hopf_algebroid, iso_s_to_smash, iso_top_to_smash, HopfAlgebra,
    HopfGalois,
};
use algebroid::hsep::{
    build_hsep_context, centralizer_correspondence, centralizer_round_trip, double_centralizer_from_balanced,
    galois_correspondence,
};
use algebroid::linalg::{vector, Field, Matrix, Vector};
use algebroid::verify::Verification;
use algebroid_cli::{builtins, run, Built};

const D2_LIMIT: Duration = Duration::from_secs(10);
const SUITE_LIMIT: Duration = Duration::from_secs(300);

/// Sub-items whose literal statement is false; reported, never counted as met.
const KNOWN_FALSE: [&str; 1] = ["Casimir dim(e4) = 1"];

#[derive(Default)]
struct Criterion {
    items: Vec<(String, bool, String)>,
}

impl Criterion {
    fn item(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.items.push((name.into(), holds, detail.into()));
    }

    fn verification(&mut self, name: &str, v: &Verification) {
        match v.failures().next() {
            None => self.item(name, true, format!("{} identities", v.findings.len())),
            Some(f) => self.item(name, false, format!("{}: {}", f.name, f.witness)),
        }
    }

    fn passed(&self) -> bool {
        self.items.iter().all(|(_, h, _)| *h)
    }

    /// Failed items not listed as known false.
    fn unexpected(&self) -> Vec<String> {
        self.items.iter().filter(|(n, h, _)| !h && !KNOWN_FALSE.contains(&n.as_str())).map(|(n, _, d)| format!("{n} ({d})")).collect()
    }
}

fn q() -> Field {
    Field::Rational
}

fn built(name: &str) -> Built {
    builtins::scenario(name).unwrap().unwrap().build(None, None).unwrap()
}

fn galois(name: &str) -> HopfGalois {
    HopfGalois::new(built(name).comodule.expect("coaction")).unwrap()
}

fn quasibases(ext: &RingExtension) -> (QuasiBasis, QuasiBasis) {
    (ext.left_d2_quasibasis().into_found().unwrap(), ext.right_d2_quasibasis().into_found().unwrap())
}

fn s_and_t(ext: &RingExtension) -> (EndomorphismBialgebroid, BCentralBialgebroid) {
    let (l, r) = quasibases(ext);
    (build_s(ext, &l, &r).unwrap(), build_t(ext, &l, &r).unwrap())
}

fn d2_suite(c: &mut Criterion) {
    for name in ["e1", "e2", "e3", "e4"] {
        let start = Instant::now();
        let b = built(name);
        let ext = &b.ext;
        let (l, r) = (ext.left_d2_quasibasis(), ext.right_d2_quasibasis());
        let n = ext.algebra().dim();
        c.item(format!("{name} left quasibasis found"), l.is_found(), l.label());
        c.item(format!("{name} right quasibasis found"), r.is_found(), r.label());
        if let (Some(l), Some(r)) = (l.found(), r.found()) {
            c.item(format!("{name} left identity"), l.verify(ext).is_ok(), format!("{} basis pairs", n * n));
            c.item(format!("{name} right identity"), r.verify(ext).is_ok(), format!("{} basis pairs", n * n));
        }
        let elapsed = start.elapsed();
        c.item(format!("{name} runtime"), elapsed < D2_LIMIT, format!("{} ms", elapsed.as_millis()));
    }
    let hg = galois("e2");
    let recipe = hg.right_quasibasis();
    c.item("e2 recipe u_i = g_i⁻¹ ⊗ g_i verifies", recipe.verify(&hg.ext).is_ok(), format!("{} terms", recipe.len()));
    let solver = hg.ext.right_d2_quasibasis().into_found().unwrap();
    c.item("e2 solver quasibasis verifies", solver.verify(&hg.ext).is_ok(), format!("{} terms", solver.len()));
}

/// A second right quasibasis: the Galois recipe for coacted builtins, the
/// H-separability one otherwise. Returns the left/right pair to build with.
fn second_quasibases(name: &str, ext: &RingExtension) -> (QuasiBasis, QuasiBasis) {
    if name == "e4" {
        let sys = ext.h_separability_system().into_found().unwrap();
        QuasiBasis::from_h_separability(ext, &sys)
    } else {
        let (l, _) = quasibases(ext);
        (l, galois(name).right_quasibasis())
    }
}

fn bialgebroid_suite(c: &mut Criterion) {
    for name in ["e1", "e2", "e4"] {
        let b = built(name);
        let ext = &b.ext;
        let (s, t) = s_and_t(ext);
        c.verification(&format!("{name} S left bialgebroid axioms"), &s.bialgebroid.verify());
        c.verification(&format!("{name} T right bialgebroid axioms"), &t.bialgebroid.verify());
        c.verification(&format!("{name} S ⊗_R S ≅ Hom(A ⊗_B A, A)"), &check_lu_formula_s(&s, ext));
        c.verification(&format!("{name} T ⊗_R T ≅ (A ⊗_B A ⊗_B A)^B"), &check_lu_formula_t(&t, ext));
        let (l1, r1) = quasibases(ext);
        let (l2, r2) = second_quasibases(name, ext);
        let distinct = l1 != l2 || r1 != r2;
        let s2 = build_s(ext, &l2, &r2).unwrap();
        let t2 = build_t(ext, &l2, &r2).unwrap();
        c.item(format!("{name} second quasibasis is distinct"), distinct, format!("{} + {} terms", l2.len(), r2.len()));
        c.item(format!("{name} Δ_S independent of quasibasis"), s2.bialgebroid.coproduct() == s.bialgebroid.coproduct(), "equal matrices");
        c.item(format!("{name} Δ_T independent of quasibasis"), t2.bialgebroid.coproduct() == t.bialgebroid.coproduct(), "equal matrices");
        match name {
            "e2" => {
                c.item("dim R(e2) = 4", ext.centralizer().dim() == 4, ext.centralizer().dim().to_string());
                c.item("dim S(e2) = 8", s.dim() == 8, s.dim().to_string());
                c.item("dim T(e2) = 8", t.dim() == 8, t.dim().to_string());
            }
            "e4" => {
                c.item("dim S(e4) = 16", s.dim() == 16, s.dim().to_string());
                c.item("dim T(e4) = 16", t.dim() == 16, t.dim().to_string());
                let cas = ext.tensor_square().casimir_elements().len();
                c.item("Casimir dim(e4) = 1", cas == 1, format!("computed {cas}; the Casimir elements of M2(Q)/Q span dim_Z R = 4"));
                c.item("Casimir dim(e4) = dim_Z R", cas == ext.centralizer().dim(), cas.to_string());
            }
            _ => {}
        }
    }
}

fn smash_suite(c: &mut Criterion) {
    for name in ["e1", "e2", "e4"] {
        let b = built(name);
        let (s, _) = s_and_t(&b.ext);
        match smash_endomorphism_iso(&s, &b.ext) {
            Ok(r) => c.item(format!("{name} A ⋊ S ≅ End A_B"), r.bijective && r.multiplicative, format!("dim {}", r.smash_dim)),
            Err(e) => c.item(format!("{name} A ⋊ S ≅ End A_B"), false, e.to_string()),
        }
    }
    for name in ["e1", "e2", "e3"] {
        let hg = galois(name);
        let (s, t) = s_and_t(&hg.ext);
        match iso_s_to_smash(&hg, &s) {
            Ok(iso) => {
                c.verification(&format!("{name} Φ: S ≅ R ⋊ H*"), &iso.checks);
                c.verification(&format!("{name} R ⋊ H* bialgebroid"), &iso.smash.verify());
            }
            Err(e) => c.item(format!("{name} Φ: S ≅ R ⋊ H*"), false, e.to_string()),
        }
        match iso_top_to_smash(&hg, &t) {
            Ok(iso) => c.verification(&format!("{name} T^op ≅ R ⋊ H^op"), &iso.checks),
            Err(e) => c.item(format!("{name} T^op ≅ R ⋊ H^op"), false, e.to_string()),
        }
    }
}

fn galois_suite(c: &mut Criterion) {
    for name in ["e1", "e2", "e3"] {
        let b = built(name);
        let ca = b.comodule.unwrap();
        let ext = ca.extension();
        let (beta, _) = ca.galois_maps(&ext);
        let bij = beta.rows() == beta.cols() && beta.rank() == beta.cols();
        c.item(format!("{name} β bijective"), bij, format!("{}×{} of rank {}", beta.rows(), beta.cols(), beta.rank()));
        let hg = HopfGalois::new(ca).unwrap();
        c.verification(&format!("{name} Miyashita-Ulbrich action"), &hg.check_mu_action());
        c.verification(&format!("{name} Yetter-Drinfeld compatibility"), &hg.verify_yd_module());
    }
    let hg = galois("e2");
    let g = Group::symmetric(3);
    let a = hg.algebra();
    let el = |n: &str| a.basis_vector(g.index_of(n).unwrap());
    let h = hg.hopf();
    let unit = h.algebra().unit().iter().position(|x| !x.is_zero()).unwrap();
    let sigma = h.basis_vector(1 - unit);
    let classes: Vector = ["(12)", "(13)", "(23)"].iter().fold(a.zero(), |acc, n| vector::add(&acc, &el(n)));
    c.item("e2 MU (123) ↦ (132)", hg.mu(&el("(123)"), &sigma) == el("(132)"), "nontrivial coset");
    c.item("e2 MU (132) ↦ (123)", hg.mu(&el("(132)"), &sigma) == el("(123)"), "nontrivial coset");
    c.item("e2 MU fixes e", hg.mu(&el("e"), &sigma) == el("e"), "nontrivial coset");
    c.item("e2 MU fixes the transposition class sum", hg.mu(&classes, &sigma) == classes, "nontrivial coset");
    let c2 = HopfAlgebra::group(q(), &Group::cyclic(2));
    let op = c2.opposite().unwrap();
    let d = drinfeld_double(&op).unwrap();
    c.verification("D(H^op) commutation relation, H = Q[C2]", &check_double_relation(&op, &d));
}

fn antipode_suite(c: &mut Criterion) {
    for name in ["e1", "e2", "e3"] {
        let hg = galois(name);
        let (_, t) = s_and_t(&hg.ext);
        match hgalois_top_hopf_algebroid(&hg, &t) {
            Ok(top) => {
                c.verification(&format!("{name} closed form agrees with Lu"), &top.checks);
                c.item(format!("{name} canonical section"), top.pulled_back.section.is_none(), "no designated complement");
                c.verification(&format!("{name} T^op Hopf algebroid axioms 1-3"), &top.pulled_back.verify());
                c.verification(&format!("{name} R ⋊ H^op Hopf algebroid axioms 1-3"), &top.smash.verify());
            }
            Err(e) => c.item(format!("{name} Hopf algebroid on T^op"), false, e.to_string()),
        }
    }
    let m2 = Arc::new(FinDimAlgebra::matrix_algebra(q(), 2));
    let s3 = Arc::new(FinDimAlgebra::group_algebra(q(), &Group::symmetric(3)));
    for (name, alg) in [("M2(Q)", &m2), ("Q[S3]", &s3)] {
        let h = lu_enveloping_hopf_algebroid(alg).unwrap();
        c.item(format!("twist antipode involutive on {name}"), h.is_involutive(), format!("dim {}", h.bialgebroid.dim()));
    }
    let c2 = Arc::new(FinDimAlgebra::group_algebra(q(), &Group::cyclic(2)));
    let t = tensor_hopf_algebroid(&lu_enveloping_hopf_algebroid(&m2).unwrap(), &lu_enveloping_hopf_algebroid(&c2).unwrap()).unwrap();
    c.verification("tensor Hopf algebroid M2(Q) ⊗ Q[C2]", &t.verify());
}

fn coring_report(b: &Built) -> algebroid::coring::correspondence::CorrespondenceReport {
    let (s, t) = s_and_t(&b.ext);
    extension_coring_report(&b.ext, &s, &t, &SweepConfig::default())
}

fn status_of<'a>(r: &'a algebroid::coring::correspondence::CorrespondenceReport, name: &str) -> &'a ImplicationStatus {
    &r.get(name).unwrap_or_else(|| panic!("no implication {name}")).status
}

fn coring_suite(c: &mut Criterion) {
    for name in ["e1", "e2"] {
        let r = coring_report(&built(name));
        c.item(format!("{name} separability element found"), r.separable, "");
        c.item(format!("{name} S-cointegral found"), r.s_coseparable, "");
        for imp in ["separable ⟹ S coseparable", "S coseparable ⟹ separable"] {
            let st = status_of(&r, imp);
            c.item(format!("{name} {imp}"), *st == ImplicationStatus::Verified, format!("{st:?}"));
        }
    }
    let sc = builtins::scenario("e1").unwrap().unwrap();
    let gf2 = Field::prime(2).unwrap();
    let r = coring_report(&sc.build(Some(gf2), None).unwrap());
    let semisimple = HopfAlgebra::group(gf2, &Group::cyclic(2)).integral().semisimple;
    c.item("GF(2) e1 no separability element", !r.separable, "inconsistent system");
    c.item("GF(2) e1 no S-cointegral", !r.s_coseparable, "inconsistent system");
    c.item("GF(2)[C2] not semisimple, three-way agreement", !semisimple && r.separable == r.s_coseparable && r.separable == semisimple, "");

    let b4 = built("e4");
    let r = coring_report(&b4);
    let props = b4.ext.module_properties();
    c.item("e4 double centralizer holds", props.double_centralizer.holds, props.double_centralizer.witness.clone());
    c.item("e4 progenerator and Procesi hold", props.fg_projective_right.holds && props.generator_right.holds && props.procesi.holds, "");
    for imp in ["split ⟹ S cosplit", "S cosplit ⟹ split", "Frobenius ⟹ T Frobenius"] {
        let st = status_of(&r, imp);
        c.item(format!("e4 {imp}"), *st == ImplicationStatus::Verified, format!("{st:?}"));
    }
    let st = status_of(&r, "T Frobenius ⟹ Frobenius");
    c.item("e4 T Frobenius ⟹ Frobenius", matches!(st, ImplicationStatus::Verified | ImplicationStatus::Consistent(true)), format!("{st:?}"));

    let b2 = built("e2");
    let r = coring_report(&b2);
    let st = status_of(&r, "split ⟹ S cosplit");
    c.item("e2 split ⟹ S cosplit", *st == ImplicationStatus::Verified, format!("{st:?}"));
    let st = status_of(&r, "S cosplit ⟹ split");
    c.item("e2 S cosplit ⟹ split not applicable", matches!(st, ImplicationStatus::NotApplicable(_)), format!("{st:?}"));
    let a = b2.ext.algebra();
    let proj = Matrix::from_fn(q(), a.dim(), a.dim(), |i, j| {
        if i == j && b2.ext.base().contains(&a.basis_vector(j)) {
            q().one()
        } else {
            q().zero()
        }
    });
    match b2.ext.frobenius_system(&SweepConfig::default(), &[proj.clone()]).into_found() {
        Some(sys) => c.item("e2 Frobenius system with coset projection E", sys.e_map == proj && sys.verify(a).is_ok(), ""),
        None => c.item("e2 Frobenius system with coset projection E", false, "not found"),
    }
}

fn hsep_suite(c: &mut Criterion) {
    for name in ["e4", "e5"] {
        let b = built(name);
        let ctx = match build_hsep_context(&b.ext) {
            Ok(Some(ctx)) => ctx,
            other => {
                c.item(format!("{name} H-separability system"), false, format!("{:?}", other.err()));
                continue;
            }
        };
        c.item(format!("{name} H-separability system"), true, format!("{} terms", ctx.system.casimir.len()));
        c.verification(&format!("{name} isomorphisms (1)-(5)"), &ctx.checks);
        match double_centralizer_from_balanced(&b.ext) {
            Ok(r) => c.item(
                format!("{name} H-separable and balanced ⟹ double centralizer"),
                r.h_separable && r.balanced && r.double_centralizer,
                r.witness,
            ),
            Err(e) => c.item(format!("{name} lemma instance"), false, e.to_string()),
        }
        if name != "e5" {
            continue;
        }
        let ambient = b.ext.algebra_arc().clone();
        let m = FinDimAlgebra::matrix_algebra(q(), 2);
        let left: Vec<Vector> = (0..4).map(|i| vector::tensor(&m.basis_vector(i), m.unit())).collect();
        let right: Vec<Vector> = (0..4).map(|i| vector::tensor(m.unit(), &m.basis_vector(i))).collect();
        let d = Subalgebra::new(ambient.clone(), left).unwrap();
        let v_expected = Subalgebra::new(ambient, right).unwrap();
        c.item("e5 D = M2 ⊗ 1 is the scenario's intermediate", b.intermediates[0].same_as(&d), "");
        match centralizer_correspondence(&ctx, &d) {
            Ok(r) => {
                c.item("e5 C_A(D) = 1 ⊗ M2", r.v.same_as(&v_expected), format!("dim {}", r.v_dim));
                let back = centralizer_round_trip(&ctx, &r.v).unwrap();
                c.item("e5 double round trip closes", r.closes && back.closes, format!("dim C_A(V) = {}", back.d_dim));
            }
            Err(e) => c.item("e5 centralizer correspondence", false, e.to_string()),
        }
        match galois_correspondence(&ctx, &d) {
            Ok(r) => {
                c.item("e5 dim End_{D-D}(A) = 16", r.h_dim == 16, r.h_dim.to_string());
                c.item("e5 H generated by s(V)t(V)", r.generated, "");
                c.item("e5 A^H = D", r.invariants_equal, format!("dim {}", r.invariants_dim));
                c.verification("e5 H Hopf algebroid over V", &r.hopf);
                c.verification("e5 H ⊆ S bialgebroid morphism", &r.inclusion);
            }
            Err(e) => c.item("e5 Galois correspondence", false, e.to_string()),
        }
    }
}

fn determinism_suite(c: &mut Criterion) {
    let start = Instant::now();
    let first: Vec<String> = builtins::BUILTINS.iter().map(|(name, _)| run(&built(name), false).to_json()).collect();
    let elapsed = start.elapsed();
    c.item("full builtin suite runtime", elapsed < SUITE_LIMIT, format!("{} s", elapsed.as_secs()));
    for ((name, _), a) in builtins::BUILTINS.iter().zip(&first) {
        let b = run(&built(name), false).to_json();
        c.item(format!("{name} report byte-identical"), *a == b, format!("{} bytes", a.len()));
        c.item(format!("{name} report has no failures"), !a.contains("\"status\": \"fail\""), "");
    }
}

#[test]
fn acceptance() {
    let suites: [(&str, fn(&mut Criterion)); 8] = [
        ("D2 quasibases", d2_suite),
        ("bialgebroids S and T", bialgebroid_suite),
        ("smash product isomorphisms", smash_suite),
        ("Hopf-Galois and Miyashita-Ulbrich", galois_suite),
        ("antipodes", antipode_suite),
        ("extension and coring properties", coring_suite),
        ("H-separable extensions", hsep_suite),
        ("determinism and scale", determinism_suite),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, suite)) in suites.iter().enumerate() {
        let mut c = Criterion::default();
        let start = Instant::now();
        suite(&mut c);
        let ok = c.items.iter().filter(|(_, h, _)| *h).count();
        println!(
            "criterion {}: {} {title} ({ok}/{} items, {} ms)",
            i + 1,
            if c.passed() { "PASS" } else { "FAIL" },
            c.items.len(),
            start.elapsed().as_millis()
        );
        for (name, holds, detail) in &c.items {
            if !holds {
                let tag = if KNOWN_FALSE.contains(&name.as_str()) { "known false" } else { "unmet" };
                println!("    {tag}: {name}: {detail}");
            }
        }
        unexpected.extend(c.unexpected().into_iter().map(|u| format!("criterion {}: {u}", i + 1)));
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
