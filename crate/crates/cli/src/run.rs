//! Executes the tasks of a built scenario in pipeline order, sharing the
//! quasibases, `S`, `T`, the Hopf-Galois data and the H-separability context
//! between tasks.

use std::cell::OnceCell;
use std::time::Instant;

use algebroid::algebra::{AlgebraError, Subalgebra};
use algebroid::bialgebroid::{
    build_s, build_t, check_lu_formula_s, check_lu_formula_t, s_action_and_invariants, smash_endomorphism_iso,
    BCentralBialgebroid, EndomorphismBialgebroid,
};
use algebroid::coring::correspondence::extension_coring_report;
use algebroid::extension::{QuasiBasis, SearchOutcome};
use algebroid::hopf::{
    check_double_relation, check_quasitriangular, drinfeld_double, hgalois_top_hopf_algebroid, iso_s_to_smash,
    iso_top_to_smash, HopfError, HopfGalois,
};
use algebroid::hsep::{
    build_hsep_context, centralizer_correspondence, centralizer_round_trip, double_centralizer_from_balanced,
    galois_correspondence, hopf_algebroid_on_s, sugano_characterization, HSepContext, HsepError,
};
use algebroid::linalg::Matrix;
use serde_json::json;

use crate::report::{Report, Status, TaskReport};
use crate::scenario::Built;

/// Why a task could not get the data it needs.
enum Blocked {
    /// A prerequisite legitimately does not exist.
    Missing(Status, String),
    /// Construction failed where theory says it must succeed.
    Broken(String),
}

struct Pipeline<'a> {
    b: &'a Built,
    quasi: OnceCell<(SearchOutcome<QuasiBasis>, SearchOutcome<QuasiBasis>)>,
    s: OnceCell<Result<EndomorphismBialgebroid, String>>,
    t: OnceCell<Result<BCentralBialgebroid, String>>,
    galois: OnceCell<Option<Result<HopfGalois, HopfError>>>,
    hsep: OnceCell<Result<Option<HSepContext>, HsepError>>,
}

impl<'a> Pipeline<'a> {
    fn quasibases(&self) -> &(SearchOutcome<QuasiBasis>, SearchOutcome<QuasiBasis>) {
        self.quasi.get_or_init(|| (self.b.ext.left_d2_quasibasis(), self.b.ext.right_d2_quasibasis()))
    }

    fn found_quasibases(&self) -> Result<(&QuasiBasis, &QuasiBasis), Blocked> {
        match self.quasibases() {
            (SearchOutcome::Found(l), SearchOutcome::Found(r)) => Ok((l, r)),
            (l, r) => {
                let status = if l.label() == "inconclusive" || r.label() == "inconclusive" {
                    Status::Inconclusive
                } else {
                    Status::NotApplicable
                };
                Err(Blocked::Missing(status, format!("not depth two (left {}, right {})", l.label(), r.label())))
            }
        }
    }

    fn s(&self) -> Result<&EndomorphismBialgebroid, Blocked> {
        let (l, r) = self.found_quasibases()?;
        self.s
            .get_or_init(|| build_s(&self.b.ext, l, r).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Blocked::Broken(format!("building S: {e}")))
    }

    fn t(&self) -> Result<&BCentralBialgebroid, Blocked> {
        let (l, r) = self.found_quasibases()?;
        self.t
            .get_or_init(|| build_t(&self.b.ext, l, r).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Blocked::Broken(format!("building T: {e}")))
    }

    fn galois(&self) -> Result<&HopfGalois, Blocked> {
        match self.galois.get_or_init(|| self.b.comodule.clone().map(HopfGalois::new)) {
            None => Err(Blocked::Missing(Status::NotApplicable, "no coaction given".into())),
            Some(Err(HopfError::NotGalois(w))) => Err(Blocked::Missing(Status::NotApplicable, format!("not Hopf-Galois: {w}"))),
            Some(Err(e)) => Err(Blocked::Broken(e.to_string())),
            Some(Ok(hg)) => Ok(hg),
        }
    }

    fn hsep(&self) -> Result<&HSepContext, Blocked> {
        match self.hsep.get_or_init(|| build_hsep_context(&self.b.ext)) {
            Ok(Some(c)) => Ok(c),
            Ok(None) => Err(Blocked::Missing(Status::NoneFound, "no H-separability system".into())),
            Err(e) => Err(Blocked::Broken(e.to_string())),
        }
    }

    fn small(&self, dim: usize) -> bool {
        dim <= self.b.verify_limit
    }
}

fn block(rep: &mut TaskReport, b: Blocked) {
    match b {
        Blocked::Missing(status, why) => {
            rep.status = status;
            rep.summary = why;
        }
        Blocked::Broken(why) => {
            rep.check("construction", false, why.clone());
            rep.status = Status::Fail;
            rep.summary = why;
        }
    }
}

macro_rules! need {
    ($rep:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(b) => {
                block(&mut $rep, b);
                return $rep;
            }
        }
    };
}

fn strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

/// Applies `f` to every item on up to `threads` threads, keeping item order.
fn map_parallel<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(usize, &T) -> R + Sync) -> Vec<R> {
    if threads <= 1 || items.len() <= 1 {
        return items.iter().enumerate().map(|(i, x)| f(i, x)).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                let f = &f;
                scope.spawn(move || part.iter().enumerate().map(|(i, x)| f(c * chunk + i, x)).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn d2(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("d2");
    let ext = &p.b.ext;
    let (l, r) = p.quasibases();
    for (side, q) in [("left", l), ("right", r)] {
        rep.set(side, q.label());
        match q {
            SearchOutcome::Found(q) => {
                rep.set(&format!("{side}_size"), q.len());
                let n = ext.algebra().dim();
                let result = q.verify(ext).map(|()| format!("{} basis pairs", n * n)).map_err(|(i, j)| format!("basis pair ({i}, {j})"));
                rep.checks.push(algebroid::verify::Finding {
                    name: format!("{side} quasibasis identity"),
                    holds: result.is_ok(),
                    witness: result.unwrap_or_else(|w| w),
                });
            }
            SearchOutcome::NoneExists => rep.status = Status::NoneFound,
            SearchOutcome::Inconclusive if rep.status == Status::Pass => rep.status = Status::Inconclusive,
            SearchOutcome::Inconclusive => {}
        }
    }
    if let Ok(hg) = p.galois() {
        let q = hg.right_quasibasis();
        let res = q.verify(&hg.ext);
        rep.check("right quasibasis u_i = g_i⁻¹ ⊗ g_i", res.is_ok(), match res {
            Ok(()) => format!("{} terms", q.len()),
            Err((i, j)) => format!("basis pair ({i}, {j})"),
        });
    }
    if rep.status != Status::Pass {
        rep.summary = format!("left {}, right {}", l.label(), r.label());
    }
    rep
}

fn bialgebroids(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("bialgebroids");
    let ext = &p.b.ext;
    let s = need!(rep, p.s());
    let t = need!(rep, p.t());
    rep.set("dim_a", ext.algebra().dim());
    rep.set("dim_b", ext.base().dim());
    rep.set("dim_r", ext.centralizer().dim());
    rep.set("dim_s", s.dim());
    rep.set("dim_t", t.dim());
    rep.set("casimir_dim", ext.tensor_square().casimir_elements().len());
    rep.check("S: Δ independent of the quasibasis", s.alt_coproduct == *s.bialgebroid.coproduct(), "left and right quasibasis formulas");
    rep.check("T: Δ independent of the quasibasis", t.alt_coproduct == *t.bialgebroid.coproduct(), "left and right quasibasis formulas");
    if p.small(s.dim().max(t.dim())) {
        rep.add("S: ", s.bialgebroid.verify());
        rep.add("T: ", t.bialgebroid.verify());
        rep.add("S: ", check_lu_formula_s(s, ext));
        rep.add("T: ", check_lu_formula_t(t, ext));
        rep.set("axioms", "verified");
    } else {
        rep.set("axioms", format!("skipped: dimension exceeds verify_limit {}", p.b.verify_limit));
    }
    match smash_endomorphism_iso(s, ext) {
        Ok(iso) => {
            rep.check("A ⋊ S → End(A_B) bijective", iso.bijective, format!("dim {}", iso.smash_dim));
            rep.check("A ⋊ S → End(A_B) multiplicative", iso.multiplicative, "all basis products");
            rep.set("smash", iso);
        }
        Err(e) => rep.check("A ⋊ S → End(A_B)", false, e.to_string()),
    }
    let action = s_action_and_invariants(s, ext);
    rep.check("S measures A", action.measuring, action.measuring_witness.clone());
    rep.set("action", action);
    rep.settle();
    rep
}

fn hopf_galois(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("hopf-galois");
    let hg = need!(rep, p.galois());
    let h = hg.hopf();
    rep.check("β bijective", true, format!("dim A ⊗ H = {}", hg.beta.rows()));
    rep.set("dim_h", h.dim());
    rep.set("dim_r", hg.centralizer().dim());
    rep.add("H: ", h.verify());
    rep.add("", hg.galois_checks());
    rep.add("Miyashita-Ulbrich: ", hg.check_mu_action());
    rep.add("Yetter-Drinfeld: ", hg.verify_yd_module());
    if hg.centralizer().dim() * h.dim() <= 64 {
        rep.set("mu", hg.mu_matrices().iter().map(strings).collect::<Vec<_>>());
    }
    let s = need!(rep, p.s());
    match iso_s_to_smash(hg, s) {
        Ok(iso) => {
            rep.add("S ≅ R ⋊ H*: ", iso.checks);
            if p.small(iso.smash.dim()) {
                rep.add("R ⋊ H*: ", iso.smash.verify());
            }
        }
        Err(e) => rep.check("S ≅ R ⋊ H*", false, e.to_string()),
    }
    let t = need!(rep, p.t());
    match iso_top_to_smash(hg, t) {
        Ok(iso) => rep.add("T^op ≅ R ⋊ H^op: ", iso.checks),
        Err(e) => rep.check("T^op ≅ R ⋊ H^op", false, e.to_string()),
    }
    match drinfeld_double(&hg.hopf_op) {
        Ok(d) => {
            rep.set("dim_double", d.dim());
            rep.add("D(H^op): ", check_double_relation(&hg.hopf_op, &d));
            rep.add("D(H^op): ", check_quasitriangular(&hg.hopf_op, &d));
        }
        Err(e) => rep.check("D(H^op)", false, e.to_string()),
    }
    rep.settle();
    rep
}

fn lu_antipode(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("lu-antipode");
    let hg = need!(rep, p.galois());
    let t = need!(rep, p.t());
    match hgalois_top_hopf_algebroid(hg, t) {
        Ok(top) => {
            rep.set("dim", top.smash.bialgebroid.dim());
            rep.set("involutive", top.smash.is_involutive());
            rep.add("closed form: ", top.checks);
            rep.add("R ⋊ H^op: ", top.smash.verify());
            rep.add("T^op: ", top.pulled_back.verify());
            rep.set("antipode", strings(&top.closed_form));
        }
        Err(e) => rep.check("Hopf algebroid on T^op", false, e.to_string()),
    }
    rep.settle();
    rep
}

fn coring_correspondence(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("coring-correspondence");
    let s = need!(rep, p.s());
    let t = need!(rep, p.t());
    let c = extension_coring_report(&p.b.ext, s, t, &p.b.sweep);
    let found = |b: bool| if b { "found" } else { "none-found" };
    rep.set("separable", found(c.separable));
    rep.set("split", found(c.split));
    rep.set("frobenius", c.frobenius);
    rep.set("cointegral", found(c.s_coseparable));
    rep.set("s_cosplit", found(c.s_cosplit));
    rep.set("t_cointegral", found(c.t_coseparable));
    rep.set("t_cosplit", found(c.t_cosplit));
    rep.set("t_frobenius", c.t_frobenius);
    for imp in &c.implications {
        rep.check(&imp.name, imp.holds(), serde_json::to_value(&imp.status).map(|v| v.to_string()).unwrap_or_default());
    }
    rep.set("implications", &c.implications);
    rep.settle();
    rep
}

fn hsep(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("hsep");
    let ext = &p.b.ext;
    match double_centralizer_from_balanced(ext) {
        Ok(r) => {
            rep.check("H-separable and balanced ⟹ C_A(C_A(B)) = B", true, r.witness.clone());
            rep.set("lemma", r);
        }
        Err(e) => rep.check("H-separable and balanced ⟹ C_A(C_A(B)) = B", false, e.to_string()),
    }
    let ctx = match p.hsep() {
        Ok(c) => c,
        Err(b) => {
            block(&mut rep, b);
            return rep;
        }
    };
    rep.set("casimir_terms", ctx.system.casimir.len());
    rep.set("dim_center", ctx.center.dim());
    rep.set("dim_s", ctx.s.dim());
    rep.set("dim_t", ctx.t.dim());
    rep.add("", ctx.checks.clone());
    if !p.small(ctx.s.dim()) {
        rep.set("hopf_on_s", format!("skipped: dimension exceeds verify_limit {}", p.b.verify_limit));
    } else {
        match hopf_algebroid_on_s(ctx) {
            Ok(h) => {
                rep.add("Hopf algebroid on S: ", h.verify());
                rep.set("s_involutive", h.is_involutive());
            }
            Err(HsepError::NonCentral(z)) => rep.set("hopf_on_s", format!("not applicable: centre of dimension {z}")),
            Err(e) => rep.check("Hopf algebroid on S", false, e.to_string()),
        }
    }
    let results = map_parallel(&p.b.intermediates, p.b.parallelism, |_, d: &Subalgebra| galois_correspondence(ctx, d));
    let mut details = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        let pre = format!("D{i}: ");
        match r {
            Ok(r) => {
                rep.add(&format!("{pre}H: "), r.hopf.clone());
                rep.add(&pre, r.inclusion.clone());
                rep.check(&format!("{pre}H generated by s(V)t(V)"), r.generated, format!("dim H = {}", r.h_dim));
                rep.check(&format!("{pre}A^H = D"), r.invariants_equal, format!("dim A^H = {}", r.invariants_dim));
                details.push(json!({"h_dim": r.h_dim, "v_dim": r.v_dim, "invariants_dim": r.invariants_dim}));
            }
            Err(e) => {
                rep.check(&format!("{pre}Galois correspondence"), false, e.to_string());
                details.push(json!({"error": e.to_string()}));
            }
        }
    }
    if !details.is_empty() {
        rep.set("intermediates", details);
    }
    rep.settle();
    rep
}

fn sugano(p: &Pipeline) -> TaskReport {
    let mut rep = TaskReport::new("sugano");
    match sugano_characterization(&p.b.ext) {
        Ok(r) => {
            rep.check("simple conditions ⟺ H-separable and f.g. projective", r.consistent, format!("{} ⟺ {}", r.conditions_side, r.separability_side));
            rep.set("characterization", r);
        }
        Err(e @ HsepError::Algebra(AlgebraError::UnsupportedCharacteristic { .. })) => {
            rep.status = Status::NotApplicable;
            rep.summary = e.to_string();
            return rep;
        }
        Err(e) => rep.check("characterization", false, e.to_string()),
    }
    if !p.b.intermediates.is_empty() {
        match p.hsep() {
            Ok(ctx) => {
                let results = map_parallel(&p.b.intermediates, p.b.parallelism, |_, d: &Subalgebra| {
                    centralizer_correspondence(ctx, d).and_then(|r| centralizer_round_trip(ctx, &r.v).map(|back| (r, back)))
                });
                let mut details = Vec::new();
                for (i, r) in results.into_iter().enumerate() {
                    let pre = format!("D{i}: ");
                    match r {
                        Ok((r, back)) => {
                            rep.check(&format!("{pre}C_A(D) simple"), r.v_simple, format!("dim V = {}", r.v_dim));
                            rep.check(&format!("{pre}C_A(C_A(D)) = D"), r.closes, format!("dim D = {}", r.d_dim));
                            rep.check(&format!("{pre}A/D H-separable"), r.h_separable, "system search");
                            rep.check(&format!("{pre}A_D f.g. projective"), r.fg_projective, "dual basis search");
                            rep.check(&format!("{pre}C_A(C_A(V)) = V"), back.closes, format!("dim C_A(V) = {}", back.d_dim));
                            details.push(json!({"centralizer": r, "round_trip": back}));
                        }
                        Err(e) => {
                            rep.check(&format!("{pre}correspondence"), false, e.to_string());
                            details.push(json!({"error": e.to_string()}));
                        }
                    }
                }
                rep.set("intermediates", details);
            }
            Err(Blocked::Missing(_, why)) => rep.set("intermediates", format!("not applicable: {why}")),
            Err(Blocked::Broken(why)) => rep.check("H-separability context", false, why),
        }
    }
    rep.settle();
    rep
}

/// Runs the scenario's tasks in pipeline order.
pub fn run(b: &Built, timing: bool) -> Report {
    let p = Pipeline {
        b,
        quasi: OnceCell::new(),
        s: OnceCell::new(),
        t: OnceCell::new(),
        galois: OnceCell::new(),
        hsep: OnceCell::new(),
    };
    let tasks = b
        .tasks
        .iter()
        .map(|&name| {
            let start = Instant::now();
            let mut rep = match name {
                "d2" => d2(&p),
                "bialgebroids" => bialgebroids(&p),
                "hopf-galois" => hopf_galois(&p),
                "lu-antipode" => lu_antipode(&p),
                "coring-correspondence" => coring_correspondence(&p),
                "hsep" => hsep(&p),
                "sugano" => sugano(&p),
                other => unreachable!("unvalidated task {other}"),
            };
            rep.settle();
            if timing {
                rep.timing_ms = Some(start.elapsed().as_millis());
            }
            rep
        })
        .collect();
    Report { scenario: b.name.clone(), field: b.field.to_string(), tasks }
}
