//! Theorem-level verifiers: semidualizing modules, the retract properties,
//! Foxby classes, total reflexivity, G_C-dimension, and the dimension
//! transfer and Ext transfer harnesses.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::construction::{construction_iso_map, kernel_of_g, RetractTriple};
use crate::error::AlgError;
use crate::maps;
use crate::module::{
    annihilator, hom_module, tensor_module, verify_map_iso, PresentedModule, Restriction,
};
use crate::poly::Polynomial;
use crate::report::{CheckReport, Verdict, Witness};
use crate::resolution::{ext_is_zero, ext_module, tor_is_zero, FreeResolution};
use crate::ring::{verify_retract, Dim, PresentedRing};

/// Bounds used by the checkers; every "for all i >= 1" statement is
/// confirmed for `1 <= i <= bound` and reported as such.
#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub bound: u32,
    pub maxn: u32,
    pub hilbert_bound: i64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            bound: 4,
            maxn: 4,
            hilbert_bound: 12,
        }
    }
}

fn render_ideal(ring: &Arc<PresentedRing>, gens: &[Polynomial]) -> String {
    if gens.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = gens.iter().map(|g| ring.render(g)).collect();
    parts.join(",")
}

/// `C` is semidualizing: the homothety `R -> Hom(C, C)` is an isomorphism
/// and `Ext^i(C, C) = 0` for `1 <= i <= bound`.
pub fn check_semidualizing(
    r: &Arc<PresentedRing>,
    c: &PresentedModule,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    if c.ring().as_ref() != r.as_ref() {
        return Err(AlgError::MixedAmbients("C must live over R".to_string()));
    }
    let mut report = CheckReport::new("semidualizing", Verdict::Pass).with_bound(bound);

    let chi = maps::homothety(c)?;
    let iso = verify_map_iso(&chi);
    if iso.verdict != Verdict::Pass {
        let ann = annihilator(c);
        let witness = Witness::Element {
            label: "homothety_kernel".to_string(),
            value: render_ideal(r, &ann),
        };
        report.push_sub("homothety", Verdict::Fail, Some(witness.clone()));
        report.verdict = Verdict::Fail;
        report.witness = Some(witness);
        return Ok(report);
    }
    report.push_sub("homothety", Verdict::Pass, None);

    let mut res = FreeResolution::new(c);
    for i in 1..=bound {
        if !ext_is_zero(&mut res, c, i as usize)? {
            let witness = Witness::Index {
                label: "first_nonvanishing_ext".to_string(),
                value: i,
            };
            report.push_sub("ext_vanishing", Verdict::Fail, Some(witness.clone()));
            report.verdict = Verdict::Fail;
            report.witness = Some(witness);
            return Ok(report);
        }
    }
    let exact = res
        .terminated_at()
        .map(|t| t <= bound as usize + 1)
        .unwrap_or(false);
    let family = if exact {
        Verdict::Pass
    } else {
        Verdict::VerifiedToBound(bound)
    };
    report.push_sub("ext_vanishing", family.clone(), None);
    report.verdict = family;
    Ok(report)
}

/// The retract property of a triple: `g . f = id`, the explicit map
/// `S -> Hom_R(S, C)` is an `S`-module isomorphism, and
/// `Ext^i_R(S, C) = 0` for `1 <= i <= bound` (with `S` restricted to `R`).
pub fn check_retract_property(
    triple: &RetractTriple,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    let mut report = CheckReport::new("retract.property", Verdict::Pass).with_bound(bound);
    let mut parts = Vec::new();

    let sub1 = verify_retract(&triple.pair);
    report.push_sub("retract_identity", sub1.verdict.clone(), sub1.witness.clone());
    parts.push(sub1.verdict);

    match triple.kind {
        Some(kind) => {
            let iso_map = construction_iso_map(triple, kind)?;
            let sub2 = verify_map_iso(&iso_map);
            report.push_sub("hom_iso", sub2.verdict.clone(), sub2.witness.clone());
            parts.push(sub2.verdict);
        }
        None => {
            report.push_sub(
                "hom_iso",
                Verdict::Vacuous,
                Some(Witness::Note(
                    "no explicit Hom map for a stacked triple".to_string(),
                )),
            );
            parts.push(Verdict::Vacuous);
        }
    }

    let s_r = triple.s_over_r()?;
    let mut res = FreeResolution::new(&s_r);
    let mut ext_verdict = None;
    for i in 1..=bound {
        if !ext_is_zero(&mut res, &triple.c, i as usize)? {
            ext_verdict = Some((
                Verdict::Fail,
                Some(Witness::Index {
                    label: "first_nonvanishing_ext".to_string(),
                    value: i,
                }),
            ));
            break;
        }
    }
    let (ext_verdict, ext_witness) = ext_verdict.unwrap_or_else(|| {
        let exact = res
            .terminated_at()
            .map(|t| t <= bound as usize + 1)
            .unwrap_or(false);
        (
            if exact {
                Verdict::Pass
            } else {
                Verdict::VerifiedToBound(bound)
            },
            None,
        )
    });
    report.push_sub("ext_vanishing", ext_verdict.clone(), ext_witness.clone());
    parts.push(ext_verdict);

    report.verdict = Verdict::combine(&parts);
    if report.verdict == Verdict::Fail {
        report.witness = report
            .subs
            .iter()
            .find(|s| s.verdict == Verdict::Fail)
            .and_then(|s| s.witness.clone());
    }
    Ok(report)
}

/// `C ~ ker g` via the stored witness.
pub fn check_kernel_property(triple: &RetractTriple) -> Result<CheckReport, AlgError> {
    let (_, mut report) = kernel_of_g(triple)?;
    report.name = "kernel.property".to_string();
    Ok(report)
}

/// Total `C`-reflexivity of `M` at a bound, evaluated as level `n` of a
/// master resolution (level 0 is `M` itself). Sub-checks short-circuit at
/// the first failure.
fn reflexive_level(
    master: &mut FreeResolution,
    level: usize,
    c: &PresentedModule,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    let mut report = CheckReport::new("totally_reflexive", Verdict::Pass).with_bound(bound);
    let module = master.syzygy_module(level);
    let dual = hom_module(&module, c)?;
    let mut dual_res = FreeResolution::new(&dual.module);

    let fail = |report: &mut CheckReport, label: &str, witness: Option<Witness>| {
        report.push_sub(label, Verdict::Fail, witness.clone());
        report.verdict = Verdict::Fail;
        report.witness = witness;
    };

    // interleave the two Ext families, cheapest degrees first, with the
    // biduality check after degree one
    for i in 1..=bound as usize {
        if !ext_is_zero_at_level(master, level, c, i)? {
            fail(
                &mut report,
                "ext_module",
                Some(Witness::Index {
                    label: "first_nonvanishing_ext".to_string(),
                    value: i as u32,
                }),
            );
            return Ok(report);
            }
        report.push_sub(&alloc::format!("ext_module.{i}"), Verdict::Pass, None);
        if !ext_is_zero(&mut dual_res, c, i)? {
            fail(
                &mut report,
                "ext_dual",
                Some(Witness::Index {
                    label: "first_nonvanishing_dual_ext".to_string(),
                    value: i as u32,
                }),
            );
            return Ok(report);
        }
        report.push_sub(&alloc::format!("ext_dual.{i}"), Verdict::Pass, None);
        if i == 1 {
            let delta = maps::biduality(&module, c)?;
            let iso = verify_map_iso(&delta);
            if iso.verdict != Verdict::Pass {
                fail(&mut report, "biduality", iso.witness.clone());
                return Ok(report);
            }
            report.push_sub("biduality", Verdict::Pass, None);
        }
    }

    let module_exact = master
        .terminated_at()
        .map(|t| t <= level + bound as usize + 1)
        .unwrap_or(false);
    let dual_exact = dual_res
        .terminated_at()
        .map(|t| t <= bound as usize + 1)
        .unwrap_or(false);
    report.verdict = if module_exact && dual_exact {
        Verdict::Pass
    } else {
        Verdict::VerifiedToBound(bound)
    };
    Ok(report)
}

fn ext_is_zero_at_level(
    master: &mut FreeResolution,
    level: usize,
    c: &PresentedModule,
    i: usize,
) -> Result<bool, AlgError> {
    // Ext^i of the level-th syzygy is the (level + i)-th cohomology of
    // Hom of the master resolution, for i >= 1.
    ext_is_zero(master, c, level + i)
}

/// Total `C`-reflexivity of a module (biduality isomorphism plus the two
/// Ext-vanishing families).
pub fn check_totally_reflexive(
    m: &PresentedModule,
    c: &PresentedModule,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    m.same_ring(c)?;
    let mut master = FreeResolution::new(m);
    reflexive_level(&mut master, 0, c, bound)
}

/// The value of a G_C-dimension probe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GcValue {
    Exact(u32),
    /// No syzygy up to `maxn` passed the reflexivity test.
    AtLeast(u32),
}

impl core::fmt::Display for GcValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GcValue::Exact(n) => write!(f, "{n}"),
            GcValue::AtLeast(n) => write!(f, "at_least({n})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GcLevel {
    pub level: u32,
    pub passed: bool,
    /// Label of the first failing sub-check, when the level failed.
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct GcVerdict {
    pub value: GcValue,
    pub bound: u32,
    pub levels: Vec<GcLevel>,
}

impl GcVerdict {
    pub fn agrees_with(&self, other: &GcVerdict) -> bool {
        self.value == other.value
    }
}

/// Smallest `n <= maxn` whose `n`-th syzygy is totally `C`-reflexive at
/// the bound; syzygies come from one shared resolution of `M`.
pub fn gc_dimension(
    m: &PresentedModule,
    c: &PresentedModule,
    maxn: u32,
    bound: u32,
) -> Result<GcVerdict, AlgError> {
    m.same_ring(c)?;
    let mut master = FreeResolution::new(m);
    let mut levels = Vec::new();
    for n in 0..=maxn {
        let report = reflexive_level(&mut master, n as usize, c, bound)?;
        let passed = report.verdict.is_ok();
        levels.push(GcLevel {
            level: n,
            passed,
            detail: report
                .subs
                .iter()
                .find(|s| s.verdict == Verdict::Fail)
                .map(|s| s.label.clone()),
        });
        if passed {
            return Ok(GcVerdict {
                value: GcValue::Exact(n),
                bound,
                levels,
            });
        }
    }
    Ok(GcVerdict {
        value: GcValue::AtLeast(maxn),
        bound,
        levels,
    })
}

/// Membership in the Auslander or Bass class of `C` at a bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FoxbyKind {
    Auslander,
    Bass,
}

pub fn check_foxby_class(
    kind: FoxbyKind,
    m: &PresentedModule,
    c: &PresentedModule,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    m.same_ring(c)?;
    let name = match kind {
        FoxbyKind::Auslander => "foxby.auslander",
        FoxbyKind::Bass => "foxby.bass",
    };
    let mut report = CheckReport::new(name, Verdict::Pass).with_bound(bound);
    let mut c_res = FreeResolution::new(c);

    let fail = |report: &mut CheckReport, label: &str, witness: Option<Witness>| {
        report.push_sub(label, Verdict::Fail, witness.clone());
        report.verdict = Verdict::Fail;
        report.witness = witness;
    };

    match kind {
        FoxbyKind::Auslander => {
            let gamma = maps::gamma(m, c)?;
            let iso = verify_map_iso(&gamma);
            if iso.verdict != Verdict::Pass {
                fail(&mut report, "gamma_iso", iso.witness.clone());
                return Ok(report);
            }
            report.push_sub("gamma_iso", Verdict::Pass, None);
            let cm = tensor_module(c, m)?;
            for i in 1..=bound as usize {
                if !tor_is_zero(&mut c_res, m, i)? {
                    fail(
                        &mut report,
                        "tor_vanishing",
                        Some(Witness::Index {
                            label: "first_nonvanishing_tor".to_string(),
                            value: i as u32,
                        }),
                    );
                    return Ok(report);
                }
                if !ext_is_zero(&mut c_res, &cm.module, i)? {
                    fail(
                        &mut report,
                        "ext_vanishing",
                        Some(Witness::Index {
                            label: "first_nonvanishing_ext".to_string(),
                            value: i as u32,
                        }),
                    );
                    return Ok(report);
                }
            }
            report.push_sub("tor_vanishing", Verdict::VerifiedToBound(bound), None);
            report.push_sub("ext_vanishing", Verdict::VerifiedToBound(bound), None);
        }
        FoxbyKind::Bass => {
            let xi = maps::xi(m, c)?;
            let iso = verify_map_iso(&xi);
            if iso.verdict != Verdict::Pass {
                fail(&mut report, "xi_iso", iso.witness.clone());
                return Ok(report);
            }
            report.push_sub("xi_iso", Verdict::Pass, None);
            let hm = hom_module(c, m)?;
            for i in 1..=bound as usize {
                if !ext_is_zero(&mut c_res, m, i)? {
                    fail(
                        &mut report,
                        "ext_vanishing",
                        Some(Witness::Index {
                            label: "first_nonvanishing_ext".to_string(),
                            value: i as u32,
                        }),
                    );
                    return Ok(report);
                }
                if !tor_is_zero(&mut c_res, &hm.module, i)? {
                    fail(
                        &mut report,
                        "tor_vanishing",
                        Some(Witness::Index {
                            label: "first_nonvanishing_tor".to_string(),
                            value: i as u32,
                        }),
                    );
                    return Ok(report);
                }
            }
            report.push_sub("ext_vanishing", Verdict::VerifiedToBound(bound), None);
            report.push_sub("tor_vanishing", Verdict::VerifiedToBound(bound), None);
        }
    }
    let exact = c_res
        .terminated_at()
        .map(|t| t <= bound as usize + 1)
        .unwrap_or(false);
    report.verdict = if exact {
        Verdict::Pass
    } else {
        Verdict::VerifiedToBound(bound)
    };
    Ok(report)
}

/// The three-way equivalence: (a) `C` semidualizing over `R`; (b) `R`
/// totally reflexive over `S` with `Ann_R(C) = 0`; (c) the same for `C`.
/// The report's verdict states whether the three verdicts agree.
pub fn verify_equivalence(triple: &RetractTriple, bound: u32) -> Result<CheckReport, AlgError> {
    let r = triple.base();
    let s = triple.extension();
    let mut report = CheckReport::new("equivalence", Verdict::Pass).with_bound(bound);

    let a = check_semidualizing(r, &triple.c, bound)?;
    let a_ok = a.verdict.is_ok();
    report.push_sub("semidualizing", a.verdict.clone(), a.witness.clone());

    let ann = annihilator(&triple.c);
    let ann_zero = ann.is_empty();
    let ann_witness = if ann_zero {
        None
    } else {
        Some(Witness::Element {
            label: "Ann".to_string(),
            value: render_ideal(r, &ann),
        })
    };

    let restriction = Restriction::new(&triple.pair.g)?;
    let free_s = PresentedModule::free(s.clone(), 1);

    let side = |m_over_r: &PresentedModule,
                    label: &str,
                    report: &mut CheckReport|
     -> Result<bool, AlgError> {
        if !ann_zero {
            report.push_sub(label, Verdict::Fail, ann_witness.clone());
            return Ok(false);
        }
        let m_s = restriction.restrict(m_over_r)?;
        let sub = check_totally_reflexive(&m_s, &free_s, bound)?;
        let ok = sub.verdict.is_ok();
        report.push_sub(label, sub.verdict.clone(), sub.witness.clone());
        Ok(ok)
    };

    let free_r = PresentedModule::free(r.clone(), 1);
    let b_ok = side(&free_r, "base_reflexive_over_extension", &mut report)?;
    let c_ok = side(&triple.c.clone(), "c_reflexive_over_extension", &mut report)?;

    let agreement = a_ok == b_ok && b_ok == c_ok;
    report.push_sub(
        "agreement",
        if agreement { Verdict::Pass } else { Verdict::Fail },
        None,
    );
    report.verdict = if agreement {
        Verdict::VerifiedToBound(bound)
    } else {
        Verdict::Fail
    };
    if !agreement {
        report.witness = Some(Witness::Note(alloc::format!(
            "verdicts disagree: a={a_ok} b={b_ok} c={c_ok}"
        )));
    }
    Ok(report)
}

/// The finitely generated, projective-side dimension equality:
/// `GC-dim_R(M)` (with respect to `C`) equals `G-dim_S(M)` (with respect
/// to `S`), both probed to `maxn` at the bound. Vacuous when `C` is not
/// semidualizing.
pub fn verify_gcdim_equality(
    triple: &RetractTriple,
    m: &PresentedModule,
    maxn: u32,
    bound: u32,
) -> Result<CheckReport, AlgError> {
    let r = triple.base();
    let s = triple.extension();
    let mut report = CheckReport::new("gcdim.equality", Verdict::Pass).with_bound(bound);

    let pre = check_semidualizing(r, &triple.c, bound)?;
    if !pre.verdict.is_ok() {
        report.push_sub("semidualizing", pre.verdict, pre.witness);
        report.verdict = Verdict::Vacuous;
        report.witness = Some(Witness::Note(
            "C is not semidualizing; equality not asserted".to_string(),
        ));
        return Ok(report);
    }
    report.push_sub("semidualizing", pre.verdict, None);

    let base_side = gc_dimension(m, &triple.c, maxn, bound)?;
    let restriction = Restriction::new(&triple.pair.g)?;
    let m_s = restriction.restrict(m)?;
    let free_s = PresentedModule::free(s.clone(), 1);
    let ext_side = gc_dimension(&m_s, &free_s, maxn, bound)?;

    let agree = base_side.agrees_with(&ext_side);
    let witness = Witness::DimPair {
        left_label: "gcdim_over_base".to_string(),
        left: alloc::format!("{}", base_side.value),
        right_label: "gdim_over_extension".to_string(),
        right: alloc::format!("{}", ext_side.value),
    };
    report.push_sub(
        "values",
        if agree { Verdict::Pass } else { Verdict::Fail },
        Some(witness.clone()),
    );
    report.verdict = if agree {
        Verdict::VerifiedToBound(bound)
    } else {
        Verdict::Fail
    };
    report.witness = Some(witness);
    Ok(report)
}

/// Compares the sizes of two modules: k-dimensions when finite, graded
/// Hilbert values up to the bound otherwise.
fn sizes_match(
    a: &PresentedModule,
    b: &PresentedModule,
    hilbert_bound: i64,
) -> Result<(bool, String), AlgError> {
    match (a.k_dim(), b.k_dim()) {
        (Dim::Finite(x), Dim::Finite(y)) => {
            Ok((x == y, alloc::format!("{x} vs {y}")))
        }
        _ => {
            let lo = [a.gen_degrees(), b.gen_degrees()]
                .iter()
                .flatten()
                .flat_map(|d| d.iter().copied())
                .min()
                .unwrap_or(0)
                .min(0);
            for d in lo..=hilbert_bound {
                let x = a.hilbert_value(d)?;
                let y = b.hilbert_value(d)?;
                if x != y {
                    return Ok((false, alloc::format!("degree {d}: {x} vs {y}")));
                }
            }
            Ok((true, alloc::format!("hilbert values agree to {hilbert_bound}")))
        }
    }
}

/// `Ext^i_S(M, S) ~ Ext^i_R(M, C)` as size comparisons for `0 <= i <= i_max`.
pub fn verify_ext_transfer(
    triple: &RetractTriple,
    m: &PresentedModule,
    i_max: u32,
    hilbert_bound: i64,
) -> Result<CheckReport, AlgError> {
    let s = triple.extension();
    let mut report = CheckReport::new("ext.transfer", Verdict::Pass);

    let restriction = Restriction::new(&triple.pair.g)?;
    let m_s = restriction.restrict(m)?;
    let free_s = PresentedModule::free(s.clone(), 1);
    let mut res_s = FreeResolution::new(&m_s);
    let mut res_r = FreeResolution::new(m);

    let mut all_ok = true;
    for i in 0..=i_max as usize {
        let ext_s = ext_module(&mut res_s, &free_s, i)?;
        let ext_r = ext_module(&mut res_r, &triple.c, i)?;
        let (ok, detail) = sizes_match(&ext_s, &ext_r, hilbert_bound)?;
        report.push_sub(
            &alloc::format!("ext.{i}"),
            if ok { Verdict::Pass } else { Verdict::Fail },
            Some(Witness::Note(detail)),
        );
        if !ok {
            all_ok = false;
            report.witness = Some(Witness::Index {
                label: "first_mismatch".to_string(),
                value: i as u32,
            });
            break;
        }
    }
    report.verdict = if all_ok { Verdict::Pass } else { Verdict::Fail };
    Ok(report)
}
