//! Search for maximal (½,t)-pairs arising from the tetravalent amalgams:
//! pairs `M < H` of permutation groups where `H` is primitive with a point
//! stabilizer `M`, `H` contains the amalgam's vertex stabilizer, and `M`
//! acts half-arc-transitively on the associated coset graph.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{FpError, GraphError};
use crate::fpgroup::{faithful_representation, AmalgamSpec, DEFAULT_COSET_LIMIT};
use crate::graphcore::coset_graph_of_element;
use crate::perm::Permutation;
use crate::permgroup::cosets::core_by_intersection;
use crate::permgroup::group::factorial;
use crate::permgroup::{
    class_representatives, conjugate_closure, core, coset_action, is_primitive, normalizer_in_sym,
    small_subgroups, sylow_subgroup,
    PermutationGroup, SubgroupHandle,
};
use crate::symmetry::{describe_group, transitivity_report, SDegree};

/// The amalgam realized as permutation groups.
#[derive(Clone, Debug)]
pub struct RealizedAmalgam {
    pub name: String,
    pub hu: PermutationGroup,
    pub huv: PermutationGroup,
    /// Action of `hu` on the four cosets of `huv`.
    pub local: PermutationGroup,
    local_map: crate::permgroup::CosetAction,
}

impl RealizedAmalgam {
    pub fn new(spec: &AmalgamSpec) -> Result<Self, FpError> {
        let image = faithful_representation(&spec.presentation, std::slice::from_ref(&spec.b_generators), DEFAULT_COSET_LIMIT)?;
        let hu = image.group;
        let huv_gens: Vec<Permutation> = spec.b_generators.iter().map(|w| image.table.word_permutation(w)).collect();
        let huv = PermutationGroup::new(hu.degree(), huv_gens)?;
        let local_map = coset_action(&hu, &huv)?;
        Ok(RealizedAmalgam {
            name: spec.name.to_string(),
            local: local_map.image.clone(),
            hu,
            huv,
            local_map,
        })
    }

    fn local_image(&self, x: &PermutationGroup) -> PermutationGroup {
        let gens = x
            .generators()
            .iter()
            .map(|g| self.local_map.map(g).expect("element of Hu"))
            .collect();
        PermutationGroup::new(self.local.degree(), gens).expect("degrees agree")
    }
}

fn two_part(n: &BigUint) -> u64 {
    1u64 << n.trailing_zeros().unwrap_or(0)
}

/// Subgroups `X` of `Hu` whose order divides `|Hu|_2 / 2`, which have exactly
/// two orbits of size 2 on the four cosets of `Huv`, and which are core-free
/// in `Hu`.
pub fn candidate_stabilizers(amalgam: &RealizedAmalgam) -> Result<Vec<SubgroupHandle>, GraphError> {
    let within = candidates_in_sylow(amalgam)?;
    Ok(conjugate_closure(&amalgam.hu, &within)?)
}

/// The candidates contained in one Sylow 2-subgroup. Every 2-subgroup is
/// conjugate into it and both conditions are invariant under conjugation,
/// so these meet every conjugacy class of candidates.
fn candidates_in_sylow(amalgam: &RealizedAmalgam) -> Result<Vec<PermutationGroup>, GraphError> {
    let bound = two_part(&amalgam.hu.order()) / 2;
    if bound == 0 {
        return Ok(Vec::new());
    }
    let sylow = sylow_subgroup(&amalgam.hu, 2)?;
    let subs = small_subgroups(&sylow, bound)?;
    let mut out = Vec::new();
    for s in subs {
        let local = amalgam.local_image(s.group());
        let orbits = local.orbits();
        if orbits.len() != 2 || orbits.iter().any(|o| o.len() != 2) {
            continue;
        }
        if !core_by_intersection(&amalgam.hu, s.group())?.is_trivial() {
            continue;
        }
        out.push(s.into_group());
    }
    Ok(out)
}

/// One subgroup from each conjugacy class of candidates.
pub fn candidate_classes(amalgam: &RealizedAmalgam) -> Result<Vec<SubgroupHandle>, GraphError> {
    let within = candidates_in_sylow(amalgam)?;
    let handles: Vec<SubgroupHandle> = within
        .into_iter()
        .map(|g| SubgroupHandle::from_group(&amalgam.hu, g))
        .collect::<Result<_, _>>()?;
    Ok(class_representatives(&amalgam.hu, &handles)?)
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Lift the default time limit; an explicit `time_limit` still applies.
    pub deep: bool,
    /// Largest normalizer whose elements are scanned for `h`.
    pub normalizer_limit: u64,
    pub time_limit: Option<Duration>,
}

/// Time limit of a search run without `deep`.
pub const SHALLOW_TIME_LIMIT: Duration = Duration::from_secs(60);

impl SearchOptions {
    pub fn effective_time_limit(&self) -> Option<Duration> {
        match (self.time_limit, self.deep) {
            (Some(t), _) => Some(t),
            (None, true) => None,
            (None, false) => Some(SHALLOW_TIME_LIMIT),
        }
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            deep: false,
            normalizer_limit: 50_000_000,
            time_limit: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairSearchResult {
    pub n: usize,
    pub h_group: PermutationGroup,
    /// Stabilizer of point 0 in `h_group`.
    pub m_group: SubgroupHandle,
    pub hu: PermutationGroup,
    pub mu: PermutationGroup,
    pub h: Permutation,
    pub m: Permutation,
    pub quadruple: [String; 4],
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SkippedCandidate {
    pub x_order: String,
    pub n: usize,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct PairSearchOutcome {
    pub amalgam: String,
    pub candidates: usize,
    pub class_representatives: usize,
    pub results: Vec<PairSearchResult>,
    pub skipped: Vec<SkippedCandidate>,
    pub complete: bool,
    pub elapsed: Duration,
}

fn is_power_of_two(p: &Permutation) -> bool {
    p.order_u64().is_some_and(|o| o.is_power_of_two())
}

/// `Core_big(sub) = 1`, using the normal subgroup structure of giants when
/// `big` is one.
fn core_is_trivial(big: &PermutationGroup, sub: &PermutationGroup) -> Result<bool, GraphError> {
    if sub.is_trivial() {
        return Ok(true);
    }
    if let Some(g) = big.giant() {
        if g.support.len() >= 5 {
            let alt = factorial(g.support.len()) / 2u32;
            return Ok(sub.order() < alt);
        }
    }
    if sub.order() <= BigUint::from(20_000u32) {
        return Ok(core_by_intersection(big, sub)?.is_trivial());
    }
    Ok(core(big, sub)?.group().is_trivial())
}

/// Runs the search over conjugacy-class representatives of
/// [`candidate_stabilizers`], in enumeration order.
pub fn maximal_half_arc_pairs(
    amalgam: &RealizedAmalgam,
    options: &SearchOptions,
) -> Result<PairSearchOutcome, GraphError> {
    let start = Instant::now();
    let deadline = options.effective_time_limit().map(|t| start + t);
    let reps = candidate_classes(amalgam)?;
    let cands = candidate_stabilizers(amalgam)?;
    let mut outcome = PairSearchOutcome {
        amalgam: amalgam.name.clone(),
        candidates: cands.len(),
        class_representatives: reps.len(),
        results: Vec::new(),
        skipped: Vec::new(),
        complete: true,
        elapsed: Duration::ZERO,
    };
    let hu_order = amalgam.hu.order();
    for x in &reps {
        let n = (&hu_order / x.order()).to_usize().unwrap_or(usize::MAX);
        let skip = |reason: String| SkippedCandidate {
            x_order: x.order().to_string(),
            n,
            reason,
        };
        if deadline.is_some_and(|d| Instant::now() > d) {
            outcome.skipped.push(skip("time limit reached".into()));
            outcome.complete = false;
            continue;
        }
        match search_one(amalgam, x.group(), options, deadline) {
            Ok((found, finished)) => {
                outcome.results.extend(found);
                if !finished {
                    outcome.skipped.push(skip("time limit reached during h scan".into()));
                    outcome.complete = false;
                }
            }
            Err(e) => {
                outcome.skipped.push(skip(e.to_string()));
                outcome.complete = false;
            }
        }
    }
    outcome.elapsed = start.elapsed();
    Ok(outcome)
}

fn search_one(
    amalgam: &RealizedAmalgam,
    x: &PermutationGroup,
    options: &SearchOptions,
    deadline: Option<Instant>,
) -> Result<(Vec<PairSearchResult>, bool), GraphError> {
    let phi = coset_action(&amalgam.hu, x)?;
    if !phi.kernel.group().is_trivial() {
        return Ok((Vec::new(), true));
    }
    let n = phi.degree();
    let hu = phi.image.clone().with_known_order(amalgam.hu.order());
    let map_group = |g: &PermutationGroup| -> PermutationGroup {
        let gens = g.generators().iter().map(|s| phi.map(s).expect("element of Hu")).collect();
        PermutationGroup::new(n, gens).expect("degrees agree").with_known_order(g.order())
    };
    let huv = map_group(&amalgam.huv);
    let mu = hu.point_stabilizer(0).into_group();
    let normalizer = normalizer_in_sym(&huv)?;
    if normalizer.order() > BigUint::from(options.normalizer_limit) {
        return Err(GraphError::Budget(format!(
            "normalizer of order {} above the scan limit",
            normalizer.order()
        )));
    }
    let mut h_list = Vec::new();
    normalizer.for_each_element(|e| {
        if is_power_of_two(e) && !hu.contains(e) && hu.contains(&e.compose(e)) {
            h_list.push(e.clone());
        }
        true
    });
    h_list.sort();
    let mu_elems = mu.elements()?;
    let hu_elems = hu.elements()?;
    let mut out = Vec::new();
    for h in h_list {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Ok((out, false));
        }
        let hg = hu.extended(std::slice::from_ref(&h));
        if !is_primitive(&hg)? {
            continue;
        }
        if !core_is_trivial(&hg, &hu)? {
            continue;
        }
        let m_handle = hg.point_stabilizer(0);
        let m_group = m_handle.group();
        if !core_is_trivial(m_group, &mu)? {
            continue;
        }
        let m_order = m_group.order();
        let mut found = None;
        for i in &hu_elems {
            let m = i.compose(&h);
            // Skip `m` when `Mu m Mu` contains `m^-1`, i.e. `m t m ∈ Mu` for some `t ∈ Mu`.
            if mu_elems.iter().any(|t| mu.contains(&m.compose(t).compose(&m))) {
                continue;
            }
            if m.image(0) == 0 && mu.extended(std::slice::from_ref(&m)).order() == m_order {
                found = Some(m);
                break;
            }
        }
        let Some(m) = found else { continue };
        let quadruple = [
            describe_group(&hg),
            describe_group(m_group),
            describe_group(&hu),
            describe_group(&mu),
        ];
        out.push(PairSearchResult {
            n,
            h_group: hg.clone(),
            m_group: m_handle.clone(),
            hu: hu.clone(),
            mu: mu.clone(),
            h,
            m,
            quadruple,
        });
    }
    Ok((out, true))
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairVerification {
    pub invariants_hold: bool,
    pub graph_built: bool,
    /// Set when only the group-theoretic checks were run.
    pub group_theoretic_only: bool,
    pub vertex_count: Option<usize>,
    pub valency: Option<usize>,
    pub h_s_degree: Option<SDegree>,
    pub m_arc_orbits: Option<usize>,
    pub m_half_arc_transitive: Option<bool>,
    pub m_stabilizer_order: Option<String>,
}

impl PairVerification {
    pub fn passed(&self) -> bool {
        self.invariants_hold
            && (self.group_theoretic_only
                || (self.valency == Some(4) && self.m_half_arc_transitive == Some(true)))
    }
}

/// Graphs above this many vertices are only checked group-theoretically.
pub const VERIFY_VERTEX_LIMIT: u64 = 100_000;

/// Re-checks the result's invariants and, when small enough, builds the
/// coset graph `Cos(H, Hu, Hu{h,h^-1}Hu)` and checks the actions of `H` and `M` on it.
pub fn verify_pair_result(res: &PairSearchResult) -> Result<PairVerification, GraphError> {
    let h = &res.h_group;
    let m = res.m_group.group();
    let stab = h.point_stabilizer(0);
    let invariants_hold = stab.order() == m.order()
        && m.is_subgroup_of(stab.group())
        && res.hu.contains(&res.h.compose(&res.h))
        && res.hu.extended(std::slice::from_ref(&res.h)).order() == h.order()
        && res.m.image(0) == 0
        && m.contains(&res.m)
        && res.mu.extended(std::slice::from_ref(&res.m)).order() == m.order()
        && is_primitive(h)?;
    let mut v = PairVerification {
        invariants_hold,
        graph_built: false,
        group_theoretic_only: false,
        vertex_count: None,
        valency: None,
        h_s_degree: None,
        m_arc_orbits: None,
        m_half_arc_transitive: None,
        m_stabilizer_order: None,
    };
    let index = h.order() / res.hu.order();
    if index > BigUint::from(VERIFY_VERTEX_LIMIT) || h.order() > BigUint::from(10_000_000u64) {
        v.group_theoretic_only = true;
        return Ok(v);
    }
    let handle = SubgroupHandle::new(h, res.hu.generators().to_vec())?;
    let cg = coset_graph_of_element(h, &handle, &res.h)?;
    let ca = coset_action(h, &res.hu)?;
    let m_gens = m.generators().iter().map(|g| ca.map(g).expect("M lies in H")).collect();
    let m_image = PermutationGroup::new(cg.graph.vertex_count(), m_gens)?.with_known_order(m.order());
    let h_report = transitivity_report(&cg.action, 5)?;
    let m_action = cg.action.restricted(&m_image)?;
    let m_report = transitivity_report(&m_action, 1)?;
    let m_stab = m_image.point_stabilizer(0).order();
    v.graph_built = true;
    v.vertex_count = Some(cg.graph.vertex_count());
    v.valency = cg.graph.valency();
    v.h_s_degree = Some(h_report.s_degree);
    v.m_arc_orbits = Some(m_report.arc_orbit_count);
    v.m_half_arc_transitive = Some(m_report.is_half_arc_transitive());
    v.m_stabilizer_order = Some(m_stab.to_string());
    Ok(v)
}

/// Number of distinct quadruples among results, as `(quadruple, count)`.
pub fn quadruple_summary(results: &[PairSearchResult]) -> Vec<([String; 4], usize)> {
    let mut out: Vec<([String; 4], usize)> = Vec::new();
    for r in results {
        match out.iter_mut().find(|(q, _)| *q == r.quadruple) {
            Some((_, c)) => *c += 1,
            None => out.push((r.quadruple.clone(), 1)),
        }
    }
    out
}
