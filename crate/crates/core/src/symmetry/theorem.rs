//! Case analysis for maximal (½, t)-pairs on tetravalent graphs, the
//! local-normality identities, and Cayley normality reports.

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::transitivity::{local_action, transitivity_report, LocalAction, SDegree};
use crate::autgraph::is_isomorphic;
use crate::error::GraphError;
use crate::graphcore::{quotient_graph, special_graph, Graph, SpecialKind, VertexAction};
use crate::perm::Permutation;
use crate::permgroup::{core, is_maximal_subgroup, normalizer, signature, PermutationGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    A,
    B,
    CNormal,
    C1,
    C2,
    NotApplicable,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::CNormal => "c-normal",
            CaseLabel::C1 => "c1",
            CaseLabel::C2 => "c2",
            CaseLabel::NotApplicable => "not-applicable",
        })
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
}

fn fact(name: &str, holds: bool) -> Fact {
    Fact {
        name: name.to_string(),
        holds,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCase {
    pub label: CaseLabel,
    pub t: u32,
    pub k_order: String,
    pub k_semiregular: bool,
    pub quotient_vertices: usize,
    pub quotient_is_cover: bool,
    pub quotient_description: String,
    /// Descriptions of `(H/K, M/K, H_u, M_u)`.
    pub quadruple: [String; 4],
    pub local_h_order: String,
    pub local_m_order: String,
    pub m_normal_in_h: bool,
    pub facts: Vec<Fact>,
    #[serde(skip)]
    pub k: PermutationGroup,
    #[serde(skip)]
    pub quotient: Graph,
}

/// Short name of a group: a reference name when recognized, else its order.
pub fn describe_group(g: &PermutationGroup) -> String {
    match signature(g) {
        Ok(sig) => sig.to_string(),
        Err(_) => match g.giant() {
            Some(giant) => giant.label(),
            None => format!("order {}", g.order()),
        },
    }
}

/// Action of `g` on the blocks `orbit_of`, as a group on `r` points.
fn action_on_blocks(g: &PermutationGroup, orbits: &[Vec<u32>], orbit_of: &[u32]) -> PermutationGroup {
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = orbits.iter().map(|o| orbit_of[s.image(o[0]) as usize]).collect();
            Permutation::from_images(images).expect("orbits of a normal subgroup form blocks")
        })
        .collect();
    PermutationGroup::new(orbits.len(), gens).expect("common degree")
}

fn is_power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

/// Checks that `(M, H)` is a maximal (½, t)-pair of a connected tetravalent
/// graph; returns the facts and the value of `t`.
fn pair_preconditions(
    graph: &Graph,
    m: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<(VertexAction, VertexAction, u32, Vec<Fact>), GraphError> {
    if graph.valency() != Some(4) {
        return Err(GraphError::NotTetravalent);
    }
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let ha = VertexAction::new(h.clone(), graph.clone())?;
    if !m.is_subgroup_of(h) {
        return Err(GraphError::Precondition("M is not contained in H".into()));
    }
    let ma = ha.restricted(m)?;
    let mrep = transitivity_report(&ma, 4)?;
    if !mrep.is_half_arc_transitive() {
        return Err(GraphError::Precondition("M is not half-arc-transitive".into()));
    }
    let hrep = transitivity_report(&ha, 4)?;
    let t = match hrep.s_degree {
        SDegree::Exactly(t) if t >= 1 => t,
        SDegree::AtLeast(t) => {
            return Err(GraphError::Budget(format!("H is transitive on {t}-arcs; s-degree above the cap")))
        }
        _ => return Err(GraphError::Precondition("H is not arc-transitive".into())),
    };
    if !is_maximal_subgroup(h, m)? {
        return Err(GraphError::Precondition("M is not maximal in H".into()));
    }
    let facts = vec![
        fact("M half-arc-transitive", true),
        fact("H arc-transitive", true),
        fact("M maximal in H", true),
    ];
    Ok((ha, ma, t, facts))
}

/// Classifies a maximal (½, t)-pair `(M, H)` at vertex `u`.
pub fn classify_theorem_case(
    graph: &Graph,
    m: &PermutationGroup,
    h: &PermutationGroup,
    u: u32,
) -> Result<TheoremCase, GraphError> {
    let (ha, ma, t, mut facts) = pair_preconditions(graph, m, h)?;
    let n = graph.vertex_count();
    let k = core(h, m)?.into_group();
    let k_semiregular = k.transitivity_profile(n).semiregular;
    facts.push(fact("K semiregular", k_semiregular));

    let q = if k.is_trivial() {
        quotient_graph(&ha, &PermutationGroup::trivial(n))?
    } else {
        quotient_graph(&ha, &k)?
    };
    let r = q.r;
    let hbar = action_on_blocks(h, &q.orbits, &q.orbit_of);
    let mbar = action_on_blocks(m, &q.orbits, &q.orbit_of);
    let k_order = k.order();
    let k_kernel_of_h = h.order() / hbar.order() == k_order;
    let k_kernel_of_m = m.order() / mbar.order() == k_order;

    let lh = local_action(&ha, u)?;
    let lm = local_action(&ma, u)?;
    let m_normal = m.is_normal_in(h);
    let local_normal = lm.induced.is_normal_in(&lh.induced);

    let hu = h.point_stabilizer(u).into_group();
    let mu = m.point_stabilizer(u).into_group();
    let quadruple = [
        if k_kernel_of_h { describe_group(&hbar) } else { "?".into() },
        if k_kernel_of_m { describe_group(&mbar) } else { "?".into() },
        describe_group(&hu),
        describe_group(&mu),
    ];

    let mut quotient_description = if k.is_trivial() {
        "Gamma".to_string()
    } else {
        format!("{r} vertices, valency {:?}", q.quotient.valency())
    };
    let is_cycle = q.quotient.valency() == Some(2) && q.quotient.is_connected() && r >= 3;
    if is_cycle {
        quotient_description = format!("C{r}");
    }

    let label = match t {
        3 => {
            facts.push(fact("Gamma covers Gamma_K", q.is_cover));
            if q.is_cover {
                CaseLabel::A
            } else {
                CaseLabel::NotApplicable
            }
        }
        2 => {
            facts.push(fact("Gamma covers Gamma_K", q.is_cover));
            let target = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 5)?;
            let iso = q.quotient.vertex_count() == 10 && is_isomorphic(&q.quotient, &target)?.is_some();
            if iso {
                quotient_description = "K5,5-5K2".into();
            }
            facts.push(fact("Gamma_K isomorphic to K5,5-5K2", iso));
            if q.is_cover && iso {
                CaseLabel::B
            } else {
                CaseLabel::NotApplicable
            }
        }
        1 if m_normal => {
            facts.push(fact("M normal in H", true));
            CaseLabel::CNormal
        }
        1 => {
            let local_m_two = lm.induced.order() == BigUint::from(2u32);
            let local_h_d8 = lh.induced.order() == BigUint::from(8u32)
                && describe_group(&lh.induced) == "D8";
            facts.push(fact("M_u local action has order 2", local_m_two));
            facts.push(fact("H_u local action is D8", local_h_d8));
            facts.push(fact("M_u local action not normal in H_u local action", !local_normal));
            facts.push(fact("|V(Gamma_K)| is not a power of 2", !is_power_of_two(r)));
            let base = local_m_two && local_h_d8 && !local_normal && k_semiregular && !is_power_of_two(r);
            let c1 = base && k_kernel_of_h && q.is_cover && {
                if k.is_trivial() {
                    true
                } else {
                    quotient_pair_is_maximal(&q.quotient, &mbar, &hbar)?
                }
            };
            let c2 = base && !c1 && is_cycle && k_kernel_of_m && mbar.order() == BigUint::from(2 * r);
            facts.push(fact("K is the kernel of H on V(Gamma_K)", k_kernel_of_h));
            facts.push(fact("K is the kernel of M on V(Gamma_K)", k_kernel_of_m));
            facts.push(fact("Gamma covers Gamma_K", q.is_cover));
            if c1 {
                facts.push(fact("(M/K, H/K) maximal (1/2,1)-pair of Gamma_K", true));
                CaseLabel::C1
            } else if c2 {
                facts.push(fact("Gamma_K is a cycle and M/K dihedral of order 2r", true));
                CaseLabel::C2
            } else {
                CaseLabel::NotApplicable
            }
        }
        _ => CaseLabel::NotApplicable,
    };

    Ok(TheoremCase {
        label,
        t,
        k_order: k_order.to_string(),
        k_semiregular,
        quotient_vertices: r,
        quotient_is_cover: q.is_cover,
        quotient_description,
        quadruple,
        local_h_order: lh.induced.order().to_string(),
        local_m_order: lm.induced.order().to_string(),
        m_normal_in_h: m_normal,
        facts,
        k,
        quotient: q.quotient,
    })
}

fn quotient_pair_is_maximal(
    quotient: &Graph,
    mbar: &PermutationGroup,
    hbar: &PermutationGroup,
) -> Result<bool, GraphError> {
    let ha = VertexAction::new(hbar.clone(), quotient.clone())?;
    let ma = ha.restricted(mbar)?;
    let mrep = transitivity_report(&ma, 2)?;
    let hrep = transitivity_report(&ha, 2)?;
    Ok(mrep.is_half_arc_transitive()
        && hrep.s_degree == SDegree::Exactly(1)
        && is_maximal_subgroup(hbar, mbar)?)
}

/// The three identities that hold when `M_u` acts on `Γ(u)` as a normal
/// subgroup of the local action of `H_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalNormalityReport {
    /// The subgroup of `H_u` fixing both `M_u`-orbits on `Γ(u)` equals `M_u`.
    pub orbit_stabilizer_is_mu: bool,
    /// `|H_u^[1]| = |M_u^[1]|`.
    pub kernels_equal: bool,
    /// `|H : M| = |H_u : M_u|`.
    pub index_identity: bool,
}

impl LocalNormalityReport {
    pub fn all_hold(&self) -> bool {
        self.orbit_stabilizer_is_mu && self.kernels_equal && self.index_identity
    }
}

/// Evaluates the local-normality identities when their hypothesis holds, i.e.
/// `Γ` is `H`-arc-transitive, `M` is maximal among HAT subgroups of `H`, and
/// `M_u^Γ(u)` is normal in `H_u^Γ(u)`; returns `None` otherwise.
pub fn local_normality_identities(
    h_action: &VertexAction,
    m: &PermutationGroup,
    u: u32,
) -> Result<Option<LocalNormalityReport>, GraphError> {
    let ma = h_action.restricted(m)?;
    let lh = local_action(h_action, u)?;
    let lm = local_action(&ma, u)?;
    if !lm.induced.is_normal_in(&lh.induced) {
        return Ok(None);
    }
    let orbits = lm.induced.orbits();
    let fixing_orbits = count_fixing(&lh, &orbits)?;
    let kernel_h = &lh.kernel_order;
    let kernel_m = &lm.kernel_order;
    let h = h_action.group();
    let hu = &lh.stabilizer_order;
    let mu = &lm.stabilizer_order;
    let orbit_stab_order = kernel_h * BigUint::from(fixing_orbits);
    Ok(Some(LocalNormalityReport {
        orbit_stabilizer_is_mu: &orbit_stab_order == mu,
        kernels_equal: kernel_h == kernel_m,
        index_identity: h.order() * mu == m.order() * hu,
    }))
}

/// Number of elements of the induced local group fixing every given orbit setwise.
fn count_fixing(local: &LocalAction, orbits: &[Vec<u32>]) -> Result<u64, GraphError> {
    let elems = local.induced.elements_bounded(100_000)?;
    Ok(elems
        .iter()
        .filter(|e| {
            orbits
                .iter()
                .all(|o| o.iter().all(|&p| o.contains(&e.image(p))))
        })
        .count() as u64)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CayleyNormality {
    pub normalizer_order: String,
    pub normal_edge_transitive: bool,
    pub normal: bool,
    #[serde(skip)]
    pub normalizer: PermutationGroup,
}

/// Normalizer of a regular subgroup of `Aut(Γ)` and the derived normality flags.
pub fn cayley_normality_report(
    regular: &PermutationGroup,
    aut: &VertexAction,
) -> Result<CayleyNormality, GraphError> {
    let n = aut.graph().vertex_count();
    if !regular.transitivity_profile(n).regular {
        return Err(GraphError::Precondition("subgroup is not regular on vertices".into()));
    }
    let nz = normalizer(aut.group(), regular)?.into_group();
    let rep = transitivity_report(&aut.restricted(&nz)?, 1)?;
    let normal = nz.order() == aut.group().order();
    Ok(CayleyNormality {
        normalizer_order: nz.order().to_string(),
        normal_edge_transitive: rep.edge_transitive,
        normal,
        normalizer: nz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgraph::automorphism_group;
    use crate::graphcore::cayley_graph;

    #[test]
    fn cycle_cayley_graph_is_normal() {
        let z5 = PermutationGroup::cyclic(5);
        let x = z5.generators()[0].clone();
        let cay = cayley_graph(&z5, &[x.clone(), x.inverse()]).unwrap();
        let aut = automorphism_group(&cay.graph).unwrap();
        let act = VertexAction::new(aut, cay.graph.clone()).unwrap();
        let rep = cayley_normality_report(cay.action.group(), &act).unwrap();
        assert!(rep.normal);
        assert!(rep.normal_edge_transitive);
        assert_eq!(rep.normalizer_order, "10");
    }
}
