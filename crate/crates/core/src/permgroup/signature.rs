//! Isomorphism-invariant fingerprints used to name groups in reports.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::Serialize;

use super::cosets::coset_action;
use super::group::PermutationGroup;
use crate::error::GroupError;
use crate::perm::Permutation;

/// `(order, exponent, abelian invariants, derived length, element orders)`,
/// or the label of a recognized alternating/symmetric group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupSignature {
    pub order: String,
    pub exponent: Option<u64>,
    pub abelian_invariants: Vec<u64>,
    pub derived_length: Option<u32>,
    /// `(element order, count)` pairs.
    pub element_orders: Vec<(u64, u64)>,
    pub name: Option<String>,
}

impl fmt::Display for GroupSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "order {}", self.order),
        }
    }
}

const ENUMERATION_LIMIT: u64 = 200_000;

pub fn signature(g: &PermutationGroup) -> Result<GroupSignature, GroupError> {
    let large = g.order() > BigUint::from(ENUMERATION_LIMIT);
    if let Some(giant) = g.giant().filter(|_| large) {
        return Ok(GroupSignature {
            order: g.order().to_string(),
            exponent: None,
            abelian_invariants: if giant.alternating { vec![] } else { vec![2] },
            derived_length: None,
            element_orders: vec![],
            name: Some(if giant.alternating {
                format!("A{}", giant.support.len())
            } else {
                format!("S{}", giant.support.len())
            }),
        });
    }
    let elems = g.elements_bounded(ENUMERATION_LIMIT)?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut exponent = 1u64;
    for e in &elems {
        let o = e.order_u64().ok_or_else(|| GroupError::Unsupported("element order overflow".into()))?;
        *counts.entry(o).or_default() += 1;
        exponent = exponent / crate::perm::gcd(exponent, o) * o;
    }
    let (invariants, derived_length) = abelian_data(g)?;
    let mut sig = GroupSignature {
        order: g.order().to_string(),
        exponent: Some(exponent),
        abelian_invariants: invariants,
        derived_length,
        element_orders: counts.into_iter().collect(),
        name: None,
    };
    sig.name = reference_name(&sig);
    Ok(sig)
}

/// Abelian invariants of `G/G'` and the derived length (`None` when the
/// derived series stabilizes at a nontrivial group).
fn abelian_data(g: &PermutationGroup) -> Result<(Vec<u64>, Option<u32>), GroupError> {
    let d = g.derived_subgroup().into_group();
    let quotient = if d.order() == g.order() {
        None
    } else {
        let action = coset_action(g, &d)?;
        Some(action.image)
    };
    let invariants = match quotient {
        None => vec![],
        Some(q) => abelian_invariants(&q.elements_bounded(ENUMERATION_LIMIT)?),
    };
    let mut length = 0u32;
    let mut cur = g.clone();
    loop {
        if cur.is_trivial() || cur.order() == BigUint::from(1u32) {
            return Ok((invariants, Some(length)));
        }
        let next = cur.derived_subgroup().into_group();
        if next.order() == cur.order() {
            return Ok((invariants, None));
        }
        length += 1;
        cur = next;
    }
}

/// Invariants `[d1, d2, ..]` with `d1 | d2 | ..` of an abelian group given by
/// its elements, derived from counts of elements of prime-power order.
pub fn abelian_invariants(elems: &[Permutation]) -> Vec<u64> {
    let n = elems.len() as u64;
    if n <= 1 {
        return vec![];
    }
    let orders: Vec<u64> = elems.iter().map(|e| e.order_u64().unwrap_or(0)).collect();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // For each prime, the exponents e_i of the cyclic p-factors.
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for &p in &primes {
        // c_k = log_p #{x : x^{p^k} = 1} = sum_i min(k, e_i).
        let mut c = vec![0u32];
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let cnt = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let mut lg = 0u32;
            let mut x = cnt;
            while x > 1 {
                x /= p;
                lg += 1;
            }
            c.push(lg);
            if lg == c[c.len() - 2] {
                break;
            }
            k += 1;
        }
        // Number of factors with e_i >= k is c_k - c_{k-1}.
        let mut exps = Vec::new();
        let kmax = c.len() - 1;
        for k in 1..=kmax {
            let ge_k = c[k] - c[k - 1];
            let ge_k1 = if k < kmax { c[k + 1] - c[k] } else { 0 };
            for _ in 0..(ge_k - ge_k1) {
                exps.push(k as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push((p, exps));
    }
    let width = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut inv = vec![1u64; width];
    for (p, exps) in &per_prime {
        for (i, &e) in exps.iter().enumerate() {
            inv[width - 1 - i] *= p.pow(e);
        }
    }
    inv
}

fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn grp(n: usize, gens: Vec<Permutation>) -> PermutationGroup {
    PermutationGroup::new(n, gens).unwrap()
}

fn reference_groups() -> Vec<(&'static str, PermutationGroup)> {
    vec![
        ("C1", PermutationGroup::trivial(1)),
        ("C2", PermutationGroup::cyclic(2)),
        ("C3", PermutationGroup::cyclic(3)),
        ("C4", PermutationGroup::cyclic(4)),
        ("C2^2", grp(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])])),
        ("S3", PermutationGroup::symmetric(3)),
        ("C6", PermutationGroup::cyclic(6)),
        ("D8", grp(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])])),
        ("C3^2", grp(6, vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[3, 4, 5]])])),
        ("D10", grp(5, vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 4], &[2, 3]])])),
        ("A4", PermutationGroup::alternating(4)),
        ("D12", grp(6, vec![perm(6, &[&[0, 1, 2, 3, 4, 5]]), perm(6, &[&[1, 5], &[2, 4]])])),
        ("F5", grp(5, vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 2, 4, 3]])])),
        ("S4", PermutationGroup::symmetric(4)),
        ("C3xA4", grp(7, vec![perm(7, &[&[0, 1, 2]]), perm(7, &[&[3, 4, 5]]), perm(7, &[&[4, 5, 6]])])),
        ("S3xS3", grp(6, vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[0, 1]]), perm(6, &[&[3, 4, 5]]), perm(6, &[&[3, 4]])])),
        ("A5", PermutationGroup::alternating(5)),
        ("S5", PermutationGroup::symmetric(5)),
        ("S3xS4", grp(7, vec![perm(7, &[&[0, 1, 2]]), perm(7, &[&[0, 1]]), perm(7, &[&[3, 4, 5, 6]]), perm(7, &[&[3, 4]])])),
        ("AGL1(7)", grp(7, vec![perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]), perm(7, &[&[1, 3, 2, 6, 4, 5]])])),
    ]
}

fn reference_name(sig: &GroupSignature) -> Option<String> {
    static TABLE: OnceLock<Vec<(&'static str, GroupSignature)>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        reference_groups()
            .into_iter()
            .map(|(name, g)| {
                let mut s = signature_plain(&g);
                s.name = None;
                (name, s)
            })
            .collect()
    });
    table
        .iter()
        .find(|(_, s)| {
            s.order == sig.order
                && s.exponent == sig.exponent
                && s.abelian_invariants == sig.abelian_invariants
                && s.derived_length == sig.derived_length
                && s.element_orders == sig.element_orders
        })
        .map(|(n, _)| n.to_string())
}

fn signature_plain(g: &PermutationGroup) -> GroupSignature {
    let elems = g.elements().expect("reference groups are small");
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut exponent = 1u64;
    for e in &elems {
        let o = e.order_u64().unwrap();
        *counts.entry(o).or_default() += 1;
        exponent = exponent / crate::perm::gcd(exponent, o) * o;
    }
    let (invariants, derived_length) = abelian_data(g).expect("reference groups are small");
    GroupSignature {
        order: g.order().to_string(),
        exponent: Some(exponent),
        abelian_invariants: invariants,
        derived_length,
        element_orders: counts.into_iter().collect(),
        name: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_of_small_groups() {
        let s4 = PermutationGroup::symmetric(4);
        let sig = signature(&s4).unwrap();
        assert_eq!(sig.name.as_deref(), Some("S4"));
        assert_eq!(sig.derived_length, Some(3));
        assert_eq!(sig.abelian_invariants, vec![2]);
        let a5 = PermutationGroup::alternating(5);
        let sig = signature(&a5).unwrap();
        assert_eq!(sig.derived_length, None);
        assert_eq!(sig.name.as_deref(), Some("A5"));
    }

    #[test]
    fn abelian_invariants_of_products() {
        let g = grp(
            9,
            vec![perm(9, &[&[0, 1]]), perm(9, &[&[2, 3, 4, 5]]), perm(9, &[&[6, 7, 8]])],
        );
        let e = g.elements().unwrap();
        assert_eq!(abelian_invariants(&e), vec![2, 12]);
        let sig = signature(&PermutationGroup::cyclic(6)).unwrap();
        assert_eq!(sig.abelian_invariants, vec![6]);
        assert_eq!(sig.name.as_deref(), Some("C6"));
    }

    #[test]
    fn f5_is_distinguished_from_d10() {
        let f5 = grp(5, vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 2, 4, 3]])]);
        assert_eq!(signature(&f5).unwrap().name.as_deref(), Some("F5"));
    }
}
