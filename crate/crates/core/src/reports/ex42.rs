use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{err, run_report, Basis, ExampleReport};
use crate::fpgroup::{permutation_image, FpPresentation, DEFAULT_COSET_LIMIT};
use crate::perm::Permutation;
use crate::permgroup::{conjugation_stabilizer, double_coset, normalizer_in_sym_fixing, PermutationGroup};

pub(crate) const PRESENTATION: &str = "gens a b c d
a^2; b^3; (a*b)^2
c^2; d^3; (c*d)^4
[a,c]; [a,d]; [b,c]; [b,d]";

/// Witness produced by [`search_ex42_witness`], with the parameters that
/// regenerate it.
pub const STORED_WITNESS: &str = include_str!("../../data/ex42_witness.json");

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `S3 x S4` acting on the 72 cosets of `<a(cd)^2>`, with the subgroups
/// `Y = R(M' ⋊ <ac>)`, `Z = R(<b, d, ac^(dc)>)` and `t = R(ac^(dc))`.
#[derive(Clone, Debug)]
pub struct Ex42Setup {
    pub m: PermutationGroup,
    pub y: PermutationGroup,
    pub z: PermutationGroup,
    pub t: Permutation,
}

impl Ex42Setup {
    pub fn build() -> Result<Self, String> {
        let pres = FpPresentation::parse(PRESENTATION).map_err(err)?;
        let sub = pres.parse_word("a*(c*d)^2").map_err(err)?;
        let img = permutation_image(&pres, &[sub], DEFAULT_COSET_LIMIT).map_err(err)?;
        if !img.faithful {
            return Err("action on cosets of <a(cd)^2> is not faithful".into());
        }
        let word = |w: &str| pres.parse_word(w).map(|w| img.map_word(&w)).map_err(err);
        let m = img.group.clone();
        let derived = m.derived_subgroup().into_group();
        let y = derived.extended(&[word("a*c")?]);
        let t = word("a*c^(d*c)")?;
        let z = PermutationGroup::new(m.degree(), vec![word("b")?, word("d")?, t.clone()]).map_err(err)?;
        Ok(Ex42Setup { m, y, z, t })
    }

    pub fn degree(&self) -> usize {
        self.m.degree()
    }
}

/// Outcome of the four conditions on a candidate `x`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessChecks {
    pub order: String,
    pub even: bool,
    pub square_is_t: bool,
    pub y_meet_yx_is_z: bool,
    pub generated_order: Option<String>,
    pub generates_alternating: bool,
    /// `S = X_0 ∩ YxY`, as cycle strings.
    pub s: Vec<String>,
    pub yxy_is_ys: bool,
    pub s_shape: bool,
    pub s_generated_order: Option<String>,
}

impl WitnessChecks {
    pub fn all_hold(&self) -> bool {
        self.order == "4"
            && self.even
            && self.square_is_t
            && self.y_meet_yx_is_z
            && self.generates_alternating
            && self.yxy_is_ys
            && self.s_shape
    }
}

fn element_set(g: &PermutationGroup) -> Result<HashSet<Permutation>, String> {
    Ok(g.elements().map_err(err)?.into_iter().collect())
}

/// Runs the checks in order, stopping at the first failure.
pub fn check_witness(setup: &Ex42Setup, x: &Permutation) -> Result<WitnessChecks, String> {
    let n = setup.degree();
    if x.degree() != n {
        return Err(format!("witness has degree {}, expected {n}", x.degree()));
    }
    let mut c = WitnessChecks {
        order: x.order().to_string(),
        even: x.is_even(),
        square_is_t: x.compose(x) == setup.t,
        y_meet_yx_is_z: false,
        generated_order: None,
        generates_alternating: false,
        s: Vec::new(),
        yxy_is_ys: false,
        s_shape: false,
        s_generated_order: None,
    };
    if !(c.square_is_t && c.even) {
        return Ok(c);
    }
    let y_set = element_set(&setup.y)?;
    let meet: Vec<Permutation> = y_set
        .iter()
        .map(|e| e.conjugate_by(x))
        .filter(|e| y_set.contains(e))
        .collect();
    let z_set = element_set(&setup.z)?;
    c.y_meet_yx_is_z = meet.len() == z_set.len() && meet.iter().all(|e| z_set.contains(e));
    if !c.y_meet_yx_is_z {
        return Ok(c);
    }
    let generated = setup.y.extended(std::slice::from_ref(x));
    let order = generated.order();
    c.generated_order = Some(order.to_string());
    c.generates_alternating = order == factorial(n as u32) / 2u32;
    if !c.generates_alternating {
        return Ok(c);
    }

    // `Y` is regular, so each right coset `Yz` meets the stabilizer of 0 once.
    let y_elems = setup.y.elements().map_err(err)?;
    let mut by_image = vec![None; n];
    for e in &y_elems {
        by_image[e.image(0) as usize] = Some(e.clone());
    }
    let mut s: BTreeSet<Permutation> = BTreeSet::new();
    for e in &y_elems {
        let z = x.compose(e);
        let p = z.inverse().image(0);
        let lead = by_image[p as usize].as_ref().ok_or("Y is not transitive")?;
        s.insert(lead.compose(&z));
    }
    c.s = s.iter().map(|p| p.to_cycle_string()).collect();
    let yxy: BTreeSet<Permutation> = double_coset(&setup.y, x, &setup.y).map_err(err)?.into_iter().collect();
    let ys: BTreeSet<Permutation> = y_elems.iter().flat_map(|a| s.iter().map(move |g| a.compose(g))).collect();
    c.yxy_is_ys = yxy == ys;
    let s_list: Vec<Permutation> = s.iter().cloned().collect();
    c.s_shape = s_list.len() == 4 && s_has_involution_shape(n, &s_list)?;
    let s_group = PermutationGroup::new(n, s_list).map_err(err)?;
    c.s_generated_order = Some(s_group.order().to_string());
    Ok(c)
}

/// `S = {g, g^-1, g^h, (g^h)^-1}` for an even involution `h` fixing 0.
fn s_has_involution_shape(n: usize, s: &[Permutation]) -> Result<bool, String> {
    if s.iter().any(|g| g.image(0) != 0 || !g.is_even()) {
        return Ok(false);
    }
    let set: BTreeSet<&Permutation> = s.iter().collect();
    if s.iter().any(|g| !set.contains(&g.inverse())) {
        return Ok(false);
    }
    let stab = conjugation_stabilizer(n, s, &[0]).map_err(err)?;
    let mut found = false;
    stab.for_each_element(|h| {
        if h.is_identity() || !h.compose(h).is_identity() || !h.is_even() {
            return true;
        }
        found = s.iter().any(|g| {
            let gh = g.conjugate_by(h);
            gh != *g && gh != g.inverse()
        });
        !found
    });
    Ok(found)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessSearch {
    pub witness: Option<String>,
    pub normalizer_order: String,
    pub examined: u64,
    pub candidates: u64,
    pub exhausted_budget: bool,
    pub seconds: f64,
}

/// Scans `N_{Sym(72)}(Z) ∩ C(t)` in stabilizer-chain order for the first even
/// element of order 4 passing [`check_witness`].
pub fn search_ex42_witness(setup: &Ex42Setup, budget: Option<Duration>) -> Result<WitnessSearch, String> {
    let start = Instant::now();
    let n = normalizer_in_sym_fixing(&setup.z, std::slice::from_ref(&setup.t)).map_err(err)?;
    let mut out = WitnessSearch {
        witness: None,
        normalizer_order: n.order().to_string(),
        examined: 0,
        candidates: 0,
        exhausted_budget: false,
        seconds: 0.0,
    };
    let mut failure = None;
    n.for_each_element(|e| {
        out.examined += 1;
        if budget.is_some_and(|b| start.elapsed() > b) {
            out.exhausted_budget = true;
            return false;
        }
        if !e.is_even() || e.compose(e) != setup.t || e.order_u64() != Some(4) {
            return true;
        }
        out.candidates += 1;
        match check_witness(setup, e) {
            Ok(c) if c.all_hold() => {
                out.witness = Some(e.to_cycle_string());
                false
            }
            Ok(_) => true,
            Err(msg) => {
                failure = Some(msg);
                false
            }
        }
    });
    if let Some(msg) = failure {
        return Err(msg);
    }
    out.seconds = start.elapsed().as_secs_f64();
    Ok(out)
}

/// Contents of a witness data file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub degree: usize,
    /// Cycle notation on the standardized coset numbering.
    pub x: String,
    pub generator: String,
    pub seed: u64,
    pub budget_seconds: Option<f64>,
    pub examined: u64,
    pub normalizer_order: String,
}

impl Witness {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(err)
    }

    pub fn permutation(&self) -> Result<Permutation, String> {
        Permutation::parse_cycles(self.degree, &self.x).map_err(err)
    }
}

/// Verifies the four conditions for `witness`, or for a freshly searched
/// witness when none is given.
pub fn run_example_42(witness: Option<&Witness>, search_budget: Option<Duration>) -> ExampleReport {
    run_report("4.2", |r| {
        let setup = Ex42Setup::build()?;
        r.check("|M|", 144, setup.m.order(), Basis::Stated);
        r.check("degree", 72, setup.degree(), Basis::Stated);
        r.check("|Y|", 72, setup.y.order(), Basis::Stated);
        r.check_true("Y regular", setup.y.transitivity_profile(72).regular, Basis::Stated);
        r.check("|Z|", 18, setup.z.order(), Basis::Derived);
        r.check_true("Z ≤ Y", setup.z.is_subgroup_of(&setup.y), Basis::Stated);

        let x = match witness {
            Some(w) => {
                r.note("witness source", format!("{} (seed {}, {} elements examined)", w.generator, w.seed, w.examined));
                w.permutation()?
            }
            None => {
                let found = search_ex42_witness(&setup, search_budget)?;
                r.note("witness search examined", found.examined);
                r.note("witness search seconds", format!("{:.1}", found.seconds));
                r.note("|N(Z) ∩ C(t)|", &found.normalizer_order);
                match found.witness {
                    Some(s) => Permutation::parse_cycles(72, &s).map_err(err)?,
                    None => {
                        r.incomplete = Some(format!(
                            "no witness found after examining {} elements{}",
                            found.examined,
                            if found.exhausted_budget { " (budget exhausted)" } else { "" }
                        ));
                        return Ok(());
                    }
                }
            }
        };
        r.note("x", x.to_cycle_string());
        let c = check_witness(&setup, &x)?;
        r.check("order of x", 4, &c.order, Basis::Stated);
        r.check_true("x even", c.even, Basis::Stated);
        r.check_true("x^2 = ac^(dc)", c.square_is_t, Basis::Stated);
        r.check_true("Y ∩ Y^x = Z", c.y_meet_yx_is_z, Basis::Stated);
        let alt72 = (factorial(72) / 2u32).to_string();
        r.check("|<Y, x>|", &alt72, c.generated_order.clone().unwrap_or_default(), Basis::Derived);
        r.check_true("YxY = YS", c.yxy_is_ys, Basis::Stated);
        r.check("|S|", 4, c.s.len(), Basis::Stated);
        r.check_true("S = {g, g^-1, g^h, (g^h)^-1} with h an involution in X_v", c.s_shape, Basis::Stated);
        let alt71 = (factorial(71) / 2u32).to_string();
        r.check("|<S>|", &alt71, c.s_generated_order.clone().unwrap_or_default(), Basis::Derived);
        Ok(())
    })
}
