//! The seven finite faithful 2-transitive amalgams of index (4, 2), given as
//! a vertex group `L` and an edge subgroup `B` of index 4.

use num_bigint::BigUint;

use super::enumerate::{todd_coxeter, DEFAULT_COSET_LIMIT};
use super::presentation::{FpPresentation, Letter};
use crate::error::FpError;

#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    pub name: &'static str,
    /// Isomorphism type of `L`.
    pub structure: &'static str,
    pub presentation: FpPresentation,
    pub b_generators: Vec<Vec<Letter>>,
    /// `(|L|, |B|)`.
    pub expected_orders: (BigUint, BigUint),
}

impl AmalgamSpec {
    /// Checks `|L|`, `|B|` and `|L : B| = 4` by coset enumeration.
    pub fn self_check(&self) -> Result<bool, FpError> {
        let l = todd_coxeter(&self.presentation, &[], DEFAULT_COSET_LIMIT)?.index();
        let idx = todd_coxeter(&self.presentation, &self.b_generators, DEFAULT_COSET_LIMIT)?.index();
        Ok(BigUint::from(l) == self.expected_orders.0
            && idx == 4
            && BigUint::from(l / idx) == self.expected_orders.1)
    }
}

struct Row {
    name: &'static str,
    structure: &'static str,
    gens: &'static [&'static str],
    relators: &'static str,
    b: &'static [&'static str],
    orders: (u64, u64),
}

const ROWS: &[Row] = &[
    Row {
        name: "A4s",
        structure: "A4",
        gens: &["x", "y", "s"],
        relators: "x^2,y^2,s^3,(x,y),x^s*y^-1,y^s*(x*y)^-1",
        b: &["s"],
        orders: (12, 3),
    },
    Row {
        name: "S4",
        structure: "S4",
        gens: &["x", "y", "s", "t"],
        relators: "x^2,y^2,s^3,t^2,(x,y),s^t*s,x^s*y^-1,y^s*(x*y)^-1,x^t*y^-1",
        b: &["s", "t"],
        orders: (24, 6),
    },
    Row {
        name: "Z3xA4",
        structure: "Z3xA4",
        gens: &["x", "y", "c", "d"],
        relators: "x^2,y^2,c^3,d^3,(x,y),(c,d),(c,x),(c,y),x^d*y^-1,y^d*(x*y)^-1",
        b: &["c", "d"],
        orders: (36, 9),
    },
    Row {
        name: "Z3:S4",
        structure: "Z3:S4",
        gens: &["x", "y", "c", "d", "t"],
        relators: "x^2,y^2,c^3,d^3,t^2,(x,y),(c,d),(c,x),(c,y),c^t*c,d^t*d,x^d*y^-1,y^d*(x*y)^-1,x^t*y^-1",
        b: &["c", "d", "t"],
        orders: (72, 18),
    },
    Row {
        name: "S3xS4",
        structure: "S3xS4",
        gens: &["x", "y", "c", "d", "r", "s"],
        relators: "x^2,y^2,c^3,d^3,r^2,s^2,(x,y),(c,d),(r,s),(c,x),(c,y),c^r*c,(d,r),(c,s),d^s*d,x^d*y^-1,\
                   y^d*(x*y)^-1,x^s*y^-1,(r,x),(r,y)",
        b: &["c", "d", "r", "s"],
        orders: (144, 36),
    },
    Row {
        name: "4-AT",
        structure: "AGL2(3)",
        gens: &["t", "x", "y", "c", "d", "e"],
        relators: "t^2,c^3,d^3,e^3,x^2,y^2,\
                   (c,d),(c,e),(d,e)*c^-1,(x,y),(c*x)^2,(d*x)^2,(e,x),(c*y)^2,(d,y),(e*y)^2,c^t*d,\
                   y*(e*t)^2*e^-1*t*e^-1,(e*t)^4*x",
        b: &["x", "y", "c", "d", "e"],
        orders: (432, 108),
    },
    Row {
        name: "7-AT",
        structure: "Z3^3.AGL2(3)",
        gens: &["h", "p", "q", "r", "s", "t", "u", "v", "k"],
        relators: "h^4,p^3,q^3,r^3,s^3,t^3,u^3,v^2,k^2,\
                   k*h^2,(p,q),(p,r),(p,s),(p,t),(p,u),(q,r),(q,s),(q,t),(q,u),(r,s),(r,t),(u,s),(s,t)*p^-1,\
                   (u,r)*q^-1,(t,u)*(q*r*s*p^-1)^-1,\
                   (k,v),(t*k)^2,(r*k)^2,(p,k),(q*k)^2,(s*k)^2,(u,k),(t*v)^2,(r,v),(p*v)^2,(q*v)^2,(s,v),\
                   (u*v)^2,(p,h),q^h*(q^-1*r)^-1,\
                   r^h*(q*r)^-1,s^h*(p*q^-1*r^-1*s^-1*t^-1)^-1,t^h*(p^-1*q*r^-1*s^-1*t)^-1,(h*u*v)^2,(h*u)^3",
        b: &["p", "q", "r", "s", "t", "u", "v", "k"],
        orders: (11664, 2916),
    },
];

/// The catalog in its fixed order.
pub fn amalgam_catalog() -> Vec<AmalgamSpec> {
    ROWS.iter().map(build).collect()
}

/// Looks an entry up by name; `×` and `⋊` are accepted for `x` and `:`.
pub fn amalgam_by_name(name: &str) -> Option<AmalgamSpec> {
    let key = normalize(name);
    ROWS.iter().find(|r| normalize(r.name) == key).map(build)
}

fn normalize(name: &str) -> String {
    name.trim()
        .replace('×', "x")
        .replace('⋊', ":")
        .replace("C3", "Z3")
        .to_ascii_lowercase()
}

fn build(row: &Row) -> AmalgamSpec {
    let relators: Vec<&str> = split_relators(row.relators);
    let presentation =
        FpPresentation::from_strings(row.gens, &relators).expect("catalog presentations parse");
    let b_generators = row
        .b
        .iter()
        .map(|w| presentation.parse_word(w).expect("catalog words parse"))
        .collect();
    AmalgamSpec {
        name: row.name,
        structure: row.structure,
        presentation,
        b_generators,
        expected_orders: (BigUint::from(row.orders.0), BigUint::from(row.orders.1)),
    }
}

/// Splits on commas outside parentheses.
fn split_relators(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|r| !r.is_empty());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_entries_with_expected_orders() {
        let cat = amalgam_catalog();
        assert_eq!(cat.len(), 7);
        for spec in cat.iter().take(6) {
            assert!(spec.self_check().unwrap(), "{}", spec.name);
        }
    }

    #[test]
    fn lookup_by_name() {
        let s = amalgam_by_name("S3×S4").unwrap();
        assert_eq!(s.expected_orders.0, BigUint::from(144u32));
        assert_eq!(s.expected_orders.1, BigUint::from(36u32));
        assert!(amalgam_by_name("C3xA4").is_some());
        assert!(amalgam_by_name("nope").is_none());
    }

    #[test]
    fn a4_over_b_has_index_four() {
        let s = amalgam_by_name("A4s").unwrap();
        let t = todd_coxeter(&s.presentation, &s.b_generators, 100).unwrap();
        assert_eq!(t.index(), 4);
    }
}
