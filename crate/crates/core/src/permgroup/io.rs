//! Text format for permutation groups: `degree k` on the first line, then
//! one generator per line in disjoint-cycle notation.

use super::group::PermutationGroup;
use crate::error::GroupError;
use crate::perm::Permutation;

pub fn parse_group(text: &str) -> Result<PermutationGroup, GroupError> {
    let (degree, gens) = parse_generators(text)?;
    PermutationGroup::new(degree, gens)
}

/// Degree and generator list exactly as written (identities kept).
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>), GroupError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GroupError::Parse("empty group file".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| GroupError::Parse(format!("header {header:?}: {e}")))?;
    let [degree, count] = nums[..] else {
        return Err(GroupError::Parse(format!("header {header:?} must be `degree k`")));
    };
    let gens: Vec<Permutation> = lines
        .map(|l| Permutation::parse_cycles(degree, l))
        .collect::<Result<_, _>>()?;
    if gens.len() != count {
        return Err(GroupError::Parse(format!(
            "header announces {count} generators, found {}",
            gens.len()
        )));
    }
    Ok((degree, gens))
}

pub fn format_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut s = format!("{degree} {}\n", gens.len());
    for g in gens {
        s.push_str(&g.to_cycle_string());
        s.push('\n');
    }
    s
}

pub fn format_group(g: &PermutationGroup) -> String {
    format_generators(g.degree(), g.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "5 2\n(0 1 2 3 4)\n(0 1)\n";
        let g = parse_group(text).unwrap();
        assert_eq!(format_group(&g), text);
        assert_eq!(g.order_u64(), Some(120));
    }

    #[test]
    fn identity_and_errors() {
        let (d, gens) = parse_generators("3 1\n()\n").unwrap();
        assert_eq!(d, 3);
        assert!(gens[0].is_identity());
        assert!(parse_group("3 2\n(0 1)\n").is_err());
        assert!(parse_group("3\n").is_err());
    }
}
