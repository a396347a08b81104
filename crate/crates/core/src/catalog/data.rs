use std::sync::LazyLock;

use super::{CatalogError, Species};

/// A classification list imported verbatim from the literature.
#[derive(Debug, Clone)]
pub struct ImportedClassification {
    pub name: &'static str,
    /// Each entry is a sorted multiset of species.
    pub entries: Vec<Vec<Species>>,
}

impl ImportedClassification {
    fn load(name: &'static str, text: &str) -> Self {
        let entries = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| parse_multiset(l).unwrap_or_else(|e| panic!("bad entry in {name}: {e}")))
            .collect();
        ImportedClassification { name, entries }
    }

    /// Membership of a multiset, regardless of member order.
    pub fn contains(&self, members: &[Species]) -> bool {
        let mut m = members.to_vec();
        m.sort();
        self.entries.contains(&m)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

macro_rules! imported {
    ($id:ident, $name:literal, $file:literal) => {
        pub static $id: LazyLock<ImportedClassification> =
            LazyLock::new(|| ImportedClassification::load($name, include_str!(concat!("../../data/", $file))));
    };
}

imported!(GORENSTEIN_K_NONZERO, "gorenstein_k_nonzero", "gorenstein_k_nonzero.txt");
imported!(GORENSTEIN_K_ZERO, "gorenstein_k_zero", "gorenstein_k_zero.txt");
imported!(LOG_DEL_PEZZO_INDEX2, "log_del_pezzo_index2", "log_del_pezzo_index2.txt");
imported!(REALIZABLE_INDEX1, "realizable_index1", "realizable_index1.txt");
imported!(REALIZABLE_INDEX2, "realizable_index2", "realizable_index2.txt");
imported!(REALIZABLE_INDEX3, "realizable_index3", "realizable_index3.txt");

/// Parses a multiset such as `"2A3 2A1"`, `"K1 A4"` or `"A2(1,2)E7"`.
///
/// Whitespace separates chunks; a chunk may start with a multiplicity and
/// may hold several concatenated tokens. The result is sorted.
pub fn parse_multiset(text: &str) -> Result<Vec<Species>, CatalogError> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        let digits: String = chunk.chars().take_while(|c| c.is_ascii_digit()).collect();
        let count: usize =
            if digits.is_empty() { 1 } else { digits.parse().map_err(|_| CatalogError::Parse(chunk.to_string()))? };
        let tokens = split_tokens(&chunk[digits.len()..]).ok_or_else(|| CatalogError::Parse(chunk.to_string()))?;
        for (k, tok) in tokens.iter().enumerate() {
            let s: Species = tok.parse()?;
            let reps = if k == 0 { count } else { 1 };
            out.extend(std::iter::repeat_n(s, reps));
        }
    }
    if out.is_empty() {
        return Err(CatalogError::Parse(text.to_string()));
    }
    out.sort();
    Ok(out)
}

fn split_tokens(s: &str) -> Option<Vec<&str>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    while start < bytes.len() {
        if !bytes[start].is_ascii_alphabetic() {
            return None;
        }
        let mut i = start + 1;
        while i < bytes.len() && matches!(bytes[i], b'0'..=b'9' | b'_' | b'{' | b'}') {
            i += 1;
        }
        if i < bytes.len() && bytes[i] == b'(' {
            i += s[i..].find(')')? + 1;
        }
        out.push(&s[start..i]);
        start = i;
    }
    Some(out)
}

/// Concatenated name with multiplicities, e.g. `K1A4` or `2A32A1`.
pub fn format_multiset(members: &[Species]) -> String {
    let mut sorted = members.to_vec();
    sorted.sort();
    let mut out = String::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = (i..sorted.len()).find(|&j| sorted[j] != sorted[i]).unwrap_or(sorted.len());
        if j - i > 1 {
            out.push_str(&(j - i).to_string());
        }
        out.push_str(&sorted[i].to_string());
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_sizes() {
        assert_eq!(GORENSTEIN_K_NONZERO.len(), 27);
        assert_eq!(GORENSTEIN_K_ZERO.len(), 31);
        assert_eq!(LOG_DEL_PEZZO_INDEX2.len(), 18);
        assert_eq!(REALIZABLE_INDEX1.len(), 7);
        assert_eq!(REALIZABLE_INDEX2.len(), 4);
        assert_eq!(REALIZABLE_INDEX3.len(), 16);
    }

    #[test]
    fn lists_are_duplicate_free_and_disjoint() {
        let mut all: Vec<Vec<Species>> = GORENSTEIN_K_NONZERO.entries.clone();
        all.extend(GORENSTEIN_K_ZERO.entries.iter().cloned());
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
    }

    #[test]
    fn multiset_parsing() {
        let m = parse_multiset("2A3 2A1").unwrap();
        assert_eq!(m, vec![Species::A(3), Species::A(3), Species::A(1), Species::A(1)]);
        assert_eq!(format_multiset(&m), "2A32A1");
        let m = parse_multiset("A2(1,2)E7").unwrap();
        assert_eq!(m, vec![Species::A12(2), Species::E(7)]);
        assert_eq!(parse_multiset("K1A4").unwrap(), parse_multiset("A4 K1").unwrap());
        assert_eq!(parse_multiset("2K1 A7").unwrap().len(), 3);
        assert!(parse_multiset("").is_err());
        assert!(parse_multiset("A2(1,2").is_err());
        assert!(parse_multiset("Q4").is_err());
    }

    #[test]
    fn membership_ignores_order() {
        assert!(LOG_DEL_PEZZO_INDEX2.contains(&[Species::A(4), Species::K(1)]));
        assert!(!LOG_DEL_PEZZO_INDEX2.contains(&[Species::K(2)]));
        assert!(REALIZABLE_INDEX3.contains(&[Species::D2(5)]));
    }
}
