//! Frozen oracle counts shipped with the binary.

use num_bigint::BigUint;

const ORACLE_COUNTS: &str = include_str!("../fixtures/oracle_counts.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFixture {
    pub leaves: usize,
    pub retics: usize,
    pub count: BigUint,
    pub normal_count: BigUint,
    /// `None` for trees, which have no star.
    pub star_share: Option<BigUint>,
}

/// Parses the fixture table; `#` starts a comment line.
pub fn oracle_fixtures() -> Vec<OracleFixture> {
    parse(ORACLE_COUNTS).expect("bundled fixture file is well formed")
}

pub fn parse(text: &str) -> Result<Vec<OracleFixture>, String> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 5 {
            return Err(format!("line {}: expected 5 fields", no + 1));
        }
        let int = |s: &str| s.parse::<usize>().map_err(|e| format!("line {}: {e}", no + 1));
        let big = |s: &str| s.parse::<BigUint>().map_err(|e| format!("line {}: {e}", no + 1));
        out.push(OracleFixture {
            leaves: int(f[0])?,
            retics: int(f[1])?,
            count: big(f[2])?,
            normal_count: big(f[3])?,
            star_share: if f[4] == "-" { None } else { Some(big(f[4])?) },
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_file_parses() {
        let rows = oracle_fixtures();
        assert!(rows.iter().any(|r| (r.leaves, r.retics) == (3, 2) && r.count == BigUint::from(42u32)));
        assert!(rows.iter().filter(|r| r.retics == 0).all(|r| r.star_share.is_none()));
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(parse("1 2 3").is_err());
        assert!(parse("a 0 1 1 -").is_err());
    }
}
