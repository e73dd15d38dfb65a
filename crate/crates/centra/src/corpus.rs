//! The built-in verification corpus: ~30 groups of order <= 243 covering
//! abelian baselines, the classical small non-abelian groups, extraspecial
//! groups of both variants, and two committed fixtures.
//!
//! Every entry carries frozen expected values (order, centralizer count,
//! z-class count) computed independently of the library's engines; they are
//! re-checked by `verify_asserts` and by the test suites.

use crate::catalog::{read_grp, read_permgrp, CorpusEntry};
use crate::centralizer::profile;
use crate::constructors::*;
use crate::zclass::z_partition;
use crate::{Group, Result};

const SG_64_73: &str = include_str!("../fixtures/sg_64_73.permgrp");
const ULTRASPECIAL_64: &str = include_str!("../fixtures/ultraspecial_64.grp");

fn entry(name: &str, group: Result<Group>, cent: usize, zclass: usize) -> CorpusEntry {
    let group = group.expect("builtin constructor must succeed").with_name(name);
    CorpusEntry {
        name: name.to_string(),
        asserts: vec![
            ("order".into(), group.order().to_string()),
            ("cent_count".into(), cent.to_string()),
            ("zclass_count".into(), zclass.to_string()),
        ],
        group,
    }
}

/// The committed corpus, in fixed order. Expected counts are frozen here;
/// see the per-entry comments for how each was derived.
pub fn builtin() -> Vec<CorpusEntry> {
    let c2 = || construct_cyclic(2).unwrap();
    let c3 = || construct_cyclic(3).unwrap();
    let v = ExtraspecialVariant::Plus;
    let m = ExtraspecialVariant::Minus;
    vec![
        // abelian baselines: one centralizer, one z-class
        entry("C1", construct_cyclic(1), 1, 1),
        entry("C2", construct_cyclic(2), 1, 1),
        entry("C3", construct_cyclic(3), 1, 1),
        entry("C4", construct_cyclic(4), 1, 1),
        entry("C5", construct_cyclic(5), 1, 1),
        entry("C6", construct_cyclic(6), 1, 1),
        entry("C8", construct_cyclic(8), 1, 1),
        entry("C2xC2", construct_direct_product(&c2(), &c2()), 1, 1),
        entry(
            "C2xC2xC2",
            construct_direct_product(&c2(), &construct_direct_product(&c2(), &c2()).unwrap()),
            1,
            1,
        ),
        entry("C3xC3", construct_direct_product(&c3(), &c3()), 1, 1),
        entry("C15", construct_cyclic(15), 1, 1),
        // S3: proper centralizers A3 and three <transposition>s; z-classes
        // {e}, 3-cycles, transpositions
        entry("S3", construct_symmetric(3), 5, 3),
        // D8, Q8: |Cent| = |G/Z| = 4; all centralizers index 2 (normal)
        entry("D8", construct_dihedral(8), 4, 4),
        entry("Q8", construct_quaternion8(), 4, 4),
        // D10: <r> plus five reflection centralizers = 5+2
        entry("D10", construct_dihedral(10), 7, 3),
        // D12: <r> plus three order-4 reflection centralizers = 3+2;
        // reflections merge into one z-class of 6 = 3*2
        entry("D12", construct_dihedral(12), 5, 3),
        // D16: <r> plus four order-4 reflection centralizers; reflections
        // split into two z-classes of 4
        entry("D16", construct_dihedral(16), 6, 4),
        // A4: V4 plus four <3-cycle>s = 4+2; z-classes {e}, V4\{e}, 3-cycles
        entry("A4", construct_alternating4(), 6, 3),
        // S4: 3 transposition + 3 double-transposition + 4 three-cycle +
        // 3 four-cycle centralizers + G = 14; z-classes by cycle type = 5
        entry("S4", construct_symmetric(4), 14, 5),
        // abelian direct factors leave both counts unchanged
        entry("C2xD8", construct_direct_product(&c2(), &construct_dihedral(8).unwrap()), 4, 4),
        entry("C2xQ8", construct_direct_product(&c2(), &construct_quaternion8().unwrap()), 4, 4),
        entry("C3xS3", construct_direct_product(&c3(), &construct_symmetric(3).unwrap()), 5, 3),
        // extraspecial p^3: (p^2-1)/(p-1)+1 = p+2 for both counts
        entry("H27", construct_extraspecial(3, 1, v), 5, 5),
        entry("M27", construct_extraspecial(3, 1, m), 5, 5),
        // extraspecial p^5: (p^4-1)/(p-1)+1
        entry("ES32+", construct_extraspecial(2, 2, v), 16, 16),
        entry("ES32-", construct_extraspecial(2, 2, m), 16, 16),
        entry("ES243+", construct_extraspecial(3, 2, v), 41, 41),
        entry("ES243-", construct_extraspecial(3, 2, m), 41, 41),
        // Heisenberg over F5: extraspecial 5^3, 5+2 = 7
        entry("H125", construct_heisenberg(5), 7, 7),
        entry("C2xH27", construct_direct_product(&c2(), &construct_heisenberg(3).unwrap()), 5, 5),
        // special 2-group of order 64 with G/Z = C2^3, conjugate type (4,1):
        // 2^2+2+2 - 0 = 8 centralizers, all normal (G/Z abelian)
        entry("sg_64_73", read_permgrp(SG_64_73), 8, 8),
        // ultraspecial of order 64: (16-1)/(4-1)+1 = 6, all normal
        entry("US64", read_grp(ULTRASPECIAL_64), 6, 6),
    ]
}

/// Re-checks an entry's recorded assertions against freshly computed values.
/// Returns the list of failures (empty = all good).
pub fn verify_asserts(e: &CorpusEntry) -> Vec<String> {
    let p = profile(&e.group);
    let zp = z_partition(&e.group, &p);
    let mut failures = Vec::new();
    for (key, expected) in &e.asserts {
        let actual = match key.as_str() {
            "order" => e.group.order().to_string(),
            "cent_count" => p.cent_count.to_string(),
            "zclass_count" => zp.count().to_string(),
            "nacent_count" => p.nacent_count.to_string(),
            "center_size" => p.center().size().to_string(),
            "abelian" => p.proper.is_empty().to_string(),
            other => {
                failures.push(format!("{}: unknown assert key `{other}`", e.name));
                continue;
            }
        };
        if actual != *expected {
            failures.push(format!("{}: {key} expected {expected}, got {actual}", e.name));
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn corpus_loads_with_unique_names() {
        let corpus = builtin();
        assert!(corpus.len() >= 30);
        let names: HashSet<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), corpus.len());
        assert!(corpus.iter().all(|e| e.group.order() <= 243));
    }

    #[test]
    fn frozen_asserts_all_hold() {
        for e in builtin() {
            let failures = verify_asserts(&e);
            assert!(failures.is_empty(), "{failures:?}");
        }
    }

    #[test]
    fn unknown_assert_key_reported() {
        let mut e = builtin().into_iter().next().unwrap();
        e.asserts.push(("no_such_key".into(), "1".into()));
        let failures = verify_asserts(&e);
        assert_eq!(failures.len(), 1);
        assert!(failures[0].contains("no_such_key"));
    }
}
