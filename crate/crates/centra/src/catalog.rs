//! Bit-exact text formats for groups and corpus manifests.
//!
//! GRP v1 carries an explicit multiplication table; PERMGRP v1 carries
//! permutation generators that are closed into a Cayley table. Manifests list
//! corpus entries (`file <path>` or `construct <spec>`) with optional indented
//! `assert <key> <value>` lines.

use std::collections::HashMap;
use std::path::Path;

use crate::constructors::*;
use crate::{order_cap, Error, Group, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines of a format file, with 1-based numbers; comments and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty())
}

pub fn read_grp(text: &str) -> Result<Group> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty file"))?;
    if header.trim() != "%grp 1" {
        return Err(parse_err(ln, "expected `%grp 1` header"));
    }
    let mut name = None;
    let mut order = None;
    for (ln, line) in lines.by_ref() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("name ") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("order ") {
            order = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(ln, "bad order"))?,
            );
        } else if line == "table" {
            break;
        } else {
            return Err(parse_err(ln, format!("unexpected line `{line}`")));
        }
    }
    let n = order.ok_or_else(|| parse_err(0, "missing `order`"))?;
    if n == 0 || n > order_cap() {
        return Err(parse_err(0, format!("order {n} outside 1..={}", order_cap())));
    }
    let mut rows = Vec::with_capacity(n);
    for (ln, line) in lines {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, "bad index")))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_err(ln, format!("expected {n} entries, got {}", row.len())));
        }
        rows.push(row);
        if rows.len() == n {
            break;
        }
    }
    if rows.len() != n {
        return Err(parse_err(0, format!("expected {n} table rows, got {}", rows.len())));
    }
    Group::from_table(&rows, name)
}

pub fn write_grp(g: &Group) -> String {
    let mut out = String::from("%grp 1\n");
    if let Some(name) = g.name() {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("order {}\ntable\n", g.order()));
    for i in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|j| g.mul(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Materializes a permutation group from generators by BFS closure, then
/// builds the Cayley table. Element 0 is the identity; element ordering is BFS
/// discovery order (queue seeded with the identity, generators applied in file
/// order).
pub fn read_permgrp(text: &str) -> Result<Group> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty file"))?;
    if header.trim() != "%permgrp 1" {
        return Err(parse_err(ln, "expected `%permgrp 1` header"));
    }
    let mut name = None;
    let mut degree = None;
    let mut gens: Vec<Vec<u16>> = Vec::new();
    for (ln, line) in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("name ") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("degree ") {
            degree = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(ln, "bad degree"))?,
            );
        } else if let Some(rest) = line.strip_prefix("gen ") {
            let d = degree.ok_or_else(|| parse_err(ln, "`gen` before `degree`"))?;
            let images: Vec<u16> = rest
                .split_whitespace()
                .map(|t| t.parse::<u16>().map_err(|_| parse_err(ln, "bad image")))
                .collect::<Result<_>>()?;
            if images.len() != d {
                return Err(parse_err(ln, format!("expected {d} images, got {}", images.len())));
            }
            let mut seen = vec![false; d];
            for &im in &images {
                if (im as usize) >= d || seen[im as usize] {
                    return Err(parse_err(ln, "gen line is not a permutation"));
                }
                seen[im as usize] = true;
            }
            gens.push(images);
        } else {
            return Err(parse_err(ln, format!("unexpected line `{line}`")));
        }
    }
    let d = degree.ok_or_else(|| parse_err(0, "missing `degree`"))?;
    if gens.is_empty() {
        return Err(parse_err(0, "no generators"));
    }
    let cap = order_cap();
    let identity: Vec<u16> = (0..d as u16).collect();
    let mut elems: Vec<Vec<u16>> = vec![identity.clone()];
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let current = elems[head].clone();
        for g in &gens {
            // apply generator on the right: (x * g)(i) = x(g(i))
            let product: Vec<u16> = g.iter().map(|&i| current[i as usize]).collect();
            if !index.contains_key(&product) {
                if elems.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                index.insert(product.clone(), elems.len());
                elems.push(product);
            }
        }
        head += 1;
    }
    let n = elems.len();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let p: Vec<u16> = elems[j].iter().map(|&x| elems[i][x as usize]).collect();
                    index[&p]
                })
                .collect()
        })
        .collect();
    Group::from_table(&rows, name)
}

/// A constructor spec string, e.g. `dihedral:n=8` or
/// `product:cyclic:n=2*dihedral:n=8`.
pub fn parse_construct_spec(spec: &str) -> Result<Group> {
    let bad = |msg: &str| Error::OutOfRange(format!("spec `{spec}`: {msg}"));
    if let Some(rest) = spec.strip_prefix("product:") {
        // split at each '*' until both halves parse
        let mut last_err = bad("no `*` separator");
        for (pos, _) in rest.match_indices('*') {
            let (left, right) = (&rest[..pos], &rest[pos + 1..]);
            match (parse_construct_spec(left), parse_construct_spec(right)) {
                (Ok(a), Ok(b)) => return construct_direct_product(&a, &b),
                (Err(e), _) | (_, Err(e)) => last_err = e,
            }
        }
        return Err(last_err);
    }
    let (family, args) = match spec.split_once(':') {
        Some((f, a)) => (f, a),
        None => (spec, ""),
    };
    let mut params: HashMap<&str, &str> = HashMap::new();
    for pair in args.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        params.insert(k, v);
    }
    let num = |key: &str| -> Result<usize> {
        params
            .get(key)
            .ok_or_else(|| bad(&format!("missing {key}=")))?
            .parse()
            .map_err(|_| bad(&format!("bad {key}=")))
    };
    match family {
        "cyclic" => construct_cyclic(num("n")?),
        "dihedral" => construct_dihedral(num("n")?),
        "quaternion8" => construct_quaternion8(),
        "symmetric" => construct_symmetric(num("k")?),
        "alternating4" => construct_alternating4(),
        "heisenberg" => construct_heisenberg(num("p")?),
        "extraspecial" => {
            let variant = match params.get("variant").copied() {
                Some("+") => ExtraspecialVariant::Plus,
                Some("-") => ExtraspecialVariant::Minus,
                _ => return Err(bad("variant must be + or -")),
            };
            construct_extraspecial(num("p")?, num("a")?, variant)
        }
        _ => Err(bad("unknown family")),
    }
}

/// Loads a group file by extension (.grp or .permgrp).
pub fn read_group_file(path: &Path) -> Result<Group> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("permgrp") => read_permgrp(&text),
        _ => read_grp(&text),
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: Group,
    pub asserts: Vec<(String, String)>,
}

/// Manifest source line: a file path or a constructor spec.
#[derive(Clone, Debug)]
pub enum ManifestSource {
    File(String),
    Construct(String),
}

#[derive(Clone, Debug)]
pub struct ManifestItem {
    pub source: ManifestSource,
    pub asserts: Vec<(String, String)>,
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestItem>> {
    let mut items: Vec<ManifestItem> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let indented = raw.starts_with(' ') || raw.starts_with('\t');
        let line = raw.trim();
        if indented {
            let rest = line
                .strip_prefix("assert ")
                .ok_or_else(|| parse_err(ln, "indented line must be `assert <key> <value>`"))?;
            let (key, value) = rest
                .split_once(' ')
                .ok_or_else(|| parse_err(ln, "assert needs a key and a value"))?;
            let item = items
                .last_mut()
                .ok_or_else(|| parse_err(ln, "assert before any entry"))?;
            item.asserts.push((key.to_string(), value.trim().to_string()));
        } else if let Some(path) = line.strip_prefix("file ") {
            items.push(ManifestItem {
                source: ManifestSource::File(path.trim().to_string()),
                asserts: Vec::new(),
            });
        } else if let Some(spec) = line.strip_prefix("construct ") {
            items.push(ManifestItem {
                source: ManifestSource::Construct(spec.trim().to_string()),
                asserts: Vec::new(),
            });
        } else {
            return Err(parse_err(ln, format!("unexpected line `{line}`")));
        }
    }
    Ok(items)
}

/// Materializes every manifest entry. Loading continues past individual
/// failures; all errors are reported with their entry label.
pub fn load_corpus(
    text: &str,
    base_dir: &Path,
) -> Result<(Vec<CorpusEntry>, Vec<(String, Error)>)> {
    let items = parse_manifest(text)?;
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for item in items {
        let (label, result) = match &item.source {
            ManifestSource::File(p) => {
                let path = base_dir.join(p);
                (p.clone(), read_group_file(&path))
            }
            ManifestSource::Construct(spec) => (spec.clone(), parse_construct_spec(spec)),
        };
        match result {
            Ok(group) => {
                let name = group.name().map(str::to_string).unwrap_or_else(|| label.clone());
                entries.push(CorpusEntry {
                    name,
                    group,
                    asserts: item.asserts,
                });
            }
            Err(e) => errors.push((label, e)),
        }
    }
    Ok((entries, errors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_trivial_grp() {
        let g = read_grp("%grp 1\norder 1\ntable\n0\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn grp_round_trip_d8() {
        let d8 = construct_dihedral(8).unwrap();
        let text = write_grp(&d8);
        let back = read_grp(&text).unwrap();
        assert!(back.same_table(&d8));
        assert_eq!(back.name(), Some("D8"));
        assert_eq!(write_grp(&back), text);
    }

    #[test]
    fn grp_rejects_repeated_row_entry() {
        let text = "%grp 1\norder 2\ntable\n0 1\n1 1\n";
        assert!(read_grp(text).is_err());
    }

    #[test]
    fn grp_comments_ignored() {
        let g = read_grp("# a comment\n%grp 1\n# another\norder 1\ntable\n0\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn permgrp_s3() {
        let text = "%permgrp 1\nname S3\ndegree 3\ngen 1 2 0\ngen 1 0 2\n";
        let g = read_permgrp(text).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn permgrp_four_cycle() {
        let text = "%permgrp 1\ndegree 4\ngen 1 2 3 0\n";
        let g = read_permgrp(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(1), 4);
    }

    #[test]
    fn permgrp_closure_independent_of_generator_order() {
        let a = read_permgrp("%permgrp 1\ndegree 4\ngen 1 2 3 0\ngen 1 0 2 3\n").unwrap();
        let b = read_permgrp("%permgrp 1\ndegree 4\ngen 1 0 2 3\ngen 1 2 3 0\n").unwrap();
        assert_eq!(a.order(), 24);
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn permgrp_rejects_non_permutation() {
        let text = "%permgrp 1\ndegree 3\ngen 1 1 0\n";
        assert!(read_permgrp(text).is_err());
    }

    #[test]
    fn construct_spec_grammar() {
        assert_eq!(parse_construct_spec("cyclic:n=6").unwrap().order(), 6);
        assert_eq!(parse_construct_spec("quaternion8").unwrap().order(), 8);
        assert_eq!(
            parse_construct_spec("extraspecial:p=3,a=1,variant=+").unwrap().order(),
            27
        );
        assert_eq!(
            parse_construct_spec("product:cyclic:n=2*dihedral:n=8").unwrap().order(),
            16
        );
        assert!(matches!(
            parse_construct_spec("extraspecial:p=4,a=1,variant=+"),
            Err(Error::NotPrime(4))
        ));
        assert!(parse_construct_spec("nonsense:x=1").is_err());
    }

    #[test]
    fn manifest_empty_and_mixed() {
        assert!(parse_manifest("").unwrap().is_empty());
        let text = "construct dihedral:n=8\n  assert order 8\nfile missing.grp\n";
        let (entries, errors) = load_corpus(text, Path::new("/nonexistent")).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].asserts, vec![("order".to_string(), "8".to_string())]);
        assert_eq!(errors.len(), 1);
    }

    #[test]
    fn manifest_constructor_suite() {
        let text = "construct cyclic:n=1\nconstruct cyclic:n=6\nconstruct dihedral:n=8\n\
                    construct quaternion8\nconstruct symmetric:k=4\nconstruct alternating4\n\
                    construct heisenberg:p=3\n";
        let (entries, errors) = load_corpus(text, Path::new(".")).unwrap();
        assert_eq!(entries.len(), 7);
        assert!(errors.is_empty());
    }
}
