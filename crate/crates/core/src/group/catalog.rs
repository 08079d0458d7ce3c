use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{cyclic, direct_product, FiniteGroup};
use crate::error::{Error, Result};

/// One group of a catalog file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// Named groups, in listing order.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    groups: Vec<FiniteGroup>,
    by_name: HashMap<String, usize>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&FiniteGroup> {
        self.by_name.get(name).map(|&i| &self.groups[i])
    }

    pub fn require(&self, name: &str) -> Result<FiniteGroup> {
        self.get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    fn insert(&mut self, g: FiniteGroup) {
        match self.by_name.get(g.name()) {
            Some(&i) => self.groups[i] = g,
            None => {
                self.by_name.insert(g.name().to_string(), self.groups.len());
                self.groups.push(g);
            }
        }
    }

    /// Parses a catalog file: a JSON array of `{name, order, table}`.
    pub fn parse_json(text: &str) -> Result<Vec<FiniteGroup>> {
        let entries: Vec<CatalogEntry> = serde_json::from_str(text)?;
        entries
            .into_iter()
            .map(|e| {
                if e.name == "1" {
                    return Err(Error::Parse("the trivial group `1` is builtin".into()));
                }
                if e.table.len() != e.order {
                    return Err(Error::InvalidTable {
                        group: e.name.clone(),
                        reason: format!(
                            "declared order {} but table has {} rows",
                            e.order,
                            e.table.len()
                        ),
                    });
                }
                FiniteGroup::from_table(e.name, &e.table)
            })
            .collect()
    }

    /// The builtin catalog with the groups of `text` merged over it.
    pub fn with_overrides(text: &str) -> Result<Catalog> {
        let mut cat = builtin_catalog().clone();
        for g in Self::parse_json(text)? {
            cat.insert(g);
        }
        Ok(cat)
    }

    pub fn load(path: &std::path::Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)?;
        Self::with_overrides(&text)
    }

    pub fn to_entries(&self) -> Vec<CatalogEntry> {
        self.groups
            .iter()
            .map(|g| CatalogEntry {
                name: g.name().to_string(),
                order: g.order(),
                table: g.table(),
            })
            .collect()
    }
}

/// Closure of permutation generators, elements sorted lexicographically so
/// the identity permutation is index 0.
fn permutation_group(name: &str, degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            // (x * s)(p) = s(x(p)): apply x first.
            let y: Vec<usize> = elems[i].iter().map(|&p| s[p]).collect();
            if !elems.contains(&y) {
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort();
    let index: HashMap<Vec<usize>, usize> =
        elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index[&a.iter().map(|&p| b[p]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    FiniteGroup::from_table(name, &table).expect("permutation group table")
}

fn quaternion_group() -> FiniteGroup {
    // element = (sign, unit) with units 1, i, j, k; index = 2*unit + sign
    // giving 1, -1, i, -i, j, -j, k, -k.
    const UNIT: [[(u8, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (ua, sa) = (a / 2, a % 2);
                    let (ub, sb) = (b / 2, b % 2);
                    let (s, u) = UNIT[ua][ub];
                    2 * u + ((sa + sb + s as usize) % 2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table("Q8", &table).expect("Q8 table")
}

/// 1, C2, C3, C4, V4, S3, C6, C8, C4xC2, C2^3, D8, Q8.
pub fn builtin_catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        let mut cat = Catalog::default();
        let c2 = cyclic(2, "C2");
        let c4 = cyclic(4, "C4");
        cat.insert(FiniteGroup::trivial());
        cat.insert(c2.clone());
        cat.insert(cyclic(3, "C3"));
        cat.insert(c4.clone());
        cat.insert(direct_product(&[c2.clone(), c2.clone()]).flattened("V4"));
        cat.insert(permutation_group("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]));
        cat.insert(cyclic(6, "C6"));
        cat.insert(cyclic(8, "C8"));
        cat.insert(direct_product(&[c4, c2.clone()]).flattened("C4xC2"));
        cat.insert(direct_product(&[c2.clone(), c2.clone(), c2]).flattened("C2^3"));
        cat.insert(permutation_group("D8", 4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]));
        cat.insert(quaternion_group());
        cat
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_groups_are_groups() {
        let cat = builtin_catalog();
        let expected = [
            ("1", 1),
            ("C2", 2),
            ("C3", 3),
            ("C4", 4),
            ("V4", 4),
            ("S3", 6),
            ("C6", 6),
            ("C8", 8),
            ("C4xC2", 8),
            ("C2^3", 8),
            ("D8", 8),
            ("Q8", 8),
        ];
        assert_eq!(cat.len(), expected.len());
        for (name, order) in expected {
            let g = cat.get(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            g.check_associative().unwrap();
            for x in g.elements() {
                assert_eq!(g.inv(g.inv(x)), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
            }
        }
        assert!(!cat.get("D8").unwrap().is_abelian());
        assert_eq!(cat.get("Q8").unwrap().center().len(), 2);
        assert_eq!(cat.get("D8").unwrap().center().len(), 2);
        assert!(cat.get("Q8").unwrap().elements().filter(|&x| x != 0).all(|x| {
            let q = cat.get("Q8").unwrap();
            q.element_order(x) > 2 || x == 1
        }));
    }

    #[test]
    fn catalog_json_loading() {
        let text = r#"[{"name": "Z2", "order": 2, "table": [[0,1],[1,0]]}]"#;
        let cat = Catalog::with_overrides(text).unwrap();
        assert_eq!(cat.get("Z2").unwrap().order(), 2);
        assert_eq!(cat.len(), builtin_catalog().len() + 1);

        let bad = r#"[{"name": "B", "order": 3, "table": [[0,1,2],[1,2,0],[2,1,0]]}]"#;
        let err = Catalog::with_overrides(bad).unwrap_err().to_string();
        assert!(err.contains('B'), "{err}");

        let mismatch = r#"[{"name": "M", "order": 3, "table": [[0,1],[1,0]]}]"#;
        assert!(Catalog::with_overrides(mismatch).is_err());
        assert!(Catalog::with_overrides("not json").is_err());
    }

    #[test]
    fn round_trip_entries() {
        let entries = builtin_catalog().to_entries();
        let text = serde_json::to_string(&entries[1..]).unwrap();
        let groups = Catalog::parse_json(&text).unwrap();
        assert_eq!(groups.len(), entries.len() - 1);
        assert_eq!(groups[4].table(), builtin_catalog().get("S3").unwrap().table());
    }
}
