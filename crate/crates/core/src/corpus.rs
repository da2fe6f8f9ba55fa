//! Bundled graph codes: the 34 order-14 census rows with toric boundary and
//! three 12-vertex graphs of tetrahedral manifolds.

const TABLE1_TSV: &str = include_str!("../data/table1.tsv");
const TETRAHEDRAL_TSV: &str = include_str!("../data/tetrahedral.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    /// `14^k_n`: the n-th manifold with k boundary components.
    pub name: String,
    pub code: String,
    pub boundary_components: usize,
    /// Link whose exterior the manifold is; `None` when it is not a link
    /// complement. Composite links are recorded as `"nonprime"`.
    pub link: Option<String>,
}

impl Table1Row {
    pub fn is_link_complement(&self) -> bool {
        self.link.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetrahedralBase {
    pub name: String,
    pub code: String,
    pub manifold: String,
    /// Number of regular ideal tetrahedra in the manifold's decomposition.
    pub tetrahedra: usize,
}

fn records(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').collect())
}

pub fn table1() -> Vec<Table1Row> {
    records(TABLE1_TSV)
        .map(|f| Table1Row {
            name: f[0].to_string(),
            code: f[1].to_string(),
            boundary_components: f[2].parse().expect("boundary count"),
            link: (f[3] != "-").then(|| f[3].to_string()),
        })
        .collect()
}

pub fn tetrahedral_bases() -> Vec<TetrahedralBase> {
    records(TETRAHEDRAL_TSV)
        .map(|f| TetrahedralBase {
            name: f[0].to_string(),
            code: f[1].to_string(),
            manifold: f[2].to_string(),
            tetrahedra: f[3].parse().expect("tetrahedra count"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_shape() {
        let rows = table1();
        assert_eq!(rows.len(), 34);
        assert_eq!(rows.iter().filter(|r| r.is_link_complement()).count(), 30);
        let by_k = |k| rows.iter().filter(|r| r.boundary_components == k).count();
        assert_eq!((by_k(2), by_k(3), by_k(4), by_k(5)), (3, 10, 18, 3));
        assert!(rows.iter().all(|r| r.code.len() == 21));
        let first = &rows[0];
        assert_eq!(first.name, "14^2_1");
        assert_eq!(first.code, "EABCDGFGDFEBCADGEFBAC");
        assert_eq!(first.link.as_deref(), Some("L6a3"));
    }

    #[test]
    fn tetrahedral_shape() {
        let bases = tetrahedral_bases();
        assert_eq!(bases.len(), 3);
        assert_eq!(bases[0].code, "DABCFEFEABDCCDEFAB");
        assert_eq!(bases[1].code, "FABCDEDEFABCCDEFAB");
        assert_eq!(bases[2].code, "DABCFEFEDABCBCFEDA");
        assert!(bases.iter().all(|b| b.tetrahedra == 10));
    }
}
