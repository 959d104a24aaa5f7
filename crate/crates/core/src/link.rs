//! Combinatorial link diagrams and the invariants w, w_λ and lk.

use num_rational::Rational64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("cannot parse visit {0}")]
    BadVisit(String),
    #[error("crossing {0} is visited {1} times")]
    VisitCount(String, usize),
    #[error("crossing {0} carries different signs at its two visits")]
    SignMismatch(String),
    #[error("crossing {0} must be visited once over and once under")]
    OverUnderMismatch(String),
    #[error("bad solitary sign {0}")]
    BadSolitary(String),
    #[error("{count} nodes exceed N_d - g = {bound}")]
    TooManyNodes { count: usize, bound: i64 },
    #[error("component {0} out of range")]
    ComponentOutOfRange(usize),
    #[error("{components} components but genus {genus}")]
    ComponentCountMismatch { components: usize, genus: i64 },
    #[error("degree and genus are required")]
    MissingMeta,
}

/// `link-diagram.v1` wire format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawLinkDiagram {
    pub components: Vec<Vec<String>>,
    #[serde(default)]
    pub solitary: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub id: String,
    pub component_a: usize,
    pub component_b: usize,
    /// ±1; 0 for a spatial node.
    pub sign: i8,
    pub same_branch: bool,
    pub node: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Visit {
    crossing: usize,
    over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    components: Vec<Vec<Visit>>,
    pub crossings: Vec<Crossing>,
    /// Some(±1) or None for unknown.
    pub solitary: Vec<Option<i8>>,
    pub degree: Option<i64>,
    pub genus: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InvariantReport {
    pub w: Option<i64>,
    pub w_lambda: Option<i64>,
    pub lk_matrix: Vec<Vec<f64>>,
    pub n_d: Option<i64>,
    pub mw: bool,
    pub mw_lambda: bool,
}

pub fn n_d(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

enum Token {
    Cross { id: String, sign: i8, over: bool },
    Node { id: String },
}

fn parse_visit(s: &str) -> Result<Token, LinkError> {
    let bad = || LinkError::BadVisit(s.to_string());
    if let Some(rest) = s.strip_prefix('X') {
        let n = rest.len();
        if n < 3 {
            return Err(bad());
        }
        let (id, tail) = rest.split_at(n - 2);
        let sign = match &tail[..1] {
            "+" => 1,
            "-" => -1,
            _ => return Err(bad()),
        };
        let over = match &tail[1..] {
            "o" => true,
            "u" => false,
            _ => return Err(bad()),
        };
        if id.is_empty() {
            return Err(bad());
        }
        Ok(Token::Cross { id: format!("X{id}"), sign, over })
    } else if s.starts_with('N') && s.len() > 1 {
        Ok(Token::Node { id: s.to_string() })
    } else {
        Err(bad())
    }
}

impl LinkDiagram {
    pub fn from_raw(raw: &RawLinkDiagram) -> Result<Self, LinkError> {
        struct Acc {
            index: usize,
            visits: Vec<(usize, i8, bool, bool)>, // component, sign, over, node
        }
        let mut acc: BTreeMap<String, Acc> = BTreeMap::new();
        let mut order = Vec::new();
        let mut comps = Vec::new();
        for (ci, comp) in raw.components.iter().enumerate() {
            let mut v = Vec::new();
            for tok in comp {
                let (id, sign, over, node) = match parse_visit(tok)? {
                    Token::Cross { id, sign, over } => (id, sign, over, false),
                    Token::Node { id } => (id, 0, false, true),
                };
                let next = acc.len();
                let e = acc.entry(id.clone()).or_insert_with(|| {
                    order.push(id.clone());
                    Acc { index: next, visits: Vec::new() }
                });
                e.visits.push((ci, sign, over, node));
                v.push(Visit { crossing: e.index, over });
            }
            comps.push(v);
        }
        let mut crossings = Vec::with_capacity(order.len());
        for id in &order {
            let a = &acc[id];
            if a.visits.len() != 2 {
                return Err(LinkError::VisitCount(id.clone(), a.visits.len()));
            }
            let (c0, s0, o0, n0) = a.visits[0];
            let (c1, s1, o1, n1) = a.visits[1];
            if n0 != n1 || s0 != s1 {
                return Err(LinkError::SignMismatch(id.clone()));
            }
            if !n0 && o0 == o1 {
                return Err(LinkError::OverUnderMismatch(id.clone()));
            }
            crossings.push(Crossing {
                id: id.clone(),
                component_a: c0.min(c1),
                component_b: c0.max(c1),
                sign: s0,
                same_branch: c0 == c1,
                node: n0,
            });
        }
        let solitary = raw
            .solitary
            .iter()
            .map(|s| match s.as_str() {
                "+" | "+1" => Ok(Some(1)),
                "-" | "-1" => Ok(Some(-1)),
                "?" => Ok(None),
                _ => Err(LinkError::BadSolitary(s.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ld = LinkDiagram { components: comps, crossings, solitary, degree: raw.degree, genus: raw.genus };
        if let (Some(d), Some(g)) = (raw.degree, raw.genus) {
            let bound = n_d(d) - g;
            let count = ld.crossings.len() + ld.solitary.len();
            if count as i64 > bound {
                return Err(LinkError::TooManyNodes { count, bound });
            }
        }
        Ok(ld)
    }

    pub fn to_raw(&self) -> RawLinkDiagram {
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| {
                        let x = &self.crossings[v.crossing];
                        if x.node {
                            x.id.clone()
                        } else {
                            format!(
                                "{}{}{}",
                                x.id,
                                if x.sign > 0 { '+' } else { '-' },
                                if v.over { 'o' } else { 'u' }
                            )
                        }
                    })
                    .collect()
            })
            .collect();
        let solitary = self
            .solitary
            .iter()
            .map(|s| match s {
                Some(1) => "+".to_string(),
                Some(_) => "-".to_string(),
                None => "?".to_string(),
            })
            .collect();
        RawLinkDiagram { components, solitary, degree: self.degree, genus: self.genus }
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    fn real_crossings(&self) -> impl Iterator<Item = &Crossing> {
        self.crossings.iter().filter(|c| !c.node)
    }

    pub fn spatial_node_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.node).count()
    }

    /// Same-branch crossing signs plus solitary signs; None if a solitary sign is unknown.
    pub fn writhe_w(&self) -> Option<i64> {
        let mut w: i64 = self.real_crossings().filter(|c| c.same_branch).map(|c| c.sign as i64).sum();
        for s in &self.solitary {
            w += (*s)? as i64;
        }
        Some(w)
    }

    /// 2·lk(i, j).
    pub fn doubled_linking(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        let n = self.num_components();
        if i >= n {
            return Err(LinkError::ComponentOutOfRange(i));
        }
        if j >= n {
            return Err(LinkError::ComponentOutOfRange(j));
        }
        if i == j {
            return Ok(0);
        }
        let (a, b) = (i.min(j), i.max(j));
        Ok(self
            .real_crossings()
            .filter(|c| c.component_a == a && c.component_b == b)
            .map(|c| c.sign as i64)
            .sum())
    }

    pub fn linking_number(&self, i: usize, j: usize) -> Result<Rational64, LinkError> {
        Ok(Rational64::new(self.doubled_linking(i, j)?, 2))
    }

    pub fn doubled_lk_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_components();
        (0..n).map(|i| (0..n).map(|j| self.doubled_linking(i, j).unwrap()).collect()).collect()
    }

    /// w plus the inter-branch crossing signs; also computed as w + 2Σ lk and checked.
    pub fn w_lambda(&self) -> Option<i64> {
        let w = self.writhe_w()?;
        let by_crossings = w + self.real_crossings().filter(|c| !c.same_branch).map(|c| c.sign as i64).sum::<i64>();
        let n = self.num_components();
        let mut doubled = 0;
        for i in 0..n {
            for j in i + 1..n {
                doubled += self.doubled_linking(i, j).unwrap();
            }
        }
        assert_eq!(by_crossings, w + doubled, "w_lambda identity violated");
        Some(by_crossings)
    }

    fn single_sign(&self) -> Option<i8> {
        let mut it = self.real_crossings().map(|c| c.sign);
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    pub fn is_mw(&self) -> Result<bool, LinkError> {
        let (Some(d), Some(g)) = (self.degree, self.genus) else {
            return Err(LinkError::MissingMeta);
        };
        if g != 0 || self.num_components() != 1 || !self.solitary.is_empty() || self.spatial_node_count() > 0 {
            return Ok(false);
        }
        if self.single_sign().is_none() && !self.crossings.is_empty() {
            return Ok(false);
        }
        Ok(self.writhe_w().map(|w| w.abs()) == Some(n_d(d)))
    }

    pub fn is_mw_lambda(&self) -> Result<bool, LinkError> {
        let (Some(d), Some(g)) = (self.degree, self.genus) else {
            return Err(LinkError::MissingMeta);
        };
        if self.num_components() as i64 != g + 1 {
            return Err(LinkError::ComponentCountMismatch { components: self.num_components(), genus: g });
        }
        if !self.solitary.is_empty() {
            return Ok(false);
        }
        if self.single_sign().is_none() && self.real_crossings().next().is_some() {
            return Ok(false);
        }
        let target = n_d(d) - g - self.spatial_node_count() as i64;
        Ok(self.w_lambda().map(|w| w.abs()) == Some(target))
    }

    pub fn report(&self) -> InvariantReport {
        let n = self.num_components();
        let lk = (0..n)
            .map(|i| (0..n).map(|j| self.doubled_linking(i, j).unwrap() as f64 / 2.0).collect())
            .collect();
        InvariantReport {
            w: self.writhe_w(),
            w_lambda: self.w_lambda(),
            lk_matrix: lk,
            n_d: self.degree.map(n_d),
            mw: self.is_mw().unwrap_or(false),
            mw_lambda: self.is_mw_lambda().unwrap_or(false),
        }
    }

    /// Every crossing and solitary sign flipped.
    pub fn mirrored(&self) -> LinkDiagram {
        let mut m = self.clone();
        for c in &mut m.crossings {
            c.sign = -c.sign;
        }
        for s in &mut m.solitary {
            *s = s.map(|x| -x);
        }
        m
    }

    /// All components traversed backwards.
    pub fn reversed(&self) -> LinkDiagram {
        let mut m = self.clone();
        for c in &mut m.components {
            c.reverse();
        }
        m
    }

    /// Assemble a diagram from crossing data: for each crossing (over component,
    /// under component, sign), its visits are placed at the given positions
    /// (sorting keys along each component).
    pub fn from_crossing_data(
        ncomponents: usize,
        crossings: &[(usize, f64, usize, f64, i8)],
        solitary: Vec<Option<i8>>,
        degree: Option<i64>,
        genus: Option<i64>,
    ) -> LinkDiagram {
        let mut per: Vec<Vec<(f64, Visit)>> = vec![Vec::new(); ncomponents];
        let mut out = Vec::new();
        for (k, &(co, to, cu, tu, sign)) in crossings.iter().enumerate() {
            per[co].push((to, Visit { crossing: k, over: true }));
            per[cu].push((tu, Visit { crossing: k, over: false }));
            out.push(Crossing {
                id: format!("X{}", k + 1),
                component_a: co.min(cu),
                component_b: co.max(cu),
                sign,
                same_branch: co == cu,
                node: false,
            });
        }
        let components = per
            .into_iter()
            .map(|mut v| {
                v.sort_by(|a, b| a.0.total_cmp(&b.0));
                v.into_iter().map(|x| x.1).collect()
            })
            .collect();
        LinkDiagram { components, crossings: out, solitary, degree, genus }
    }
}

/// Random diagram with known solitary signs, for property tests and benches.
pub fn random_link_diagram<R: Rng>(rng: &mut R, max_components: usize, max_crossings: usize) -> LinkDiagram {
    let n = rng.gen_range(1..=max_components);
    let k = rng.gen_range(0..=max_crossings);
    let data: Vec<_> = (0..k)
        .map(|_| {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            (a, rng.gen::<f64>(), b, rng.gen::<f64>(), s)
        })
        .collect();
    let sol = (0..rng.gen_range(0..3)).map(|_| Some(if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    LinkDiagram::from_crossing_data(n, &data, sol, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ld(comps: &[&[&str]], sol: &[&str], d: Option<i64>, g: Option<i64>) -> Result<LinkDiagram, LinkError> {
        LinkDiagram::from_raw(&RawLinkDiagram {
            components: comps.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect(),
            solitary: sol.iter().map(|s| s.to_string()).collect(),
            degree: d,
            genus: g,
        })
    }

    #[test]
    fn writhe_examples() {
        let k = ld(&[&["X1+o", "X2+u", "X3+o", "X1+u", "X2+o", "X3+u"]], &[], None, None).unwrap();
        assert_eq!(k.writhe_w(), Some(3));
        let two = ld(&[&["X1+o", "X2+u"], &["X1+u", "X2+o"]], &[], None, None).unwrap();
        assert_eq!(two.writhe_w(), Some(0));
        let s = ld(&[&[]], &["?"], None, None).unwrap();
        assert_eq!(s.writhe_w(), None);
    }

    #[test]
    fn linking_examples() {
        let two = ld(&[&["X1+o", "X2+u"], &["X1+u", "X2+o"]], &[], None, None).unwrap();
        assert_eq!(two.linking_number(0, 1).unwrap(), Rational64::from_integer(1));
        let four = ld(
            &[&["X1+o", "X2+o", "X3+o", "X4-o"], &["X1+u", "X2+u", "X3+u", "X4-u"]],
            &[],
            None,
            None,
        )
        .unwrap();
        assert_eq!(four.linking_number(0, 1).unwrap(), Rational64::from_integer(1));
        assert!(matches!(four.linking_number(0, 5), Err(LinkError::ComponentOutOfRange(5))));
    }

    #[test]
    fn hopf_link_is_mw_lambda() {
        let h = ld(&[&["X1+o", "X2+u"], &["X1+u", "X2+o"]], &[], Some(4), Some(1)).unwrap();
        assert_eq!(h.writhe_w(), Some(0));
        assert_eq!(h.w_lambda(), Some(2));
        assert!(h.is_mw_lambda().unwrap());
        let f = ld(&[&["X1+o", "X2-u"], &["X1+u", "X2-o"]], &[], Some(4), Some(1)).unwrap();
        assert_eq!(f.w_lambda(), Some(0));
        assert!(!f.is_mw_lambda().unwrap());
        let three = ld(&[&[], &[], &[]], &[], Some(4), Some(1)).unwrap();
        assert!(matches!(three.is_mw_lambda(), Err(LinkError::ComponentCountMismatch { .. })));
    }

    #[test]
    fn mw_knots() {
        let t = ld(&[&["X1+o", "X1+u"]], &[], Some(3), Some(0)).unwrap();
        assert!(t.is_mw().unwrap());
        let mixed: Vec<String> = (1..=6)
            .flat_map(|i| {
                let s = if i == 6 { '-' } else { '+' };
                vec![format!("X{i}{s}o"), format!("X{i}{s}u")]
            })
            .collect();
        let refs: Vec<&str> = mixed.iter().map(|s| s.as_str()).collect();
        let k = ld(&[&refs], &[], Some(5), Some(0)).unwrap();
        assert_eq!(k.writhe_w(), Some(4));
        assert!(!k.is_mw().unwrap());
        let s = ld(&[&[]], &["+"], Some(3), Some(0)).unwrap();
        assert!(!s.is_mw().unwrap());
    }

    #[test]
    fn node_bound_enforced() {
        let r = ld(&[&["X1+o", "X1+u", "X2+o", "X2+u"]], &[], Some(3), Some(0));
        assert!(matches!(r, Err(LinkError::TooManyNodes { .. })));
    }

    #[test]
    fn wire_round_trip() {
        let raw = RawLinkDiagram {
            components: vec![vec!["X1+o".into(), "N1".into(), "X1+u".into(), "N1".into()]],
            solitary: vec!["?".into()],
            degree: Some(4),
            genus: Some(0),
        };
        let d = LinkDiagram::from_raw(&raw).unwrap();
        assert_eq!(d.spatial_node_count(), 1);
        assert_eq!(d.to_raw(), raw);
    }
}
