//! Finite groupoids: small categories in which every morphism is invertible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a morphism inside a [`FiniteGroupoid`].
pub type Mor = usize;
/// Index of an object inside a [`FiniteGroupoid`].
pub type Obj = usize;

/// Raw morphism record as read from input: ids are resolved later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub id: String,
    pub dom: String,
    pub cod: String,
    pub inv: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupoidAxiom {
    Composability,
    MissingComposite,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for GroupoidAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupoidAxiom::Composability => "composability",
            GroupoidAxiom::MissingComposite => "missing-composite",
            GroupoidAxiom::Identity => "identity",
            GroupoidAxiom::Inverse => "inverse",
            GroupoidAxiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidViolation {
    pub axiom: GroupoidAxiom,
    pub witness: String,
}

impl fmt::Display for GroupoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

/// `G(source, target)`: morphisms with domain `source` and codomain `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSet {
    pub source: Obj,
    pub target: Obj,
    pub morphisms: Vec<Mor>,
}

/// Counts behind the finiteness criterion for `mor(G)`: every nonempty
/// hom-set `G(e,f)` has the size of the isotropy group `G_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMorReport {
    pub finite: bool,
    pub isotropy_orders: Vec<(String, usize)>,
    pub hom_sets: Vec<HomCount>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub source: String,
    pub target: String,
    pub size: usize,
    pub isotropy: usize,
}

impl FiniteMorReport {
    pub fn counting_identity_holds(&self) -> bool {
        self.hom_sets.iter().all(|h| h.size == h.isotropy)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    inverse: Vec<Mor>,
    identity: Vec<Mor>,
    /// Row-major `n × n`; `compose[g*n + h] = gh` where recorded.
    compose: Vec<Option<Mor>>,
    /// Table entries for pairs that are not composable.
    stray: Vec<(Mor, Mor, Mor)>,
}

fn index_of(ids: &[String], id: &str, kind: &'static str) -> Result<usize> {
    ids.iter()
        .position(|x| x == id)
        .ok_or_else(|| Error::Lookup {
            kind,
            id: id.to_string(),
        })
}

impl FiniteGroupoid {
    /// Assembles a groupoid from raw tables without checking the axioms.
    /// Missing identities are inferred: an idempotent endomorphism of `e`
    /// if one exists, otherwise a new morphism `id:<e>` is added together
    /// with its composites.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorphismSpec>,
        compose: Vec<(String, String, String)>,
    ) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::EmptyInput("groupoid has no objects".into()));
        }
        let mut obj_ids: Vec<String> = Vec::new();
        for o in objects {
            if obj_ids.contains(&o) {
                return Err(Error::Parse(format!("duplicate object `{o}`")));
            }
            obj_ids.push(o);
        }
        let mut mor_ids: Vec<String> = Vec::new();
        for m in &morphisms {
            if mor_ids.contains(&m.id) {
                return Err(Error::Parse(format!("duplicate morphism `{}`", m.id)));
            }
            mor_ids.push(m.id.clone());
        }
        let mut dom = Vec::new();
        let mut cod = Vec::new();
        let mut inverse = Vec::new();
        for m in &morphisms {
            dom.push(index_of(&obj_ids, &m.dom, "object")?);
            cod.push(index_of(&obj_ids, &m.cod, "object")?);
            inverse.push(index_of(&mor_ids, &m.inv, "morphism")?);
        }
        // Composites may name inferred identities, so only entries among
        // declared morphisms are used to detect idempotents.
        let declared: Vec<(Mor, Mor, Mor)> = compose
            .iter()
            .filter_map(|(g, h, gh)| {
                Some((
                    index_of(&mor_ids, g, "morphism").ok()?,
                    index_of(&mor_ids, h, "morphism").ok()?,
                    index_of(&mor_ids, gh, "morphism").ok()?,
                ))
            })
            .collect();

        let mut identity = Vec::new();
        let mut injected = Vec::new();
        for (e, name) in obj_ids.iter().enumerate() {
            let named = format!("id:{name}");
            let loops: Vec<Mor> = (0..mor_ids.len())
                .filter(|&g| dom[g] == e && cod[g] == e)
                .collect();
            let found = loops
                .iter()
                .copied()
                .find(|&g| mor_ids[g] == named)
                .or_else(|| {
                    loops
                        .iter()
                        .copied()
                        .find(|&g| declared.iter().any(|&(a, b, c)| a == g && b == g && c == g))
                });
            match found {
                Some(g) => identity.push(g),
                None => {
                    let g = mor_ids.len();
                    mor_ids.push(named);
                    dom.push(e);
                    cod.push(e);
                    inverse.push(g);
                    identity.push(g);
                    injected.push(g);
                }
            }
        }
        let mut triples = Vec::new();
        for (g, h, gh) in &compose {
            triples.push((
                index_of(&mor_ids, g, "morphism")?,
                index_of(&mor_ids, h, "morphism")?,
                index_of(&mor_ids, gh, "morphism")?,
            ));
        }
        for &i in &injected {
            let e = dom[i];
            for g in 0..mor_ids.len() {
                if cod[g] == e {
                    triples.push((i, g, g));
                }
                if dom[g] == e && g != i {
                    triples.push((g, i, g));
                }
            }
        }

        let n = mor_ids.len();
        let mut table = vec![None; n * n];
        let mut stray = Vec::new();
        for (g, h, gh) in triples {
            if dom[g] != cod[h] {
                stray.push((g, h, gh));
                continue;
            }
            match table[g * n + h] {
                Some(prev) if prev != gh => {
                    return Err(Error::Parse(format!(
                        "conflicting composites for ({}, {})",
                        mor_ids[g], mor_ids[h]
                    )))
                }
                _ => table[g * n + h] = Some(gh),
            }
        }
        Ok(FiniteGroupoid {
            objects: obj_ids,
            morphisms: mor_ids,
            dom,
            cod,
            inverse,
            identity,
            compose: table,
            stray,
        })
    }

    /// [`from_parts`](Self::from_parts) followed by validation.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismSpec>,
        compose: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let g = Self::from_parts(objects, morphisms, compose)?;
        g.into_validated()
    }

    fn into_validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidGroupoid(
                v.iter().map(|x| x.to_string()).collect(),
            ))
        }
    }

    /// One-object groupoid of a group given by its multiplication table
    /// (`table[a][b]` is the index of `ab`).
    pub fn from_group(elements: &[String], table: &[Vec<usize>]) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::EmptyInput("group has no elements".into()));
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::NotAGroup(
                "table is not n×n over the elements".into(),
            ));
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "({} {}) {} is not associative",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let mut morphisms = Vec::new();
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == unit && table[b][a] == unit)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", elements[a])))?;
            morphisms.push(MorphismSpec {
                id: elements[a].clone(),
                dom: "*".into(),
                cod: "*".into(),
                inv: elements[inv].clone(),
            });
        }
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                compose.push((
                    elements[a].clone(),
                    elements[b].clone(),
                    elements[table[a][b]].clone(),
                ));
            }
        }
        Self::new(vec!["*".into()], morphisms, compose)
    }

    /// The cyclic group `ℤ/n` with elements `e, a, a^2, …`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let names: Vec<String> = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Self::from_group(&names, &table)
    }

    /// The pair groupoid on `{0, …, n-1}`: morphisms `(i,j)` from `j` to `i`
    /// with `(i,j)(j,k) = (i,k)`.
    pub fn pair_groupoid(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput(
                "pair groupoid needs at least one object".into(),
            ));
        }
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let name = |i: usize, j: usize| format!("({i},{j})");
        let mut morphisms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                morphisms.push(MorphismSpec {
                    id: name(i, j),
                    dom: j.to_string(),
                    cod: i.to_string(),
                    inv: name(j, i),
                });
            }
        }
        let mut compose = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    compose.push((name(i, j), name(j, k), name(i, k)));
                }
            }
        }
        Self::new(objects, morphisms, compose)
    }

    /// Copy with every object and morphism id prefixed by `prefix`.
    pub fn with_prefix(&self, prefix: &str) -> Self {
        let mut g = self.clone();
        for o in &mut g.objects {
            *o = format!("{prefix}{o}");
        }
        for m in &mut g.morphisms {
            *m = format!("{prefix}{m}");
        }
        g
    }

    /// Disjoint union; ids must not collide.
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Result<Self> {
        for o in &other.objects {
            if self.objects.contains(o) {
                return Err(Error::Precondition(format!(
                    "object `{o}` appears in both groupoids"
                )));
            }
        }
        for m in &other.morphisms {
            if self.morphisms.contains(m) {
                return Err(Error::Precondition(format!(
                    "morphism `{m}` appears in both groupoids"
                )));
            }
        }
        let (no, nm) = (self.objects.len(), self.morphisms.len());
        let n = nm + other.morphisms.len();
        let mut compose = vec![None; n * n];
        for g in 0..nm {
            for h in 0..nm {
                compose[g * n + h] = self.compose[g * nm + h];
            }
        }
        let om = other.morphisms.len();
        for g in 0..om {
            for h in 0..om {
                compose[(g + nm) * n + h + nm] = other.compose[g * om + h].map(|x| x + nm);
            }
        }
        let cat = |a: &[String], b: &[String]| a.iter().chain(b).cloned().collect::<Vec<_>>();
        Ok(FiniteGroupoid {
            objects: cat(&self.objects, &other.objects),
            morphisms: cat(&self.morphisms, &other.morphisms),
            dom: self
                .dom
                .iter()
                .copied()
                .chain(other.dom.iter().map(|x| x + no))
                .collect(),
            cod: self
                .cod
                .iter()
                .copied()
                .chain(other.cod.iter().map(|x| x + no))
                .collect(),
            inverse: self
                .inverse
                .iter()
                .copied()
                .chain(other.inverse.iter().map(|x| x + nm))
                .collect(),
            identity: self
                .identity
                .iter()
                .copied()
                .chain(other.identity.iter().map(|x| x + nm))
                .collect(),
            compose,
            stray: self
                .stray
                .iter()
                .copied()
                .chain(
                    other
                        .stray
                        .iter()
                        .map(|&(a, b, c)| (a + nm, b + nm, c + nm)),
                )
                .collect(),
        })
    }

    /// Full subgroupoid on the given objects. Returns it together with the
    /// original index of each kept morphism, in order.
    pub fn full_subgroupoid(&self, objects: &[Obj]) -> Result<(FiniteGroupoid, Vec<Mor>)> {
        if objects.is_empty() {
            return Err(Error::EmptyInput(
                "subgroupoid needs at least one object".into(),
            ));
        }
        let mut keep_obj: Vec<Obj> = objects.to_vec();
        keep_obj.sort_unstable();
        keep_obj.dedup();
        let obj_map: HashMap<Obj, Obj> =
            keep_obj.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let kept: Vec<Mor> = (0..self.morphisms.len())
            .filter(|&g| obj_map.contains_key(&self.dom[g]) && obj_map.contains_key(&self.cod[g]))
            .collect();
        let mor_map: HashMap<Mor, Mor> = kept.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let n = kept.len();
        let nn = self.morphisms.len();
        let mut compose = vec![None; n * n];
        for (i, &g) in kept.iter().enumerate() {
            for (j, &h) in kept.iter().enumerate() {
                compose[i * n + j] =
                    self.compose[g * nn + h].and_then(|x| mor_map.get(&x).copied());
            }
        }
        let sub = FiniteGroupoid {
            objects: keep_obj.iter().map(|&o| self.objects[o].clone()).collect(),
            morphisms: kept.iter().map(|&g| self.morphisms[g].clone()).collect(),
            dom: kept.iter().map(|&g| obj_map[&self.dom[g]]).collect(),
            cod: kept.iter().map(|&g| obj_map[&self.cod[g]]).collect(),
            inverse: kept.iter().map(|&g| mor_map[&self.inverse[g]]).collect(),
            identity: keep_obj
                .iter()
                .map(|&o| mor_map[&self.identity[o]])
                .collect(),
            compose,
            stray: Vec::new(),
        };
        Ok((sub, kept))
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[String] {
        &self.morphisms
    }

    pub fn object_id(&self, e: Obj) -> &str {
        &self.objects[e]
    }

    pub fn morphism_id(&self, g: Mor) -> &str {
        &self.morphisms[g]
    }

    pub fn object_index(&self, id: &str) -> Result<Obj> {
        index_of(&self.objects, id, "object")
    }

    pub fn morphism_index(&self, id: &str) -> Result<Mor> {
        index_of(&self.morphisms, id, "morphism")
    }

    pub fn dom(&self, g: Mor) -> Obj {
        self.dom[g]
    }

    pub fn cod(&self, g: Mor) -> Obj {
        self.cod[g]
    }

    pub fn inverse(&self, g: Mor) -> Mor {
        self.inverse[g]
    }

    pub fn identity(&self, e: Obj) -> Mor {
        self.identity[e]
    }

    pub fn is_identity(&self, g: Mor) -> bool {
        self.identity[self.dom[g]] == g
    }

    /// `gh` when `d(g) = c(h)`, otherwise `None`.
    pub fn compose(&self, g: Mor, h: Mor) -> Option<Mor> {
        if self.dom[g] != self.cod[h] {
            return None;
        }
        self.compose[g * self.morphisms.len() + h]
    }

    /// Composable pairs `(g, h)` in lexicographic order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (Mor, Mor)> + '_ {
        let n = self.morphisms.len();
        (0..n).flat_map(move |g| {
            (0..n)
                .filter(move |&h| self.dom[g] == self.cod[h])
                .map(move |h| (g, h))
        })
    }

    /// Checks every groupoid axiom; empty iff the data form a groupoid.
    pub fn validate(&self) -> Vec<GroupoidViolation> {
        let mut out = Vec::new();
        let name = |g: Mor| self.morphisms[g].as_str();
        let mut push = |axiom, witness: String| out.push(GroupoidViolation { axiom, witness });
        for &(g, h, gh) in &self.stray {
            push(
                GroupoidAxiom::Composability,
                format!(
                    "({}, {}) ↦ {} but d({}) ≠ c({})",
                    name(g),
                    name(h),
                    name(gh),
                    name(g),
                    name(h)
                ),
            );
        }
        let n = self.morphisms.len();
        for (g, h) in self.composable_pairs() {
            match self.compose[g * n + h] {
                None => push(
                    GroupoidAxiom::MissingComposite,
                    format!("({}, {}) has no composite", name(g), name(h)),
                ),
                Some(gh) => {
                    if self.dom[gh] != self.dom[h] || self.cod[gh] != self.cod[g] {
                        push(
                            GroupoidAxiom::Composability,
                            format!(
                                "{}·{} = {} has the wrong domain or codomain",
                                name(g),
                                name(h),
                                name(gh)
                            ),
                        );
                    }
                }
            }
        }
        for (e, &i) in self.identity.iter().enumerate() {
            if self.dom[i] != e || self.cod[i] != e {
                push(
                    GroupoidAxiom::Identity,
                    format!("{} is not an endomorphism of {}", name(i), self.objects[e]),
                );
                continue;
            }
            for g in 0..n {
                if self.cod[g] == e && self.compose(i, g) != Some(g) {
                    push(
                        GroupoidAxiom::Identity,
                        format!("{}·{} ≠ {}", name(i), name(g), name(g)),
                    );
                }
                if self.dom[g] == e && self.compose(g, i) != Some(g) {
                    push(
                        GroupoidAxiom::Identity,
                        format!("{}·{} ≠ {}", name(g), name(i), name(g)),
                    );
                }
            }
        }
        for g in 0..n {
            let gi = self.inverse[g];
            if self.inverse[gi] != g {
                push(
                    GroupoidAxiom::Inverse,
                    format!("({}⁻¹)⁻¹ ≠ {}", name(g), name(g)),
                );
            }
            if self.compose(g, gi) != Some(self.identity[self.cod[g]]) {
                push(
                    GroupoidAxiom::Inverse,
                    format!(
                        "{}·{} is not an identity of c({})",
                        name(g),
                        name(gi),
                        name(g)
                    ),
                );
            }
            if self.compose(gi, g) != Some(self.identity[self.dom[g]]) {
                push(
                    GroupoidAxiom::Inverse,
                    format!(
                        "{}·{} is not an identity of d({})",
                        name(gi),
                        name(g),
                        name(g)
                    ),
                );
            }
        }
        for (g, h) in self.composable_pairs().collect::<Vec<_>>() {
            let Some(gh) = self.compose(g, h) else {
                continue;
            };
            for k in (0..n).filter(|&k| self.cod[k] == self.dom[h]) {
                let Some(hk) = self.compose(h, k) else {
                    continue;
                };
                let left = self.compose(gh, k);
                let right = self.compose(g, hk);
                if left != right {
                    push(
                        GroupoidAxiom::Associativity,
                        format!(
                            "({}·{})·{} ≠ {}·({}·{})",
                            name(g),
                            name(h),
                            name(k),
                            name(g),
                            name(h),
                            name(k)
                        ),
                    );
                }
            }
        }
        out
    }

    /// Connected components, each listing objects in index order; components
    /// are ordered by their smallest object.
    pub fn connected_components(&self) -> Vec<Vec<Obj>> {
        let n = self.objects.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for g in 0..self.morphisms.len() {
            let a = find(&mut parent, self.dom[g]);
            let b = find(&mut parent, self.cod[g]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<Obj>> = BTreeMap::new();
        for e in 0..n {
            let r = find(&mut parent, e);
            groups.entry(r).or_default().push(e);
        }
        groups.into_values().collect()
    }

    /// Index of the component containing each object.
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.objects.len()];
        for (c, objs) in self.connected_components().iter().enumerate() {
            for &e in objs {
                out[e] = c;
            }
        }
        out
    }

    pub fn hom_set(&self, source: Obj, target: Obj) -> HomSet {
        HomSet {
            source,
            target,
            morphisms: (0..self.morphisms.len())
                .filter(|&g| self.dom[g] == source && self.cod[g] == target)
                .collect(),
        }
    }

    /// The isotropy group `G_e = G(e,e)`.
    pub fn isotropy(&self, e: Obj) -> Vec<Mor> {
        self.hom_set(e, e).morphisms
    }

    /// `G_e` as a one-object groupoid.
    pub fn isotropy_group(&self, e: Obj) -> Result<FiniteGroupoid> {
        let elems = self.isotropy(e);
        let names: Vec<String> = elems.iter().map(|&g| self.morphisms[g].clone()).collect();
        let pos: HashMap<Mor, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let table = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| {
                        self.compose(a, b)
                            .and_then(|c| pos.get(&c).copied())
                            .ok_or_else(|| {
                                Error::NotAGroup(format!(
                                    "isotropy of {} is not closed",
                                    self.objects[e]
                                ))
                            })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_group(&names, &table)
    }

    /// `G(−, e) = {g : c(g) = e}`.
    pub fn into_object(&self, e: Obj) -> Vec<Mor> {
        (0..self.morphisms.len())
            .filter(|&g| self.cod[g] == e)
            .collect()
    }

    /// `G(e, −) = {g : d(g) = e}`.
    pub fn out_of_object(&self, e: Obj) -> Vec<Mor> {
        (0..self.morphisms.len())
            .filter(|&g| self.dom[g] == e)
            .collect()
    }

    /// Finiteness criterion for `mor(G)`. Always finite here; the report
    /// carries the hom-set counts `|G(e,f)| = |G_e|` for every nonempty
    /// hom-set.
    pub fn finite_mor_report(&self) -> FiniteMorReport {
        let n = self.objects.len();
        let iso: Vec<usize> = (0..n).map(|e| self.isotropy(e).len()).collect();
        let mut hom_sets = Vec::new();
        for e in 0..n {
            for f in 0..n {
                let size = self.hom_set(e, f).morphisms.len();
                if size > 0 {
                    hom_sets.push(HomCount {
                        source: self.objects[e].clone(),
                        target: self.objects[f].clone(),
                        size,
                        isotropy: iso[e],
                    });
                }
            }
        }
        FiniteMorReport {
            finite: true,
            isotropy_orders: self.objects.iter().cloned().zip(iso).collect(),
            hom_sets,
        }
    }

    /// Raw records suitable for serialization; inverse of [`from_parts`](Self::from_parts).
    pub fn to_parts(
        &self,
    ) -> (
        Vec<String>,
        Vec<MorphismSpec>,
        Vec<(String, String, String)>,
    ) {
        let morphisms = (0..self.morphisms.len())
            .map(|g| MorphismSpec {
                id: self.morphisms[g].clone(),
                dom: self.objects[self.dom[g]].clone(),
                cod: self.objects[self.cod[g]].clone(),
                inv: self.morphisms[self.inverse[g]].clone(),
            })
            .collect();
        let n = self.morphisms.len();
        let mut compose = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if let Some(gh) = self.compose[g * n + h] {
                    compose.push((
                        self.morphisms[g].clone(),
                        self.morphisms[h].clone(),
                        self.morphisms[gh].clone(),
                    ));
                }
            }
        }
        for &(g, h, gh) in &self.stray {
            compose.push((
                self.morphisms[g].clone(),
                self.morphisms[h].clone(),
                self.morphisms[gh].clone(),
            ));
        }
        (self.objects.clone(), morphisms, compose)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: &str, dom: &str, cod: &str, inv: &str) -> MorphismSpec {
        MorphismSpec {
            id: id.into(),
            dom: dom.into(),
            cod: cod.into(),
            inv: inv.into(),
        }
    }

    #[test]
    fn trivial_groupoid_is_valid() {
        let g = FiniteGroupoid::cyclic(1).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.morphism_count(), 1);
    }

    #[test]
    fn pair_groupoid_shape() {
        let g = FiniteGroupoid::pair_groupoid(3).unwrap();
        assert_eq!(g.morphism_count(), 9);
        assert_eq!(g.connected_components().len(), 1);
        let m = g.morphism_index("(0,2)").unwrap();
        assert_eq!(g.object_id(g.dom(m)), "2");
        assert_eq!(g.object_id(g.cod(m)), "0");
        assert_eq!(g.morphism_id(g.inverse(m)), "(2,0)");
        assert!(FiniteGroupoid::pair_groupoid(0).is_err());
    }

    #[test]
    fn identities_are_inferred() {
        let g = FiniteGroupoid::new(
            vec!["x".into(), "y".into()],
            vec![spec("f", "x", "y", "f'"), spec("f'", "y", "x", "f")],
            vec![
                ("f".into(), "f'".into(), "id:y".into()),
                ("f'".into(), "f".into(), "id:x".into()),
            ],
        );
        let g = g.unwrap();
        assert_eq!(g.morphism_count(), 4);
        assert_eq!(g.morphism_id(g.identity(1)), "id:y");

        let g = FiniteGroupoid::from_parts(
            vec!["x".into(), "y".into()],
            vec![spec("f", "x", "y", "f'"), spec("f'", "y", "x", "f")],
            vec![],
        )
        .unwrap();
        assert_eq!(g.morphism_count(), 4);
        assert_eq!(g.morphism_id(g.identity(0)), "id:x");
        let v = g.validate();
        assert!(v.iter().any(|x| x.axiom == GroupoidAxiom::MissingComposite));
    }

    #[test]
    fn broken_inverse_is_reported() {
        let g = FiniteGroupoid::from_parts(
            vec!["*".into()],
            vec![spec("e", "*", "*", "e"), spec("s", "*", "*", "e")],
            vec![
                ("e".into(), "e".into(), "e".into()),
                ("e".into(), "s".into(), "s".into()),
                ("s".into(), "e".into(), "s".into()),
                ("s".into(), "s".into(), "e".into()),
            ],
        )
        .unwrap();
        let v = g.validate();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.axiom == GroupoidAxiom::Inverse));
    }

    #[test]
    fn non_group_tables_are_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        let table = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            FiniteGroupoid::from_group(&names, &table),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn components_and_isotropy() {
        let z2 = FiniteGroupoid::cyclic(2).unwrap().with_prefix("l.");
        let t = FiniteGroupoid::cyclic(1).unwrap().with_prefix("r.");
        let u = z2.disjoint_union(&t).unwrap();
        assert!(u.validate().is_empty());
        assert_eq!(u.connected_components(), vec![vec![0], vec![1]]);
        assert_eq!(u.isotropy(0).len(), 2);
        let iso = u.isotropy_group(0).unwrap();
        assert_eq!(iso.morphism_count(), 2);
        let r = u.finite_mor_report();
        assert!(r.finite && r.counting_identity_holds());
    }

    #[test]
    fn parts_round_trip() {
        let g = FiniteGroupoid::pair_groupoid(2).unwrap();
        let (o, m, c) = g.to_parts();
        assert_eq!(FiniteGroupoid::new(o, m, c).unwrap(), g);
    }
}
