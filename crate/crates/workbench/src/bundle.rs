//! JSON input bundles.
//!
//! A bundle names polynomials, groups, subgroups, characters and setups, then
//! lists the checks to run against them. Syntax errors are reported with line
//! and column; every unresolved or invalid entry is reported with the JSON
//! pointer of the offending value.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use artin_core::character::{character_table, inflate, ClassFunction};
use artin_core::cyclo::{CycloField, CycloNumber};
use artin_core::galois::{build_context, SplittingFieldContext};
use artin_core::group::{GroupHom, Permutation, PermutationGroup, QuotientGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
use artin_core::lseries::{artin_prefix, dedekind_zeta_prefix_direct, DirichletPrefix, RelativeSetup};
use artin_core::mapper::PrimeMapper;
use artin_core::poly::IntPolynomial;
use artin_core::verifier::{self, FinalExampleData, RunOptions, S3Remark, StatementId, Verdict};
use serde::Deserialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    /// `line L, column C` for syntax errors, a JSON pointer otherwise.
    pub location: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    bound: Option<usize>,
    zeta_bound: Option<usize>,
    #[serde(default)]
    polynomials: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    groups: BTreeMap<String, RawGroup>,
    #[serde(default)]
    markers: BTreeMap<String, RawMarker>,
    #[serde(default)]
    subgroups: BTreeMap<String, RawSubgroup>,
    #[serde(default)]
    characters: BTreeMap<String, RawCharacter>,
    #[serde(default)]
    setups: BTreeMap<String, RawSetup>,
    #[serde(default)]
    checks: Vec<RawCheck>,
}

/// A permutation as an image list or in cycle notation, e.g. `"(0 1)(2 3)"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawPerm {
    Images(Vec<usize>),
    Cycles(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    degree: usize,
    generators: Vec<RawPerm>,
    /// With a polynomial the group is the Galois group of its roots and
    /// becomes a splitting-field context.
    polynomial: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarker {
    modulus: u64,
    images: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubgroup {
    group: String,
    #[serde(default)]
    generators: Vec<RawPerm>,
    #[serde(default)]
    whole: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Text(String),
    Integer(i64),
    ByElement { element: RawPerm, value: Box<RawValue> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharacter {
    u: String,
    v: String,
    /// `trivial`, `regular`, `irreducible` (with `index`) or `values`.
    kind: String,
    index: Option<usize>,
    values: Option<Vec<RawValue>>,
    /// Order of the cyclotomic field values are written in.
    field: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetup {
    character: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAmbient {
    group: Option<String>,
    to_first: Option<Vec<RawPerm>>,
    to_second: Option<Vec<RawPerm>>,
    subgroups: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCheck {
    statement: String,
    label: Option<String>,
    bound: Option<usize>,
    group: Option<String>,
    setup: Option<String>,
    setups: Option<Vec<String>>,
    character: Option<String>,
    characters: Option<Vec<String>>,
    tower: Option<Vec<String>>,
    polynomials: Option<Vec<String>>,
    ambient: Option<RawAmbient>,
    partner: Option<String>,
    u: Option<String>,
    v1: Option<String>,
    v2: Option<String>,
    max_pairs: Option<usize>,
    expected: Option<Vec<String>>,
    zeta_bound: Option<usize>,
}

struct Group {
    group: PermutationGroup,
    context: Option<Arc<SplittingFieldContext>>,
}

struct NamedSubgroup {
    group: String,
    subgroup: Subgroup,
}

#[derive(Clone)]
struct NamedCharacter {
    group: String,
    u: Subgroup,
    v: Subgroup,
    chi: ClassFunction,
}

#[allow(clippy::large_enum_variant)]
enum Action {
    Prop1 { ctx: Arc<SplittingFieldContext>, tower: verifier::InflationTower, chi: ClassFunction },
    Prop2 { ctx: Arc<SplittingFieldContext>, tower: verifier::InductionTower, chi: ClassFunction },
    Prop3 { ctx: Arc<SplittingFieldContext>, chars: Option<Vec<ClassFunction>> },
    S3Remark(S3Remark),
    Prop4(RelativeSetup),
    Thm5(RelativeSetup, RelativeSetup, Option<verifier::Ambient>),
    Thm6(RelativeSetup, RelativeSetup),
    Corollary(IntPolynomial, IntPolynomial, Option<verifier::ZetaAmbient>, Option<usize>),
    FinalExample(FinalExampleData, Option<usize>),
    Gassmann { group: PermutationGroup, max_pairs: usize, expected: Option<(Subgroup, Subgroup)> },
}

pub struct Check {
    pub statement: StatementId,
    pub label: String,
    pub bound: Option<usize>,
    action: Action,
}

impl Check {
    pub fn run(&self, opts: &RunOptions, mapper: &dyn PrimeMapper) -> artin_core::Result<Verdict> {
        let b = self.bound.unwrap_or(opts.bound);
        let mut v = match &self.action {
            Action::Prop1 { ctx, tower, chi } => verifier::check_inflation_invariance(ctx, tower, chi, b, mapper),
            Action::Prop2 { ctx, tower, chi } => verifier::check_induction_invariance(ctx, tower, chi, b, mapper),
            Action::Prop3 { ctx, chars: None } => verifier::check_character_separation(ctx, b, mapper),
            Action::Prop3 { ctx, chars: Some(c) } => verifier::check_character_separation_with(ctx, c, b, mapper),
            Action::S3Remark(data) => verifier::s3_counterexample_with(data, b, mapper),
            Action::Prop4(s) => verifier::check_induced_faithful(s, b, mapper),
            Action::Thm5(x, y, amb) => verifier::theorem5_consistency(x, y, amb.as_ref(), b, mapper),
            Action::Thm6(x, y) => verifier::theorem6_consistency(x, y, b, mapper),
            Action::Corollary(f, g, amb, zb) => {
                verifier::corollary_zeta_closure(f, g, amb.as_ref(), zb.unwrap_or(opts.zeta_bound), mapper)
            }
            Action::FinalExample(data, zb) => {
                verifier::final_example_suite_with(data, b, zb.unwrap_or(opts.zeta_bound), mapper)
            }
            Action::Gassmann { group, max_pairs, expected } => {
                verifier::gassmann_search_verdict(group, *max_pairs, expected.as_ref().map(|(a, b)| (a, b)))
            }
        }?;
        v.label = self.label.clone();
        Ok(v)
    }
}

/// A resolved bundle, ready to run.
pub struct Bundle {
    pub bound: Option<usize>,
    pub zeta_bound: Option<usize>,
    pub checks: Vec<Check>,
    setups: BTreeMap<String, RelativeSetup>,
    polynomials: BTreeMap<String, IntPolynomial>,
}

impl Bundle {
    pub fn parse(text: &str, validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Self, Vec<Diagnostic>> {
        let raw: RawBundle = serde_json::from_str(text).map_err(|e| {
            vec![Diagnostic {
                location: format!("line {}, column {}", e.line(), e.column()),
                message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
            }]
        })?;
        let mut r = Resolver::new(validation_bound, mapper);
        let bundle = r.resolve(raw);
        if r.errors.is_empty() {
            Ok(bundle)
        } else {
            Err(r.errors)
        }
    }

    pub fn setup_names(&self) -> impl Iterator<Item = &str> {
        self.setups.keys().map(String::as_str)
    }

    /// `L(χ, K/k)` for a named setup.
    pub fn setup_prefix(&self, name: &str, bound: usize, mapper: &dyn PrimeMapper) -> Result<DirichletPrefix, String> {
        let s = self.setups.get(name).ok_or_else(|| format!("unknown setup '{name}'"))?;
        artin_prefix(s, bound, mapper).map_err(|e| e.to_string())
    }

    /// Dedekind zeta prefix of the field of a named polynomial.
    pub fn zeta_prefix(&self, name: &str, bound: usize, mapper: &dyn PrimeMapper) -> Result<DirichletPrefix, String> {
        let f = self.polynomials.get(name).ok_or_else(|| format!("unknown polynomial '{name}'"))?;
        dedekind_zeta_prefix_direct(f, bound, mapper).map_err(|e| e.to_string())
    }
}

struct Resolver<'a> {
    errors: Vec<Diagnostic>,
    validation_bound: u64,
    mapper: &'a dyn PrimeMapper,
    polynomials: BTreeMap<String, IntPolynomial>,
    groups: BTreeMap<String, Group>,
    subgroups: BTreeMap<String, NamedSubgroup>,
    characters: BTreeMap<String, NamedCharacter>,
    setups: BTreeMap<String, RelativeSetup>,
}

impl<'a> Resolver<'a> {
    fn new(validation_bound: u64, mapper: &'a dyn PrimeMapper) -> Self {
        Resolver {
            errors: Vec::new(),
            validation_bound,
            mapper,
            polynomials: BTreeMap::new(),
            groups: BTreeMap::new(),
            subgroups: BTreeMap::new(),
            characters: BTreeMap::new(),
            setups: BTreeMap::new(),
        }
    }
}

/// Escapes a key for use in a JSON pointer.
fn key(k: &str) -> String {
    k.replace('~', "~0").replace('/', "~1")
}

fn parse_cycles(degree: usize, text: &str) -> Result<Permutation, String> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    if rest == "()" || rest.is_empty() {
        return Ok(Permutation::identity(degree));
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' in {text:?}"))?;
        let end = body.find(')').ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
        let points = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("bad point {s:?} in {text:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(points);
        rest = body[end + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).map_err(|e| e.to_string())
}

impl<'a> Resolver<'a> {
    fn err(&mut self, location: String, message: impl Into<String>) {
        self.errors.push(Diagnostic { location, message: message.into() });
    }

    fn perm(&mut self, degree: usize, raw: &RawPerm, at: String) -> Option<Permutation> {
        let p = match raw {
            RawPerm::Images(v) if v.len() != degree => {
                Err(format!("permutation has {} images, expected degree {degree}", v.len()))
            }
            RawPerm::Images(v) => Permutation::new(v.clone()).map_err(|e| e.to_string()),
            RawPerm::Cycles(s) => parse_cycles(degree, s),
        };
        p.map_err(|m| self.err(at, m)).ok()
    }

    fn element(&mut self, g: &PermutationGroup, raw: &RawPerm, at: String) -> Option<usize> {
        let p = self.perm(g.degree(), raw, at.clone())?;
        let idx = g.index_of(&p);
        if idx.is_none() {
            self.err(at, format!("{p} is not an element of the group"));
        }
        idx
    }

    fn resolve(&mut self, raw: RawBundle) -> Bundle {
        for (name, coeffs) in &raw.polynomials {
            let at = format!("/polynomials/{}", key(name));
            match IntPolynomial::from_i64(coeffs) {
                Ok(p) => {
                    self.polynomials.insert(name.clone(), p);
                }
                Err(e) => self.err(at, e.to_string()),
            }
        }
        for name in raw.markers.keys() {
            if !raw.groups.contains_key(name) {
                self.err(format!("/markers/{}", key(name)), format!("unknown group '{name}'"));
            }
        }
        for (name, g) in &raw.groups {
            self.group(name, g, raw.markers.get(name));
        }
        for (name, s) in &raw.subgroups {
            self.subgroup(name, s);
        }
        for (name, c) in &raw.characters {
            self.character(name, c);
        }
        for (name, s) in &raw.setups {
            let at = format!("/setups/{}/character", key(name));
            if let Some(c) = self.named_character(&s.character, at.clone()) {
                if let Some(setup) = self.make_setup(&c, at) {
                    self.setups.insert(name.clone(), setup);
                }
            }
        }
        let mut checks = Vec::new();
        for (i, c) in raw.checks.iter().enumerate() {
            if let Some(check) = self.check(i, c) {
                checks.push(check);
            }
        }
        Bundle {
            bound: raw.bound,
            zeta_bound: raw.zeta_bound,
            checks,
            setups: std::mem::take(&mut self.setups),
            polynomials: std::mem::take(&mut self.polynomials),
        }
    }

    fn group(&mut self, name: &str, raw: &RawGroup, marker: Option<&RawMarker>) {
        let at = format!("/groups/{}", key(name));
        let mut gens = Vec::new();
        for (i, p) in raw.generators.iter().enumerate() {
            gens.extend(self.perm(raw.degree, p, format!("{at}/generators/{i}")));
        }
        if gens.len() != raw.generators.len() {
            return;
        }
        let group = match PermutationGroup::enumerate(raw.degree, &gens, DEFAULT_ENUMERATION_CAP) {
            Ok(g) => g,
            Err(e) => return self.err(at, e.to_string()),
        };
        let context = match &raw.polynomial {
            None => {
                if marker.is_some() {
                    self.err(format!("/markers/{}", key(name)), "a marker needs a group with a polynomial");
                }
                None
            }
            Some(pname) => {
                let Some(poly) = self.polynomials.get(pname).cloned() else {
                    return self.err(format!("{at}/polynomial"), format!("unknown polynomial '{pname}'"));
                };
                if poly.degree() != raw.degree {
                    return self.err(
                        format!("{at}/degree"),
                        format!("group degree {} differs from polynomial degree {}", raw.degree, poly.degree()),
                    );
                }
                let m = marker.map(|m| (m.modulus, m.images.clone()));
                match build_context(poly, &gens, m, self.validation_bound, self.mapper) {
                    Ok(ctx) => Some(Arc::new(ctx)),
                    Err(e) => return self.err(at, e.to_string()),
                }
            }
        };
        self.groups.insert(name.to_string(), Group { group, context });
    }

    fn subgroup(&mut self, name: &str, raw: &RawSubgroup) {
        let at = format!("/subgroups/{}", key(name));
        let Some(g) = self.groups.get(&raw.group).map(|g| g.group.clone()) else {
            return self.err(format!("{at}/group"), format!("unknown group '{}'", raw.group));
        };
        let subgroup = if raw.whole {
            g.whole()
        } else {
            let mut idx = Vec::new();
            for (i, p) in raw.generators.iter().enumerate() {
                idx.extend(self.element(&g, p, format!("{at}/generators/{i}")));
            }
            if idx.len() != raw.generators.len() {
                return;
            }
            g.generate(&idx)
        };
        self.subgroups.insert(name.to_string(), NamedSubgroup { group: raw.group.clone(), subgroup });
    }

    fn named_subgroup(&mut self, name: &str, at: String) -> Option<(String, Subgroup)> {
        match self.subgroups.get(name) {
            Some(s) => Some((s.group.clone(), s.subgroup.clone())),
            None => {
                self.err(at, format!("unknown subgroup '{name}'"));
                None
            }
        }
    }

    fn value(&mut self, raw: &RawValue, default_field: u32, at: String) -> Option<CycloNumber> {
        match raw {
            RawValue::Integer(n) => Some(CycloNumber::from_integer(&CycloField::new(default_field), *n)),
            RawValue::Text(t) => {
                let order = declared_order(t).unwrap_or(default_field);
                CycloNumber::parse(&CycloField::new(order), t).map_err(|e| self.err(at, e.to_string())).ok()
            }
            RawValue::ByElement { .. } => {
                self.err(at, "cannot mix per-element values with class-ordered values");
                None
            }
        }
    }

    fn character(&mut self, name: &str, raw: &RawCharacter) {
        let at = format!("/characters/{}", key(name));
        let u = self.named_subgroup(&raw.u, format!("{at}/u"));
        let v = self.named_subgroup(&raw.v, format!("{at}/v"));
        let (Some((gu, u)), Some((gv, v))) = (u, v) else { return };
        if gu != gv {
            return self.err(format!("{at}/v"), format!("'{}' and '{}' lie in different groups", raw.u, raw.v));
        }
        let g = self.groups[&gu].group.clone();
        let q = match g.quotient(&u, &v) {
            Ok(q) => q,
            Err(e) => return self.err(at, format!("{} / {}: {e}", raw.u, raw.v)),
        };
        let chi = match raw.kind.as_str() {
            "trivial" => Some(ClassFunction::trivial(&q.group)),
            "regular" => Some(ClassFunction::regular(&q.group)),
            "irreducible" => self.irreducible(&q, raw.index, &at),
            "values" => self.values(&g, &q, raw, &at),
            other => {
                self.err(
                    format!("{at}/kind"),
                    format!("unknown kind '{other}' (expected trivial, regular, irreducible or values)"),
                );
                None
            }
        };
        if let Some(chi) = chi {
            self.characters.insert(name.to_string(), NamedCharacter { group: gu, u, v, chi });
        }
    }

    fn irreducible(&mut self, q: &QuotientGroup, index: Option<usize>, at: &str) -> Option<ClassFunction> {
        let Some(i) = index else {
            self.err(format!("{at}/index"), "an irreducible character needs an index");
            return None;
        };
        let table = character_table(&q.group).map_err(|e| self.err(at.to_string(), e.to_string())).ok()?;
        let n = table.irreducibles().len();
        match table.irreducibles().get(i) {
            Some(c) => Some(c.clone()),
            None => {
                self.err(format!("{at}/index"), format!("index {i} out of range: the quotient has {n} irreducibles"));
                None
            }
        }
    }

    fn values(
        &mut self,
        g: &PermutationGroup,
        q: &QuotientGroup,
        raw: &RawCharacter,
        at: &str,
    ) -> Option<ClassFunction> {
        let Some(values) = &raw.values else {
            self.err(format!("{at}/values"), "kind 'values' needs a values list");
            return None;
        };
        let field = raw.field.unwrap_or(q.group.exponent() as u32);
        let by_element = values.iter().any(|v| matches!(v, RawValue::ByElement { .. }));
        let classes = q.group.classes().len();
        let mut out: Vec<Option<CycloNumber>> = vec![None; classes];
        if by_element {
            for (i, v) in values.iter().enumerate() {
                let vat = format!("{at}/values/{i}");
                let RawValue::ByElement { element, value } = v else {
                    self.err(vat, "cannot mix per-element values with class-ordered values");
                    return None;
                };
                let x = self.element(g, element, format!("{vat}/element"))?;
                let Some(image) = q.project(x) else {
                    self.err(format!("{vat}/element"), "element does not lie in U");
                    return None;
                };
                let val = self.value(value, field, format!("{vat}/value"))?;
                let c = q.group.class_of(image);
                if out[c].as_ref().is_some_and(|old| *old != val) {
                    self.err(vat, "conflicting values on one conjugacy class of U/V");
                    return None;
                }
                out[c] = Some(val);
            }
        } else {
            if values.len() != classes {
                self.err(format!("{at}/values"), format!("U/V has {classes} classes, got {} values", values.len()));
                return None;
            }
            for (i, v) in values.iter().enumerate() {
                out[i] = Some(self.value(v, field, format!("{at}/values/{i}"))?);
            }
        }
        if let Some(c) = out.iter().position(Option::is_none) {
            let rep = q.lift(q.group.classes()[c].representative);
            self.err(format!("{at}/values"), format!("no value for the class of {}", g.element(rep)));
            return None;
        }
        let vals = out.into_iter().map(Option::unwrap).collect();
        ClassFunction::new(&q.group, vals).map_err(|e| self.err(at.to_string(), e.to_string())).ok()
    }

    fn named_character(&mut self, name: &str, at: String) -> Option<NamedCharacter> {
        let c = self.characters.get(name).cloned();
        if c.is_none() {
            self.err(at, format!("unknown character '{name}'"));
        }
        c
    }

    fn context_of(&mut self, group: &str, at: String) -> Option<Arc<SplittingFieldContext>> {
        let c = self.groups.get(group).and_then(|g| g.context.clone());
        if c.is_none() {
            self.err(at, format!("group '{group}' has no polynomial, so it is not a splitting-field context"));
        }
        c
    }

    fn make_setup(&mut self, c: &NamedCharacter, at: String) -> Option<RelativeSetup> {
        let ctx = self.context_of(&c.group, at.clone())?;
        RelativeSetup::new(ctx, c.u.clone(), c.v.clone(), c.chi.clone()).map_err(|e| self.err(at, e.to_string())).ok()
    }

    fn named_setup(&mut self, name: &str, at: String) -> Option<RelativeSetup> {
        let s = self.setups.get(name).cloned();
        if s.is_none() {
            self.err(at, format!("unknown setup '{name}'"));
        }
        s
    }

    fn require<'b, T>(&mut self, field: &'b Option<T>, at: &str, name: &str, statement: &str) -> Option<&'b T> {
        if field.is_none() {
            self.err(at.to_string(), format!("{statement} needs '{name}'"));
        }
        field.as_ref()
    }

    fn names<const N: usize>(
        &mut self,
        list: &Option<Vec<String>>,
        at: &str,
        name: &str,
        statement: &str,
    ) -> Option<[String; N]> {
        let list = self.require(list, at, name, statement)?;
        match <[String; N]>::try_from(list.clone()) {
            Ok(a) => Some(a),
            Err(_) => {
                self.err(format!("{at}/{name}"), format!("expected {N} names, got {}", list.len()));
                None
            }
        }
    }

    /// Subgroups of one group, all named in `names`; returns the group name.
    fn same_group_subgroups(&mut self, names: &[String], at: &str) -> Option<(String, Vec<Subgroup>)> {
        let mut group: Option<String> = None;
        let mut out = Vec::new();
        for (i, n) in names.iter().enumerate() {
            let (g, s) = self.named_subgroup(n, format!("{at}/{i}"))?;
            if group.as_ref().is_some_and(|x| *x != g) {
                self.err(format!("{at}/{i}"), format!("'{n}' lies in group '{g}', not '{}'", group.unwrap()));
                return None;
            }
            group = Some(g);
            out.push(s);
        }
        Some((group?, out))
    }

    fn check(&mut self, i: usize, c: &RawCheck) -> Option<Check> {
        let at = format!("/checks/{i}");
        let Some(statement) = StatementId::parse(&c.statement) else {
            let known: Vec<&str> = StatementId::ALL.iter().map(|s| s.as_str()).collect();
            self.err(
                format!("{at}/statement"),
                format!("unknown statement id '{}' (expected one of {})", c.statement, known.join(", ")),
            );
            return None;
        };
        let s = statement.as_str();
        let action = match statement {
            StatementId::Prop1 | StatementId::Prop2 => {
                let tower: [String; 3] = self.names(&c.tower, &at, "tower", s)?;
                let chi_name = self.require(&c.character, &at, "character", s)?.clone();
                let chi = self.named_character(&chi_name, format!("{at}/character"))?;
                let (group, subs) = self.same_group_subgroups(&tower, &format!("{at}/tower"))?;
                let ctx = self.context_of(&group, format!("{at}/tower"))?;
                let [a, b, w] = <[Subgroup; 3]>::try_from(subs).ok()?;
                // the character lives on U/V for prop1 and on H/V for prop2
                let (num, den) = if statement == StatementId::Prop1 { (&a, &b) } else { (&b, &w) };
                if chi.group != group || chi.u != *num || chi.v != *den {
                    let which =
                        if statement == StatementId::Prop1 { "tower[0] / tower[1]" } else { "tower[1] / tower[2]" };
                    self.err(format!("{at}/character"), format!("'{chi_name}' must be a character of {which}"));
                    return None;
                }
                if statement == StatementId::Prop1 {
                    Action::Prop1 { ctx, tower: verifier::InflationTower { u: a, v: b, w }, chi: chi.chi }
                } else {
                    Action::Prop2 { ctx, tower: verifier::InductionTower { u: a, h: b, v: w }, chi: chi.chi }
                }
            }
            StatementId::Prop3 => {
                let group = self.require(&c.group, &at, "group", s)?.clone();
                let ctx = self.context_of(&group, format!("{at}/group"))?;
                let chars = match &c.characters {
                    None => None,
                    Some(names) => {
                        let mut out = Vec::new();
                        for (k, n) in names.iter().enumerate() {
                            let cat = format!("{at}/characters/{k}");
                            let nc = self.named_character(n, cat.clone())?;
                            let g = ctx.group();
                            if nc.group != group || nc.u != g.whole() || !nc.v.is_trivial() {
                                self.err(cat, format!("'{n}' must be a character of {group} / 1"));
                                return None;
                            }
                            let q = g.quotient(&nc.u, &nc.v).ok()?;
                            out.push(
                                inflate(&g.embed(&nc.u), &q, &nc.chi).map_err(|e| self.err(cat, e.to_string())).ok()?,
                            );
                        }
                        Some(out)
                    }
                };
                Action::Prop3 { ctx, chars }
            }
            StatementId::S3Remark => {
                let [a, b]: [String; 2] = self.names(&c.characters, &at, "characters", s)?;
                let ca = self.named_character(&a, format!("{at}/characters/0"))?;
                let cb = self.named_character(&b, format!("{at}/characters/1"))?;
                if ca.group != cb.group || ca.u != cb.u || ca.v != cb.v {
                    self.err(format!("{at}/characters"), "both characters must live on the same U/V");
                    return None;
                }
                let context = self.context_of(&ca.group, format!("{at}/characters/0"))?;
                Action::S3Remark(S3Remark { context, u: ca.u, v: ca.v, chi2: ca.chi, chi3: cb.chi })
            }
            StatementId::Prop4 => {
                let name = self.require(&c.setup, &at, "setup", s)?.clone();
                Action::Prop4(self.named_setup(&name, format!("{at}/setup"))?)
            }
            StatementId::Thm5 | StatementId::Thm6 => {
                let [a, b]: [String; 2] = self.names(&c.setups, &at, "setups", s)?;
                let sa = self.named_setup(&a, format!("{at}/setups/0"))?;
                let sb = self.named_setup(&b, format!("{at}/setups/1"))?;
                if statement == StatementId::Thm6 {
                    Action::Thm6(sa, sb)
                } else {
                    let amb = match &c.ambient {
                        None => None,
                        Some(raw) => Some(self.hom_ambient(raw, &sa, &sb, &format!("{at}/ambient"))?),
                    };
                    Action::Thm5(sa, sb, amb)
                }
            }
            StatementId::Corollary => {
                let [a, b]: [String; 2] = self.names(&c.polynomials, &at, "polynomials", s)?;
                let pa = self.named_polynomial(&a, format!("{at}/polynomials/0"))?;
                let pb = self.named_polynomial(&b, format!("{at}/polynomials/1"))?;
                let amb = match &c.ambient {
                    None => None,
                    Some(raw) => {
                        let aat = format!("{at}/ambient");
                        let [v1, v2]: [String; 2] = self.names(&raw.subgroups, &aat, "subgroups", s)?;
                        let (group, subs) = self.same_group_subgroups(&[v1, v2], &format!("{aat}/subgroups"))?;
                        let context = self.context_of(&group, format!("{aat}/subgroups"))?;
                        let [v1, v2] = <[Subgroup; 2]>::try_from(subs).ok()?;
                        Some(verifier::ZetaAmbient { context, v1, v2 })
                    }
                };
                Action::Corollary(pa, pb, amb, c.zeta_bound)
            }
            StatementId::FinalExample => {
                let group = self.require(&c.group, &at, "group", s)?.clone();
                let context = self.context_of(&group, format!("{at}/group"))?;
                let partner = self.require(&c.partner, &at, "partner", s)?.clone();
                let partner = self.named_polynomial(&partner, format!("{at}/partner"))?;
                let mut subs = Vec::new();
                for (f, v) in [("u", &c.u), ("v1", &c.v1), ("v2", &c.v2)] {
                    let n = self.require(v, &at, f, s)?.clone();
                    let (g, sub) = self.named_subgroup(&n, format!("{at}/{f}"))?;
                    if g != group {
                        self.err(format!("{at}/{f}"), format!("'{n}' lies in group '{g}', not '{group}'"));
                        return None;
                    }
                    subs.push(sub);
                }
                let [u, v1, v2] = <[Subgroup; 3]>::try_from(subs).ok()?;
                Action::FinalExample(FinalExampleData { context, partner, u, v1, v2 }, c.zeta_bound)
            }
            StatementId::GassmannSearch => {
                let group = self.require(&c.group, &at, "group", s)?.clone();
                let Some(g) = self.groups.get(&group).map(|g| g.group.clone()) else {
                    self.err(format!("{at}/group"), format!("unknown group '{group}'"));
                    return None;
                };
                let expected = match &c.expected {
                    None => None,
                    Some(_) => {
                        let [a, b]: [String; 2] = self.names(&c.expected, &at, "expected", s)?;
                        let (eg, subs) = self.same_group_subgroups(&[a, b], &format!("{at}/expected"))?;
                        if eg != group {
                            self.err(format!("{at}/expected"), format!("subgroups lie in '{eg}', not '{group}'"));
                            return None;
                        }
                        let [x, y] = <[Subgroup; 2]>::try_from(subs).ok()?;
                        Some((x, y))
                    }
                };
                Action::Gassmann {
                    group: g,
                    max_pairs: c.max_pairs.unwrap_or(verifier::DEFAULT_GASSMANN_PAIRS),
                    expected,
                }
            }
        };
        Some(Check { statement, label: c.label.clone().unwrap_or(at), bound: c.bound, action })
    }

    fn named_polynomial(&mut self, name: &str, at: String) -> Option<IntPolynomial> {
        let p = self.polynomials.get(name).cloned();
        if p.is_none() {
            self.err(at, format!("unknown polynomial '{name}'"));
        }
        p
    }

    /// An ambient group with homomorphisms onto the context groups of two setups.
    fn hom_ambient(
        &mut self,
        raw: &RawAmbient,
        a: &RelativeSetup,
        b: &RelativeSetup,
        at: &str,
    ) -> Option<verifier::Ambient> {
        let name = self.require(&raw.group, at, "group", "an ambient")?.clone();
        let Some(group) = self.groups.get(&name).map(|g| g.group.clone()) else {
            self.err(format!("{at}/group"), format!("unknown group '{name}'"));
            return None;
        };
        let mut homs = Vec::new();
        for (field, images, target) in
            [("to_first", &raw.to_first, a.context().group()), ("to_second", &raw.to_second, b.context().group())]
        {
            let images = self.require(images, at, field, "an ambient")?;
            let mut idx = Vec::new();
            for (i, p) in images.iter().enumerate() {
                idx.push(self.element(target, p, format!("{at}/{field}/{i}"))?);
            }
            let hom = GroupHom::from_generator_images(&group, target, &idx)
                .map_err(|e| self.err(format!("{at}/{field}"), e.to_string()))
                .ok()?;
            if !hom.is_surjective(target) {
                self.err(format!("{at}/{field}"), "the map must be onto the setup's group");
                return None;
            }
            homs.push(hom);
        }
        let to_second = homs.pop()?;
        let to_first = homs.pop()?;
        Some(verifier::Ambient { group, to_first, to_second })
    }
}

fn declared_order(text: &str) -> Option<u32> {
    let start = text.find("[m=")?;
    text[start + 3..].trim_end().strip_suffix(']')?.trim().parse().ok()
}
