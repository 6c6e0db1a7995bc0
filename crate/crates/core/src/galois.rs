//! Splitting-field contexts: a polynomial, its asserted Galois group acting
//! on root indices, and Frobenius bookkeeping at unramified primes.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::prime_stream;
use crate::error::{Error, Result};
use crate::group::{EmbeddedSubgroup, Permutation, PermutationGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
use crate::mapper::{map_primes, PrimeMapper};
use crate::poly::{FactorShape, IntPolynomial};

/// Default upper bound for the factor-shape census run by [`build_context`].
pub const DEFAULT_VALIDATION_BOUND: u64 = 2000;

/// A homomorphism `G → (ℤ/m)ˣ` recording the action on `ζ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicMarker {
    pub modulus: u64,
    /// One unit per group generator, in generator order.
    pub generator_images: Vec<u64>,
    /// Unit for every group element.
    values: Vec<u64>,
}

impl CyclotomicMarker {
    pub fn value(&self, element: usize) -> u64 {
        self.values[element]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusResolution {
    Ramified,
    Unique(usize),
    Ambiguous(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct SplittingFieldContext {
    poly: IntPolynomial,
    group: PermutationGroup,
    marker: Option<CyclotomicMarker>,
    ramified: Vec<u64>,
    /// Census findings that are not errors (unobserved classes).
    pub warnings: Vec<String>,
}

/// Binds `poly` to the group generated by `generators` and validates the
/// pairing against factor shapes for unramified primes up to `validation_bound`.
pub fn build_context(
    poly: IntPolynomial,
    generators: &[Permutation],
    marker: Option<(u64, Vec<u64>)>,
    validation_bound: u64,
    mapper: &dyn PrimeMapper,
) -> Result<SplittingFieldContext> {
    if !poly.is_monic() || poly.degree() == 0 {
        return Err(Error::InvalidInput("context polynomial must be monic of degree ≥ 1".into()));
    }
    if !poly.is_squarefree() {
        return Err(Error::InvalidInput("context polynomial must be squarefree".into()));
    }
    let group = PermutationGroup::enumerate(poly.degree(), generators, DEFAULT_ENUMERATION_CAP)?;
    let marker = marker.map(|(m, images)| build_marker(&group, m, images)).transpose()?;
    let ramified = poly.ramified_primes();
    let mut ctx = SplittingFieldContext { poly, group, marker, ramified, warnings: Vec::new() };

    let primes = prime_stream(2, validation_bound);
    let resolutions = map_primes(mapper, &primes, |p| ctx.frobenius_class(p));
    let mut observed = BTreeSet::new();
    for (p, res) in primes.iter().zip(resolutions) {
        match res {
            Err(Error::NoMatchingClass { .. }) => return Err(Error::ShapeMismatch { prime: *p }),
            Err(e) => return Err(e),
            Ok(FrobeniusResolution::Ramified) => {}
            Ok(FrobeniusResolution::Unique(c)) => {
                observed.insert(c);
            }
            Ok(FrobeniusResolution::Ambiguous(cs)) => observed.extend(cs),
        }
    }
    for (c, class) in ctx.group.classes().iter().enumerate() {
        if !observed.contains(&c) {
            ctx.warnings.push(alloc::format!(
                "class {c} (cycle type {:?}) never observed as Frobenius for p ≤ {validation_bound}",
                class.cycle_type
            ));
        }
    }
    Ok(ctx)
}

fn build_marker(group: &PermutationGroup, m: u64, images: Vec<u64>) -> Result<CyclotomicMarker> {
    if m == 0 {
        return Err(Error::MarkerInvalid("modulus must be positive".into()));
    }
    if images.len() != group.generators().len() {
        return Err(Error::MarkerInvalid(alloc::format!(
            "{} images for {} generators",
            images.len(),
            group.generators().len()
        )));
    }
    if m > 1 && images.iter().any(|&u| num_integer::gcd(u % m, m) != 1) {
        return Err(Error::MarkerInvalid("images must be units modulo m".into()));
    }
    let gens: Vec<usize> = group.generators().iter().map(|g| group.index_of(g).unwrap()).collect();
    let mut values = alloc::vec![u64::MAX; group.order()];
    values[group.identity()] = 1 % m;
    let mut queue = alloc::vec![group.identity()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (&g, &img) in gens.iter().zip(&images) {
            let y = group.mul(g, x);
            let v = (img % m) * values[x] % m;
            if values[y] == u64::MAX {
                values[y] = v;
                queue.push(y);
            } else if values[y] != v {
                return Err(Error::MarkerInvalid("generator images do not define a homomorphism".into()));
            }
        }
        k += 1;
    }
    for a in 0..group.order() {
        for b in 0..group.order() {
            if values[group.mul(a, b)] != values[a] * values[b] % m {
                return Err(Error::MarkerInvalid("generator images do not define a homomorphism".into()));
            }
        }
    }
    Ok(CyclotomicMarker { modulus: m, generator_images: images, values })
}

impl SplittingFieldContext {
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn marker(&self) -> Option<&CyclotomicMarker> {
        self.marker.as_ref()
    }

    /// Primes dividing the discriminant, ascending.
    pub fn ramified_primes(&self) -> &[u64] {
        &self.ramified
    }

    /// Classes whose cycle type matches the factor shape at `p`, filtered by
    /// the marker coordinate `p mod m` when a marker is present.
    pub fn frobenius_class(&self, p: u64) -> Result<FrobeniusResolution> {
        if self.ramified.contains(&p) {
            return Ok(FrobeniusResolution::Ramified);
        }
        let degrees = match self.poly.factor_shape(p) {
            FactorShape::Ramified => return Ok(FrobeniusResolution::Ramified),
            FactorShape::Degrees(d) => d,
        };
        let candidates: Vec<usize> = self
            .group
            .classes()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.cycle_type == degrees)
            .filter(|(_, c)| match &self.marker {
                Some(mk) if !p.is_multiple_of(mk.modulus) => mk.value(c.representative) == p % mk.modulus,
                _ => true,
            })
            .map(|(i, _)| i)
            .collect();
        match candidates.len() {
            0 => Err(Error::NoMatchingClass { prime: p }),
            1 => Ok(FrobeniusResolution::Unique(candidates[0])),
            _ => Ok(FrobeniusResolution::Ambiguous(candidates)),
        }
    }
}

/// A prime of an intermediate field: residue degree over `p` and the class of
/// its Frobenius inside the subgroup fixing the field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubfieldPrime {
    pub residue_degree: usize,
    pub frobenius_class: usize,
}

/// Precomputed coset data for splitting primes in the fixed field of `U`.
#[derive(Clone, Debug)]
pub struct SubfieldSplitter {
    pub subgroup: EmbeddedSubgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl SubfieldSplitter {
    pub fn new(group: &PermutationGroup, u: &Subgroup) -> Self {
        let (cosets, coset_of) = group.left_cosets(u);
        SubfieldSplitter { subgroup: group.embed(u), cosets, coset_of }
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    /// Orbits of `⟨σ⟩` on the left cosets `τU`: an orbit of size `f`
    /// with first coset `τU` gives a prime of norm `p^f` with Frobenius
    /// `τ⁻¹ σ^f τ ∈ U`.
    pub fn split(&self, group: &PermutationGroup, sigma: usize) -> Vec<SubfieldPrime> {
        let mut seen = alloc::vec![false; self.cosets.len()];
        let mut out = Vec::new();
        for start in 0..self.cosets.len() {
            if seen[start] {
                continue;
            }
            let tau = self.cosets[start][0];
            let mut f = 0;
            let mut current = start;
            loop {
                seen[current] = true;
                f += 1;
                current = self.coset_of[group.mul(sigma, self.cosets[current][0])];
                if current == start {
                    break;
                }
            }
            let frob = group.mul(group.inverse(tau), group.mul(group.pow(sigma, f as u64), tau));
            let local = self.subgroup.from_parent(frob).expect("τ⁻¹σ^fτ lies in U");
            out.push(SubfieldPrime { residue_degree: f, frobenius_class: self.subgroup.group.class_of(local) });
        }
        out
    }

    /// The same decomposition computed from double cosets `UgD`, `D = ⟨σ⟩`:
    /// residue degree `f` is least with `g σ^f g⁻¹ ∈ U`, Frobenius `g σ^f g⁻¹`.
    pub fn split_by_double_cosets(&self, group: &PermutationGroup, sigma: usize) -> Vec<SubfieldPrime> {
        let d: Vec<usize> = (0..group.element_order(sigma)).map(|k| group.pow(sigma, k as u64)).collect();
        let u = &self.subgroup.subgroup;
        let mut seen = alloc::vec![false; group.order()];
        let mut out = Vec::new();
        for g in 0..group.order() {
            if seen[g] {
                continue;
            }
            for &x in u.elements() {
                for &s in &d {
                    seen[group.mul(group.mul(x, g), s)] = true;
                }
            }
            let ginv = group.inverse(g);
            let f = (1..=d.len())
                .find(|&f| u.contains(group.mul(group.mul(g, d[f % d.len()]), ginv)))
                .expect("σ^|σ| = 1 lies in U");
            let frob = group.mul(group.mul(g, d[f % d.len()]), ginv);
            out.push(SubfieldPrime {
                residue_degree: f,
                frobenius_class: self.subgroup.group.class_of(self.subgroup.from_parent(frob).unwrap()),
            });
        }
        out
    }

    /// Splitting at `p`: `None` when ramified, an error when the Frobenius
    /// class is ambiguous.
    pub fn split_at(&self, ctx: &SplittingFieldContext, p: u64) -> Result<Option<Vec<SubfieldPrime>>> {
        match ctx.frobenius_class(p)? {
            FrobeniusResolution::Ramified => Ok(None),
            FrobeniusResolution::Ambiguous(_) => Err(Error::AmbiguousFrobenius { prime: p }),
            FrobeniusResolution::Unique(c) => {
                Ok(Some(self.split(ctx.group(), ctx.group().classes()[c].representative)))
            }
        }
    }
}

/// Per-class intersection counts `|c ∩ V1|`, `|c ∩ V2|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GassmannRow {
    pub class: usize,
    pub count_first: usize,
    pub count_second: usize,
}

/// Whether `V1` and `V2` meet every conjugacy class of `G` equally often.
pub fn gassmann_equivalent(group: &PermutationGroup, v1: &Subgroup, v2: &Subgroup) -> (bool, Vec<GassmannRow>) {
    let rows: Vec<GassmannRow> = group
        .classes()
        .iter()
        .enumerate()
        .map(|(c, class)| GassmannRow {
            class: c,
            count_first: class.members.iter().filter(|&&x| v1.contains(x)).count(),
            count_second: class.members.iter().filter(|&&x| v2.contains(x)).count(),
        })
        .collect();
    let equal = v1.order() == v2.order() && rows.iter().all(|r| r.count_first == r.count_second);
    (equal, rows)
}
