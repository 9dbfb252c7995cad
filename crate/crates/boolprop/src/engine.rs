//! Deciding and solving proportions by subset-maximal justification sets.
//!
//! A justification is a pair of term operations `phi -> psi`, read as a
//! rewrite rule. It justifies the transformation `a ~> b` when some
//! assignment takes `phi` to `a` and `psi` to `b`, and it justifies the
//! directed proportion `a ~> b :: c ~> d` when it justifies both
//! transformations. `d` is a *directed solution* when no other value `d'`
//! collects a strictly larger justification set, and the full proportion
//! `a:b::c:d` holds when both `a ~> b :: c ~> d` and `b ~> a :: d ~> c` do.
//!
//! Justification sets are computed at a fixed arity (`1..=ARITY_CAP`,
//! default 2) and always contain the trivial rules that justify every
//! quadruple; those sit in every set, so they never tip a subset comparison,
//! and display suppresses them by default. [`stable_arity_check`] reports
//! whether verdicts move when the arity does.

use std::fmt;

use thiserror::Error;

use crate::clone::{self, enumerate_term_functions, TermFunctionSet};
use crate::formula::{check_arity, ArityError, FunctionTable, StructureSpec};

/// The four values of a proportion statement `a:b::c:d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl Quadruple {
    pub fn new(a: bool, b: bool, c: bool, d: bool) -> Self {
        Quadruple { a, b, c, d }
    }

    /// Row `i` of the sixteen-row tables: bits of `i`, little-endian, in the
    /// order `a`, `b`, `c`, `d`.
    pub fn from_row_index(i: usize) -> Self {
        debug_assert!(i < 16);
        Quadruple {
            a: i & 1 == 1,
            b: i >> 1 & 1 == 1,
            c: i >> 2 & 1 == 1,
            d: i >> 3 & 1 == 1,
        }
    }

    pub fn row_index(&self) -> usize {
        usize::from(self.a)
            | usize::from(self.b) << 1
            | usize::from(self.c) << 2
            | usize::from(self.d) << 3
    }

    /// All sixteen quadruples in table row order.
    pub fn all() -> impl Iterator<Item = Quadruple> {
        (0..16).map(Quadruple::from_row_index)
    }

    /// The symmetric reading `b:a::d:c`.
    pub fn symmetric_swap(&self) -> Self {
        Quadruple::new(self.b, self.a, self.d, self.c)
    }

    pub fn with_d(&self, d: bool) -> Self {
        Quadruple { d, ..*self }
    }

    /// `a ~> b :: c ~> d`, the directed reading.
    pub fn directed_text(&self) -> String {
        format!(
            "{} ~> {} :: {} ~> {}",
            u8::from(self.a),
            u8::from(self.b),
            u8::from(self.c),
            u8::from(self.d)
        )
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "{}:{}::{}:{}",
            u8::from(self.a),
            u8::from(self.b),
            u8::from(self.c),
            u8::from(self.d)
        )
    }
}

/// A rewrite rule `phi -> psi` between term operations of equal arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Justification {
    phi: FunctionTable,
    psi: FunctionTable,
}

impl Justification {
    pub fn new(phi: FunctionTable, psi: FunctionTable) -> Self {
        debug_assert_eq!(phi.arity(), psi.arity());
        Justification { phi, psi }
    }

    pub fn phi(&self) -> FunctionTable {
        self.phi
    }

    pub fn psi(&self) -> FunctionTable {
        self.psi
    }

    pub fn arity(&self) -> u8 {
        self.phi.arity()
    }

    /// Whether some assignment `e` has `phi(e) = a` and `psi(e) = b`.
    pub fn justifies(&self, a: bool, b: bool) -> bool {
        self.realized_mask() >> pair_index(a, b) & 1 == 1
    }

    /// Justifies every value pair, hence every quadruple; e.g. a pair of two
    /// distinct projections.
    pub fn is_trivial(&self) -> bool {
        self.realized_mask() == 0b1111
    }

    /// Least assignment realizing `(a, b)`, as variable values.
    pub fn witness(&self, a: bool, b: bool) -> Option<Vec<bool>> {
        let n = self.arity() as usize;
        (0..1usize << n)
            .find(|&e| self.phi.value_at(e) == a && self.psi.value_at(e) == b)
            .map(|e| (0..n).map(|i| e >> i & 1 == 1).collect())
    }

    /// Bit `a + 2b` set iff `(a, b)` is realized by some assignment.
    fn realized_mask(&self) -> u8 {
        let mut mask = 0u8;
        for e in 0..self.phi.len() {
            mask |= 1 << pair_index(self.phi.value_at(e), self.psi.value_at(e));
        }
        mask
    }

    /// Both sides under the same variable permutation.
    pub fn permute_vars(&self, perm: &[u8]) -> Self {
        Justification {
            phi: self.phi.permute_vars(perm),
            psi: self.psi.permute_vars(perm),
        }
    }
}

fn pair_index(a: bool, b: bool) -> usize {
    usize::from(a) | usize::from(b) << 1
}

/// The justification set `Jus(a ~> b :: c ~> d)` of a quadruple in a
/// structure at a fixed arity: every admissible rule justifying both `a ~> b`
/// and `c ~> d`, trivial rules included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustificationSet {
    structure: StructureSpec,
    arity: u8,
    quadruple: Quadruple,
    members: Vec<Justification>, // sorted, deduplicated
}

impl JustificationSet {
    pub fn structure(&self) -> &StructureSpec {
        &self.structure
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn quadruple(&self) -> Quadruple {
        self.quadruple
    }

    pub fn members(&self) -> &[Justification] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: &Justification) -> bool {
        self.members.binary_search(j).is_ok()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.members.iter().filter(|j| !j.is_trivial()).count()
    }

    pub fn is_subset_of(&self, other: &JustificationSet) -> bool {
        is_subset(&self.members, &other.members)
    }

    /// One member per variable-renaming class, trivial rules filtered out
    /// unless requested. Justification sets are closed under simultaneous
    /// renaming, so this is exactly the members written up to renaming.
    pub fn distinct_rules(&self, show_trivial: bool) -> Vec<Justification> {
        let perms = permutations(self.arity);
        let mut seen: Vec<Justification> = Vec::new();
        let mut out = Vec::new();
        for j in &self.members {
            if !show_trivial && j.is_trivial() {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| j.permute_vars(p))
                .min()
                .expect("at least the identity permutation");
            if seen.binary_search(&canonical).is_err() {
                let at = seen.partition_point(|x| x < &canonical);
                seen.insert(at, canonical);
                out.push(*j);
            }
        }
        out
    }
}

fn permutations(n: u8) -> Vec<Vec<u8>> {
    fn rec(pool: &mut Vec<u8>, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pool.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..pool.len() {
            let v = pool.remove(i);
            acc.push(v);
            rec(pool, acc, out);
            acc.pop();
            pool.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn is_subset(a: &[Justification], b: &[Justification]) -> bool {
    // both sorted
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn is_strict_subset(a: &[Justification], b: &[Justification]) -> bool {
    a.len() < b.len() && is_subset(a, b)
}

fn intersect(a: &[Justification], b: &[Justification]) -> Vec<Justification> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Least member of `larger` missing from `smaller`.
fn first_in_difference(
    larger: &[Justification],
    smaller: &[Justification],
) -> Option<Justification> {
    larger
        .iter()
        .find(|j| smaller.binary_search(j).is_err())
        .copied()
}

/// The full pair universe of a structure at one arity: for each value pair
/// `(a, b)`, the sorted list of admissible rules justifying `a ~> b`, plus
/// the sixteen pairwise intersections those induce.
pub(crate) struct Universe {
    structure: StructureSpec,
    arity: u8,
    jus: [[Vec<Justification>; 4]; 4], // jus[pair(a,b)][pair(c,d)]
}

impl Universe {
    pub(crate) fn new(s: &StructureSpec, n: u8) -> Result<Universe, ArityError> {
        check_arity(n)?;
        let tables: Vec<FunctionTable> = clone::table_closure(s, n)?.into_iter().collect();
        let mut m: [Vec<Justification>; 4] = Default::default();
        for &phi in &tables {
            for &psi in &tables {
                let j = Justification::new(phi, psi);
                let mask = j.realized_mask();
                for (pair, slot) in m.iter_mut().enumerate() {
                    if mask >> pair & 1 == 1 {
                        slot.push(j);
                    }
                }
            }
        }
        // built in ascending (phi, psi) order, so each m[pair] is sorted
        let jus = std::array::from_fn(|ab| std::array::from_fn(|cd| intersect(&m[ab], &m[cd])));
        Ok(Universe {
            structure: *s,
            arity: n,
            jus,
        })
    }

    fn members(&self, q: Quadruple) -> &[Justification] {
        &self.jus[pair_index(q.a, q.b)][pair_index(q.c, q.d)]
    }

    fn jus_set(&self, q: Quadruple) -> JustificationSet {
        JustificationSet {
            structure: self.structure,
            arity: self.arity,
            quadruple: q,
            members: self.members(q).to_vec(),
        }
    }

    /// `d` is subset-maximal among candidates: the set for `d` is not
    /// strictly contained in the set for the other value. Equal sets (in
    /// particular, both empty) make every candidate a solution.
    fn directed_holds(&self, q: Quadruple) -> bool {
        !is_strict_subset(self.members(q), self.members(q.with_d(!q.d)))
    }

    fn full_holds(&self, q: Quadruple) -> bool {
        self.directed_holds(q) && self.directed_holds(q.symmetric_swap())
    }
}

/// Whether a verdict is about the directed or the full proportion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Directed,
    Full,
}

/// Which reading of a full proportion a refutation lives in: `Forward`
/// varies `d` in `a ~> b :: c ~> d`, `Backward` varies the last slot of the
/// symmetric reading `b ~> a :: d ~> c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A strict inclusion `Jus(.. ~> x) ⊊ Jus(.. ~> x')` between candidate
/// justification sets, which refutes both readings of the proportion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictInclusion {
    pub direction: Direction,
    /// The failing candidate's set; its quadruple names the candidate.
    pub smaller: JustificationSet,
    /// The strictly larger competitor's set.
    pub larger: JustificationSet,
    /// A member of `larger` missing from `smaller`; never a trivial rule.
    pub distinguishing: Justification,
}

/// What a verdict rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The subset-maximal justification set (the forward one, for full
    /// proportions).
    Maximal { justifications: JustificationSet },
    /// A strict inclusion refuting the proportion.
    StrictInclusion(StrictInclusion),
}

/// Outcome of deciding a directed or full proportion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionVerdict {
    pub holds: bool,
    pub mode: Mode,
    pub structure: StructureSpec,
    pub arity: u8,
    pub quadruple: Quadruple,
    pub evidence: Evidence,
}

impl ProportionVerdict {
    /// `B,neg |= 0:1::1:0` or `B |/= 0:0::1:0`; directed verdicts use the
    /// `~>` reading.
    pub fn headline(&self) -> String {
        let rel = if self.holds { "|=" } else { "|/=" };
        let stmt = match self.mode {
            Mode::Full => self.quadruple.to_string(),
            Mode::Directed => self.quadruple.directed_text(),
        };
        format!("{} {} {}", self.structure, rel, stmt)
    }
}

fn strict_inclusion_evidence(u: &Universe, failing: Quadruple, direction: Direction) -> Evidence {
    let smaller = u.jus_set(failing);
    let larger = u.jus_set(failing.with_d(!failing.d));
    let distinguishing = first_in_difference(&larger.members, &smaller.members)
        .expect("a strict inclusion has a distinguishing member");
    Evidence::StrictInclusion(StrictInclusion {
        direction,
        smaller,
        larger,
        distinguishing,
    })
}

fn directed_verdict(u: &Universe, q: Quadruple) -> ProportionVerdict {
    let holds = u.directed_holds(q);
    let evidence = if holds {
        Evidence::Maximal {
            justifications: u.jus_set(q),
        }
    } else {
        strict_inclusion_evidence(u, q, Direction::Forward)
    };
    ProportionVerdict {
        holds,
        mode: Mode::Directed,
        structure: u.structure,
        arity: u.arity,
        quadruple: q,
        evidence,
    }
}

fn full_verdict(u: &Universe, q: Quadruple) -> ProportionVerdict {
    let evidence = if !u.directed_holds(q) {
        strict_inclusion_evidence(u, q, Direction::Forward)
    } else {
        let back = q.symmetric_swap();
        if !u.directed_holds(back) {
            strict_inclusion_evidence(u, back, Direction::Backward)
        } else {
            Evidence::Maximal {
                justifications: u.jus_set(q),
            }
        }
    };
    ProportionVerdict {
        holds: matches!(evidence, Evidence::Maximal { .. }),
        mode: Mode::Full,
        structure: u.structure,
        arity: u.arity,
        quadruple: q,
        evidence,
    }
}

/// `Jus(a ~> b :: c ~> d)` in `s` at arity `n`, trivial members included.
pub fn justification_set(
    s: &StructureSpec,
    q: Quadruple,
    n: u8,
) -> Result<JustificationSet, ArityError> {
    Ok(Universe::new(s, n)?.jus_set(q))
}

/// Decides the directed proportion `a ~> b :: c ~> d` by subset-maximality
/// of its justification set against the competing value of `d`.
pub fn directed_proportion(
    s: &StructureSpec,
    q: Quadruple,
    n: u8,
) -> Result<ProportionVerdict, ArityError> {
    Ok(directed_verdict(&Universe::new(s, n)?, q))
}

/// Decides the full proportion `a:b::c:d`: both `a ~> b :: c ~> d` and
/// `b ~> a :: d ~> c` must be subset-maximal.
pub fn proportion(s: &StructureSpec, q: Quadruple, n: u8) -> Result<ProportionVerdict, ArityError> {
    Ok(full_verdict(&Universe::new(s, n)?, q))
}

/// Verdicts for all sixteen quadruples in table row order.
pub fn proportion_grid(s: &StructureSpec, n: u8) -> Result<[bool; 16], ArityError> {
    let u = Universe::new(s, n)?;
    let mut grid = [false; 16];
    for (slot, q) in grid.iter_mut().zip(Quadruple::all()) {
        *slot = u.full_holds(q);
    }
    Ok(grid)
}

/// All solutions `d` of the equation `a:b::c:z`, in `0 < 1` order.
pub fn solve(s: &StructureSpec, a: bool, b: bool, c: bool, n: u8) -> Result<Vec<bool>, ArityError> {
    let u = Universe::new(s, n)?;
    Ok([false, true]
        .into_iter()
        .filter(|&d| u.full_holds(Quadruple::new(a, b, c, d)))
        .collect())
}

/// Rejected input to [`functional_solution`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionalSolutionError {
    #[error("psi must be unary, got arity {0}")]
    NotUnary(u8),
    #[error("psi {psi} is not a term operation of {structure}")]
    NotAdmissible {
        structure: StructureSpec,
        psi: FunctionTable,
    },
    #[error(transparent)]
    Arity(#[from] ArityError),
}

/// The functional solution `psi(c)` to `a : psi(a) :: c : z`, with the
/// verdicts it is guaranteed to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalSolution {
    pub psi: FunctionTable,
    pub a: bool,
    pub c: bool,
    /// `psi(c)`.
    pub solution: bool,
    /// The characteristic rule `z0 -> psi(z0)`, padded to the working arity.
    pub characteristic: Justification,
    /// `a ~> psi(a) :: c ~> psi(c)`; holds for every admissible `psi`.
    pub directed: ProportionVerdict,
    /// The full `a : psi(a) :: c : psi(c)`, decided only when `psi` is
    /// injective (the uniqueness hypothesis of the functional-solution rule).
    pub full: Option<ProportionVerdict>,
}

/// Applies a unary term operation pointwise: `a ~> psi(a) :: c ~> psi(c)`.
///
/// The characteristic rule `z -> psi(z)` justifies this directed proportion
/// for any admissible unary `psi`, and subset-maximality follows; when `psi`
/// is injective the full proportion holds as well. Serves as an independent
/// cross-check on [`directed_proportion`] and [`proportion`].
pub fn functional_solution(
    s: &StructureSpec,
    psi: FunctionTable,
    a: bool,
    c: bool,
    n: u8,
) -> Result<FunctionalSolution, FunctionalSolutionError> {
    if psi.arity() != 1 {
        return Err(FunctionalSolutionError::NotUnary(psi.arity()));
    }
    if !clone::table_closure(s, 1)?.contains(&psi) {
        return Err(FunctionalSolutionError::NotAdmissible { structure: *s, psi });
    }
    let b = psi.value_at(usize::from(a));
    let d = psi.value_at(usize::from(c));
    let u = Universe::new(s, n)?;
    let q = Quadruple::new(a, b, c, d);
    let injective = psi.value_at(0) != psi.value_at(1);
    Ok(FunctionalSolution {
        psi,
        a,
        c,
        solution: d,
        characteristic: Justification::new(
            FunctionTable::projection(n, 0)?,
            compose_unary(psi, 0, n)?,
        ),
        directed: directed_verdict(&u, q),
        full: injective.then(|| full_verdict(&u, q)),
    })
}

/// `psi(z_var)` as an `n`-ary table.
fn compose_unary(psi: FunctionTable, var: u8, n: u8) -> Result<FunctionTable, ArityError> {
    check_arity(n)?;
    let values: Vec<bool> = (0..1usize << n)
        .map(|e| psi.value_at(e >> var & 1))
        .collect();
    FunctionTable::from_values(&values)
}

/// One rule of an explanation, rendered through representative terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplainedJustification {
    pub phi: String,
    pub psi: String,
    /// Least assignment realizing the source transformation `a ~> b`.
    pub source_witness: Vec<bool>,
    /// Least assignment realizing the target transformation `c ~> d`.
    pub target_witness: Vec<bool>,
}

/// Witness-level account of a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExplanationDetail {
    /// The proportion holds: the rules of the maximal set, one per renaming
    /// class.
    Justified {
        shown: Vec<ExplainedJustification>,
        member_count: usize,
        nontrivial_count: usize,
    },
    /// The proportion fails: the distinguishing rule of the strict
    /// inclusion, witnessed against the larger set's quadruple.
    Refuted {
        distinguishing: ExplainedJustification,
    },
}

/// A [`ProportionVerdict`] plus rendered rules and witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explanation {
    pub verdict: ProportionVerdict,
    pub detail: ExplanationDetail,
}

impl Explanation {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.verdict.headline());
        out.push_str(&format!("  [arity {}]\n", self.verdict.arity));
        match &self.detail {
            ExplanationDetail::Justified {
                shown,
                member_count,
                nontrivial_count,
            } => {
                out.push_str(&format!(
                    "Jus({}) is subset-maximal: {} members, {} nontrivial\n",
                    self.verdict.quadruple.directed_text(),
                    member_count,
                    nontrivial_count
                ));
                if shown.is_empty() {
                    out.push_str("no rules to show\n");
                } else {
                    out.push_str("rules (distinct modulo variable renaming):\n");
                    for rule in shown {
                        out.push_str(&format!(
                            "  {} -> {}   [witness {}, then {}]\n",
                            rule.phi,
                            rule.psi,
                            render_assignment(&rule.source_witness),
                            render_assignment(&rule.target_witness)
                        ));
                    }
                }
            }
            ExplanationDetail::Refuted { distinguishing } => {
                let (smaller, larger, direction) = match &self.verdict.evidence {
                    Evidence::StrictInclusion(si) => (&si.smaller, &si.larger, si.direction),
                    Evidence::Maximal { .. } => unreachable!("refutation carries an inclusion"),
                };
                if direction == Direction::Backward {
                    out.push_str("the reversed reading fails: ");
                }
                out.push_str(&format!(
                    "Jus({}) is strictly contained in Jus({}): {} vs {} members\n",
                    smaller.quadruple().directed_text(),
                    larger.quadruple().directed_text(),
                    smaller.len(),
                    larger.len()
                ));
                out.push_str(&format!(
                    "distinguishing rule: {} -> {}   [witness {}, then {}]\n",
                    distinguishing.phi,
                    distinguishing.psi,
                    render_assignment(&distinguishing.source_witness),
                    render_assignment(&distinguishing.target_witness)
                ));
            }
        }
        out
    }
}

fn render_assignment(bits: &[bool]) -> String {
    bits.iter()
        .enumerate()
        .map(|(i, v)| format!("z{i}={}", u8::from(*v)))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders rules through minimal representative terms, witnessed against the
/// given quadruple. Each rule is shown in its lowest-variable renaming
/// (`z0 -> ~z0` rather than `z1 -> ~z1`); justification sets are closed
/// under renaming, so the shown variant is always a genuine member.
fn render_rules(
    rules: &[Justification],
    tfs: &TermFunctionSet,
    q: Quadruple,
) -> Vec<ExplainedJustification> {
    let mut out: Vec<ExplainedJustification> = rules
        .iter()
        .map(|j| {
            let perms = permutations(j.arity());
            let (phi, psi, image) = perms
                .iter()
                .map(|p| {
                    let image = j.permute_vars(p);
                    (
                        render_table(image.phi(), tfs),
                        render_table(image.psi(), tfs),
                        image,
                    )
                })
                .min_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)))
                .expect("at least the identity permutation");
            ExplainedJustification {
                phi,
                psi,
                source_witness: image.witness(q.a, q.b).expect("member justifies the source"),
                target_witness: image.witness(q.c, q.d).expect("member justifies the target"),
            }
        })
        .collect();
    // order by representative text, keeping rendering independent of the
    // internal table ordering
    out.sort_by(|x, y| (&x.phi, &x.psi).cmp(&(&y.phi, &y.psi)));
    out
}

fn render_table(t: FunctionTable, tfs: &TermFunctionSet) -> String {
    match tfs.representative(&t) {
        Some(f) => f.to_string(),
        None => t.to_string(),
    }
}

/// Decides `a:b::c:d` and explains the verdict: each maximal-set rule with
/// one witness pair when it holds, the strict inclusion and distinguishing
/// rule when it fails.
pub fn explain(
    s: &StructureSpec,
    q: Quadruple,
    n: u8,
    show_trivial: bool,
) -> Result<Explanation, ArityError> {
    let u = Universe::new(s, n)?;
    let tfs = enumerate_term_functions(s, n)?;
    let verdict = full_verdict(&u, q);
    let detail = match &verdict.evidence {
        Evidence::Maximal { justifications } => ExplanationDetail::Justified {
            shown: render_rules(&justifications.distinct_rules(show_trivial), &tfs, q),
            member_count: justifications.len(),
            nontrivial_count: justifications.nontrivial_count(),
        },
        Evidence::StrictInclusion(si) => ExplanationDetail::Refuted {
            distinguishing: render_rules(
                std::slice::from_ref(&si.distinguishing),
                &tfs,
                si.larger.quadruple(),
            )
            .remove(0),
        },
    };
    Ok(Explanation { verdict, detail })
}

/// A quadruple whose verdict moves with the arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityDisagreement {
    pub quadruple: Quadruple,
    /// `(arity, holds)` for each checked arity.
    pub verdicts: Vec<(u8, bool)>,
}

/// Result of [`stable_arity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub structure: StructureSpec,
    pub lo: u8,
    pub hi: u8,
    pub disagreements: Vec<StabilityDisagreement>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "arity stability for {} over {}..={}: ",
            self.structure, self.lo, self.hi
        );
        if self.passed() {
            out.push_str("stable\n");
        } else {
            out.push_str(&format!("{} disagreement(s)\n", self.disagreements.len()));
            for d in &self.disagreements {
                let cells = d
                    .verdicts
                    .iter()
                    .map(|(n, v)| format!("arity {n}: {}", if *v { "T" } else { "F" }))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!("  {} differs: {}\n", d.quadruple, cells));
            }
        }
        out
    }
}

/// Recomputes all sixteen verdicts at every arity in `lo..=hi` and reports
/// each quadruple whose verdict changes. Guards the default-arity choice.
pub fn stable_arity_check(
    s: &StructureSpec,
    lo: u8,
    hi: u8,
) -> Result<StabilityReport, ArityError> {
    check_arity(lo)?;
    check_arity(hi)?;
    if lo >= hi {
        return Err(ArityError::BadRange { lo, hi });
    }
    let grids: Vec<(u8, [bool; 16])> = (lo..=hi)
        .map(|n| proportion_grid(s, n).map(|g| (n, g)))
        .collect::<Result<_, _>>()?;
    let mut disagreements = Vec::new();
    for (row, q) in Quadruple::all().enumerate() {
        let verdicts: Vec<(u8, bool)> = grids.iter().map(|(n, g)| (*n, g[row])).collect();
        if verdicts.iter().any(|(_, v)| *v != verdicts[0].1) {
            disagreements.push(StabilityDisagreement {
                quadruple: q,
                verdicts,
            });
        }
    }
    Ok(StabilityReport {
        structure: *s,
        lo,
        hi,
        disagreements,
    })
}
