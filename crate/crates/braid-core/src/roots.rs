//! Constructive root conjugacy for partially pure braids.
//!
//! Given P-pure braids with `α^k = β^k`, these routines build a P-straight,
//! 1-unlinked conjugator `γ` with `β = γαγ⁻¹`, dispatching on the
//! Nielsen–Thurston type the way the underlying construction does: periodic
//! inputs go through ε-power normal forms, reducible inputs recurse through
//! a preserved standard curve system, and equal inputs (covering the
//! pseudo-Anosov case) take the identity. Every certificate is re-verified
//! before it is returned.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::{
    conjugacy_search, conjugacy_search_filtered, equals, is_p_straight, is_periodic,
};
use crate::linking::lk;
use crate::perm::Permutation;
use crate::periodic::{bracket_index, conjugator_to_eps_power, mu_factor, mu_standardize, MuShape};
use crate::tubular::{
    act_on_composition, block_sum, cable, compose_decomposition, extract,
    find_preserved_compositions, Composition, Decomposition, ReductionHint,
};
use crate::word::{BraidWord, StrandSet};

/// Counts the internal telescoping/commutation identities checked in debug
/// builds; lets callers confirm the checks actually ran.
static INTERNAL_IDENTITY_CHECKS: AtomicUsize = AtomicUsize::new(0);

pub fn internal_identity_checks() -> usize {
    INTERNAL_IDENTITY_CHECKS.load(Ordering::Relaxed)
}

fn debug_check_identity(holds: impl FnOnce() -> bool, what: &str) {
    if cfg!(debug_assertions) {
        INTERNAL_IDENTITY_CHECKS.fetch_add(1, Ordering::Relaxed);
        assert!(holds(), "internal identity violated: {what}");
    }
}

/// A root-conjugacy instance: P-pure `alpha`, `beta` with
/// `alpha^k = beta^k`. The optional hint standardizes the reduction system
/// of a reducible `alpha` whose preserved system is not found by scanning.
#[derive(Debug, Clone)]
pub struct RootProblem {
    pub alpha: BraidWord,
    pub beta: BraidWord,
    pub p: StrandSet,
    pub k: i64,
    pub hint: Option<ReductionHint>,
}

impl RootProblem {
    pub fn new(alpha: BraidWord, beta: BraidWord, p: StrandSet, k: i64) -> Self {
        RootProblem {
            alpha,
            beta,
            p,
            k,
            hint: None,
        }
    }

    pub fn with_hint(mut self, hint: ReductionHint) -> Self {
        self.hint = Some(hint);
        self
    }

    fn strands(&self) -> usize {
        self.alpha.strands()
    }
}

/// A conjugator together with the predicates that were re-verified on it.
/// A flag is only ever set after the corresponding check has passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub gamma: BraidWord,
    pub conjugates: bool,
    pub p_straight: bool,
    pub one_unlinked: bool,
    /// `lk(gamma)` when `gamma` is 1-pure.
    pub lk_value: Option<i64>,
}

/// Search configuration.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Conjugator-length bound for every bounded search.
    pub depth: usize,
}

pub const DEFAULT_SEARCH_DEPTH: usize = 8;

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            depth: DEFAULT_SEARCH_DEPTH,
        }
    }
}

/// Re-verify a conjugator against its problem and mint the certificate.
/// With `1 ∈ P` all three predicates must hold; with `P = ∅` only the
/// conjugation itself is certified.
fn certify(problem: &RootProblem, gamma: BraidWord) -> Result<ConjugacyCertificate> {
    let gamma = gamma.free_reduce();
    if !equals(&gamma.conjugate(&problem.alpha)?, &problem.beta)? {
        return Err(Error::VerificationFailed(
            "gamma does not conjugate alpha to beta".into(),
        ));
    }
    if problem.p.is_empty() {
        let lk_value = gamma.is_i_pure(1).then(|| lk(&gamma)).transpose()?;
        return Ok(ConjugacyCertificate {
            gamma,
            conjugates: true,
            p_straight: false,
            one_unlinked: false,
            lk_value,
        });
    }
    if !is_p_straight(&gamma, &problem.p) {
        return Err(Error::VerificationFailed("gamma is not P-straight".into()));
    }
    let lkg = lk(&gamma)?;
    if lkg != 0 {
        return Err(Error::VerificationFailed("gamma is not 1-unlinked".into()));
    }
    Ok(ConjugacyCertificate {
        gamma,
        conjugates: true,
        p_straight: true,
        one_unlinked: true,
        lk_value: Some(lkg),
    })
}

/// Transport mode for [`transport_by_chi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransportMode {
    /// `χ` is 1-pure and `inner` solves the conjugated problem
    /// `(χαχ⁻¹, χβχ⁻¹, π_χ(P))`; the answer is `χ⁻¹·inner·χ`.
    Conjugate,
    /// `χ` is P-straight, 1-unlinked and commutes with `β^k`, and `inner`
    /// solves `(α, χβχ⁻¹, P)`; the answer is `χ⁻¹·inner`.
    Absorb,
}

/// Pull a solution of a transported problem back to the original one.
pub fn transport_by_chi(
    chi: &BraidWord,
    problem: &RootProblem,
    inner_gamma: &BraidWord,
    mode: TransportMode,
) -> Result<BraidWord> {
    match mode {
        TransportMode::Conjugate => {
            if !chi.is_i_pure(1) {
                return Err(Error::HypothesisViolated("chi must be 1-pure".into()));
            }
            let ta = chi.conjugate(&problem.alpha)?;
            let tb = chi.conjugate(&problem.beta)?;
            if !equals(&inner_gamma.conjugate(&ta)?, &tb)? {
                return Err(Error::HypothesisViolated(
                    "inner gamma does not solve the conjugated problem".into(),
                ));
            }
            chi.inverse().concat(inner_gamma)?.concat(chi)
        }
        TransportMode::Absorb => {
            if !is_p_straight(chi, &problem.p) {
                return Err(Error::HypothesisViolated("chi must be P-straight".into()));
            }
            if lk(chi)? != 0 {
                return Err(Error::HypothesisViolated("chi must be 1-unlinked".into()));
            }
            let bk = problem.beta.power(problem.k);
            if !equals(&chi.concat(&bk)?, &bk.concat(chi)?)? {
                return Err(Error::HypothesisViolated(
                    "chi must commute with beta^k".into(),
                ));
            }
            let tb = chi.conjugate(&problem.beta)?;
            if !equals(&inner_gamma.conjugate(&problem.alpha)?, &tb)? {
                return Err(Error::HypothesisViolated(
                    "inner gamma does not solve the absorbed problem".into(),
                ));
            }
            chi.inverse().concat(inner_gamma)
        }
    }
}

fn validate_problem(problem: &RootProblem) -> Result<()> {
    if problem.alpha.strands() != problem.beta.strands() {
        return Err(Error::StrandCountMismatch(
            problem.alpha.strands(),
            problem.beta.strands(),
        ));
    }
    if problem.k == 0 {
        return Err(Error::NotApplicable("k must be nonzero".into()));
    }
    if let Some(max) = problem.p.iter().last() {
        if max > problem.strands() {
            return Err(Error::IndexOutOfRange {
                index: max as i64,
                strands: problem.strands(),
            });
        }
    }
    if !problem.p.is_empty() && !problem.p.contains(1) {
        return Err(Error::NotApplicable(
            "P must contain strand 1 (or be empty for plain conjugacy)".into(),
        ));
    }
    if !problem.alpha.is_p_pure(&problem.p) || !problem.beta.is_p_pure(&problem.p) {
        return Err(Error::HypothesisViolated("inputs must be P-pure".into()));
    }
    if !equals(
        &problem.alpha.power(problem.k),
        &problem.beta.power(problem.k),
    )? {
        return Err(Error::HypothesisViolated("alpha^k must equal beta^k".into()));
    }
    Ok(())
}

/// Solve the irreducible cases: pseudo-Anosov or central inputs force
/// `α = β` and take the identity; periodic non-central inputs go through
/// ε-power normal forms (which also forces `P = {1}`).
pub fn irred_root_conjugator(
    problem: &RootProblem,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    validate_problem(problem)?;
    if equals(&problem.alpha, &problem.beta)? {
        return certify(problem, BraidWord::identity(problem.strands()));
    }
    if !is_periodic(&problem.alpha) {
        return Err(Error::NotApplicable(
            "inputs differ and are not periodic; irreducible dispatch does not apply".into(),
        ));
    }
    let (g1, m1) = conjugator_to_eps_power(&problem.alpha, opts.depth)?;
    let (g2, m2) = conjugator_to_eps_power(&problem.beta, opts.depth)?;
    if m1 != m2 {
        return Err(Error::VerificationFailed(
            "equal powers forced distinct rotation exponents".into(),
        ));
    }
    if !problem.p.is_empty() {
        // a non-central periodic 1-pure braid has exactly one pure strand
        debug_assert_eq!(problem.p.len(), 1);
        debug_assert!(problem.p.contains(1));
    }
    let gamma = g2.inverse().concat(&g1)?;
    certify(problem, gamma)
}

/// Relabel `theta` so that its fixed points become `1..=m` (keeping 1 first)
/// and every cycle acts on a consecutive run by stepping each slot down,
/// wrapping the bottom to the top.
fn cycle_normalizing_permutation(theta: &Permutation) -> Permutation {
    let r = theta.degree();
    let mut images = vec![0usize; r];
    let mut next = 1usize;
    for f in theta.fixed_points() {
        images[f - 1] = next;
        next += 1;
    }
    for cycle in theta.cycles() {
        let t = cycle.len();
        // walking the cycle forward fills its run top-down
        for (u, &x) in cycle.iter().enumerate() {
            images[x - 1] = next - 1 + t - u;
        }
        next += t;
    }
    Permutation::from_images(images).expect("relabeling is a bijection")
}

fn is_normal_cycle_shape(theta: &Permutation) -> bool {
    let fixed = theta.fixed_points();
    if fixed != (1..=fixed.len()).collect::<Vec<_>>() {
        return false;
    }
    let mut at = fixed.len() + 1;
    while at <= theta.degree() {
        let mut len = 0usize;
        // run of slots stepping down, with the bottom wrapping to the top
        while at + len <= theta.degree() && theta.apply(at + len) != at + len {
            len += 1;
            if len >= 2 && theta.apply(at + len - 1) != at + len - 2 {
                return false;
            }
        }
        if len < 2 || theta.apply(at) != at + len - 1 {
            return false;
        }
        at += len;
    }
    true
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Solve a reducible problem whose decompositions over `n` share one
/// exterior: conjugate the interiors blockwise, recursing on fixed blocks
/// and telescoping conjugators along the cycles.
pub fn same_ext_root_conjugator(
    problem: &RootProblem,
    n: &Composition,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    validate_problem(problem)?;
    let da = extract(&problem.alpha, n)?;
    let db = extract(&problem.beta, n)?;
    if !equals(&da.exterior, &db.exterior)? {
        return Err(Error::ExteriorMismatch);
    }
    let theta = da.exterior.permutation();
    if act_on_composition(&theta, n)? != *n {
        return Err(Error::HypothesisViolated(
            "the composition is not invariant under the shared exterior".into(),
        ));
    }

    if !is_normal_cycle_shape(&theta) {
        let rho = cycle_normalizing_permutation(&theta);
        let zeta0 = permutation_braid(&rho, n.len());
        let zeta = cable(&zeta0, n)?;
        let transported = RootProblem::new(
            zeta.conjugate(&problem.alpha)?,
            zeta.conjugate(&problem.beta)?,
            zeta.permutation().apply_set(&problem.p),
            problem.k,
        );
        let n2 = act_on_composition(&rho, n)?;
        let inner = same_ext_root_conjugator(&transported, &n2, opts)?;
        let gamma = transport_by_chi(&zeta, problem, &inner.gamma, TransportMode::Conjugate)?;
        return certify(problem, gamma);
    }

    let m = theta.fixed_points().len();
    let cycles = theta.cycles();
    let cycle_lcm = cycles.iter().fold(1i64, |acc, c| lcm(acc, c.len() as i64));
    let k2 = problem.k * cycle_lcm;
    debug_assert!(equals(&problem.alpha.power(k2), &problem.beta.power(k2)).unwrap());

    let mut parts: Vec<BraidWord> = Vec::with_capacity(n.len());
    let (_, locals) = n.project_strand_set(&problem.p);
    for i in 1..=m {
        let a_i = &da.interiors[i - 1];
        let b_i = &db.interiors[i - 1];
        let p_i = &locals[i - 1];
        debug_assert!(equals(&a_i.power(problem.k), &b_i.power(problem.k)).unwrap());
        let gamma_i = if p_i.is_empty() {
            if equals(a_i, b_i)? {
                BraidWord::identity(a_i.strands())
            } else {
                conjugacy_search(a_i, b_i, opts.depth)?
            }
        } else if p_i.contains(1) {
            let sub = RootProblem::new(a_i.clone(), b_i.clone(), p_i.clone(), problem.k);
            root_conjugator_with(&sub, opts)?.gamma
        } else {
            // move some point of P into first position, solve, move back
            let target = p_i.min().expect("nonempty");
            let mut images: Vec<usize> = Vec::with_capacity(a_i.strands());
            images.push(target);
            images.extend((1..=a_i.strands()).filter(|&x| x != target));
            let rho = Permutation::from_images(images)
                .expect("cycle to front is a bijection")
                .inverse();
            debug_assert_eq!(rho.apply(target), 1);
            let zeta_i = permutation_braid(&rho, a_i.strands());
            let sub = RootProblem::new(
                zeta_i.conjugate(a_i)?,
                zeta_i.conjugate(b_i)?,
                zeta_i.permutation().apply_set(p_i),
                problem.k,
            );
            let chi_i = root_conjugator_with(&sub, opts)?.gamma;
            zeta_i.inverse().concat(&chi_i)?.concat(&zeta_i)?
        };
        parts.push(gamma_i);
    }

    for cycle in &cycles {
        let start = cycle.iter().min().expect("cycles are nonempty") - 1;
        let c = cycle.len();
        let a_blk: Vec<&BraidWord> = (0..c).map(|j| &da.interiors[start + j]).collect();
        let b_blk: Vec<&BraidWord> = (0..c).map(|j| &db.interiors[start + j]).collect();
        let prod = |ws: &[&BraidWord], upto: usize| -> BraidWord {
            let mut out = BraidWord::identity(ws[0].strands());
            for w in &ws[..upto] {
                out = out.concat(w).expect("equal strand counts");
            }
            out
        };
        let tilde_a = prod(&a_blk, c);
        let tilde_b = prod(&b_blk, c);
        let p_c = k2 / c as i64;
        debug_assert!(equals(&tilde_a.power(p_c), &tilde_b.power(p_c)).unwrap());
        let zeta = if equals(&tilde_a, &tilde_b)? {
            BraidWord::identity(tilde_a.strands())
        } else {
            conjugacy_search(&tilde_a, &tilde_b, opts.depth)?
        };
        let mut cycle_parts = Vec::with_capacity(c);
        for j in 1..=c {
            let g = prod(&b_blk, j)
                .inverse()
                .concat(&zeta)?
                .concat(&prod(&a_blk, j))?
                .free_reduce();
            cycle_parts.push(g);
        }
        for j in 1..=c {
            let prev = &cycle_parts[(j + c - 2) % c];
            let cur = &cycle_parts[j - 1];
            debug_check_identity(
                || {
                    equals(
                        &prev.concat(a_blk[j - 1]).unwrap(),
                        &b_blk[j - 1].concat(cur).unwrap(),
                    )
                    .unwrap()
                },
                "cycle telescoping",
            );
        }
        parts.extend(cycle_parts);
    }

    let gamma = block_sum(&parts, n)?;
    certify(problem, gamma)
}

/// A positive word realizing the given permutation (its permutation braid).
fn permutation_braid(p: &Permutation, strands: usize) -> BraidWord {
    let mut q = p.clone();
    let mut rev: Vec<i32> = Vec::new();
    'peel: loop {
        for i in 1..strands {
            if q.apply(i) > q.apply(i + 1) {
                rev.push(i as i32);
                q.swap_entries(i);
                continue 'peel;
            }
        }
        break;
    }
    rev.reverse();
    BraidWord::new(strands, rev).expect("letters in range")
}

/// Standardized data for the periodic-exterior commutant constructions.
struct PerExtContext {
    n: Composition,
    zeta: BraidWord,
    n_std: Composition,
    shape: MuShape,
    interiors_std: Vec<BraidWord>,
}

fn per_ext_context(
    alpha: &BraidWord,
    n: &Composition,
    p: &StrandSet,
    opts: &SolveOptions,
) -> Result<PerExtContext> {
    if !p.contains(1) {
        return Err(Error::HypothesisViolated("P must contain strand 1".into()));
    }
    if !alpha.is_p_pure(p) {
        return Err(Error::HypothesisViolated("alpha must be P-pure".into()));
    }
    let d = extract(alpha, n)?;
    if !is_periodic(&d.exterior) {
        return Err(Error::NotPeriodicExterior);
    }
    let (zeta0, shape) = match mu_standardize(&d.exterior, opts.depth) {
        Ok(v) => v,
        Err(Error::CentralInput) => return Err(Error::CentralExterior),
        Err(e) => return Err(e),
    };
    let n_std = act_on_composition(&zeta0.permutation(), n)?;
    let zeta = cable(&zeta0, n)?;
    let alpha_std = zeta.conjugate(alpha)?;
    let d_std = extract(&alpha_std, &n_std)?;
    debug_assert!({
        let target = crate::periodic::mu(shape.s, shape.d)?.power(shape.t);
        equals(&d_std.exterior, &target)?
    });
    Ok(PerExtContext {
        n: n.clone(),
        zeta,
        n_std,
        shape,
        interiors_std: d_std.interiors,
    })
}

impl PerExtContext {
    /// Build a P-straight braid commuting with the (transported-back) alpha
    /// whose linking number is the size of block `i`.
    fn commutant(&self, i: usize) -> Result<BraidWord> {
        let MuShape { s, d, t, .. } = self.shape;
        if i < 2 || i > self.n.len() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                strands: self.n.len(),
            });
        }
        let size = self.n.parts()[i - 1];
        let j = (1..=d)
            .find(|&j| self.n_std.parts()[bracket_index(s, j, 1) - 1] == size)
            .ok_or_else(|| {
                Error::HypothesisViolated("no bracket block matches the requested size".into())
            })?;
        // a > 0 minimal with a·t + b·s = 1
        let a = (1..=s as i64)
            .find(|a| (a * t).rem_euclid(s as i64) == 1)
            .expect("t is invertible modulo s");
        let interior_at =
            |k: usize, l: i64| -> &BraidWord { &self.interiors_std[bracket_index(s, k, l) - 1] };
        let mut parts: Vec<BraidWord> = self
            .n_std
            .parts()
            .iter()
            .map(|&sz| BraidWord::identity(sz))
            .collect();
        for l in 1..=s as i64 {
            let mut g = BraidWord::identity(self.n_std.parts()[bracket_index(s, j, l) - 1]);
            for u in (0..a).rev() {
                g = g.concat(interior_at(j, l - u * t))?;
            }
            parts[bracket_index(s, j, l) - 1] = g;
        }
        for l in 1..=s as i64 {
            debug_check_identity(
                || {
                    let lhs = interior_at(j, l - 1)
                        .concat(&parts[bracket_index(s, j, l) - 1])
                        .unwrap();
                    let rhs = parts[bracket_index(s, j, l - t) - 1]
                        .concat(interior_at(j, l))
                        .unwrap();
                    equals(&lhs, &rhs).unwrap()
                },
                "mu-block sliding",
            );
        }
        let gamma_std = cable(&mu_factor(s, d, j)?, &self.n_std)?
            .concat(&block_sum(&parts, &self.n_std)?)?;
        self.zeta
            .inverse()
            .concat(&gamma_std)?
            .concat(&self.zeta)
            .map(|g| g.free_reduce())
    }
}

/// For `2 ≤ i ≤ r`: a P-straight braid commuting with `alpha` whose linking
/// number equals `n_i`, built from a μ-factor cable over the standardized
/// decomposition.
pub fn per_ext_commutant(
    alpha: &BraidWord,
    n: &Composition,
    p: &StrandSet,
    i: usize,
    opts: &SolveOptions,
) -> Result<BraidWord> {
    let ctx = per_ext_context(alpha, n, p, opts)?;
    let gamma = ctx.commutant(i)?;
    verify_commutant(alpha, p, &gamma, n.parts()[i - 1] as i64)?;
    Ok(gamma)
}

fn verify_commutant(alpha: &BraidWord, p: &StrandSet, gamma: &BraidWord, want_lk: i64) -> Result<()> {
    if !equals(&gamma.concat(alpha)?, &alpha.concat(gamma)?)? {
        return Err(Error::VerificationFailed(
            "commutant does not commute with alpha".into(),
        ));
    }
    if !is_p_straight(gamma, p) {
        return Err(Error::VerificationFailed("commutant is not P-straight".into()));
    }
    if lk(gamma)? != want_lk {
        return Err(Error::VerificationFailed(
            "commutant has the wrong linking number".into(),
        ));
    }
    Ok(())
}

/// Build a P-straight braid commuting with `alpha` whose linking number is
/// `−lk(χ)`, as a product of block-size commutants weighted by the pairwise
/// linking numbers of χ's exterior.
pub fn per_ext_balance(
    alpha: &BraidWord,
    n: &Composition,
    p: &StrandSet,
    chi: &Decomposition,
    opts: &SolveOptions,
) -> Result<BraidWord> {
    let chi_word = compose_decomposition(chi)?;
    if !is_p_straight(&chi_word, p) {
        return Err(Error::HypothesisViolated("chi must be P-straight".into()));
    }
    if lk(&chi.interiors[0])? != 0 {
        return Err(Error::HypothesisViolated(
            "chi's first interior must be 1-unlinked".into(),
        ));
    }
    let ctx = per_ext_context(alpha, n, p, opts)?;
    let mut gamma = BraidWord::identity(alpha.strands());
    for i in 2..=n.len() {
        let e = crate::linking::lk_i(&chi.exterior, i)?
            .as_integer()
            .expect("pairwise linking of a 1-pure exterior is integral");
        if e == 0 {
            continue;
        }
        let z = ctx.commutant(i)?;
        verify_commutant(alpha, p, &z, n.parts()[i - 1] as i64)?;
        gamma = gamma.concat(&z.power(-e))?;
    }
    gamma = gamma.free_reduce();
    if !equals(&gamma.concat(alpha)?, &alpha.concat(&gamma)?)? {
        return Err(Error::VerificationFailed(
            "balance braid does not commute with alpha".into(),
        ));
    }
    if lk(&gamma)? != -lk(&chi_word)? {
        return Err(Error::VerificationFailed(
            "balance braid has the wrong linking number".into(),
        ));
    }
    if !is_p_straight(&gamma, p) {
        return Err(Error::VerificationFailed("balance braid is not P-straight".into()));
    }
    Ok(gamma)
}

/// Solve a reducible problem over a known preserved composition.
fn solve_reducible(
    problem: &RootProblem,
    n: &Composition,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    let da = extract(&problem.alpha, n)?;
    let db = extract(&problem.beta, n)?;
    if act_on_composition(&da.exterior.permutation(), n)? != *n
        || act_on_composition(&db.exterior.permutation(), n)? != *n
    {
        return Err(Error::NotStandardlyReduced);
    }
    if equals(&da.exterior, &db.exterior)? {
        return same_ext_root_conjugator(problem, n, opts);
    }
    if !is_periodic(&da.exterior) {
        // distinct non-periodic exteriors cannot arise over the canonical
        // system; over an auxiliary one the caller should try the next
        return Err(Error::ExteriorMismatch);
    }
    // periodic non-central shared-exterior-class case: find a conjugator
    // preserving the curve system, then repair its first interior and
    // balance away its linking number
    let accept = |g: &BraidWord| -> bool {
        extract(g, n)
            .ok()
            .map(|dz| {
                act_on_composition(&dz.exterior.permutation(), n)
                    .map(|acted| acted == *n)
                    .unwrap_or(false)
            })
            .unwrap_or(false)
    };
    let zeta = conjugacy_search_filtered(&problem.alpha, &problem.beta, opts.depth, accept)?;
    let dz = extract(&zeta, n)?;
    debug_assert!(dz.exterior.is_i_pure(1));
    let (_, locals) = n.project_strand_set(&problem.p);
    debug_assert!(locals[1..].iter().all(StrandSet::is_empty));
    let sub = RootProblem::new(
        da.interiors[0].clone(),
        db.interiors[0].clone(),
        locals[0].clone(),
        problem.k,
    );
    let xi1 = root_conjugator_with(&sub, opts)?.gamma;
    let mut xi_interiors = dz.interiors.clone();
    xi_interiors[0] = xi1;
    let xi_dec = Decomposition::new(n.clone(), dz.exterior.clone(), xi_interiors)?;
    let xi = compose_decomposition(&xi_dec)?;
    if !equals(&xi.conjugate(&problem.alpha)?, &problem.beta)? {
        return Err(Error::VerificationFailed(
            "repaired conjugator no longer conjugates alpha to beta".into(),
        ));
    }
    let xi_prime = per_ext_balance(&problem.alpha, n, &problem.p, &xi_dec, opts)?;
    let gamma = xi.concat(&xi_prime)?;
    certify(problem, gamma)
}

fn root_conjugator_with(
    problem: &RootProblem,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    validate_problem(problem)?;
    let n = problem.strands();
    if problem.p.is_empty() {
        // plain bounded conjugacy, standing in for the general theorem
        let gamma = if equals(&problem.alpha, &problem.beta)? {
            BraidWord::identity(n)
        } else {
            conjugacy_search(&problem.alpha, &problem.beta, opts.depth)?
        };
        return certify(problem, gamma);
    }
    if n <= 2 || equals(&problem.alpha, &problem.beta)? {
        // 1-pure 2-braids form an infinite cyclic group, so equal powers
        // force equal elements; pseudo-Anosov inputs land here as well
        return certify(problem, BraidWord::identity(n));
    }
    if is_periodic(&problem.alpha) {
        return irred_root_conjugator(problem, opts);
    }
    if let Some(hint) = &problem.hint {
        if !hint.standardizer.is_i_pure(1) {
            return Err(Error::HypothesisViolated(
                "reduction-hint standardizer must be 1-pure".into(),
            ));
        }
        let zeta = &hint.standardizer;
        let transported = RootProblem::new(
            zeta.conjugate(&problem.alpha)?,
            zeta.conjugate(&problem.beta)?,
            zeta.permutation().apply_set(&problem.p),
            problem.k,
        );
        let inner = solve_reducible(&transported, &hint.composition, opts)?;
        let gamma = transport_by_chi(zeta, problem, &inner.gamma, TransportMode::Conjugate)?;
        return certify(problem, gamma);
    }
    let mut comps = find_preserved_compositions(&problem.alpha);
    if comps.is_empty() {
        // the power shares its reduction system with the root
        comps = find_preserved_compositions(&problem.alpha.power(problem.k))
            .into_iter()
            .filter(|c| {
                extract(&problem.alpha, c)
                    .ok()
                    .map(|d| {
                        act_on_composition(&d.exterior.permutation(), c)
                            .map(|acted| acted == *c)
                            .unwrap_or(false)
                    })
                    .unwrap_or(false)
            })
            .collect();
    }
    let mut bound_hit = false;
    for c in &comps {
        match solve_reducible(problem, c, opts) {
            Ok(cert) => return Ok(cert),
            Err(Error::BoundExceeded) => bound_hit = true,
            Err(Error::NotStandardlyReduced | Error::ExteriorMismatch) => {}
            Err(e) => return Err(e),
        }
    }
    if bound_hit {
        Err(Error::BoundExceeded)
    } else {
        Err(Error::HintRequired)
    }
}

/// Produce a P-straight, 1-unlinked conjugator carrying `alpha` to `beta`,
/// re-verifying every predicate before returning. With `P = ∅` only plain
/// conjugacy is certified.
pub fn root_conjugator(problem: &RootProblem) -> Result<ConjugacyCertificate> {
    root_conjugator_with(problem, &SolveOptions::default())
}

/// As [`root_conjugator`] with an explicit search bound.
pub fn root_conjugator_opts(
    problem: &RootProblem,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    root_conjugator_with(problem, opts)
}

/// The Artin groups handled by the subgroup toolkit, each sitting inside the
/// braid group on `ambient_strands` strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtinType {
    /// Finite type B_n ≅ the 1-pure subgroup of B_{n+1}.
    TypeB(usize),
    /// Affine type Ã_{m} ≅ the 1-unlinked subgroup of B_{m+2}.
    AffineA(usize),
    /// Affine type C̃_{m} ≅ the {1, m+2}-pure subgroup of B_{m+2}.
    AffineC(usize),
}

impl ArtinType {
    pub fn ambient_strands(&self) -> usize {
        match self {
            ArtinType::TypeB(n) => n + 1,
            ArtinType::AffineA(m) | ArtinType::AffineC(m) => m + 2,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            ArtinType::TypeB(n) => *n >= 2,
            ArtinType::AffineA(m) | ArtinType::AffineC(m) => *m >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotApplicable("Artin rank out of range".into()))
        }
    }

    fn strand_constraint(&self) -> StrandSet {
        match self {
            ArtinType::TypeB(_) | ArtinType::AffineA(_) => StrandSet::singleton(1),
            ArtinType::AffineC(m) => [1, m + 2].into_iter().collect(),
        }
    }
}

/// Rewrite a word in the type-B generators `s₁, …, s_n` as a braid word:
/// `s₁ ↦ σ₁²` and `s_i ↦ σ_i` for `i ≥ 2`, landing in the 1-pure subgroup
/// of `B_{n+1}`.
pub fn artin_embed(ty: ArtinType, letters: &[i32]) -> Result<BraidWord> {
    ty.validate()?;
    let rank = match ty {
        ArtinType::TypeB(n) => n,
        _ => {
            return Err(Error::NotApplicable(
                "the generator embedding is defined for type B only".into(),
            ))
        }
    };
    let strands = ty.ambient_strands();
    let mut out = Vec::new();
    for &g in letters {
        let j = g.unsigned_abs() as usize;
        if g == 0 || j > rank {
            return Err(Error::IndexOutOfRange {
                index: g as i64,
                strands,
            });
        }
        if j == 1 {
            let l = if g > 0 { 1 } else { -1 };
            out.push(l);
            out.push(l);
        } else {
            out.push(if g > 0 { j as i32 } else { -(j as i32) });
        }
    }
    BraidWord::new(strands, out)
}

/// Membership of a braid in the subgroup realizing the Artin group.
pub fn artin_member(ty: ArtinType, w: &BraidWord) -> Result<bool> {
    ty.validate()?;
    if w.strands() != ty.ambient_strands() {
        return Err(Error::StrandCountMismatch(w.strands(), ty.ambient_strands()));
    }
    Ok(match ty {
        ArtinType::TypeB(_) => w.is_i_pure(1),
        ArtinType::AffineA(_) => w.is_i_pure(1) && lk(w)? == 0,
        ArtinType::AffineC(_) => w.is_p_pure(&ty.strand_constraint()),
    })
}

/// Root conjugacy inside an Artin subgroup: requires membership of both
/// inputs, solves with the subgroup's strand constraint, and certifies that
/// the conjugator stays in the subgroup.
pub fn artin_root_conjugate(
    ty: ArtinType,
    alpha: &BraidWord,
    beta: &BraidWord,
    k: i64,
    opts: &SolveOptions,
) -> Result<ConjugacyCertificate> {
    ty.validate()?;
    if !artin_member(ty, alpha)? || !artin_member(ty, beta)? {
        return Err(Error::NotMember);
    }
    let problem = RootProblem::new(alpha.clone(), beta.clone(), ty.strand_constraint(), k);
    let cert = root_conjugator_with(&problem, opts)?;
    if !artin_member(ty, &cert.gamma)? {
        return Err(Error::VerificationFailed(
            "conjugator left the Artin subgroup".into(),
        ));
    }
    Ok(cert)
}

/// Structured record for a certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub strands: usize,
    pub gamma: Vec<i32>,
    pub conjugates: bool,
    pub p_straight: bool,
    pub one_unlinked: bool,
    pub lk: Option<i64>,
}

impl CertificateRecord {
    pub fn new(strands: usize, cert: &ConjugacyCertificate) -> Self {
        CertificateRecord {
            strands,
            gamma: cert.gamma.letters().to_vec(),
            conjugates: cert.conjugates,
            p_straight: cert.p_straight,
            one_unlinked: cert.one_unlinked,
            lk: cert.lk_value,
        }
    }
}

/// Structured record for a problem instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemRecord {
    pub strands: usize,
    pub alpha: Vec<i32>,
    pub beta: Vec<i32>,
    pub p: Vec<usize>,
    pub k: i64,
}

impl ProblemRecord {
    pub fn into_problem(self) -> Result<RootProblem> {
        let alpha = BraidWord::new(self.strands, self.alpha)?;
        let beta = BraidWord::new(self.strands, self.beta)?;
        let p: StrandSet = self.p.into_iter().collect();
        Ok(RootProblem::new(alpha, beta, p, self.k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::is_trivial;
    use crate::periodic::{epsilon, full_twist, mu};

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn assert_full_cert(c: &ConjugacyCertificate) {
        assert!(c.conjugates && c.p_straight && c.one_unlinked);
        assert_eq!(c.lk_value, Some(0));
    }

    #[test]
    fn transport_with_identity_chi_is_inner() {
        let alpha = w(3, &[2, 2]);
        let problem = RootProblem::new(alpha.clone(), alpha.clone(), StrandSet::singleton(1), 2);
        let id = BraidWord::identity(3);
        let out = transport_by_chi(&id, &problem, &id, TransportMode::Conjugate).unwrap();
        assert!(is_trivial(&out));
    }

    #[test]
    fn transport_conjugate_mode() {
        // χ-transported solution pulls back to a verified certificate
        let chi = w(4, &[2, 3, 2]);
        assert!(chi.is_i_pure(1));
        let alpha = epsilon(4);
        let beta = chi.inverse().conjugate(&epsilon(4)).unwrap();
        let problem = RootProblem::new(alpha.clone(), beta.clone(), StrandSet::singleton(1), 3);
        // inner problem is (χαχ⁻¹, χβχ⁻¹) = (χεχ⁻¹, ε): solve it
        let inner_problem = RootProblem::new(
            chi.conjugate(&alpha).unwrap(),
            chi.conjugate(&beta).unwrap(),
            StrandSet::singleton(1),
            3,
        );
        let inner = root_conjugator(&inner_problem).unwrap();
        let gamma = transport_by_chi(&chi, &problem, &inner.gamma, TransportMode::Conjugate).unwrap();
        let cert = certify(&problem, gamma).unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn transport_absorb_mode() {
        // χ = β^k is P-straight for pure β, 1-unlinked when constructed so,
        // and commutes with β^k
        let beta = w(3, &[2, 2]);
        let alpha = beta.clone();
        let problem = RootProblem::new(alpha.clone(), beta.clone(), StrandSet::singleton(1), 2);
        let chi = beta.power(2);
        assert_eq!(lk(&chi).unwrap(), 0);
        let inner_target = chi.conjugate(&beta).unwrap();
        let inner = conjugacy_search(&alpha, &inner_target, 6).unwrap();
        let gamma = transport_by_chi(&chi, &problem, &inner, TransportMode::Absorb).unwrap();
        let cert = certify(&problem, gamma).unwrap();
        assert!(cert.conjugates);
    }

    #[test]
    fn irred_identity_cases() {
        // equal inputs (pseudo-Anosov and central cases) take the identity
        let pa = w(3, &[1, 1, 2, 2, 2, 2]);
        let problem = RootProblem::new(pa.clone(), pa.clone(), StrandSet::singleton(1), 2);
        let cert = irred_root_conjugator(&problem, &SolveOptions::default()).unwrap();
        assert!(cert.gamma.is_empty());
        assert_full_cert(&cert);

        let c = full_twist(3);
        let problem = RootProblem::new(c.clone(), c.clone(), StrandSet::singleton(1), 5);
        let cert = irred_root_conjugator(&problem, &SolveOptions::default()).unwrap();
        assert!(cert.gamma.is_empty());
    }

    #[test]
    fn irred_periodic_family() {
        let n = 4usize;
        let chi = w(n, &[2, -3, 2, 2]);
        assert!(chi.is_i_pure(1));
        let alpha = epsilon(n);
        let beta = chi.conjugate(&alpha).unwrap();
        let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), n as i64 - 1);
        let cert = irred_root_conjugator(&problem, &SolveOptions::default()).unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn irred_rejects_distinct_nonperiodic() {
        let alpha = w(3, &[1, 1]);
        let beta = w(3, &[1, 1, 2, -2]);
        // distinct words, equal braids: fine. Make genuinely distinct ones:
        let problem = RootProblem::new(alpha.clone(), beta, StrandSet::singleton(1), 2);
        // beta equals alpha as a braid, so this is the identity case
        assert!(irred_root_conjugator(&problem, &SolveOptions::default()).is_ok());
        let problem = RootProblem::new(alpha, w(3, &[2, 2]), StrandSet::singleton(1), 2);
        // σ₁² and σ₂² do not have equal squares, so validation rejects
        assert!(matches!(
            irred_root_conjugator(&problem, &SolveOptions::default()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn same_ext_on_equal_inputs() {
        let d = Decomposition::new(
            comp(&[1, 2, 2]),
            w(3, &[2]),
            vec![BraidWord::identity(1), w(2, &[1]), w(2, &[1, 1])],
        )
        .unwrap();
        let alpha = compose_decomposition(&d).unwrap();
        let problem = RootProblem::new(alpha.clone(), alpha.clone(), StrandSet::singleton(1), 2);
        let cert = same_ext_root_conjugator(&problem, &comp(&[1, 2, 2]), &SolveOptions::default())
            .unwrap();
        assert_full_cert(&cert);
    }

    /// Two-block swap family: α = ⟨σ₂⟩(1 ⊕ a ⊕ b), β = ⟨σ₂⟩(1 ⊕ c ⊕ d)
    /// with c = z·a, d = a⁻¹z⁻¹ab for z = (ab)^p, so that α² = β².
    fn two_block_instance(m: usize, a: BraidWord, b: BraidWord, p: i64) -> (BraidWord, BraidWord) {
        let z = a.concat(&b).unwrap().power(p);
        let c = z.concat(&a).unwrap();
        let d = a
            .inverse()
            .concat(&z.inverse())
            .unwrap()
            .concat(&a)
            .unwrap()
            .concat(&b)
            .unwrap();
        let n = comp(&[1, m, m]);
        let ext = w(3, &[2]);
        let alpha = compose_decomposition(
            &Decomposition::new(n.clone(), ext.clone(), vec![BraidWord::identity(1), a, b])
                .unwrap(),
        )
        .unwrap();
        let beta = compose_decomposition(
            &Decomposition::new(n, ext, vec![BraidWord::identity(1), c, d]).unwrap(),
        )
        .unwrap();
        (alpha, beta)
    }

    #[test]
    fn two_block_swap_powers_agree() {
        let (alpha, beta) = two_block_instance(2, w(2, &[1]), w(2, &[1, 1, 1]), 1);
        assert!(equals(&alpha.power(2), &beta.power(2)).unwrap());
    }

    #[test]
    fn same_ext_two_block_swap() {
        let (alpha, beta) = two_block_instance(2, w(2, &[1]), w(2, &[1, 1, 1]), 1);
        let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), 2);
        let cert =
            same_ext_root_conjugator(&problem, &comp(&[1, 2, 2]), &SolveOptions::default())
                .unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn same_ext_fixed_blocks_only() {
        // identity exterior: componentwise recursion with pure interiors
        let a2 = w(2, &[1, 1]);
        let n = comp(&[2, 2]);
        let alpha = compose_decomposition(
            &Decomposition::new(n.clone(), BraidWord::identity(2), vec![a2.clone(), a2.clone()])
                .unwrap(),
        )
        .unwrap();
        let problem = RootProblem::new(alpha.clone(), alpha.clone(), StrandSet::full(4), 3);
        let cert = same_ext_root_conjugator(&problem, &n, &SolveOptions::default()).unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn same_ext_rejects_mismatched_exteriors() {
        let n = comp(&[1, 2, 2]);
        let mk = |e: &BraidWord| {
            compose_decomposition(
                &Decomposition::new(
                    n.clone(),
                    e.clone(),
                    vec![BraidWord::identity(1), w(2, &[1, 1]), w(2, &[1, 1])],
                )
                .unwrap(),
            )
            .unwrap()
        };
        let alpha = mk(&w(3, &[2, 2]));
        let beta = mk(&w(3, &[-2, -2]));
        // equalize powers is impossible here; craft directly and bypass
        // validation by calling with k chosen so powers differ → validation
        // rejects, which is the contract
        let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), 2);
        assert!(matches!(
            same_ext_root_conjugator(&problem, &n, &SolveOptions::default()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn per_ext_commutant_on_mu_cable() {
        // α = ⟨μ_s⟩ with trivial interiors: the commutant is the cabled
        // μ-factor itself, with linking number the bracket block size
        for (s, d) in [(2usize, 1usize), (2, 2)] {
            let r = d * s + 1;
            let q = 2usize;
            let mut parts = vec![1usize];
            parts.extend(std::iter::repeat(q).take(r - 1));
            let n = comp(&parts);
            let interiors: Vec<BraidWord> =
                n.parts().iter().map(|&sz| BraidWord::identity(sz)).collect();
            let alpha = compose_decomposition(
                &Decomposition::new(n.clone(), mu(s, d).unwrap(), interiors).unwrap(),
            )
            .unwrap();
            let p = StrandSet::singleton(1);
            for i in 2..=r {
                let gamma =
                    per_ext_commutant(&alpha, &n, &p, i, &SolveOptions::default()).unwrap();
                assert_eq!(lk(&gamma).unwrap(), q as i64);
            }
        }
    }

    #[test]
    fn euclid_pair_examples() {
        // minimal positive a with a·t ≡ 1 (mod s)
        let find = |s: i64, t: i64| (1..=s).find(|a| (a * t).rem_euclid(s) == 1).unwrap();
        assert_eq!(find(3, 2), 2); // 2·2 − 3 = 1
        assert_eq!(find(2, 1), 1);
        assert_eq!(find(5, 3), 2);
        assert_eq!(find(2, -1), 1); // 1·(−1) + 1·2 = 1
    }

    #[test]
    fn per_ext_balance_kills_linking() {
        let s = 2usize;
        let d = 1usize;
        let q = 2usize;
        let n = comp(&[1, q, q]);
        let interiors: Vec<BraidWord> =
            n.parts().iter().map(|&sz| BraidWord::identity(sz)).collect();
        let alpha = compose_decomposition(
            &Decomposition::new(n.clone(), mu(s, d).unwrap(), interiors).unwrap(),
        )
        .unwrap();
        let p = StrandSet::singleton(1);
        // χ = ⟨ε⟩ with trivial interiors is P-straight with lk = 2q
        let chi = Decomposition::new(
            n.clone(),
            epsilon(3),
            n.parts().iter().map(|&sz| BraidWord::identity(sz)).collect(),
        )
        .unwrap();
        let chi_word = compose_decomposition(&chi).unwrap();
        let gamma = per_ext_balance(&alpha, &n, &p, &chi, &SolveOptions::default()).unwrap();
        assert_eq!(lk(&gamma).unwrap(), -lk(&chi_word).unwrap());
        assert!(equals(
            &gamma.concat(&alpha).unwrap(),
            &alpha.concat(&gamma).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn root_pure_braid_forces_equality() {
        // P = {1,…,n}: the conjugator is straight on every strand, hence
        // trivial, forcing α = β
        let alpha = w(4, &[1, 1, 3, 3, -2, -2]);
        assert!(alpha.permutation().is_identity());
        let problem = RootProblem::new(alpha.clone(), alpha.clone(), StrandSet::full(4), 3);
        let cert = root_conjugator(&problem).unwrap();
        assert!(is_trivial(&cert.gamma));
        assert_full_cert(&cert);
    }

    #[test]
    fn root_periodic_family() {
        for n in 3..=5usize {
            let chi = match n {
                3 => w(3, &[2, 2]),
                4 => w(4, &[2, -3, 2]),
                _ => w(5, &[3, 4, -2]),
            };
            assert!(chi.is_i_pure(1));
            let alpha = epsilon(n);
            let beta = chi.conjugate(&alpha).unwrap();
            let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), n as i64 - 1);
            let cert = root_conjugator(&problem).unwrap();
            assert_full_cert(&cert);
        }
    }

    #[test]
    fn root_two_block_family() {
        let (alpha, beta) = two_block_instance(2, w(2, &[1, 1, 1]), w(2, &[-1]), -1);
        let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), 2);
        let cert = root_conjugator(&problem).unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn root_relaxed_mode_certifies_conjugacy_only() {
        // δ and its conjugate share their cube Δ²; with P = ∅ only plain
        // conjugacy is certified
        let alpha = w(3, &[2, 1]);
        let g = w(3, &[1]);
        let beta = g.conjugate(&alpha).unwrap();
        assert!(equals(&alpha.power(3), &beta.power(3)).unwrap());
        let problem = RootProblem::new(alpha.clone(), beta.clone(), StrandSet::empty(), 3);
        let cert = root_conjugator(&problem).unwrap();
        assert!(cert.conjugates);
        assert!(!cert.p_straight && !cert.one_unlinked);
    }

    #[test]
    fn root_obstructed_pairs_never_certify() {
        // lk is a conjugacy invariant among 1-pure braids, so pairs with
        // distinct lk can never satisfy the problem invariants for any k
        for (a, b) in [
            (w(3, &[1, 1]), w(3, &[2, 2])),
            (w(3, &[1, 1, 2, 2, 2, 2]), w(3, &[2, 2, 1, 1, 1, 1])),
        ] {
            assert_ne!(lk(&a).unwrap(), lk(&b).unwrap());
            for k in 1..=4i64 {
                assert!(!equals(&a.power(k), &b.power(k)).unwrap());
                let problem = RootProblem::new(a.clone(), b.clone(), StrandSet::singleton(1), k);
                assert!(matches!(
                    root_conjugator(&problem),
                    Err(Error::HypothesisViolated(_))
                ));
            }
        }
    }

    #[test]
    fn root_honors_reduction_hint() {
        // conjugate a reducible instance so its preserved system is still
        // standard but the hint path is exercised end to end
        let (alpha0, beta0) = two_block_instance(2, w(2, &[1]), w(2, &[1, 1, 1]), 1);
        let zeta = w(5, &[2, 3, 2]);
        assert!(zeta.is_i_pure(1));
        let alpha = zeta.inverse().conjugate(&alpha0).unwrap();
        let beta = zeta.inverse().conjugate(&beta0).unwrap();
        let hint = ReductionHint {
            composition: comp(&[1, 2, 2]),
            standardizer: zeta,
        };
        let problem =
            RootProblem::new(alpha, beta, StrandSet::singleton(1), 2).with_hint(hint);
        let cert = root_conjugator(&problem).unwrap();
        assert_full_cert(&cert);
    }

    #[test]
    fn artin_embedding_and_membership() {
        // s₁s₂ ↦ σ₁²σ₂ in B₃
        let ty = ArtinType::TypeB(2);
        let img = artin_embed(ty, &[1, 2]).unwrap();
        assert_eq!(img.letters(), &[1, 1, 2]);
        assert!(artin_member(ty, &img).unwrap());
        // σ₂² is 1-pure and unlinked, σ₁² is {1,3}-pure
        assert!(artin_member(ArtinType::AffineA(1), &w(3, &[2, 2])).unwrap());
        assert!(artin_member(ArtinType::AffineC(1), &w(3, &[1, 1])).unwrap());
        assert!(!artin_member(ArtinType::AffineA(1), &w(3, &[1, 1])).unwrap());
        assert!(!artin_member(ArtinType::TypeB(2), &w(3, &[1])).unwrap());
    }

    #[test]
    fn artin_root_conjugacy_stays_in_subgroup() {
        let n = 4usize;
        let chi = w(n, &[2, -3, 2]);
        let alpha = epsilon(n).power(1);
        let beta = chi.conjugate(&alpha).unwrap();
        let cert = artin_root_conjugate(
            ArtinType::TypeB(n - 1),
            &alpha,
            &beta,
            n as i64 - 1,
            &SolveOptions::default(),
        )
        .unwrap();
        assert!(cert.conjugates);
        assert!(artin_member(ArtinType::TypeB(n - 1), &cert.gamma).unwrap());
    }

    #[test]
    fn artin_rejects_non_members() {
        let res = artin_root_conjugate(
            ArtinType::TypeB(2),
            &w(3, &[1]),
            &w(3, &[1]),
            2,
            &SolveOptions::default(),
        );
        assert_eq!(res.unwrap_err(), Error::NotMember);
    }

    #[test]
    fn internal_checks_run_in_debug() {
        let before = internal_identity_checks();
        let (alpha, beta) = two_block_instance(2, w(2, &[1]), w(2, &[1, 1, 1]), 1);
        let problem = RootProblem::new(alpha, beta, StrandSet::singleton(1), 2);
        root_conjugator(&problem).unwrap();
        if cfg!(debug_assertions) {
            assert!(internal_identity_checks() > before);
        }
    }
}
