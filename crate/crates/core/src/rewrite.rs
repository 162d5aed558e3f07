//! Term rewriting in the free algebra: orientation of relators, normal
//! forms, the overlap certificate for PBW bases, bounded completion, and the
//! combinatorial data derived from a confluent system.
//!
//! A rule `lead -> tail` stands for the ideal element `lead - tail`, with
//! every tail word strictly below the lead in degree-lexicographic order, so
//! rewriting always terminates. A system is kept inter-reduced: no rule's
//! lead occurs inside another rule, and tails are fully reduced.

use std::collections::{BTreeMap, BTreeSet};

use num::traits::{One, Zero};

use crate::error::Error;
use crate::freealg::{GeneratorSet, NcPoly, Word};
use crate::linalg::QMatrix;
use crate::presentation::Presentation;
use crate::scalar::Scalar;

/// Default ceiling on the total number of rules a completion may hold.
pub const DEFAULT_RULE_BUDGET: usize = 10_000;

// ---- Rules and systems ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    lead: Word,
    tail: NcPoly,
}

impl RewriteRule {
    /// Orients a nonzero polynomial into a monic rule. Fails with
    /// `UnitIdeal` on a nonzero constant and panics on zero.
    fn orient_poly(p: &NcPoly) -> Result<RewriteRule, Error> {
        let monic = p.monic().expect("cannot orient the zero polynomial");
        let (lead, _) = monic.leading_term().expect("nonzero");
        if lead.is_empty() {
            return Err(Error::UnitIdeal);
        }
        let lead = lead.clone();
        let mut tail = -&monic;
        tail.add_term(lead.clone(), Scalar::one());
        debug_assert!(tail.terms().all(|(w, _)| w < &lead));
        Ok(RewriteRule { lead, tail })
    }

    pub fn lead(&self) -> &Word {
        &self.lead
    }

    pub fn tail(&self) -> &NcPoly {
        &self.tail
    }

    /// The ideal element `lead - tail` this rule rewrites to zero.
    pub fn polynomial(&self) -> NcPoly {
        let mut p = -&self.tail;
        p.add_term(self.lead.clone(), Scalar::one());
        p
    }

    pub fn display(&self, gens: &GeneratorSet) -> String {
        format!("{} -> {}", self.lead.display(gens), self.tail.display(gens))
    }
}

/// Whether the system has been proved confluent, disproved with a witness,
/// or not yet examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Confluence {
    Certified,
    Refuted(NcPoly),
    Unchecked,
}

/// An inter-reduced rewrite system. Instances come from [`orient`] or
/// [`RewriteSystem::complete_bounded`] and are immutable afterwards.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    gens: GeneratorSet,
    /// Sorted by lead, ascending.
    rules: Vec<RewriteRule>,
    /// Rule indices grouped by the first letter of the lead.
    index: BTreeMap<u32, Vec<usize>>,
    confluence: Confluence,
    completion_degree: usize,
}

/// Which occurrence to rewrite first. Confluent systems give the same
/// normal form either way; the default everywhere is `Leftmost`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl RewriteSystem {
    fn assemble(
        gens: GeneratorSet,
        mut rules: Vec<RewriteRule>,
        confluence: Confluence,
        completion_degree: usize,
    ) -> RewriteSystem {
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        let mut index: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (k, rule) in rules.iter().enumerate() {
            index.entry(rule.lead.letters()[0]).or_default().push(k);
        }
        RewriteSystem { gens, rules, index, confluence, completion_degree }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn confluence(&self) -> &Confluence {
        &self.confluence
    }

    /// Largest degree through which overlaps are known to resolve.
    pub fn completion_degree(&self) -> usize {
        self.completion_degree
    }

    /// Leftmost (or rightmost) rewritable occurrence in `w`: the rule index
    /// and the position where its lead occurs.
    fn find_occurrence(&self, w: &Word, strategy: Strategy) -> Option<(usize, usize)> {
        let letters = w.letters();
        let scan: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Leftmost => Box::new(0..letters.len()),
            Strategy::Rightmost => Box::new((0..letters.len()).rev()),
        };
        for pos in scan {
            if let Some(candidates) = self.index.get(&letters[pos]) {
                for &ri in candidates {
                    let lead = &self.rules[ri].lead;
                    if pos + lead.len() <= letters.len()
                        && letters[pos..pos + lead.len()] == *lead.letters()
                    {
                        return Some((ri, pos));
                    }
                }
            }
        }
        None
    }

    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        self.normal_form_with(p, Strategy::Leftmost).0
    }

    /// Normal form plus the number of single rewrite steps taken.
    pub fn normal_form_with(&self, p: &NcPoly, strategy: Strategy) -> (NcPoly, usize) {
        let mut done = NcPoly::zero();
        let mut work: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut steps = 0usize;
        // Always process the current largest word, so every inserted word is
        // strictly smaller and the loop terminates.
        while let Some((w, c)) = work.pop_last() {
            match self.find_occurrence(&w, strategy) {
                None => done.add_term(w, c),
                Some((ri, pos)) => {
                    steps += 1;
                    let rule = &self.rules[ri];
                    let prefix = w.slice(0, pos);
                    let suffix = w.slice(pos + rule.lead.len(), w.len());
                    for (t, tc) in rule.tail.terms() {
                        let word = prefix.concat(t).concat(&suffix);
                        debug_assert!(word < w);
                        let coeff = &c * tc;
                        let entry = work.entry(word).or_insert_with(Scalar::zero);
                        *entry = &*entry + &coeff;
                        if entry.is_zero() {
                            // remove cancelled entries eagerly
                            let key = prefix.concat(t).concat(&suffix);
                            work.remove(&key);
                        }
                    }
                }
            }
        }
        (done, steps)
    }

    /// Words of length `deg` containing no rule lead, in ascending order.
    /// Meaningful as a basis of the degree-`deg` slice only as far as the
    /// system is certified; callers check that.
    pub fn irreducible_words(&self, deg: usize) -> Vec<Word> {
        let n = self.gens.len() as u32;
        let mut level: Vec<Word> = vec![Word::one()];
        for _ in 0..deg {
            let mut next = Vec::new();
            for w in &level {
                'letter: for a in 0..n {
                    let cand = w.concat(&Word::gen(a));
                    // Only suffixes ending at the new letter need checking.
                    for rule in &self.rules {
                        if cand.ends_with(&rule.lead) {
                            continue 'letter;
                        }
                    }
                    next.push(cand);
                }
            }
            level = next;
        }
        level
    }

    /// Dimensions of the filtration quotients up to `max_deg`, by counting
    /// irreducible words. Requires the system to be certified confluent or
    /// completed at least one degree beyond the query: a later obstruction
    /// of degree `max_deg + 1` or below could introduce a rule whose lead
    /// changes these counts.
    pub fn hilbert_prefix(&self, max_deg: usize) -> Result<HilbertPrefix, Error> {
        if self.confluence != Confluence::Certified && self.completion_degree < max_deg + 1 {
            return Err(Error::InsufficientCompletion {
                needed: max_deg + 1,
                have: self.completion_degree,
            });
        }
        let dims = (0..=max_deg).map(|d| self.irreducible_words(d).len()).collect();
        Ok(HilbertPrefix { dims, valid_to: max_deg })
    }

    /// Adds rules until every overlap of degree at most `max_deg` resolves,
    /// smallest new lead first, inter-reducing after each addition. The
    /// total number of rules may not exceed `budget`.
    pub fn complete_bounded(
        &self,
        max_deg: usize,
        budget: usize,
    ) -> Result<(RewriteSystem, CompletionReport), Error> {
        assert!(max_deg >= 2, "completion degree below the relator degree");
        let mut rules = self.rules.clone();
        let mut added = Vec::new();
        loop {
            let mut candidates: Vec<RewriteRule> = Vec::new();
            for overlap in enumerate_overlaps(&rules) {
                if overlap.word.len() > max_deg {
                    continue;
                }
                let d = resolve_overlap(&self.gens, &rules, &overlap);
                if !d.is_zero() {
                    candidates.push(RewriteRule::orient_poly(&d)?);
                }
            }
            let Some(best) = candidates
                .iter()
                .min_by(|a, b| a.lead.cmp(&b.lead))
                .cloned()
            else {
                break;
            };
            if rules.len() >= budget {
                return Err(Error::BudgetExceeded { added: added.len(), budget });
            }
            added.push(best.clone());
            rules.push(best);
            rules = inter_reduce(rules)?;
        }
        // Confluent outright if no overlap word can outrun the bound.
        let widest = rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
        let confluence = if widest == 0 || 2 * widest - 1 <= max_deg {
            Confluence::Certified
        } else {
            Confluence::Unchecked
        };
        let sys = RewriteSystem::assemble(self.gens.clone(), rules, confluence, max_deg);
        Ok((sys, CompletionReport { added }))
    }
}

#[derive(Clone, Debug)]
pub struct CompletionReport {
    /// Rules appended during completion, in order of addition and in the
    /// monic form they had when added (later inter-reduction may rework them).
    pub added: Vec<RewriteRule>,
}

/// Dimensions `dims[d]` of the degree-`d` slices, trustworthy up to
/// `valid_to`. `dims[0]` is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPrefix {
    pub dims: Vec<usize>,
    pub valid_to: usize,
}

// ---- Orientation ----

/// Turns the relators into a monic, inter-reduced rewrite system.
pub fn orient(p: &Presentation) -> Result<RewriteSystem, Error> {
    let mut rules = Vec::new();
    for r in p.relators() {
        rules.push(RewriteRule::orient_poly(r)?);
    }
    let rules = inter_reduce(rules)?;
    Ok(RewriteSystem::assemble(p.gens().clone(), rules, Confluence::Unchecked, 0))
}

/// Reduces every rule's polynomial by the other rules until nothing moves.
/// Rules that reduce to zero are dropped; a nonzero constant is a unit in
/// the ideal.
fn inter_reduce(mut rules: Vec<RewriteRule>) -> Result<Vec<RewriteRule>, Error> {
    let mut rounds = 0usize;
    'outer: loop {
        rounds += 1;
        assert!(rounds < 100_000, "inter-reduction failed to stabilize");
        for k in 0..rules.len() {
            let poly = rules[k].polynomial();
            let reduced = reduce_by_subset(&rules, Some(k), &poly);
            if reduced == poly {
                continue;
            }
            if reduced.is_zero() {
                rules.remove(k);
            } else {
                let new_rule = RewriteRule::orient_poly(&reduced)?;
                rules[k] = new_rule;
            }
            continue 'outer;
        }
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        return Ok(rules);
    }
}

/// Normal form of `p` with respect to all rules except `skip`, used during
/// inter-reduction where systems are in flux and unindexed.
fn reduce_by_subset(rules: &[RewriteRule], skip: Option<usize>, p: &NcPoly) -> NcPoly {
    let mut done = NcPoly::zero();
    let mut work: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = work.pop_last() {
        let mut hit = None;
        'scan: for pos in 0..w.len() {
            for (ri, rule) in rules.iter().enumerate() {
                if Some(ri) == skip {
                    continue;
                }
                if pos + rule.lead.len() <= w.len()
                    && w.letters()[pos..pos + rule.lead.len()] == *rule.lead.letters()
                {
                    hit = Some((ri, pos));
                    break 'scan;
                }
            }
        }
        match hit {
            None => done.add_term(w, c),
            Some((ri, pos)) => {
                let rule = &rules[ri];
                let prefix = w.slice(0, pos);
                let suffix = w.slice(pos + rule.lead.len(), w.len());
                for (t, tc) in rule.tail.terms() {
                    let word = prefix.concat(t).concat(&suffix);
                    let coeff = &c * tc;
                    let entry = work.entry(word.clone()).or_insert_with(Scalar::zero);
                    *entry = &*entry + &coeff;
                    if entry.is_zero() {
                        work.remove(&word);
                    }
                }
            }
        }
    }
    done
}

// ---- Overlaps and the PBW certificate ----

/// An overlap ambiguity: `word` can be rewritten by `left_rule` at position
/// 0 and by `right_rule` at position `split`.
#[derive(Clone, Debug)]
struct Overlap {
    left_rule: usize,
    right_rule: usize,
    word: Word,
    split: usize,
}

/// All intersection overlaps between leads. Inclusion overlaps cannot occur
/// in an inter-reduced system.
fn enumerate_overlaps(rules: &[RewriteRule]) -> Vec<Overlap> {
    let mut out = Vec::new();
    for (r1, rule1) in rules.iter().enumerate() {
        for (r2, rule2) in rules.iter().enumerate() {
            let l1 = rule1.lead.letters();
            let l2 = rule2.lead.letters();
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let mut letters = l1.to_vec();
                    letters.extend_from_slice(&l2[k..]);
                    out.push(Overlap {
                        left_rule: r1,
                        right_rule: r2,
                        word: Word::from_letters(&letters),
                        split: l1.len() - k,
                    });
                }
            }
        }
    }
    out
}

/// Rewrites the overlap word both ways, reduces both results to normal
/// form, and returns their difference (zero exactly when the two ways agree).
fn resolve_overlap(gens: &GeneratorSet, rules: &[RewriteRule], overlap: &Overlap) -> NcPoly {
    let _ = gens;
    let w = &overlap.word;
    let left_rule = &rules[overlap.left_rule];
    let right_rule = &rules[overlap.right_rule];
    let left_suffix = w.slice(left_rule.lead.len(), w.len());
    let right_prefix = w.slice(0, overlap.split);
    let left = left_rule.tail.mul_word_right(&left_suffix);
    let right = right_rule.tail.mul_word_left(&right_prefix);
    let left_nf = reduce_by_subset(rules, None, &left);
    let right_nf = reduce_by_subset(rules, None, &right);
    &left_nf - &right_nf
}

/// Outcome of the overlap check on a shape-valid presentation. By the
/// diamond lemma the certificate is exact: `certified` holds if and only if
/// the standard monomials form a basis of the quotient.
#[derive(Clone, Debug)]
pub struct PbwCertificate {
    pub certified: bool,
    /// A nonzero normal form witnessing a failed overlap, when refuted.
    pub witness: Option<NcPoly>,
    /// Number of overlap ambiguities examined.
    pub obstruction_count: usize,
    pub system: RewriteSystem,
}

/// Checks every overlap of the oriented relators of a shape-valid
/// presentation. For pair-shaped leads the overlap words are exactly
/// `x_k x_j x_i` with `k > j > i`.
pub fn certify_pbw_basis(p: &Presentation) -> Result<PbwCertificate, Error> {
    if !crate::classify::check_shape(p).valid {
        return Err(Error::InvalidShape);
    }
    let sys = orient(p)?;
    let overlaps = enumerate_overlaps(&sys.rules);
    let obstruction_count = overlaps.len();
    let mut witness = None;
    for overlap in &overlaps {
        let d = resolve_overlap(&sys.gens, &sys.rules, overlap);
        if !d.is_zero() {
            witness = Some(d);
            break;
        }
    }
    let confluence = match &witness {
        None => Confluence::Certified,
        Some(d) => Confluence::Refuted(d.clone()),
    };
    let system = RewriteSystem { confluence, ..sys };
    Ok(PbwCertificate {
        certified: witness.is_none(),
        witness,
        obstruction_count,
        system,
    })
}

// ---- S-sets ----

/// The degree-2 independence data of a homogeneous quadratic presentation:
/// `s` holds the pairs (i, j) whose word `x_i x_j` is not a combination of
/// lexicographically earlier degree-2 words modulo the relators, and
/// `sm[m]` holds the m-tuples whose consecutive pairs all lie in `s`.
#[derive(Clone, Debug)]
pub struct SSets {
    pub n: usize,
    pub s: BTreeSet<(u32, u32)>,
    pub sm: BTreeMap<usize, Vec<Vec<u32>>>,
    /// `counts[m]` = number of tuples in `sm[m]`, for m = 0 ..= max_m.
    pub counts: Vec<usize>,
}

/// Computes the S-sets up to tuple length `max_m`. Every relator must be
/// homogeneous of degree exactly two.
pub fn compute_s(p: &Presentation, max_m: usize) -> Result<SSets, Error> {
    for r in p.relators() {
        if !r.is_homogeneous() || r.degree() != Some(2) {
            return Err(Error::NotHomogeneousQuadratic);
        }
    }
    let n = p.num_gens();
    let nn = n * n;
    // Columns in descending pair order, so that a pivot marks the word that
    // is expressible through lexicographically earlier ones.
    let mut matrix = QMatrix::new(nn);
    for r in p.relators() {
        let mut row = vec![Scalar::zero(); nn];
        for (w, c) in r.terms() {
            let (a, b) = (w.letters()[0] as usize, w.letters()[1] as usize);
            row[nn - 1 - (a * n + b)] = c.clone();
        }
        matrix.push_row(row);
    }
    let (_, pivots) = matrix.rref();
    let dependent: BTreeSet<(u32, u32)> = pivots
        .iter()
        .map(|&col| {
            let flat = nn - 1 - col;
            ((flat / n) as u32, (flat % n) as u32)
        })
        .collect();
    let mut s = BTreeSet::new();
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            if !dependent.contains(&(a, b)) {
                s.insert((a, b));
            }
        }
    }

    let mut sm: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
    let mut counts = Vec::with_capacity(max_m + 1);
    sm.insert(0, vec![vec![]]);
    counts.push(1);
    let mut level: Vec<Vec<u32>> = vec![vec![]];
    for m in 1..=max_m {
        let mut next = Vec::new();
        for t in &level {
            for a in 0..n as u32 {
                let fits = match t.last() {
                    None => true,
                    Some(&prev) => s.contains(&(prev, a)),
                };
                if fits {
                    let mut extended = t.clone();
                    extended.push(a);
                    next.push(extended);
                }
            }
        }
        counts.push(next.len());
        sm.insert(m, next.clone());
        level = next;
    }
    Ok(SSets { n, s, sm, counts })
}
