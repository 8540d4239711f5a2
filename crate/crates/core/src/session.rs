//! One `(cartan, d, L)` instance: lazily built rewrite systems (optionally
//! cached on disk) and the named verification checks.

use std::path::PathBuf;
use std::sync::Arc;

use parking_lot::Mutex;
use thiserror::Error;

use crate::algebra::{Presentation, TypeSequence};
use crate::auto::{
    diagram_automorphisms, phi_a, semidirect_check, semidirect_control, sigma_map, verify_weak_hopf_automorphism,
    AutoError, DiagonalParams, DiagramSymmetry,
};
use crate::cartan::CartanData;
use crate::coeff::{rat, CoeffError};
use crate::hopf::{coalgebra_axiom_checks, grouplike_report, non_hopf_witness, rho_check, weak_antipode_report};
use crate::pbw::{braid_check, kostant_count_report, oracle_report, xy_count_report};
use crate::report::Report;
use crate::rewrite::{cache_load, cache_store, CacheError, RewriteError, RewriteSystem, Variant};

/// Default completion bound.
pub const DEFAULT_BOUND: usize = 8;

/// Largest bound tried when a braid check overflows.
pub const MAX_BRAID_BOUND: usize = 16;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Auto(#[from] AutoError),
}

impl EngineError {
    pub fn is_overflow(&self) -> bool {
        matches!(
            self,
            EngineError::Rewrite(RewriteError::DegreeOverflow { .. })
                | EngineError::Auto(AutoError::Rewrite(RewriteError::DegreeOverflow { .. }))
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Relations,
    Coalgebra,
    WeakAntipode,
    Grouplikes,
    Braid,
    BasisCounts,
    Rho,
    NonHopf,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Relations,
        Check::Coalgebra,
        Check::WeakAntipode,
        Check::Grouplikes,
        Check::Braid,
        Check::BasisCounts,
        Check::Rho,
        Check::NonHopf,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Relations => "relations",
            Check::Coalgebra => "coalgebra",
            Check::WeakAntipode => "weak-antipode",
            Check::Grouplikes => "grouplikes",
            Check::Braid => "braid",
            Check::BasisCounts => "basis-counts",
            Check::Rho => "rho",
            Check::NonHopf => "non-hopf",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Word lengths and heights used by the checks.
#[derive(Clone, Debug)]
pub struct CheckParams {
    pub word_len: usize,
    pub grouplike_len: usize,
    pub height: usize,
    pub oracle_len: usize,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            word_len: 3,
            grouplike_len: 4,
            height: 4,
            oracle_len: 5,
        }
    }
}

pub struct Session {
    presentation: Arc<Presentation>,
    bound: usize,
    cache_dir: Option<PathBuf>,
    base: Mutex<Option<Arc<RewriteSystem>>>,
    quotient: Mutex<Option<Arc<RewriteSystem>>>,
}

impl Session {
    pub fn new(cartan: &CartanData, dseq: &TypeSequence, bound: usize, cache_dir: Option<PathBuf>) -> Self {
        Session {
            presentation: Arc::new(Presentation::build(cartan, dseq)),
            bound,
            cache_dir,
            base: Mutex::new(None),
            quotient: Mutex::new(None),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn label(&self) -> String {
        self.presentation.label()
    }

    /// Loads from the cache when possible; otherwise completes and stores.
    pub fn system(&self, variant: Variant, bound: usize) -> Result<RewriteSystem, EngineError> {
        if let Some(dir) = &self.cache_dir {
            if let Some(sys) = cache_load(dir, self.presentation.clone(), variant, bound)? {
                return Ok(sys);
            }
        }
        let sys = RewriteSystem::orient(self.presentation.clone(), variant)?.complete(bound)?;
        if let Some(dir) = &self.cache_dir {
            std::fs::create_dir_all(dir).map_err(CacheError::from)?;
            cache_store(dir, &sys)?;
        }
        Ok(sys)
    }

    /// Recomputes and stores the base and quotient systems, ignoring cached copies.
    pub fn rebuild_cache(&self) -> Result<Vec<PathBuf>, EngineError> {
        let Some(dir) = &self.cache_dir else {
            return Ok(vec![]);
        };
        std::fs::create_dir_all(dir).map_err(CacheError::from)?;
        let mut out = Vec::new();
        for v in [Variant::Base, Variant::QuotientJ1] {
            let sys = RewriteSystem::orient(self.presentation.clone(), v)?.complete(self.bound)?;
            out.push(cache_store(dir, &sys)?);
        }
        Ok(out)
    }

    pub fn base(&self) -> Result<Arc<RewriteSystem>, EngineError> {
        let mut slot = self.base.lock();
        if let Some(s) = &*slot {
            return Ok(s.clone());
        }
        let s = Arc::new(self.system(Variant::Base, self.bound)?);
        *slot = Some(s.clone());
        Ok(s)
    }

    pub fn quotient(&self) -> Result<Arc<RewriteSystem>, EngineError> {
        let mut slot = self.quotient.lock();
        if let Some(s) = &*slot {
            return Ok(s.clone());
        }
        let s = Arc::new(self.system(Variant::QuotientJ1, self.bound)?);
        *slot = Some(s.clone());
        Ok(s)
    }

    pub fn relations_report(&self) -> Result<Report, EngineError> {
        let sys = self.base()?;
        let mut r = Report::new();
        let mut bad = Vec::new();
        for rel in &self.presentation.relations {
            let nf = sys.normalize(&rel.element)?;
            if !nf.is_zero() {
                bad.push(format!("{} relation {} normalizes to {nf}", rel.family, rel.element));
            }
        }
        r.record("relations normalize to 0", &self.label(), bad);
        Ok(r)
    }

    /// Braid relations for every pair of nodes. A pair whose images overflow
    /// the bound is retried with a larger quotient, up to [`MAX_BRAID_BOUND`].
    pub fn braid_report(&self) -> Result<Report, EngineError> {
        let c = &self.presentation.cartan;
        let mut r = Report::new();
        let mut bound = self.bound;
        let mut quot = self.quotient()?;
        for i in 0..c.n {
            for j in i + 1..c.n {
                let m = c.order_m(i, j).expect("distinct nodes");
                let bad = loop {
                    match braid_check(&quot, i, j) {
                        Ok(bad) => break bad,
                        Err(RewriteError::DegreeOverflow { .. }) if bound + 2 <= MAX_BRAID_BOUND => {
                            bound += 2;
                            quot = Arc::new(self.system(Variant::QuotientJ1, bound)?);
                        }
                        Err(e) => return Err(e.into()),
                    }
                };
                r.push(
                    &format!("braid T{}T{} m={m}", i + 1, j + 1),
                    &format!("{c} L={bound}"),
                    bad,
                );
            }
        }
        Ok(r)
    }

    pub fn basis_counts_report(&self, p: &CheckParams) -> Result<Report, EngineError> {
        let mut r = kostant_count_report(&*self.quotient()?, p.height);
        r.extend(xy_count_report(&*self.base()?, p.height)?);
        let hom = self.system(Variant::Homogenized, p.oracle_len)?;
        r.extend(oracle_report(&hom, p.oracle_len, &[rat(5, 3), rat(7, 2)])?);
        Ok(r)
    }

    pub fn non_hopf_report(&self) -> Result<Report, EngineError> {
        let mut r = non_hopf_witness(&*self.base()?)?;
        // in the quotient the witness must disappear
        let q = non_hopf_witness(&*self.quotient()?)?;
        r.push(
            "non-hopf witness vanishes when J = 1",
            &self.label(),
            q.pass().then(|| "witness still holds in the quotient".to_string()),
        );
        Ok(r)
    }

    pub fn run(&self, check: Check, p: &CheckParams) -> Result<Report, EngineError> {
        Ok(match check {
            Check::Relations => self.relations_report()?,
            Check::Coalgebra => coalgebra_axiom_checks(&*self.base()?, p.word_len)?,
            Check::WeakAntipode => weak_antipode_report(&*self.base()?, p.word_len)?,
            Check::Grouplikes => grouplike_report(&*self.base()?, p.grouplike_len)?,
            Check::Braid => self.braid_report()?,
            Check::BasisCounts => self.basis_counts_report(p)?,
            Check::Rho => rho_check(&*self.base()?)?,
            Check::NonHopf => self.non_hopf_report()?,
        })
    }

    /// `φ_a`, `σ` (when given) and `φ_a σ` pass the automorphism checks, and
    /// the semidirect identity holds. Without `σ`, every valid diagram
    /// symmetry is used.
    pub fn automorphism_report(
        &self,
        a: &DiagonalParams,
        sigma: Option<&DiagramSymmetry>,
        maxlen: usize,
    ) -> Result<Report, EngineError> {
        let sys = self.base()?;
        let p = &self.presentation;
        let sigmas: Vec<DiagramSymmetry> = match sigma {
            Some(s) => vec![s.clone()],
            None => diagram_automorphisms(&p.cartan)
                .into_iter()
                .filter(|s| s.preserves(&p.dseq))
                .collect(),
        };
        let phi = phi_a(a);
        let mut r = verify_weak_hopf_automorphism(&sys, &phi, maxlen)?;
        for s in &sigmas {
            let sm = sigma_map(s, &p.cartan, &p.dseq)?;
            r.extend(verify_weak_hopf_automorphism(&sys, &sm, maxlen)?);
            let composed = phi.compose(&sys, &sm)?;
            r.extend(verify_weak_hopf_automorphism(&sys, &composed, maxlen)?);
            let inst = format!("{} σ={:?}", self.label(), s.one_line());
            r.push(
                "semidirect φ_aσ = σφ_{σ·a}",
                &inst,
                (!semidirect_check(&sys, s, a)?).then(|| "compositions differ on a generator".to_string()),
            );
        }
        Ok(r)
    }

    /// Checks that must fail: a map violating the relations, a map moving `J`,
    /// and the semidirect identity with `a` left unpermuted (when a
    /// nontrivial symmetry with distinguishing `a` exists).
    pub fn negative_controls(&self, a: &DiagonalParams) -> Result<Report, EngineError> {
        use crate::algebra::{Element, Letter};
        use crate::hopf::EndoMap;
        let sys = self.base()?;
        let mut r = Report::new();
        let inst = self.label();
        let mut swap_ef = EndoMap::identity();
        swap_ef.set_image(Letter::E(1), Element::letter(Letter::F(1)));
        let v = verify_weak_hopf_automorphism(&sys, &swap_ef, 1)?;
        let caught = v.failures().any(|f| f.check == "automorphism relations" && f.counterexample.is_some());
        r.push("control E1 ↦ F1 rejected", &inst, (!caught).then(|| "accepted".into()));
        let mut move_j = EndoMap::identity();
        move_j.set_image(Letter::J, Element::one());
        let v = verify_weak_hopf_automorphism(&sys, &move_j, 1)?;
        let caught = v.failures().any(|f| f.check == "automorphism fixes J");
        r.push("control J ↦ 1 rejected", &inst, (!caught).then(|| "accepted".into()));
        let p = &self.presentation;
        for s in diagram_automorphisms(&p.cartan) {
            if !s.preserves(&p.dseq) || s.act(a) == *a {
                continue;
            }
            let diff = semidirect_control(&sys, &s, a)?;
            r.push(
                "control φ_aσ ≠ σφ_a",
                &format!("{inst} σ={:?}", s.one_line()),
                diff.is_none().then(|| "unpermuted parameters agree".into()),
            );
        }
        Ok(r)
    }
}
