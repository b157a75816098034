//! Shared per-group state: root system, Weyl group, Schubert calculus and
//! memoized parabolic rings.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::deform::DeformedRing;
use crate::error::Result;
use crate::rootsys::{CartanType, Parabolic, RootSystem};
use crate::schubert::{ParabolicRing, SchubertCalculus, DEFAULT_MONOMIAL_CAP};
use crate::weyl::{WeylGroup, DEFAULT_WEYL_CAP};

#[derive(Debug)]
pub struct GroupContext {
    rs: Arc<RootSystem>,
    weyl: Arc<WeylGroup>,
    calc: Arc<SchubertCalculus>,
    rings: Mutex<HashMap<Parabolic, Arc<DeformedRing>>>,
}

impl GroupContext {
    pub fn new(ct: CartanType) -> Result<Self> {
        Self::from_root_system(Arc::new(RootSystem::new(ct)))
    }

    pub fn from_root_system(rs: Arc<RootSystem>) -> Result<Self> {
        Self::with_caps(rs, DEFAULT_WEYL_CAP, DEFAULT_MONOMIAL_CAP)
    }

    pub fn with_caps(rs: Arc<RootSystem>, weyl_cap: u128, monomial_cap: u128) -> Result<Self> {
        let weyl = Arc::new(WeylGroup::with_cap(rs.clone(), weyl_cap)?);
        let calc = Arc::new(SchubertCalculus::with_cap(weyl.clone(), monomial_cap)?);
        Ok(GroupContext { rs, weyl, calc, rings: Mutex::new(HashMap::new()) })
    }

    /// Parses e.g. `"B3"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn weyl(&self) -> &Arc<WeylGroup> {
        &self.weyl
    }

    pub fn calculus(&self) -> &Arc<SchubertCalculus> {
        &self.calc
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// The (memoized) deformed ring of `G/P`.
    pub fn deformed(&self, p: &Parabolic) -> Result<Arc<DeformedRing>> {
        if let Some(r) = self.rings.lock().unwrap().get(p) {
            return Ok(r.clone());
        }
        let ring = Arc::new(ParabolicRing::new(self.calc.clone(), p.clone())?);
        let d = Arc::new(DeformedRing::new(ring));
        Ok(self.rings.lock().unwrap().entry(p.clone()).or_insert(d).clone())
    }

    /// The classical ring `H*(G/P)`.
    pub fn ring(&self, p: &Parabolic) -> Result<Arc<ParabolicRing>> {
        Ok(self.deformed(p)?.classical().clone())
    }

    /// The maximal parabolic `P_i`, one-based `i` as in Bourbaki labels.
    pub fn maximal(&self, i: usize) -> Parabolic {
        Parabolic::maximal(self.rank(), i - 1)
    }
}
