//! Conditions (a) to (d) for the zero-sum module under S_m, computed once per m.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::Result;
use crate::modf2::{h1_dim, F2GModule};
use crate::permgrp::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsTable {
    pub m: usize,
    pub dim: usize,
    /// (a) M is simple and End(M) = F2.
    pub simple: bool,
    pub endomorphism_dim: usize,
    /// (b) H^1(S_m, M).
    pub h1: usize,
    /// H^1 of the permutation module, 1 by Shapiro's lemma.
    pub h1_permutation_module: usize,
    /// (c) dim M/(g-1) for an (m-1)-cycle g.
    pub coinvariants_m_minus_1_cycle: usize,
    /// (d) dim M/(h-1) for an m-cycle h.
    pub coinvariants_m_cycle: usize,
    /// Local H^1 dimensions 2 dim M/(Frob-1) for the two cycle types.
    pub local_h1_m_minus_1_cycle: usize,
    pub local_h1_m_cycle: usize,
}

impl ConditionsTable {
    pub fn a(&self) -> bool {
        self.simple && self.endomorphism_dim == 1
    }

    pub fn b(&self) -> bool {
        self.h1 == 0
    }

    pub fn c(&self) -> bool {
        self.coinvariants_m_minus_1_cycle == 1
    }

    pub fn d(&self) -> bool {
        self.coinvariants_m_cycle == 0
    }

    pub fn all(&self) -> bool {
        self.a() && self.b() && self.c() && self.d()
    }
}

fn compute(m: usize) -> Result<ConditionsTable> {
    let module = F2GModule::zero_sum(m)?;
    let long: Vec<usize> = (0..m).collect();
    let m_cycle = Permutation::from_cycles(m, &[&long])?;
    let short = Permutation::from_cycles(m, &[&long[..m - 1]])?;
    let perm = F2GModule::permutation_module(Arc::new(PermGroup::symmetric(m)?));
    Ok(ConditionsTable {
        m,
        dim: module.dim(),
        simple: module.is_simple(),
        endomorphism_dim: module.endomorphism_dim(),
        h1: h1_dim(&module)?,
        h1_permutation_module: h1_dim(&perm)?,
        coinvariants_m_minus_1_cycle: module.coinvariant_dim(&short)?,
        coinvariants_m_cycle: module.coinvariant_dim(&m_cycle)?,
        local_h1_m_minus_1_cycle: module.local_h1_dim(&short)?,
        local_h1_m_cycle: module.local_h1_dim(&m_cycle)?,
    })
}

/// The table for odd m >= 3, cached per m.
pub fn conditions_table(m: usize) -> Result<ConditionsTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, ConditionsTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&m) {
        return Ok(t.clone());
    }
    let t = compute(m)?;
    cache.lock().unwrap().insert(m, t.clone());
    Ok(t)
}
