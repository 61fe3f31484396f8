//! `S^λ` with its standard basis, weight spaces and the engine bound to it.

use std::collections::BTreeMap;

use crate::combinatorics::{std_count, Bicharge, Bipartition, Perm};
use crate::klr::{Conventions, Engine};
use crate::linalg::FieldSpec;

use super::presentation::{SpechtError, SpechtPresentation};

pub struct SpechtModule {
    pub presentation: SpechtPresentation,
    pub field: FieldSpec,
    pub engine: Engine,
    basis: Option<Vec<u32>>,
}

impl SpechtModule {
    pub fn build(shape: &Bipartition, charge: &Bicharge, field: FieldSpec) -> Result<SpechtModule, SpechtError> {
        SpechtModule::build_with(shape, charge, field, Conventions::PINNED)
    }

    pub fn build_with(
        shape: &Bipartition,
        charge: &Bicharge,
        field: FieldSpec,
        conventions: Conventions,
    ) -> Result<SpechtModule, SpechtError> {
        let presentation = SpechtPresentation::new(shape, charge)?;
        let engine = Engine::new(presentation.layout.clone(), field, conventions);
        Ok(SpechtModule {
            presentation,
            field,
            engine,
            basis: None,
        })
    }

    pub fn n(&self) -> usize {
        self.presentation.n
    }

    pub fn e(&self) -> u8 {
        self.presentation.e
    }

    pub fn dim(&self) -> u64 {
        std_count(self.presentation.bipartition())
    }

    /// Interned ids of all standard tableaux, in basis order.
    pub fn basis(&mut self) -> Vec<u32> {
        if let Some(b) = &self.basis {
            return b.clone();
        }
        let tabs = self.presentation.layout.standard_tableaux();
        let ids: Vec<u32> = tabs.iter().map(|w| self.engine.id_of(w)).collect();
        self.basis = Some(ids.clone());
        ids
    }

    pub fn graded_dim(&self) -> BTreeMap<i32, u64> {
        let layout = &self.presentation.layout;
        layout.graded_dim(&layout.standard_tableaux())
    }

    /// Basis of `e(i) S^λ`.
    pub fn weight_space(&mut self, i: &[u8]) -> Vec<u32> {
        let tabs: Vec<Perm> = self.presentation.layout.standard_with_residues(i);
        tabs.iter().map(|w| self.engine.id_of(w)).collect()
    }

    pub fn i_lambda(&self) -> Vec<u8> {
        self.presentation.i_lambda.clone()
    }

    pub fn tableau_string(&self, id: u32) -> String {
        self.presentation.layout.tableau_string(self.engine.perm(id))
    }
}
