//! Compatibility of AW with ∇ through the middle interchange.
//!
//! For modules `X, Y, Z, W` both sides are maps
//! `C(X⊗Y) ⊗ C(Z⊗W) -> C(X⊗Z) ⊗ C(Y⊗W)`:
//!
//! * left: `AW ∘ C(id ⊗ σ ⊗ id) ∘ ∇`
//! * right: `(∇ ⊗ ∇) ∘ τ ∘ (AW ⊗ AW)`, `τ` the signed chain interchange.

use std::sync::Arc;

use super::{EzPair, ShuffleFault};
use crate::chain::{middle_swap as chain_middle_swap, ChainMap, ChainModel};
use crate::error::Result;
use crate::report::VerificationReport;
use crate::simplicial::{middle_swap, tensor, SimplicialModule};

/// The six pairs needed for one instance of the compatibility square.
#[derive(Clone, Debug)]
pub struct BialgebraInstance {
    pub x: Arc<SimplicialModule>,
    pub y: Arc<SimplicialModule>,
    pub z: Arc<SimplicialModule>,
    pub w: Arc<SimplicialModule>,
    pub normalized: bool,
    /// Flips one shuffle sign in every ∇, for fault fixtures.
    pub fault: Option<ShuffleFault>,
    xy: EzPair,
    zw: EzPair,
    xz: EzPair,
    yw: EzPair,
    outer_source: EzPair,
    outer_target: EzPair,
}

impl BialgebraInstance {
    pub fn new(
        x: Arc<SimplicialModule>,
        y: Arc<SimplicialModule>,
        z: Arc<SimplicialModule>,
        w: Arc<SimplicialModule>,
        normalized: bool,
    ) -> Result<Self> {
        let xy_m = Arc::new(tensor(&x, &y)?);
        let zw_m = Arc::new(tensor(&z, &w)?);
        let xz_m = Arc::new(tensor(&x, &z)?);
        let yw_m = Arc::new(tensor(&y, &w)?);
        let src4 = Arc::new(tensor(&xy_m, &zw_m)?);
        let tgt4 = Arc::new(tensor(&xz_m, &yw_m)?);
        let xy = EzPair::with_product(x.clone(), y.clone(), xy_m.clone(), normalized)?;
        let zw = EzPair::with_product(z.clone(), w.clone(), zw_m.clone(), normalized)?;
        let xz = EzPair::with_product(x.clone(), z.clone(), xz_m.clone(), normalized)?;
        let yw = EzPair::with_product(y.clone(), w.clone(), yw_m.clone(), normalized)?;
        // reuse the factor models so the composites line up exactly
        let outer_source = EzPair::from_models(xy.ab.clone(), zw.ab.clone(), ChainModel::new(src4, normalized)?)?;
        let outer_target = EzPair::from_models(xz.ab.clone(), yw.ab.clone(), ChainModel::new(tgt4, normalized)?)?;
        Ok(BialgebraInstance {
            x,
            y,
            z,
            w,
            normalized,
            fault: None,
            xy,
            zw,
            xz,
            yw,
            outer_source,
            outer_target,
        })
    }

    pub fn with_fault(mut self, fault: ShuffleFault) -> Self {
        self.fault = Some(fault);
        self
    }

    pub fn max_level(&self) -> usize {
        self.x.max_degree()
    }

    fn objects(&self) -> Vec<String> {
        [&self.x, &self.y, &self.z, &self.w].iter().map(|m| m.name().to_string()).collect()
    }

    pub fn lhs(&self) -> Result<ChainMap> {
        let sigma = middle_swap(
            &self.x,
            &self.y,
            &self.z,
            &self.w,
            self.outer_source.ab.module.clone(),
            self.outer_target.ab.module.clone(),
        )?;
        let c_sigma = ChainModel::map_of(&self.outer_source.ab, &self.outer_target.ab, &sigma)?;
        let nabla = self.outer_source.shuffle_with(self.fault.as_ref())?;
        self.outer_target.aw()?.after(&c_sigma)?.after(&nabla)
    }

    pub fn rhs(&self) -> Result<ChainMap> {
        let aw2 = ChainMap::tensor(&self.xy.aw()?, &self.zw.aw()?)?;
        let tau = chain_middle_swap(self.xy.a.complex(), self.xy.b.complex(), self.zw.a.complex(), self.zw.b.complex())?;
        let f = self.fault.as_ref();
        let nabla2 = ChainMap::tensor(&self.xz.shuffle_with(f)?, &self.yw.shuffle_with(f)?)?;
        nabla2.after(&tau)?.after(&aw2)
    }

    pub fn check(&self) -> Result<VerificationReport> {
        let mut r = self.lhs()?.compare(&self.rhs()?, "bialgebra");
        r.check = "bialgebra".into();
        r.objects = self.objects();
        Ok(r)
    }
}

pub fn bialgebra_lhs(inst: &BialgebraInstance) -> Result<ChainMap> {
    inst.lhs()
}

pub fn bialgebra_rhs(inst: &BialgebraInstance) -> Result<ChainMap> {
    inst.rhs()
}
