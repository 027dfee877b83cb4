//! Built-in reproductions run by `blockmat selftest`.

use blockmat::oracle::{dense_det, dense_inv, dense_lu, flatten};
use blockmat::{
    inv_traced, is_unit_lower, is_upper, plu_decomp, times, try_inv, BlockError, BlockKind, BlockMatrix, ElementGrid,
    InvPath, InvTrace,
};

use crate::document::{parse_document, write_document};
use crate::fixtures::{all_singular_blocks, plu_example, worked_example, WORKED_EXAMPLE_FLAT};

pub struct Check {
    pub name: &'static str,
    pub outcome: Result<String, String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(detail) => format!("ok    {}: {detail}", self.name),
            Err(reason) => format!("FAIL  {}: {reason}", self.name),
        }
    }
}

fn ensure(cond: bool, reason: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason.into())
    }
}

fn err(e: BlockError) -> String {
    e.to_string()
}

pub fn check_structure() -> Result<String, String> {
    let m = worked_example();
    ensure(m.dims() == (3, 5), format!("dimensions {:?}", m.dims()))?;
    let expected = ElementGrid::from_ints(&WORKED_EXAMPLE_FLAT).map_err(err)?;
    ensure(flatten(&m) == expected, "flattened layout differs")?;
    for (r, c, v) in [(2, 3, 18), (3, 5, 25)] {
        let e = m.elt(r, c).map_err(err)?;
        ensure(e == blockmat::Scalar::int(v), format!("elt({r},{c}) = {e}"))?;
    }
    ensure(m.format_structure() == "R 3×5\n  M 2×2\n  M 2×3\n  M 1×2\n  M 1×3", "structure tree differs")?;
    let back = parse_document(&write_document(&m)).map_err(|e| e.to_string())?;
    ensure(back == m, "document round trip differs")?;
    Ok("R 3×5 with four M blocks, elt(2,3) = 18, elt(3,5) = 25".into())
}

pub fn check_all_singular_inverse() -> Result<String, String> {
    let m = all_singular_blocks();
    for r in 1..=2 {
        for c in 1..=2 {
            let d = dense_det(&flatten(m.block(r, c).map_err(err)?)).map_err(err)?;
            ensure(d.is_zero(), format!("block ({r},{c}) has det {d}"))?;
        }
    }
    let d = dense_det(&flatten(&m)).map_err(err)?;
    ensure(!d.is_zero(), "matrix is singular")?;
    ensure(try_inv(&m) == Err(BlockError::Singular), "Schur attempt did not fail")?;
    let mut trace = InvTrace::default();
    let r = inv_traced(&m, &mut trace).map_err(err)?;
    ensure(trace.schur_failures >= 1 && trace.last_path == Some(InvPath::Gram), "inverse did not use the Gram path")?;
    let id = BlockMatrix::identity(m.er()).map_err(err)?;
    ensure(times(&m, &r).map_err(err)?.eq_elements(&id), "M·inverse is not the identity")?;
    ensure(Ok(flatten(&r)) == dense_inv(&flatten(&m)), "inverse differs from the dense inverse")?;
    Ok(format!("four singular blocks, det {d}, Schur FAIL then gram path, M·inverse = I"))
}

pub fn check_plu() -> Result<String, String> {
    let m = plu_example();
    let f = plu_decomp(&m).map_err(err)?;
    let plu = times(&times(&f.p, &f.l).map_err(err)?, &f.u).map_err(err)?;
    ensure(plu.eq_elements(&m), "P·L·U differs from M")?;
    ensure(is_unit_lower(&f.l).map_err(err)?, "L is not unit lower triangular")?;
    ensure(is_upper(&f.u).map_err(err)?, "U is not upper triangular")?;
    if f.l.kind() == BlockKind::RBlock {
        for k in 1..=2 {
            ensure(is_unit_lower(f.l.block(k, k).map_err(err)?).map_err(err)?, "diagonal block of L")?;
            ensure(is_upper(f.u.block(k, k).map_err(err)?).map_err(err)?, "diagonal block of U")?;
        }
    }
    let (l, u) = dense_lu(&flatten(&m)).map_err(err)?;
    ensure(flatten(&f.l) == l && flatten(&f.u) == u, "factors differ from dense Doolittle")?;
    Ok("P·L·U = M, L unit lower, U upper, matches dense Doolittle".into())
}

pub fn run_all() -> Vec<Check> {
    vec![
        Check { name: "structure", outcome: check_structure() },
        Check { name: "inverse of all-singular blocks", outcome: check_all_singular_inverse() },
        Check { name: "plu", outcome: check_plu() },
    ]
}
