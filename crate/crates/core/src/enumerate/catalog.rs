use rayon::prelude::*;
use serde::Serialize;

use crate::cat1::{cat1_to_gxmod, check_ordinary_cat1, GCat1};
use crate::error::Result;
use crate::xmod::{is_aspherical, is_simply_connected, GXMod};

use super::objects::{enumerate_gcat1s, enumerate_gxmods};
use super::pool::SearchPool;

/// One line of the catalog.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CatalogEntry {
    Gxmod {
        index: usize,
        object: GXMod,
        aspherical: bool,
        simply_connected: bool,
        kernel_order: usize,
        image_order: usize,
    },
    Gcat1 {
        index: usize,
        object: GCat1,
        ordinary: bool,
        crossed_module: GXMod,
    },
}

/// Every generalized crossed module and cat¹-group over the pool's groups with action,
/// in a fixed order.
pub fn catalog(pool: &SearchPool) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    catalog_each::<crate::error::Error>(pool, |e| {
        out.push(e);
        Ok(())
    })?;
    Ok(out)
}

/// [`catalog`] one entry at a time, in the same order, without holding the whole
/// catalog in memory. Stops at the first error returned by `emit`.
pub fn catalog_each<E>(
    pool: &SearchPool,
    mut emit: impl FnMut(CatalogEntry) -> Result<(), E>,
) -> Result<(), E>
where
    E: From<crate::error::Error>,
{
    const CHUNK: usize = 64;
    let gwas = pool.gwas();
    let n = gwas.len();
    let mut index = 0;
    for start in (0..n * n).step_by(CHUNK) {
        let xmods: Vec<GXMod> = (start..(start + CHUNK).min(n * n))
            .into_par_iter()
            .flat_map_iter(|k| enumerate_gxmods(&gwas[k / n], &gwas[k % n]))
            .collect();
        for x in xmods {
            emit(CatalogEntry::Gxmod {
                index,
                aspherical: is_aspherical(&x),
                simply_connected: is_simply_connected(&x),
                kernel_order: x.kernel().len(),
                image_order: x.image().len(),
                object: x,
            })?;
            index += 1;
        }
    }
    let mut index = 0;
    for chunk in gwas.chunks(CHUNK) {
        let cat1s: Vec<GCat1> = chunk.par_iter().flat_map_iter(enumerate_gcat1s).collect();
        for c in cat1s {
            emit(CatalogEntry::Gcat1 {
                index,
                ordinary: check_ordinary_cat1(&c),
                crossed_module: cat1_to_gxmod(&c)?,
                object: c,
            })?;
            index += 1;
        }
    }
    Ok(())
}
