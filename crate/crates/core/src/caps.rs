//! Point-count caps. `WORKBENCH_CAP` overrides the core cap.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pointset::MAX_POINTS;

pub const DEFAULT_CORE_CAP: usize = 12;
/// Base spaces for the Smyth-over-Smyth union map.
pub const UNION_MAP_CAP: usize = 3;
/// Base spaces whose Smyth power space is classified.
pub const SMYTH_TRANSFER_CAP: usize = 4;
/// Points of any derived power space (bounded by the bit-set width).
pub const POWER_SPACE_CAP: usize = MAX_POINTS;
/// Each side of the exhaustive extension-uniqueness enumeration.
pub const UNIQUENESS_CAP: usize = 5;

static CORE: OnceLock<usize> = OnceLock::new();

pub fn core_cap() -> usize {
    *CORE.get_or_init(|| {
        std::env::var("WORKBENCH_CAP")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(MAX_POINTS))
            .unwrap_or(DEFAULT_CORE_CAP)
    })
}

pub fn ensure(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
