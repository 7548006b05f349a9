//! Process-wide limits.
//!
//! The degree cap bounds the number of boxes any engine computation may
//! produce; the group guard bounds the total size of symmetric-group products
//! handled by explicit group-algebra code. Both are read on every call, so a
//! front end can adjust them once at start-up.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 12;
pub const DEFAULT_GROUP_GUARD: usize = 8;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);
static GROUP_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_GROUP_GUARD);

pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub fn group_guard() -> usize {
    GROUP_GUARD.load(Ordering::Relaxed)
}

pub fn set_group_guard(guard: usize) {
    GROUP_GUARD.store(guard, Ordering::Relaxed);
}

pub fn check_degree(degree: usize) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    Ok(())
}

pub(crate) fn check_group(what: &'static str, size: usize) -> Result<()> {
    let guard = group_guard();
    if size > guard {
        return Err(Error::SizeGuard { what, size, guard });
    }
    Ok(())
}
