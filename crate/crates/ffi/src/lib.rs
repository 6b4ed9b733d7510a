//! C interface: opaque group and report handles, status codes, JSON payloads.
//!
//! Every fallible call returns a [`QgStatus`]; on failure the message is kept
//! per thread and read with [`qg_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quillen::checkers::{euler_formula, hqc_witness, CheckError, CheckOptions, ComplexRoute};
use quillen::group::{GroupError, GroupSpec, DEFAULT_ORDER_CAP};
use quillen::homology::{poset_betti, HomologyError};
use quillen::poset::{PosetError, DEFAULT_SIMPLEX_CAP};
use quillen::quillen::{ap_poset, QuillenError, DEFAULT_SUBGROUP_CAP};
use quillen::reproduce::{load_bundled, run_criterion};
use quillen::PermGroup;

/// Result of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    MalformedSpec = 3,
    UnknownGroup = 4,
    CapExceeded = 5,
    NotPrime = 6,
    ComputationFailed = 7,
    Panic = 8,
}

/// A built permutation group.
pub struct QgGroup {
    group: PermGroup,
}

/// A JSON report.
pub struct QgReport {
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(QgStatus, String);

impl Failure {
    fn new(status: QgStatus, msg: impl Into<String>) -> Self {
        Failure(status, msg.into())
    }
}

fn group_status(e: &GroupError) -> QgStatus {
    match e {
        GroupError::OrderCapExceeded { .. } | GroupError::EnumerationCapExceeded { .. } => {
            QgStatus::CapExceeded
        }
        GroupError::MalformedSpec(_) | GroupError::NonPermutationGenerator(_) => {
            QgStatus::MalformedSpec
        }
        GroupError::NotPrime(_) => QgStatus::NotPrime,
        _ => QgStatus::ComputationFailed,
    }
}

fn poset_status(e: &PosetError) -> QgStatus {
    match e {
        PosetError::SimplexCapExceeded { .. } => QgStatus::CapExceeded,
        _ => QgStatus::ComputationFailed,
    }
}

fn homology_status(e: &HomologyError) -> QgStatus {
    match e {
        HomologyError::MatrixCapExceeded { .. } => QgStatus::CapExceeded,
        HomologyError::Poset(p) => poset_status(p),
        _ => QgStatus::ComputationFailed,
    }
}

fn quillen_status(e: &QuillenError) -> QgStatus {
    match e {
        QuillenError::Group(g) => group_status(g),
        QuillenError::Poset(p) => poset_status(p),
        QuillenError::Homology(h) => homology_status(h),
        _ => QgStatus::ComputationFailed,
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure(group_status(&e), e.to_string())
    }
}

impl From<QuillenError> for Failure {
    fn from(e: QuillenError) -> Self {
        Failure(quillen_status(&e), e.to_string())
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Self {
        Failure(homology_status(&e), e.to_string())
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        let status = match &e {
            CheckError::Quillen(q) => quillen_status(q),
            _ => QgStatus::ComputationFailed,
        };
        Failure(status, e.to_string())
    }
}

fn guard<T>(out: *mut *mut T, body: impl FnOnce() -> Result<T, Failure>) -> QgStatus {
    if out.is_null() {
        set_error("output pointer is null".into());
        return QgStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            unsafe { *out = Box::into_raw(Box::new(value)) };
            QgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QgStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::new(
            QgStatus::NullArgument,
            "string argument is null",
        ));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::new(QgStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn group_ref<'a>(g: *const QgGroup) -> Result<&'a PermGroup, Failure> {
    g.as_ref()
        .map(|h| &h.group)
        .ok_or_else(|| Failure::new(QgStatus::NullArgument, "group handle is null"))
}

fn report(value: serde_json::Value) -> Result<QgReport, Failure> {
    let json = serde_json::to_string(&value)
        .map_err(|e| Failure::new(QgStatus::ComputationFailed, e.to_string()))?;
    Ok(QgReport {
        json: CString::new(json).expect("json has no interior nul"),
    })
}

fn prime(p: u64) -> Result<(), Failure> {
    if p < 2
        || (2..p)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
    {
        return Err(GroupError::NotPrime(p).into());
    }
    Ok(())
}

/// Builds a group from the JSON text of a group file. `order_cap` 0 means
/// the library default.
///
/// # Safety
/// `spec` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_group_from_spec(
    spec: *const c_char,
    order_cap: usize,
    out: *mut *mut QgGroup,
) -> QgStatus {
    guard(out, || {
        let parsed = GroupSpec::parse(text(spec)?)?;
        let cap = if order_cap == 0 {
            DEFAULT_ORDER_CAP
        } else {
            order_cap
        };
        Ok(QgGroup {
            group: parsed.build_with_cap(cap)?.group,
        })
    })
}

/// Loads one of the bundled groups by name.
///
/// # Safety
/// `name` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_group_bundled(name: *const c_char, out: *mut *mut QgGroup) -> QgStatus {
    guard(out, || {
        let name = text(name)?;
        if quillen::reproduce::bundled_spec(name).is_none() {
            return Err(Failure::new(
                QgStatus::UnknownGroup,
                format!("no bundled group {name}"),
            ));
        }
        Ok(QgGroup {
            group: load_bundled(name)?.group,
        })
    })
}

/// Group order, or 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_group_order(group: *const QgGroup) -> u64 {
    group.as_ref().map_or(0, |g| g.group.order() as u64)
}

/// Number of permuted points, or 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_group_degree(group: *const QgGroup) -> u64 {
    group.as_ref().map_or(0, |g| g.group.degree() as u64)
}

/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_group_free(group: *mut QgGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Reduced Betti numbers of the elementary abelian p-subgroup poset.
///
/// # Safety
/// `group` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_betti(
    group: *const QgGroup,
    p: u64,
    out: *mut *mut QgReport,
) -> QgStatus {
    guard(out, || {
        let g = group_ref(group)?;
        prime(p)?;
        let ap = ap_poset(g, &g.whole(), p, DEFAULT_SUBGROUP_CAP)?;
        let betti = poset_betti(ap.poset(), DEFAULT_SIMPLEX_CAP)?;
        report(serde_json::json!({
            "group": g.name(),
            "order": g.order(),
            "p": p,
            "poset_size": ap.len(),
            "betti": betti,
            "euler": betti.euler(),
        }))
    })
}

/// Nonvanishing-homology witness certificate.
///
/// # Safety
/// `group` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_hqc(
    group: *const QgGroup,
    p: u64,
    out: *mut *mut QgReport,
) -> QgStatus {
    guard(out, || {
        let g = group_ref(group)?;
        prime(p)?;
        let cert = hqc_witness(g, p, &CheckOptions::default())?;
        report(serde_json::to_value(&cert).expect("certificate serializes"))
    })
}

/// Euler characteristic by the rank-count formula against the radical
/// subgroup complex.
///
/// # Safety
/// `group` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_euler_formula(
    group: *const QgGroup,
    p: u64,
    out: *mut *mut QgReport,
) -> QgStatus {
    guard(out, || {
        let g = group_ref(group)?;
        prime(p)?;
        let r = euler_formula(g, p, ComplexRoute::Bouc, &CheckOptions::default())?;
        report(serde_json::to_value(&r).expect("report serializes"))
    })
}

/// Runs one reproduction criterion (1 to 14).
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_criterion(id: u32, out: *mut *mut QgReport) -> QgStatus {
    guard(out, || {
        if !quillen::reproduce::CRITERIA.iter().any(|(i, _)| *i == id) {
            return Err(Failure::new(
                QgStatus::ComputationFailed,
                format!("no criterion {id}"),
            ));
        }
        report(serde_json::to_value(run_criterion(id)).expect("outcome serializes"))
    })
}

/// Borrowed JSON text of a report, valid until the report is freed.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_report_json(report: *const QgReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_report_free(report: *mut QgReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Message of the last failure on this thread, or null. Owned by the
/// caller; release with [`qg_string_free`].
#[no_mangle]
pub extern "C" fn qg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn qg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
