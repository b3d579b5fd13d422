//! C ABI for the hamsets library.
//!
//! Words and graphs are opaque handles owned by the caller and released with
//! their `_free` function. Every fallible call returns an [`HsStatus`]; on
//! failure [`hs_last_error_message`] describes the error. Strings returned
//! through out-pointers are NUL-terminated and released with
//! [`hs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hamsets::maximality::MAX_ANALYSIS_LETTERS;
use hamsets::{
    analyze, count_hamiltonian_sets, hamiltonian_bound, run_census, tangled_cord, AssemblyGraph,
    CensusOptions, Dow, Error,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidWord = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    CrossCheckFailed = 6,
    Panic = 7,
}

/// Opaque double occurrence word.
pub struct HsDow(Dow);

/// Opaque assembly graph.
pub struct HsGraph(AssemblyGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> HsStatus {
    match error {
        Error::Empty | Error::BadToken(_) | Error::NotDoubleOccurrence { .. } => {
            HsStatus::InvalidWord
        }
        Error::TooLarge { .. } => HsStatus::TooLarge,
        Error::CrossCheck { .. } => HsStatus::CrossCheckFailed,
        _ => HsStatus::InvalidArgument,
    }
}

struct Failure(HsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HsStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal error: {message}"));
            HsStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn store_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    let text = CString::new(text).map_err(|e| Failure(HsStatus::Panic, e.to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(text.into_raw());
    Ok(())
}

/// Parses a word in compact (`"1212"`) or token (`"1 2 1 2"`) form.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_parse(text: *const c_char, out: *mut *mut HsDow) -> HsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(HsStatus::InvalidUtf8, e.to_string()))?;
        let word = Dow::parse(text)?;
        store_handle(out, HsDow(word))
    })
}

/// Creates the tangled cord word on `n >= 1` letters.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_tangled_cord(n: usize, out: *mut *mut HsDow) -> HsStatus {
    guard(|| {
        if n == 0 || n > u32::MAX as usize / 2 {
            return Err(Failure(
                HsStatus::InvalidArgument,
                format!("order {n} out of range"),
            ));
        }
        store_handle(out, HsDow(tangled_cord(n)))
    })
}

/// Releases a word. Null is ignored.
///
/// # Safety
/// `word` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_free(word: *mut HsDow) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Length of the word (`2n`), 0 for null.
///
/// # Safety
/// `word` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_len(word: *const HsDow) -> usize {
    word.as_ref().map_or(0, |w| w.0.len())
}

/// Number of distinct letters, 0 for null.
///
/// # Safety
/// `word` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_order(word: *const HsDow) -> usize {
    word.as_ref().map_or(0, |w| w.0.order())
}

/// Renders the word; free the result with [`hs_string_free`].
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_render(word: *const HsDow, out: *mut *mut c_char) -> HsStatus {
    guard(|| store_string(out, deref(word, "word")?.0.render()))
}

/// The representative of the word's class under renaming and reversal.
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_class_representative(
    word: *const HsDow,
    out: *mut *mut HsDow,
) -> HsStatus {
    guard(|| {
        let representative = deref(word, "word")?.0.class_representative();
        store_handle(out, HsDow(representative))
    })
}

/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_dow_is_tangled_cord(word: *const HsDow, out: *mut bool) -> HsStatus {
    guard(|| store(out, deref(word, "word")?.0.is_tangled_cord()))
}

/// Builds the assembly graph of a word. The word handle stays owned by the
/// caller.
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_build(word: *const HsDow, out: *mut *mut HsGraph) -> HsStatus {
    guard(|| {
        let graph = AssemblyGraph::build(&deref(word, "word")?.0);
        store_handle(out, HsGraph(graph))
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_free(graph: *mut HsGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of Hamiltonian sets of polygonal paths.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_count_hamiltonian_sets(
    graph: *const HsGraph,
    out: *mut u64,
) -> HsStatus {
    guard(|| store(out, count_hamiltonian_sets(&deref(graph, "graph")?.0)))
}

/// Graphviz rendering; free the result with [`hs_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_export_dot(
    graph: *const HsGraph,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| store_string(out, deref(graph, "graph")?.0.export_dot()))
}

/// `F_{2n+1} - 1`, the largest possible count on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_hamiltonian_bound(n: usize, out: *mut u64) -> HsStatus {
    guard(|| {
        if n > MAX_ANALYSIS_LETTERS {
            return Err(Error::TooLarge {
                n,
                limit: MAX_ANALYSIS_LETTERS,
            }
            .into());
        }
        store(out, hamiltonian_bound(n))
    })
}

/// Maximality report as JSON; free the result with [`hs_string_free`].
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_analyze_json(
    word: *const HsDow,
    cross_check_limit: usize,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let report = analyze(&deref(word, "word")?.0, cross_check_limit)?;
        store_string(out, serde_json::to_string(&report).expect("serializable"))
    })
}

/// Census summary for order `n` as JSON; free the result with
/// [`hs_string_free`]. `threads = 0` uses one thread per core.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_census_json(
    n: usize,
    threads: usize,
    allow_large: bool,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let census = run_census(
            n,
            &CensusOptions {
                threads,
                allow_large,
            },
        )?;
        store_string(
            out,
            serde_json::to_string(&census.summary).expect("serializable"),
        )
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}
