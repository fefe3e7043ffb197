//! C ABI over `xbwt-core`.
//!
//! Every function returns an [`XbwtStatus`]; on failure a description is
//! available from [`xbwt_last_error_message`] on the same thread. Panics
//! never cross the boundary. Row indices are 1-based, as in the Rust API.
//! A null data pointer is accepted wherever the matching length is 0.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use xbwt_core::container::{decode_bytes, encode_bytes, EncodeOptions, Transform};
use xbwt_core::{
    bwt_forward, bwt_inverse, bwts_forward, bwts_inverse, lst_forward, lst_inverse, run_selftest, st_forward,
    st_inverse, AlphabetOrder, IndexedTransform,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XbwtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    /// The input is not in the image of the transform, or is empty where a
    /// nonempty word is required.
    InvalidInput = 4,
    /// The container is malformed or corrupt.
    ContainerError = 5,
    Panic = 6,
}

/// Transform identifiers, equal to the container's transform ids.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XbwtTransform {
    Bwt = 0,
    Bwts = 1,
    St = 2,
    Lst = 3,
}

/// Opaque alphabet order.
pub struct XbwtAlphabet(AlphabetOrder);

/// Opaque byte buffer owned by the library.
pub struct XbwtBuffer(Vec<u8>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior NUL"));
}

struct Fail(XbwtStatus, String);

impl Fail {
    fn new(status: XbwtStatus, msg: impl Into<String>) -> Self {
        Fail(status, msg.into())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> XbwtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            XbwtStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            XbwtStatus::Panic
        }
    }
}

unsafe fn input<'a>(data: *const u8, len: usize, what: &str) -> Result<&'a [u8], Fail> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(Fail::new(XbwtStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(std::slice::from_raw_parts(data, len))
    }
}

unsafe fn output<'a>(data: *mut u8, cap: usize, needed: usize) -> Result<&'a mut [u8], Fail> {
    if cap < needed {
        return Err(Fail::new(XbwtStatus::BufferTooSmall, format!("output buffer holds {cap} bytes, {needed} needed")));
    }
    if needed == 0 {
        Ok(&mut [])
    } else if data.is_null() {
        Err(Fail::new(XbwtStatus::NullPointer, "output buffer is null"))
    } else {
        Ok(std::slice::from_raw_parts_mut(data, needed))
    }
}

fn transform(id: u32) -> Result<Transform, Fail> {
    u8::try_from(id)
        .ok()
        .and_then(Transform::from_id)
        .ok_or_else(|| Fail::new(XbwtStatus::InvalidArgument, format!("unknown transform id {id}")))
}

unsafe fn alphabet(ord: *const XbwtAlphabet) -> AlphabetOrder {
    if ord.is_null() {
        AlphabetOrder::identity()
    } else {
        (*ord).0.clone()
    }
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail::new(XbwtStatus::InvalidInput, e.to_string())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn xbwt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Description of the last failure on this thread, empty after a success.
/// The pointer stays valid until the next call into the library on this
/// thread.
#[no_mangle]
pub extern "C" fn xbwt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// The identity order on byte values.
#[no_mangle]
pub extern "C" fn xbwt_alphabet_identity() -> *mut XbwtAlphabet {
    Box::into_raw(Box::new(XbwtAlphabet(AlphabetOrder::identity())))
}

/// Builds an order from the 256 byte values listed smallest first.
///
/// # Safety
/// `sequence` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xbwt_alphabet_from_sequence(
    sequence: *const u8,
    len: usize,
    out: *mut *mut XbwtAlphabet,
) -> XbwtStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::new(XbwtStatus::NullPointer, "out is null"));
        }
        let seq = input(sequence, len, "sequence")?;
        let ord =
            AlphabetOrder::from_sequence(seq).map_err(|e| Fail::new(XbwtStatus::InvalidArgument, e.to_string()))?;
        *out = Box::into_raw(Box::new(XbwtAlphabet(ord)));
        Ok(())
    })
}

/// # Safety
/// `ord` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xbwt_alphabet_free(ord: *mut XbwtAlphabet) {
    if !ord.is_null() {
        drop(Box::from_raw(ord));
    }
}

/// Applies a transform to `data`, writing `len` bytes to `out`.
///
/// `k` is the context order for ST and LST and must be 0 otherwise. For BWT
/// and ST the 1-based row index is stored in `*index_out`, which must then be
/// non-null; for BWTS and LST `index_out` may be null and receives 0. BWT and
/// ST reject empty input. A null `ord` means the identity order.
///
/// # Safety
/// `data` must point to `len` readable bytes, `out` to `out_cap` writable
/// bytes, and `ord` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn xbwt_forward(
    transform_id: u32,
    k: usize,
    ord: *const XbwtAlphabet,
    data: *const u8,
    len: usize,
    out: *mut u8,
    out_cap: usize,
    index_out: *mut usize,
) -> XbwtStatus {
    guard(|| {
        let t = transform(transform_id)?;
        if !t.takes_order() && k != 0 {
            return Err(Fail::new(XbwtStatus::InvalidArgument, format!("{t} takes no order")));
        }
        if t.is_indexed() && index_out.is_null() {
            return Err(Fail::new(XbwtStatus::NullPointer, "index_out is null"));
        }
        let w = input(data, len, "data")?;
        let dst = output(out, out_cap, len)?;
        let ord = alphabet(ord);
        let (l, index) = match t {
            Transform::Bwt => bwt_forward(w, &ord).map(|r| (r.last_column, r.index)).map_err(invalid)?,
            Transform::St => st_forward(w, k, &ord).map(|r| (r.last_column, r.index)).map_err(invalid)?,
            Transform::Bwts => (bwts_forward(w, &ord), 0),
            Transform::Lst => (lst_forward(w, k, &ord), 0),
        };
        dst.copy_from_slice(&l);
        if !index_out.is_null() {
            *index_out = index;
        }
        Ok(())
    })
}

/// Inverts a transform, writing `len` bytes to `out`. `index` is the 1-based
/// row index for BWT and ST and is ignored otherwise.
///
/// # Safety
/// As for [`xbwt_forward`].
#[no_mangle]
pub unsafe extern "C" fn xbwt_inverse(
    transform_id: u32,
    k: usize,
    ord: *const XbwtAlphabet,
    data: *const u8,
    len: usize,
    index: usize,
    out: *mut u8,
    out_cap: usize,
) -> XbwtStatus {
    guard(|| {
        let t = transform(transform_id)?;
        if !t.takes_order() && k != 0 {
            return Err(Fail::new(XbwtStatus::InvalidArgument, format!("{t} takes no order")));
        }
        let l = input(data, len, "data")?;
        let dst = output(out, out_cap, len)?;
        let ord = alphabet(ord);
        let w = match t {
            Transform::Bwt => bwt_inverse(&IndexedTransform::new(l, index), &ord).map_err(invalid)?,
            Transform::St => st_inverse(&IndexedTransform::new(l, index), k, &ord).map_err(invalid)?,
            Transform::Bwts => bwts_inverse(l, &ord),
            Transform::Lst => lst_inverse(l, k, &ord),
        };
        dst.copy_from_slice(&w);
        Ok(())
    })
}

/// Encodes `data` into a container. `block_size` 0 selects the default.
///
/// # Safety
/// `data` must point to `len` readable bytes, `ord` must be null or a live
/// handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xbwt_encode(
    transform_id: u32,
    k: usize,
    block_size: usize,
    ord: *const XbwtAlphabet,
    data: *const u8,
    len: usize,
    out: *mut *mut XbwtBuffer,
) -> XbwtStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::new(XbwtStatus::NullPointer, "out is null"));
        }
        let mut opts = EncodeOptions::new(transform(transform_id)?).with_order(k).with_alphabet(alphabet(ord));
        if block_size != 0 {
            opts = opts.with_block_size(block_size);
        }
        opts.validate().map_err(|e| Fail::new(XbwtStatus::InvalidArgument, e.to_string()))?;
        let bytes = encode_bytes(input(data, len, "data")?, &opts)
            .map_err(|e| Fail::new(XbwtStatus::ContainerError, e.to_string()))?;
        *out = Box::into_raw(Box::new(XbwtBuffer(bytes)));
        Ok(())
    })
}

/// Decodes a container.
///
/// # Safety
/// `data` must point to `len` readable bytes and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xbwt_decode(data: *const u8, len: usize, out: *mut *mut XbwtBuffer) -> XbwtStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::new(XbwtStatus::NullPointer, "out is null"));
        }
        let bytes = decode_bytes(input(data, len, "data")?)
            .map_err(|e| Fail::new(XbwtStatus::ContainerError, e.to_string()))?;
        *out = Box::into_raw(Box::new(XbwtBuffer(bytes)));
        Ok(())
    })
}

/// # Safety
/// `buf` must be a live buffer handle.
#[no_mangle]
pub unsafe extern "C" fn xbwt_buffer_data(buf: *const XbwtBuffer) -> *const u8 {
    if buf.is_null() {
        ptr::null()
    } else {
        (*buf).0.as_ptr()
    }
}

/// # Safety
/// `buf` must be null or a live buffer handle.
#[no_mangle]
pub unsafe extern "C" fn xbwt_buffer_len(buf: *const XbwtBuffer) -> usize {
    if buf.is_null() {
        0
    } else {
        (*buf).0.len()
    }
}

/// # Safety
/// `buf` must be null or a buffer handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xbwt_buffer_free(buf: *mut XbwtBuffer) {
    if !buf.is_null() {
        drop(Box::from_raw(buf));
    }
}

/// Runs the built-in fixtures; stores the number of failures in `*failed`.
///
/// # Safety
/// `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xbwt_selftest(failed: *mut usize) -> XbwtStatus {
    guard(|| {
        if failed.is_null() {
            return Err(Fail::new(XbwtStatus::NullPointer, "failed is null"));
        }
        *failed = run_selftest().failures().count();
        Ok(())
    })
}
