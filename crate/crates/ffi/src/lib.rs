//! C ABI for the `noma-secrecy` library.
//!
//! Handles are opaque heap pointers created by `ns_*_new`-style constructors
//! and released by the matching `ns_*_free`; every other function borrows
//! them. All functions return an [`NsStatus`]; on any failure a thread-local
//! message describing the problem is retrievable with
//! [`ns_last_error_message`].
//!
//! String and array outputs follow a query convention: pass a null buffer
//! (or too small a capacity) to receive `BufferTooSmall` along with the
//! required size, then call again with enough room.

use std::cell::RefCell;
use std::ffi::CStr;
use std::os::raw::c_char;

use noma_secrecy::optim::{
    joint_optimize, optimize_pa, OptimizerSettings, DEFAULT_BOUNDARY_MARGIN, DEFAULT_GRID_STEP,
    DEFAULT_REFINEMENT_ITERATIONS, DEFAULT_REFINEMENT_TOLERANCE,
};
use noma_secrecy::order::{secure_orders, DecodingOrder};
use noma_secrecy::secrecy::secrecy_report;
use noma_secrecy::{ChannelState, Error, PowerAllocation, SystemConfig};

/// Result of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument violated a documented precondition.
    InvalidArgument = 2,
    /// The request exceeded an enumeration capacity limit.
    CapacityExceeded = 3,
    /// An output buffer was missing or too small; the required size has
    /// been written to the size output.
    BufferTooSmall = 4,
    /// A string argument was not valid UTF-8.
    Utf8Error = 5,
}

/// Opaque system configuration handle.
pub struct NsSystemConfig(SystemConfig);

/// Opaque channel state handle.
pub struct NsChannelState(ChannelState);

/// Opaque decoding order handle.
pub struct NsDecodingOrder(DecodingOrder);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_last_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn fail(err: Error) -> NsStatus {
    let status = match err {
        Error::Capacity(_) => NsStatus::CapacityExceeded,
        Error::Domain(_) | Error::Io(_) => NsStatus::InvalidArgument,
    };
    set_last_error(err.to_string());
    status
}

fn null_pointer(what: &str) -> NsStatus {
    set_last_error(format!("{what} must not be null"));
    NsStatus::NullPointer
}

/// Copies `text` (plus a NUL terminator) into `buffer`. On insufficient
/// room, reports the required byte count through `needed`.
unsafe fn write_c_string(
    text: &str,
    buffer: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> NsStatus {
    let required = text.len() + 1;
    if !needed.is_null() {
        *needed = required;
    }
    if buffer.is_null() || capacity < required {
        set_last_error(format!("buffer of {required} bytes required"));
        return NsStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buffer, text.len());
    *buffer.add(text.len()) = 0;
    NsStatus::Ok
}

/// Interprets optimizer scalars, treating non-positive steps, margins, and
/// tolerances — and a negative iteration count — as "use the default".
fn settings_from(
    grid_step: f64,
    boundary_margin: f64,
    refinement_iterations: i64,
    refinement_tolerance: f64,
) -> Result<OptimizerSettings, Error> {
    let step = if grid_step > 0.0 { grid_step } else { DEFAULT_GRID_STEP };
    let margin = if boundary_margin > 0.0 {
        boundary_margin
    } else {
        DEFAULT_BOUNDARY_MARGIN
    };
    let iterations = if refinement_iterations < 0 {
        DEFAULT_REFINEMENT_ITERATIONS
    } else {
        refinement_iterations as usize
    };
    let tolerance = if refinement_tolerance > 0.0 {
        refinement_tolerance
    } else {
        DEFAULT_REFINEMENT_TOLERANCE
    };
    OptimizerSettings::new(step, margin, iterations, tolerance)
}

/// Retrieves the message of the most recent failure on this thread.
///
/// # Safety
/// `buffer` must point to `capacity` writable bytes (or be null to query
/// the required size through `needed`).
#[no_mangle]
pub unsafe extern "C" fn ns_last_error_message(
    buffer: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> NsStatus {
    let message = LAST_ERROR.with(|slot| slot.borrow().clone());
    let required = message.len() + 1;
    if !needed.is_null() {
        *needed = required;
    }
    if buffer.is_null() || capacity < required {
        return NsStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(message.as_ptr().cast::<c_char>(), buffer, message.len());
    *buffer.add(message.len()) = 0;
    NsStatus::Ok
}

/// Creates a system configuration with default noise power, path loss, and
/// residual SIC factor.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle that must
/// be released with [`ns_system_config_free`].
#[no_mangle]
pub unsafe extern "C" fn ns_system_config_new(
    user_count: usize,
    transmit_power_dbm: f64,
    out: *mut *mut NsSystemConfig,
) -> NsStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    match SystemConfig::new(user_count, transmit_power_dbm) {
        Ok(config) => {
            *out = Box::into_raw(Box::new(NsSystemConfig(config)));
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Creates a fully specified system configuration.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle that must
/// be released with [`ns_system_config_free`].
#[no_mangle]
pub unsafe extern "C" fn ns_system_config_with(
    user_count: usize,
    transmit_power_dbm: f64,
    noise_power_dbm: f64,
    path_loss_constant: f64,
    path_loss_exponent: f64,
    residual_sic_factor: f64,
    out: *mut *mut NsSystemConfig,
) -> NsStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    let config = SystemConfig::new(user_count, transmit_power_dbm)
        .and_then(|config| config.with_noise_power_dbm(noise_power_dbm))
        .and_then(|config| config.with_path_loss(path_loss_constant, path_loss_exponent))
        .and_then(|config| config.with_residual_sic_factor(residual_sic_factor));
    match config {
        Ok(config) => {
            *out = Box::into_raw(Box::new(NsSystemConfig(config)));
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Releases a configuration handle. Null is ignored.
///
/// # Safety
/// `config` must be null or a handle from a `ns_system_config_*` constructor
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ns_system_config_free(config: *mut NsSystemConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// Creates a channel state from `user_count` strictly descending positive
/// gains.
///
/// # Safety
/// `gains` must point to `user_count` readable doubles; `out` must be a
/// valid pointer and on success receives a handle to release with
/// [`ns_channel_state_free`].
#[no_mangle]
pub unsafe extern "C" fn ns_channel_state_new(
    gains: *const f64,
    user_count: usize,
    out: *mut *mut NsChannelState,
) -> NsStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    if gains.is_null() {
        return null_pointer("gains");
    }
    let gains = std::slice::from_raw_parts(gains, user_count).to_vec();
    match ChannelState::from_gains(gains) {
        Ok(channel) => {
            *out = Box::into_raw(Box::new(NsChannelState(channel)));
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Releases a channel handle. Null is ignored.
///
/// # Safety
/// `channel` must be null or an unfreed handle from
/// [`ns_channel_state_new`].
#[no_mangle]
pub unsafe extern "C" fn ns_channel_state_free(channel: *mut NsChannelState) {
    if !channel.is_null() {
        drop(Box::from_raw(channel));
    }
}

/// Creates a decoding order from its canonical index (1-based, up to
/// `(K!)^K`).
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle to
/// release with [`ns_order_free`].
#[no_mangle]
pub unsafe extern "C" fn ns_order_from_index(
    user_count: usize,
    index: u64,
    out: *mut *mut NsDecodingOrder,
) -> NsStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    match DecodingOrder::from_index(user_count, index) {
        Ok(order) => {
            *out = Box::into_raw(Box::new(NsDecodingOrder(order)));
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Parses a decoding order from its textual form, e.g.
/// `"2,3,1;1,3,2;1,2,3"` (columns separated by `;`, stages by `,`,
/// users numbered from 1).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer
/// and on success receives a handle to release with [`ns_order_free`].
#[no_mangle]
pub unsafe extern "C" fn ns_order_parse(
    text: *const c_char,
    out: *mut *mut NsDecodingOrder,
) -> NsStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    if text.is_null() {
        return null_pointer("text");
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        set_last_error("order text is not valid UTF-8");
        return NsStatus::Utf8Error;
    };
    match text.parse::<DecodingOrder>() {
        Ok(order) => {
            *out = Box::into_raw(Box::new(NsDecodingOrder(order)));
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Releases an order handle. Null is ignored.
///
/// # Safety
/// `order` must be null or an unfreed handle from an `ns_order_*`
/// constructor.
#[no_mangle]
pub unsafe extern "C" fn ns_order_free(order: *mut NsDecodingOrder) {
    if !order.is_null() {
        drop(Box::from_raw(order));
    }
}

/// Reads an order's canonical index.
///
/// # Safety
/// `order` must be a live order handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_order_index(order: *const NsDecodingOrder, out: *mut u64) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    if out.is_null() {
        return null_pointer("out");
    }
    *out = (*order).0.index();
    NsStatus::Ok
}

/// Reads the number of users an order covers.
///
/// # Safety
/// `order` must be a live order handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_order_user_count(
    order: *const NsDecodingOrder,
    out: *mut usize,
) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    if out.is_null() {
        return null_pointer("out");
    }
    *out = (*order).0.user_count();
    NsStatus::Ok
}

/// Tells whether an order can keep every user's message secret.
///
/// # Safety
/// `order` must be a live order handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_order_is_secure(
    order: *const NsDecodingOrder,
    out: *mut bool,
) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    if out.is_null() {
        return null_pointer("out");
    }
    *out = (*order).0.is_secure();
    NsStatus::Ok
}

/// Renders an order's textual form into `buffer`.
///
/// # Safety
/// `order` must be a live order handle; `buffer` must point to `capacity`
/// writable bytes (or be null to query the required size through `needed`).
#[no_mangle]
pub unsafe extern "C" fn ns_order_format(
    order: *const NsDecodingOrder,
    buffer: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    write_c_string(&(*order).0.to_string(), buffer, capacity, needed)
}

/// Writes the canonical indices of every secure decoding order, in
/// ascending order, into `buffer`. `count` always receives the total; call
/// with a null buffer first to size the allocation.
///
/// # Safety
/// `buffer` must be null or point to `capacity` writable u64 slots;
/// `count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_secure_order_indices(
    user_count: usize,
    buffer: *mut u64,
    capacity: usize,
    count: *mut usize,
) -> NsStatus {
    if count.is_null() {
        return null_pointer("count");
    }
    let secure = match secure_orders(user_count) {
        Ok(secure) => secure,
        Err(err) => return fail(err),
    };
    *count = secure.len();
    if buffer.is_null() || capacity < secure.len() {
        set_last_error(format!("buffer of {} entries required", secure.len()));
        return NsStatus::BufferTooSmall;
    }
    for (slot, order) in (0..secure.len()).zip(&secure) {
        *buffer.add(slot) = order.index();
    }
    NsStatus::Ok
}

/// Evaluates per-user secrecy rates. Each non-null output array receives
/// one entry per user; `sum_secrecy_rate` receives the clamped total.
///
/// # Safety
/// `order`, `channel`, and `config` must be live handles; `alphas` must
/// point to `alpha_count` readable doubles; each non-null output array must
/// have room for the configured number of users.
#[no_mangle]
pub unsafe extern "C" fn ns_secrecy_report(
    order: *const NsDecodingOrder,
    channel: *const NsChannelState,
    config: *const NsSystemConfig,
    alphas: *const f64,
    alpha_count: usize,
    self_rates: *mut f64,
    eavesdropper_rates: *mut f64,
    secrecy_rates: *mut f64,
    sum_secrecy_rate: *mut f64,
) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    if channel.is_null() {
        return null_pointer("channel");
    }
    if config.is_null() {
        return null_pointer("config");
    }
    if alphas.is_null() {
        return null_pointer("alphas");
    }
    let fractions = std::slice::from_raw_parts(alphas, alpha_count).to_vec();
    let pa = match PowerAllocation::new(fractions) {
        Ok(pa) => pa,
        Err(err) => return fail(err),
    };
    let report = match secrecy_report(&(*order).0, &(*channel).0, &pa, &(*config).0) {
        Ok(report) => report,
        Err(err) => return fail(err),
    };
    let users = (*config).0.user_count();
    if !self_rates.is_null() {
        std::ptr::copy_nonoverlapping(report.self_rates().as_ptr(), self_rates, users);
    }
    if !eavesdropper_rates.is_null() {
        std::ptr::copy_nonoverlapping(
            report.eavesdropper_rates().as_ptr(),
            eavesdropper_rates,
            users,
        );
    }
    if !secrecy_rates.is_null() {
        std::ptr::copy_nonoverlapping(report.secrecy_rates().as_ptr(), secrecy_rates, users);
    }
    if !sum_secrecy_rate.is_null() {
        *sum_secrecy_rate = report.sum_secrecy_rate();
    }
    NsStatus::Ok
}

/// Maximizes one order's sum secrecy rate over the power allocation.
/// Non-positive `grid_step`, `boundary_margin`, or `refinement_tolerance`
/// and a negative `refinement_iterations` select the defaults. `alphas_out`,
/// when non-null, receives one fraction per user.
///
/// # Safety
/// `order`, `channel`, and `config` must be live handles; `alphas_out` must
/// be null or have room for the configured number of users; `sum_out` must
/// be null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_optimize_pa(
    order: *const NsDecodingOrder,
    channel: *const NsChannelState,
    config: *const NsSystemConfig,
    grid_step: f64,
    boundary_margin: f64,
    refinement_iterations: i64,
    refinement_tolerance: f64,
    alphas_out: *mut f64,
    sum_out: *mut f64,
) -> NsStatus {
    if order.is_null() {
        return null_pointer("order");
    }
    if channel.is_null() {
        return null_pointer("channel");
    }
    if config.is_null() {
        return null_pointer("config");
    }
    let settings = match settings_from(
        grid_step,
        boundary_margin,
        refinement_iterations,
        refinement_tolerance,
    ) {
        Ok(settings) => settings,
        Err(err) => return fail(err),
    };
    match optimize_pa(&(*order).0, &(*channel).0, &(*config).0, &settings) {
        Ok(result) => {
            if !alphas_out.is_null() {
                let alphas = result.allocation().alphas();
                std::ptr::copy_nonoverlapping(alphas.as_ptr(), alphas_out, alphas.len());
            }
            if !sum_out.is_null() {
                *sum_out = result.sum_secrecy_rate();
            }
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Optimizes order and allocation jointly. `order_indices` selects the
/// candidate orders; pass null (or zero count) to search every secure
/// order. Settings scalars follow the [`ns_optimize_pa`] conventions.
///
/// # Safety
/// `channel` and `config` must be live handles; `order_indices` must be
/// null or point to `order_count` readable u64 values; `best_index_out` and
/// `sum_out` must be null or valid pointers; `alphas_out` must be null or
/// have room for the configured number of users.
#[no_mangle]
pub unsafe extern "C" fn ns_joint_optimize(
    channel: *const NsChannelState,
    config: *const NsSystemConfig,
    order_indices: *const u64,
    order_count: usize,
    grid_step: f64,
    boundary_margin: f64,
    refinement_iterations: i64,
    refinement_tolerance: f64,
    best_index_out: *mut u64,
    alphas_out: *mut f64,
    sum_out: *mut f64,
) -> NsStatus {
    if channel.is_null() {
        return null_pointer("channel");
    }
    if config.is_null() {
        return null_pointer("config");
    }
    let users = (*config).0.user_count();
    let orders = if order_indices.is_null() || order_count == 0 {
        match secure_orders(users) {
            Ok(orders) => orders,
            Err(err) => return fail(err),
        }
    } else {
        let indices = std::slice::from_raw_parts(order_indices, order_count);
        let mut orders = Vec::with_capacity(order_count);
        for &index in indices {
            match DecodingOrder::from_index(users, index) {
                Ok(order) => orders.push(order),
                Err(err) => return fail(err),
            }
        }
        orders
    };
    let settings = match settings_from(
        grid_step,
        boundary_margin,
        refinement_iterations,
        refinement_tolerance,
    ) {
        Ok(settings) => settings,
        Err(err) => return fail(err),
    };
    match joint_optimize(&(*channel).0, &(*config).0, &settings, &orders) {
        Ok(result) => {
            if !best_index_out.is_null() {
                *best_index_out = result.order().index();
            }
            if !alphas_out.is_null() {
                let alphas = result.allocation().alphas();
                std::ptr::copy_nonoverlapping(alphas.as_ptr(), alphas_out, alphas.len());
            }
            if !sum_out.is_null() {
                *sum_out = result.sum_secrecy_rate();
            }
            NsStatus::Ok
        }
        Err(err) => fail(err),
    }
}
