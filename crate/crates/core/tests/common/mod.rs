//! Helpers shared by the integration suites.

#![allow(dead_code)]

use noma_secrecy::DecodingOrder;

/// Users whose predecessor set matches some stronger observer's view — a
/// straight-line reading of the secrecy condition from the decoding-order
/// columns, deliberately independent of the production filter.
///
/// User `n`'s message leaks to a stronger observer `m` (smaller index, since
/// users are labeled strongest-first) whenever the set of signals removed
/// before `n`'s own decoding stage equals the set removed before `m`
/// decodes `n`: the observer then sees `n`'s signal at least as cleanly as
/// `n` itself does.
pub fn predecessor_violators(order: &DecodingOrder) -> Vec<usize> {
    let users = order.user_count();
    let before_set = |observer: usize, target: usize| -> Vec<usize> {
        let column = order.columns()[observer].entries();
        let stage = column
            .iter()
            .position(|&user| user == target)
            .expect("every column decodes every user");
        let mut before = column[..stage].to_vec();
        before.sort_unstable();
        before
    };
    let mut violators = Vec::new();
    for target in 0..users {
        let own = before_set(target, target);
        if (0..target).any(|observer| before_set(observer, target) == own) {
            violators.push(target);
        }
    }
    violators
}

/// Whether an order is secure per [`predecessor_violators`].
pub fn independently_secure(order: &DecodingOrder) -> bool {
    predecessor_violators(order).is_empty()
}
