//! SIC decoding orders and the secure-order predicate.
//!
//! Every user runs successive interference cancellation (SIC) over the full
//! superposed signal, so each user owns a decoding *column*: a permutation
//! listing whose signal it decodes at each stage. A [`DecodingOrder`] is one
//! column per user, and the whole space of `(K!)^K` orders is addressed by a
//! canonical 1-based index so that results can name an order compactly.
//!
//! The secure-order predicate keeps only those orders under which every user
//! can enjoy a positive secrecy rate against every stronger user: for each
//! target user, the set of signals cancelled before the target's own signal
//! at its own receiver must differ from the corresponding set at every
//! stronger receiver. Otherwise, the stronger receiver sees the same
//! interference structure with a better channel and always out-decodes the
//! target.
//!
//! # Example
//!
//! ```
//! use noma_secrecy::order::{enumerate_orders, secure_orders, suboptimal_order};
//!
//! let all = enumerate_orders(3).unwrap();
//! let secure = secure_orders(3).unwrap();
//! assert_eq!(all.len(), 216);
//! assert_eq!(secure.len(), 76);
//!
//! // The order in which every user decodes the others in ascending label
//! // order and itself last is always part of the secure set.
//! let order = suboptimal_order(3).unwrap();
//! assert_eq!(order.index(), 10);
//! assert!(order.is_secure());
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of users for order enumeration and indexing.
pub const MAX_USERS: usize = 5;

/// Default cap on how many decoding orders an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 20_000;

fn factorial(k: usize) -> u64 {
    debug_assert!(k <= 20, "factorial overflows u64 beyond 20");
    (1..=k as u64).product()
}

/// One user's SIC schedule: a permutation of the user indices `0..K`, listed
/// in decoding order (entry 0 is decoded first).
///
/// Entries are 0-based in the API; the text form rendered by `Display` and
/// accepted by `FromStr` is 1-based, matching how users are usually labeled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` is a bijection on `0..entries.len()`.
    ///
    /// At most [`MAX_USERS`] entries are supported because permutations feed
    /// the decoding-order index arithmetic, which is sized for that bound.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("permutation needs at least one entry"));
        }
        if entries.len() > MAX_USERS {
            return Err(Error::capacity(format!(
                "permutations support at most {MAX_USERS} entries, got {}",
                entries.len()
            )));
        }
        let mut seen = [false; MAX_USERS];
        for &entry in &entries {
            if entry >= entries.len() {
                return Err(Error::domain(format!(
                    "permutation entry {entry} out of range for length {}",
                    entries.len()
                )));
            }
            if seen[entry] {
                return Err(Error::domain(format!(
                    "permutation repeats entry {entry}"
                )));
            }
            seen[entry] = true;
        }
        Ok(Permutation { entries })
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: permutations have at least one entry.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The schedule as a slice of 0-based user indices.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Stage at which `user` appears (0 = decoded first).
    pub fn position_of(&self, user: usize) -> Result<usize> {
        self.entries
            .iter()
            .position(|&entry| entry == user)
            .ok_or_else(|| {
                Error::domain(format!(
                    "user index {user} out of range for {} users",
                    self.entries.len()
                ))
            })
    }

    /// 0-based position of this permutation in the lexicographic listing of
    /// all permutations of the same length.
    pub fn lexicographic_rank(&self) -> u64 {
        let k = self.entries.len();
        let mut rank = 0u64;
        for (i, &entry) in self.entries.iter().enumerate() {
            let smaller_later = self.entries[i + 1..]
                .iter()
                .filter(|&&later| later < entry)
                .count() as u64;
            rank += smaller_later * factorial(k - 1 - i);
        }
        rank
    }

    /// Inverse of [`Permutation::lexicographic_rank`]: builds the
    /// permutation of length `k` at the given rank.
    pub fn from_lexicographic_rank(k: usize, rank: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("permutation needs at least one entry"));
        }
        if k > MAX_USERS {
            return Err(Error::capacity(format!(
                "permutations support at most {MAX_USERS} entries, got {k}"
            )));
        }
        if rank >= factorial(k) {
            return Err(Error::domain(format!(
                "rank {rank} out of range for permutations of length {k}"
            )));
        }
        let mut remaining: Vec<usize> = (0..k).collect();
        let mut entries = Vec::with_capacity(k);
        let mut rest = rank;
        for i in 0..k {
            let weight = factorial(k - 1 - i);
            let digit = (rest / weight) as usize;
            rest %= weight;
            entries.push(remaining.remove(digit));
        }
        Ok(Permutation { entries })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &entry) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", entry + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let label: usize = token.parse().map_err(|_| {
                Error::domain(format!("cannot parse {token:?} as a 1-based user label"))
            })?;
            if label == 0 {
                return Err(Error::domain("user labels are 1-based; got 0"));
            }
            entries.push(label - 1);
        }
        Permutation::new(entries)
    }
}

/// All permutations of length `k`, in lexicographic order.
pub fn permutations(k: usize) -> Result<Vec<Permutation>> {
    if k == 0 {
        return Err(Error::domain("permutation length must be at least 1"));
    }
    if k > MAX_USERS {
        return Err(Error::capacity(format!(
            "permutations support at most {MAX_USERS} entries, got {k}"
        )));
    }
    (0..factorial(k))
        .map(|rank| Permutation::from_lexicographic_rank(k, rank))
        .collect()
}

/// A complete SIC schedule for the system: one decoding column per user.
///
/// Column `m` is the schedule run by user `m`'s receiver. Each order carries
/// its canonical 1-based index in the full `(K!)^K` space: index 1 holds the
/// identity column at every user, and the column of user 0 varies fastest as
/// the index increases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecodingOrder {
    columns: Vec<Permutation>,
    index: u64,
}

impl DecodingOrder {
    /// Builds an order from one column per user, deriving its index.
    ///
    /// Requires as many columns as users and every column to cover exactly
    /// the user set.
    pub fn from_columns(columns: Vec<Permutation>) -> Result<Self> {
        let user_count = columns.len();
        if user_count == 0 {
            return Err(Error::domain("decoding order needs at least one column"));
        }
        for (observer, column) in columns.iter().enumerate() {
            if column.len() != user_count {
                return Err(Error::domain(format!(
                    "column for user {} has {} entries, expected {user_count}",
                    observer + 1,
                    column.len()
                )));
            }
        }
        let base = factorial(user_count);
        let mut index = 0u64;
        for column in columns.iter().rev() {
            index = index * base + column.lexicographic_rank();
        }
        Ok(DecodingOrder {
            columns,
            index: index + 1,
        })
    }

    /// Decodes a canonical 1-based index back into the full order.
    pub fn from_index(user_count: usize, index: u64) -> Result<Self> {
        if user_count == 0 {
            return Err(Error::domain("decoding order needs at least one column"));
        }
        if user_count > MAX_USERS {
            return Err(Error::capacity(format!(
                "decoding orders support at most {MAX_USERS} users, got {user_count}"
            )));
        }
        let total = total_order_count(user_count)?;
        if index == 0 || index > total {
            return Err(Error::domain(format!(
                "order index {index} out of range 1..={total} for {user_count} users"
            )));
        }
        let base = factorial(user_count);
        let mut rest = index - 1;
        let mut columns = Vec::with_capacity(user_count);
        for _ in 0..user_count {
            columns.push(Permutation::from_lexicographic_rank(
                user_count,
                rest % base,
            )?);
            rest /= base;
        }
        Ok(DecodingOrder { columns, index })
    }

    /// Canonical 1-based index of this order.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// Number of users.
    pub fn user_count(&self) -> usize {
        self.columns.len()
    }

    /// All decoding columns, indexed by observing user.
    pub fn columns(&self) -> &[Permutation] {
        &self.columns
    }

    /// Decoding column run at `observer`'s receiver.
    pub fn column(&self, observer: usize) -> Result<&Permutation> {
        self.columns.get(observer).ok_or_else(|| {
            Error::domain(format!(
                "user index {observer} out of range for {} users",
                self.columns.len()
            ))
        })
    }

    /// Splits `observer`'s column around `target`: the users decoded before
    /// `target` and the users decoded after it, each sorted ascending.
    ///
    /// The before-set is what SIC has already cancelled (imperfectly) when
    /// `observer` decodes `target`'s signal; the after-set is still untouched
    /// interference.
    pub fn predecessor_sets(
        &self,
        observer: usize,
        target: usize,
    ) -> Result<(Vec<usize>, Vec<usize>)> {
        let column = self.column(observer)?;
        let stage = column.position_of(target)?;
        let mut before = column.entries()[..stage].to_vec();
        let mut after = column.entries()[stage + 1..].to_vec();
        before.sort_unstable();
        after.sort_unstable();
        Ok((before, after))
    }

    fn before_mask(&self, observer: usize, target: usize) -> u32 {
        let mut mask = 0u32;
        for &entry in self.columns[observer].entries() {
            if entry == target {
                return mask;
            }
            mask |= 1 << entry;
        }
        debug_assert!(false, "columns cover every user");
        mask
    }

    /// Whether every user can achieve a positive secrecy rate against every
    /// stronger user under this order.
    ///
    /// The test compares before-sets: for each target user `n` and each
    /// stronger user `m` (lower index, better channel), the set of signals
    /// cancelled before `n`'s own signal at `n`'s receiver must differ from
    /// the set cancelled before `n`'s signal at `m`'s receiver. When the two
    /// sets coincide, both receivers face identical interference fractions
    /// and the stronger channel always wins, pinning `n`'s secrecy rate
    /// against `m` at zero.
    pub fn is_secure(&self) -> bool {
        let user_count = self.columns.len();
        for target in 0..user_count {
            let own = self.before_mask(target, target);
            for observer in 0..target {
                if self.before_mask(observer, target) == own {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for DecodingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, column) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{column}")?;
        }
        Ok(())
    }
}

impl FromStr for DecodingOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let columns = s
            .split(';')
            .map(|column| column.trim().parse())
            .collect::<Result<Vec<Permutation>>>()?;
        DecodingOrder::from_columns(columns)
    }
}

/// Size of the full decoding-order space, `(K!)^K`.
pub fn total_order_count(user_count: usize) -> Result<u64> {
    if user_count == 0 {
        return Err(Error::domain("decoding order needs at least one column"));
    }
    if user_count > MAX_USERS {
        return Err(Error::capacity(format!(
            "decoding orders support at most {MAX_USERS} users, got {user_count}"
        )));
    }
    Ok(factorial(user_count).pow(user_count as u32))
}

/// Every decoding order for `user_count` users, in index order, subject to
/// the default enumeration cap of [`DEFAULT_ENUMERATION_CAP`] orders.
pub fn enumerate_orders(user_count: usize) -> Result<Vec<DecodingOrder>> {
    enumerate_orders_capped(user_count, DEFAULT_ENUMERATION_CAP)
}

/// Every decoding order for `user_count` users, in index order, refusing to
/// materialize more than `cap` orders.
pub fn enumerate_orders_capped(user_count: usize, cap: u64) -> Result<Vec<DecodingOrder>> {
    let total = total_order_count(user_count)?;
    if total > cap {
        return Err(Error::capacity(format!(
            "{user_count} users give {total} decoding orders, above the cap of {cap}"
        )));
    }
    let base = factorial(user_count);
    let perms = permutations(user_count)?;
    let mut orders = Vec::with_capacity(total as usize);
    for index in 1..=total {
        let mut rest = index - 1;
        let mut columns = Vec::with_capacity(user_count);
        for _ in 0..user_count {
            columns.push(perms[(rest % base) as usize].clone());
            rest /= base;
        }
        orders.push(DecodingOrder { columns, index });
    }
    Ok(orders)
}

/// The secure decoding orders for `user_count` users, in index order,
/// subject to the default enumeration cap on the full space.
pub fn secure_orders(user_count: usize) -> Result<Vec<DecodingOrder>> {
    secure_orders_capped(user_count, DEFAULT_ENUMERATION_CAP)
}

/// The secure decoding orders for `user_count` users, in index order,
/// refusing to scan a space larger than `cap` orders.
pub fn secure_orders_capped(user_count: usize, cap: u64) -> Result<Vec<DecodingOrder>> {
    let mut orders = enumerate_orders_capped(user_count, cap)?;
    orders.retain(DecodingOrder::is_secure);
    Ok(orders)
}

/// The decode-others-first order: every user decodes the other users in
/// ascending label order and its own signal last.
///
/// This order is always secure — each user's own before-set is the full
/// complement, while any stronger observer has already decoded its target
/// mid-schedule — and it maximizes the interference already cancelled when a
/// user reaches its own signal.
pub fn suboptimal_order(user_count: usize) -> Result<DecodingOrder> {
    if user_count < 2 {
        return Err(Error::domain(format!(
            "the decode-others-first order needs at least 2 users, got {user_count}"
        )));
    }
    if user_count > MAX_USERS {
        return Err(Error::capacity(format!(
            "decoding orders support at most {MAX_USERS} users, got {user_count}"
        )));
    }
    let columns = (0..user_count)
        .map(|observer| {
            let mut entries: Vec<usize> =
                (0..user_count).filter(|&user| user != observer).collect();
            entries.push(observer);
            Permutation::new(entries)
        })
        .collect::<Result<Vec<_>>>()?;
    DecodingOrder::from_columns(columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_from_labels(columns: &[&[usize]]) -> DecodingOrder {
        let columns = columns
            .iter()
            .map(|labels| {
                Permutation::new(labels.iter().map(|&label| label - 1).collect()).unwrap()
            })
            .collect();
        DecodingOrder::from_columns(columns).unwrap()
    }

    #[test]
    fn permutations_of_three_are_lexicographic() {
        let perms = permutations(3).unwrap();
        let listed: Vec<Vec<usize>> = perms.iter().map(|p| p.entries().to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ]
        );
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert!(matches!(
            Permutation::new((0..6).collect()),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(permutations(6), Err(Error::Capacity(_))));
        assert!(permutations(0).is_err());
    }

    #[test]
    fn lexicographic_rank_round_trips_for_five_users() {
        for rank in 0..120 {
            let perm = Permutation::from_lexicographic_rank(5, rank).unwrap();
            assert_eq!(perm.lexicographic_rank(), rank);
        }
        assert!(Permutation::from_lexicographic_rank(3, 6).is_err());
    }

    #[test]
    fn index_identities_for_three_users() {
        // Index 216: everyone decodes weakest-to-strongest.
        let conventional = DecodingOrder::from_index(3, 216).unwrap();
        assert_eq!(
            conventional,
            order_from_labels(&[&[3, 2, 1], &[3, 2, 1], &[3, 2, 1]])
        );
        // Index 10: decode-others-first.
        let ten = DecodingOrder::from_index(3, 10).unwrap();
        assert_eq!(ten, order_from_labels(&[&[2, 3, 1], &[1, 3, 2], &[1, 2, 3]]));
        // Index 100 mixes stages across users.
        let hundred = DecodingOrder::from_index(3, 100).unwrap();
        assert_eq!(
            hundred,
            order_from_labels(&[&[2, 3, 1], &[3, 1, 2], &[2, 1, 3]])
        );
    }

    #[test]
    fn index_round_trips_through_columns() {
        for index in [1u64, 10, 37, 100, 137, 216] {
            let order = DecodingOrder::from_index(3, index).unwrap();
            let rebuilt = DecodingOrder::from_columns(order.columns().to_vec()).unwrap();
            assert_eq!(rebuilt.index(), index);
        }
        assert!(DecodingOrder::from_index(3, 0).is_err());
        assert!(DecodingOrder::from_index(3, 217).is_err());
        assert!(matches!(
            DecodingOrder::from_index(6, 1),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn enumeration_counts_and_caps() {
        let all = enumerate_orders(3).unwrap();
        assert_eq!(all.len(), 216);
        assert!(all
            .iter()
            .enumerate()
            .all(|(i, order)| order.index() == i as u64 + 1));
        assert_eq!(total_order_count(3).unwrap(), 216);
        assert_eq!(total_order_count(4).unwrap(), 331_776);
        // Four users blow past the default cap but fit an explicit one only.
        assert!(matches!(enumerate_orders(4), Err(Error::Capacity(_))));
        assert!(matches!(
            enumerate_orders_capped(3, 100),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn secure_set_for_three_users() {
        let secure = secure_orders(3).unwrap();
        assert_eq!(secure.len(), 76);
        let indices: Vec<u64> = secure.iter().map(DecodingOrder::index).collect();
        assert_eq!(
            &indices[..12],
            &[10, 12, 20, 23, 24, 28, 30, 32, 34, 35, 39, 40]
        );
        assert_eq!(*indices.last().unwrap(), 200);
        assert!(indices.contains(&10));
        assert!(indices.contains(&100));
        assert!(!indices.contains(&1));
        assert!(!indices.contains(&216));
        // Membership agrees with the per-order predicate.
        assert!(DecodingOrder::from_index(3, 10).unwrap().is_secure());
        assert!(DecodingOrder::from_index(3, 100).unwrap().is_secure());
        assert!(!DecodingOrder::from_index(3, 1).unwrap().is_secure());
        assert!(!DecodingOrder::from_index(3, 216).unwrap().is_secure());
    }

    #[test]
    fn secure_set_for_two_users() {
        let secure = secure_orders(2).unwrap();
        let indices: Vec<u64> = secure.iter().map(DecodingOrder::index).collect();
        assert_eq!(indices, vec![2, 3]);
        assert_eq!(secure[0], order_from_labels(&[&[2, 1], &[1, 2]]));
        assert_eq!(secure[1], order_from_labels(&[&[1, 2], &[2, 1]]));
    }

    #[test]
    fn suboptimal_order_shape_and_index() {
        let order = suboptimal_order(3).unwrap();
        assert_eq!(order.index(), 10);
        assert_eq!(order, order_from_labels(&[&[2, 3, 1], &[1, 3, 2], &[1, 2, 3]]));
        assert_eq!(suboptimal_order(2).unwrap().index(), 2);
        for user_count in 2..=MAX_USERS {
            assert!(suboptimal_order(user_count).unwrap().is_secure());
        }
        assert!(suboptimal_order(1).is_err());
        assert!(matches!(suboptimal_order(6), Err(Error::Capacity(_))));
    }

    #[test]
    fn text_form_round_trips() {
        let order = DecodingOrder::from_index(3, 10).unwrap();
        assert_eq!(order.to_string(), "2,3,1;1,3,2;1,2,3");
        let parsed: DecodingOrder = "2,3,1;1,3,2;1,2,3".parse().unwrap();
        assert_eq!(parsed, order);
        let spaced: DecodingOrder = " 2,3,1 ; 1,3,2 ; 1,2,3 ".parse().unwrap();
        assert_eq!(spaced.index(), 10);
        for index in [1u64, 10, 100, 216] {
            let order = DecodingOrder::from_index(3, index).unwrap();
            let round: DecodingOrder = order.to_string().parse().unwrap();
            assert_eq!(round, order);
        }
    }

    #[test]
    fn text_form_rejects_malformed_input() {
        assert!("".parse::<DecodingOrder>().is_err());
        assert!("2,3;1,3,2;1,2,3".parse::<DecodingOrder>().is_err());
        assert!("2,3,1;1,3,2".parse::<DecodingOrder>().is_err());
        assert!("2,3,1;1,3,2;1,2,x".parse::<DecodingOrder>().is_err());
        assert!("0,1,2;1,3,2;1,2,3".parse::<DecodingOrder>().is_err());
        assert!("2,2,1;1,3,2;1,2,3".parse::<DecodingOrder>().is_err());
    }

    #[test]
    fn predecessor_sets_split_each_column() {
        let order = suboptimal_order(3).unwrap();
        // User 1's column is [2,3,1]: its own signal comes last.
        let (before, after) = order.predecessor_sets(0, 0).unwrap();
        assert_eq!(before, vec![1, 2]);
        assert!(after.is_empty());
        // User 1 decodes user 2 first: nothing before, users 1 and 3 after.
        let (before, after) = order.predecessor_sets(0, 1).unwrap();
        assert!(before.is_empty());
        assert_eq!(after, vec![0, 2]);
        assert!(order.predecessor_sets(3, 0).is_err());
        assert!(order.predecessor_sets(0, 3).is_err());
    }

    #[test]
    fn conventional_order_has_weakest_first_sets_everywhere() {
        let order = DecodingOrder::from_index(3, 216).unwrap();
        for observer in 0..3 {
            for target in 0..3 {
                let (before, after) = order.predecessor_sets(observer, target).unwrap();
                let weaker: Vec<usize> = (target + 1..3).collect();
                let stronger: Vec<usize> = (0..target).collect();
                assert_eq!(before, weaker);
                assert_eq!(after, stronger);
            }
        }
    }
}
