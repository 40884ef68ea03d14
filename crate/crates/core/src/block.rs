use std::fmt::Debug;
use std::hash::Hash;

use num_traits::PrimInt;

/// An unsigned machine word used as the bit storage of a [`Face`](crate::Face).
///
/// The width of the word bounds the number of vertices a complex may use.
pub trait Block: PrimInt + Hash + Debug + Default + Send + Sync + 'static {
    const BITS: u32;

    #[inline]
    fn bit(v: usize) -> Self {
        Self::one() << v
    }
}

impl Block for u32 {
    const BITS: u32 = u32::BITS;
}

impl Block for u64 {
    const BITS: u32 = u64::BITS;
}

impl Block for u128 {
    const BITS: u32 = u128::BITS;
}
