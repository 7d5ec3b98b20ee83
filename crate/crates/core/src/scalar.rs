//! Integer scalar abstraction for the exact linear algebra kernel.
//!
//! Everything in [`crate::matrix`] and [`crate::group`] is generic over a
//! signed integer type; `i64` and `i128` are fine for small inputs, while
//! [`num_bigint::BigInt`] is required where elimination entries can blow up
//! (random Smith normal forms do). The crate root fixes the default with the
//! [`crate::Int`] alias.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{NumAssign, Signed};

pub trait IntScalar:
    Integer + Signed + NumAssign + Clone + Hash + fmt::Debug + fmt::Display + From<i64>
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + NumAssign + Clone + Hash + fmt::Debug + fmt::Display + From<i64>
{
}
