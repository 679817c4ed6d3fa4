//! The sign-reversing involution on `O_n` behind the truncated theta identity,
//! and the prefix-exchange maps giving the `(q,t)`-log-concavity injection.

mod phi5;
mod phi6;

pub use phi5::{
    o_enumerate, phi5, phi5_verify, signed_count, Phi5Report, PhiCase, PhiInternals, PhiTrace,
    SignedOverpartition,
};
pub use phi6::{
    a_index, involution_holds, map_a, map_c, map_l, map_s, phi6, phi6_chain, phi6_verify,
    phi6_verify_with, random_overpartition, Pair, Phi6Report, DEFAULT_SAMPLE,
};
