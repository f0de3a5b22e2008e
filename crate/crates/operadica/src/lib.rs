//! Finite spans, coloured operads, free-algebra monads, Lawvere theories,
//! and Segal-space checks, all executable at desk scale.
//!
//! Everything here is finite and truncated: spans carry explicit multiplicity
//! matrices, operads list their operations per arity up to a bound, free
//! algebras and theory hom-sets are graded and cut off at a stated degree,
//! and simplicial sets stop at a stated level. Within those windows every
//! construction is exact and every structural law is checkable by exhaustive
//! enumeration — the test suites and the `examples/` directory do exactly
//! that.
//!
//! Start with the examples: each one exercises a single capability
//! (`span_pullbacks`, `operad_laws`, `operators_category`, `free_algebras`,
//! `lawvere_theories`, `segal_nerves`, …). The `operadica` binary exposes the
//! same operations over JSON files for scripting.

pub mod cli;
pub mod error;
pub mod finspan;
pub mod io;
pub mod lawvere;
pub mod monad;
pub mod opcat;
pub mod operad;
pub mod segal;

pub use error::Error;

/// Seed for the randomized sweeps, read from `OPERADICA_SEED` (decimal or
/// `0x`-prefixed hex). Fixed default so runs are reproducible out of the box.
pub fn suite_seed() -> u64 {
    match std::env::var("OPERADICA_SEED") {
        Ok(s) => {
            let s = s.trim();
            let parsed = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
                u64::from_str_radix(hex, 16)
            } else {
                s.parse()
            };
            parsed.unwrap_or(0xC0FFEE)
        }
        Err(_) => 0xC0FFEE,
    }
}
