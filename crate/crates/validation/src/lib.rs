//! Acceptance checks for `rvx-core`; see `tests/acceptance.rs`.
