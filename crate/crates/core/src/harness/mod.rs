//! Verification suites, reports, and CLI plumbing (in progress).
