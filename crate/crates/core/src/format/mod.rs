//! JSON instance and report files, and seeded instance generators.
//!
//! Both file kinds carry `format_version`; readers reject other versions.
//! All weights in instance files are integers so that runs can be exact.

mod generate;
mod instance;
mod report;

pub use generate::{generate, Family, GenerateOptions};
pub use instance::{
    AnyMatroid, ConcaveSpec, Instance, InstanceFile, MatroidSpec, Objective, ObjectiveSpec, RegularizerSpec,
};
pub use report::{verify_report, CertificateRecord, Check, GuideKind, ReportFile, VerifyOptions, VerifyOutcome};

/// Version written to, and required in, every file.
pub const FORMAT_VERSION: u32 = 1;
