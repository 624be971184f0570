//! Text formats: polynomial expressions, case files, built-in example cases
//! and reports.

pub mod case;
pub mod families;
pub mod parse;
pub mod report;

pub use case::{parse_case, CaseError, CaseFile, CaseInstance, CaseOptions};
pub use families::{builtin, FamilyError};
pub use parse::{parse_expression, ParseError, Pos};
pub use report::{build_report, Identity, Invariant, Outcome, ReportDocument};
