//! Scenario ingestion, task orchestration and reports for the `algebroid`
//! command line tool.

pub mod builtins;
pub mod explain;
pub mod report;
pub mod run;
pub mod scenario;

pub use report::{Report, Status, TaskReport};
pub use run::run;
pub use scenario::{Built, Scenario, ScenarioError, TASKS};
