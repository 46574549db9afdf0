pub mod cli;
pub mod corpus;
pub mod covariantbialg;
pub mod dendriprelie;
pub mod exactfield;
pub mod par;
pub mod rbsystems;
pub mod report;
pub mod structures;
pub mod yangbaxter;
