//! File formats, a parallel search driver and the command-line front end
//! for [`sqwalk`].

pub mod cli;
pub mod formats;
pub mod parallel;
