pub mod budget;
pub mod dynamic;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod io;
pub mod k5free;
pub mod minor;
pub mod sweep;
