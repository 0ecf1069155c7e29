pub mod field;
pub mod autos;
pub mod cli;
pub mod groups;
pub mod linalg;
pub mod noether;
pub mod poly;
pub mod ratfunc;
pub mod text;
