pub mod arith;
pub mod corpus;
pub mod euclidean;
pub mod field;
pub mod models;
pub mod ordinal;
pub mod poset;
pub mod ring;
pub mod syntax;
