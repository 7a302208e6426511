//! Finite fields, embeddings between them and linear algebra over them.

pub mod field;
pub mod matrix;

pub use field::{
    embed, field_of_order, is_prime, make_field, make_field_capped, prime_power, Embedding,
    FieldDescriptor, FqElem, FqField, DEFAULT_FIELD_CAP, MAX_FIELD_ORDER,
};
pub use matrix::{FqMatrix, Rref};
