//! Preprojective algebras of Dynkin quivers of types D and E: exact
//! normal forms, Frobenius structure, Hochschild cohomology HH^0..HH^6 from
//! the Schofield complex, and the cup products between the named classes.

pub mod algebra;
pub mod cache;
pub mod catalog;
pub mod center;
pub mod error;
pub mod hochschild;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod products;
pub mod quiver;
pub mod rational;
pub mod report;
pub mod serial;
pub mod table;
pub mod verify;

pub use algebra::{Algebra, Elem};
pub use error::{Error, Result};
pub use quiver::{Family, QuiverId};
