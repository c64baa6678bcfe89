pub mod error;
pub mod linalg;
pub mod symplectic;
pub mod relations;
pub mod coisotropic;
pub mod canonical;
pub mod testkit;
