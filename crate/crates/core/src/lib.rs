pub mod irred;
pub mod linalg;
pub mod rep;
pub mod ring;
