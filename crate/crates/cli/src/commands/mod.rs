pub mod check;
pub mod construct;
pub mod enumerate;
pub mod index;
pub mod verify;
