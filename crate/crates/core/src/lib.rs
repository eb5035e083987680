//! Archimedean Gross-Prasad toolkit: quadratic spaces, Weil group
//! representations, root numbers, L-parameters and regular semisimple
//! conjugacy classes in orthogonal groups over `R`.

pub mod conjclass;
pub mod epsilon;
pub mod lparam;
pub mod quadspace;
pub mod weilrep;
