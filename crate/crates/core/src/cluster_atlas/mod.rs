//! Seeds, mutations and the charts of type `A_n` indexed by triangulations.

mod lattice;
mod seed;
mod triangulated;
mod xchart;

pub use lattice::MonomialLattice;
pub use seed::{a_var_names, parse_word, seed_from_cartan_an, x_var_names, Seed};
pub use triangulated::{
    a_var, expand_a_variable, expand_all_a_variables, flip_path, flip_word, Chart, ChartKind, Space,
    TriangulationSeed,
};
pub use xchart::{change_x_chart, expand_in_x_chart};

pub(crate) use triangulated::entered_triangle;
