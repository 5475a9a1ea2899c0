mod symbol;
mod tower;

pub use symbol::{boundary, Base, WedgeSymbol};
pub use tower::{mu_t_star, pv_step, tower, ConnectingSource, GradedKGroup, Induced, TowerOptions, TowerRun};
