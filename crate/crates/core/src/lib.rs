//! Exact laboratory for the domination game and the edge domination game.

pub mod game;
pub mod edge_game;
pub mod graph;
pub mod recognizers;
pub mod harness;
pub mod strategies;
pub mod transforms;
