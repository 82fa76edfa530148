//! Galois actions on the ten (-1)-curves of a quintic del Pezzo surface:
//! orbits, invariant Néron–Severi ranks, equivariant automorphisms, Mori
//! fibre space flags, and exact finite-field checks of explicit maps.

pub mod classifier;
pub mod cli;
pub mod finite_geometry;
pub mod groups;
pub mod lattice;
pub mod petersen;
pub mod report;
pub mod verify;
