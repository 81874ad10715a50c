//! Design and analysis toolkit for prestressed bistable
//! hair-clip-mechanism (HCM) gripper fingers.
//!
//! A hair-clip mechanism is an in-plane prestressed ribbon that buckles
//! laterally into one of two stable shapes; a pair of them makes a
//! fast-closing, wide-opening gripper finger skeleton. This crate computes
//! the lateral-torsional critical load, the post-buckled opening span, the
//! snap-through timescale, and the bistable energy barrier from material
//! and geometry inputs, evaluates grasp feasibility for rigid objects and
//! limp sheets, and searches design spaces under constraints.
//!
//! Modules:
//! - [`model`] — materials, ribbon geometry, section constants, assembly;
//! - [`numerics`] — Γ, J_{1/4}, adaptive quadrature, root finding, scalar
//!   minimization (self-contained, no platform special functions);
//! - [`buckling`] — critical load, mode shape, amplitude closures, span;
//! - [`energetics`] — snap timescale and energy barrier;
//! - [`grasp`] — liftable / manipulable / wrinkleable feasibility calculus;
//! - [`design`] — parameter sweeps, constrained search, fatigue advisory;
//! - [`cli`] — config files, subcommands, CSV/JSON reports, self-test.
//!
//! All library-level quantities are SI (m, kg, s, N, Pa); the CLI converts
//! from workshop units (mm, MPa, g, degrees) at the boundary.

pub mod buckling;
pub mod cli;
pub mod design;
pub mod energetics;
pub mod grasp;
pub mod model;
pub mod numerics;
