//! senet-core: ensemble skeleton extraction for degraded character images.
//!
//! The crate is organized around a small set of pure, deterministic building
//! blocks:
//!
//! * [`raster`] — 8-bit grayscale and {0,1} binary rasters, binarization,
//!   and 3x3 patch access.
//! * [`prepool`] — the pool of denoising/transform primitives and the
//!   randomized three-step compositions drawn from it.
//! * [`thinning`] — fixed-point morphological thinning driven by a 16-kernel
//!   hit-or-miss set; produces single-pixel skeletons.
//! * [`ensemble`] — runs thinning over many pre-processing branches and
//!   fuses the per-branch skeletons by weighted voting until a single
//!   consensus skeleton remains.
//! * [`degrade`] — synthetic degradation: mixed additive noise fields at
//!   jittered levels wrapped by an optional signal-dependent stage.
//! * [`metrics`] — PSNR, SSIM, and skeleton distance between image pairs.
//! * [`rng`] — the pinned portable RNG and the stream-splitting scheme that
//!   makes every stage reproducible bit-for-bit from a single seed.
//!
//! Everything here is `no_std` (with `alloc`); file formats, CLI, and
//! parallel batch drivers live in the companion `senet-cli` crate. All
//! floating-point math goes through `libm`, so results are identical across
//! platforms.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod degrade;
pub mod ensemble;
mod error;
pub mod metrics;
pub mod prepool;
pub mod raster;
pub mod rng;
pub mod thinning;

pub use error::{Error, Result};
pub use raster::{binarize, patch_at, BinarizeMethod, BinaryImage, GrayImage, Patch3};
pub use thinning::{default_kernel_set, skeletonize, Kernel, KernelSet, Skeleton};
