use alloc::boxed::Box;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("image dimensions must be at least 1x1")]
    ZeroDimension,
    #[error("pixel buffer holds {got} values, expected {width}x{height}")]
    DataLength { width: u32, height: u32, got: usize },
    #[error("binary pixel value {value} is outside {{0,1}}")]
    NotBinary { value: u8 },
    #[error("coordinates ({x}, {y}) outside {width}x{height} image")]
    OutOfBounds {
        x: i64,
        y: i64,
        width: u32,
        height: u32,
    },
    #[error("window size {window} does not fit a {width}x{height} image")]
    WindowTooLarge {
        window: u32,
        width: u32,
        height: u32,
    },
    #[error("invalid window size {window}: must be odd and at least 3")]
    BadWindow { window: u32 },
    #[error("kernel size {k} is not one of 3, 5, 7")]
    BadKernelSize { k: u32 },
    #[error("invalid parameter: {what}")]
    BadParameter { what: &'static str },
    #[error("processing pool holds {len} primitives, need at least 3")]
    PoolTooSmall { len: usize },
    #[error("denoising function steps must be pairwise distinct")]
    DuplicateStep,
    #[error("cannot draw {requested} distinct compositions from a pool supporting {capacity}")]
    PhiExhausted { requested: usize, capacity: usize },
    #[error("skeleton set must hold at least {required} members, got {len}")]
    SetTooSmall { len: usize, required: usize },
    #[error("weight list holds {weights} entries for a group of {group}")]
    WeightCount { weights: usize, group: usize },
    #[error("image dimensions differ: {aw}x{ah} vs {bw}x{bh}")]
    DimensionMismatch { aw: u32, ah: u32, bw: u32, bh: u32 },
    #[error("image smaller than the {required}x{required} metric window")]
    ImageTooSmall { required: u32 },
    #[error("invalid ensemble config: {what}")]
    BadConfig { what: &'static str },
    #[error("pipeline branch {index} failed: {source}")]
    BranchFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid erosion kernel: {what}")]
    BadKernel { what: &'static str },
    #[error("kernel text line {line}: {what}")]
    KernelText { line: usize, what: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;
