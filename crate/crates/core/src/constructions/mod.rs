//! The graphs a finite metric space induces: `CS(M)`, `MC(M)` and `Σ_M`.

mod cs;
mod mc;
mod relations;
mod sigma;

pub use cs::{build_cs, CsStep, CsTrace};
pub use mc::{build_mc, mst_bottleneck, CutValue};
pub use relations::{
    classify_intrinsic, classify_sigma, relations_report, IntrinsicClass, IntrinsicLabel,
    Relations, RelationsReport,
};
pub use sigma::{build_sigma, has_shortcut};
