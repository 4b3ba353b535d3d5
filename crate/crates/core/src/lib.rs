pub mod builder;
pub mod export;
pub mod linalg;
pub mod pipeline;
pub mod qforms;
pub mod report;
pub mod scalar;
pub mod uq;
