pub mod displays;
pub mod props;
