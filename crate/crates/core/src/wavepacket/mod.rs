//! Sharply peaked positive-energy wave packets on a momentum grid and the
//! expectation-value relations they satisfy.

mod packet;
mod position;
mod relations;

pub use packet::{GridSpec, MomentumWavePacket, HERMITIAN_TOLERANCE, TRUNCATION_LIMIT};
pub use relations::{
    mass_center_offset, verify_fg_relations, verify_main_result, ExpectationReport, Quantity,
    RelationRow, EXACT_FLOOR, FG_ENVELOPE, FG_PASS, FG_RELATIONS, MAIN_RESULT_C_TOLERANCE,
};
