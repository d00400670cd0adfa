use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("order {order} outside supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a cycle")]
    NotACycle,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("inconsistent generation spec: {0}")]
    InconsistentSpec(String),

    #[error("enumeration infeasible at order {requested}; largest feasible order is {largest}")]
    Infeasible { requested: usize, largest: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
