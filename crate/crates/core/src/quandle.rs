use crate::axioms::{check_quandle, dual_table};
use crate::error::{Error, Result};
use crate::table::{Element, OpTable};

/// A finite quandle together with its dual operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quandle {
    op: OpTable,
    dual: OpTable,
}

impl Quandle {
    /// Validates the quandle axioms and derives the dual operation by
    /// inverting every right translation.
    pub fn new(op: OpTable) -> Result<Self> {
        let report = check_quandle(&op);
        if !report.all_pass() {
            return Err(Error::NotQuandle(Box::new(report)));
        }
        let dual = dual_table(&op);
        Ok(Quandle { op, dual })
    }

    pub fn size(&self) -> usize {
        self.op.size()
    }

    pub fn op(&self) -> &OpTable {
        &self.op
    }

    /// The dual operation `x /y`, satisfying `(x * y) /y = x = (x /y) * y`.
    pub fn dual(&self) -> &OpTable {
        &self.dual
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.op.get(x, y)
    }

    #[inline]
    pub fn div(&self, x: Element, y: Element) -> Element {
        self.dual.get(x, y)
    }

    /// Whether `x * y = x` for all `x, y`.
    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|x| self.op.row(x).iter().all(|&v| v == x))
    }
}

/// Free-function form of [`Quandle::new`].
pub fn make_quandle(op: OpTable) -> Result<Quandle> {
    Quandle::new(op)
}
