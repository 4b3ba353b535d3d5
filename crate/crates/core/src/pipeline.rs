//! End-to-end construction: highest-weight search, orbit, bases in each
//! gauge, structure constants and verification.

use crate::builder::{
    canonicalize, find_highest_weight, generate_orbit, paper_gauge, rational_gauge, symmetrize, Ansatz, BuildError, Gauge, QLieBasis,
};
use crate::qforms::AdjointRep;
use crate::report::{self, module_data, raw_tables, Check, ModuleData, RawTables, StructureConstants};
use crate::uq::{AlgebraKind, Uq};

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Root order `D` with `v = q^{1/D}`; the algebra default if absent.
    pub d: Option<u32>,
    /// Degree cap of the rewriting; the algebra default if absent.
    pub cap: Option<usize>,
}

/// The rational-gauge module with its adjoint representation.
#[derive(Debug)]
pub struct Construction {
    pub uq: Uq,
    pub hw_solutions: usize,
    pub rational: QLieBasis,
    pub rep: AdjointRep,
    pub raw: RawTables,
}

/// Everything computed for one basis.
#[derive(Debug)]
pub struct Report {
    pub basis: QLieBasis,
    pub constants: StructureConstants,
    pub module: ModuleData,
    pub checks: Vec<Check>,
}

impl Construction {
    pub fn new(kind: AlgebraKind, opts: &Options) -> Result<Self, BuildError> {
        let mut uq = match opts.d {
            Some(d) => Uq::with_root_order(kind, d),
            None => Uq::new(kind),
        };
        if let Some(cap) = opts.cap {
            uq = uq.with_cap(cap);
        }
        let (solutions, mut log) = match find_highest_weight(&uq, &Ansatz::new(&uq, 2)) {
            Ok(s) => (s, Vec::new()),
            Err(BuildError::NoHighestWeight) => {
                (find_highest_weight(&uq, &Ansatz::new(&uq, 3))?, vec!["ansatz bound widened to 3".to_string()])
            }
            Err(e) => return Err(e),
        };
        log.push(format!("highest-weight solution space has dimension {}", solutions.len()));
        let (phi, more) = symmetrize(&uq, &solutions)?;
        log.extend(more);
        let orbit = generate_orbit(&uq, &phi)?;
        let rational = rational_gauge(&uq, &orbit, log)?;
        let rep = AdjointRep::new(&uq, &rational.elements)?;
        let raw = raw_tables(&uq, &rep)?;
        Ok(Construction { uq, hw_solutions: solutions.len(), rational, rep, raw })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.rational.kind
    }

    /// The basis in the given gauge. The paper gauge takes its radical
    /// from the published `C^2`.
    pub fn basis(&self, gauge: Gauge) -> Result<QLieBasis, BuildError> {
        match gauge {
            Gauge::Rational => Ok(self.rational.clone()),
            Gauge::Canonical => canonicalize(&self.uq, &self.rational, &self.raw.gram, None),
            Gauge::Paper => {
                let hint = report::golden::radical_square(self.kind(), self.uq.root_order())?;
                let canonical = canonicalize(&self.uq, &self.rational, &self.raw.gram, hint.as_ref())?;
                paper_gauge(&self.uq, &canonical)
            }
        }
    }

    /// Constants, element data and relation checks for a basis of this
    /// module.
    pub fn report(&self, basis: QLieBasis) -> Result<Report, BuildError> {
        let own;
        let (rep, raw) = if basis.elements == self.rational.elements {
            (&self.rep, &self.raw)
        } else {
            let rep = AdjointRep::new(&self.uq, &basis.elements)?;
            let raw = raw_tables(&self.uq, &rep)?;
            own = (rep, raw);
            (&own.0, &own.1)
        };
        report_for(&self.uq, basis, rep, raw)
    }

    pub fn report_gauge(&self, gauge: Gauge) -> Result<Report, BuildError> {
        self.report(self.basis(gauge)?)
    }
}

impl Report {
    /// Relation suite, then the published tables (paper gauge only), then
    /// the classical limit.
    pub fn verification(&self) -> Vec<Check> {
        let mut out = self.checks.clone();
        if self.basis.gauge == Gauge::Paper {
            out.extend(report::golden::golden_checks(&self.constants));
        }
        let oracle = report::classical::ClassicalOracle::new(self.basis.kind);
        out.extend(report::classical::verify_classical(&self.constants, &oracle));
        out
    }
}

pub fn report_for(uq: &Uq, basis: QLieBasis, rep: &AdjointRep, raw: &RawTables) -> Result<Report, BuildError> {
    let constants = StructureConstants::from_raw(&basis, raw)?;
    let module = module_data(uq, &basis, rep, raw)?;
    let checks = report::verify_relations(&constants, &module);
    Ok(Report { basis, constants, module, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{is_normalized, lattice_check, Status};

    fn status(checks: &[Check], id: &str) -> Status {
        checks.iter().find(|c| c.relation_id == id).unwrap_or_else(|| panic!("no check {}", id)).status
    }

    #[test]
    fn sl2_canonical_relations() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let r = c.report_gauge(Gauge::Canonical).unwrap();
        assert!(is_normalized(&r.constants));
        for id in ["llt", "rrt", "n1", "f1", "n2", "f2", "qas", "rbh-derived"] {
            assert_eq!(status(&r.checks, id), Status::Pass, "{}", id);
        }
        assert_eq!(status(&r.checks, "rbh"), Status::Fail);
    }

    #[test]
    fn sl2_paper_gauge_matches_the_table() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let r = c.report_gauge(Gauge::Paper).unwrap();
        assert!(!is_normalized(&r.constants));
        assert_eq!(status(&r.verification(), "golden-table"), Status::Pass);
        assert_eq!(status(&r.checks, "ksx"), Status::Skipped);
    }

    #[test]
    fn a2_closes_on_the_lattice() {
        let c = Construction::new(AlgebraKind::A2, &Options::default()).unwrap();
        let r = c.report_gauge(Gauge::Paper).unwrap();
        assert_eq!(lattice_check(&r.constants).status, Status::Pass);
        assert_eq!(status(&r.checks, "diarels"), Status::Pass);
    }

    #[test]
    fn root_order_override_is_honoured() {
        let opts = Options { d: Some(4), cap: None };
        let c = Construction::new(AlgebraKind::Sl2, &opts).unwrap();
        assert_eq!(c.uq.root_order(), 4);
        let r = c.report_gauge(Gauge::Canonical).unwrap();
        assert_eq!(status(&r.checks, "qas"), Status::Pass);
    }
}
