use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::complement::is_fc_array;
use crate::error::{Error, Result};
use crate::fcp::{count_fcp, enumerate_fcp, Fcp};
use crate::lattice::{enumerate_partitions, BoxDims, PartitionArray};
use crate::symmetry::engine::{ConstraintGrid, Relation};

/// Symmetry classes of plane partitions (first group) and of quarter
/// complementary plane partitions (QCPPs, second group).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    /// `π_{i,j} = π_{j,i}`.
    Sym,
    /// Symmetric off the anti-diagonal `i + j = n + 1`.
    QSym,
    /// `π_{i,j} + π_{a+1-i,b+1-j} = c`.
    Sc,
    /// `π_{i,j} + π_{n+1-j,n+1-i} = c`.
    Tc,
    /// Transpose-complementary off the anti-diagonal.
    Qtc,
    /// Transpose-complementary off the main diagonal.
    Qtc2,
    /// Symmetric and transpose-complementary off the main diagonal.
    Sqtc2,
    /// `(i,j,k)` in the diagram implies `(j,k,i)` is.
    Cyc,
    QsQcpp,
    ScQcpp,
    QtcQcpp,
}

impl ClassTag {
    pub const ALL: [ClassTag; 11] = [
        ClassTag::Sym,
        ClassTag::QSym,
        ClassTag::Sc,
        ClassTag::Tc,
        ClassTag::Qtc,
        ClassTag::Qtc2,
        ClassTag::Sqtc2,
        ClassTag::Cyc,
        ClassTag::QsQcpp,
        ClassTag::ScQcpp,
        ClassTag::QtcQcpp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Sym => "SYM",
            ClassTag::QSym => "QSYM",
            ClassTag::Sc => "SC",
            ClassTag::Tc => "TC",
            ClassTag::Qtc => "QTC",
            ClassTag::Qtc2 => "QTC2",
            ClassTag::Sqtc2 => "SQTC2",
            ClassTag::Cyc => "CYC",
            ClassTag::QsQcpp => "QS_QCPP",
            ClassTag::ScQcpp => "SC_QCPP",
            ClassTag::QtcQcpp => "QTC_QCPP",
        }
    }

    pub fn is_qcpp(self) -> bool {
        matches!(self, ClassTag::QsQcpp | ClassTag::ScQcpp | ClassTag::QtcQcpp)
    }

    pub fn needs_square_base(self) -> bool {
        !matches!(self, ClassTag::Sc | ClassTag::ScQcpp)
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        ClassTag::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown class {s:?}")))
    }
}

/// A class together with the `(a, b, c)`-box it lives in. QCPP classes need
/// even sides `(2a, 2b, 2c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryClass {
    pub tag: ClassTag,
    pub bx: BoxDims,
}

impl SymmetryClass {
    pub fn new(tag: ClassTag, bx: BoxDims) -> Result<Self> {
        let s = bx.sides();
        if s.len() != 3 {
            return Err(Error::InvalidBox {
                sides: s.to_vec(),
                reason: "plane partition classes need an (a,b,c)-box".into(),
            });
        }
        if tag.needs_square_base() && s[0] != s[1] {
            return Err(Error::InvalidBox {
                sides: s.to_vec(),
                reason: format!("{tag} needs a = b"),
            });
        }
        if tag == ClassTag::Cyc && s[0] != s[2] {
            return Err(Error::InvalidBox {
                sides: s.to_vec(),
                reason: "CYC needs a = b = c".into(),
            });
        }
        if tag.is_qcpp() && s.iter().any(|x| x % 2 == 1) {
            return Err(Error::InvalidBox {
                sides: s.to_vec(),
                reason: format!("{tag} needs even sides"),
            });
        }
        Ok(SymmetryClass { tag, bx })
    }

    pub fn rows(&self) -> usize {
        self.bx.side(0)
    }

    pub fn cols(&self) -> usize {
        self.bx.side(1)
    }

    pub fn height(&self) -> usize {
        self.bx.side(2)
    }

    /// The total of complement relations: the height for plane partition
    /// classes, half of it for QCPP classes.
    pub fn total(&self) -> u32 {
        if self.tag.is_qcpp() {
            (self.height() / 2) as u32
        } else {
            self.height() as u32
        }
    }

    /// Pairwise relations defining the class, on 0-based row-major cells.
    pub fn links(&self) -> Vec<(usize, usize, Relation)> {
        let (a, b) = (self.rows(), self.cols());
        let cell = |i: usize, j: usize| i * b + j;
        let mut out = Vec::new();
        let symmetric = |skip_anti: bool, out: &mut Vec<(usize, usize, Relation)>| {
            for i in 0..a {
                for j in i + 1..a {
                    if !(skip_anti && i + j + 1 == a) {
                        out.push((cell(i, j), cell(j, i), Relation::Equal));
                    }
                }
            }
        };
        let transpose_complement = |skip: &dyn Fn(usize, usize) -> bool, out: &mut Vec<(usize, usize, Relation)>| {
            for i in 0..a {
                for j in 0..a {
                    if !skip(i, j) {
                        out.push((cell(i, j), cell(a - 1 - j, a - 1 - i), Relation::Complement));
                    }
                }
            }
        };
        match self.tag {
            ClassTag::Sym => symmetric(false, &mut out),
            ClassTag::QSym | ClassTag::QsQcpp => symmetric(true, &mut out),
            ClassTag::Sc | ClassTag::ScQcpp => {
                for i in 0..a {
                    for j in 0..b {
                        out.push((cell(i, j), cell(a - 1 - i, b - 1 - j), Relation::Complement));
                    }
                }
            }
            ClassTag::Tc => transpose_complement(&|_, _| false, &mut out),
            ClassTag::Qtc | ClassTag::QtcQcpp => transpose_complement(&|i, j| i + j + 1 == a, &mut out),
            ClassTag::Qtc2 => transpose_complement(&|i, j| i == j, &mut out),
            ClassTag::Sqtc2 => {
                symmetric(false, &mut out);
                transpose_complement(&|i, j| i == j, &mut out);
            }
            ClassTag::Cyc => {}
        }
        out
    }

    pub fn grid(&self) -> ConstraintGrid {
        let mut grid = ConstraintGrid::new(self.rows(), self.cols(), self.height() as u32, self.total());
        for (p, q, r) in self.links() {
            grid.link(p, q, r);
        }
        grid
    }

    /// Whether `pi` belongs to the class.
    pub fn contains(&self, pi: &PartitionArray) -> Result<bool> {
        let shape = [self.rows(), self.cols()];
        if pi.shape() != shape {
            return Err(Error::ShapeMismatch {
                expected: shape.to_vec(),
                found: pi.shape().to_vec(),
            });
        }
        let e = pi.entries();
        let height = self.height() as u32;
        if e.iter().any(|&v| v > height) {
            return Ok(false);
        }
        if self.tag == ClassTag::Cyc {
            return Ok(is_cyclically_symmetric(pi));
        }
        if self.tag.is_qcpp() && !is_fc_array(pi, &self.half_lengths()) {
            return Ok(false);
        }
        let total = self.total();
        Ok(self.links().iter().all(|&(p, q, r)| match r {
            Relation::Equal => e[p] == e[q],
            Relation::Complement => e[p] + e[q] == total,
        }))
    }

    fn half_lengths(&self) -> BoxDims {
        BoxDims::new(self.bx.sides().iter().map(|s| s / 2).collect::<Vec<_>>()).expect("even box")
    }
}

/// `(i,j,k) ∈ λ ⇒ (j,k,i) ∈ λ` for the diagram of a plane partition with
/// `a = b`, heights bounded by the row count.
pub fn is_cyclically_symmetric(pi: &PartitionArray) -> bool {
    let (a, b) = (pi.shape()[0], pi.shape()[1]);
    if a != b {
        return false;
    }
    let height = |i: usize, j: usize| -> u32 {
        if i == 0 || j == 0 || i > a || j > b {
            0
        } else {
            pi.get(&[i - 1, j - 1])
        }
    };
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=height(i, j) as usize {
                if k > a || (height(j, k) as usize) < i {
                    return false;
                }
            }
        }
    }
    true
}

/// Symmetric plane partitions in the sense of the plain transpose.
pub fn is_symmetric(pi: &PartitionArray) -> bool {
    let (a, b) = (pi.shape()[0], pi.shape()[1]);
    a == b && (0..a).all(|i| (0..i).all(|j| pi.get(&[i, j]) == pi.get(&[j, i])))
}

/// Exact size of a class by constraint search (plane partition classes) or by
/// filtering the enumerated QCPPs.
pub fn count_class(class: &SymmetryClass, budget: u64) -> Result<BigUint> {
    match class.tag {
        ClassTag::Cyc => {
            let bx = &class.bx;
            if bx.has_zero_side() {
                return Ok(BigUint::from(1u32));
            }
            let mut seen = 0u64;
            let mut count = 0u64;
            for p in enumerate_partitions(bx) {
                seen += 1;
                if seen > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                if is_cyclically_symmetric(&p) {
                    count += 1;
                }
            }
            Ok(BigUint::from(count))
        }
        tag if tag.is_qcpp() => {
            let n = class.half_lengths();
            let all = qcpps(&n, budget)?;
            let mut count = 0u64;
            for f in &all {
                match f {
                    Fcp::Empty => count += 1,
                    Fcp::Array(p) => {
                        if class.contains(p)? {
                            count += 1
                        }
                    }
                }
            }
            Ok(BigUint::from(count))
        }
        _ => Ok(BigUint::from(class.grid().count(budget)?)),
    }
}

/// All QCPPs with the given half-lengths, refusing sets larger than the budget.
pub fn qcpps(n: &BoxDims, budget: u64) -> Result<Vec<Fcp>> {
    if count_fcp(n) > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(budget));
    }
    Ok(enumerate_fcp(n))
}
