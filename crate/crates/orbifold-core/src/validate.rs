use std::fmt;

use serde::{Deserialize, Serialize};

use crate::types::{Orbifold2, SegKind};

/// One broken invariant, with a human-readable location.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl Violation {
    fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        Violation { location: location.into(), message: message.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl Orbifold2 {
    /// Checks every structural invariant and reports all violations.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if !self.orientable && self.genus == 0 {
            out.push(Violation::new("surface", "nonorientable surface needs at least one crosscap"));
        }
        for (i, &p) in self.cone_points.iter().enumerate() {
            if p < 2 {
                out.push(Violation::new(format!("cone {i}"), "cone order < 2"));
            }
        }
        for (ci, c) in self.circles.iter().enumerate() {
            if c.is_empty() {
                out.push(Violation::new(format!("circle {ci}"), "empty circle"));
                continue;
            }
            let n = c.len();
            if n == 1 {
                let s = c.seg(0);
                if s.corner.is_some() {
                    out.push(Violation::new(format!("circle {ci} segment 0"), "corner on a closed segment"));
                }
                if s.kind == SegKind::Cut {
                    out.push(Violation::new(format!("circle {ci} segment 0"), "closed CUT segment"));
                }
                continue;
            }
            for si in 0..n {
                let prev = c.seg(si + n - 1);
                let cur = c.seg(si);
                let loc = format!("circle {ci} segment {si}");
                match (prev.kind, cur.kind, cur.corner) {
                    (SegKind::M, SegKind::M, None) => {
                        out.push(Violation::new(loc, "adjacent mirrors without a corner"));
                    }
                    (SegKind::M, SegKind::M, Some(m)) if m < 2 => {
                        out.push(Violation::new(loc, "corner label < 2"));
                    }
                    (SegKind::M, SegKind::M, Some(_)) => {}
                    (_, _, Some(_)) => {
                        out.push(Violation::new(loc, "corner between non-mirror segments"));
                    }
                    (a, b, None) if a == b => {
                        out.push(Violation::new(loc, format!("adjacent {a} segments")));
                    }
                    _ => {}
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}
