use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::types::{Junction, OrbifoldError, Orbifold2, SegKind};

/// An exact rational Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedChi(pub Ratio<i64>);

impl WeightedChi {
    pub fn new(num: i64, den: i64) -> Self {
        WeightedChi(Ratio::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        WeightedChi(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        WeightedChi::integer(0)
    }

    pub fn is_positive(&self) -> bool {
        self.0 > Ratio::from_integer(0)
    }

    pub fn is_negative(&self) -> bool {
        self.0 < Ratio::from_integer(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Ratio::from_integer(0)
    }
}

impl fmt::Display for WeightedChi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl std::str::FromStr for WeightedChi {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("not a rational: {s:?}");
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| bad())?;
                let d = d.trim().parse::<i64>().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(WeightedChi::new(n, d))
            }
            None => s.trim().parse::<i64>().map(WeightedChi::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for WeightedChi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WeightedChi {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::ops::Add for WeightedChi {
    type Output = WeightedChi;
    fn add(self, rhs: WeightedChi) -> WeightedChi {
        WeightedChi(self.0 + rhs.0)
    }
}

impl std::ops::Sub for WeightedChi {
    type Output = WeightedChi;
    fn sub(self, rhs: WeightedChi) -> WeightedChi {
        WeightedChi(self.0 - rhs.0)
    }
}

impl std::ops::Mul<i64> for WeightedChi {
    type Output = WeightedChi;
    fn mul(self, rhs: i64) -> WeightedChi {
        WeightedChi(self.0 * rhs)
    }
}

/// Coarse class of the orbifold fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pi1Class {
    Finite,
    #[serde(rename = "VC")]
    VirtuallyCyclic,
    #[serde(rename = "NotVC")]
    NotVirtuallyCyclic,
}

impl fmt::Display for Pi1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pi1Class::Finite => "Finite",
            Pi1Class::VirtuallyCyclic => "VC",
            Pi1Class::NotVirtuallyCyclic => "NotVC",
        })
    }
}

fn junction_weight(j: Junction) -> Ratio<i64> {
    match j {
        Junction::Corner(m) => Ratio::new(1, 2 * i64::from(m.max(1))),
        Junction::ReflectorEnd => Ratio::new(1, 2),
        Junction::Plain => Ratio::from_integer(1),
    }
}

fn edge_weight(kind: SegKind) -> Ratio<i64> {
    match kind {
        SegKind::M => Ratio::new(1, 2),
        _ => Ratio::from_integer(1),
    }
}

impl Orbifold2 {
    /// Stabilizer-weighted cell count: χ(|X|) minus the cone defects plus,
    /// for each circle, weighted junctions minus weighted segments.
    pub fn euler_char(&self) -> Result<WeightedChi, OrbifoldError> {
        if let Err(v) = self.validate() {
            return Err(OrbifoldError::Invalid(v[0].to_string()));
        }
        Ok(self.euler_char_unchecked())
    }

    pub(crate) fn euler_char_unchecked(&self) -> WeightedChi {
        let mut chi = Ratio::from_integer(self.underlying_chi());
        for &p in &self.cone_points {
            chi -= Ratio::from_integer(1) - Ratio::new(1, i64::from(p));
        }
        for c in &self.circles {
            if c.is_closed_segment() {
                continue;
            }
            for i in 0..c.len() {
                if let Some(j) = c.junction_before(i) {
                    chi += junction_weight(j);
                }
                chi -= edge_weight(c.kind(i));
            }
        }
        WeightedChi(chi)
    }

    /// Finite / virtually cyclic / not virtually cyclic, read off the sign of χ.
    pub fn pi1_class(&self) -> Result<Pi1Class, OrbifoldError> {
        if !self.has_boundary() {
            return Err(OrbifoldError::Closed);
        }
        let chi = self.euler_char()?;
        Ok(if chi.is_positive() {
            Pi1Class::Finite
        } else if chi.is_zero() {
            Pi1Class::VirtuallyCyclic
        } else {
            Pi1Class::NotVirtuallyCyclic
        })
    }
}
