//! Text form of diagrams: `k>l: {v,...},{v,...}` where `v` is `3` (bottom)
//! or `3'` (top), optionally followed by a label `:-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{ColoredPartition, DiagramError, Partition, Row, Sign, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseDiagramError {
    #[error("malformed diagram header in `{0}`, expected `k>l:`")]
    Header(String),
    #[error("malformed vertex `{0}`")]
    Vertex(String),
    #[error("malformed block list near `{0}`")]
    Blocks(String),
    #[error("labels are not allowed in an uncoloured diagram: `{0}`")]
    UnexpectedLabel(String),
    #[error(transparent)]
    Invalid(#[from] DiagramError),
}

fn write_diagram(
    f: &mut fmt::Formatter<'_>,
    p: &Partition,
    labels: Option<&[Sign]>,
) -> fmt::Result {
    write!(f, "{}>{}:", p.k(), p.l())?;
    let blocks = p.blocks();
    for (i, block) in blocks.iter().enumerate() {
        f.write_str(if i == 0 { " {" } else { ",{" })?;
        for (j, v) in block.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            if let Some(z) = labels {
                if z[p.position(*v)] == Sign::Minus {
                    f.write_str(":-1")?;
                }
            }
        }
        f.write_str("}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_diagram(f, self, None)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_diagram(f, &self.base, Some(&self.labels))
    }
}

fn parse_vertex(tok: &str) -> Result<(Vertex, Sign), ParseDiagramError> {
    let bad = || ParseDiagramError::Vertex(tok.to_string());
    let (v, label) = match tok.split_once(':') {
        Some((v, lab)) => {
            let z = match lab.trim() {
                "1" | "+1" => Sign::Plus,
                "-1" => Sign::Minus,
                _ => return Err(bad()),
            };
            (v.trim(), z)
        }
        None => (tok.trim(), Sign::Plus),
    };
    let (digits, row) = match v.strip_suffix('\'') {
        Some(d) => (d.trim(), Row::Top),
        None => (v, Row::Bottom),
    };
    let index: usize = digits.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok((Vertex { row, index }, label))
}

type Parsed = (usize, usize, Vec<Vec<(Vertex, Sign)>>);

fn parse_diagram(s: &str) -> Result<Parsed, ParseDiagramError> {
    let s = s.trim();
    let header_err = || ParseDiagramError::Header(s.to_string());
    let (head, rest) = s.split_once(':').ok_or_else(header_err)?;
    let (k, l) = head.split_once('>').ok_or_else(header_err)?;
    let k: usize = k.trim().parse().map_err(|_| header_err())?;
    let l: usize = l.trim().parse().map_err(|_| header_err())?;
    let mut blocks = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| ParseDiagramError::Blocks(rest.to_string()))?;
        let close = body
            .find('}')
            .ok_or_else(|| ParseDiagramError::Blocks(rest.to_string()))?;
        let inner = body[..close].trim();
        if inner.is_empty() {
            return Err(DiagramError::EmptyBlock.into());
        }
        blocks.push(
            inner
                .split(',')
                .map(parse_vertex)
                .collect::<Result<Vec<_>, _>>()?,
        );
        rest = body[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(ParseDiagramError::Blocks(",".to_string()));
            }
        }
    }
    Ok((k, l, blocks))
}

impl FromStr for ColoredPartition {
    type Err = ParseDiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (k, l, blocks) = parse_diagram(s)?;
        let base = Partition::new(k, l, blocks.iter().map(|b| b.iter().map(|(v, _)| *v)))?;
        let mut labels = vec![Sign::Plus; k + l];
        for (v, z) in blocks.iter().flatten() {
            labels[base.position(*v)] = *z;
        }
        Ok(ColoredPartition::canon(base, labels))
    }
}

impl FromStr for Partition {
    type Err = ParseDiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (k, l, blocks) = parse_diagram(s)?;
        if blocks.iter().flatten().any(|(_, z)| *z == Sign::Minus) {
            return Err(ParseDiagramError::UnexpectedLabel(s.to_string()));
        }
        Ok(Partition::new(
            k,
            l,
            blocks.iter().map(|b| b.iter().map(|(v, _)| *v)),
        )?)
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(Partition);
serde_via_text!(ColoredPartition);

#[cfg(test)]
mod tests {
    use super::super::colored_classes;
    use super::*;

    #[test]
    fn display_examples() {
        let p: Partition = "3>4: {1,3,1'},{2,2',3',4'}".parse().unwrap();
        assert_eq!(p.to_string(), "3>4: {1,3,1'},{2,2',3',4'}");
        assert_eq!(Partition::empty().to_string(), "0>0:");
        let c: ColoredPartition = "2>0: {1:-1,2}".parse().unwrap();
        assert_eq!(c.to_string(), "2>0: {1,2:-1}");
    }

    #[test]
    fn whitespace_and_order_tolerant() {
        let a: Partition = " 2>2:{2', 1} , {2,1'} ".parse().unwrap();
        assert_eq!(a.to_string(), "2>2: {1,2'},{2,1'}");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            "2:".parse::<Partition>(),
            Err(ParseDiagramError::Header(_))
        ));
        assert!(matches!(
            "1>0: {x}".parse::<Partition>(),
            Err(ParseDiagramError::Vertex(_))
        ));
        assert!(matches!(
            "1>0: {1:-1}".parse::<Partition>(),
            Err(ParseDiagramError::UnexpectedLabel(_))
        ));
        assert_eq!(
            "2>0: {1}".parse::<Partition>(),
            Err(ParseDiagramError::Invalid(DiagramError::MissingVertex(
                Vertex::bottom(2)
            )))
        );
        assert!("1>0: {1},".parse::<Partition>().is_err());
        assert!("1>0: {1} {".parse::<Partition>().is_err());
    }

    #[test]
    fn round_trip_all_small_classes() {
        for k in 0..=2 {
            for l in 0..=2 {
                for c in colored_classes(k, l) {
                    let s = c.to_string();
                    let back: ColoredPartition = s.parse().unwrap();
                    assert_eq!(back, c);
                    let json = serde_json::to_string(&c).unwrap();
                    assert_eq!(serde_json::from_str::<ColoredPartition>(&json).unwrap(), c);
                }
            }
        }
    }
}
