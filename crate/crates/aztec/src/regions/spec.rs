//! Parsing of region specification strings for the CLI.
//!
//! Examples: `aztec-triangle:n=5`, `cruciform:m=9,n=6,a=3,b=4,c=5,d=2`,
//! `near-cruciform:m=3,n=3,a=1,b=1,c=1,d=1`, `trimmed-ar:m=2,n=2,T=1;3`,
//! `di-ar:w=9,l=6,bot=2,top=2,rm=1`, `aztec-diamond:n=1`,
//! `half-aztec-diamond:n=0`, `half-square:n=10`.

use std::collections::BTreeMap;
use std::str::FromStr;

use super::*;

/// Tagged parameter record naming one graph family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionSpec {
    AztecTriangle { n: i64 },
    AztecDiamond { n: i64 },
    HalfAztecDiamond { n: i64 },
    HalfSquare { side: i64 },
    Cruciform { m: i64, n: i64, a: i64, b: i64, c: i64, d: i64 },
    NearlyCruciform { m: i64, n: i64, a: i64, b: i64, c: i64, d: i64 },
    TrimmedAztecRectangle { m: i64, n: i64, t: Vec<i64> },
    DoublyIntrudedAztecRectangle { w: i64, l: i64, bot: i64, top: i64, rm: bool },
}

impl RegionSpec {
    pub fn build(&self) -> Result<EmbeddedPlanarGraph, RegionError> {
        match self {
            RegionSpec::AztecTriangle { n } => aztec_triangle(*n),
            RegionSpec::AztecDiamond { n } => aztec_diamond(*n),
            RegionSpec::HalfAztecDiamond { n } => half_aztec_diamond(*n),
            RegionSpec::HalfSquare { side } => half_square(*side),
            RegionSpec::Cruciform { m, n, a, b, c, d } => cruciform(*m, *n, *a, *b, *c, *d),
            RegionSpec::NearlyCruciform { m, n, a, b, c, d } => {
                nearly_cruciform(*m, *n, *a, *b, *c, *d)
            }
            RegionSpec::TrimmedAztecRectangle { m, n, t } => {
                trimmed_aztec_rectangle(*m, *n, t)
            }
            RegionSpec::DoublyIntrudedAztecRectangle { w, l, bot, top, rm } => {
                doubly_intruded_aztec_rectangle(*w, *l, *bot, *top, *rm)
            }
        }
    }
}

fn parse_fields(s: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    if s.is_empty() {
        return Ok(map);
    }
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn get_int(map: &BTreeMap<String, String>, key: &str) -> Result<i64, String> {
    map.get(key)
        .ok_or_else(|| format!("missing parameter {key}"))?
        .parse()
        .map_err(|_| format!("parameter {key} is not an integer"))
}

impl FromStr for RegionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let f = parse_fields(rest)?;
        match family {
            "aztec-triangle" => Ok(RegionSpec::AztecTriangle { n: get_int(&f, "n")? }),
            "aztec-diamond" => Ok(RegionSpec::AztecDiamond { n: get_int(&f, "n")? }),
            "half-aztec-diamond" => Ok(RegionSpec::HalfAztecDiamond { n: get_int(&f, "n")? }),
            "half-square" => Ok(RegionSpec::HalfSquare { side: get_int(&f, "n")? }),
            "cruciform" | "near-cruciform" => {
                let (m, n) = (get_int(&f, "m")?, get_int(&f, "n")?);
                let (a, b) = (get_int(&f, "a")?, get_int(&f, "b")?);
                let (c, d) = (get_int(&f, "c")?, get_int(&f, "d")?);
                if family == "cruciform" {
                    Ok(RegionSpec::Cruciform { m, n, a, b, c, d })
                } else {
                    Ok(RegionSpec::NearlyCruciform { m, n, a, b, c, d })
                }
            }
            "trimmed-ar" => {
                let t: Result<Vec<i64>, _> = f
                    .get("T")
                    .ok_or("missing parameter T")?
                    .split(';')
                    .map(|x| x.trim().parse::<i64>())
                    .collect();
                Ok(RegionSpec::TrimmedAztecRectangle {
                    m: get_int(&f, "m")?,
                    n: get_int(&f, "n")?,
                    t: t.map_err(|_| "T must be integers separated by ;")?,
                })
            }
            "di-ar" => Ok(RegionSpec::DoublyIntrudedAztecRectangle {
                w: get_int(&f, "w")?,
                l: get_int(&f, "l")?,
                bot: get_int(&f, "bot")?,
                top: get_int(&f, "top")?,
                rm: get_int(&f, "rm")? != 0,
            }),
            other => Err(format!("unknown region family {other:?}")),
        }
    }
}
