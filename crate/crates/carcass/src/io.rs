//! Map files: a JSON object with a single "breakpoints" array of
//! [x, y] pairs, coordinates written as rational strings like "5/8".

use crate::error::{Error, Result};
use crate::plmap::PlMap;
use crate::rational::{format_rational, parse_rational};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    breakpoints: Vec<(String, String)>,
}

pub fn map_from_json(text: &str) -> Result<PlMap> {
    let file: MapFile = serde_json::from_str(text)
        .map_err(|e| Error::MalformedMapFile { detail: e.to_string() })?;
    let points = file
        .breakpoints
        .iter()
        .map(|(x, y)| Ok((parse_rational(x)?, parse_rational(y)?)))
        .collect::<Result<Vec<_>>>()?;
    PlMap::new(points)
}

pub fn map_to_json(map: &PlMap) -> String {
    let file = MapFile {
        breakpoints: map
            .breakpoints()
            .iter()
            .map(|(x, y)| (format_rational(x), format_rational(y)))
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("string pairs always serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::unimodal::CarcassMap;

    #[test]
    fn round_trip() {
        for map in [
            CarcassMap::tent().map().clone(),
            PlMap::identity(),
            PlMap::new(vec![
                (rat_int(0), rat_int(0)),
                (rat(1, 3), rat_int(1)),
                (rat_int(1), rat_int(0)),
            ])
            .unwrap(),
        ] {
            assert_eq!(map_from_json(&map_to_json(&map)).unwrap(), map);
        }
    }

    #[test]
    fn parses_and_normalizes() {
        let map = map_from_json(
            r#"{"breakpoints": [["0", "0"], ["2/4", "1"], ["1", "0/7"]]}"#,
        )
        .unwrap();
        assert_eq!(&map, CarcassMap::tent().map());
        assert!(map_to_json(&map).contains("\"1/2\""));
    }

    #[test]
    fn rejects_bad_json_with_location() {
        match map_from_json("{\"breakpoints\": [[\"0\", \"0\"],\n  ]}") {
            Err(Error::MalformedMapFile { detail }) => {
                assert!(detail.contains("line 2"), "missing location: {detail}");
            }
            other => panic!("expected a malformed file error, got {other:?}"),
        }
        assert!(matches!(
            map_from_json(r#"{"breakpoints": [], "extra": 1}"#),
            Err(Error::MalformedMapFile { .. })
        ));
    }

    #[test]
    fn rejects_bad_coordinates() {
        assert!(matches!(
            map_from_json(r#"{"breakpoints": [["0", "0"], ["1", "1/0"]]}"#),
            Err(Error::MalformedMapFile { .. })
        ));
        assert!(matches!(
            map_from_json(r#"{"breakpoints": [["0", "0"], ["0.5", "1"], ["1", "0"]]}"#),
            Err(Error::MalformedMapFile { .. })
        ));
        // structurally valid JSON, invalid map
        assert!(matches!(
            map_from_json(r#"{"breakpoints": [["1/4", "0"], ["1", "1"]]}"#),
            Err(Error::InvalidBreakpoints { .. })
        ));
    }
}
