//! JSON renderings of families, pairs, truth tables, and reports.
//!
//! A family document lists its ground and its components in coordinate
//! order:
//!
//! ```json
//! {"ground": ["1", "2", "3"], "components": [["3"], ["1", "2", "3"]]}
//! ```
//!
//! A pair document wraps two families as `{"X": ..., "Y": ...}`. A truth
//! table document carries the width and the output column indexed by packed
//! input value; `"outputs"` is the canonical key and `"table"` (used by
//! witness output) is accepted interchangeably on input.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitword::BitWord;
use crate::boolfn::BooleanFunction;
use crate::family::{GroundSet, SetFamily};
use crate::refute::RefutationReport;
use crate::{Error, Limits, Result};

#[derive(Debug, Serialize, Deserialize)]
struct FamilyDoc {
    ground: Vec<String>,
    components: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PairDoc {
    #[serde(rename = "X")]
    x: FamilyDoc,
    #[serde(rename = "Y")]
    y: FamilyDoc,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    outputs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<String>>,
}

fn malformed(err: serde_json::Error) -> Error {
    Error::Document(err.to_string())
}

fn family_from_doc(doc: FamilyDoc) -> Result<SetFamily> {
    let ground = GroundSet::new(doc.ground)?;
    SetFamily::from_labels(ground, doc.components)
}

fn family_to_doc(family: &SetFamily) -> FamilyDoc {
    FamilyDoc {
        ground: family.ground().labels().to_vec(),
        components: family
            .components()
            .iter()
            .map(|c| c.iter().map(|&e| family.ground().label(e).to_owned()).collect())
            .collect(),
    }
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    family_from_doc(serde_json::from_str(text).map_err(malformed)?)
}

pub fn family_json(family: &SetFamily) -> String {
    serde_json::to_string_pretty(&family_to_doc(family)).expect("document serializes")
}

pub fn parse_pair(text: &str) -> Result<(SetFamily, SetFamily)> {
    let doc: PairDoc = serde_json::from_str(text).map_err(malformed)?;
    Ok((family_from_doc(doc.x)?, family_from_doc(doc.y)?))
}

pub fn pair_json(x: &SetFamily, y: &SetFamily) -> String {
    serde_json::to_string_pretty(&PairDoc {
        x: family_to_doc(x),
        y: family_to_doc(y),
    })
    .expect("document serializes")
}

pub fn parse_truth_table(text: &str) -> Result<BooleanFunction> {
    let doc: TableDoc = serde_json::from_str(text).map_err(malformed)?;
    let rows = match (doc.outputs, doc.table) {
        (Some(rows), None) | (None, Some(rows)) => rows,
        (Some(_), Some(_)) => {
            return Err(Error::Document(
                "give either \"outputs\" or \"table\", not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::Document(
                "missing the output column (\"outputs\" or \"table\")".into(),
            ))
        }
    };
    if doc.n == 0 || doc.n > crate::MAX_WIDTH {
        return Err(Error::InvalidWidth(doc.n));
    }
    let outputs = rows
        .iter()
        .map(|row| {
            let word: BitWord = row.parse()?;
            if word.width() != doc.n {
                return Err(Error::WidthMismatch {
                    left: doc.n,
                    right: word.width(),
                });
            }
            Ok(word)
        })
        .collect::<Result<Vec<_>>>()?;
    BooleanFunction::from_table(doc.n, outputs)
}

fn output_column(f: &BooleanFunction, limits: &Limits) -> Result<Vec<String>> {
    Ok(f.outputs(limits)?.iter().map(|w| w.to_string()).collect())
}

/// Truth table under the canonical `"outputs"` key.
pub fn truth_table_json(f: &BooleanFunction, limits: &Limits) -> Result<String> {
    let doc = TableDoc {
        n: f.width(),
        outputs: Some(output_column(f, limits)?),
        table: None,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("document serializes"))
}

/// Truth table under the `"table"` key used for order witnesses.
pub fn witness_table_json(f: &BooleanFunction, limits: &Limits) -> Result<String> {
    let doc = TableDoc {
        n: f.width(),
        outputs: None,
        table: Some(output_column(f, limits)?),
    };
    Ok(serde_json::to_string_pretty(&doc).expect("document serializes"))
}

/// Report document with witnesses keyed `"i1,i2[,pinned...]"`.
pub fn report_json(report: &RefutationReport) -> String {
    let witnesses: serde_json::Map<String, serde_json::Value> = report
        .witnesses
        .iter()
        .map(|(placement, word)| (placement.to_string(), json!(word.to_string())))
        .collect();
    let doc = json!({
        "m": report.m,
        "n": report.n,
        "pairs_checked": report.pairs_checked,
        "failures": report.failures.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "increasing": report.increasing,
        "contractive": report.contractive,
        "strictly_increasing": report.strictly_increasing,
        "witnesses": witnesses,
    });
    serde_json::to_string_pretty(&doc).expect("document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = r#"{
        "X": {"ground": ["1","2","3"], "components": [["3"], ["1","2","3"]]},
        "Y": {"ground": ["1","2","3"], "components": [["2","3"], ["1","3"]]}
    }"#;

    #[test]
    fn family_round_trip() {
        let (x, _) = parse_pair(PAIR).unwrap();
        let back = parse_family(&family_json(&x)).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn pair_parses_both_sides() {
        let (x, y) = parse_pair(PAIR).unwrap();
        assert_eq!(x.arity(), 2);
        assert_eq!(y.chi("3").unwrap().to_string(), "11");
        let back = parse_pair(&pair_json(&x, &y)).unwrap();
        assert_eq!(back, (x, y));
    }

    #[test]
    fn malformed_documents_are_reported() {
        assert!(matches!(parse_family("{"), Err(Error::Document(_))));
        assert!(matches!(
            parse_family(r#"{"ground": [], "components": []}"#),
            Err(Error::EmptyGround)
        ));
        assert!(matches!(
            parse_family(r#"{"ground": ["1"], "components": [["2"]]}"#),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn truth_table_accepts_both_keys() {
        let canonical = r#"{"n": 2, "outputs": ["00","01","01","11"]}"#;
        let alias = r#"{"n": 2, "table": ["00","01","01","11"]}"#;
        let limits = Limits::default();
        let f = parse_truth_table(canonical).unwrap();
        let g = parse_truth_table(alias).unwrap();
        assert!(f.agrees_with(&g, &limits).unwrap());
        assert!(parse_truth_table(r#"{"n": 2}"#).is_err());
        assert!(parse_truth_table(
            r#"{"n": 2, "outputs": ["00"], "table": ["00"]}"#
        )
        .is_err());
        assert!(matches!(
            parse_truth_table(r#"{"n": 2, "outputs": ["00","01","01"]}"#),
            Err(Error::TableLengthMismatch { .. })
        ));
        assert!(matches!(
            parse_truth_table(r#"{"n": 2, "outputs": ["00","01","01","111"]}"#),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn truth_table_round_trips_extensionally() {
        let limits = Limits::default();
        let cell = crate::boolfn::and_or_cell(3, 1, 3).unwrap();
        let via_outputs = parse_truth_table(&truth_table_json(&cell, &limits).unwrap()).unwrap();
        let via_table = parse_truth_table(&witness_table_json(&cell, &limits).unwrap()).unwrap();
        assert!(via_outputs.agrees_with(&cell, &limits).unwrap());
        assert!(via_table.agrees_with(&cell, &limits).unwrap());
    }

    #[test]
    fn report_document_shape() {
        let report = crate::refute::refute_arity(2, None, &Limits::default()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert_eq!(value["m"], 2);
        assert_eq!(value["n"], 12);
        assert_eq!(value["pairs_checked"], 66);
        assert_eq!(value["failures"].as_array().unwrap().len(), 0);
        assert_eq!(value["increasing"], true);
        assert_eq!(value["witnesses"].as_object().unwrap().len(), 66);
        assert!(value["witnesses"]["3,8"].is_string());
    }
}
