//! One-call analysis of a frame, producing a serializable result record.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::specht::{base_polytabloid, character, check_good, irreducible_quotient, specht_module, vanishing_witness};
use crate::tabloid::{check_useful, Frame, TabloidSpace};
use crate::weyl::ReflectionGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub field: Field,
    pub list_tabloids: bool,
    pub list_polytabloid: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            field: Field::Rational,
            list_tabloids: false,
            list_polytabloid: false,
        }
    }
}

/// Result record for one frame. Key order is fixed by field order, so
/// serializing a parsed record reproduces the input bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameRecord {
    #[serde(rename = "type")]
    pub system: String,
    pub rows: String,
    pub columns: String,
    pub useful: bool,
    pub good: bool,
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    #[serde(rename = "dim_S")]
    pub dim_s: Option<usize>,
    #[serde(rename = "dim_D")]
    pub dim_d: Option<usize>,
    /// Values as integers; over GF(p) these are residues in `[0, p)`.
    pub character: Option<Vec<i64>>,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytabloid_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tabloids: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytabloid: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Runs the full pipeline on `frame`: usefulness, goodness (over ℚ), S, D
/// and the character over `opts.field`. Non-useful frames get a witness
/// and the polytabloid's vanishing status instead of module data.
pub fn analyze(group: &ReflectionGroup, frame: Frame, opts: AnalyzeOptions) -> Result<FrameRecord> {
    let rs = group.root_system();
    let usefulness = check_useful(group, &frame)?;
    let rows = rs.format_root_list(&frame.row_roots());
    let columns = rs.format_root_list(&frame.col_roots());
    let space = TabloidSpace::new(group, frame)?;
    let field = opts.field;

    let mut record = FrameRecord {
        system: rs.cartan_type().to_string(),
        rows,
        columns,
        useful: usefulness.is_useful(),
        good: false,
        dim_m: space.len(),
        dim_s: None,
        dim_d: None,
        character: None,
        field: field.to_string(),
        witness: None,
        polytabloid_zero: None,
        tabloids: None,
        polytabloid: None,
        notes: Vec::new(),
    };

    if record.useful {
        record.good = check_good(&space)?;
        let module = specht_module(&space, field)?;
        let quotient = irreducible_quotient(&module)?;
        let chi = character(&space, &module)?;
        if record.good && field.characteristic() == 0 && module.dim() > 0 && !chi.norm(group)?.is_one() {
            return Err(Error::Violation("good system in characteristic 0 with reducible S".into()));
        }
        if !record.good {
            record.notes.push("not a good system; S need not be irreducible".into());
        }
        record.dim_s = Some(module.dim());
        record.dim_d = Some(quotient.dim_d);
        record.character = chi.to_i64();
    } else {
        record.witness = usefulness.witness().map(|w| group.format_word(w));
        record.polytabloid_zero = Some(base_polytabloid(&space, Field::Rational).is_zero());
        if let Some(w) = vanishing_witness(&space)? {
            record.notes.push(format!(
                "{} has order 2 and sign -1 in W(J) ∩ W(J'), forcing e = 0",
                group.format_word(w)
            ));
        }
    }

    if opts.list_tabloids {
        record.tabloids = Some(space.all_tabloids().into_iter().map(|t| space.display(t)).collect());
    }
    if opts.list_polytabloid {
        record.polytabloid = Some(base_polytabloid(&space, field).format(&space));
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::weyl::DEFAULT_CAP;

    fn group(label: &str) -> ReflectionGroup {
        ReflectionGroup::generate(RootSystem::new(label.parse().unwrap()).unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn g2_record() {
        let g2 = group("G2");
        let frame = Frame::parse(g2.root_system(), "01", "11,31").unwrap();
        let r = analyze(&g2, frame, AnalyzeOptions::default()).unwrap();
        assert!(r.useful && r.good);
        assert_eq!((r.dim_m, r.dim_s, r.dim_d), (6, Some(2), Some(2)));
        assert_eq!(r.character, Some(vec![2, 0, -1, -1, 2, 0]));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"type":"G2","rows":"01","columns":"11,31","useful":true"#));
        let back: FrameRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn b3_record() {
        let b3 = group("B3");
        let frame = Frame::parse(b3.root_system(), "100,122,001", "010,111,012").unwrap();
        let opts = AnalyzeOptions {
            list_polytabloid: true,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&b3, frame, opts).unwrap();
        assert!(!r.useful && !r.good);
        assert_eq!(r.witness.as_deref(), Some("t3 t2 t3 t1 t2 t3 t1 t2 t1"));
        assert_eq!(r.polytabloid_zero, Some(true));
        assert_eq!(r.polytabloid.as_deref(), Some("0"));
        assert_eq!(r.dim_s, None);
    }

    #[test]
    fn overlapping_frame_is_rejected() {
        let g2 = group("G2");
        let frame = Frame::parse(g2.root_system(), "01", "01").unwrap();
        assert!(matches!(analyze(&g2, frame, AnalyzeOptions::default()), Err(Error::Precondition(_))));
    }
}
