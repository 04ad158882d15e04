//! The embedded tables, as printed (brackets mark the three segments of a
//! small-cancellation subdivision).

use super::Status;

pub(super) struct Row {
    pub id: &'static str,
    pub text: &'static str,
    /// (a,b,c) of the printed trace polynomial, when one is printed
    pub tau: Option<(u8, u8, u8)>,
    pub part: Option<u8>,
    pub scc: Option<bool>,
    pub status: Status,
    pub source: &'static str,
    /// the literal table text when it differs from the stored word
    pub printed_as: Option<&'static str>,
}

const fn row(id: &'static str, text: &'static str, tau: Option<(u8, u8, u8)>, status: Status, source: &'static str) -> Row {
    Row { id, text, tau, part: None, scc: None, status, source, printed_as: None }
}

const SC_SOURCE: &str = "small-cancellation certificate (computed)";
const OPEN_SOURCE: &str = "no known result; no certificate";

pub(super) fn table_332() -> Vec<Row> {
    use Status::*;
    // Row 18 is printed as a word whose trace polynomial is not a target
    // form; the stored word is the lift of the (2,3) word 18.
    let mut rows = vec![
        row("1", "xy", Some((1, 0, 0)), Finite { order: 12 }, "classical; order cited"),
        row("2", "xyxy^2", Some((0, 0, 1)), Finite { order: 180 }, "classical; order cited"),
        row("3", "xyx^2y^2", Some((1, 1, 0)), Finite { order: 288 }, "classical; order cited"),
        row("4", "xyxyx^2y^2", Some((1, 0, 1)), FreeSubgroupCited, "[LR]"),
        row("5", "xyxyx^2yx^2y^2", Some((0, 0, 2)), FreeSubgroupCited, "[LR]"),
        row("6", "xyxy^2x^2yx^2y^2", Some((1, 1, 1)), FreeSubgroupCited, "[LR]"),
        row("7", "xyxyx^2y^2x^2yxy^2", Some((1, 0, 2)), Large, "[Will]; GAP coset computation"),
        row("8", "xyxyx^2y^2x^2yx^2yxy^2", Some((0, 0, 3)), Large, "[Will]; via the (2,3) word 8"),
        row("9", "(xyxyx)(y^2x^2y^2x)(yx^2yx^2y^2)", Some((1, 0, 3)), FreeViaSC, SC_SOURCE),
        row("10", "(xyxy)(x^2y^2x^2yx)(y^2x^2yx^2y^2xy^2)", Some((1, 1, 3)), FreeViaSC, SC_SOURCE),
        row("11", "(xyxy)(x^2y^2x^2yx^2)(y^2xy^2xyx^2y^2)", Some((1, 1, 3)), FreeViaSC, SC_SOURCE),
        row("12", "(xyxy)(x^2y^2xy^2x^2y^2)(xyx^2yx^2y^2)", Some((1, 1, 3)), FreeViaSC, SC_SOURCE),
        row("13", "(xyxy)(x^2y^2x^2y^2)(xy^2x^2y^2xyx^2yx^2y^2)", Some((1, 0, 4)), FreeViaSC, SC_SOURCE),
        row("14", "(xyxy)(x^2y^2xy^2x^2yxy)(x^2y^2x^2yx^2y^2xy^2)", Some((1, 1, 4)), FreeViaSC, SC_SOURCE),
        row("15", "(xyxy)(x^2y^2x^2y^2)(xy^2x^2yx^2y^2x^2yxyx^2y^2xy^2)", Some((1, 0, 5)), FreeViaSC, SC_SOURCE),
        row("16", "(xyxyx^2y^2)(x^2yxy^2xy^2x^2y^2x^2)(yxy^2xyx^2yx^2y^2x^2yxy^2)", Some((1, 1, 6)), FreeViaSC, SC_SOURCE),
        row("17", "(xyxyx^2y^2x^2)(yxy^2xyx^2yx^2y^2x^2yxy^2x)(y^2x^2y^2x^2yxy^2)", Some((1, 1, 6)), FreeViaSC, SC_SOURCE),
        Row {
            printed_as: Some("(xyxy^2x^2yx)(yx^2y^2xy^2xyxy^2)(x^2y^2x^2yx^2yxy^2xyxy)"),
            ..row("18", "xyx^2y^2x^2yxy^2x^2yx^2y^2xy^2xyxy^2x^2y^2x^2yx^2yxy^2xy", Some((1, 1, 6)), FreeViaSC, SC_SOURCE)
        },
        row("19", "(xyx^2y^2x^2yx^2)(y^2xy^2xyxy^2x^2)(y^2x^2yxy^2x^2yx^2yxy^2xy)", Some((1, 1, 6)), FreeViaSC, SC_SOURCE),
    ];
    for r in &mut rows {
        r.scc = Some(r.status == FreeViaSC);
    }
    rows
}

pub(super) fn table_232() -> Vec<Row> {
    use Status::*;
    let part1 = vec![
        row("1a", "uvuv", Some((0, 1, 0)), Finite { order: 24 }, "[HMT, LRS]"),
        row("1b", "uvuv^2", Some((1, 0, 0)), Finite { order: 24 }, "[HMT, LRS]"),
        row("2", "uvuvuvuv^2", Some((0, 0, 1)), Finite { order: 120 }, "[HMT, LRS]"),
        row("3", "uvuvuv^2uv^2", Some((1, 1, 0)), Finite { order: 576 }, "[HMT, LRS]"),
        row("4a", "uvuvuvuvuv^2uv^2", Some((0, 1, 1)), Finite { order: 2880 }, "[HMT, LRS]"),
        row("4b", "uvuvuv^2uv^2uvuv^2", Some((1, 0, 1)), Large, "[Will]; index-2 subgroup is the (3,3) group 4"),
        row(
            "5",
            "uvuvuvuvuv^2uv^2uvuv^2",
            Some((0, 0, 2)),
            AbelianByFinite,
            "GAP computation: normal closure of (uv)^10 is free abelian of rank 6 and index 7680",
        ),
        row("6", "uvuvuvuv^2uv^2uvuv^2uv^2", Some((1, 1, 1)), Finite { order: 424673280 }, "[HMT, LRS]"),
        row(
            "8",
            "uvuvuvuvuv^2uv^2uv^2uvuv^2uvuvuv^2",
            Some((0, 0, 3)),
            Large,
            "GAP computation: normal closure of (uv)^5 maps onto a free group of rank 3",
        ),
    ];
    let part2 = [
        ("9b", "(uvuvuvuv)(uv^2uv^2uvuv^2uv^2)(uvuv^2uvuv^2uv^2)"),
        ("10", "(uvuvuvuv)(uv^2uv^2uv^2uvuv)(uv^2uv^2uvuv^2uv^2uvuv^2)"),
        ("11", "(uvuvuvuv)(uv^2uv^2uv^2uvuv^2)(uv^2uvuv^2uvuvuv^2uv^2)"),
        ("13b", "(uvuvuvuv)(uv^2uv^2uvuv^2uv^2)(uv^2uvuv^2uvuvuv^2uvuv^2uv^2)"),
        ("14a", "(uvuvuvuv)(uv^2uv^2uvuv^2uv^2uvuv)(uvuv^2uv^2uv^2uvuv^2uv^2uvuv^2)"),
        ("14b", "(uvuvuvuv)(uv^2uv^2uv^2uvuv^2uv^2)(uvuv^2uv^2uvuvuvuv^2uv^2uvuv^2)"),
        ("15b", "(uvuvuvuv)(uv^2uv^2uvuv^2uv^2uv)(uv^2uv^2uv^2uvuvuvuv^2uvuv^2uv^2uvuv^2)"),
        ("16", "(uvuvuvuvuv^2uv^2)(uv^2uvuvuv^2uvuv^2uv^2uv^2uv^2)(uvuvuv^2uvuvuv^2uvuv^2uv^2uv^2uvuvuv^2)"),
        ("17", "(uvuvuvuvuv^2uv^2uv^2)(uvuvuv^2uvuvuv^2uvuv^2uv^2uv^2uvuvuv^2uv)(uv^2uv^2uv^2uv^2uvuvuv^2)"),
        ("18", "(uv^2uv^2uv^2uvuvuv^2uv^2)(uvuv^2uv^2uvuv^2uvuvuvuv^2)(uv^2uv^2uv^2uvuv^2uvuvuv^2uvuvuvuv)"),
        ("19", "(uvuv^2uvuvuv^2uvuvuvuv)(uv^2uv^2uv^2uvuv^2uv^2uvuv^2uvuvuv)(uv^2uv^2uv^2uv^2uvuvuv^2uv^2)"),
    ];
    // Rows 12 and 13a are printed with syllables u^2 and v u^2 that cannot
    // occur in a word of Z2*Z3; the stored words are the corresponding
    // exceptional words written in run notation.
    let part3 = [
        ("7a", "uvuvuvuvuv^2uv^2uv^2uvuvuv^2", None),
        ("7b", "uvuvuvuv^2uv^2uvuv^2uv^2uvuv^2", None),
        ("9a", "uvuvuvuvuvuv^2uv^2uv^2uvuvuv^2uvuv^2uv^2", None),
        (
            "12",
            "(uv)^4(uv^2)^2uv(uv^2)^3(uv)^2uv^2uv(uv^2)^2",
            Some("uvuvuvuvuv^2vu^2uvuv^2uv^2uv^2uvuvuv^2uvuv^2uv^2"),
        ),
        (
            "13a",
            "(uv)^4(uv^2)^4uv(uv^2)^3(uv)^2uv^2uv(uv^2)^2",
            Some("uvuvuvuvuv^2uv^2uv^2uv^2uvu^2v^2uv^2uvuvuv^2uvuv^2uv^2"),
        ),
        ("15a", "uvuvuvuvuv^2uv^2uv^2uv^2uvuv^2uv^2uvuv^2uv^2uv^2uvuvuvuv^2uv^2uvuv^2", None),
    ];
    let mut rows = Vec::new();
    for mut r in part1 {
        r.part = Some(1);
        rows.push(r);
    }
    for (id, text) in part2 {
        rows.push(Row { part: Some(2), ..row(id, text, None, FreeViaSC, SC_SOURCE) });
    }
    for (id, text, printed_as) in part3 {
        rows.push(Row { part: Some(3), printed_as, ..row(id, text, None, Open, OPEN_SOURCE) });
    }
    rows
}

/// Pair lists of the published search listings, keyed by the form
/// (a,b,c) of the (2,3) case.
pub(super) fn listing_data() -> Vec<(&'static str, (u8, u8, u8), Vec<Vec<u32>>)> {
    let mut out = Vec::new();
    let a5: [&[&[u32]]; 3] = [&[&[3, 1]], &[&[4, 1, 1, 2]], &[&[4, 3, 1, 1, 2, 1]]];
    for (c, lists) in a5.iter().enumerate() {
        out.push(("A5Poly", (0, 0, c as u8 + 1), lists.iter().map(|l| l.to_vec()).collect()));
    }
    let a4a5: [&[&[u32]]; 6] = [
        &[&[2, 1, 1, 2]],
        &[&[3, 1, 1, 2, 1, 2]],
        &[&[4, 2, 1, 1, 1, 2, 1, 2]],
        &[&[4, 2, 1, 1, 2, 1, 1, 3, 1, 2]],
        &[&[4, 2, 1, 2, 1, 3, 3, 1, 1, 2, 1, 1]],
        &[],
    ];
    for (c, lists) in a4a5.iter().enumerate() {
        out.push(("A4A5Poly", (1, 0, c as u8 + 1), lists.iter().map(|l| l.to_vec()).collect()));
    }
    let s4a5: [&[&[u32]]; 6] = [
        &[&[4, 2]],
        &[&[4, 3, 2, 1]],
        &[&[5, 3, 2, 1, 1, 2]],
        &[&[4, 4, 2, 1, 1, 2, 3, 1]],
        &[&[4, 4, 1, 1, 2, 3, 3, 1, 2, 1]],
        &[],
    ];
    for (c, lists) in s4a5.iter().enumerate() {
        out.push(("S4A5Poly", (0, 1, c as u8 + 1), lists.iter().map(|l| l.to_vec()).collect()));
    }
    let a4s4a5: [&[&[u32]]; 9] = [
        &[&[3, 2, 1, 2]],
        &[],
        &[&[4, 2, 1, 1, 2, 3, 1, 2], &[4, 3, 1, 2, 1, 1, 2, 2], &[4, 3, 2, 2, 1, 2, 1, 1]],
        &[&[4, 2, 1, 2, 3, 3, 1, 2, 1, 1], &[4, 3, 1, 2, 1, 2, 3, 2, 1, 1]],
        &[],
        &[
            &[4, 2, 1, 2, 1, 1, 3, 2, 1, 4, 3, 2, 1, 1],
            &[4, 1, 1, 2, 3, 1, 1, 2, 1, 2, 3, 4, 1, 2],
            &[4, 3, 1, 1, 2, 1, 2, 2, 3, 4, 1, 2, 1, 1],
            &[4, 3, 1, 1, 2, 1, 3, 4, 1, 2, 1, 1, 2, 2],
        ],
        &[],
        &[],
        &[],
    ];
    for (c, lists) in a4s4a5.iter().enumerate() {
        out.push(("A4S4A5Poly", (1, 1, c as u8 + 1), lists.iter().map(|l| l.to_vec()).collect()));
    }
    out
}
