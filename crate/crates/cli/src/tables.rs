//! The two tables of line bundles, recomputed as CSV.

use rayon::prelude::*;

use seshadri::{NsClass, SurfaceKind};

use crate::compute_record;

const TABLE1: [[i64; 3]; 21] = [
    [3, 2, -1],
    [3, 3, -1],
    [4, 3, -1],
    [5, 3, -1],
    [5, 4, -2],
    [7, 4, -2],
    [7, 6, -3],
    [10, 7, -4],
    [12, 9, -5],
    [17, 10, -6],
    [20, 11, -7],
    [32, 9, -7],
    [33, 9, -7],
    [34, 9, -7],
    [26, 14, -9],
    [73, 13, -11],
    [54, 14, -11],
    [45, 15, -11],
    [36, 16, -11],
    [32, 17, -11],
    [52, 30, -19],
];

const TABLE2: [[i64; 4]; 12] = [
    [1, 1, 1, 1],
    [1, 1, 0, 0],
    [2, 1, 0, 0],
    [0, 0, 1, 1],
    [1, 0, 1, 1],
    [1, 1, 1, 0],
    [2, 2, 1, -1],
    [-1, 1, 2, 2],
    [-1, 2, 1, 2],
    [4, 4, -1, -1],
    [4, 2, 3, -2],
    [8, 5, -1, -2],
];

fn render(kind: SurfaceKind, rows: &[&[i64]]) -> Result<String, seshadri::Error> {
    let records = rows
        .par_iter()
        .map(|a| compute_record(&NsClass::from_i64(kind, a)?))
        .collect::<Result<Vec<_>, _>>()?;
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let names = ["a1", "a2", "a3", "a4"];
    let mut header: Vec<&str> = names[..kind.rank()].to_vec();
    header.extend(["l_squared", "epsilon", "computing"]);
    if !kind.is_cm() {
        header.push("weakly_submaximal");
    }
    w.write_record(&header).expect("in-memory write");
    for rec in records {
        let mut row: Vec<String> = rec.coeffs.iter().map(|c| c.to_string()).collect();
        row.push(rec.l_squared.to_string());
        row.push(rec.epsilon.to_string());
        row.push(rec.witnesses.join(","));
        if let Some(weak) = rec.weak_submaximal {
            row.push(weak.join(","));
        }
        w.write_record(&row).expect("in-memory write");
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"))
}

pub fn table1() -> Result<String, seshadri::Error> {
    render(SurfaceKind::NoCm, &TABLE1.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
}

pub fn table2() -> Result<String, seshadri::Error> {
    render(SurfaceKind::CmGaussian, &TABLE2.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
}
