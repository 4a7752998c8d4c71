//! Text, CSV and JSON renderings of the classification tables and
//! queries.
//!
//! The text table mirrors the usual grid layout (rows `n`, columns the
//! non-negative `nu` values); CSV and JSON list every admissible `(n, nu)`
//! pair including the negative columns, which is what the committed
//! golden file pins down.

use serde_json::{json, Value};

use cliffordlab_core::bits::bit_triple;
use cliffordlab_core::classify::{chessboard, classify_signature, cube, varlamov_abc, ChessboardEntry};
use cliffordlab_core::mod8;
use cliffordlab_core::Signature;

fn entries_up_to(max_n: u32) -> Vec<ChessboardEntry> {
    chessboard().into_iter().filter(|e| e.n <= max_n).collect()
}

/// CSV listing with columns `n,nu,division,size,doubled`, sorted by `n`
/// then `nu`.
pub fn table_csv(max_n: u32) -> String {
    let mut out = String::from("n,nu,division,size,doubled\n");
    for e in entries_up_to(max_n) {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.n,
            e.nu,
            e.class.division.label(),
            e.class.size,
            e.class.doubled
        ));
    }
    out
}

pub fn table_json(max_n: u32) -> Value {
    json!({
        "entries": entries_up_to(max_n)
            .iter()
            .map(|e| json!({
                "n": e.n,
                "nu": e.nu,
                "division": e.class.division.label(),
                "size": e.class.size,
                "doubled": e.class.doubled,
            }))
            .collect::<Vec<_>>()
    })
}

/// Grid over the non-negative `nu` columns, like the printed table.
pub fn table_text(max_n: u32) -> String {
    let width = 8usize;
    let mut out = String::new();
    out.push_str(&format!("{:>4} |", "n"));
    for nu in 0..=max_n as i64 {
        out.push_str(&format!("{:>width$}", nu));
    }
    out.push('\n');
    out.push_str(&format!("-----+{}\n", "-".repeat(width * (max_n as usize + 1))));
    for n in 0..=max_n {
        out.push_str(&format!("{n:>4} |"));
        for nu in 0..=n as i64 {
            if (n as i64 - nu) % 2 == 0 {
                let label = classify_signature(Signature::new(
                    ((n as i64 + nu) / 2) as u32,
                    ((n as i64 - nu) / 2) as u32,
                ))
                .grid_label();
                out.push_str(&format!("{label:>width$}"));
            } else {
                out.push_str(&" ".repeat(width));
            }
        }
        out.push('\n');
    }
    out
}

/// Count of populated cells in the text grid (used by tests).
pub fn table_text_entry_count(max_n: u32) -> usize {
    (0..=max_n).map(|n| n as usize / 2 + 1).sum()
}

pub fn cube_json() -> Value {
    json!({
        "vertices": cube()
            .iter()
            .map(|v| json!({
                "residue": v.residue,
                "digits": [v.digits.0, v.digits.1, v.digits.2],
                "division": v.division.label(),
            }))
            .collect::<Vec<_>>()
    })
}

pub fn cube_csv() -> String {
    let mut out = String::from("residue,nu2,nu1,nu0,division\n");
    for v in cube() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            v.residue, v.digits.0, v.digits.1, v.digits.2, v.division.label()
        ));
    }
    out
}

pub fn cube_text() -> String {
    let mut out = String::from("(nu2 nu1 nu0) -> division algebra\n");
    for v in cube() {
        out.push_str(&format!(
            "  ({} {} {})  nu = {}  ->  {}\n",
            v.digits.0, v.digits.1, v.digits.2, v.residue, v.division.label()
        ));
    }
    out
}

pub fn classify_text(sig: Signature) -> String {
    let class = classify_signature(sig);
    let nu = sig.nu();
    let mut out = format!(
        "signature (k, l) = ({}, {})   n = {}   nu = {} (mod 8: {})\n",
        sig.k,
        sig.l,
        sig.n(),
        nu,
        mod8(nu)
    );
    out.push_str(&format!("algebra: {}\n", class.label()));
    let bits = bit_triple(nu);
    out.push_str(&format!("nu bits (b0, b1, b2): {bits}\n"));
    if sig.n().is_multiple_of(2) {
        let (a, b, c) = varlamov_abc(sig.n(), nu).expect("n is even");
        out.push_str(&format!("varlamov (a, b, c): ({a}, {b}, {c})\n"));
    }
    out
}

pub fn classify_json(sig: Signature) -> Value {
    let class = classify_signature(sig);
    let nu = sig.nu();
    let bits = bit_triple(nu);
    let mut obj = json!({
        "k": sig.k,
        "l": sig.l,
        "n": sig.n(),
        "nu": nu,
        "nu_mod_8": mod8(nu),
        "division": class.division.label(),
        "size": class.size,
        "doubled": class.doubled,
        "nu_bits": [bits.b0.value(), bits.b1.value(), bits.b2.value()],
    });
    if sig.n().is_multiple_of(2) {
        let (a, b, c) = varlamov_abc(sig.n(), nu).expect("n is even");
        obj["varlamov"] = json!([a.value(), b.value(), c.value()]);
    }
    obj
}

pub fn classify_csv(sig: Signature) -> String {
    let class = classify_signature(sig);
    format!(
        "n,nu,division,size,doubled\n{},{},{},{},{}\n",
        sig.n(),
        sig.nu(),
        class.division.label(),
        class.size,
        class.doubled
    )
}

/// Candidate signatures `(k, l)` with `k + l = n` and `k - l = nu mod 8`.
pub fn recover_candidates(n: u32, residue: u8) -> Vec<Signature> {
    (0..=n)
        .map(|k| Signature::new(k, n - k))
        .filter(|sig| mod8(sig.nu()) == residue)
        .collect()
}

pub fn recover_text(n: u32, residue: u8, sources: &str) -> String {
    let candidates = recover_candidates(n, residue);
    let list = if candidates.is_empty() {
        "(none)".to_string()
    } else {
        candidates
            .iter()
            .map(|s| format!("({}, {})", s.k, s.l))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("n = {n}, {sources}\nnu mod 8: {residue}\ncandidate signatures: {list}\n")
}

pub fn recover_json(n: u32, residue: u8, sources: Value) -> Value {
    json!({
        "n": n,
        "inputs": sources,
        "nu_mod_8": residue,
        "signatures": recover_candidates(n, residue)
            .iter()
            .map(|s| json!({"k": s.k, "l": s.l}))
            .collect::<Vec<_>>(),
    })
}
