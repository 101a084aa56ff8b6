//! Text, JSON and CSV rendering. CSV uses LF line endings, no quoting, and
//! space-separated lists inside a field.

use std::fmt::Write;

use serde::Serialize;

use crate::reports::*;
use crate::Format;

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn list(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

fn cell_list(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn opt_csv<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

fn generator_line(gens: &[u64]) -> String {
    format!("S = <{}>\n", list(gens))
}

/// Right-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    debug_assert!(rows.iter().all(|r| r.len() == headers.len()));
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&parts.join("  "));
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    debug_assert!(rows.iter().all(|r| r.len() == headers.len()));
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Distance bounds below 1 carry no information; text tables show 1.
fn shown_goppa(d: i64) -> String {
    d.max(1).to_string()
}

pub fn analyze(r: &AnalyzeReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let headers = [
                "generators",
                "small_elements",
                "gaps",
                "conductor",
                "conductor_index",
                "genus",
                "is_arf",
                "is_symmetric",
                "is_hyperelliptic",
                "is_stable",
            ];
            let row = vec![
                cell_list(&r.generators),
                cell_list(&r.small_elements),
                cell_list(&r.gaps),
                r.conductor.to_string(),
                r.conductor_index.to_string(),
                r.genus.to_string(),
                r.is_arf.to_string(),
                r.is_symmetric.to_string(),
                r.is_hyperelliptic.to_string(),
                r.is_stable.to_string(),
            ];
            csv(&headers, &[row])
        }
        Format::Text => {
            let mut out = generator_line(&r.generators);
            let _ = writeln!(out, "small elements: {}", list(&r.small_elements));
            let _ = writeln!(out, "gaps: {{{}}}", list(&r.gaps));
            let _ = writeln!(out, "conductor c = {}", r.conductor);
            let _ = writeln!(out, "conductor index r = {}", r.conductor_index);
            let _ = writeln!(out, "genus g = {}", r.genus);
            let _ = writeln!(out, "arf: {}", r.is_arf);
            let _ = writeln!(out, "symmetric: {}", r.is_symmetric);
            let _ = writeln!(out, "hyperelliptic: {}", r.is_hyperelliptic);
            let _ = writeln!(out, "stable: {}", r.is_stable);
            out
        }
    }
}

pub fn order_bound(r: &OrderBoundReport, format: Format) -> String {
    let headers = ["l", "rho_l", "d_goppa", "d_ord"];
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|x| {
                    vec![
                        x.l.to_string(),
                        x.rho_l.to_string(),
                        x.d_goppa.to_string(),
                        x.d_ord.to_string(),
                    ]
                })
                .collect();
            csv(&headers, &rows)
        }
        Format::Text => {
            let mut out = generator_line(&r.generators);
            let _ = writeln!(out, "genus g = {}", r.genus);
            let _ = writeln!(out, "arf: {}", r.is_arf);
            match &r.breakpoints {
                Some(b) => {
                    let _ = writeln!(out, "breakpoints: {}", list(b));
                }
                None => out.push_str("breakpoints: - (not Arf; brute force only)\n"),
            }
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|x| {
                    vec![
                        x.l.to_string(),
                        x.rho_l.to_string(),
                        shown_goppa(x.d_goppa),
                        x.d_ord.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&headers, &rows));
            out
        }
    }
}

pub fn improved(r: &ImprovedReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let headers = [
                "d",
                "r_card",
                "r_card_formula",
                "r_set",
                "s_set",
                "l",
                "n",
                "dim_cl",
                "dim_improved",
                "delta",
                "codes_coincide",
                "exact",
            ];
            let dim = r.dimension.as_ref();
            let row = vec![
                r.d.to_string(),
                r.r_card.to_string(),
                opt_csv(r.r_card_formula),
                cell_list(&r.r_set),
                cell_list(&r.s_set),
                opt_csv(r.l),
                opt_csv(r.n),
                opt_csv(dim.map(|x| x.dim_cl)),
                opt_csv(dim.map(|x| x.dim_improved)),
                opt_csv(dim.map(|x| x.delta)),
                opt_csv(dim.map(|x| x.codes_coincide)),
                opt_csv(dim.map(|x| x.exact)),
            ];
            csv(&headers, &[row])
        }
        Format::Text => {
            let mut out = generator_line(&r.generators);
            if let Some(l) = r.l {
                let _ = writeln!(out, "l = {l}, d = d_ORD(l) = {}", r.d);
            } else {
                let _ = writeln!(out, "d = {}", r.d);
            }
            let _ = writeln!(out, "R_d = {{{}}}", list(&r.r_set));
            let _ = writeln!(out, "S_d = {{{}}}", list(&r.s_set));
            let _ = writeln!(out, "#R_d = {}", r.r_card);
            let _ = writeln!(out, "#R_d closed form = {}", opt(r.r_card_formula));
            match &r.dimension {
                Some(x) => {
                    let _ = writeln!(out, "n = {}", x.n);
                    let _ = writeln!(out, "dim C_l = {}", x.dim_cl);
                    let _ = writeln!(out, "dim improved = {}", x.dim_improved);
                    let _ = writeln!(out, "improvement = {}", x.delta);
                    let _ = writeln!(out, "codes coincide: {}", x.codes_coincide);
                    if !x.exact {
                        out.push_str("dimensions are lower bounds only\n");
                    }
                }
                None if r.l.is_some() => {
                    out.push_str("dimension improvement: - (needs an Arf semigroup)\n");
                }
                None => {}
            }
            out
        }
    }
}

pub fn tower(r: &TowerReport, format: Format) -> String {
    let p = &r.params;
    let r_idx = p.conductor_index as usize;
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows: Vec<Vec<String>> = (1..=r_idx)
                .map(|i| {
                    vec![
                        i.to_string(),
                        r.poles[i - 1].to_string(),
                        r.breakpoints
                            .get(i - 1)
                            .map_or(String::new(), u64::to_string),
                    ]
                })
                .collect();
            csv(&["i", "rho_i", "l_i"], &rows)
        }
        Format::Text => {
            let mut out = match r.q {
                Some(q) => format!("tower q = {q}, level n = {}\n", p.n),
                None => format!("inductive sequence, level n = {}\n", p.n),
            };
            let _ = writeln!(out, "conductor c = {}", p.conductor);
            let _ = writeln!(out, "conductor index r = {}", p.conductor_index);
            let _ = writeln!(out, "genus g = {}", p.genus);
            let _ = writeln!(out, "lambda: {}", list(&p.lambda));
            let _ = writeln!(out, "L: {}", list(&p.big_l));
            let _ = writeln!(out, "A_k: {}", list(&p.a_products));
            let _ = writeln!(out, "poles: {}", list(&r.poles));
            let label = if r.printed_form {
                "breakpoints (printed closed form)"
            } else {
                "breakpoints"
            };
            let _ = writeln!(out, "{label}: {}", list(&r.breakpoints));
            out
        }
    }
}

pub fn closure(r: &ClosureReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let headers = [
                "input_small_elements",
                "closure_small_elements",
                "closure_generators",
                "closure_conductor",
                "closure_genus",
                "added",
            ];
            let row = vec![
                cell_list(r.input.small_elements()),
                cell_list(r.closure.small_elements()),
                cell_list(&r.closure_generators),
                r.closure.conductor().to_string(),
                r.closure.genus().to_string(),
                cell_list(&r.added),
            ];
            csv(&headers, &[row])
        }
        Format::Text => {
            let mut out = format!(
                "input: {}\n",
                generator_line(&r.input_generators).trim_end()
            );
            let _ = writeln!(
                out,
                "closure: {}",
                generator_line(&r.closure_generators).trim_end()
            );
            let _ = writeln!(out, "small elements: {}", list(r.closure.small_elements()));
            let _ = writeln!(out, "conductor c = {}", r.closure.conductor());
            let _ = writeln!(out, "genus g = {}", r.closure.genus());
            let _ = writeln!(out, "added: {{{}}}", list(&r.added));
            out
        }
    }
}

pub fn profile(r: &ProfileReport, format: Format) -> String {
    let headers = [
        "l",
        "rho_l",
        "d_goppa",
        "d_ord",
        "dim_cl",
        "dim_exact",
        "r_card",
        "improvement",
    ];
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|x| {
                    vec![
                        x.l.to_string(),
                        x.rho_l.to_string(),
                        x.d_goppa.to_string(),
                        x.d_ord.to_string(),
                        x.dim_cl.to_string(),
                        x.dim_exact.to_string(),
                        x.r_card.to_string(),
                        opt_csv(x.improvement),
                    ]
                })
                .collect();
            csv(&headers, &rows)
        }
        Format::Text => {
            let mut out = generator_line(&r.generators);
            let _ = writeln!(out, "n = {}", r.n);
            let _ = writeln!(out, "arf: {}", r.is_arf);
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|x| {
                    vec![
                        x.l.to_string(),
                        x.rho_l.to_string(),
                        shown_goppa(x.d_goppa),
                        x.d_ord.to_string(),
                        x.dim_cl.to_string(),
                        x.dim_exact.to_string(),
                        x.r_card.to_string(),
                        opt(x.improvement),
                    ]
                })
                .collect();
            out.push_str(&table(&headers, &rows));
            out
        }
    }
}
