//! Count triangles and coefficient tables, and their text renderings.
//!
//! b-files list a triangle row by row (m ascending, k ascending) under a
//! single running index. The header records the layout so a b-file can be
//! read back into the same table.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::formulas::{anassa_pk_closed, count};
use crate::quasipoly::QuasiPolynomial;
use crate::{Error, Piece, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    Bfile,
    Json,
}

/// Exact counts `T(m, k)` for `m = 0..=m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub piece: Piece,
    /// Restricts anassa counts to placements with this many pieces strictly
    /// below the main diagonal.
    pub below: Option<usize>,
    pub rectangular: bool,
    pub rows: Vec<Vec<BigInt>>,
}

impl CountTable {
    /// Row `m` runs over `k = 0..=max_pieces(m)`, or up to the widest row
    /// when `rectangular` is set.
    pub fn compute(piece: Piece, m_max: usize, below: Option<usize>, rectangular: bool) -> Self {
        let rows = Self::widths(piece, m_max, rectangular)
            .into_iter()
            .enumerate()
            .map(|(m, width)| {
                (0..width)
                    .map(|k| match below {
                        Some(p) => anassa_pk_closed(m as i64, k, p),
                        None => count(piece, m as i64, k),
                    })
                    .collect()
            })
            .collect();
        CountTable {
            piece,
            below,
            rectangular,
            rows,
        }
    }

    fn widths(piece: Piece, m_max: usize, rectangular: bool) -> Vec<usize> {
        let natural: Vec<usize> = (0..=m_max).map(|m| piece.max_pieces(m) + 1).collect();
        if rectangular {
            let w = natural.iter().copied().max().unwrap_or(1);
            vec![w; m_max + 1]
        } else {
            natural
        }
    }

    pub fn m_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn render(&self, format: Format, offset: i64, sequence_id: Option<&str>) -> String {
        match format {
            Format::Csv => render_rows(&self.rows, ","),
            Format::Tsv => render_rows(&self.rows, "\t"),
            Format::Bfile => self.render_bfile(offset, sequence_id),
            Format::Json => self.render_json(sequence_id),
        }
    }

    fn describe(&self) -> String {
        match self.below {
            Some(p) => format!(
                "{}: k nonattacking pieces on an m x m board, exactly {p} strictly below the main diagonal",
                self.piece
            ),
            None => format!("{}: k nonattacking pieces on an m x m board", self.piece),
        }
    }

    fn render_bfile(&self, offset: i64, sequence_id: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(id) = sequence_id {
            let _ = writeln!(out, "# {id}");
        }
        let _ = writeln!(out, "# T(m, k) = {}", self.describe());
        let _ = writeln!(
            out,
            "# rows m = 0..{} in order, k ascending within each row; index n = {offset} + position",
            self.m_max()
        );
        let _ = writeln!(
            out,
            "# layout: piece={} m_max={} below={} rectangular={} offset={offset}",
            self.piece,
            self.m_max(),
            self.below.map_or("none".to_string(), |p| p.to_string()),
            self.rectangular
        );
        for (i, v) in self.rows.iter().flatten().enumerate() {
            let _ = writeln!(out, "{} {v}", offset + i as i64);
        }
        out
    }

    fn render_json(&self, sequence_id: Option<&str>) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            piece: Piece,
            #[serde(skip_serializing_if = "Option::is_none")]
            sequence_id: Option<&'a str>,
            below: Option<usize>,
            rows: Vec<Vec<String>>,
        }
        let doc = Doc {
            piece: self.piece,
            sequence_id,
            below: self.below,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
    }

    /// Reads back a b-file written by [`CountTable::render`].
    pub fn parse_bfile(text: &str) -> Result<Self> {
        let mut layout = None;
        let mut values: Vec<(usize, i64, BigInt)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            let bad = |reason: &str| Error::BFile {
                line: line_no,
                reason: reason.to_string(),
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(layout_text) = comment.trim().strip_prefix("layout:") {
                    layout = Some(Layout::parse(layout_text).map_err(|r| bad(&r))?);
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected `<index> <value>`"));
            };
            let i: i64 = i.parse().map_err(|_| bad("index is not an integer"))?;
            let v: BigInt = v.parse().map_err(|_| bad("value is not an integer"))?;
            values.push((line_no, i, v));
        }
        let layout = layout.ok_or(Error::BFile {
            line: 0,
            reason: "missing layout header".into(),
        })?;
        let widths = Self::widths(layout.piece, layout.m_max, layout.rectangular);
        let expected: usize = widths.iter().sum();
        if values.len() != expected {
            return Err(Error::BFile {
                line: values.last().map_or(0, |v| v.0),
                reason: format!("expected {expected} entries, found {}", values.len()),
            });
        }
        let mut it = values.into_iter();
        let mut rows = Vec::with_capacity(widths.len());
        let mut position = 0i64;
        for w in widths {
            let mut row = Vec::with_capacity(w);
            for _ in 0..w {
                let (line, i, v) = it.next().expect("length checked");
                if i != layout.offset + position {
                    return Err(Error::BFile {
                        line,
                        reason: format!("index {i} out of sequence"),
                    });
                }
                position += 1;
                row.push(v);
            }
            rows.push(row);
        }
        Ok(CountTable {
            piece: layout.piece,
            below: layout.below,
            rectangular: layout.rectangular,
            rows,
        })
    }
}

struct Layout {
    piece: Piece,
    m_max: usize,
    below: Option<usize>,
    rectangular: bool,
    offset: i64,
}

impl Layout {
    fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut piece = None;
        let mut m_max = None;
        let mut below = None;
        let mut rectangular = false;
        let mut offset = 0;
        for field in text.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or(format!("bad layout field `{field}`"))?;
            let err = |_| format!("bad value for `{key}`");
            match key {
                "piece" => piece = Some(value.parse::<Piece>().map_err(|e| e.to_string())?),
                "m_max" => m_max = Some(value.parse().map_err(err)?),
                "below" if value == "none" => below = None,
                "below" => below = Some(value.parse().map_err(err)?),
                "rectangular" => {
                    rectangular = value
                        .parse()
                        .map_err(|_| format!("bad value for `{key}`"))?
                }
                "offset" => offset = value.parse().map_err(err)?,
                _ => return Err(format!("unknown layout field `{key}`")),
            }
        }
        Ok(Layout {
            piece: piece.ok_or("layout lacks piece")?,
            m_max: m_max.ok_or("layout lacks m_max")?,
            below,
            rectangular,
            offset,
        })
    }
}

fn render_rows<T: ToString>(rows: &[Vec<T>], sep: &str) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(sep));
        out.push('\n');
    }
    out
}

/// Renders coefficient vectors, one line per residue class, as `num/den`
/// (integers without a denominator). b-files hold integers only.
pub fn render_coeffs(qp: &QuasiPolynomial, format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(render_rows(&qp.coeffs, ", ")),
        Format::Tsv => Ok(render_rows(&qp.coeffs, "\t")),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                piece: Piece,
                k: usize,
                period: usize,
                coeffs: Vec<Vec<String>>,
            }
            let doc = Doc {
                piece: qp.piece,
                k: qp.k,
                period: qp.period(),
                coeffs: qp
                    .coeffs
                    .iter()
                    .map(|r| r.iter().map(|c| c.to_string()).collect())
                    .collect(),
            };
            Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n")
        }
        Format::Bfile => Err(Error::Unsupported(
            "coefficients are rational; use csv, tsv or json",
        )),
    }
}
