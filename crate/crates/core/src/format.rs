//! Text formats for instances and partitions.
//!
//! Instance: first line `n s` (vertex count, palette size), then for
//! `u = 0..n-1` one line with the `n-1-u` colours of `{u, v}`, `v > u`.
//! Partition: one line per cycle, `colour v1 ... vk`, with colour `-` for
//! cycles of length <= 1 and a lone `-` for the empty cycle.
//! Lines starting with `#` are comments in both formats.

use std::fmt::Write as _;

use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{Cycle, CyclePartition};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got {tok:?}"),
    })
}

pub fn write_instance(c: &EdgeColouring) -> String {
    let mut out = format!("{} {}\n", c.n(), c.palette().len());
    for u in 0..c.n().saturating_sub(1) {
        let row: Vec<String> = (u + 1..c.n()).map(|v| c.colour(u, v).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_instance(text: &str) -> Result<EdgeColouring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `n s`".into(),
        });
    }
    let n: usize = parse_num(head[0], hline)?;
    let s: usize = parse_num(head[1], hline)?;
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for u in 0..n.saturating_sub(1) {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: hline + u + 1,
            msg: format!("missing row for vertex {u}"),
        })?;
        let row = line
            .split_whitespace()
            .map(|t| parse_num::<u32>(t, lno).map(ColourId))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n - 1 - u {
            return Err(Error::Parse {
                line: lno,
                msg: format!("row {u} needs {} colours, found {}", n - 1 - u, row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            msg: "trailing data after the last row".into(),
        });
    }
    let c = EdgeColouring::from_upper_rows(n, &rows)?;
    if c.palette().len() != s {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {s} colours, rows use {}", c.palette().len()),
        });
    }
    Ok(c)
}

pub fn write_partition(p: &CyclePartition) -> String {
    let mut out = String::new();
    for cycle in &p.cycles {
        match cycle.colour() {
            Some(col) => write!(out, "{col}").unwrap(),
            None => out.push('-'),
        }
        for v in cycle.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_partition(text: &str) -> Result<CyclePartition> {
    content_lines(text)
        .map(|(lno, line)| {
            let mut toks = line.split_whitespace();
            let colour = match toks.next() {
                Some("-") | None => None,
                Some(t) => Some(ColourId(parse_num(t, lno)?)),
            };
            let vertices = toks.map(|t| parse_num(t, lno)).collect::<Result<Vec<usize>>>()?;
            Ok(Cycle::from_parts(vertices, colour))
        })
        .collect::<Result<Vec<_>>>()
        .map(CyclePartition::new)
}
