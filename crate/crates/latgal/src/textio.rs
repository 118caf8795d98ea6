//! Plain-text formats for lattices and adjoint maps, plus DOT emission.
//!
//! A lattice file holds exactly one lattice:
//!
//! ```text
//! lattice <name>
//! elements <l0> <l1> ... <lk>
//! bottom <l0>
//! top <lk>
//! covers
//! <la> < <lb>
//! ...
//! ```
//!
//! A map file holds one adjoint of a connection:
//!
//! ```text
//! map <name> from <latticeFile#latticeName> to <latticeFile#latticeName>
//! <srcLabel> -> <dstLabel>
//! ...
//! ```
//!
//! Tokens are whitespace-separated; `#` starts a comment that runs to the
//! end of the line (inside the `from`/`to` references the `#` separating
//! path from lattice name must therefore not be preceded by whitespace).
//! Both formats round-trip: parsing the printed form reproduces the value.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::galois::{GaloisConnection, GaloisError};
use crate::lattice::{Elem, Lattice, LatticeError};

/// Errors raised by parsing, printing, or loading text formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextIoError {
    /// The file could not be read.
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    /// The text is malformed; `line` is 1-based.
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    /// The parsed description does not define a bounded lattice.
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// The parsed maps do not define a Galois connection.
    #[error(transparent)]
    Connection(#[from] GaloisError),
}

/// A parsed map file: the adjoint's entries by label, with the lattice
/// references still unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    /// The map's (and usually the connection's) name.
    pub name: String,
    /// Path of the source-lattice file, as written.
    pub from_path: String,
    /// Name the source lattice must carry.
    pub from_lattice: String,
    /// Path of the target-lattice file, as written.
    pub to_path: String,
    /// Name the target lattice must carry.
    pub to_lattice: String,
    /// `(source label, target label)` pairs in file order.
    pub entries: Vec<(String, String)>,
}

/// Strips the comment and splits one line into tokens.
fn tokens(line: &str) -> Vec<&str> {
    let body = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    body.split_whitespace().collect()
}

fn parse_err(path: &str, line: usize, message: impl Into<String>) -> TextIoError {
    TextIoError::Parse { path: path.to_owned(), line, message: message.into() }
}

/// Parses the lattice text format. `path` is used only in diagnostics.
pub fn parse_lattice_str(text: &str, path: &str) -> Result<Lattice, TextIoError> {
    let mut name = None;
    let mut elements: Option<Vec<String>> = None;
    let mut bottom = None;
    let mut top = None;
    let mut in_covers = false;
    let mut covers_line = 0;
    let mut covers: Vec<(String, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        if in_covers {
            match toks.as_slice() {
                [lo, "<", hi] => covers.push(((*lo).to_owned(), (*hi).to_owned())),
                _ => {
                    return Err(parse_err(
                        path,
                        line_no,
                        format!("expected `<label> < <label>`, got `{}`", toks.join(" ")),
                    ))
                }
            }
            continue;
        }
        match toks.as_slice() {
            ["lattice", n] if name.is_none() => name = Some((*n).to_owned()),
            ["elements", rest @ ..] if elements.is_none() && !rest.is_empty() => {
                elements = Some(rest.iter().map(|s| (*s).to_owned()).collect())
            }
            ["bottom", l] if bottom.is_none() => bottom = Some((*l).to_owned()),
            ["top", l] if top.is_none() => top = Some((*l).to_owned()),
            ["covers"] => {
                in_covers = true;
                covers_line = line_no;
            }
            _ => {
                return Err(parse_err(
                    path,
                    line_no,
                    format!("unexpected or repeated directive `{}`", toks.join(" ")),
                ))
            }
        }
    }

    let name = name.ok_or_else(|| parse_err(path, 1, "missing `lattice <name>` line"))?;
    let elements =
        elements.ok_or_else(|| parse_err(path, 1, "missing `elements ...` line"))?;
    let bottom = bottom.ok_or_else(|| parse_err(path, 1, "missing `bottom <label>` line"))?;
    let top = top.ok_or_else(|| parse_err(path, 1, "missing `top <label>` line"))?;
    if !in_covers {
        return Err(parse_err(path, 1, "missing `covers` section"));
    }
    if covers.is_empty() && elements.len() > 1 {
        return Err(parse_err(
            path,
            covers_line,
            "`covers` section lists no cover relations",
        ));
    }
    let labels: Vec<&str> = elements.iter().map(String::as_str).collect();
    let cover_refs: Vec<(&str, &str)> =
        covers.iter().map(|(lo, hi)| (lo.as_str(), hi.as_str())).collect();
    Ok(Lattice::from_covers(&name, &labels, &bottom, &top, &cover_refs)?)
}

/// Reads and parses a lattice file.
pub fn parse_lattice_file(path: impl AsRef<Path>) -> Result<Lattice, TextIoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| TextIoError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_lattice_str(&text, &path.display().to_string())
}

/// Prints a lattice in the text format; the output parses back to a
/// structurally identical lattice.
pub fn print_lattice(l: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "lattice {}", l.name()).unwrap();
    writeln!(out, "elements {}", l.names().join(" ")).unwrap();
    writeln!(out, "bottom {}", l.label(l.bottom())).unwrap();
    writeln!(out, "top {}", l.label(l.top())).unwrap();
    writeln!(out, "covers").unwrap();
    for (lo, hi) in l.covers() {
        writeln!(out, "{} < {}", l.label(lo), l.label(hi)).unwrap();
    }
    out
}

/// Splits a `path#latticeName` reference at the last `#`.
fn split_reference(token: &str, path: &str, line: usize) -> Result<(String, String), TextIoError> {
    match token.rsplit_once('#') {
        Some((file, lat)) if !file.is_empty() && !lat.is_empty() => {
            Ok((file.to_owned(), lat.to_owned()))
        }
        _ => Err(parse_err(
            path,
            line,
            format!("expected `<file>#<latticeName>`, got `{token}`"),
        )),
    }
}

/// Parses the map text format. `path` is used only in diagnostics.
///
/// Because `#` otherwise starts a comment, the header line is scanned before
/// comment stripping: a `#` inside the `from`/`to` references binds to the
/// reference, and a comment on the header line must be separated by
/// whitespace.
pub fn parse_map_str(text: &str, path: &str) -> Result<MapFile, TextIoError> {
    let mut header: Option<MapFile> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if header.is_none() {
            // Header parsing keeps `#` inside reference tokens: split on
            // whitespace first, then drop tokens from the first one that
            // *starts* with `#`.
            let mut toks: Vec<&str> = raw.split_whitespace().collect();
            if let Some(pos) = toks.iter().position(|t| t.starts_with('#')) {
                toks.truncate(pos);
            }
            if toks.is_empty() {
                continue;
            }
            match toks.as_slice() {
                ["map", name, "from", from_ref, "to", to_ref] => {
                    let (from_path, from_lattice) = split_reference(from_ref, path, line_no)?;
                    let (to_path, to_lattice) = split_reference(to_ref, path, line_no)?;
                    header = Some(MapFile {
                        name: (*name).to_owned(),
                        from_path,
                        from_lattice,
                        to_path,
                        to_lattice,
                        entries: Vec::new(),
                    });
                }
                _ => {
                    return Err(parse_err(
                        path,
                        line_no,
                        "expected `map <name> from <file#lattice> to <file#lattice>`",
                    ))
                }
            }
            continue;
        }
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        match toks.as_slice() {
            [src, "->", dst] => header
                .as_mut()
                .expect("header was parsed")
                .entries
                .push(((*src).to_owned(), (*dst).to_owned())),
            _ => {
                return Err(parse_err(
                    path,
                    line_no,
                    format!("expected `<srcLabel> -> <dstLabel>`, got `{}`", toks.join(" ")),
                ))
            }
        }
    }
    header.ok_or_else(|| parse_err(path, 1, "missing `map ...` header line"))
}

/// Reads and parses a map file.
pub fn parse_map_file(path: impl AsRef<Path>) -> Result<MapFile, TextIoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| TextIoError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_map_str(&text, &path.display().to_string())
}

/// Prints a map file; the output parses back to an equal [`MapFile`].
pub fn print_map(m: &MapFile) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "map {} from {}#{} to {}#{}",
        m.name, m.from_path, m.from_lattice, m.to_path, m.to_lattice
    )
    .unwrap();
    for (src, dst) in &m.entries {
        writeln!(out, "{src} -> {dst}").unwrap();
    }
    out
}

/// Resolves a parsed map's label entries into a dense table `src → dst`.
///
/// Every source element must be mapped exactly once and every target label
/// must exist.
pub fn resolve_map_table(
    m: &MapFile,
    src: &Lattice,
    dst: &Lattice,
) -> Result<Vec<Elem>, TextIoError> {
    let missing_label = |label: &str| {
        TextIoError::Lattice(LatticeError::UnknownLabel(label.to_owned()))
    };
    let mut table: Vec<Option<Elem>> = vec![None; src.n()];
    for (src_label, dst_label) in &m.entries {
        let s = src.index_of(src_label).ok_or_else(|| missing_label(src_label))?;
        let d = dst.index_of(dst_label).ok_or_else(|| missing_label(dst_label))?;
        if table[s].is_some() {
            return Err(parse_err(
                &m.name,
                0,
                format!("map `{}` defines `{src_label}` twice", m.name),
            ));
        }
        table[s] = Some(d);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, entry)| {
            entry.ok_or_else(|| {
                parse_err(
                    &m.name,
                    0,
                    format!("map `{}` leaves `{}` unmapped", m.name, src.label(i)),
                )
            })
        })
        .collect()
}

/// Builds a verified connection from two label-level adjoint descriptions.
pub fn connection_from_maps(
    name: &str,
    a: Lattice,
    b: Lattice,
    alpha: &MapFile,
    beta: &MapFile,
) -> Result<GaloisConnection, TextIoError> {
    let alpha_table = resolve_map_table(alpha, &a, &b)?;
    let beta_table = resolve_map_table(beta, &b, &a)?;
    Ok(GaloisConnection::new(name, a, b, alpha_table, beta_table)?)
}

/// Loads a connection from two map files (the lower adjoint's and the upper
/// adjoint's). Lattice file paths inside each map are resolved relative to
/// that map file's directory; the two maps must reference each other's
/// lattices consistently (same files, opposite direction) and share a name,
/// which becomes the connection's name.
pub fn load_connection(
    alpha_path: impl AsRef<Path>,
    beta_path: impl AsRef<Path>,
) -> Result<GaloisConnection, TextIoError> {
    let alpha_path = alpha_path.as_ref();
    let beta_path = beta_path.as_ref();
    let alpha = parse_map_file(alpha_path)?;
    let beta = parse_map_file(beta_path)?;

    let resolve = |base: &Path, rel: &str| -> PathBuf {
        let rel_path = Path::new(rel);
        if rel_path.is_absolute() {
            rel_path.to_owned()
        } else {
            base.parent().unwrap_or_else(|| Path::new(".")).join(rel_path)
        }
    };
    let a_file = resolve(alpha_path, &alpha.from_path);
    let b_file = resolve(alpha_path, &alpha.to_path);
    let beta_from = resolve(beta_path, &beta.from_path);
    let beta_to = resolve(beta_path, &beta.to_path);

    let diag_path = alpha_path.display().to_string();
    if alpha.name != beta.name {
        return Err(parse_err(
            &diag_path,
            1,
            format!(
                "adjoint maps are named differently: `{}` vs `{}`",
                alpha.name, beta.name
            ),
        ));
    }
    if beta_from != b_file || beta_to != a_file {
        return Err(parse_err(
            &diag_path,
            1,
            "the two maps must run between the same lattice files in opposite directions",
        ));
    }

    let a = parse_lattice_file(&a_file)?;
    let b = parse_lattice_file(&b_file)?;
    for (lat, want, file) in [(&a, &alpha.from_lattice, &a_file), (&b, &alpha.to_lattice, &b_file)]
    {
        if lat.name() != want {
            return Err(parse_err(
                &file.display().to_string(),
                1,
                format!("file holds lattice `{}`, expected `{}`", lat.name(), want),
            ));
        }
    }
    connection_from_maps(&alpha.name.clone(), a, b, &alpha, &beta)
}

/// Escapes a label for use inside a quoted DOT string.
fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the Hasse diagram as a DOT digraph: one node per element, one
/// edge per cover, drawn upward (bottom at the lowest rank). Elements in
/// `highlight` are filled.
pub fn emit_dot(l: &Lattice, highlight: &[Elem]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", dot_escape(l.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for e in l.elements() {
        let style = if highlight.contains(&e) {
            " style=filled fillcolor=lightblue"
        } else {
            ""
        };
        writeln!(out, "  n{e} [label=\"{}\"{style}];", dot_escape(l.label(e))).unwrap();
    }
    writeln!(out, "  {{ rank=min; n{}; }}", l.bottom()).unwrap();
    for (lo, hi) in l.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
