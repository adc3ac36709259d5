use std::io::Read;
use std::path::Path;

use coxeter_core::{SelfDualCode, SymMatrix, Vertex};

use crate::error::CliError;

fn is_stdin(path: &Path) -> bool {
    path.as_os_str() == "-"
}

/// Rejects more than one source reading standard input.
pub fn check_stdin_once(sources: &[&Path]) -> Result<(), CliError> {
    if sources.iter().filter(|p| is_stdin(p)).count() > 1 {
        return Err(CliError::Usage(
            "at most one input can come from standard input".into(),
        ));
    }
    Ok(())
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if is_stdin(path) {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })?;
    } else {
        text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
    }
    Ok(text)
}

/// Row text with one row per line; rows may also be joined by `/`.
pub fn parse_matrix(text: &str, context: &str) -> Result<SymMatrix, CliError> {
    let text = text.replace('/', "\n");
    let m: coxeter_core::BitMatrix = text.parse().map_err(|e| CliError::parse(context, e))?;
    SymMatrix::new(m).map_err(|e| CliError::Domain(format!("{context}: {e}")))
}

pub fn read_vertex(path: &Path) -> Result<Vertex, CliError> {
    let context = path.display().to_string();
    let m = parse_matrix(&read_text(path)?, &context)?;
    Vertex::new(m).map_err(|_| {
        CliError::Domain(format!(
            "{context}: matrix is singular, so it is not a vertex"
        ))
    })
}

pub fn read_code(path: &Path) -> Result<SelfDualCode, CliError> {
    let context = path.display().to_string();
    read_text(path)?
        .parse()
        .map_err(|e| match CliError::from(e) {
            CliError::Parse { message, .. } => CliError::Parse { context, message },
            CliError::Domain(m) => CliError::Domain(format!("{context}: {m}")),
            other => other,
        })
}

pub fn same_dimension(a: &Vertex, b: &Vertex) -> Result<(), CliError> {
    if a.n() != b.n() {
        return Err(CliError::Domain(format!(
            "dimension mismatch: A is {0}x{0} but B is {1}x{1}",
            a.n(),
            b.n()
        )));
    }
    Ok(())
}
