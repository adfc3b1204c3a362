//! Reading samples from CSV or raw little-endian `f64` files and writing
//! diagrams.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::error::PersistenceError;
use crate::types::{Diagram, Topology};

/// Raw input is read in chunks of this many bytes.
pub const RAW_CHUNK_BYTES: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    /// One decimal value per line.
    #[default]
    Csv,
    /// Consecutive little-endian IEEE-754 doubles.
    Raw,
}

/// Where and how to read a sampled function. A path of `-` is standard input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSpec {
    pub path: PathBuf,
    pub format: InputFormat,
    pub topology: Topology,
}

impl InputSpec {
    pub fn new(path: impl Into<PathBuf>, format: InputFormat, topology: Topology) -> Self {
        Self {
            path: path.into(),
            format,
            topology,
        }
    }

    pub fn is_stdin(&self) -> bool {
        self.path.as_os_str() == "-"
    }

    fn open(&self) -> Result<Box<dyn Read>, ReadError> {
        if self.is_stdin() {
            return Ok(Box::new(io::stdin().lock()));
        }
        let file = File::open(&self.path).map_err(|source| ReadError::Io {
            path: self.path.clone(),
            source,
        })?;
        if self.format == InputFormat::Raw {
            if let Ok(meta) = file.metadata() {
                if meta.len() % 8 != 0 {
                    return Err(ReadError::RawSize { bytes: meta.len() });
                }
            }
        }
        Ok(Box::new(file))
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed value on line {line}: {content:?}")]
    Malformed { line: usize, content: String },
    #[error("raw input size {bytes} is not a multiple of 8 bytes")]
    RawSize { bytes: u64 },
    #[error(transparent)]
    Sample(#[from] PersistenceError),
}

/// Feeds every value of `reader` to `consume`, in order, without holding the
/// whole input in memory. Stops at the first error from either side.
pub fn stream_values<R, F>(
    reader: R,
    format: InputFormat,
    mut consume: F,
) -> Result<usize, ReadError>
where
    R: Read,
    F: FnMut(f64) -> Result<(), PersistenceError>,
{
    let io_err = |source| ReadError::Io {
        path: PathBuf::from("-"),
        source,
    };
    let mut count = 0;
    match format {
        InputFormat::Csv => {
            for (i, line) in BufReader::new(reader).lines().enumerate() {
                let line = line.map_err(io_err)?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let value: f64 = trimmed.parse().map_err(|_| ReadError::Malformed {
                    line: i + 1,
                    content: line.clone(),
                })?;
                consume(value)?;
                count += 1;
            }
        }
        InputFormat::Raw => {
            let mut reader = reader;
            let mut buf = vec![0u8; RAW_CHUNK_BYTES];
            let mut filled = 0;
            let mut total: u64 = 0;
            loop {
                let read = match reader.read(&mut buf[filled..]) {
                    Ok(0) => break,
                    Ok(k) => k,
                    Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                    Err(e) => return Err(io_err(e)),
                };
                total += read as u64;
                filled += read;
                let whole = filled - filled % 8;
                for chunk in buf[..whole].chunks_exact(8) {
                    consume(f64::from_le_bytes(chunk.try_into().unwrap()))?;
                    count += 1;
                }
                buf.copy_within(whole..filled, 0);
                filled -= whole;
            }
            if filled != 0 {
                return Err(ReadError::RawSize { bytes: total });
            }
        }
    }
    Ok(count)
}

/// Streams the values of `spec` into `consume`.
pub fn stream_input<F>(spec: &InputSpec, consume: F) -> Result<usize, ReadError>
where
    F: FnMut(f64) -> Result<(), PersistenceError>,
{
    let reader = spec.open()?;
    stream_values(reader, spec.format, consume).map_err(|e| match e {
        ReadError::Io { source, .. } => ReadError::Io {
            path: spec.path.clone(),
            source,
        },
        other => other,
    })
}

/// Reads all values of `spec` into memory, rejecting empty input.
pub fn read_values(spec: &InputSpec) -> Result<Vec<f64>, ReadError> {
    let mut values = Vec::new();
    stream_input(spec, |v| {
        values.push(v);
        Ok(())
    })?;
    crate::types::validate_values(&values)?;
    Ok(values)
}

/// Writes `values` as raw little-endian doubles.
pub fn write_raw<W: Write>(mut writer: W, values: &[f64]) -> io::Result<()> {
    for chunk in values.chunks(RAW_CHUNK_BYTES / 8) {
        let bytes: Vec<u8> = chunk.iter().flat_map(|v| v.to_le_bytes()).collect();
        writer.write_all(&bytes)?;
    }
    writer.flush()
}

/// Writes the diagram CSV to `path`, or to standard output when `None`.
pub fn write_diagram(diagram: &Diagram, path: Option<&Path>) -> io::Result<()> {
    let text = diagram.to_csv();
    match path {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(bytes: &[u8], format: InputFormat) -> Result<Vec<f64>, ReadError> {
        let mut out = Vec::new();
        stream_values(bytes, format, |v| {
            out.push(v);
            Ok(())
        })?;
        Ok(out)
    }

    #[test]
    fn csv_parsing() {
        assert_eq!(
            collect(b"0\n2\n1\n3\n", InputFormat::Csv).unwrap(),
            vec![0.0, 2.0, 1.0, 3.0]
        );
        assert_eq!(
            collect(b" 1.5 \r\n\n-2e3", InputFormat::Csv).unwrap(),
            vec![1.5, -2000.0]
        );
        match collect(b"1\n2\nabc\n", InputFormat::Csv) {
            Err(ReadError::Malformed { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn raw_parsing() {
        let mut bytes = Vec::new();
        write_raw(&mut bytes, &[5.0, -1.25]).unwrap();
        assert_eq!(collect(&bytes, InputFormat::Raw).unwrap(), vec![5.0, -1.25]);
        bytes.push(0);
        assert!(matches!(
            collect(&bytes, InputFormat::Raw),
            Err(ReadError::RawSize { bytes: 17 })
        ));
    }

    #[test]
    fn consumer_errors_propagate() {
        let err = stream_values(&b"1\n2\n"[..], InputFormat::Csv, |_| {
            Err(PersistenceError::NonFinite { index: 7 })
        })
        .unwrap_err();
        assert_eq!(err.to_string(), "non-finite value at index 7");
    }
}
