//! Native binary container for aligned series.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! offset  size  field
//!      0     4  magic "LSTV"
//!      4     4  version (u32) = 1
//!      8     8  T, number of timesteps (u64)
//!     16     8  D, values per timestep (u64)
//!     24     1  dtype: 1 = float32, 2 = int32
//!     25     7  reserved, zero
//!     32   T*D*4 payload, row-major
//! ```
//!
//! State matrices use dtype 1. Annotation tracks use dtype 2 with `D = 1`.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::error::{DatasetError, Result};
use super::matrix::StateMatrix;

pub const MAGIC: [u8; 4] = *b"LSTV";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Dtype {
    Float32 = 1,
    Int32 = 2,
}

impl Dtype {
    fn code(self) -> u8 {
        self as u8
    }
}

/// Decoded container header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub rows: u64,
    pub cols: u64,
    pub dtype: u8,
}

pub fn encode_header(rows: u64, cols: u64, dtype: Dtype) -> [u8; HEADER_LEN] {
    let mut header = [0u8; HEADER_LEN];
    header[0..4].copy_from_slice(&MAGIC);
    header[4..8].copy_from_slice(&VERSION.to_le_bytes());
    header[8..16].copy_from_slice(&rows.to_le_bytes());
    header[16..24].copy_from_slice(&cols.to_le_bytes());
    header[24] = dtype.code();
    header
}

pub fn decode_header(path: &Path, bytes: &[u8]) -> Result<Header> {
    if bytes.len() < HEADER_LEN {
        // Too short to even hold the magic: report it as such if it is wrong.
        if bytes.len() >= 4 && bytes[0..4] != MAGIC {
            return Err(DatasetError::BadMagic {
                path: path.to_owned(),
                found: bytes[0..4].try_into().unwrap(),
            });
        }
        return Err(DatasetError::TruncatedFile {
            path: path.to_owned(),
            expected: HEADER_LEN as u64,
            actual: bytes.len() as u64,
        });
    }
    if bytes[0..4] != MAGIC {
        return Err(DatasetError::BadMagic {
            path: path.to_owned(),
            found: bytes[0..4].try_into().unwrap(),
        });
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(DatasetError::UnsupportedVersion {
            path: path.to_owned(),
            version,
        });
    }
    Ok(Header {
        rows: u64::from_le_bytes(bytes[8..16].try_into().unwrap()),
        cols: u64::from_le_bytes(bytes[16..24].try_into().unwrap()),
        dtype: bytes[24],
    })
}

/// Validates header + payload. Returns the header and the payload bytes.
fn open_payload<'a>(path: &Path, bytes: &'a [u8], dtype: Dtype) -> Result<(Header, &'a [u8])> {
    let header = decode_header(path, bytes)?;
    if header.dtype != dtype.code() {
        return Err(DatasetError::UnsupportedDtype {
            path: path.to_owned(),
            code: header.dtype,
            expected: dtype.code(),
        });
    }
    if header.rows == 0 || header.cols == 0 {
        return Err(DatasetError::InvalidShape {
            rows: header.rows,
            cols: header.cols,
        });
    }
    let expected = header
        .rows
        .checked_mul(header.cols)
        .and_then(|n| n.checked_mul(4))
        .and_then(|n| n.checked_add(HEADER_LEN as u64))
        .ok_or(DatasetError::InvalidShape {
            rows: header.rows,
            cols: header.cols,
        })?;
    let actual = bytes.len() as u64;
    if actual < expected {
        return Err(DatasetError::TruncatedFile {
            path: path.to_owned(),
            expected,
            actual,
        });
    }
    if actual > expected {
        return Err(DatasetError::TrailingData {
            path: path.to_owned(),
            expected,
            actual,
        });
    }
    Ok((header, &bytes[HEADER_LEN..]))
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| DatasetError::io(path, e))
}

fn write_file(path: &Path, header: [u8; HEADER_LEN], payload: impl Iterator<Item = [u8; 4]>) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| DatasetError::io(path, e))?;
    let mut out = BufWriter::new(file);
    let io = |e| DatasetError::io(path, e);
    out.write_all(&header).map_err(io)?;
    for word in payload {
        out.write_all(&word).map_err(io)?;
    }
    out.flush().map_err(io)
}

pub fn encode_state_matrix(matrix: &StateMatrix) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(HEADER_LEN + matrix.values().len() * 4);
    bytes.extend_from_slice(&encode_header(
        matrix.num_timesteps() as u64,
        matrix.num_states() as u64,
        Dtype::Float32,
    ));
    for v in matrix.values() {
        bytes.extend_from_slice(&v.to_le_bytes());
    }
    bytes
}

/// Decodes a float32 container. `path` only labels errors.
pub fn decode_state_matrix(path: &Path, source_id: &str, bytes: &[u8]) -> Result<StateMatrix> {
    let (header, payload) = open_payload(path, bytes, Dtype::Float32)?;
    let values = payload
        .chunks_exact(4)
        .map(|w| f32::from_le_bytes(w.try_into().unwrap()))
        .collect();
    StateMatrix::new(source_id, header.rows as usize, header.cols as usize, values)
}

pub fn save_state_matrix(matrix: &StateMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let header = encode_header(
        matrix.num_timesteps() as u64,
        matrix.num_states() as u64,
        Dtype::Float32,
    );
    write_file(path, header, matrix.values().iter().map(|v| v.to_le_bytes()))
}

/// Loads a state matrix. The source id defaults to the file stem.
pub fn load_state_matrix(path: impl AsRef<Path>) -> Result<StateMatrix> {
    let path = path.as_ref();
    let source_id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let bytes = read_file(path)?;
    decode_state_matrix(path, &source_id, &bytes)
}

pub fn save_track_ids(ids: &[i32], path: impl AsRef<Path>) -> Result<()> {
    if ids.is_empty() {
        return Err(DatasetError::InvalidShape { rows: 0, cols: 1 });
    }
    let header = encode_header(ids.len() as u64, 1, Dtype::Int32);
    write_file(path.as_ref(), header, ids.iter().map(|v| v.to_le_bytes()))
}

pub fn load_track_ids(path: impl AsRef<Path>) -> Result<Vec<i32>> {
    let path = path.as_ref();
    let bytes = read_file(path)?;
    let (header, payload) = open_payload(path, &bytes, Dtype::Int32)?;
    if header.cols != 1 {
        return Err(DatasetError::InvalidShape {
            rows: header.rows,
            cols: header.cols,
        });
    }
    Ok(payload
        .chunks_exact(4)
        .map(|w| i32::from_le_bytes(w.try_into().unwrap()))
        .collect())
}
