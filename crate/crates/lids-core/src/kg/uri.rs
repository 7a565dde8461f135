use serde::{Deserialize, Serialize};

use crate::error::{LidsError, Result};

/// Namespace for ontology terms (classes and properties).
pub const ONTOLOGY_NS: &str = "http://kglids.org/ontology/";
/// Namespace for data instances (sources, datasets, tables, columns, pipelines, libraries).
pub const RESOURCE_NS: &str = "http://kglids.org/resource/";

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";

/// An absolute IRI under one of the accepted namespaces.
///
/// Construction is restricted to the two engine namespaces plus the
/// standard rdf/rdfs/xsd vocabularies, so every node in a store is
/// addressable and serializable without escaping surprises.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Uri(String);

impl Uri {
    /// Validate and wrap an absolute IRI string.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        let accepted = [ONTOLOGY_NS, RESOURCE_NS, RDF_NS, RDFS_NS, XSD_NS];
        if accepted.iter().any(|ns| text.starts_with(ns)) {
            Ok(Uri(text))
        } else {
            Err(LidsError::InvalidName(format!(
                "URI outside accepted namespaces: {text}"
            )))
        }
    }

    /// Internal constructor for vocabulary terms; callers guarantee the namespace.
    pub(crate) fn from_trusted(text: String) -> Self {
        Uri(text)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Last path segment, percent-decoded. Used as a human-readable label.
    pub fn last_segment(&self) -> String {
        let tail = self.0.rsplit('/').next().unwrap_or("");
        percent_decode(tail)
    }
}

impl std::fmt::Display for Uri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Join percent-encoded segments under the resource namespace.
///
/// The encoding is deterministic: identical inputs produce byte-identical
/// IRIs on every platform.
pub fn make_resource_uri<S: AsRef<str>>(parts: &[S]) -> Result<Uri> {
    if parts.is_empty() {
        Err(LidsError::InvalidName("empty segment list".into()))?;
    }
    let mut out = String::from(RESOURCE_NS);
    for (i, part) in parts.iter().enumerate() {
        let part = part.as_ref();
        if part.is_empty() {
            return Err(LidsError::InvalidName(format!(
                "empty segment at position {i}"
            )));
        }
        if i > 0 {
            out.push('/');
        }
        out.push_str(&percent_encode(part));
    }
    Ok(Uri(out))
}

/// Percent-encode every byte outside the unreserved set `[A-Za-z0-9._~-]`.
pub fn percent_encode(segment: &str) -> String {
    let mut out = String::with_capacity(segment.len());
    for byte in segment.bytes() {
        match byte {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'.' | b'_' | b'~' | b'-' => {
                out.push(byte as char)
            }
            _ => out.push_str(&format!("%{byte:02X}")),
        }
    }
    out
}

/// Inverse of [`percent_encode`]; invalid escapes are kept verbatim.
pub fn percent_decode(segment: &str) -> String {
    let bytes = segment.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            if let (Some(h), Some(l)) = (
                bytes.get(i + 1).and_then(|b| (*b as char).to_digit(16)),
                bytes.get(i + 2).and_then(|b| (*b as char).to_digit(16)),
            ) {
                out.push((h * 16 + l) as u8);
                i += 3;
                continue;
            }
        }
        out.push(bytes[i]);
        i += 1;
    }
    String::from_utf8_lossy(&out).into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resource_uri_from_paper_example() {
        let uri = make_resource_uri(&["kaggle", "titanic", "train.csv", "Age"]).unwrap();
        assert_eq!(
            uri.as_str(),
            "http://kglids.org/resource/kaggle/titanic/train.csv/Age"
        );
    }

    #[test]
    fn library_uri() {
        let uri = make_resource_uri(&["library", "sklearn", "svm", "SVC"]).unwrap();
        assert_eq!(
            uri.as_str(),
            "http://kglids.org/resource/library/sklearn/svm/SVC"
        );
    }

    #[test]
    fn segments_with_spaces_are_encoded() {
        let uri = make_resource_uri(&["src", "d s", "t.csv", "a b"]).unwrap();
        assert_eq!(
            uri.as_str(),
            "http://kglids.org/resource/src/d%20s/t.csv/a%20b"
        );
    }

    #[test]
    fn empty_segment_rejected() {
        assert!(matches!(
            make_resource_uri(&["a", ""]),
            Err(LidsError::InvalidName(_))
        ));
        let empty: &[&str] = &[];
        assert!(make_resource_uri(empty).is_err());
    }

    #[test]
    fn encode_decode_inverse() {
        for s in ["plain", "with space", "ünïcode", "a/b?c#d%e"] {
            assert_eq!(percent_decode(&percent_encode(s)), s);
        }
    }

    #[test]
    fn uri_namespace_enforced() {
        assert!(Uri::new("http://example.org/x").is_err());
        assert!(Uri::new("http://kglids.org/ontology/Column").is_ok());
        assert!(Uri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").is_ok());
    }

    #[test]
    fn last_segment_decodes() {
        let uri = make_resource_uri(&["kaggle", "d", "t.csv", "a b"]).unwrap();
        assert_eq!(uri.last_segment(), "a b");
    }
}
