//! Fixed vocabulary of the graph: classes, object properties, and data
//! properties, all under the ontology namespace, plus the rdf/rdfs terms
//! attached to every node.

use super::uri::{Uri, ONTOLOGY_NS, RDFS_NS, RDF_NS, XSD_NS};

/// An ontology term directly under the ontology namespace.
pub fn term(local: &str) -> Uri {
    Uri::from_trusted(format!("{ONTOLOGY_NS}{local}"))
}

fn data_term(local: &str) -> Uri {
    Uri::from_trusted(format!("{ONTOLOGY_NS}data/{local}"))
}

fn pipeline_term(local: &str) -> Uri {
    Uri::from_trusted(format!("{ONTOLOGY_NS}pipeline/{local}"))
}

// Classes.
pub fn class_source() -> Uri {
    term("Source")
}
pub fn class_dataset() -> Uri {
    term("Dataset")
}
pub fn class_table() -> Uri {
    term("Table")
}
pub fn class_column() -> Uri {
    term("Column")
}
pub fn class_pipeline() -> Uri {
    term("Pipeline")
}
pub fn class_statement() -> Uri {
    term("Statement")
}
pub fn class_library() -> Uri {
    term("Library")
}

// Object properties on the data side.
pub fn has_label_similarity() -> Uri {
    data_term("hasLabelSimilarity")
}
pub fn has_content_similarity() -> Uri {
    data_term("hasContentSimilarity")
}
pub fn has_pkfk_similarity() -> Uri {
    data_term("hasPrimaryKeyForeignKeySimilarity")
}
pub fn is_part_of() -> Uri {
    data_term("isPartOf")
}
pub fn is_unionable_with() -> Uri {
    data_term("isUnionableWith")
}
pub fn is_joinable_with() -> Uri {
    data_term("isJoinableWith")
}

// Object properties on the pipeline side.
pub fn has_data_flow_to() -> Uri {
    pipeline_term("hasDataFlowTo")
}
pub fn has_next_statement() -> Uri {
    pipeline_term("hasNextStatement")
}
pub fn calls_library() -> Uri {
    pipeline_term("callsLibrary")
}
pub fn reads() -> Uri {
    pipeline_term("reads")
}
pub fn in_control_flow() -> Uri {
    pipeline_term("inControlFlow")
}

// Data properties.
pub fn has_parameter() -> Uri {
    pipeline_term("hasParameter")
}
pub fn has_text() -> Uri {
    pipeline_term("hasText")
}
pub fn has_author() -> Uri {
    pipeline_term("hasAuthor")
}
pub fn has_score() -> Uri {
    pipeline_term("hasScore")
}
pub fn has_tag() -> Uri {
    pipeline_term("hasTag")
}
pub fn has_source_url() -> Uri {
    pipeline_term("hasSourceURL")
}
pub fn has_total_value_count() -> Uri {
    data_term("hasTotalValueCount")
}
pub fn has_distinct_value_count() -> Uri {
    data_term("hasDistinctValueCount")
}
pub fn has_missing_value_count() -> Uri {
    data_term("hasMissingValueCount")
}
pub fn has_fine_grained_type() -> Uri {
    data_term("hasFineGrainedType")
}
pub fn has_min_value() -> Uri {
    data_term("hasMinValue")
}
pub fn has_max_value() -> Uri {
    data_term("hasMaxValue")
}
pub fn has_mean_value() -> Uri {
    data_term("hasMeanValue")
}
pub fn has_true_ratio() -> Uri {
    data_term("hasTrueRatio")
}

/// Annotation predicate carrying the certainty score of an edge.
pub fn certainty() -> Uri {
    term("certainty")
}

// Standard terms.
pub fn rdf_type() -> Uri {
    Uri::from_trusted(format!("{RDF_NS}type"))
}
pub fn rdfs_label() -> Uri {
    Uri::from_trusted(format!("{RDFS_NS}label"))
}
pub fn xsd(local: &str) -> Uri {
    Uri::from_trusted(format!("{XSD_NS}{local}"))
}
