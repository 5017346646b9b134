use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty bounds union")]
    EmptyUnion,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("duplicate category \"{0}\"")]
    DuplicateCategory(String),

    #[error("category \"{0}\" has no assets")]
    EmptyCategory(String),

    #[error("inverted bounds [{}, {}, {}, {}]", .0[0], .0[1], .0[2], .0[3])]
    InvertedBounds([f64; 4]),

    #[error("labeled node \"{0}\" has no bounds")]
    MissingBounds(String),

    #[error("unknown category \"{0}\"")]
    UnknownCategory(String),

    #[error("invalid detection at index {index}: {reason}")]
    InvalidDetection { index: usize, reason: String },

    #[error("detection at index {index} references unknown image_id {image_id}")]
    UnknownImage { index: usize, image_id: u64 },

    #[error("detection at index {index} references unknown category_id {category_id}")]
    UnknownCategoryId { index: usize, category_id: u64 },

    #[error("element library is empty")]
    EmptyLibrary,

    #[error("nothing fits: canvas {canvas_w}x{canvas_h} is smaller than every asset at minimum scale")]
    NothingFits { canvas_w: u32, canvas_h: u32 },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("invalid screen: {0}")]
    InvalidScreen(String),

    #[error("no elements")]
    NoElements,

    #[error("invalid layout tree: {0}")]
    InvalidTree(String),

    #[error("tree does not match screen")]
    TreeMismatch,
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn json(context: impl Into<String>, source: serde_json::Error) -> Self {
        Error::Json {
            context: context.into(),
            source,
        }
    }
}
