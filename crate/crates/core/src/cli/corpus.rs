//! Descriptor files shipped with the crate.

pub struct Example {
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(Example {
            name: $name,
            text: include_str!(concat!("../../corpus/", $name, ".desc")),
        }),*]
    };
}

/// Sorted by name.
pub const CORPUS: &[Example] = corpus![
    "abelian-surface",
    "elliptic-curve",
    "flag-variety",
    "gl-n-mod-gamma",
    "homspace-trivial-stabilizer",
    "jacobian-char5",
    "semiabelian-g1r1",
    "so-n",
    "torus-r3",
];

pub fn find(name: &str) -> Option<&'static Example> {
    CORPUS.iter().find(|e| e.name == name)
}

impl Example {
    /// First comment line of the file.
    pub fn summary(&self) -> &'static str {
        self.text
            .lines()
            .find_map(|l| l.strip_prefix('#'))
            .map(str::trim)
            .unwrap_or("")
    }
}
