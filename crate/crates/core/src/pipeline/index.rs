use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// One sample on disk and its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleEntry {
    pub path: PathBuf,
    pub label_index: usize,
}

/// Catalog of a class-per-folder dataset.
///
/// `class_names` is sorted ascending and label `i` names `class_names[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetIndex {
    class_names: Vec<String>,
    samples: Vec<SampleEntry>,
}

impl DatasetIndex {
    /// Builds an index from already-known parts, checking its invariants.
    pub fn from_parts(class_names: Vec<String>, samples: Vec<SampleEntry>) -> Result<Self> {
        if class_names.is_empty() {
            return Err(Error::invalid("dataset needs at least one class"));
        }
        if !class_names.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("class names must be unique and sorted ascending"));
        }
        let mut counts = vec![0usize; class_names.len()];
        for s in &samples {
            let slot = counts.get_mut(s.label_index).ok_or_else(|| {
                Error::invalid(format!(
                    "label {} of {} is outside {} classes",
                    s.label_index,
                    s.path.display(),
                    class_names.len()
                ))
            })?;
            *slot += 1;
        }
        if let Some(k) = counts.iter().position(|&n| n == 0) {
            return Err(Error::EmptyClass(class_names[k].clone()));
        }
        Ok(Self {
            class_names,
            samples,
        })
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn samples(&self) -> &[SampleEntry] {
        &self.samples
    }

    pub fn num_classes(&self) -> usize {
        self.class_names.len()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

fn is_hidden(path: &Path) -> bool {
    path.file_name()
        .and_then(|n| n.to_str())
        .is_some_and(|n| n.starts_with('.'))
}

fn sorted_entries(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut entries = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .map(|e| e.map(|e| e.path()).map_err(|err| Error::io(dir, err)))
        .collect::<Result<Vec<_>>>()?;
    entries.retain(|p| !is_hidden(p));
    entries.sort();
    Ok(entries)
}

/// Indexes `root/<ClassName>/<sample files>`.
///
/// Classes are the non-hidden subdirectories of `root` in ascending name
/// order; samples are the non-hidden regular files of each class folder in
/// ascending name order. Loose files directly under `root` are ignored.
pub fn index_dataset(root: impl AsRef<Path>) -> Result<DatasetIndex> {
    let root = root.as_ref();
    let mut class_names = Vec::new();
    let mut samples = Vec::new();
    for dir in sorted_entries(root)?.into_iter().filter(|p| p.is_dir()) {
        let name = dir
            .file_name()
            .and_then(|n| n.to_str())
            .ok_or_else(|| Error::invalid(format!("class folder {} is not UTF-8", dir.display())))?
            .to_owned();
        let label_index = class_names.len();
        let files: Vec<_> = sorted_entries(&dir)?
            .into_iter()
            .filter(|p| p.is_file())
            .collect();
        if files.is_empty() {
            return Err(Error::EmptyClass(name));
        }
        samples.extend(files.into_iter().map(|path| SampleEntry { path, label_index }));
        class_names.push(name);
    }
    if class_names.is_empty() {
        return Err(Error::EmptyDataset(root.to_path_buf()));
    }
    DatasetIndex::from_parts(class_names, samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn touch(path: PathBuf) {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, b"x").unwrap();
    }

    #[test]
    fn classes_sorted_alphabetically() {
        let dir = tempfile::tempdir().unwrap();
        touch(dir.path().join("Forest/b.hsb"));
        touch(dir.path().join("Forest/a.hsb"));
        touch(dir.path().join("AnnualCrop/z.hsb"));
        touch(dir.path().join("README"));
        let index = index_dataset(dir.path()).unwrap();
        assert_eq!(index.class_names(), ["AnnualCrop", "Forest"]);
        let got: Vec<_> = index
            .samples()
            .iter()
            .map(|s| (s.path.file_name().unwrap().to_str().unwrap(), s.label_index))
            .collect();
        assert_eq!(got, [("z.hsb", 0), ("a.hsb", 1), ("b.hsb", 1)]);
    }

    #[test]
    fn ten_class_layout() {
        let dir = tempfile::tempdir().unwrap();
        let names = [
            "AnnualCrop", "Forest", "HerbaceousVegetation", "Highway", "Industrial",
            "Pasture", "PermanentCrop", "Residential", "River", "SeaLake",
        ];
        for name in names {
            touch(dir.path().join(name).join("0.hsb"));
        }
        let index = index_dataset(dir.path()).unwrap();
        assert_eq!(index.num_classes(), 10);
        assert_eq!(index.class_names(), names);
    }

    #[test]
    fn empty_class_is_named() {
        let dir = tempfile::tempdir().unwrap();
        touch(dir.path().join("Forest/a.hsb"));
        fs::create_dir_all(dir.path().join("River")).unwrap();
        touch(dir.path().join("River/.hidden"));
        match index_dataset(dir.path()) {
            Err(Error::EmptyClass(name)) => assert_eq!(name, "River"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_root() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(index_dataset(dir.path()), Err(Error::EmptyDataset(_))));
        assert!(matches!(
            index_dataset(dir.path().join("nope")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn from_parts_checks_invariants() {
        let entry = |l| SampleEntry {
            path: "p".into(),
            label_index: l,
        };
        assert!(DatasetIndex::from_parts(vec!["a".into()], vec![entry(1)]).is_err());
        assert!(DatasetIndex::from_parts(vec!["b".into(), "a".into()], vec![entry(0), entry(1)]).is_err());
        assert!(matches!(
            DatasetIndex::from_parts(vec!["a".into(), "b".into()], vec![entry(0)]),
            Err(Error::EmptyClass(n)) if n == "b"
        ));
    }
}
