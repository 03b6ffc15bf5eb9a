#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperaug::{hsb, HyperImage};

pub const BIN: &str = env!("CARGO_BIN_EXE_hyperaug");

pub fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("HYPERAUG_LOG")
        .output()
        .expect("spawn hyperaug")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// `classes` folders of `per_class` patterned patches each.
pub fn write_dataset(root: &Path, classes: usize, per_class: usize, shape: (usize, usize, usize)) {
    let (h, w, c) = shape;
    for k in 0..classes {
        for i in 0..per_class {
            let img = HyperImage::from_fn(h, w, c, |r, col, ch| {
                let phase = (k * 7 + i) as f32 * 0.1;
                0.2 + 0.1 * ch as f32 + 0.05 * ((r as f32 * 0.7 + phase).sin() + (col as f32 * 0.3 * (k + 1) as f32).cos())
            })
            .unwrap();
            hsb::write(root.join(format!("Class{k:02}")).join(format!("{i:04}.hsb")), &img).unwrap();
        }
    }
}

/// Relative path -> file bytes for every file under `root`.
pub fn tree(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                out.insert(path.strip_prefix(root).unwrap().to_path_buf(), fs::read(&path).unwrap());
            }
        }
    }
    out
}
