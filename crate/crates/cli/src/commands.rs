use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use hyperaug::geo::{self, BandDirRaster};
use hyperaug::pipeline::{self, derive_seed, epoch_plan, next_batch, SeedRecipe};
use hyperaug::transforms::augment_image;
use hyperaug::{hsb, HyperImage};
use rayon::prelude::*;
use serde_json::json;

use crate::args::{AugmentCmd, BenchCmd, ConvertCmd, ExtractCmd, GenerateCmd};
use crate::npy;

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .context("starting worker pool")
}

/// Prints the fully resolved configuration of a run as one JSON line.
fn echo_config(value: &serde_json::Value) {
    println!("config={value}");
}

fn hsb_files(root: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).with_context(|| format!("reading {}", dir.display()))? {
            let path = entry?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "hsb") {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn augment(cmd: &AugmentCmd) -> Result<()> {
    let config = cmd.aug.config();
    config.validate()?;
    let workers = cmd.run.workers();
    echo_config(&json!({
        "command": "augment",
        "input": cmd.input,
        "output": cmd.output,
        "augment": config,
        "seed": cmd.run.seed,
        "workers": workers,
        "copies": cmd.copies,
    }));
    let files = hsb_files(&cmd.input)?;
    if files.is_empty() {
        bail!("no .hsb files under {}", cmd.input.display());
    }
    let jobs: Vec<(usize, &PathBuf, usize)> = files
        .iter()
        .enumerate()
        .flat_map(|(i, f)| (0..cmd.copies).map(move |k| (i, f, k)))
        .collect();
    pool(workers)?.install(|| {
        jobs.par_iter().try_for_each(|&(i, file, k)| -> Result<()> {
            let img = hsb::read(file)?;
            // File i, copy k: same derivation as batch i, slot k of epoch 0.
            let seed = derive_seed(&SeedRecipe::new(cmd.run.seed, 0, i as u64, k as u64));
            let out = augment_image(&img, &config, seed)?;
            let rel = file.strip_prefix(&cmd.input).unwrap_or(file);
            let mut target = cmd.output.join(rel);
            if cmd.copies > 1 {
                let stem = rel.file_stem().unwrap_or_default().to_string_lossy();
                target.set_file_name(format!("{stem}_aug{k}.hsb"));
            }
            hsb::write(&target, &out)?;
            Ok(())
        })
    })?;
    println!("written={}", jobs.len());
    Ok(())
}

static DECODE_COUNTER: AtomicU64 = AtomicU64::new(0);

fn external_decode(command: &str, band: &Path) -> hyperaug::Result<HyperImage> {
    let mut parts = command.split_whitespace();
    let program = parts
        .next()
        .ok_or_else(|| hyperaug::Error::InvalidArgument("empty --band-decoder".into()))?;
    let out = std::env::temp_dir().join(format!(
        "hyperaug-band-{}-{}.hsb",
        process::id(),
        DECODE_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    let status = process::Command::new(program)
        .args(parts)
        .arg(band)
        .arg(&out)
        .status()
        .map_err(|e| hyperaug::Error::Io {
            path: PathBuf::from(program),
            source: e,
        })?;
    if !status.success() {
        return Err(hyperaug::Error::Format {
            path: band.to_path_buf(),
            reason: format!("band decoder `{command}` exited with {status}"),
        });
    }
    let img = hsb::read(&out);
    let _ = fs::remove_file(&out);
    img
}

pub fn extract(cmd: &ExtractCmd) -> Result<()> {
    let workers = cmd
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let policy: geo::BorderPolicy = cmd.policy.into();
    echo_config(&json!({
        "command": "extract",
        "shp": cmd.shp,
        "raster": cmd.raster,
        "size": cmd.size,
        "policy": policy,
        "labels": cmd.labels,
        "band_decoder": cmd.band_decoder,
        "workers": workers,
        "output": cmd.output,
    }));
    let mut points = geo::read_shapefile_points(&cmd.shp)?;
    if let Some(labels) = &cmd.labels {
        geo::attach_labels(&mut points, &geo::read_labels_csv(labels)?);
    }
    let raster = match &cmd.band_decoder {
        Some(decoder) => BandDirRaster::open_with(&cmd.raster, |band| external_decode(decoder, band))?,
        None => BandDirRaster::open(&cmd.raster)?,
    };
    let report = pool(workers)?.install(|| geo::extract_all(&raster, &points, cmd.size, policy, &cmd.output))?;
    println!(
        "report={}",
        json!({"points": points.len(), "written": report.written, "skipped": report.skipped})
    );
    Ok(())
}

/// Sample ids, label indices and patch shape of one written batch.
type BatchSummary = (Vec<usize>, Vec<usize>, (usize, usize, usize));

pub fn batch_file(output: &Path, epoch: usize, batch: usize) -> PathBuf {
    output
        .join(format!("epoch_{epoch:03}"))
        .join(format!("batch_{batch:05}.hsb"))
}

pub fn generate(cmd: &GenerateCmd) -> Result<()> {
    let config = cmd.aug.config();
    config.validate()?;
    let workers = cmd.run.workers();
    let index = pipeline::index_dataset(&cmd.dataset)?;
    let resolved = json!({
        "command": "generate",
        "dataset": cmd.dataset,
        "output": cmd.output,
        "augment": config,
        "seed": cmd.run.seed,
        "workers": workers,
        "batch_size": cmd.batch_size,
        "batches_per_epoch": cmd.batches,
        "epochs": cmd.epochs,
    });
    echo_config(&resolved);
    fs::create_dir_all(&cmd.output).with_context(|| format!("creating {}", cmd.output.display()))?;

    let pool = pool(workers)?;
    let mut shape = None;
    for epoch in 0..cmd.epochs {
        let plan = epoch_plan(index.len(), cmd.batches, cmd.batch_size, cmd.run.seed, epoch as u64)?;
        let labels = pool.install(|| {
            (0..cmd.batches)
                .into_par_iter()
                .map(|b| -> Result<BatchSummary> {
                    let batch = next_batch(&index, &plan, b, cmd.batch_size, &config, cmd.run.seed, epoch as u64)?;
                    hsb::write(batch_file(&cmd.output, epoch, b), &batch.images_stacked())?;
                    let label_ids = (0..batch.batch_size).map(|s| batch.label_index(s)).collect();
                    Ok((batch.sample_ids, label_ids, (batch.height, batch.width, batch.channels)))
                })
                .collect::<Result<Vec<_>>>()
        })?;

        let mut csv = String::from("batch,slot,sample,label\n");
        for (b, (ids, label_ids, batch_shape)) in labels.iter().enumerate() {
            match shape {
                None => shape = Some(*batch_shape),
                Some(s) if s != *batch_shape => bail!(
                    "epoch {epoch} batch {b} has patch shape {batch_shape:?}, earlier batches {s:?}"
                ),
                _ => {}
            }
            for (slot, (&id, &label)) in ids.iter().zip(label_ids).enumerate() {
                let rel = index.samples()[id].path.strip_prefix(&cmd.dataset).unwrap_or(&index.samples()[id].path);
                csv.push_str(&format!("{b},{slot},{},{label}\n", rel.display()));
            }
        }
        let labels_path = cmd.output.join(format!("epoch_{epoch:03}")).join("labels.csv");
        fs::write(&labels_path, csv).with_context(|| format!("writing {}", labels_path.display()))?;
    }

    let (h, w, c) = shape.expect("at least one batch");
    let mut manifest = resolved;
    // Keep the tree independent of where it was written and of --workers.
    if let Some(obj) = manifest.as_object_mut() {
        obj.remove("workers");
        obj.remove("output");
    }
    manifest["class_names"] = json!(index.class_names());
    manifest["patch_shape"] = json!([h, w, c]);
    manifest["batch_layout"] = json!("images stacked as (batch_size * height) x width x channels");
    let path = cmd.output.join("manifest.json");
    let mut f = fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
    writeln!(f, "{}", serde_json::to_string_pretty(&manifest)?)?;
    println!("batches_written={}", cmd.batches * cmd.epochs);
    Ok(())
}

fn extension(path: &Path) -> String {
    path.extension()
        .map(|e| e.to_string_lossy().to_ascii_lowercase())
        .unwrap_or_default()
}

pub fn convert(cmd: &ConvertCmd) -> Result<()> {
    echo_config(&json!({"command": "convert", "input": cmd.input, "output": cmd.output}));
    let img = match extension(&cmd.input).as_str() {
        "hsb" => hsb::read(&cmd.input)?,
        "npy" => npy::read(&cmd.input)?,
        other => bail!("cannot infer input format from extension `{other}` (expected .hsb or .npy)"),
    };
    match extension(&cmd.output).as_str() {
        "hsb" => hsb::write(&cmd.output, &img)?,
        "npy" => npy::write(&cmd.output, &img)?,
        other => bail!("cannot infer output format from extension `{other}` (expected .hsb or .npy)"),
    }
    let (h, w, c) = img.shape();
    println!("shape={h}x{w}x{c}");
    Ok(())
}

pub fn bench(cmd: &BenchCmd) -> Result<()> {
    let config = cmd.aug.config();
    config.validate()?;
    let workers = cmd.run.workers();
    let index = pipeline::index_dataset(&cmd.dataset)?;
    echo_config(&json!({
        "command": "bench",
        "dataset": cmd.dataset,
        "samples": index.len(),
        "augment": config,
        "seed": cmd.run.seed,
        "workers": workers,
        "batch_size": cmd.batch_size,
        "batches": cmd.batches,
    }));
    let plan = epoch_plan(index.len(), cmd.batches, cmd.batch_size, cmd.run.seed, 0)?;
    let pool = pool(workers)?;
    let start = Instant::now();
    let checksum = pool.install(|| {
        (0..cmd.batches)
            .into_par_iter()
            .map(|b| -> Result<f64> {
                let batch = next_batch(&index, &plan, b, cmd.batch_size, &config, cmd.run.seed, 0)?;
                Ok(batch.images.iter().map(|&v| v as f64).sum())
            })
            .try_reduce(|| 0.0, |a, b| Ok(a + b))
    })?;
    let elapsed = start.elapsed().as_secs_f64();
    log::debug!("checksum {checksum}");
    println!("throughput_batches_per_sec={:.6}", cmd.batches as f64 / elapsed.max(1e-9));
    Ok(())
}
