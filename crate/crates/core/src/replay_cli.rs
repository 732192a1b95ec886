//! `replay`: load a scene, apply an event script, write the final scene and
//! SVG snapshots.
//!
//! ```text
//! replay --scene s.json [--script e.txt] [--out f.json] [--svg f.svg] [--snapshot-every N]
//! ```
//!
//! With `--snapshot-every N` (N > 0) a frame `frame_000001.svg`,
//! `frame_000002.svg`, ... is written next to the `--svg` file after every N
//! events. Diagnostics go to stderr; nothing is written to stdout.
//!
//! Exit codes: 0 success, 2 bad arguments, 3 scene or script parse error,
//! 4 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;

use crate::scene_io::{apply_event, load_scene, parse_script, render_svg, save_scene, Event};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "replay",
    about = "Replay pointer event scripts against a scene deterministically"
)]
pub struct CliConfig {
    /// Scene file to start from.
    #[arg(long, value_name = "PATH")]
    pub scene: PathBuf,
    /// Event script to apply.
    #[arg(long, value_name = "PATH")]
    pub script: Option<PathBuf>,
    /// Where to write the final scene.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Where to write the final SVG snapshot.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Also write a numbered SVG frame every N events (0 = final only).
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub snapshot_every: u64,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn io_failure(action: &str, path: &Path, err: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("cannot {action} {}: {err}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure("read", path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure("write", path, e))
}

pub fn frame_name(index: u64) -> String {
    format!("frame_{index:06}.svg")
}

fn execute(cfg: &CliConfig) -> Result<(), Failure> {
    if cfg.snapshot_every > 0 && cfg.svg.is_none() {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "--snapshot-every needs --svg to locate the frame directory".into(),
        });
    }
    let scene_text = read(&cfg.scene)?;
    let mut scene = load_scene(&scene_text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", cfg.scene.display()),
    })?;
    let events: Vec<Event> = match &cfg.script {
        Some(path) => parse_script(&read(path)?).map_err(|e| Failure {
            code: EXIT_PARSE,
            message: format!("{}: {e}", path.display()),
        })?,
        None => Vec::new(),
    };

    let frame_dir = cfg
        .svg
        .as_deref()
        .and_then(Path::parent)
        .map(Path::to_path_buf)
        .unwrap_or_default();
    for (done, event) in (1u64..).zip(&events) {
        apply_event(&mut scene, event);
        if cfg.snapshot_every > 0 && done % cfg.snapshot_every == 0 {
            let path = frame_dir.join(frame_name(done / cfg.snapshot_every));
            write(&path, &render_svg(&scene))?;
        }
    }

    if let Some(out) = &cfg.out {
        write(out, &save_scene(&scene))?;
    }
    if let Some(svg) = &cfg.svg {
        write(svg, &render_svg(&scene))?;
    }
    Ok(())
}

/// Runs the command line with diagnostics written to `stderr`.
pub fn run_with<I, T>(args: I, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cfg) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "replay: {}", f.message);
            f.code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stderr())
}
