use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{Ctx, Verdict};
use crate::args::FetchArgs;
use crate::error::{CliError, CliResult};
use crate::input::read_text;
use crate::output::sha256_hex;

const MAX_CASE_BYTES: u64 = 256 * 1024 * 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub url: String,
    pub sha256: String,
    pub file_name: String,
}

#[derive(Debug, Serialize)]
struct Fetched {
    url: String,
    file: String,
    sha256: String,
    /// Already present with the expected checksum.
    cached: bool,
}

pub fn parse_list(text: &str) -> Result<Vec<Entry>, String> {
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (url, sha) = match fields.as_slice() {
            [url, sha] | [url, sha, _] => (*url, *sha),
            _ => {
                return Err(format!(
                    "line {}: expected `<url> <sha256> [file name]`",
                    k + 1
                ))
            }
        };
        if sha.len() != 64 || !sha.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(format!("line {}: {sha:?} is not a hex SHA-256", k + 1));
        }
        let file_name = match fields.get(2) {
            Some(name) => name.to_string(),
            None => url
                .rsplit('/')
                .next()
                .filter(|s| !s.is_empty())
                .ok_or_else(|| format!("line {}: cannot derive a file name from {url}", k + 1))?
                .to_string(),
        };
        if file_name.contains('/') || file_name.contains('\\') || file_name.starts_with('.') {
            return Err(format!("line {}: unsafe file name {file_name:?}", k + 1));
        }
        entries.push(Entry {
            url: url.to_string(),
            sha256: sha.to_ascii_lowercase(),
            file_name,
        });
    }
    Ok(entries)
}

fn download(url: &str) -> CliResult<Vec<u8>> {
    let fail = |message: String| CliError::Fetch {
        url: url.to_string(),
        message,
    };
    if let Some(path) = url.strip_prefix("file://") {
        return fs::read(path).map_err(|e| fail(e.to_string()));
    }
    let mut resp = ureq::get(url).call().map_err(|e| fail(e.to_string()))?;
    resp.body_mut()
        .with_config()
        .limit(MAX_CASE_BYTES)
        .read_to_vec()
        .map_err(|e| fail(e.to_string()))
}

pub fn run(args: &FetchArgs, ctx: &mut Ctx, out_dir: &Path) -> CliResult<Verdict> {
    let entries = parse_list(&read_text(&args.urls)?)
        .map_err(|m| CliError::Usage(format!("{}: {m}", args.urls.display())))?;
    let dest = args.dest.as_deref().unwrap_or(out_dir);
    fs::create_dir_all(dest).map_err(|source| CliError::Write {
        path: dest.to_path_buf(),
        source,
    })?;

    let mut fetched = Vec::with_capacity(entries.len());
    for e in &entries {
        let target = dest.join(&e.file_name);
        if let Ok(existing) = fs::read(&target) {
            if sha256_hex(&existing) == e.sha256 {
                ctx.out.say(format!("{}: up to date", e.file_name));
                fetched.push(Fetched {
                    url: e.url.clone(),
                    file: e.file_name.clone(),
                    sha256: e.sha256.clone(),
                    cached: true,
                });
                continue;
            }
        }
        let bytes = download(&e.url)?;
        let got = sha256_hex(&bytes);
        if got != e.sha256 {
            return Err(CliError::Fetch {
                url: e.url.clone(),
                message: format!("checksum mismatch: expected {}, got {got}", e.sha256),
            });
        }
        fs::write(&target, &bytes).map_err(|source| CliError::Write {
            path: target,
            source,
        })?;
        ctx.out
            .say(format!("{}: {} bytes verified", e.file_name, bytes.len()));
        fetched.push(Fetched {
            url: e.url.clone(),
            file: e.file_name.clone(),
            sha256: got,
            cached: false,
        });
    }
    ctx.out.json(
        "fetch.json",
        &serde_json::json!({ "dest": dest, "cases": fetched }),
    )?;
    Ok(None)
}
