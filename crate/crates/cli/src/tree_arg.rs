//! `--tree` values: `path:a`, `star:l`, `spider:a1,a2,...`, or an edge-list
//! file (`-` reads standard input).

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use giraw::{make_path, make_spider, parse_tree, SpiderSpec, Tree};

pub fn load_tree(spec: &str, max_n: usize) -> Result<Tree> {
    let tree = if let Some(rest) = spec.strip_prefix("path:") {
        let edges = parse_count(rest, spec)?;
        check_size(edges + 1, max_n, spec)?;
        make_path(edges).into_tree()
    } else if let Some(rest) = spec.strip_prefix("star:") {
        let leaves = parse_count(rest, spec)?;
        check_size(leaves + 1, max_n, spec)?;
        if leaves == 0 {
            Tree::singleton()
        } else {
            make_spider(&SpiderSpec::new(vec![1; leaves])?).into_tree()
        }
    } else if let Some(rest) = spec.strip_prefix("spider:") {
        let legs = parse_legs(rest).with_context(|| format!("in tree shorthand `{spec}`"))?;
        let spec_legs = SpiderSpec::new(legs)?;
        check_size(spec_legs.vertex_count(), max_n, spec)?;
        make_spider(&spec_legs).into_tree()
    } else {
        read_tree_file(spec)?
    };
    Ok(tree)
}

pub fn parse_legs(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .with_context(|| format!("`{part}` is not a leg length"))
        })
        .collect()
}

fn parse_count(text: &str, spec: &str) -> Result<usize> {
    text.trim()
        .parse()
        .with_context(|| format!("`{text}` is not a count in tree shorthand `{spec}`"))
}

fn check_size(n: usize, max_n: usize, spec: &str) -> Result<()> {
    // Shorthand trees are cheap to count; only guard against absurd sizes.
    let limit = max_n.max(4096);
    if n > limit {
        bail!("tree `{spec}` has {n} vertices, more than the supported {limit}");
    }
    Ok(())
}

fn read_tree_file(path: &str) -> Result<Tree> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading tree from standard input")?;
        buf
    } else {
        if !Path::new(path).exists() {
            bail!("`{path}` is neither a tree shorthand (path:a, star:l, spider:a1,a2,...) nor an existing file");
        }
        std::fs::read_to_string(path).with_context(|| format!("reading tree file `{path}`"))?
    };
    parse_tree(&text).with_context(|| format!("in tree file `{path}`"))
}
