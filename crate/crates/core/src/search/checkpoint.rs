//! Append-only record of finished subtrees.
//!
//! The first line identifies the query; every further line is
//! `<prefix graph6>\t<count>\t<comma-separated graph6 results>\t<stats>`,
//! where the stats field lists the five prune counters and then the node
//! count of every level, comma separated.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use crate::error::SearchError;
use crate::graph::{decode_graph6, encode_graph6};
use crate::graph::SimpleGraph;

use super::engine::SearchStats;

pub(crate) struct Checkpoint {
    file: Mutex<File>,
    completed: BTreeMap<String, (Vec<SimpleGraph>, SearchStats)>,
}

fn header(query: &str, n: usize) -> String {
    format!("# pcage checkpoint {query} n={n}")
}

impl Checkpoint {
    pub fn open(path: &Path, query: &str, n: usize) -> Result<Checkpoint, SearchError> {
        let head = header(query, n);
        let mut completed = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            let mut lines = reader.lines();
            match lines.next().transpose()? {
                Some(first) if first == head => {}
                Some(first) => return Err(SearchError::Checkpoint(format!("belongs to another query: {first:?}"))),
                None => {}
            }
            for (i, line) in lines.enumerate() {
                let line = line?;
                if line.is_empty() {
                    continue;
                }
                let (prefix, entry) = parse_line(&line).ok_or_else(|| SearchError::Checkpoint(format!("corrupt line {}", i + 2)))?;
                completed.insert(prefix, entry);
            }
        }
        let fresh = !path.exists() || std::fs::metadata(path)?.len() == 0;
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        if fresh {
            writeln!(file, "{head}")?;
        }
        Ok(Checkpoint { file: Mutex::new(file), completed })
    }

    pub fn completed(&self) -> &BTreeMap<String, (Vec<SimpleGraph>, SearchStats)> {
        &self.completed
    }

    pub fn record(&self, prefix: &str, found: &[SimpleGraph], st: &SearchStats) -> Result<(), SearchError> {
        let codes: Vec<String> = found.iter().map(encode_graph6).collect::<Result<_, _>>()?;
        let counters = [st.budget_pruned, st.nonplanar, st.noncanonical, st.duplicates, st.leaves_checked];
        let stats: Vec<String> = counters.iter().chain(&st.nodes).map(u64::to_string).collect();
        let line = format!("{prefix}\t{}\t{}\t{}\n", codes.len(), codes.join(","), stats.join(","));
        let mut f = self.file.lock().map_err(|_| SearchError::Checkpoint("writer poisoned".into()))?;
        f.write_all(line.as_bytes())?;
        f.flush()?;
        Ok(())
    }
}

fn parse_line(line: &str) -> Option<(String, (Vec<SimpleGraph>, SearchStats))> {
    let mut parts = line.split('\t');
    let prefix = parts.next()?;
    let count: usize = parts.next()?.parse().ok()?;
    let list = parts.next()?;
    let nums: Vec<u64> = parts.next()?.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?;
    if parts.next().is_some() || nums.len() < 5 {
        return None;
    }
    decode_graph6(prefix).ok()?;
    let graphs: Vec<SimpleGraph> = if list.is_empty() {
        Vec::new()
    } else {
        list.split(',').map(|c| decode_graph6(c).ok()).collect::<Option<_>>()?
    };
    let st = SearchStats {
        budget_pruned: nums[0],
        nonplanar: nums[1],
        noncanonical: nums[2],
        duplicates: nums[3],
        leaves_checked: nums[4],
        nodes: nums[5..].to_vec(),
    };
    (graphs.len() == count).then(|| (prefix.to_string(), (graphs, st)))
}
