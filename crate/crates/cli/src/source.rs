use sha2::{Digest, Sha256};

use ohmnet_core::{parse_graph, FamilySpec, Graph};

use crate::args::Source;
use crate::{CliError, CliResult};

/// A graph together with the name used for it in reports.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub label: String,
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
}

/// Builds the graph named by `--family/--n` or `--file`; exactly one of the
/// two must be given.
pub fn load(source: &Source) -> CliResult<Loaded> {
    match (&source.family, &source.file) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either --family or --file, not both".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "an input is required: --family NAME --n SIZE or --file PATH".into(),
        )),
        (Some(family), None) => {
            let size = source
                .n
                .ok_or_else(|| CliError::Usage(format!("--family {family} needs --n")))?;
            let spec = FamilySpec::new(*family, size)?;
            Ok(Loaded {
                label: spec.to_string(),
                graph: spec.generate(),
                spec: Some(spec),
            })
        }
        (None, Some(path)) => {
            if source.n.is_some() {
                return Err(CliError::Usage("--n applies to --family only".into()));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let graph = parse_graph(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
            Ok(Loaded {
                label: format!("{}#{}", path.display(), &digest[..12]),
                graph,
                spec: None,
            })
        }
    }
}

/// Validates a `--pair I J` against the graph.
pub(crate) fn pair(loaded: &Loaded, raw: &[usize]) -> CliResult<(usize, usize)> {
    let n = loaded.graph.vertex_count();
    let [i, j] = raw else {
        return Err(CliError::Usage("--pair takes two vertex labels".into()));
    };
    for v in [*i, *j] {
        if v == 0 || v > n {
            return Err(CliError::Usage(format!(
                "vertex {v} is outside 1..={n} in {}",
                loaded.label
            )));
        }
    }
    Ok((*i, *j))
}
