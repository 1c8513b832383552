//! Subcommand implementations. Each writes its report to `out` and maps
//! failures to a [`CliError`].

use std::io::Write;

use antimagic_core::format::{serialize, StructuredDocument};
use antimagic_core::oracle::{sample_tree, search_antimagic};
use antimagic_core::{
    decompose, find_even_path, generate, is_antimagic, label_with, parse_tree, residue_audit,
    vertex_sums, AntimagicVerdict, CaseTag, EdgeLabeling, EvenPathStatus, GenSpec, LabelError,
    LabelOptions, ResidueAudit, Tree,
};
use serde::Serialize;
use serde_json::json;

use crate::bench::bench_size;
use crate::stress::{run_stress, StressConfig};
use crate::{CliError, Command, InputArg};

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .and_then(|_| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| CliError::Internal(format!("write failed: {e}")))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    emit(out, &text)
}

fn read_tree(input: &InputArg) -> Result<Tree, CliError> {
    parse_tree(&input.read()?).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Label { input, format } => cmd_label(input, (*format).into(), out),
        Command::Verify { input } => cmd_verify(input, out),
        Command::Classify { input } => cmd_classify(input, out),
        Command::Oracle {
            input,
            random_n,
            seed,
            budget,
        } => {
            let tree = match input {
                Some(path) => read_tree(&InputArg {
                    input: path.clone(),
                })?,
                None if *random_n >= 1 => sample_tree(*random_n, *seed),
                None => return Err(CliError::Usage("--random-n must be at least 1".into())),
            };
            cmd_oracle(&tree, *budget, out)
        }
        Command::Gen {
            p,
            budget,
            seed,
            bias,
            format,
        } => {
            let spec = GenSpec::new(*p, *budget, *seed).with_bias(*bias);
            let tree = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = serialize(&tree, None, (*format).into())
                .map_err(|e| CliError::Internal(e.to_string()))?;
            emit(out, &text)
        }
        Command::Stress {
            trials,
            p_min,
            p_max,
            budget_max,
            seed,
            oracle_max_m,
        } => {
            let cfg = StressConfig {
                trials: *trials,
                p_min: *p_min,
                p_max: *p_max,
                budget_max: *budget_max,
                seed: *seed,
                oracle_max_m: *oracle_max_m,
            };
            cfg.validate()?;
            let summary = run_stress(&cfg);
            emit(out, &summary.to_string())?;
            if summary.passed() {
                Ok(())
            } else {
                Err(CliError::Findings(format!(
                    "{} stress trials failed",
                    summary.failures.len()
                )))
            }
        }
        Command::Bench { sizes, p, seed } => {
            if *p == 0 {
                return Err(CliError::Usage("--p must be at least 1".into()));
            }
            let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
            emit(
                out,
                &format!(
                    "bench: p={p} seed={seed} arch={} threads={threads} label=single-threaded",
                    std::env::consts::ARCH
                ),
            )?;
            for &size in sizes {
                emit(out, &bench_size(size, *p, *seed)?.to_string())?;
            }
            Ok(())
        }
    }
}

/// Output of `label --format structured`.
#[derive(Debug, Serialize)]
pub struct LabelReport {
    #[serde(flatten)]
    pub document: StructuredDocument,
    pub case: CaseTag,
    pub p: usize,
    pub ell: usize,
    pub audit: ResidueAudit,
}

fn label_error(err: LabelError, input: &InputArg) -> CliError {
    match err {
        LabelError::PreconditionViolated(status) => CliError::Precondition {
            status,
            input: input.display(),
        },
        other => CliError::Internal(other.to_string()),
    }
}

pub fn cmd_label(
    input: &InputArg,
    format: antimagic_core::Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let tree = read_tree(input)?;
    let construction = label_with(
        &tree,
        LabelOptions {
            check_invariants: false,
        },
    )
    .map_err(|e| label_error(e, input))?;
    let verdict = is_antimagic(&tree, &construction.labeling);
    if !verdict.is_antimagic() {
        return Err(CliError::Internal(format!(
            "constructed labeling is not antimagic: {verdict:?}"
        )));
    }
    let audit = residue_audit(
        &tree,
        &construction.decomposition,
        &construction.labeling,
        construction.ell(),
    );
    if !audit.ok {
        let first = audit
            .deviations
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(CliError::Internal(format!("residue audit failed: {first}")));
    }
    match format {
        antimagic_core::Format::Structured => {
            let document = StructuredDocument::new(&tree, Some(&construction.labeling))
                .map_err(|e| CliError::Internal(e.to_string()))?;
            emit_json(
                out,
                &LabelReport {
                    document,
                    case: construction.decomposition.case_tag,
                    p: construction.decomposition.p,
                    ell: construction.ell(),
                    audit,
                },
            )
        }
        other => {
            let text = serialize(&tree, Some(&construction.labeling), other)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            emit(out, &text)
        }
    }
}

/// Reads an edge list whose lines may carry `# label=k` comments. Returns
/// the tree and, when every edge carries a label, the labeling.
pub fn parse_labeled_edge_list(text: &str) -> Result<(Tree, Option<EdgeLabeling>), CliError> {
    let tree = parse_tree(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut labels = Vec::with_capacity(tree.edge_count());
    for (i, line) in text.lines().enumerate() {
        let (body, comment) = line.split_once('#').unwrap_or((line, ""));
        if body.trim().is_empty() {
            continue;
        }
        let label = comment
            .split_whitespace()
            .find_map(|tok| tok.strip_prefix("label="))
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| CliError::Parse(format!("line {}: bad label {v:?}", i + 1)))
            })
            .transpose()?;
        labels.push(label);
    }
    if labels.iter().all(Option::is_none) {
        return Ok((tree, None));
    }
    let labels: Option<Vec<usize>> = labels.into_iter().collect();
    match labels {
        Some(l) => Ok((tree, Some(EdgeLabeling::from_labels(l)))),
        None => Err(CliError::Parse(
            "some edges carry labels and some do not".into(),
        )),
    }
}

pub fn cmd_verify(input: &InputArg, out: &mut dyn Write) -> Result<(), CliError> {
    let text = input.read()?;
    let (tree, labeling) = if text.trim_start().starts_with('{') {
        let doc: StructuredDocument =
            serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        let (tree, labeling) = doc.to_tree().map_err(|e| CliError::Parse(e.to_string()))?;
        (tree, Some(labeling))
    } else {
        parse_labeled_edge_list(&text)?
    };
    let labeling =
        labeling.ok_or_else(|| CliError::Parse("input carries no edge labels".into()))?;
    let verdict = is_antimagic(&tree, &labeling);
    let sums = vertex_sums(&tree, &labeling).ok();
    emit_json(
        out,
        &json!({
            "antimagic": verdict.is_antimagic(),
            "verdict": verdict,
            "sums": sums.as_ref().map(|s| &s.sums),
            "collisions": sums.as_ref().map(|s| &s.collisions),
        }),
    )?;
    match verdict {
        AntimagicVerdict::Antimagic => Ok(()),
        other => Err(CliError::Findings(format!(
            "labeling is not antimagic: {other:?}"
        ))),
    }
}

/// Which known result covers a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub status: &'static str,
    pub detail: String,
    /// `odd_count`, `even_count` or `none`.
    pub hypothesis: &'static str,
    /// For even count: whether `d(v_p) != d(v_{2p+1}) + 1` or
    /// `d(v_{p+1}) != d(v_0) + 1` holds for the chosen spine ends.
    pub degree_condition: Option<bool>,
    pub constructible: bool,
    pub case: Option<CaseTag>,
    pub p: Option<usize>,
}

pub fn classify(tree: &Tree) -> Classification {
    let status = find_even_path(tree);
    let (hypothesis, degree_condition, case) = match &status {
        EvenPathStatus::OddCount(_) => ("odd_count", None, None),
        EvenPathStatus::EvenPathOfEvenOrder(_) => match decompose(tree) {
            Ok(d) => {
                let p = d.p;
                let deg = |i: usize| tree.degree(d.path[i]);
                let cond = deg(p) != deg(2 * p + 1) + 1 || deg(p + 1) != deg(0) + 1;
                ("even_count", Some(cond), Some(d.case_tag))
            }
            Err(_) => ("even_count", None, None),
        },
        EvenPathStatus::EmptyEven | EvenPathStatus::NotAPath(_) => ("none", None, None),
    };
    Classification {
        status: status.tag(),
        detail: status.to_string(),
        hypothesis,
        degree_condition,
        constructible: case.is_some(),
        case,
        p: status.p(),
    }
}

pub fn cmd_classify(input: &InputArg, out: &mut dyn Write) -> Result<(), CliError> {
    let tree = read_tree(input)?;
    emit_json(out, &classify(&tree))
}

pub fn cmd_oracle(tree: &Tree, budget: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let result = search_antimagic(tree, budget);
    emit_json(
        out,
        &json!({
            "n": tree.vertex_count(),
            "edges": tree.edges(),
            "result": result,
        }),
    )
}
