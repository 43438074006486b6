//! `bstar`: build complexes, compute their invariants, test properties, and
//! run the verification suites.
//!
//! Exit status: 0 when everything holds, 1 when a suite, search or property
//! check fails, 2 on usage, parse or validation errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use bstar_core::classify::{self, find_balanced_coloring, rank_selected, ColoringSearch};
use bstar_core::constructions::family;
use bstar_core::enumerative::FaceVectors;
use bstar_core::explore::{explore, ExploreOptions};
use bstar_core::homology::reduced_betti;
use bstar_core::io::{self, Loaded};
use bstar_core::suites::{run_suite, SuiteOptions, SuiteReport, SUITES};
use bstar_core::{CoefficientField, Coloring, Complex, PropertyReport};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "bstar", version, about = "Exact invariants and Buchsbaum-type properties of simplicial complexes")]
struct Cli {
  /// Print machine-readable JSON instead of text.
  #[arg(long, global = true)]
  json: bool,

  /// Directory where suite and search reports are saved.
  #[arg(long, global = true, env = "BSTAR_CACHE_DIR")]
  cache_dir: Option<PathBuf>,

  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
  /// Build a named family or fixture, e.g. `construct stacked 9 3 -o st.json`.
  Construct {
    /// simplex, simplex-boundary, cross-polytope, multi-point-join, stacked,
    /// skeleton-join, or a fixture name.
    family: String,
    params: Vec<usize>,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
  },
  /// f-, h-, h'- and short h-vectors and the reduced Euler characteristic.
  Vectors {
    file:  PathBuf,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: CoefficientField,
  },
  /// Reduced Betti numbers.
  Homology {
    file:  PathBuf,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: CoefficientField,
  },
  /// Test one property: cm, m-cm, buchsbaum, doubly-buchsbaum, buchsbaum-star,
  /// m-buchsbaum-star, manifold, flag or balanced.
  Check {
    property: String,
    file:     PathBuf,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field:    CoefficientField,
    #[arg(short, default_value_t = 2)]
    m:        u32,
  },
  /// Restrict a balanced complex to the vertices with colors in S.
  RankSelect {
    file:   PathBuf,
    /// Comma-separated colors, e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    colors: Vec<u32>,
    #[arg(short, long)]
    output: Option<PathBuf>,
  },
  /// Run a verification suite (or `all`).
  Verify {
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed:  u64,
    #[arg(long)]
    max_n: Option<usize>,
    /// Override the suite's fields, comma-separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_field)]
    field: Vec<CoefficientField>,
  },
  /// Search for complexes that are m-CM with small missing faces and beat the
  /// conjectured h-vector bound.
  Explore {
    #[arg(long)]
    m:       u32,
    #[arg(long)]
    i:       usize,
    #[arg(long)]
    d:       usize,
    #[arg(long, default_value_t = 7)]
    max_n:   usize,
    #[arg(long, default_value_t = 0)]
    seed:    u64,
    #[arg(long, default_value_t = 20_000)]
    samples: usize,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field:   CoefficientField,
  },
}

fn parse_field(s: &str) -> Result<CoefficientField, String> { s.parse().map_err(|e: bstar_core::Error| e.to_string()) }

/// A failure that is not a usage error.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
  fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result { write!(f, "check failed") }
}

impl std::error::Error for Failed {}

fn main() -> ExitCode {
  let cli = Cli::parse();
  match run(&cli) {
    Ok(()) => ExitCode::SUCCESS,
    Err(e) if e.is::<Failed>() => ExitCode::from(1),
    Err(e) => {
      eprintln!("error: {e:#}");
      ExitCode::from(2)
    }
  }
}

fn load(path: &Path) -> anyhow::Result<Loaded> {
  io::read_file(path).with_context(|| format!("reading {}", path.display()))
}

fn print(cli: &Cli, value: Value, text: impl FnOnce() -> String) {
  if cli.json {
    println!("{}", serde_json::to_string_pretty(&value).expect("json value"));
  } else {
    print!("{}", text());
  }
}

fn write_complex(path: Option<&Path>, file: &io::ComplexFile) -> anyhow::Result<()> {
  match path {
    Some(p) => io::write_file(p, file).with_context(|| format!("writing {}", p.display())),
    None => {
      print!("{}", io::emit(file));
      Ok(())
    }
  }
}

fn save_report(cli: &Cli, report: &SuiteReport, stem: &str) -> anyhow::Result<()> {
  if let Some(dir) = &cli.cache_dir {
    let dir = dir.join("reports");
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(format!("{stem}.json"));
    std::fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
  }
  Ok(())
}

fn emit_report(cli: &Cli, report: &SuiteReport) {
  if cli.json {
    println!("{}", report.to_json());
  } else {
    print!("{}", report.render());
  }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
  match &cli.command {
    Command::Construct { family: name, params, output } => {
      let (complex, coloring) = family(name, params)?;
      let mut meta = BTreeMap::new();
      meta.insert("family".to_string(), json!(name));
      meta.insert("params".to_string(), json!(params));
      let label = if params.is_empty() {
        name.clone()
      } else {
        format!("{name}({})", params.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
      };
      write_complex(output.as_deref(), &io::to_file(&complex, coloring.as_ref(), Some(&label), meta))
    }
    Command::Vectors { file, field } => {
      let l = load(file)?;
      let v = FaceVectors::compute(&l.complex, *field)?;
      print(cli, serde_json::to_value(&v)?, || {
        format!(
          "f  = {:?}\nh  = {:?}\nh' = {:?} (over {field})\nshort h = {:?}\nreduced euler characteristic = {}\npure = {}\n",
          v.f, v.h, v.h_prime.values, v.short_h, v.chi_reduced, v.pure
        )
      });
      Ok(())
    }
    Command::Homology { file, field } => {
      let l = load(file)?;
      let b = reduced_betti(&l.complex, *field)?;
      print(cli, serde_json::to_value(&b)?, || {
        let parts: Vec<String> = b.values.iter().enumerate().map(|(k, x)| format!("b{} = {x}", k as i32 - 1)).collect();
        format!("reduced betti over {field}: {}\n", parts.join(", "))
      });
      Ok(())
    }
    Command::Check { property, file, field, m } => {
      let l = load(file)?;
      check(cli, property, &l, *field, *m)
    }
    Command::RankSelect { file, colors, output } => {
      let l = load(file)?;
      let coloring = match &l.coloring {
        Some(k) => k.clone(),
        None => match find_balanced_coloring(&l.complex)? {
          ColoringSearch::Found(k) => k,
          ColoringSearch::NotColorable => bail!("the complex is not balanced"),
          ColoringSearch::Unknown => bail!("no balanced coloring found within the search budget"),
        },
      };
      let part = rank_selected(&l.complex, &coloring, colors)?;
      // colors of S are renumbered 1..=|S| in increasing order
      let mut s_sorted = colors.clone();
      s_sorted.sort_unstable();
      s_sorted.dedup();
      let renumbered = part
        .vertices()
        .iter()
        .map(|v| (*v, s_sorted.binary_search(&coloring.color(*v).expect("colored")).expect("selected") as u32 + 1));
      let kept = Coloring::from_pairs(renumbered, s_sorted.len() as u32);
      let sub = l.with_complex(part, Some(kept));
      write_complex(output.as_deref(), &sub.to_file())
    }
    Command::Verify { suite, seed, max_n, field } => {
      if suite != "all" && !SUITES.contains(&suite.as_str()) {
        bail!("unknown suite `{suite}`; known suites: {}, all", SUITES.join(", "));
      }
      let opts = SuiteOptions { seed: *seed, max_n: *max_n, fields: (!field.is_empty()).then(|| field.clone()) };
      let report = run_suite(suite, &opts)?;
      save_report(cli, &report, &format!("{suite}-seed{seed}"))?;
      emit_report(cli, &report);
      if report.pass {
        Ok(())
      } else {
        Err(Failed.into())
      }
    }
    Command::Explore { m, i, d, max_n, seed, samples, field } => {
      let opts = ExploreOptions { m: *m, i: *i, d: *d, n_max: *max_n, seed: *seed, samples: *samples, field: *field };
      let report = explore(&opts)?;
      save_report(cli, &report, &format!("explore-m{m}-i{i}-d{d}-n{max_n}-seed{seed}"))?;
      emit_report(cli, &report);
      if report.pass {
        Ok(())
      } else {
        Err(Failed.into())
      }
    }
  }
}

fn check(cli: &Cli, property: &str, l: &Loaded, field: CoefficientField, m: u32) -> anyhow::Result<()> {
  let c: &Complex = &l.complex;
  let report: Option<PropertyReport> = match property {
    "cm" | "cohen-macaulay" => Some(classify::is_cohen_macaulay(c, field)?),
    "m-cm" => Some(classify::is_m_cm(c, m, field)?),
    "buchsbaum" => Some(classify::is_buchsbaum(c, field)?),
    "doubly-buchsbaum" => Some(classify::is_doubly_buchsbaum(c, field)?),
    "buchsbaum-star" | "buchsbaum*" => Some(classify::is_buchsbaum_star(c, field)?),
    "m-buchsbaum-star" | "m-buchsbaum*" => Some(classify::is_m_buchsbaum_star(c, m, field)?),
    "manifold" | "homology-manifold" => Some(classify::is_homology_manifold(c, field)?),
    "flag" | "balanced" => None,
    other => bail!("unknown property `{other}`"),
  };
  let verdict = match report {
    Some(r) => {
      print(cli, serde_json::to_value(&r)?, || format!("{r}\n"));
      r.verdict
    }
    None if property == "flag" => {
      let missing = c.missing_faces().into_iter().find(|f| f.len() != 2);
      let value = json!({ "property": "flag", "verdict": missing.is_none(), "witness": missing });
      print(cli, value, || match &missing {
        None => "flag: true\n".to_string(),
        Some(f) => format!("flag: false (missing face {f})\n"),
      });
      missing.is_none()
    }
    None => {
      let search = match &l.coloring {
        Some(k) => ColoringSearch::Found(k.clone()),
        None => find_balanced_coloring(c)?,
      };
      let (verdict, text) = match &search {
        ColoringSearch::Found(k) => {
          let classes: Vec<String> = k
            .classes()
            .iter()
            .enumerate()
            .map(|(i, vs)| format!("{}: {}", i + 1, vs.iter().map(|v| l.label(*v).to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
          (Some(true), format!("balanced: true ({})\n", classes.join("; ")))
        }
        ColoringSearch::NotColorable => (Some(false), "balanced: false\n".to_string()),
        ColoringSearch::Unknown => (None, "balanced: unknown (search budget exhausted)\n".to_string()),
      };
      print(cli, json!({ "property": "balanced", "verdict": verdict }), || text);
      verdict.unwrap_or(false)
    }
  };
  if verdict {
    Ok(())
  } else {
    Err(Failed.into())
  }
}
