//! oriflip: generate, check, flip, and render flat-origami crease
//! patterns with mountain-valley assignments.
//!
//! Documents are JSON (see the library's document module); `-` means
//! stdin or stdout. Exit codes: 0 success, 1 domain failure such as an
//! invalid assignment, 2 usage error. Randomized behavior is seeded,
//! default seed 0, so every run is reproducible.

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use oriflip::document::{self, serialize_document, Params, PatternDescriptor};
use oriflip::flip::{apply_sequence, FlipSequence};
use oriflip::flipgraph::{build_flip_graph, components_and_diameter, sample_valid};
use oriflip::pattern::{huffman, miura, square, triangle, twist};
use oriflip::render::{render_svg, RenderOptions};
use oriflip::validity::vertex_verdicts;
use oriflip::{miura_minflip, square_minflip, triangle_reconfig};
use oriflip::{CreasePattern, FaceId, Family, MvAssignment};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::{Read, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "oriflip", version, about = "Flat-origami crease patterns and face-flip reconfiguration")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a pattern document
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Rows of the tessellation
        #[arg(long, visible_alias = "rows")]
        m: Option<usize>,
        /// Columns of the tessellation
        #[arg(long, visible_alias = "cols")]
        n: Option<usize>,
        /// Ring radius for the hexagonal triangle-lattice star
        #[arg(long)]
        radius: Option<usize>,
        /// Parallelogram angle in degrees, an exact rational like 60 or 45/2
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value_t = MvPreset::Canonical)]
        mv: MvPreset,
        /// Document supplying the assignment for --mv from-file
        #[arg(long, required_if_eq("mv", "from-file"))]
        mv_file: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check local flat-foldability, one verdict per interior vertex
    Check { input: String },
    /// Flip faces in order; every intermediate state must stay valid
    Flip {
        input: String,
        /// Face id to flip; repeat for a sequence
        #[arg(short, long = "face", required = true)]
        face: Vec<usize>,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Minimum flip set or sequence from document A to document B
    Minflip {
        /// Expected family, checked against the documents
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        a: String,
        b: String,
    },
    /// Flip sequence to the canonical triangle configuration, or between
    /// two triangle-region documents
    Reconfigure {
        #[arg(long)]
        to_canonical: bool,
        a: String,
        b: Option<String>,
    },
    /// Exhaustive flip graph of the document's pattern
    Flipgraph {
        input: String,
        /// Also list the nodes (hex states) and edges
        #[arg(long)]
        dump: bool,
    },
    /// Render the document as SVG
    Render {
        input: String,
        /// Label each face with its id
        #[arg(long)]
        labels: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Square,
    Miura,
    Triangle,
    Huffman,
    Twist,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Square => "square",
            FamilyArg::Miura => "miura",
            FamilyArg::Triangle => "triangle",
            FamilyArg::Huffman => "huffman",
            FamilyArg::Twist => "twist",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MvPreset {
    Canonical,
    RandomValid,
    FromFile,
}

type DynError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ! {
    // exits with code 2 and the schema help footer
    Cli::command().error(clap::error::ErrorKind::InvalidValue, msg).exit()
}

fn read_input(path: &str) -> Result<String, DynError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?)
    }
}

fn write_output(path: &str, text: &str) -> Result<(), DynError> {
    if path == "-" {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok(())
}

fn load(path: &str) -> Result<(CreasePattern, MvAssignment), DynError> {
    Ok(document::parse_document(&read_input(path)?)?)
}

fn canonical_of(p: &CreasePattern) -> MvAssignment {
    match p.family() {
        Family::SquareGrid => square::canonical_mv(p),
        Family::Miura => miura::canonical_mv(p),
        Family::TriangleRegion => triangle::canonical_mv(p),
        Family::HuffmanGrid => huffman::canonical_mv(p),
        Family::SquareTwist => twist::canonical_mv(p),
    }
}

fn print_sequence(seq: &FlipSequence) {
    for f in seq {
        println!("{f}");
    }
    println!("length: {}", seq.len());
}

fn run(cmd: Cmd) -> Result<ExitCode, DynError> {
    match cmd {
        Cmd::Gen { family, m, n, radius, alpha, mv, mv_file, seed, output } => {
            if mv_file.is_some() && mv != MvPreset::FromFile {
                usage_error("--mv-file only makes sense with --mv from-file");
            }
            let desc = PatternDescriptor {
                family: family.name().to_string(),
                params: Params { rows: m, cols: n, alpha, radius },
            };
            // argv-level problems are usage errors, not domain failures
            let spec = document::spec_of(&desc).unwrap_or_else(|e| usage_error(&e.to_string()));
            let p = spec.build().unwrap_or_else(|e| usage_error(&e.to_string()));
            let mu = match mv {
                MvPreset::Canonical => canonical_of(&p),
                MvPreset::RandomValid => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    sample_valid(&p, &mut rng, 1_000_000)
                        .ok_or("rejection sampling found no valid assignment")?
                }
                MvPreset::FromFile => {
                    let (fp, fmu) = load(&mv_file.expect("clap enforces --mv-file"))?;
                    if fp.spec != p.spec {
                        return Err("--mv-file describes a different pattern".into());
                    }
                    fmu
                }
            };
            write_output(&output, &serialize_document(&p, &mu))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { input } => {
            let (p, mu) = load(&input)?;
            let verdicts = vertex_verdicts(&mu, &p);
            let mut bad = 0;
            for v in &verdicts {
                if v.valid {
                    println!("vertex {}: ok (maekawa {})", v.vertex, v.maekawa_sum);
                } else {
                    bad += 1;
                    println!(
                        "vertex {}: violates {} (maekawa {})",
                        v.vertex,
                        v.violated_rule.name(),
                        v.maekawa_sum
                    );
                }
            }
            if bad == 0 {
                println!("valid: {} interior vertices pass", verdicts.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("invalid: {bad} of {} interior vertices fail", verdicts.len());
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Flip { input, face, output } => {
            let (p, mu) = load(&input)?;
            let seq: FlipSequence = face.into_iter().map(FaceId).collect();
            let end = apply_sequence(&mu, &p, &seq, true)?;
            write_output(&output, &serialize_document(&p, &end))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Minflip { family, a, b } => {
            let (p, mua) = load(&a)?;
            let (pb, mub) = load(&b)?;
            if pb.spec != p.spec {
                return Err("documents describe different patterns".into());
            }
            if let Some(f) = family {
                if f.name() != p.family().name() {
                    return Err(format!(
                        "--family {} but the documents are {}",
                        f.name(),
                        p.family().name()
                    )
                    .into());
                }
            }
            let seq = match p.family() {
                Family::SquareGrid => square_minflip::min_flip_set(&mua, &mub, &p)?,
                Family::SquareTwist => square_minflip::twist_min_flip_set(&mua, &mub, &p)?,
                Family::Miura => miura_minflip::min_flip_sequence(&mua, &mub, &p)?,
                other => {
                    return Err(format!(
                        "no minimum-flip routine for the {} family{}",
                        other.name(),
                        if other == Family::TriangleRegion {
                            "; see the reconfigure subcommand"
                        } else {
                            ""
                        }
                    )
                    .into())
                }
            };
            print_sequence(&seq);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reconfigure { to_canonical, a, b } => {
            let (p, mua) = load(&a)?;
            let n = p.face_count();
            let (seq, target, bound) = match (to_canonical, b) {
                (true, Some(_)) => usage_error("--to-canonical takes a single document"),
                (true, None) => {
                    let seq = triangle_reconfig::reconfigure_to_canonical(&mua, &p)?;
                    (seq, triangle_reconfig::canonical_config(&p)?, 2 * n)
                }
                (false, Some(bpath)) => {
                    let (pb, mub) = load(&bpath)?;
                    if pb.spec != p.spec {
                        return Err("documents describe different patterns".into());
                    }
                    let seq = triangle_reconfig::reconfigure(&mua, &mub, &p)?;
                    (seq, mub, 4 * n)
                }
                (false, None) => usage_error("reconfigure needs a target document or --to-canonical"),
            };
            let end = apply_sequence(&mua, &p, &seq, true)?;
            if !end.eq_on_interior(&target, &p) {
                return Err("flip sequence does not reach the target".into());
            }
            print_sequence(&seq);
            println!("faces: {n}");
            println!("bound: {bound}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Flipgraph { input, dump } => {
            let (p, _) = load(&input)?;
            let g = build_flip_graph(&p)?;
            let (comps, diams) = components_and_diameter(&g);
            println!("nodes: {}", g.nodes.len());
            println!("edges: {}", g.edge_count());
            println!("components: {comps}");
            let diams: Vec<String> = diams.iter().map(|d| d.to_string()).collect();
            println!("component diameters: {}", diams.join(" "));
            if dump {
                for (i, s) in g.nodes.iter().enumerate() {
                    println!("node {i} {s:#x}");
                }
                for (i, neigh) in g.adj.iter().enumerate() {
                    for &j in neigh {
                        if i < j {
                            println!("edge {i} {j}");
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Render { input, labels, output } => {
            let (p, mu) = load(&input)?;
            let svg = render_svg(&p, &mu, RenderOptions { face_labels: labels });
            write_output(&output, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
