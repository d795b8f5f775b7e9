//! `hfskit` — inspect and convert the arithmetic encodings of hereditarily
//! finite sets, hypergraphs, and digraphs from the command line.
//!
//! Every command reads decimal numbers of unbounded size, writes deterministic
//! text to standard output, and exits 0 on success, 1 on a domain error
//! (message on standard error), or 2 on a usage error.

use std::io::{Read as _, Write as _};

use clap::{Parser, Subcommand, ValueEnum};
use hfskit::*;

#[derive(Parser)]
#[command(name = "hfskit", version, about = "Natural numbers as sets, graphs, and pairs")]
struct Cli {
    /// Cap on bit positions reachable by 2^k; overrides HFSKIT_MAX_BITS
    #[arg(long, global = true, value_name = "N")]
    max_bits: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Notation {
    /// hereditarily finite set notation such as {0,{1}}
    Hfs,
    /// a set of sets of urelement indices such as {{0,1},{2}}
    Hypergraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Hfs,
    Hypergraph,
    Digraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum View {
    /// edges point from each set to its elements, transitively
    Contains,
    /// edges point from each element to the sets containing it
    Member,
    /// the containment dag relabeled with consecutive small vertices
    Compressed,
    /// the bit-interleaving digraph codec (bijective, ignores ulimit)
    Digraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOp {
    Union,
    Intersection,
    Difference,
    /// insert the first code as an element of the second
    Adduction,
}

#[derive(Subcommand)]
enum Command {
    /// Parse set notation and print its numeric code
    Encode {
        /// text such as "{{},{{}}}" or, with --ulimit 3, "{0,1,2,{1}}"
        text: String,
        /// urelement limit: literals below it denote atoms, not codes
        #[arg(long, default_value = "0")]
        ulimit: Nat,
        /// which notation the text uses
        #[arg(long, value_enum, default_value_t = Notation::Hfs)]
        kind: Notation,
    },
    /// Print the object a numeric code denotes
    Decode {
        n: Nat,
        #[arg(long, default_value = "0")]
        ulimit: Nat,
        #[arg(long, value_enum, default_value_t = Notation::Hfs)]
        kind: Notation,
    },
    /// Stream the first objects of a kind in rank order, one per line
    Enum {
        #[arg(value_enum)]
        kind: EnumKind,
        /// how many objects to print
        #[arg(long, default_value_t = 10)]
        count: u64,
        /// urelement limit (hfs only)
        #[arg(long, default_value = "0")]
        ulimit: Nat,
    },
    /// Combine two numbers into one
    Pair {
        a: Nat,
        b: Nat,
        /// kuratowski, cantor, or bitmerge
        #[arg(long, default_value_t = PairScheme::BitMerge)]
        scheme: PairScheme,
    },
    /// Split a number back into the two it pairs
    Unpair {
        z: Nat,
        /// kuratowski, cantor, or bitmerge
        #[arg(long, default_value_t = PairScheme::BitMerge)]
        scheme: PairScheme,
    },
    /// Count the nodes of the membership tree a code denotes
    Size {
        n: Nat,
        #[arg(long, default_value = "0")]
        ulimit: Nat,
    },
    /// Apply a set operation to two codes and print the resulting code
    Setop {
        #[arg(value_enum)]
        op: SetOp,
        a: Nat,
        b: Nat,
    },
    /// Print the code of the powerset of the set a code denotes
    Powset { n: Nat },
    /// Print the code of the k-th von Neumann ordinal
    Ordinal { k: Nat },
    /// Print the code of a choice function for the set a code denotes
    Choice { n: Nat },
    /// Render a code as a graph
    Graph {
        n: Nat,
        #[arg(long, value_enum, default_value_t = View::Digraph)]
        view: View,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// urelement limit (contains/member views only)
        #[arg(long, default_value = "0")]
        ulimit: Nat,
    },
    /// Decorate an acyclic graph back into a code (inverse of graph --view compressed)
    Dag {
        /// JSON of the form {"vertices":[...],"edges":[[s,d],...]}, or "-" for stdin
        json: String,
    },
    /// Reverse every edge of the digraph a code denotes and print the new code
    Transpose { n: Nat },
}

fn main() {
    let cli = Cli::parse();
    match configured_max_bits(cli.max_bits) {
        Ok(bits) => set_max_bits(bits),
        Err(message) => {
            eprintln!("hfskit: {message}");
            std::process::exit(1);
        }
    }
    if let Err(e) = run(cli.command) {
        eprintln!("hfskit: {e}");
        std::process::exit(1);
    }
}

/// The --max-bits flag wins over HFSKIT_MAX_BITS, which wins over the default.
fn configured_max_bits(flag: Option<u64>) -> std::result::Result<u64, String> {
    if let Some(bits) = flag {
        return Ok(bits);
    }
    match std::env::var("HFSKIT_MAX_BITS") {
        Ok(text) => text
            .parse()
            .map_err(|_| format!("HFSKIT_MAX_BITS must be a number of bits, found {text:?}")),
        Err(_) => Ok(DEFAULT_MAX_BITS),
    }
}

fn run(command: Command) -> hfskit::Result<()> {
    match command {
        Command::Encode { text, ulimit, kind } => {
            let ulimit = Ulimit::from(ulimit);
            let code = match kind {
                Notation::Hfs => hfs_to_nat(&parse_hfs(&text, &ulimit)?, &ulimit)?,
                Notation::Hypergraph => hypergraph_to_nat(&parse_hypergraph(&text)?)?,
            };
            println!("{code}");
        }
        Command::Decode { n, ulimit, kind } => {
            let ulimit = Ulimit::from(ulimit);
            match kind {
                Notation::Hfs => println!("{}", print_hfs(&nat_to_hfs(&n, &ulimit))),
                Notation::Hypergraph => println!("{}", nat_to_hypergraph(&n)),
            }
        }
        Command::Enum { kind, count, ulimit } => {
            let ulimit = Ulimit::from(ulimit);
            let mut out = std::io::stdout().lock();
            for n in nat_stream().take(count as usize) {
                let line = match kind {
                    EnumKind::Hfs => print_hfs(&nat_to_hfs(&n, &ulimit)),
                    EnumKind::Hypergraph => nat_to_hypergraph(&n).to_string(),
                    EnumKind::Digraph => to_json(&nat_to_digraph(&n)),
                };
                writeln!(out, "{line}").and_then(|()| out.flush()).ok();
            }
        }
        Command::Pair { a, b, scheme } => println!("{}", pair_with(scheme, &a, &b)?),
        Command::Unpair { z, scheme } => {
            let p = unpair_with(scheme, &z)?;
            println!("{} {}", p.first, p.second);
        }
        Command::Size { n, ulimit } => println!("{}", nat_size(&n, &Ulimit::from(ulimit))),
        Command::Setop { op, a, b } => {
            let result = match op {
                SetOp::Union => nat_union(&a, &b)?,
                SetOp::Intersection => nat_intersection(&a, &b)?,
                SetOp::Difference => nat_difference(&a, &b)?,
                SetOp::Adduction => nat_adduction(&a, &b)?,
            };
            println!("{result}");
        }
        Command::Powset { n } => println!("{}", nat_powset(&n)?),
        Command::Ordinal { k } => println!("{}", nat_ordinal(&k)?),
        Command::Choice { n } => println!("{}", nat_choice_fun(&n)?),
        Command::Graph {
            n,
            view,
            format,
            ulimit,
        } => {
            let ulimit = Ulimit::from(ulimit);
            let g = match view {
                View::Contains => contains_dag(&n, &ulimit),
                View::Member => member_dag(&n, &ulimit),
                View::Compressed => compress_dag(&n),
                View::Digraph => nat_to_digraph(&n),
            };
            match format {
                GraphFormat::Json => println!("{}", to_json(&g)),
                GraphFormat::Dot => print!("{}", to_dot(&g)),
            }
        }
        Command::Dag { json } => {
            let text = if json == "-" {
                let mut buffer = String::new();
                std::io::stdin()
                    .read_to_string(&mut buffer)
                    .map_err(|e| Error::Json {
                        message: format!("could not read stdin: {e}"),
                    })?;
                buffer
            } else {
                json
            };
            println!("{}", decorate(&from_json(&text)?)?);
        }
        Command::Transpose { n } => println!("{}", transpose_nat(&n)?),
    }
    Ok(())
}
