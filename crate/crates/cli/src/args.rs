use clap::{Parser, Subcommand};
use std::path::PathBuf;

/// Invariants and isomorphism tests for modular group algebras of finite
/// p-groups.
///
/// Groups are given in a small spec language: `D8`, `Q8`, `C:n`,
/// `Ab:n1,n2,…`, `EA:p,r`, `Meta:p,m,n,s,r`, `T:i,n`, `B1G:m`, `B1H:m`,
/// `B2G:m,n`, `B2H:m,n`, `X:spec*spec*…` (direct product) and
/// `Pres:file.json`. Fields are written `p` or `p^k`.
#[derive(Debug, Parser)]
#[command(name = "mip", version)]
pub struct Cli {
    /// JSON file overriding resource caps.
    #[arg(long, global = true, value_name = "FILE")]
    pub caps: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the fingerprint of a group over a field.
    Report {
        spec: String,
        /// Coefficient field; defaults to the prime field of the group.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Compare the fingerprints of two groups.
    Compare {
        spec1: String,
        spec2: String,
        #[arg(long)]
        field: Option<String>,
        /// Exit with status 2 unless some invariant differs.
        #[arg(long)]
        assert_distinguished: bool,
    },
    /// Recompute a reference table and check it cell by cell.
    Tables {
        /// table2, table3, table4, hh1, example-d8q8, broche or jennings.
        name: String,
        /// Print the cells as JSON instead of a text table.
        #[arg(long)]
        json: bool,
    },
    /// Count the kernel of x ↦ x^(p^k) on the section Δ^i/Δ^j.
    KernelSize {
        spec: String,
        i: usize,
        j: usize,
        k: u32,
        #[arg(long)]
        field: Option<String>,
    },
    /// Decide isomorphism of two groups, or of sections Δ^i/Δ^j of their
    /// group algebras.
    Iso {
        spec1: String,
        spec2: String,
        /// `group` or `algebra:i,j`.
        #[arg(long, default_value = "group")]
        mode: String,
        #[arg(long)]
        field: Option<String>,
    },
}

impl Command {
    /// Output format of `report`; JSON unless `--csv` is given.
    pub fn format(&self) -> Option<Format> {
        match self {
            Command::Report { csv: true, .. } => Some(Format::Csv),
            Command::Report { .. } => Some(Format::Json),
            _ => None,
        }
    }
}
