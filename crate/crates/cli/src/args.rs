use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tzstream::rat::{parse_rat, Rat};

/// Upper bound on series orders, stream lengths and block sizes.
pub const MAX_SIZE: usize = 5000;

const GRAMMAR: &str = "\
Expressions use + - * / ^ with integers, x, parentheses and sqrt(...),
e.g. \"1/sqrt(1-x)\" or \"(1-sqrt(1-4*x))/(2*x)\". p/q is division.
Catalog names: g_one, g_exp, g_half, g_catalan, central_binomial,
g_lm(l,m), sqrt_g_lm(l,m), junod_g(b,c).";

#[derive(Parser, Debug)]
#[command(
    name = "tzstream",
    version,
    about = "Exact streaming Toeplitz convolutions via generating functions",
    after_help = GRAMMAR
)]
pub struct Cli {
    /// Emit one JSON object instead of plain text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the coefficients a_0..a_n of a generating function
    Coeffs {
        #[command(flatten)]
        gf: GfArgs,
        #[arg(long, value_parser = size)]
        order: usize,
    },
    /// Run a streamer over an input sequence
    #[command(subcommand)]
    Stream(StreamCommand),
    /// Determinant, rank or degree evidence of a Hankel block
    #[command(subcommand)]
    Hankel(HankelCommand),
    /// Certificate for the buffer size at time t
    Lowerbound {
        #[command(flatten)]
        gf: GfArgs,
        #[arg(long, value_parser = size)]
        t: usize,
        /// Horizon I: the streamer must stay correct through t + I
        #[arg(long = "I", value_parser = size)]
        horizon: usize,
    },
    /// Padé approximant [d-1/d]
    Pade {
        #[command(flatten)]
        gf: GfArgs,
        #[arg(long, value_parser = size)]
        degree: usize,
        /// Expansion order used for the fit and the agreement count
        /// [default: 2*degree + 8]
        #[arg(long, value_parser = size)]
        order: Option<usize>,
    },
    /// Run a determinant or rank check suite
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Continual counting with correlated noise
    #[command(subcommand)]
    Continual(ContinualCommand),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GfArgs {
    /// Catalog entry, e.g. g_half or g_lm(1,1/2)
    #[arg(long)]
    pub gf: Option<String>,
    /// Expression in x
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum StreamCommand {
    /// Stream inputs through T[a]; dense for --gf/--expr, constant
    /// buffer for --num/--den
    Run(StreamRunArgs),
}

#[derive(Args, Debug)]
pub struct StreamRunArgs {
    #[arg(long, conflicts_with_all = ["num", "den"])]
    pub gf: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["gf", "num", "den"])]
    pub expr: Option<String>,
    /// Numerator coefficients p_0,p_1,...
    #[arg(long, requires = "den", allow_hyphen_values = true, value_parser = rat_list)]
    pub num: Option<RatList>,
    /// Denominator coefficients q_0,q_1,...
    #[arg(long, requires = "num", allow_hyphen_values = true, value_parser = rat_list)]
    pub den: Option<RatList>,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input file: one rational per line, # starts a comment
    #[arg(long, conflicts_with = "generator")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub generator: Option<Generator>,
    #[arg(long, value_parser = size)]
    pub length: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// 1, 0, 0, ...
    Impulse,
    /// 1, 1, 1, ...
    Ones,
    /// Integers uniform in [-10, 10]
    Random,
}

#[derive(Subcommand, Debug)]
pub enum HankelCommand {
    /// det H^{(n,n)}, indices 0..=n
    Det(HankelArgs),
    /// rank H^{(I,J)} with pivot-column witness
    Rank(HankelArgs),
    /// Ranks of square blocks and the rational degree they suggest
    Degree {
        #[command(flatten)]
        gf: GfArgs,
        #[arg(long, value_parser = size)]
        order: usize,
    },
}

#[derive(Args, Debug)]
pub struct HankelArgs {
    #[command(flatten)]
    pub gf: GfArgs,
    /// Last row index I
    #[arg(long, value_parser = size)]
    pub rows: usize,
    /// Last column index J
    #[arg(long, value_parser = size)]
    pub cols: usize,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// det H[Catalan]^{(d,d)} = 1
    Catalan {
        #[arg(long, default_value_t = 12, value_parser = size)]
        dmax: usize,
    },
    /// det H[1/sqrt(1-4x)]^{(d,d)} = 2^d and full rank of H[1/sqrt(1-x)]
    Sqrtdet {
        #[arg(long, default_value_t = 12, value_parser = size)]
        dmax: usize,
    },
    /// Junod's closed form for the determinants of G_{b,c}
    Junod {
        #[arg(long, default_value = "5", allow_hyphen_values = true, value_parser = rat)]
        b: Rat,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = rat)]
        c: Rat,
        #[arg(long, default_value_t = 12, value_parser = size)]
        dmax: usize,
    },
    /// Co-rank of H[sqrt g_lm] is at most five
    Corank {
        #[command(flatten)]
        lm: LmArgs,
        #[arg(long, default_value_t = 10, value_parser = size)]
        dmax: usize,
    },
    /// Rank bound from f g = alpha g + beta x g + gamma for the harder sqrt
    Comp {
        #[command(flatten)]
        lm: LmArgs,
        #[arg(long, default_value_t = 10, value_parser = size)]
        dmax: usize,
    },
}

#[derive(Args, Debug)]
pub struct LmArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = rat)]
    pub lambda: Rat,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true, value_parser = rat)]
    pub mu: Rat,
}

#[derive(Subcommand, Debug)]
pub enum ContinualCommand {
    /// Run A(z) = T_1 z + L y with L a Padé approximant of 1/sqrt(1-x)
    Demo {
        #[arg(long, value_parser = size)]
        length: usize,
        #[arg(long, value_parser = size)]
        approx_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Counts z_t, one per line; defaults to all ones
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
pub struct RatList(pub Vec<Rat>);

fn rat(text: &str) -> Result<Rat, String> {
    parse_rat(text.trim()).map_err(|e| e.to_string())
}

fn rat_list(text: &str) -> Result<RatList, String> {
    text.split(',')
        .map(rat)
        .collect::<Result<_, _>>()
        .map(RatList)
}

fn size(text: &str) -> Result<usize, String> {
    let n: usize = text.parse().map_err(|e| format!("{e}"))?;
    if n > MAX_SIZE {
        return Err(format!("at most {MAX_SIZE}"));
    }
    Ok(n)
}
