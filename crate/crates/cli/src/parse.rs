//! Literal parsers for the command line: partitions as "51,1", cycle types
//! as "1^50,2" (meaning f_1 = 50 plus one 2-cycle), rationals as "1/100",
//! "0.01", or "1e-2".

use clap::Args;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use symmix::walks::WalkSpec;
use symmix::young::{CycleType, Partition};

pub fn parse_partition(text: &str) -> Result<Partition, String> {
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let part: usize = token
            .parse()
            .map_err(|_| format!("bad partition part '{token}'"))?;
        parts.push(part);
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

pub fn parse_cycle_type(text: &str) -> Result<CycleType, String> {
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let (length, count) = match token.split_once('^') {
            Some((l, c)) => (
                l.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad cycle length '{l}'"))?,
                c.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad multiplicity '{c}'"))?,
            ),
            None => (
                token
                    .parse::<usize>()
                    .map_err(|_| format!("bad cycle length '{token}'"))?,
                1,
            ),
        };
        parts.extend(std::iter::repeat(length).take(count));
    }
    CycleType::from_parts(&parts).map_err(|e| e.to_string())
}

/// Accepts "p/q", plain decimals like "0.01", and scientific "1e-2".
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator '{num}'"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator '{den}'"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (
            m,
            e.parse::<i32>()
                .map_err(|_| format!("bad exponent '{e}'"))?,
        ),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let value: BigInt = digits.parse().map_err(|_| format!("bad number '{text}'"))?;
    let mut out = BigRational::from(value);
    let shift = exponent - frac_part.len() as i32;
    let ten = BigRational::from(BigInt::from(10));
    if shift >= 0 {
        out *= ten.pow(shift);
    } else {
        out /= ten.pow(-shift);
    }
    Ok(out)
}

/// Walk selection, shared by the distance and simulation subcommands.
#[derive(Args, Clone)]
pub struct WalkArgs {
    /// Degree of the symmetric group
    #[arg(long)]
    pub n: usize,

    /// Walk kind: class | pure-rt | lazy-rt | ri | tri
    #[arg(long, default_value = "pure-rt")]
    pub walk: String,

    /// Driving conjugacy class (for --walk class), e.g. "2,1^3"
    #[arg(long)]
    pub alpha: Option<String>,

    /// Mixture parameter in (0,1) (for --walk ri|tri), e.g. "1/2"
    #[arg(long)]
    pub p: Option<String>,
}

impl WalkArgs {
    pub fn describe(&self) -> String {
        match self.walk.as_str() {
            "class" => format!("class({})", self.alpha.as_deref().unwrap_or("?")),
            other => {
                if let Some(p) = &self.p {
                    format!("{other}(p={p})")
                } else {
                    other.to_string()
                }
            }
        }
    }
}

pub fn parse_walk(args: &WalkArgs) -> Result<WalkSpec, String> {
    let n = args.n;
    match args.walk.as_str() {
        "class" => {
            let alpha = args
                .alpha
                .as_deref()
                .ok_or("--walk class requires --alpha")?;
            let class = parse_cycle_type(alpha)?;
            WalkSpec::class(n, class).map_err(|e| e.to_string())
        }
        "pure-rt" | "rt" => WalkSpec::pure_transpositions(n).map_err(|e| e.to_string()),
        "lazy-rt" => WalkSpec::lazy_transpositions(n).map_err(|e| e.to_string()),
        "ri" | "tri" => {
            let p = parse_rational(args.p.as_deref().ok_or("--walk ri|tri requires --p")?)?;
            if p <= BigRational::zero() || p >= BigRational::one() {
                return Err(format!("--p must lie strictly between 0 and 1, got {p}"));
            }
            if args.walk == "ri" {
                WalkSpec::random_involution(n, p).map_err(|e| e.to_string())
            } else {
                WalkSpec::truncated_random_involution(n, p).map_err(|e| e.to_string())
            }
        }
        other => Err(format!("unknown walk kind '{other}'")),
    }
}
