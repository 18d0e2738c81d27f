//! Command-line surface. Every subcommand writes either aligned text or
//! line-oriented `key=value` records; the same argv and seed always give the
//! same output.

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::braid::BraidWord;
use crate::closure::{
    alternating_family, close, connected_sum, lcs_inverse, markov, markov_join, phi, slide, MarkovMove,
};
use crate::error::{Error, Result};
use crate::invariants::battery;
use crate::ring::{
    expand_commutator, reduce_relator, resolve, to_double_points, to_ideal_form, Relator, SingularBraidWord,
};
use crate::series::{
    ds3_words, ds_sample, lcs_sample, rewrite_mod_ds, CertifiedElement, CommutatorExpr, Series,
    DEFAULT_BASE_BOUND,
};
use crate::word_problem::{equal, normal_form, random_instance, verify_identity, IdentityId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Record,
}

#[derive(Debug, Parser)]
#[command(name = "knotbraid", version, about = "Braids, closures and finite-type knot invariants")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every sampling step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Garside normal form and canonical key.
    Normalize { braid: BraidWord },
    /// Decide equality in the braid group.
    Equal { left: BraidWord, right: BraidWord },
    /// Strand permutation and its cycles.
    Permutation { braid: BraidWord },
    /// PD and Gauss codes of the closure.
    Close { braid: BraidWord },
    /// Invariant battery of the closure.
    Invariants { braid: BraidWord },
    /// Connected-sum braid of two pure braids.
    ConnectSum { x: BraidWord, y: BraidWord },
    /// Closure of `p t_k` for a pure braid `p`.
    Phi { p: BraidWord },
    /// Apply one Markov move.
    Markov(MarkovArgs),
    /// Common stabilization of `b σ_k^{e1}` and `α^{-1} b α σ_k^{e2}`.
    Join {
        braid: BraidWord,
        alpha: BraidWord,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        e1: i32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        e2: i32,
    },
    /// The chain from `x y t` to `x # y`.
    Slide { x: BraidWord, y: BraidWord },
    /// Factors inverting a knot modulo a lower central term.
    Inverse {
        braid: BraidWord,
        #[arg(long)]
        level: u32,
    },
    /// Random certified element of a series term.
    LcsSample {
        strands: usize,
        level: u32,
        #[arg(long, default_value = "lcs")]
        series: Series,
    },
    /// The shaped derived-series words in `P_3`.
    Ds3Words {
        #[arg(long)]
        level: u32,
    },
    /// Rewrite a `B_3` word into `σ1`, `σ2^{-1}` modulo a derived term.
    RewriteDs {
        braid: BraidWord,
        #[arg(long)]
        level: u32,
    },
    /// Alternating prime diagrams in the same derived-series class.
    Alternate {
        braid: BraidWord,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Group-ring computations.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Check identities on seeded random instances.
    Verify {
        #[arg(long)]
        identity: Option<IdentityId>,
        #[arg(long, value_enum, default_value_t = Suite::Identities)]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
pub struct MarkovArgs {
    pub braid: BraidWord,
    /// Stabilize with this sign.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["destabilize", "conjugate"])]
    pub stabilize: Option<i32>,
    #[arg(long, conflicts_with = "conjugate")]
    pub destabilize: bool,
    /// Conjugate by this braid, `g^{-1} b g`.
    #[arg(long)]
    pub conjugate: Option<BraidWord>,
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Expand double points into resolutions.
    Resolve { word: SingularBraidWord },
    /// Product of augmentation factors times a tail.
    IdealForm { word: SingularBraidWord },
    /// `(x_1 - 1) ⋯ (x_n - 1) tail` as singular braids.
    DoublePoints {
        #[arg(long)]
        tail: BraidWord,
        #[arg(required = true)]
        xs: Vec<BraidWord>,
    },
    /// Expansion of `x - 1` along a commutator certificate.
    Expand {
        certificate: String,
        #[arg(long, default_value = "lcs")]
        series: Series,
    },
    /// Reduce `(x_1 - 1) ⋯ (x_m - 1) y` to composite relators.
    ReduceRelator {
        #[arg(long)]
        y: BraidWord,
        #[arg(long)]
        level: u32,
        #[arg(required = true)]
        certificates: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Pins,
}

/// Ordered key/value output.
struct Out {
    format: Format,
    lines: Vec<(String, String)>,
}

impl Out {
    fn new(format: Format) -> Self {
        Self {
            format,
            lines: Vec::new(),
        }
    }

    fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.lines {
            match self.format {
                Format::Text => s.push_str(&format!("{}: {}\n", k, v)),
                Format::Record => s.push_str(&format!("{}={}\n", k, v)),
            }
        }
        s
    }
}

fn certified(text: &str, series: Series) -> Result<CertifiedElement> {
    CertifiedElement::from_certificate(CommutatorExpr::parse_sexpr(text)?, series)
}

fn put_element(out: &mut Out, prefix: &str, e: &CertifiedElement) {
    out.put(format!("{}word", prefix), e.word());
    out.put(format!("{}series", prefix), e.series());
    out.put(format!("{}level", prefix), e.level());
    out.put(format!("{}certificate", prefix), e.certificate());
}

/// Runs a parsed command and returns its output.
pub fn execute(cli: &Cli) -> Result<String> {
    let mut out = Out::new(cli.format);
    match &cli.command {
        Command::Normalize { braid } => {
            let nf = normal_form(braid);
            out.put("key", nf.key());
            out.put("word", nf.to_word());
        }
        Command::Equal { left, right } => out.put("equal", equal(left, right)?),
        Command::Permutation { braid } => {
            let p = braid.permutation();
            out.put("permutation", p.one_line());
            let cycles: Vec<String> = p
                .cycles()
                .iter()
                .map(|c| {
                    let c: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                    format!("({})", c.join(" "))
                })
                .collect();
            out.put("cycles", cycles.join(""));
            out.put("pure", braid.is_pure());
        }
        Command::Close { braid } => put_diagram(&mut out, "", &close(braid)),
        Command::Invariants { braid } => {
            let b = battery(braid)?;
            return Ok(match cli.format {
                Format::Text => b.to_string(),
                Format::Record => b.to_record(),
            });
        }
        Command::ConnectSum { x, y } => out.put("braid", connected_sum(x, y)?),
        Command::Phi { p } => put_diagram(&mut out, "", &phi(p)?),
        Command::Markov(m) => {
            let mv = match (&m.stabilize, m.destabilize, &m.conjugate) {
                (Some(s), false, None) => MarkovMove::Stabilize(*s),
                (None, true, None) => MarkovMove::Destabilize,
                (None, false, Some(g)) => MarkovMove::Conjugate(g.clone()),
                _ => return Err(Error::Precondition("give exactly one of --stabilize, --destabilize, --conjugate".into())),
            };
            out.put("braid", markov(&m.braid, &mv)?);
        }
        Command::Join { braid, alpha, e1, e2 } => {
            let j = markov_join(braid, alpha, *e1, *e2)?;
            out.put("d", &j.d);
            out.put("c1", &j.c1);
            out.put("c2", &j.c2);
        }
        Command::Slide { x, y } => {
            let s = slide(&CertifiedElement::leaf(x.clone())?, &CertifiedElement::leaf(y.clone())?)?;
            out.put("conjugator", &s.conjugator);
            for (i, b) in s.braids.iter().enumerate() {
                out.put(format!("b{}", i), b);
            }
            for (i, st) in s.steps.iter().enumerate() {
                put_element(&mut out, &format!("mover{}.", i), st.mover());
            }
        }
        Command::Inverse { braid, level } => {
            let inv = lcs_inverse(braid, *level)?;
            for (i, q) in inv.factors.iter().enumerate() {
                out.put(format!("factor{}", i), q);
            }
            out.put("braid", &inv.braid);
            out.put("sum_level", inv.sum.level());
        }
        Command::LcsSample { strands, level, series } => {
            let e = match series {
                Series::Lcs => lcs_sample(*strands, *level, cli.seed)?,
                Series::Ds => ds_sample(*strands, *level, cli.seed)?,
            };
            put_element(&mut out, "", &e);
        }
        Command::Ds3Words { level } => {
            let words = ds3_words(*level, DEFAULT_BASE_BOUND)?;
            for (form, e) in words.iter() {
                out.put(form.as_str(), e.word());
            }
            out.put("equations", words.equations().len());
        }
        Command::RewriteDs { braid, level } => {
            let rw = rewrite_mod_ds(braid, *level)?;
            out.put("output", &rw.output);
            out.put("insertions", rw.insertions.len());
            put_element(&mut out, "quotient.", &rw.quotient);
        }
        Command::Alternate { braid, level, count } => {
            let family = alternating_family(braid, *level, *count)?;
            for (i, m) in family.iter().enumerate() {
                out.put(format!("member{}.braid", i), &m.braid);
                put_diagram(&mut out, &format!("member{}.", i), &m.diagram);
            }
        }
        Command::Ring(rc) => ring(&mut out, rc)?,
        Command::Verify { identity, suite } => {
            let mut all = true;
            match (identity, suite) {
                (Some(id), _) => all &= verify_one(&mut out, *id, cli.seed)?,
                (None, Suite::Identities) => {
                    for id in IdentityId::ALL {
                        all &= verify_one(&mut out, id, cli.seed)?;
                    }
                }
                (None, Suite::Pins) => all &= pins(&mut out)?,
            }
            out.put("all", if all { "pass" } else { "fail" });
            if !all {
                return Err(Error::Inconsistent(format!("verification failed\n{}", out.render())));
            }
        }
    }
    Ok(out.render())
}

fn put_diagram(out: &mut Out, prefix: &str, d: &crate::closure::Diagram) {
    out.put(format!("{}components", prefix), d.component_count());
    out.put(format!("{}crossings", prefix), d.crossing_count());
    out.put(format!("{}writhe", prefix), d.writhe());
    out.put(format!("{}pd", prefix), d.pd_text());
    let gauss: Vec<String> = d
        .gauss_code()
        .iter()
        .map(|c| {
            let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("[{}]", c.join(","))
        })
        .collect();
    out.put(format!("{}gauss", prefix), gauss.join(" "));
    out.put(format!("{}alternating", prefix), d.is_alternating());
    out.put(format!("{}reduced", prefix), d.is_reduced());
    out.put(format!("{}prime", prefix), d.is_prime());
}

fn ring(out: &mut Out, rc: &RingCommand) -> Result<()> {
    match rc {
        RingCommand::Resolve { word } => out.put("value", resolve(word)),
        RingCommand::IdealForm { word } => {
            let f = to_ideal_form(word);
            for (i, p) in f.factors.iter().enumerate() {
                out.put(format!("factor{}", i), p);
            }
            out.put("tail", &f.tail);
            out.put("verified", f.expand() == resolve(word));
        }
        RingCommand::DoublePoints { tail, xs } => {
            for (i, (c, s)) in to_double_points(xs, tail)?.iter().enumerate() {
                out.put(format!("term{}", i), format!("{} {}", c, s));
            }
        }
        RingCommand::Expand { certificate, series } => {
            let x = certified(certificate, *series)?;
            let e = expand_commutator(&x)?;
            let one = crate::ring::RingElement::one(x.strands());
            let target = crate::ring::RingElement::from_word(x.word()).try_add(&one.scale(-1))?;
            out.put("summands", e.summands.len());
            out.put("min_factors", e.min_factors());
            out.put("verified", e.value() == target);
        }
        RingCommand::ReduceRelator { y, level, certificates } => {
            let xs = certificates
                .iter()
                .map(|c| certified(c, Series::Lcs))
                .collect::<Result<Vec<_>>>()?;
            let r = Relator::new(xs, y.clone())?;
            let trace = reduce_relator(&r, *level)?;
            out.put("steps", trace.steps.len());
            out.put("max_depth", trace.max_depth());
            out.put("composites", trace.composites.len());
            out.put("replay", trace.replay()?);
            for (i, (c, _, b)) in trace.composites.iter().enumerate() {
                out.put(format!("composite{}", i), format!("{} {}", c, b));
            }
        }
    }
    Ok(())
}

fn verify_one(out: &mut Out, id: IdentityId, seed: u64) -> Result<bool> {
    let inst = random_instance(id, seed);
    let report = verify_identity(id, &inst)?;
    out.put(id.as_str(), if report.verdict { "pass" } else { "fail" });
    Ok(report.verdict)
}

/// Fixed values for small knots.
fn pins(out: &mut Out) -> Result<bool> {
    let mut ok = true;
    for (name, word, det, a2) in [("trefoil", "B2: 1 1 1", 3, 1), ("figure-eight", "B3: 1 -2 1 -2", 5, -1)] {
        let b = battery(&word.parse()?)?;
        let pass = b.determinant == Some(det.into())
            && b.conway.as_ref().map(|c| c[2].clone()) == Some(a2.into());
        out.put(name, if pass { "pass" } else { "fail" });
        ok &= pass;
    }
    Ok(ok)
}

/// Parses `args`, runs, and returns the exit status with standard output and
/// standard error text.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(s) => (0, s, String::new()),
        Err(e) => (1, String::new(), format!("error: {}\n", e)),
    }
}
