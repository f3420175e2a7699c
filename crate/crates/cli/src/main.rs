use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ehk::eha::{express_w, lie_bracket, pbw_normalize, Strategy};
use ehk::fock::{Fock, TensorVec};
use ehk::hecke::{dimension, hoop_scalars, Cocenter, CyclotomicPoly, Hecke, Vf};
use ehk::lattice::{parse_word, LatticePoint, LinearForm};
use ehk::par::Exec;
use ehk::sym::Sym2;
use ehk::verify::{run_suite, SuiteParams, SUITES};
use ehk::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ehk",
    version,
    about = "Exact computations in central reductions of the elliptic Hall algebra"
)]
struct Cli {
    /// Print JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Charge {
    /// Central charge.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    /// A general linear form `a,b` for the central term; overrides --k.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

impl Charge {
    fn form(&self) -> Result<LinearForm> {
        match &self.lambda {
            None => Ok(LinearForm::charge(self.k)),
            Some(s) => {
                let p: LatticePoint = s.parse()?;
                Ok(LinearForm { a: p.r, b: p.n })
            }
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Lie bracket [w_x, w_y].
    Bracket {
        #[command(flatten)]
        charge: Charge,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// PBW normal form of a product of generators.
    Normalize {
        #[command(flatten)]
        charge: Charge,
        /// Letters as `r,n; r,n; ...` or JSON `[[r,n],...]`.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// `leftmost` or `rightmost`.
        #[arg(long, default_value = "leftmost")]
        strategy: String,
    },
    /// Expresses w_x through brackets of level ±1 generators.
    Express {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Acts by a word of generators on Sym ⊗ Sym.
    Fock {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// A partition such as `[-1|2]` or a JSON list of {partition, coeff}.
        #[arg(long, allow_hyphen_values = true, default_value = "[]")]
        state: String,
    },
    /// Leibniz action on a tensor product of two Fock modules.
    TensorFock {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k1: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k2: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        #[arg(long, allow_hyphen_values = true, default_value = "[]")]
        state1: String,
        #[arg(long, allow_hyphen_values = true, default_value = "[]")]
        state2: String,
    },
    /// Dimension l^n n! of the cyclotomic Hecke algebra.
    HeckeDim {
        #[arg(long)]
        n: usize,
        /// Coefficients `1,f1,...,t^2`.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Product of two elements in normal form.
    HeckeMul {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Word such as `x1^2 T1` or JSON {word: {exponents, perm}, coeff}.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Cocenter dimension and representatives; projects --element if given.
    Cocenter {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Acts by w_{r,±1} letters on the cocenters; the default state is v_f.
    VfAct {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Letters `r,1` (induction) and `r,-1` (restriction), applied right to left.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// Rank of --state.
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// An element of H_n^f whose class is acted on.
        #[arg(long, allow_hyphen_values = true)]
        state: Option<String>,
    },
    /// {r} w_{r,0} v_f and {r} w_{-r,0} v_f for 1 <= r <= rmax.
    HoopScalars {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 3)]
        rmax: usize,
    },
    /// Runs a verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        bound: Option<i64>,
        /// Comma-separated charges.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long)]
        rmax: Option<usize>,
    },
}

fn word_or_empty(s: &str) -> Result<Vec<LatticePoint>> {
    if s.trim().is_empty() {
        Ok(Vec::new())
    } else {
        parse_word(s)
    }
}

fn emit(json: bool, text: String, value: serde_json::Value) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<bool> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let json = cli.json;
    match cli.cmd {
        Cmd::Bracket { charge, x, y } => {
            let e = lie_bracket(x.parse()?, y.parse()?, charge.form()?)?;
            emit(json, e.to_string(), e.to_json());
        }
        Cmd::Normalize {
            charge,
            word,
            strategy,
        } => {
            let strategy = match strategy.as_str() {
                "leftmost" => Strategy::Leftmost,
                "rightmost" => Strategy::Rightmost,
                s => return Err(Error::InvalidArgument(format!("unknown strategy `{s}`"))),
            };
            let e = pbw_normalize(&word_or_empty(&word)?, charge.form()?, strategy)?;
            emit(json, e.to_string(), e.to_json());
        }
        Cmd::Express { x } => {
            let x: LatticePoint = x.parse()?;
            let e = express_w(x.r, x.n)?;
            let leaves: Vec<String> = e.leaves().iter().map(|p| p.to_string()).collect();
            emit(
                json,
                e.to_string(),
                json!({ "expr": e.to_string(), "depth": e.depth(), "leaves": leaves }),
            );
        }
        Cmd::Fock { k, word, state } => {
            let v: Sym2 = state.parse()?;
            let out = Fock::new(k).act_word(&word_or_empty(&word)?, &v)?;
            emit(json, out.to_string(), out.to_json());
        }
        Cmd::TensorFock {
            k1,
            k2,
            word,
            state1,
            state2,
        } => {
            let v = TensorVec::pure(&state1.parse()?, &state2.parse()?);
            let (m1, m2) = (Fock::new(k1), Fock::new(k2));
            let out = ehk::fock::tensor_act_word(&word_or_empty(&word)?, &v, &m1, &m2)?;
            emit(json, out.to_string(), out.to_json());
        }
        Cmd::HeckeDim { n, f } => {
            let f: CyclotomicPoly = f.parse()?;
            let d = dimension(n, f.degree());
            emit(
                json,
                d.to_string(),
                json!({ "n": n, "l": f.degree(), "dimension": d }),
            );
        }
        Cmd::HeckeMul { n, f, a, b } => {
            let h = Hecke::new(n, f.parse()?);
            let p = h.mul(&h.parse_element(&a)?, &h.parse_element(&b)?)?;
            emit(json, p.to_string(), p.to_json());
        }
        Cmd::Cocenter { n, f, element } => {
            let h = Hecke::new(n, f.parse()?);
            let c = Cocenter::new(&h, exec)?;
            let reps: Vec<String> = c.representatives().iter().map(|w| w.to_string()).collect();
            let mut text = c.to_string();
            let mut value = json!({ "n": n, "dimension": c.dim(), "representatives": reps });
            if let Some(e) = element {
                let cl = c.project(&h.parse_element(&e)?)?;
                text.push_str(&format!("\n{}", c.display(&cl)));
                value["class"] = c.to_json(&cl);
            }
            emit(json, text, value);
        }
        Cmd::VfAct { f, word, n, state } => {
            let word = word_or_empty(&word)?;
            let mut letters = Vec::new();
            let (mut height, mut top) = (n as i64, n as i64);
            for x in word.iter().rev() {
                if x.n.abs() != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "only levels ±1 act on cocenters, got {x}"
                    )));
                }
                height = (height + x.n).max(0);
                top = top.max(height);
                letters.push((x.r, x.n));
            }
            letters.reverse();
            let vf = Vf::new(f.parse()?, top as usize, exec)?;
            let v = match state {
                None if n == 0 => vf.vacuum(),
                None => vf.class_of(&ehk::hecke::HeckeElement::one(n))?,
                Some(s) => vf.class_of(&vf.algebra(n)?.parse_element(&s)?)?,
            };
            let out = vf.act_word(&letters, &v)?;
            emit(json, vf.display(&out), vf.to_json(&out));
        }
        Cmd::HoopScalars { f, rmax } => {
            if rmax == 0 {
                return Err(Error::InvalidArgument("rmax must be at least 1".into()));
            }
            let s = hoop_scalars(&f.parse()?, rmax)?;
            let plus: Vec<String> = s.plus.iter().map(|c| c.to_string()).collect();
            let minus: Vec<String> = s.minus.iter().map(|c| c.to_string()).collect();
            let mut text = Vec::new();
            for r in 1..=rmax {
                text.push(format!(
                    "r={r}: plus {}  minus {}",
                    plus[r - 1],
                    minus[r - 1]
                ));
            }
            emit(
                json,
                text.join("\n"),
                json!({ "plus": plus, "minus": minus }),
            );
        }
        Cmd::Verify {
            suite,
            bound,
            k,
            samples,
            f,
            rmax,
        } => {
            let ks = match k {
                None => None,
                Some(s) => Some(
                    s.split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::InvalidArgument(format!("bad charge `{p}`")))
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            let params = SuiteParams {
                bound,
                ks,
                seed: cli.seed,
                samples,
                f: f.map(|s| s.parse()).transpose()?,
                rmax,
                exec,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut ok = true;
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name, &params)?;
                ok &= r.passed();
                if json {
                    reports.push(serde_json::to_value(&r).expect("serializable report"));
                } else {
                    print!("{r}");
                }
            }
            if json {
                let v = if reports.len() == 1 {
                    reports.pop().unwrap()
                } else {
                    serde_json::Value::Array(reports)
                };
                println!("{v}");
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
