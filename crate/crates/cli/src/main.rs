mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use sunya_core::arith::rules::{CATALOG, ERRATA};
use sunya_core::digits::DigitScript;
use sunya_core::indic::aryabhata;
use sunya_core::indic::brahmi::BrahmiToken;
use sunya_core::numeric::format_rational;
use sunya_core::pedagogy::{
    decompose_time, divisors_of_sixty, fibonacci, hilbert_infinite, hilbert_single, historical_limit_tables,
    TableKind,
};
use sunya_core::roman::letter_value;
use sunya_core::{
    eval_expression, greek, interpretations, parse_expression, parse_gap, parse_numeral, render_numeral,
    ConvertOptions, Error, Integer, InterpretationBounds, NumeralSystem, ParseMode, Rational, RuleSet,
};

use output::{Output, Report};

#[derive(Parser)]
#[command(name = "sunya", version, about = "Historical numeral systems and the arithmetic of zero")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a numeral from one system to another.
    Convert(ConvertArgs),
    /// List every reading of a numeral written without a zero digit.
    Interpret(InterpretArgs),
    /// Evaluate an arithmetic expression under a historical rule set.
    Eval(EvalArgs),
    /// Small worked demonstrations.
    #[command(subcommand)]
    Demo(Demo),
    /// Print a reference table.
    Table {
        #[arg(value_enum)]
        which: TableName,
    },
}

#[derive(Args)]
struct BoundArgs {
    /// Base of the gap-positional system.
    #[arg(long, default_value = "60")]
    base: Integer,
    /// Most zero places a written gap may stand for.
    #[arg(long, default_value_t = 1)]
    max_gap_width: u32,
    /// Most unwritten zero places at the end of the number.
    #[arg(long, default_value_t = 1)]
    max_trailing: u32,
}

#[derive(Args)]
struct ConvertArgs {
    /// Source system: roman, greek, gap, aryabhata, brahmi or decimal.
    #[arg(long)]
    from: String,
    /// Target system.
    #[arg(long)]
    to: String,
    #[command(flatten)]
    bounds: BoundArgs,
    /// ASCII transliteration for Greek and Aryabhata output.
    #[arg(long)]
    ascii: bool,
    /// Reject Roman numerals that are not in canonical form.
    #[arg(long)]
    strict: bool,
    numeral: String,
}

#[derive(Args)]
struct InterpretArgs {
    #[command(flatten)]
    bounds: BoundArgs,
    /// Digit values and "_" gaps separated by spaces, e.g. "1 _ 23 45".
    numeral: String,
}

#[derive(Args)]
struct EvalArgs {
    /// brahmagupta, bhaskara or modern.
    #[arg(long, default_value = "modern")]
    ruleset: RuleSet,
    /// Also list the rule ids that fired, in order.
    #[arg(long)]
    trace: bool,
    expression: String,
}

#[derive(Subcommand)]
enum Demo {
    /// The first terms of the Fibonacci sequence.
    Fib {
        #[arg(long, default_value_t = 15)]
        count: usize,
    },
    /// Room moves in a full hotel with infinitely many rooms.
    Hilbert {
        #[arg(long, value_enum, default_value_t = HotelMode::Infinite)]
        mode: HotelMode,
        #[arg(long, default_value_t = 4)]
        rooms: u64,
    },
    /// Exact tables for dividing by a shrinking number.
    Limits {
        #[arg(long, default_value = "modern")]
        ruleset: RuleSet,
    },
    /// Split a number of seconds into hours, minutes and seconds.
    Time {
        #[arg(long)]
        seconds: Integer,
    },
    /// The divisors of 60.
    Divisors,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HotelMode {
    /// One new guest arrives.
    Single,
    /// Infinitely many new guests arrive.
    Infinite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    Roman,
    Greek,
    Aryabhata,
    Brahmi,
    Digits,
    Rules,
    Errata,
}

enum Failure {
    Usage(String),
    Ambiguous(String),
    Evaluation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Ambiguous(_) => 3,
            Failure::Evaluation(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Ambiguous(m) | Failure::Evaluation(m) => m,
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string(&out.report).expect("report serializes")),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Convert(args) => run_convert(args),
        Command::Interpret(args) => run_interpret(args),
        Command::Eval(args) => run_eval(args),
        Command::Demo(demo) => run_demo(demo),
        Command::Table { which } => Ok(run_table(which)),
    }
}

fn bounds(args: &BoundArgs) -> Result<InterpretationBounds, Failure> {
    InterpretationBounds::new(args.max_gap_width, args.max_trailing).map_err(usage)
}

fn run_convert(args: ConvertArgs) -> Result<Output, Failure> {
    let from = NumeralSystem::from_name(&args.from, args.bounds.base.clone()).map_err(usage)?;
    let to = NumeralSystem::from_name(&args.to, args.bounds.base.clone()).map_err(usage)?;
    let opts = ConvertOptions {
        bounds: bounds(&args.bounds)?,
        ascii: args.ascii,
        roman_mode: if args.strict { ParseMode::Strict } else { ParseMode::Permissive },
    };
    let value = parse_numeral(&args.numeral, &from, &opts).map_err(|e| match &e {
        Error::Ambiguity { readings } => Failure::Ambiguous(format!(
            "{}: numeral has {} readings; run `sunya interpret` to list them",
            e.name(),
            readings.len()
        )),
        _ => usage(e),
    })?;
    let text = render_numeral(&value, &to, &opts).map_err(usage)?;
    Ok(Output {
        text: text.clone(),
        report: Report {
            system: Some(to.name().to_string()),
            text: Some(text),
            value: Some(value.to_string()),
            ..Report::default()
        },
    })
}

fn run_interpret(args: InterpretArgs) -> Result<Output, Failure> {
    let numeral = parse_gap(&args.numeral, &args.bounds.base).map_err(usage)?;
    let set = interpretations(&numeral, &bounds(&args.bounds)?);
    let readings: Vec<String> = set.values.iter().map(Integer::to_string).collect();
    Ok(Output {
        text: readings.join("\n"),
        report: Report {
            system: Some(NumeralSystem::GapPositional(args.bounds.base).name().to_string()),
            text: Some(numeral.to_string()),
            interpretations: Some(readings),
            ..Report::default()
        },
    })
}

fn run_eval(args: EvalArgs) -> Result<Output, Failure> {
    let expr = parse_expression(&args.expression).map_err(usage)?;
    let (value, trace) = eval_expression(&expr, args.ruleset).map_err(|e| match e.error {
        Error::Parse(_) => Failure::Usage(e.to_string()),
        _ => Failure::Evaluation(e.to_string()),
    })?;
    let mut text = value.to_string();
    if args.trace {
        for id in trace.ids() {
            text.push('\n');
            text.push_str(id);
        }
    }
    Ok(Output {
        text,
        report: Report {
            text: Some(expr.to_string()),
            value: Some(value.to_string()),
            trace: args.trace.then_some(trace),
            ..Report::default()
        },
    })
}

fn run_demo(demo: Demo) -> Result<Output, Failure> {
    match demo {
        Demo::Fib { count } => {
            let terms = fibonacci(count).map_err(usage)?;
            let rows = terms.iter().enumerate().map(|(i, f)| vec![i.to_string(), f.to_string()]).collect();
            let mut out = Output::table(&["n", "fib"], rows);
            out.text = terms.iter().map(Integer::to_string).collect::<Vec<_>>().join(" ");
            Ok(out)
        }
        Demo::Hilbert { mode, rooms } => {
            let mut rows = Vec::new();
            for room in 1..=rooms {
                let room = Integer::from(room);
                let to = match mode {
                    HotelMode::Single => hilbert_single(&room),
                    HotelMode::Infinite => hilbert_infinite(&room),
                }
                .map_err(usage)?;
                rows.push(vec![room.to_string(), to.to_string()]);
            }
            let text = rows.iter().map(|r| format!("{}→{}", r[0], r[1])).collect::<Vec<_>>().join(" ");
            let mut out = Output::table(&["room", "moves to"], rows);
            out.text = text;
            Ok(out)
        }
        Demo::Limits { ruleset } => Ok(limits(ruleset)),
        Demo::Time { seconds } => {
            let (h, m, s) = decompose_time(&seconds).map_err(usage)?;
            let text = format!("{seconds} s = {h} h {m} min {s} s");
            let mut out = Output::table(&["hours", "minutes", "seconds"], vec![vec![h.to_string(), m.to_string(), s.to_string()]]);
            out.text = text;
            Ok(out)
        }
        Demo::Divisors => {
            let ds = divisors_of_sixty();
            let rows = ds.iter().map(|d| vec![d.to_string(), (Integer::from(60) / d).to_string()]).collect();
            let mut out = Output::table(&["divisor", "quotient"], rows);
            out.text = ds.iter().map(Integer::to_string).collect::<Vec<_>>().join(" ");
            Ok(out)
        }
    }
}

/// Rationals whose denominator is a power of ten print as decimals.
fn decimal(q: &Rational) -> String {
    let mut places = 0;
    let mut d = q.denom().clone();
    let ten = Integer::from(10);
    while !d.is_one() {
        let (next, rem) = d.div_rem(&ten);
        if !rem.is_zero() {
            return format_rational(q);
        }
        d = next;
        places += 1;
    }
    if places == 0 {
        return q.numer().to_string();
    }
    let digits = q.numer().magnitude().to_string();
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac) = padded.split_at(padded.len() - places);
    let sign = if q.numer() < &Integer::zero() { "-" } else { "" };
    format!("{sign}{int_part}.{frac}")
}

fn limits(rules: RuleSet) -> Output {
    let mut rows = Vec::new();
    for table in historical_limit_tables(rules) {
        let label = match table.kind {
            TableKind::Reciprocal => "1/x",
            TableKind::SelfRatio => "x/x",
            TableKind::ZeroOver => "0/x",
        };
        for row in &table.rows {
            let note = if row.is_erratum() { "printed value is wrong" } else { "" };
            rows.push(vec![
                label.to_string(),
                decimal(&row.input),
                decimal(&row.printed),
                row.exact.to_string(),
                note.to_string(),
            ]);
        }
        let limit = match &table.limit {
            Ok((v, _)) => v.to_string(),
            Err(e) => e.name().to_string(),
        };
        rows.push(vec![label.to_string(), "0".into(), String::new(), limit, rules.name().to_string()]);
    }
    Output::table(&["table", "x", "printed", "exact", "note"], rows)
}

fn run_table(which: TableName) -> Output {
    match which {
        TableName::Roman => {
            let rows = "IVXLCDM"
                .chars()
                .map(|c| vec![c.to_string(), letter_value(c).expect("roman letter").to_string()])
                .collect();
            Output::table(&["letter", "value"], rows)
        }
        TableName::Greek => {
            let rows = greek::table()
                .tokens()
                .iter()
                .map(|t| vec![t.name.clone(), t.glyph.clone(), t.value.to_string()])
                .collect();
            Output::table(&["name", "glyph", "value"], rows)
        }
        TableName::Aryabhata => {
            let t = aryabhata::table();
            let mut rows: Vec<Vec<String>> = t
                .consonants
                .iter()
                .map(|c| vec!["consonant".into(), c.translit.clone(), c.devanagari.clone(), c.value.to_string()])
                .collect();
            rows.extend(t.vowels.iter().map(|v| {
                vec!["vowel".into(), v.translit.clone(), v.independent.clone(), format!("x10^{}", v.place_exponent)]
            }));
            Output::table(&["kind", "ascii", "letter", "value"], rows)
        }
        TableName::Brahmi => {
            let rows = BrahmiToken::all().map(|t| vec![t.to_string(), t.value().to_string()]).collect();
            Output::table(&["token", "value"], rows)
        }
        TableName::Digits => {
            let rows = DigitScript::ALL
                .iter()
                .map(|s| vec![s.name().to_string(), s.digits().iter().collect()])
                .collect();
            Output::table(&["script", "digits"], rows)
        }
        TableName::Rules => {
            let rows = CATALOG
                .iter()
                .map(|r| vec![r.id.to_string(), format!("{:?}", r.source).to_lowercase(), r.statement.to_string()])
                .collect();
            Output::table(&["id", "source", "statement"], rows)
        }
        TableName::Errata => {
            let rows = ERRATA
                .iter()
                .map(|e| vec![e.id.to_string(), e.printed.to_string(), e.used.to_string(), e.note.to_string()])
                .collect();
            Output::table(&["id", "printed", "used", "note"], rows)
        }
    }
}
