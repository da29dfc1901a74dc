//! `wavepair` command-line front end.
//!
//! Every option may also come from a `key=value` file given with
//! `--config`; options on the command line win. Exit codes: 0 success,
//! 1 usage or I/O error, 2 a verification check failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::catalog::{sample_wavelet, WaveletSpec};
use crate::csvio::{write_complex_series, write_real_series, write_scalogram, Part};
use crate::cwt::{cwt, ridge_frequencies, Recipe, ScaleRange, Variant};
use crate::error::{Error, Result};
use crate::grid::{make_grid, RealSeries, Series, TimeGrid, DEFAULT_SIGNAL_GRID, DEFAULT_WAVELET_GRID};
use crate::kernels::{build_kernel, Kernel, KernelKind};
use crate::metrics::MetricsReport;
use crate::pgm;
use crate::propositions::verify_series;
use crate::signals::{
    gen_freq_breakdown, gen_two_sine, BREAKDOWN_F_HIGH, BREAKDOWN_F_LOW, BREAKDOWN_T_BREAK, TWO_SINE_F1, TWO_SINE_F2,
};
use crate::spectral::hilbert;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "wavepair", version, about = "Hilbert-transform wavelet pairs and their kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Sample a mother wavelet.
    Sample,
    /// Hilbert transform of a sampled wavelet.
    Hilbert,
    /// Fourier-like, analytic or Hartley-like kernel of a wavelet.
    Kernel,
    /// Energy, admissibility, moments and symmetry of a wavelet and its derivatives.
    Metrics,
    /// Check that every derived wavelet preserves the wavelet's properties.
    Verify,
    /// Generate a test signal.
    Signal,
    /// Continuous wavelet transform of a test signal.
    Analyze,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Sample => "sample",
            Command::Hilbert => "hilbert",
            Command::Kernel => "kernel",
            Command::Metrics => "metrics",
            Command::Verify => "verify",
            Command::Signal => "signal",
            Command::Analyze => "analyze",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Pgm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignalKind {
    Twosine,
    Freqbrk,
}

#[derive(Debug, Default, Args)]
struct Opts {
    /// key=value file with defaults for any option below
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// morlet, meyer, mexhat, gaus1, gaus2, gaus3
    #[arg(long, global = true)]
    wavelet: Option<String>,
    /// Morlet centre frequency (rad per unit time)
    #[arg(long, global = true)]
    omega0: Option<String>,
    /// t_min,t_max,n
    #[arg(long, global = true, allow_hyphen_values = true)]
    grid: Option<String>,
    /// fourier, analytic, hartley+, hartley-; analyze also takes wavelet, hilbert
    #[arg(long, global = true)]
    kind: Option<String>,
    /// a1..a2[:step], in samples
    #[arg(long, global = true)]
    scales: Option<String>,
    /// twosine or freqbrk
    #[arg(long, global = true)]
    signal: Option<String>,
    #[arg(long, global = true)]
    f1: Option<String>,
    #[arg(long, global = true)]
    f2: Option<String>,
    #[arg(long, global = true)]
    flow: Option<String>,
    #[arg(long, global = true)]
    fhigh: Option<String>,
    #[arg(long, global = true)]
    tbreak: Option<String>,
    /// output file; stdout when omitted (required by analyze)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// csv or pgm (pgm: analyze only)
    #[arg(long, global = true)]
    format: Option<String>,
    /// scale sampled series to unit peak for plotting
    #[arg(long, global = true)]
    peak_normalize: bool,
    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    dc_offset: Option<String>,
}

const CONFIG_KEYS: [&str; 14] = [
    "wavelet",
    "omega0",
    "grid",
    "kind",
    "scales",
    "signal",
    "f1",
    "f2",
    "flow",
    "fhigh",
    "tbreak",
    "out",
    "format",
    "peak_normalize",
];

/// Fully resolved options for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub spec: WaveletSpec,
    pub grid: Option<TimeGrid>,
    pub kind: Option<String>,
    pub scales: Option<ScaleRange>,
    pub signal: SignalKind,
    pub f1: f64,
    pub f2: f64,
    pub f_low: f64,
    pub f_high: f64,
    pub t_break: f64,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub peak_normalize: bool,
    pub dc_offset: f64,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn read_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) =
            line.split_once('=').ok_or_else(|| usage(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
        let key = k.trim().replace('-', "_");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(usage(format!("{}:{}: unknown key `{}`", path.display(), i + 1, k.trim())));
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

fn parse_f64(name: &str, v: &str) -> Result<f64> {
    v.trim().parse::<f64>().map_err(|_| usage(format!("--{name}: not a number: `{v}`")))
}

fn parse_grid(v: &str) -> Result<TimeGrid> {
    let parts: Vec<&str> = v.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(usage(format!("--grid expects t_min,t_max,n, got `{v}`")));
    }
    let n = parts[2].parse::<usize>().map_err(|_| usage(format!("--grid: bad sample count `{}`", parts[2])))?;
    make_grid(parse_f64("grid", parts[0])?, parse_f64("grid", parts[1])?, n)
}

impl RunConfig {
    fn resolve(command: Command, opts: Opts) -> Result<Self> {
        let file = match &opts.config {
            Some(p) => read_config(p)?,
            None => BTreeMap::new(),
        };
        let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());

        let mut spec = WaveletSpec::new(pick(opts.wavelet, "wavelet").as_deref().unwrap_or("mexhat").parse()?);
        if let Some(w) = pick(opts.omega0, "omega0") {
            spec = spec.with_omega0(parse_f64("omega0", &w)?)?;
        }
        let grid = pick(opts.grid, "grid").map(|g| parse_grid(&g)).transpose()?;
        let scales = pick(opts.scales, "scales").map(|s| s.parse()).transpose()?;
        let signal = match pick(opts.signal, "signal").as_deref().unwrap_or("twosine") {
            "twosine" => SignalKind::Twosine,
            "freqbrk" => SignalKind::Freqbrk,
            other => return Err(usage(format!("--signal: expected twosine or freqbrk, got `{other}`"))),
        };
        let num = |flag: Option<String>, key: &str, default: f64| -> Result<f64> {
            pick(flag, key).map(|v| parse_f64(key, &v)).unwrap_or(Ok(default))
        };
        let format = match pick(opts.format, "format").as_deref() {
            None => None,
            Some("csv") => Some(Format::Csv),
            Some("pgm") => Some(Format::Pgm),
            Some(other) => return Err(usage(format!("--format: expected csv or pgm, got `{other}`"))),
        };
        if format == Some(Format::Pgm) && command != Command::Analyze {
            return Err(usage("--format pgm is only valid for analyze"));
        }
        let out = pick(opts.out.map(|p| p.to_string_lossy().into_owned()), "out").map(PathBuf::from);
        if out.as_ref().is_some_and(|p| p.as_os_str().is_empty()) {
            return Err(Error::Io("output path is empty".into()));
        }
        let peak_normalize = opts.peak_normalize
            || file.get("peak_normalize").is_some_and(|v| matches!(v.as_str(), "true" | "1" | "yes"));

        Ok(Self {
            command,
            spec,
            grid,
            kind: pick(opts.kind, "kind"),
            scales,
            signal,
            f1: num(opts.f1, "f1", TWO_SINE_F1)?,
            f2: num(opts.f2, "f2", TWO_SINE_F2)?,
            f_low: num(opts.flow, "flow", BREAKDOWN_F_LOW)?,
            f_high: num(opts.fhigh, "fhigh", BREAKDOWN_F_HIGH)?,
            t_break: num(opts.tbreak, "tbreak", BREAKDOWN_T_BREAK)?,
            out,
            format,
            peak_normalize,
            dc_offset: opts.dc_offset.map(|v| parse_f64("dc-offset", &v)).transpose()?.unwrap_or(0.0),
        })
    }

    fn grid_or(&self, default: (f64, f64, usize)) -> Result<TimeGrid> {
        match self.grid {
            Some(g) => Ok(g),
            None => make_grid(default.0, default.1, default.2),
        }
    }

    fn wavelet(&self) -> Result<RealSeries> {
        let psi = sample_wavelet(&self.spec, &self.grid_or(DEFAULT_WAVELET_GRID)?)?;
        if self.dc_offset == 0.0 {
            return Ok(psi);
        }
        Series::new(*psi.grid(), psi.values().iter().map(|v| v + self.dc_offset).collect())
    }

    fn kernel_kind(&self) -> Result<KernelKind> {
        self.kind.as_deref().unwrap_or("hartley+").parse()
    }

    fn variant(&self) -> Result<Variant> {
        self.kind.as_deref().unwrap_or("wavelet").parse()
    }

    fn signal_series(&self) -> Result<RealSeries> {
        let g = self.grid_or(DEFAULT_SIGNAL_GRID)?;
        match self.signal {
            SignalKind::Twosine => gen_two_sine(&g, self.f1, self.f2),
            SignalKind::Freqbrk => gen_freq_breakdown(&g, self.f_low, self.f_high, self.t_break),
        }
    }

    fn signal_label(&self) -> String {
        match self.signal {
            SignalKind::Twosine => format!("twosine({},{})", self.f1, self.f2),
            SignalKind::Freqbrk => format!("freqbrk({},{},{})", self.f_low, self.f_high, self.t_break),
        }
    }
}

fn peak_normalized<T: crate::grid::Sample>(x: Series<T>, on: bool) -> Series<T> {
    let peak = x.peak();
    if on && peak > 0.0 {
        x.scaled(1.0 / peak)
    } else {
        x
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(bytes).map_err(Error::from),
    }
}

/// `dir/stem_<suffix>.<ext>` next to `base`.
pub fn sibling_path(base: &Path, suffix: &str) -> PathBuf {
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    base.with_file_name(name)
}

fn cmd_analyze(cfg: &RunConfig) -> Result<i32> {
    let out = cfg.out.as_deref().ok_or_else(|| usage("analyze needs --out"))?;
    let f = cfg.signal_series()?;
    let variant = cfg.variant()?;
    let default_scales = ScaleRange::linear(1.0, 8.0, 1.0)?;
    let scales = cfg.scales.as_ref().unwrap_or(&default_scales);
    let s = cwt(&f, &Recipe::new(cfg.spec, variant), scales)?;
    let kind =
        |part: Part| format!("analyze:{}:{}:{}:{}", cfg.signal_label(), cfg.spec.family().name(), variant, part.name());

    if cfg.format == Some(Format::Pgm) {
        emit(Some(out), &pgm::render(&s))?;
        println!("wrote {}", out.display());
    } else if s.is_real() {
        emit(Some(out), write_scalogram(&kind(Part::Real), &s, Part::Real).as_bytes())?;
        println!("wrote {}", out.display());
    } else {
        for part in Part::ALL {
            let p = sibling_path(out, part.name());
            emit(Some(&p), write_scalogram(&kind(part), &s, part).as_bytes())?;
            println!("wrote {}", p.display());
        }
    }

    let top = ridge_frequencies(&s, 2.min(scales.len()))?;
    for r in &top {
        println!("ridge scale={} frequency_hz={:.4} mean_power={:.6e}", r.scale, r.frequency_hz, r.mean_power);
    }
    let wide: Vec<f64> =
        scales.scales().iter().zip(s.support_warnings()).filter(|(_, w)| **w).map(|(a, _)| *a).collect();
    if let (Some(first), Some(last)) = (wide.first(), wide.last()) {
        eprintln!("warning: kernel wider than the signal at {} scale(s) from {first} to {last}", wide.len());
    }
    Ok(EXIT_OK)
}

fn cmd_metrics(cfg: &RunConfig) -> Result<i32> {
    let psi = cfg.wavelet()?;
    let name = cfg.spec.family().name();
    let mut rows: Vec<(String, MetricsReport)> = vec![(name.to_string(), MetricsReport::measure(&psi))];
    match hilbert(&psi) {
        Ok(h) => rows.push((format!("H{{{name}}}"), MetricsReport::measure(&h))),
        Err(e) => eprintln!("warning: H{{{name}}}: {e}"),
    }
    for kind in KernelKind::ALL {
        match build_kernel(&psi, kind) {
            Ok(Kernel::Real(k)) => rows.push((format!("{kind}{{{name}}}"), MetricsReport::measure(&k))),
            Ok(Kernel::Complex(k)) => rows.push((format!("{kind}{{{name}}}"), MetricsReport::measure(&k))),
            Err(e) => eprintln!("warning: {kind}{{{name}}}: {e}"),
        }
    }
    let text = if cfg.format == Some(Format::Csv) {
        let mut t = format!("{}\n", MetricsReport::CSV_HEADER);
        for (label, r) in &rows {
            t.push_str(&r.to_csv_row(label));
            t.push('\n');
        }
        t
    } else {
        rows.iter().map(|(label, r)| r.to_key_value(label)).collect::<Vec<_>>().join("\n")
    };
    emit(cfg.out.as_deref(), text.as_bytes())?;
    Ok(EXIT_OK)
}

fn execute(cfg: &RunConfig) -> Result<i32> {
    let name = cfg.spec.family().name();
    match cfg.command {
        Command::Sample => {
            let psi = peak_normalized(cfg.wavelet()?, cfg.peak_normalize);
            emit(cfg.out.as_deref(), write_real_series(&format!("sample:{name}"), &psi).as_bytes())?;
        }
        Command::Hilbert => {
            let h = peak_normalized(hilbert(&cfg.wavelet()?)?, cfg.peak_normalize);
            emit(cfg.out.as_deref(), write_real_series(&format!("hilbert:{name}"), &h).as_bytes())?;
        }
        Command::Kernel => {
            let kind = cfg.kernel_kind()?;
            let label = format!("kernel:{name}:{kind}");
            let text = match build_kernel(&cfg.wavelet()?, kind)? {
                Kernel::Real(k) => write_real_series(&label, &peak_normalized(k, cfg.peak_normalize)),
                Kernel::Complex(k) => write_complex_series(&label, &peak_normalized(k, cfg.peak_normalize)),
            };
            emit(cfg.out.as_deref(), text.as_bytes())?;
        }
        Command::Metrics => return cmd_metrics(cfg),
        Command::Verify => {
            let report = verify_series(name, &cfg.wavelet()?);
            emit(cfg.out.as_deref(), report.to_table().as_bytes())?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Signal => {
            let f = cfg.signal_series()?;
            emit(cfg.out.as_deref(), write_real_series(&format!("signal:{}", cfg.signal_label()), &f).as_bytes())?;
        }
        Command::Analyze => return cmd_analyze(cfg),
    }
    Ok(EXIT_OK)
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let command = cli.command;
    match RunConfig::resolve(command, cli.opts).and_then(|cfg| execute(&cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wavepair {}: error: {e}", command.name());
            EXIT_USAGE
        }
    }
}
