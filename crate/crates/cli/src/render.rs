use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputSpec {
    pub format: Format,
    /// Significant digits in markdown output. CSV always carries 16.
    pub precision: usize,
}

impl OutputSpec {
    pub const DEFAULT_PRECISION: usize = 7;

    pub fn new(format: Format, precision: usize) -> Result<Self, CliError> {
        if !(3..=15).contains(&precision) {
            return Err(CliError::Usage(format!("precision must lie in 3..=15, got {precision}")));
        }
        Ok(Self { format, precision })
    }
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self { format: Format::Markdown, precision: Self::DEFAULT_PRECISION }
    }
}

/// `x` as `d.ddd(e)`, the mantissa carrying `precision` significant digits.
pub fn mantissa_exponent(x: f64, precision: usize) -> String {
    if !x.is_finite() || x == 0.0 {
        return format!("{x}");
    }
    let s = format!("{:.*e}", precision.saturating_sub(1), x);
    let (mantissa, exponent) = s.split_once('e').expect("scientific format has an exponent");
    format!("{mantissa}({exponent})")
}

/// C-style `%.15e`: sixteen significant digits, signed exponent of at least
/// two digits.
pub fn c_scientific(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.15e}");
    let (mantissa, exponent) = s.split_once('e').expect("scientific format has an exponent");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exponent),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Number(f64),
    Text(String),
}

impl Cell {
    fn markdown(&self, precision: usize) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Number(v) => mantissa_exponent(*v, precision),
            Cell::Text(t) => t.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Number(v) => c_scientific(*v),
            Cell::Text(t) => t.clone(),
        }
    }

    fn parse(field: &str) -> Self {
        if let Ok(v) = field.parse::<u64>() {
            return Cell::Int(v);
        }
        let lower = field.to_ascii_lowercase();
        let numeric = lower.contains('e') || matches!(lower.as_str(), "nan" | "inf" | "-inf");
        match field.parse::<f64>() {
            Ok(v) if numeric => Cell::Number(v),
            _ => Cell::Text(field.to_string()),
        }
    }
}

/// A header plus rows of cells; markdown output also prints `notes` below
/// the table.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn render(&self, spec: &OutputSpec) -> Result<String, CliError> {
        match spec.format {
            Format::Markdown => Ok(self.render_markdown(spec.precision)),
            Format::Csv => self.render_csv(),
        }
    }

    pub fn render_markdown(&self, precision: usize) -> String {
        let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
        let mut out = line(self.header.clone());
        out += &line(self.header.iter().map(|_| "---".to_string()).collect());
        for row in &self.rows {
            out += &line(row.iter().map(|c| c.markdown(precision)).collect());
        }
        for note in &self.notes {
            out += &format!("\n{note}\n");
        }
        out
    }

    pub fn render_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 strings"))
    }

    /// Reads the output of [`Table::render_csv`] back. Notes are not part of
    /// the CSV form.
    pub fn parse_csv(text: &str) -> Result<Self, CliError> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
        let header = r.headers()?.iter().map(str::to_string).collect();
        let rows = r
            .records()
            .map(|rec| Ok(rec?.iter().map(Cell::parse).collect()))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Self { header, rows, notes: Vec::new() })
    }
}
