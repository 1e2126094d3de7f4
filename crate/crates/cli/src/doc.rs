//! Output documents: representation JSON, LaTeX blocks, decision and
//! theorem reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use conjrep::irred::{Computed, IrredCertificate, TheoremReport};
use conjrep::linalg::{Matrix, Scalar, Subspace};
use conjrep::rep::{Family, GenLabel, Representation};
use conjrep::ring::{parse_rational, Context, LaurentPoly, Rational, Specialization};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub label: String,
    pub matrix: Vec<Vec<String>>,
}

/// Generator images of one representation. Without `specialization` the
/// entries are Laurent polynomials in canonical form over `context`;
/// with it they are rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDocument {
    pub schema_version: u32,
    pub family: String,
    pub n: usize,
    pub degree: usize,
    pub context: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub specialization: Option<BTreeMap<String, String>>,
    pub generators: Vec<GeneratorDoc>,
}

/// A representation read back from a [`RepDocument`].
#[derive(Debug, Clone)]
pub enum ParsedRep {
    Symbolic(Representation<LaurentPoly>),
    Specialized {
        context: Context,
        values: Specialization,
        rep: Representation<Rational>,
    },
}

fn strings<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(T::to_string).collect())
        .collect()
}

fn values_map(s: &Specialization) -> BTreeMap<String, String> {
    s.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

impl RepDocument {
    pub fn symbolic(rep: &Representation<LaurentPoly>) -> Self {
        RepDocument {
            schema_version: SCHEMA_VERSION,
            family: rep.family().name().to_string(),
            n: rep.n(),
            degree: rep.degree(),
            context: rep.context().names().to_vec(),
            specialization: None,
            generators: rep
                .images()
                .iter()
                .map(|(l, m)| GeneratorDoc {
                    label: l.to_string(),
                    matrix: strings(m),
                })
                .collect(),
        }
    }

    pub fn specialized(
        context: &Context,
        values: &Specialization,
        rep: &Representation<Rational>,
    ) -> Self {
        RepDocument {
            schema_version: SCHEMA_VERSION,
            family: rep.family().name().to_string(),
            n: rep.n(),
            degree: rep.degree(),
            context: context.names().to_vec(),
            specialization: Some(values_map(values)),
            generators: rep
                .images()
                .iter()
                .map(|(l, m)| GeneratorDoc {
                    label: l.to_string(),
                    matrix: strings(m),
                })
                .collect(),
        }
    }

    pub fn from_parsed(p: &ParsedRep) -> Self {
        match p {
            ParsedRep::Symbolic(rep) => Self::symbolic(rep),
            ParsedRep::Specialized {
                context,
                values,
                rep,
            } => Self::specialized(context, values, rep),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: RepDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("bad document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Usage(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    fn images<T: Scalar>(
        &self,
        entry: impl Fn(&str) -> Result<T, CliError>,
    ) -> Result<BTreeMap<GenLabel, Matrix<T>>, CliError> {
        let mut images = BTreeMap::new();
        for g in &self.generators {
            let label: GenLabel = g.label.parse()?;
            let rows = g
                .matrix
                .iter()
                .map(|r| r.iter().map(|s| entry(s)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            if images.insert(label, Matrix::from_rows(rows)?).is_some() {
                return Err(CliError::Usage(format!("duplicate generator {label}")));
            }
        }
        Ok(images)
    }

    /// Parses every entry back into exact values.
    pub fn parse(&self) -> Result<ParsedRep, CliError> {
        let family: Family = self.family.parse()?;
        let context = Context::new(self.context.iter().cloned());
        match &self.specialization {
            None => {
                let images = self.images(|s| Ok(LaurentPoly::parse(&context, s)?))?;
                let rep =
                    Representation::new(family, self.n, self.degree, context.clone(), images)?;
                Ok(ParsedRep::Symbolic(rep))
            }
            Some(map) => {
                let values = Specialization::new(
                    map.iter()
                        .map(|(k, v)| Ok((k.clone(), parse_rational(v)?)))
                        .collect::<Result<Vec<_>, CliError>>()?,
                )?;
                let images = self.images(|s| Ok(parse_rational(s)?))?;
                let rep =
                    Representation::new(family, self.n, self.degree, Context::empty(), images)?;
                Ok(ParsedRep::Specialized {
                    context,
                    values,
                    rep,
                })
            }
        }
    }
}

fn latex_rational(x: &Rational) -> String {
    LaurentPoly::constant(&Context::empty(), x.clone()).to_latex()
}

fn pmatrix(rows: Vec<Vec<String>>) -> String {
    let body: Vec<String> = rows.into_iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n",
        body.join(" \\\\\n")
    )
}

/// One commented `pmatrix` block per generator.
pub fn latex(doc: &RepDocument, parsed: &ParsedRep) -> String {
    let mut out = format!(
        "% {} n={} degree={} over [{}]",
        doc.family,
        doc.n,
        doc.degree,
        doc.context.join(", ")
    );
    if let Some(s) = &doc.specialization {
        let parts: Vec<String> = s.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!(" at {}", parts.join(",")));
    }
    out.push('\n');
    let blocks: Vec<(String, Vec<Vec<String>>)> = match parsed {
        ParsedRep::Symbolic(rep) => rep
            .images()
            .iter()
            .map(|(l, m)| {
                (
                    l.to_string(),
                    m.to_rows()
                        .iter()
                        .map(|r| r.iter().map(LaurentPoly::to_latex).collect())
                        .collect(),
                )
            })
            .collect(),
        ParsedRep::Specialized { rep, .. } => rep
            .images()
            .iter()
            .map(|(l, m)| {
                (
                    l.to_string(),
                    m.to_rows()
                        .iter()
                        .map(|r| r.iter().map(latex_rational).collect())
                        .collect(),
                )
            })
            .collect(),
    };
    for (label, rows) in blocks {
        out.push_str(&format!("% {label}\n"));
        out.push_str(&pmatrix(rows));
    }
    out
}

fn vectors(s: &Subspace) -> Vec<Vec<String>> {
    s.basis()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionDoc {
    pub verdict: Option<String>,
    pub closure_dim: usize,
    pub saturated: bool,
    /// basis of the invariant subspace, rows in reduced echelon form
    pub witness: Option<Vec<Vec<String>>>,
}

impl DecisionDoc {
    pub fn certified(c: &IrredCertificate) -> Self {
        DecisionDoc {
            verdict: Some(c.verdict.to_string()),
            closure_dim: c.closure_dim,
            saturated: c.saturated,
            witness: c.witness.as_ref().map(vectors),
        }
    }

    pub fn from_computed(c: &Computed) -> Self {
        match c {
            Computed::Certified(c) => Self::certified(c),
            Computed::Undetermined {
                closure_dim,
                saturated,
                ..
            } => DecisionDoc {
                verdict: None,
                closure_dim: *closure_dim,
                saturated: *saturated,
                witness: None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredDocument {
    pub schema_version: u32,
    pub family: String,
    pub n: usize,
    pub degree: usize,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    #[serde(flatten)]
    pub decision: DecisionDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedVectorDoc {
    pub vector: Vec<String>,
    pub symbolic_fixed: bool,
    pub specialized: Vec<String>,
    pub spin_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedWitnessDoc {
    pub description: String,
    pub basis: Vec<Vec<String>>,
    pub invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub theorem_id: String,
    pub statement: String,
    pub n: usize,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    pub expected: String,
    pub computed: DecisionDoc,
    pub agrees: bool,
    pub fixed_vector: Option<FixedVectorDoc>,
    pub claimed_witnesses: Vec<ClaimedWitnessDoc>,
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn new(r: &TheoremReport, seed: u64) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            theorem_id: r.theorem_id.to_string(),
            statement: r.theorem_id.statement().to_string(),
            n: r.n,
            parameters: values_map(&r.parameters),
            seed,
            expected: r.expected.to_string(),
            computed: DecisionDoc::from_computed(&r.computed),
            agrees: r.agrees,
            fixed_vector: r.fixed_vector.as_ref().map(|f| FixedVectorDoc {
                vector: f.vector.clone(),
                symbolic_fixed: f.symbolic_fixed,
                specialized: f.specialized.iter().map(ToString::to_string).collect(),
                spin_dim: f.spin_dim,
            }),
            claimed_witnesses: r
                .claimed_witnesses
                .iter()
                .map(|w| ClaimedWitnessDoc {
                    description: w.description.clone(),
                    basis: vectors(&w.basis),
                    invariant: w.invariant,
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data");
    s.push('\n');
    s
}

pub(crate) fn parameters(s: &Specialization) -> BTreeMap<String, String> {
    values_map(s)
}
