use std::collections::BTreeMap;
use std::fmt::Write;

use hirota_core::{DifferentialForm, MultiPoly, Nodes, RationalFunction, VarNames, WebSpec};
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Debug, Serialize)]
pub struct SpecJson {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// `"symbolic"` or the node list as rational strings.
    pub lambdas: Value,
}

impl From<&WebSpec> for SpecJson {
    fn from(spec: &WebSpec) -> Self {
        let lambdas = match spec.nodes() {
            Nodes::Symbolic => Value::from("symbolic"),
            Nodes::Numeric(v) => v.iter().map(|r| Value::from(r.to_string())).collect(),
        };
        SpecJson {
            n: spec.n(),
            k: spec.k(),
            l: spec.l(),
            lambdas,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: &'static str,
    pub detail: String,
}

/// A named mathematical object with its three renderings.
#[derive(Debug)]
struct Object {
    name: String,
    text: String,
    latex: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub spec: SpecJson,
    pub results: Vec<CheckResult>,
    pub objects: BTreeMap<String, Value>,
    #[serde(skip)]
    order: Vec<Object>,
    #[serde(skip)]
    text_names: VarNames,
    #[serde(skip)]
    latex_names: VarNames,
}

impl Report {
    pub fn new(command: &'static str, spec: &WebSpec) -> Self {
        Report {
            command,
            spec: spec.into(),
            results: Vec::new(),
            objects: BTreeMap::new(),
            order: Vec::new(),
            text_names: spec.var_names(),
            latex_names: latex_names(spec.n(), spec.is_symbolic()),
        }
    }

    /// Use these variable names for objects added from now on.
    pub fn rename(&mut self, text: VarNames, latex: VarNames) {
        self.text_names = text;
        self.latex_names = latex;
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.results.push(CheckResult {
            name: name.into(),
            status: if passed { "pass" } else { "fail" },
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == "pass")
    }

    fn push(&mut self, name: &str, text: String, latex: String, json: Value) {
        self.objects.insert(name.to_string(), json);
        self.order.push(Object {
            name: name.to_string(),
            text,
            latex,
        });
    }

    pub fn poly(&mut self, name: &str, p: &MultiPoly) {
        let json = serde_json::to_value(p.to_json()).expect("polynomial JSON");
        self.push(
            name,
            p.render(&self.text_names),
            p.render_latex(&self.latex_names),
            json,
        );
    }

    pub fn function(&mut self, name: &str, f: &RationalFunction) {
        let json = serde_json::to_value(f.to_json()).expect("function JSON");
        self.push(
            name,
            f.render(&self.text_names),
            f.render_latex(&self.latex_names),
            json,
        );
    }

    /// A quotient rendered exactly as given, without normalizing signs or content.
    pub fn quotient(&mut self, name: &str, num: &MultiPoly, den: &MultiPoly) {
        let text = format!(
            "({})/({})",
            num.render(&self.text_names),
            den.render(&self.text_names)
        );
        let latex = format!(
            "\\frac{{{}}}{{{}}}",
            num.render_latex(&self.latex_names),
            den.render_latex(&self.latex_names)
        );
        let json = serde_json::json!({ "num": num.to_json(), "den": den.to_json() });
        self.push(name, text, latex, json);
    }

    pub fn form(&mut self, name: &str, form: &DifferentialForm) {
        let json = serde_json::to_value(form.to_json()).expect("form JSON");
        let latex = form_latex(form, &self.latex_names);
        self.push(name, form.render(&self.text_names), latex, json);
    }

    pub fn value(&mut self, name: &str, text: String) {
        let latex = format!("\\text{{{text}}}");
        self.push(name, text.clone(), latex, Value::from(text));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("report JSON");
                out.push('\n');
                out
            }
            Format::Text => self.render_text(),
            Format::Latex => self.render_latex(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.spec_line());
        for object in &self.order {
            let _ = writeln!(out, "{} = {}", object.name, object.text);
        }
        for r in &self.results {
            let _ = writeln!(out, "[{}] {}: {}", r.status, r.name, r.detail);
        }
        out
    }

    fn render_latex(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "% {} {}", self.command, self.spec_line());
        if !self.order.is_empty() {
            out.push_str("\\begin{align*}\n");
            let lines: Vec<String> = self
                .order
                .iter()
                .map(|o| format!("{} &= {}", latex_label(&o.name), o.latex))
                .collect();
            out.push_str(&lines.join(" \\\\\n"));
            out.push_str("\n\\end{align*}\n");
        }
        for r in &self.results {
            let _ = writeln!(out, "% [{}] {}: {}", r.status, r.name, r.detail);
        }
        out
    }

    fn spec_line(&self) -> String {
        let nodes = match &self.spec.lambdas {
            Value::Array(v) => {
                let parts: Vec<&str> = v.iter().filter_map(Value::as_str).collect();
                format!("({})", parts.join(","))
            }
            other => other.as_str().unwrap_or_default().to_string(),
        };
        format!(
            "n={} [k/l]=[{}/{}] lambdas={}",
            self.spec.n, self.spec.k, self.spec.l, nodes
        )
    }
}

/// `x_{1}..x_{n}` and `\lambda_{1}..\lambda_{n}`.
pub fn latex_names(n: usize, symbolic: bool) -> VarNames {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x_{{{i}}}")).collect();
    if symbolic {
        names.extend((1..=n).map(|i| format!("\\lambda_{{{i}}}")));
    }
    VarNames::new(names)
}

fn form_latex(form: &DifferentialForm, names: &VarNames) -> String {
    if form.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = form
        .components()
        .map(|(index, coeff)| {
            let basis: Vec<String> = index
                .iter()
                .map(|&i| format!("\\mathrm{{d}}{}", names.name(i)))
                .collect();
            let coeff = if coeff.is_polynomial() && coeff.num().len() > 1 {
                format!("\\left({}\\right)", coeff.render_latex(names))
            } else {
                coeff.render_latex(names)
            };
            format!("{coeff} {}", basis.join(" \\wedge "))
        })
        .collect();
    parts.join(" + ")
}

/// `P_1` becomes `P_{1}`; longer bare names are set upright.
fn latex_label(name: &str) -> String {
    match name.split_once('_') {
        Some((head, tail)) => format!("{head}_{{{tail}}}"),
        None if name.chars().count() == 1 => name.to_string(),
        None => format!("\\mathrm{{{name}}}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(latex_label("P_1"), "P_{1}");
        assert_eq!(latex_label("f"), "f");
        assert_eq!(latex_label("verdict"), "\\mathrm{verdict}");
    }
}
