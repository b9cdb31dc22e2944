//! Text, JSON and DOT renderers for the small commands.

use std::fmt::Write as _;

use serde::Serialize;

use delpezzo::criteria::{self, IrreducibleVerdict};
use delpezzo::lattice::DivisorClass;
use delpezzo::lines::{incidence_graph, skew_five_tuples, LineKind};

fn labels() -> [String; 16] {
    LineKind::all().map(|kind| kind.to_string())
}

#[derive(Serialize)]
struct InfoPayload {
    class: String,
    degree: i64,
    self_intersection: i64,
    genus: i64,
    euler: i64,
    very_ample: bool,
    verdict: &'static str,
    kind: Option<String>,
}

impl InfoPayload {
    fn new(class: DivisorClass) -> Self {
        let verdict = delpezzo::contains_irreducible(class);
        Self {
            class: class.to_string(),
            degree: class.degree(),
            self_intersection: class.self_intersection(),
            genus: class.arithmetic_genus(),
            euler: class.euler_characteristic(),
            very_ample: delpezzo::is_very_ample(class),
            verdict: verdict.word(),
            kind: verdict.kind().map(|k| k.to_string()),
        }
    }
}

pub fn info_text(class: DivisorClass) -> String {
    let p = InfoPayload::new(class);
    let mut out = String::new();
    let _ = writeln!(out, "class: {}", p.class);
    let _ = writeln!(out, "degree: {}", p.degree);
    let _ = writeln!(out, "self_intersection: {}", p.self_intersection);
    let _ = writeln!(out, "genus: {}", p.genus);
    let _ = writeln!(out, "euler: {}", p.euler);
    let _ = writeln!(out, "very_ample: {}", p.very_ample);
    let _ = writeln!(out, "verdict: {}", delpezzo::contains_irreducible(class));
    out
}

pub fn info_json(class: DivisorClass) -> String {
    serde_json::to_string(&InfoPayload::new(class)).expect("payload serializes")
}

pub fn lines_text() -> String {
    let graph = incidence_graph();
    let mut out = String::new();
    for (label, class) in labels().iter().zip(graph.lines()) {
        let _ = writeln!(out, "{label} {class}");
    }
    out
}

pub fn lines_json() -> String {
    let texts: Vec<String> = incidence_graph()
        .lines()
        .iter()
        .map(|c| c.to_string())
        .collect();
    serde_json::to_string(&texts).expect("strings serialize")
}

pub fn lines_dot() -> String {
    let graph = incidence_graph();
    let labels = labels();
    let mut out = String::from("graph incidence {\n");
    for label in &labels {
        let _ = writeln!(out, "  {label};");
    }
    for (i, j) in graph.edges() {
        let _ = writeln!(out, "  {} -- {};", labels[i], labels[j]);
    }
    out.push_str("}\n");
    out
}

pub fn skew_text() -> String {
    let labels = labels();
    let mut out = String::new();
    for tuple in skew_five_tuples() {
        let row: Vec<&str> = tuple.iter().map(|&i| labels[i].as_str()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn skew_json() -> String {
    let labels = labels();
    let tuples: Vec<Vec<&str>> = skew_five_tuples()
        .into_iter()
        .map(|tuple| tuple.iter().map(|&i| labels[i].as_str()).collect())
        .collect();
    serde_json::to_string(&tuples).expect("labels serialize")
}

#[derive(Serialize)]
struct ClassPayload {
    class: String,
}

pub fn class_json(class: DivisorClass) -> String {
    serde_json::to_string(&ClassPayload {
        class: class.to_string(),
    })
    .expect("payload serializes")
}

#[derive(Serialize)]
struct NormalizePayload {
    word: String,
    class: String,
    normal_form: bool,
}

fn normalize_payload(class: DivisorClass) -> NormalizePayload {
    let (word, image) = criteria::greedy_normalize(class);
    NormalizePayload {
        word: word.to_string(),
        class: image.to_string(),
        normal_form: criteria::certifies_very_ample(image),
    }
}

pub fn normalize_text(class: DivisorClass) -> String {
    let p = normalize_payload(class);
    format!(
        "word: {}\nclass: {}\nnormal_form: {}\n",
        p.word, p.class, p.normal_form
    )
}

pub fn normalize_json(class: DivisorClass) -> String {
    serde_json::to_string(&normalize_payload(class)).expect("payload serializes")
}

#[derive(Serialize)]
struct AmplePayload {
    class: String,
    very_ample: bool,
}

pub fn ample_json(class: DivisorClass, very_ample: bool) -> String {
    serde_json::to_string(&AmplePayload {
        class: class.to_string(),
        very_ample,
    })
    .expect("payload serializes")
}

#[derive(Serialize)]
struct VerdictPayload {
    verdict: &'static str,
    kind: Option<String>,
}

pub fn verdict_json(verdict: IrreducibleVerdict) -> String {
    let payload = VerdictPayload {
        verdict: verdict.word(),
        kind: verdict.kind().map(|k| k.to_string()),
    };
    serde_json::to_string(&payload).expect("payload serializes")
}
