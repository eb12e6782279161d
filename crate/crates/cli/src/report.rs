use num_bigint::BigInt;
use obgenus::braid::BraidWord;
use obgenus::classify::{ManifoldClass, ManifoldKind, ObgResult, Witness};
use obgenus::exactalg::{AbelianGroup, IntMatrix, SmithForm};
use obgenus::openbook::OpenBook;
use serde_json::{json, Map, Number, Value};

/// Rendered command output: the JSON document and a short text form.
pub struct Report {
    pub json: Value,
    pub lines: Vec<String>,
}

impl Report {
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.lines.join("\n")
        } else {
            self.json.to_string()
        }
    }
}

fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn class_json(kind: &ManifoldKind) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), kind.type_name().into());
    match kind {
        ManifoldKind::Lens(l) => {
            m.insert("p".into(), int(l.p()));
            m.insert("q".into(), int(l.q()));
        }
        ManifoldKind::ConnectedSum(parts) => {
            m.insert("summands".into(), parts.iter().map(class_json).collect());
        }
        ManifoldKind::SeifertPrime(s) => {
            let fibers = s.fibers().iter().map(|f| json!([f.multiplicity, f.twist])).collect();
            m.insert("fibers".into(), Value::Array(fibers));
        }
        ManifoldKind::S3 | ManifoldKind::S1xS2 | ManifoldKind::Unknown => {}
    }
    Value::Object(m)
}

pub fn h1_json(h: &AbelianGroup) -> Value {
    json!({ "rank": h.free_rank(), "torsion": h.torsion().iter().map(int).collect::<Vec<_>>() })
}

pub fn obg_json(r: &ObgResult) -> Value {
    let mut m = Map::new();
    m.insert("lower".into(), r.lower.into());
    m.insert("upper".into(), r.upper.map_or(Value::Null, Value::from));
    if let Some(e) = r.exact {
        m.insert("exact".into(), e.into());
    }
    Value::Object(m)
}

fn witnesses_json(ws: &[Witness]) -> Value {
    ws.iter().map(|w| Value::from(w.as_str())).collect()
}

fn page_json(book: &OpenBook) -> Value {
    let page = book.page();
    json!({
        "genus": page.genus(),
        "boundary": page.boundary_components(),
        "euler_characteristic": book.euler_characteristic(),
        "heegaard_genus": book.induced_heegaard_genus(),
    })
}

fn obg_line(r: &ObgResult) -> String {
    match (r.exact, r.upper) {
        (Some(e), _) => format!("open book genus: {e}"),
        (None, Some(u)) => format!("open book genus: {} <= obg <= {u}", r.lower),
        (None, None) => format!("open book genus: >= {}", r.lower),
    }
}

fn witness_line(ws: &[Witness]) -> String {
    let names: Vec<&str> = ws.iter().map(|w| w.as_str()).collect();
    format!("witnesses: {}", names.join(", "))
}

/// Classification report, with the page of `book` when given.
pub fn classification(input: Value, book: Option<&OpenBook>, class: &ManifoldClass, obg: &ObgResult) -> Report {
    let mut m = Map::new();
    m.insert("input".into(), input);
    if let Some(b) = book {
        m.insert("page".into(), page_json(b));
    }
    m.insert("class".into(), class_json(&class.kind));
    m.insert("h1".into(), h1_json(&class.h1));
    m.insert("obg".into(), obg_json(obg));
    m.insert("witnesses".into(), witnesses_json(&obg.witnesses));

    let mut lines = vec![format!("manifold: {}", class.kind), format!("H1: {}", class.h1)];
    if let Some(b) = book {
        lines.push(format!("page: {}, euler characteristic {}", b.page(), b.euler_characteristic()));
    }
    lines.push(obg_line(obg));
    lines.push(witness_line(&obg.witnesses));
    Report { json: Value::Object(m), lines }
}

/// Page bookkeeping only: `1 - χ` bounds the open book genus.
pub fn page_only(input: Value, book: &OpenBook) -> Report {
    let bound = book.obg_upper_bound();
    let ws = [Witness::PageBound];
    let json = json!({
        "input": input,
        "page": page_json(book),
        "obg": { "lower": 0, "upper": bound },
        "witnesses": witnesses_json(&ws),
    });
    let lines = vec![
        format!("page: {}, euler characteristic {}", book.page(), book.euler_characteristic()),
        format!("open book genus: <= {bound}"),
        witness_line(&ws),
    ];
    Report { json, lines }
}

pub fn plumbing(input: Value, parts: &[OpenBook], result: &OpenBook) -> Report {
    let bounds: Vec<u32> = parts.iter().map(OpenBook::obg_upper_bound).collect();
    let ws = [Witness::Subadditivity, Witness::PageBound];
    let json = json!({
        "input": input,
        "page": page_json(result),
        "summand_bounds": bounds,
        "obg": { "lower": 0, "upper": result.obg_upper_bound() },
        "witnesses": witnesses_json(&ws),
    });
    let lines = vec![
        format!("page: {}, euler characteristic {}", result.page(), result.euler_characteristic()),
        format!("induced Heegaard genus: {}", result.induced_heegaard_genus()),
        format!("open book genus: <= {}", result.obg_upper_bound()),
        witness_line(&ws),
    ];
    Report { json, lines }
}

fn matrix_json(m: &IntMatrix) -> Value {
    m.to_rows().iter().map(|r| r.iter().map(int).collect::<Value>()).collect()
}

pub fn smith(input: Value, snf: &SmithForm, cokernel: &AbelianGroup) -> Report {
    let factors: Vec<Value> = snf.invariant_factors.iter().map(int).collect();
    let json = json!({
        "input": input,
        "invariant_factors": factors,
        "rank": snf.rank(),
        "cokernel": h1_json(cokernel),
        "left": matrix_json(&snf.left),
        "right": matrix_json(&snf.right),
    });
    let d: Vec<String> = snf.invariant_factors.iter().map(ToString::to_string).collect();
    let lines = vec![
        format!("invariant factors: ({})", d.join(", ")),
        format!("cokernel: {cokernel}"),
        format!("U = {}", snf.left),
        format!("V = {}", snf.right),
    ];
    Report { json, lines }
}

pub fn braid_info(input: Value, w: &BraidWord) -> Report {
    let data = w.closure_data();
    let cycles: Vec<Value> = w.permutation().cycles().into_iter().map(Value::from).collect();
    let mut m = Map::new();
    m.insert("input".into(), input);
    m.insert("strands".into(), data.strands.into());
    m.insert("letters".into(), w.letters().into());
    m.insert("components".into(), data.components.into());
    m.insert("exponent_sum".into(), data.exponent_sum.into());
    m.insert("permutation_cycles".into(), Value::Array(cycles));
    let mut index = Map::new();
    index.insert("upper".into(), w.braid_index_upper().into());
    if let Some(e) = w.braid_index_exact() {
        index.insert("exact".into(), e.into());
    }
    m.insert("braid_index".into(), Value::Object(index));

    let mut lines = vec![
        format!(
            "braid: {} on {} strands",
            if w.is_empty() { "(empty)".to_string() } else { w.to_string() },
            data.strands
        ),
        format!("closure: {} components, exponent sum {}", data.components, data.exponent_sum),
    ];
    if let (Ok(burau), Ok(det)) = (w.burau_neg1(), w.closure_determinant()) {
        m.insert("burau".into(), matrix_json(&burau));
        m.insert("determinant".into(), int(&det));
        lines.push(format!("Burau at t=-1: {burau}"));
        lines.push(format!("determinant: {det}"));
    }
    if let Some((p, q)) = w.as_torus_sum() {
        m.insert("torus_sum".into(), json!([p, q]));
        lines.push(format!("conjugate to s1^{p} s2^{q}"));
    }
    Report { json: Value::Object(m), lines }
}
