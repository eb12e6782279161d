use num_bigint::BigInt;
use obgenus::exactalg::IntMatrix;
use obgenus::openbook::{OpenBook, PageType};
use obgenus::Error;

/// Matrix given either as JSON (`[[1,2],[3,4]]`) or as inline rows
/// separated by `;` (`1 2; 3 4`).
pub fn parse_matrix(text: &str) -> Result<IntMatrix, Error> {
    let text = text.trim();
    let rows: Vec<Vec<BigInt>> = if text.starts_with('[') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let rows = value.as_array().ok_or_else(|| Error::Parse("matrix must be a JSON array".into()))?;
        rows.iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?
                    .iter()
                    .map(|x| match x {
                        serde_json::Value::Number(n) => {
                            n.to_string().parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {n}")))
                        }
                        other => Err(Error::Parse(format!("not an integer: {other}"))),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?
    } else {
        text.split(';')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    IntMatrix::from_rows(&rows)
}

/// `disk`, `annulus`, `pants`, `torus`, or `g:b`.
pub fn parse_page(text: &str) -> Result<OpenBook, Error> {
    let page = match text.trim() {
        "disk" => PageType::DISK,
        "annulus" => PageType::ANNULUS,
        "pants" => PageType::PANTS,
        "torus" => PageType::PUNCTURED_TORUS,
        other => {
            let (g, b) =
                other.split_once(':').ok_or_else(|| Error::Parse(format!("unknown page descriptor {other:?}")))?;
            let g = g.trim().parse().map_err(|_| Error::Parse(format!("bad genus in {other:?}")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad boundary count in {other:?}")))?;
            PageType::new(g, b)?
        }
    };
    Ok(OpenBook::opaque(page))
}
