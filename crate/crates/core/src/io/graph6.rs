//! graph6 encoding of simple graphs.
//!
//! The format packs the upper triangle of the adjacency matrix column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, each
//! written as one printable byte `value + 63`, after a size prefix.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` in graph6, without header or trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} exceeds the supported maximum {MAX_ORDER}")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    size_prefix(n, &mut out);

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored. Padding bits must be zero.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let text = s.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {:#04x} at offset {pos} is outside 63..=126", bytes[pos])));
    }
    let values: Vec<u8> = bytes.iter().map(|b| b - 63).collect();

    let (n, body) = if values[0] == 63 {
        if values.len() < 4 {
            return Err(Error::Graph6("truncated size prefix".into()));
        }
        if values[1] == 63 {
            return Err(Error::Graph6("orders above 258047 are not supported".into()));
        }
        let n = (values[1] as usize) << 12 | (values[2] as usize) << 6 | values[3] as usize;
        (n, &values[4..])
    } else {
        (values[0] as usize, &values[1..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} outside supported range 1..={MAX_ORDER}")));
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::Graph6(format!("truncated payload: {} of {expected} bytes", body.len())));
    }
    if body.len() > expected {
        return Err(Error::Graph6(format!("trailing data: {} bytes beyond the payload", body.len() - expected)));
    }

    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_star};
    use proptest::prelude::*;

    #[test]
    fn hand_decoded_examples() {
        let g = parse_graph6("B?").unwrap();
        assert_eq!((g.order(), g.size()), (3, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(write_graph6(&k2).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn known_encodings() {
        // P4: x01=1 x02=0 x12=1 x03=0 x13=0 x23=1 -> 101001 -> 41 + 63 = 'h'.
        assert_eq!(write_graph6(&make_path(4).unwrap()).unwrap(), "Ch");
        // C5 (0-1-2-3-4-0): 1,0,1,0,0,1 | 1,0,0,1 + padding -> 'h', 'c'.
        assert_eq!(write_graph6(&make_cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(write_graph6(&make_star(4).unwrap()).unwrap(), "Cs");
    }

    #[test]
    fn large_orders_use_long_prefix() {
        let g = make_path(64).unwrap();
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g62 = make_path(62).unwrap();
        let s62 = write_graph6(&g62).unwrap();
        assert_eq!(s62.as_bytes()[0], 125);
        assert_eq!(parse_graph6(&s62).unwrap(), g62);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err(), "truncated payload");
        assert!(parse_graph6("B??").is_err(), "trailing data");
        assert!(parse_graph6("A_ \n").is_ok(), "trailing whitespace is trimmed");
        assert!(parse_graph6("A\x7f").is_err(), "byte out of range");
        assert!(parse_graph6("A`").is_err(), "padding bit set");
        assert!(parse_graph6("?").is_err(), "zero vertices");
        assert!(parse_graph6("~?A?").is_err(), "order 65");
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn round_trip_is_labelled_identity(g in arb_graph()) {
            let s = write_graph6(&g).unwrap();
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(write_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
        }

        #[test]
        fn distinct_graphs_encode_distinctly(a in arb_graph(), b in arb_graph()) {
            if a.order() == b.order() && a != b {
                prop_assert_ne!(write_graph6(&a).unwrap(), write_graph6(&b).unwrap());
            }
        }
    }
}
