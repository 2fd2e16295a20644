//! Complex literals of the form `a+bi`, `a-bi`, `a`, `bi`, whitespace allowed.

use shen_elliptic::ComplexValue;

pub fn parse_complex(text: &str) -> Result<ComplexValue, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let bad = || format!("malformed complex literal {text:?}");
    let real = |part: &str| part.parse::<f64>().map_err(|_| bad());
    let imag = |part: &str| match part {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        p => p.parse::<f64>().map_err(|_| bad()),
    };

    let Some(body) = s.strip_suffix('i') else {
        return Ok(ComplexValue::new(real(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(ComplexValue::new(real(&body[..k])?, imag(&body[k..])?)),
        None => Ok(ComplexValue::new(0.0, imag(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_complex("0+0i").unwrap(), c(0.0, 0.0));
        assert_eq!(parse_complex("1.5-2i").unwrap(), c(1.5, -2.0));
        assert_eq!(parse_complex(" 1.5 - 2 i ").unwrap(), c(1.5, -2.0));
        assert_eq!(parse_complex("-3").unwrap(), c(-3.0, 0.0));
        assert_eq!(parse_complex("2.5i").unwrap(), c(0.0, 2.5));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert_eq!(parse_complex("1e-3-2E+2i").unwrap(), c(1e-3, -200.0));
        assert_eq!(parse_complex("-1e-3+4e-5i").unwrap(), c(-1e-3, 4e-5));
    }

    #[test]
    fn rejected_forms() {
        for bad in ["", "abc", "1+2j", "1++2i", "i2", "1+2i+3"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn display_round_trip_is_bit_exact(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let text = format!("{re}{im:+}i");
            let z = parse_complex(&text).unwrap();
            prop_assert_eq!(z.re.to_bits(), re.to_bits());
            prop_assert_eq!(z.im.to_bits(), im.to_bits());
        }
    }
}
