//! Significant-figure rendering for table and value output.
//!
//! All rounding is round-half-even, inherited from the standard library's
//! correctly-rounded float formatting; the positional layout is rebuilt from
//! the exponential form so trailing zeros within the requested precision are
//! kept and output stays byte-stable.

use digamma_accel::Scalar;

/// Render `x` to `digits` significant figures in positional notation.
pub fn significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return if digits == 1 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits - 1))
        };
    }

    let formatted = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = formatted
        .split_once('e')
        .expect("exponential format always contains e");
    let exponent: i32 = exponent.parse().expect("valid exponent");
    let negative = mantissa.starts_with('-');
    let digits_only: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits_only.len(), digits);

    let body = if exponent >= digits as i32 - 1 {
        // Integer with trailing zeros.
        let zeros = exponent as usize + 1 - digits;
        format!("{digits_only}{}", "0".repeat(zeros))
    } else if exponent >= 0 {
        let split = exponent as usize + 1;
        format!("{}.{}", &digits_only[..split], &digits_only[split..])
    } else {
        let zeros = (-exponent) as usize - 1;
        format!("0.{}{digits_only}", "0".repeat(zeros))
    };
    if negative { format!("-{body}") } else { body }
}

/// Like [`significant`] but with the fractional digits grouped in triplets,
/// mirroring the reference tables.
pub fn significant_grouped(x: f64, digits: usize) -> String {
    let plain = significant(x, digits);
    match plain.split_once('.') {
        None => plain,
        Some((head, frac)) => {
            let grouped: Vec<String> = frac
                .as_bytes()
                .chunks(3)
                .map(|c| String::from_utf8_lossy(c).into_owned())
                .collect();
            format!("{head}.{}", grouped.join(" "))
        }
    }
}

/// `a + bi` / `a - bi` with both parts at the same precision.
pub fn complex(z: Scalar, digits: usize, grouped: bool) -> String {
    let render = if grouped {
        significant_grouped
    } else {
        significant
    };
    let re = render(z.re, digits);
    let im = render(z.im.abs(), digits);
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    if grouped {
        format!("{re} {sign} {im} i")
    } else {
        format!("{re}{sign}{im}i")
    }
}

/// Error magnitudes for the compare table.
pub fn magnitude(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

/// A plain CSV or pipe-table renderer over pre-formatted cells.
pub enum TableStyle {
    Csv,
    Markdown,
}

pub fn render_table(style: &TableStyle, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    match style {
        TableStyle::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        TableStyle::Markdown => {
            out.push_str("| ");
            out.push_str(&header.join(" | "));
            out.push_str(" |\n|");
            for _ in header {
                out.push_str(" --- |");
            }
            out.push('\n');
            for row in rows {
                out.push_str("| ");
                out.push_str(&row.join(" | "));
                out.push_str(" |\n");
            }
        }
    }
    out
}
