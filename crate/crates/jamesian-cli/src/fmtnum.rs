//! Probability formatting: 12 decimal digits, trailing zeros trimmed. All
//! printed values live in [0, 1], so 12 decimal digits sit well above every
//! certification tolerance in the crate.

pub fn format_prob(v: f64) -> String {
    let s = format!("{v:.12}");
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    if trimmed.is_empty() || trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}
