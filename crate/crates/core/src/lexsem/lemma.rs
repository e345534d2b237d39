//! Deterministic English suffix-rule lemmatizer for identifier words.

const IRREGULAR: &[(&str, &str)] = &[
    ("analyses", "analysis"),
    ("appendices", "appendix"),
    ("children", "child"),
    ("criteria", "criterion"),
    ("indices", "index"),
    ("matrices", "matrix"),
    ("men", "man"),
    ("people", "person"),
    ("vertices", "vertex"),
    ("women", "woman"),
];

const MIN_STEM: usize = 4;

fn is_vowel(c: u8) -> bool {
    matches!(c, b'a' | b'e' | b'i' | b'o' | b'u')
}

/// Repairs a stem left by stripping `-ing`/`-ed`.
fn tidy_stem(stem: &str) -> String {
    let b = stem.as_bytes();
    let n = b.len();
    if stem.ends_with("at") || stem.ends_with("bl") || stem.ends_with("iz") {
        return format!("{stem}e");
    }
    if n >= 2 && b[n - 1] == b[n - 2] && !is_vowel(b[n - 1]) && !matches!(b[n - 1], b'l' | b's' | b'z') {
        return stem[..n - 1].to_owned();
    }
    stem.to_owned()
}

/// Lemma of a lowercase word.
///
/// Rules, first match wins: irregular table; words of three letters or fewer
/// unchanged; `ies -> y`; `sses -> ss`; `xes/ches/shes/zzes` drop `es`;
/// `ss/us/is` unchanged; plural `s` dropped; `ing` and `ed` stripped when at
/// least four letters remain (then `at/bl/iz` gain an `e` and a doubled final
/// consonant is undoubled).
pub fn lemmatize(word: &str) -> String {
    if let Some((_, lemma)) = IRREGULAR.iter().find(|(w, _)| *w == word) {
        return (*lemma).to_owned();
    }
    if word.len() <= 3 || !word.is_ascii() {
        return word.to_owned();
    }
    if let Some(stem) = word.strip_suffix("ies") {
        if word.len() > 4 {
            return format!("{stem}y");
        }
    }
    if let Some(stem) = word.strip_suffix("sses") {
        return format!("{stem}ss");
    }
    for suffix in ["xes", "ches", "shes", "zzes"] {
        if word.ends_with(suffix) {
            return word[..word.len() - 2].to_owned();
        }
    }
    if word.ends_with("ss") || word.ends_with("us") || word.ends_with("is") {
        return word.to_owned();
    }
    if let Some(stem) = word.strip_suffix('s') {
        return stem.to_owned();
    }
    for suffix in ["ing", "ed"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            if stem.len() >= MIN_STEM {
                return tidy_stem(stem);
            }
        }
    }
    word.to_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Outputs of the rule table, recorded as goldens.
    #[test]
    fn golden_lemmas() {
        let cases = [
            ("classes", "class"),
            ("indices", "index"),
            ("entries", "entry"),
            ("properties", "property"),
            ("ties", "tie"),
            ("boxes", "box"),
            ("matches", "match"),
            ("items", "item"),
            ("status", "status"),
            ("analysis", "analysis"),
            ("process", "process"),
            ("loading", "load"),
            ("running", "run"),
            ("mapped", "map"),
            ("created", "create"),
            ("initialized", "initialize"),
            ("enabled", "enable"),
            ("string", "string"),
            ("used", "used"),
            ("speed", "speed"),
            ("get", "get"),
            ("filling", "fill"),
        ];
        for (word, lemma) in cases {
            assert_eq!(lemmatize(word), lemma, "lemma of {word}");
        }
    }
}
