//! Random card generation for property and acceptance tests.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::model::{empty_card, Checklist, ModelCard, SelectionList};
use crate::vocabulary::{TermSelection, VocabularyId};

const WORDS: &[&str] = &[
    "disk",
    "image",
    "hash",
    "timeline",
    "suspect",
    "exfiltration",
    "Tor",
    "USB",
    "registry",
    "carving",
    "SQLite",
    "WhatsApp",
    "PCAP",
    "model",
    "v2",
    "lab",
    "Interpol",
    "média",
    "файл",
    "証拠",
    "beacon",
    "cluster",
    "42",
];

const PUNCTUATION: &[&str] = &[
    "#",
    "*",
    "-",
    "_",
    "`",
    "<b>",
    "\"quoted\"",
    "1.",
    "&",
    "\\",
];

fn words(rng: &mut impl Rng, min: usize, max: usize) -> String {
    let n = rng.random_range(min..=max);
    (0..n)
        .map(|_| *WORDS.choose(rng).expect("non-empty"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Free text with occasional markup characters and line breaks.
pub fn random_text(rng: &mut impl Rng) -> String {
    let mut parts = vec![words(rng, 1, 6)];
    if rng.random_bool(0.3) {
        parts.push(PUNCTUATION.choose(rng).expect("non-empty").to_string());
        parts.push(words(rng, 1, 3));
    }
    let sep = if rng.random_bool(0.2) { "\n" } else { " " };
    parts.join(sep)
}

/// Single-line "Other" text built from plain words.
pub fn random_other(rng: &mut impl Rng) -> String {
    format!("{} {}", words(rng, 1, 3), rng.random_range(0..1000))
}

pub fn random_mmcid(rng: &mut impl Rng) -> String {
    format!(
        "DF-MC-{}-{:03}",
        rng.random_range(1970..=2099),
        rng.random_range(0..1000)
    )
}

fn fill(rng: &mut impl Rng, list: &mut SelectionList) {
    let mut terms: Vec<_> = list.vocabulary().vocabulary().terms.iter().collect();
    terms.shuffle(rng);
    let canonical = rng.random_range(0..=terms.len().min(5));
    let others = if rng.random_bool(0.3) {
        rng.random_range(1..=2)
    } else {
        0
    };
    let mut picks: Vec<TermSelection> = terms[..canonical]
        .iter()
        .map(|t| TermSelection::Canonical(t))
        .collect();
    for _ in 0..others {
        picks.push(TermSelection::Other(random_other(rng)));
    }
    picks.shuffle(rng);
    for pick in picks {
        list.push(pick)
            .expect("terms come from the list's own vocabulary");
    }
}

fn tick(rng: &mut impl Rng, list: &mut Checklist) {
    let p = rng.random_range(0.0..=1.0);
    for entry in list.entries_mut() {
        entry.selected = rng.random_bool(p);
        let describe = if entry.selected { 0.6 } else { 0.05 };
        if rng.random_bool(describe) {
            entry.description = Some(random_text(rng));
        }
    }
}

/// A random card. MMCIDs, when present, are well formed.
pub fn random_card<R: Rng>(rng: &mut R) -> ModelCard {
    let mut card = empty_card();
    let density = rng.random_range(0.0..=1.0);
    let on = |rng: &mut R| rng.random_bool(density);

    let id = &mut card.identification;
    if on(rng) {
        id.mmcid = Some(random_mmcid(rng));
    }
    if on(rng) {
        id.version = Some(format!(
            "{}.{}",
            rng.random_range(0..5),
            rng.random_range(0..20)
        ));
    }
    if on(rng) {
        id.owner = Some(random_text(rng));
    }
    if on(rng) {
        let mut usage = SelectionList::new(VocabularyId::UsageContext);
        fill(rng, &mut usage);
        id.usage_context = usage.as_slice().first().cloned();
    }
    if on(rng) {
        id.layer_stage = Some(format!("L{} of {}", rng.random_range(1..4), 4));
    }

    if on(rng) {
        card.case_context.case_statement = Some(random_text(rng));
    }
    if on(rng) {
        for _ in 0..rng.random_range(1..4) {
            card.case_context.add_hypothesis(random_text(rng));
        }
    }

    for list in [
        &mut card.classification.domains,
        &mut card.classification.reasoning,
        &mut card.quality.biases,
        &mut card.quality.bias_causes,
        &mut card.quality.error_causes,
    ] {
        if on(rng) {
            fill(rng, list);
        }
    }
    if on(rng) {
        card.quality.errors_observed = Some(random_text(rng));
    }
    if on(rng) {
        tick(rng, &mut card.top_level);
    }
    if on(rng) {
        tick(rng, &mut card.pipeline);
    }
    card
}
