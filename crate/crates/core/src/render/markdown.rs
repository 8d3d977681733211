//! Markdown rendering. Output uses headings, paragraphs, bullet lists and
//! task lists only. Free text is escaped so it cannot open new block
//! structure such as headings.

use std::fmt::Write;

use super::{RenderOptions, REFERENCES};
use crate::model::{Checklist, ModelCard, SelectionList};
use crate::vocabulary::TermSelection;

const NOT_DOCUMENTED: &str = "*(not documented)*";

pub const TITLE: &str = "Digital Forensics Model Card";

pub const SECTION_TITLES: [&str; 6] = [
    "Identification & Context",
    "Case Context",
    "Classification & Approach",
    "Quality & Limitations",
    "Top Level Elements (DF MC 0)",
    "Data Types & Analytical Processes (DF MC 1)",
];

pub fn to_markdown(card: &ModelCard, opts: &RenderOptions) -> String {
    let mut doc = Doc::default();
    match &card.identification.mmcid {
        Some(id) => doc.line(&format!("# {TITLE}: {}", inline(id))),
        None => doc.line(&format!("# {TITLE}")),
    }

    let id = &card.identification;
    doc.section(SECTION_TITLES[0]);
    doc.field("MMCID (Model Card Identifier)", id.mmcid.as_deref());
    doc.field("MCV (Version)", id.version.as_deref());
    doc.field("DF-MCO (Owner)", id.owner.as_deref());
    doc.field(
        "DF-MCUse (Usage Context)",
        id.usage_context.as_ref().map(selection_text).as_deref(),
    );
    doc.field("DF-MC Ln (Layer/Stage)", id.layer_stage.as_deref());

    let ctx = &card.case_context;
    doc.section(SECTION_TITLES[1]);
    doc.paragraph("DF-MC CS (Case Statement)", ctx.case_statement.as_deref());
    doc.bullets(
        "DF-MC H (Hypothesis)",
        ctx.hypotheses().iter().map(|h| leading(h)),
    );

    let class = &card.classification;
    doc.section(SECTION_TITLES[2]);
    doc.selections("DF-MC C (Classification)", &class.domains);
    doc.selections("DF-MC TR (Type of Reasoning)", &class.reasoning);

    let quality = &card.quality;
    doc.section(SECTION_TITLES[3]);
    doc.selections("DF-MC B (Bias)", &quality.biases);
    doc.selections("DF-MC CB (Cause of Bias)", &quality.bias_causes);
    doc.paragraph("DF-MC E (Error)", quality.errors_observed.as_deref());
    doc.selections("DF-MC CE (Cause of Error)", &quality.error_causes);

    doc.section(SECTION_TITLES[4]);
    doc.checklist(&card.top_level);
    doc.section(SECTION_TITLES[5]);
    doc.checklist(&card.pipeline);

    doc.blank();
    doc.line("---");
    doc.blank();
    doc.line(&format!("- **Generated:** {}", opts.timestamp_string()));
    doc.line(&format!(
        "- **Generator version:** {}",
        inline(&opts.generator_version)
    ));
    doc.line(&format!(
        "- **Schema version:** {}",
        inline(&opts.schema_version)
    ));
    doc.blank();
    doc.line("**References:**");
    doc.blank();
    for (i, reference) in REFERENCES.iter().enumerate() {
        doc.line(&format!("{}. {}", i + 1, reference));
    }
    doc.out
}

#[derive(Default)]
struct Doc {
    out: String,
}

impl Doc {
    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn blank(&mut self) {
        self.out.push('\n');
    }

    fn section(&mut self, title: &str) {
        self.blank();
        self.line(&format!("## {title}"));
        self.blank();
    }

    fn field(&mut self, label: &str, value: Option<&str>) {
        let value = value.map(inline);
        let _ = writeln!(
            self.out,
            "- **{label}:** {}",
            value.as_deref().unwrap_or(NOT_DOCUMENTED)
        );
    }

    fn heading_label(&mut self, label: &str) {
        if !self.out.ends_with("\n\n") {
            self.blank();
        }
        self.line(&format!("**{label}:**"));
        self.blank();
    }

    fn paragraph(&mut self, label: &str, text: Option<&str>) {
        self.heading_label(label);
        match text {
            Some(text) => {
                for line in text.lines() {
                    let line = line.trim();
                    if line.is_empty() {
                        if !self.out.ends_with("\n\n") {
                            self.blank();
                        }
                    } else {
                        self.line(&escape_line(line));
                    }
                }
            }
            None => self.line(NOT_DOCUMENTED),
        }
    }

    fn bullets(&mut self, label: &str, items: impl Iterator<Item = String>) {
        self.heading_label(label);
        let mut any = false;
        for item in items {
            any = true;
            self.line(&format!("- {item}"));
        }
        if !any {
            self.line(NOT_DOCUMENTED);
        }
    }

    fn selections(&mut self, label: &str, list: &SelectionList) {
        self.bullets(label, list.iter().map(selection_text));
    }

    fn checklist(&mut self, list: &Checklist) {
        for entry in list.entries() {
            let mark = if entry.selected { 'x' } else { ' ' };
            self.line(&format!("- [{mark}] {}", entry.label));
            if let Some(desc) = &entry.description {
                self.line(&format!("  - {}", leading(desc)));
            }
        }
    }
}

fn selection_text(sel: &TermSelection) -> String {
    match sel {
        TermSelection::Canonical(term) => term.label.to_string(),
        TermSelection::Other(text) => format!("Other: {}", inline(text)),
    }
}

/// Single-line rendering of free text that starts a line or list item.
/// Line breaks become spaces.
fn leading(text: &str) -> String {
    escape_line(&text.split_whitespace().collect::<Vec<_>>().join(" "))
}

/// Like [`leading`] for text placed mid-line.
fn inline(text: &str) -> String {
    escape_inline(&text.split_whitespace().collect::<Vec<_>>().join(" "))
}

/// Escapes text placed at the start of a line. Block markers (`#`, `>`,
/// list bullets, ordered-list numbers, setext/thematic rules, table pipes)
/// get a backslash so the line stays a plain paragraph.
fn escape_line(line: &str) -> String {
    let mut out = String::with_capacity(line.len() + 2);
    let first = line.chars().next();
    let digits = line.bytes().take_while(u8::is_ascii_digit).count();
    let ordered = digits > 0 && matches!(line.as_bytes().get(digits), Some(b'.' | b')'));
    if matches!(first, Some('#' | '>' | '-' | '+' | '=' | '|' | '~')) {
        out.push('\\');
        out.push_str(&escape_inline(line));
    } else if ordered {
        out.push_str(&line[..digits]);
        out.push('\\');
        out.push_str(&escape_inline(&line[digits..]));
    } else {
        out.push_str(&escape_inline(line));
    }
    out
}

/// Escapes inline markup characters that would change how text renders.
fn escape_inline(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        if matches!(ch, '\\' | '`' | '*' | '_' | '[' | ']' | '<' | '>' | '&') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}
