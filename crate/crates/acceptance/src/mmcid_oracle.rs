//! Reference MMCID grammar as a positional character-class table.
//!
//! `DF-MC-YYYY-NNN`: 14 positions, each a literal or an ASCII digit, plus
//! the year bound. The same table drives both a direct string predicate and
//! a small automaton, so the implementation can be compared against every
//! string up to a given length by exploring state pairs instead of strings.

use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Lit(char),
    Digit,
}

const TABLE: [Class; 14] = [
    Class::Lit('D'),
    Class::Lit('F'),
    Class::Lit('-'),
    Class::Lit('M'),
    Class::Lit('C'),
    Class::Lit('-'),
    Class::Digit,
    Class::Digit,
    Class::Digit,
    Class::Digit,
    Class::Lit('-'),
    Class::Digit,
    Class::Digit,
    Class::Digit,
];
const YEAR: std::ops::Range<usize> = 6..10;
const MIN_YEAR: u32 = 1970;

impl Class {
    fn admits(self, ch: char) -> bool {
        match self {
            Class::Lit(c) => ch == c,
            Class::Digit => ch.is_ascii_digit(),
        }
    }
}

/// Direct predicate over a string.
pub fn accepts(s: &str) -> bool {
    let chars: Vec<char> = s.chars().collect();
    if chars.len() != TABLE.len() {
        return false;
    }
    if !chars.iter().zip(TABLE).all(|(&c, class)| class.admits(c)) {
        return false;
    }
    let year: String = chars[YEAR].iter().collect();
    year.parse::<u32>().is_ok_and(|y| y >= MIN_YEAR)
}

/// Automaton state: next table position and the year digits read so far,
/// or `None` once no continuation can match.
pub type OracleState = Option<(usize, u32)>;

pub const START: OracleState = Some((0, 0));

pub fn step(state: OracleState, ch: char) -> OracleState {
    let (pos, year) = state?;
    let class = *TABLE.get(pos)?;
    if !class.admits(ch) {
        return None;
    }
    let year = if YEAR.contains(&pos) {
        year * 10 + ch.to_digit(10).expect("digit class")
    } else {
        year
    };
    Some((pos + 1, year))
}

pub fn is_accepting(state: OracleState) -> bool {
    matches!(state, Some((pos, year)) if pos == TABLE.len() && year >= MIN_YEAR)
}

/// Result of comparing two automata over all strings up to a length.
#[derive(Debug)]
pub struct Exploration {
    /// Number of strings covered, `sum(|alphabet|^k)` for `k <= max_len`.
    pub strings_covered: u128,
    /// Distinct state pairs visited across all depths.
    pub pairs_visited: usize,
    /// Strings on which the two sides disagree (one witness per pair).
    pub disagreements: Vec<String>,
}

/// Explores the product of the oracle automaton and another automaton over
/// every string of length `0..=max_len` on `alphabet`. Each string reaches
/// exactly one state pair, so checking every reachable pair at every depth
/// checks every string.
pub fn explore<S, F, A>(
    alphabet: &[char],
    max_len: usize,
    start: S,
    step_impl: F,
    accept_impl: A,
) -> Exploration
where
    S: Copy + Eq + std::hash::Hash,
    F: Fn(S, char) -> S,
    A: Fn(S) -> bool,
{
    let mut frontier: HashMap<(S, OracleState), String> = HashMap::new();
    frontier.insert((start, START), String::new());
    let mut covered: u128 = 0;
    let mut visited = 0;
    let mut disagreements = Vec::new();
    for depth in 0..=max_len {
        covered += (alphabet.len() as u128).pow(depth as u32);
        visited += frontier.len();
        for (&(s, o), witness) in &frontier {
            if accept_impl(s) != is_accepting(o) {
                disagreements.push(witness.clone());
            }
        }
        if depth == max_len {
            break;
        }
        let mut next = HashMap::new();
        for ((s, o), witness) in frontier {
            for &ch in alphabet {
                next.entry((step_impl(s, ch), step(o, ch)))
                    .or_insert_with(|| {
                        let mut w = witness.clone();
                        w.push(ch);
                        w
                    });
            }
        }
        frontier = next;
    }
    Exploration {
        strings_covered: covered,
        pairs_visited: visited,
        disagreements,
    }
}

/// Calls `f` on every string of length `0..=max_len` over `alphabet`.
pub fn for_each_string(alphabet: &[char], max_len: usize, mut f: impl FnMut(&str)) {
    let mut buf = String::new();
    fn rec(alphabet: &[char], left: usize, buf: &mut String, f: &mut dyn FnMut(&str)) {
        f(buf);
        if left == 0 {
            return;
        }
        for &c in alphabet {
            buf.push(c);
            rec(alphabet, left - 1, buf, f);
            buf.pop();
        }
    }
    rec(alphabet, max_len, &mut buf, &mut f);
}
