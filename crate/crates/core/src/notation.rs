//! Note names such as `C4`, `C#4`, `Bb3` and their pitch numbers (C4 = 0).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::melody::Pitch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    C,
    D,
    E,
    F,
    G,
    A,
    B,
}

impl Letter {
    pub fn offset(self) -> i64 {
        match self {
            Letter::C => 0,
            Letter::D => 2,
            Letter::E => 4,
            Letter::F => 5,
            Letter::G => 7,
            Letter::A => 9,
            Letter::B => 11,
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            'A' => Letter::A,
            'B' => Letter::B,
            _ => return None,
        })
    }

    fn as_char(self) -> char {
        match self {
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
            Letter::A => 'A',
            Letter::B => 'B',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Accidental {
    Sharp,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NoteName {
    pub letter: Letter,
    pub accidental: Option<Accidental>,
    pub octave: i64,
}

impl NoteName {
    pub fn pitch(&self) -> Pitch {
        let acc = match self.accidental {
            Some(Accidental::Sharp) => 1,
            Some(Accidental::Flat) => -1,
            None => 0,
        };
        12 * (self.octave - 4) + self.letter.offset() + acc
    }

    /// Spelling of a pitch, using sharps for the black keys.
    pub fn from_pitch(p: Pitch) -> NoteName {
        let octave = 4 + p.div_euclid(12);
        let (letter, accidental) = match p.rem_euclid(12) {
            0 => (Letter::C, None),
            1 => (Letter::C, Some(Accidental::Sharp)),
            2 => (Letter::D, None),
            3 => (Letter::D, Some(Accidental::Sharp)),
            4 => (Letter::E, None),
            5 => (Letter::F, None),
            6 => (Letter::F, Some(Accidental::Sharp)),
            7 => (Letter::G, None),
            8 => (Letter::G, Some(Accidental::Sharp)),
            9 => (Letter::A, None),
            10 => (Letter::A, Some(Accidental::Sharp)),
            _ => (Letter::B, None),
        };
        NoteName {
            letter,
            accidental,
            octave,
        }
    }

    /// Letter and accidental without the octave, e.g. `F#`.
    pub fn pitch_class(&self) -> String {
        let mut s = self.letter.as_char().to_string();
        match self.accidental {
            Some(Accidental::Sharp) => s.push('#'),
            Some(Accidental::Flat) => s.push('b'),
            None => {}
        }
        s
    }
}

impl fmt::Display for NoteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.pitch_class(), self.octave)
    }
}

impl FromStr for NoteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |position: usize, reason: &'static str| Error::NoteParse {
            input: s.to_string(),
            position,
            reason,
        };
        let mut chars = s.chars().peekable();
        let letter = match chars.next() {
            Some(c) => Letter::from_char(c).ok_or_else(|| err(0, "expected a letter A-G"))?,
            None => return Err(err(0, "empty note name")),
        };
        let accidental = match chars.peek() {
            Some('#') | Some('♯') => Some(Accidental::Sharp),
            Some('b') | Some('♭') => Some(Accidental::Flat),
            _ => None,
        };
        if accidental.is_some() {
            chars.next();
        }
        let octave_at = 1 + usize::from(accidental.is_some());
        let rest: String = chars.collect();
        if rest.is_empty() {
            return Err(err(octave_at, "missing octave"));
        }
        let digits = rest.strip_prefix(['-', '+']).unwrap_or(&rest);
        if let Some(bad) = digits.chars().position(|c| !c.is_ascii_digit()) {
            let offset = rest.chars().count() - digits.chars().count();
            return Err(err(octave_at + offset + bad, "expected an octave number"));
        }
        if digits.is_empty() {
            return Err(err(octave_at + 1, "expected an octave number"));
        }
        let octave = rest
            .parse::<i64>()
            .map_err(|_| err(octave_at, "octave out of range"))?;
        Ok(NoteName {
            letter,
            accidental,
            octave,
        })
    }
}

pub fn parse_note(s: &str) -> Result<Pitch, Error> {
    Ok(s.trim().parse::<NoteName>()?.pitch())
}

pub fn render_note(p: Pitch) -> String {
    NoteName::from_pitch(p).to_string()
}
