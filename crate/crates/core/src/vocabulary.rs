//! Controlled vocabularies and membership queries.
//!
//! Four vocabularies back the model: the collection-type vocabulary CLDType
//! (open: unknown terms are accepted as merely unknown, never rejected) and
//! the three closed mdm encoding schemes MDMCollType, MDMFunctionType, and
//! MDMPeriodicity. Contents are compiled in and immutable, so the tables are
//! safe for unrestricted concurrent reads.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::error::{Error, Result};

/// Identifier of a built-in vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VocabId {
    CldType,
    MdmCollType,
    MdmFunctionType,
    MdmPeriodicity,
}

impl VocabId {
    pub const ALL: [VocabId; 4] = [
        VocabId::CldType,
        VocabId::MdmCollType,
        VocabId::MdmFunctionType,
        VocabId::MdmPeriodicity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VocabId::CldType => "CLDType",
            VocabId::MdmCollType => "MDMCollType",
            VocabId::MdmFunctionType => "MDMFunctionType",
            VocabId::MdmPeriodicity => "MDMPeriodicity",
        }
    }
}

impl fmt::Display for VocabId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VocabId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VocabId::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::VocabularyNotFound(s.to_string()))
    }
}

/// One controlled term: a local name token plus display text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub local: &'static str,
    pub label: &'static str,
    pub definition: &'static str,
}

/// A named set of controlled terms. `closed` vocabularies treat unknown
/// terms as violations; open ones only distinguish known from unknown.
#[derive(Debug)]
pub struct TermVocabulary {
    pub id: VocabId,
    pub closed: bool,
    terms: Vec<Term>,
}

impl TermVocabulary {
    fn new(id: VocabId, closed: bool, raw: &[(&'static str, &'static str, &'static str)]) -> Self {
        let terms: Vec<Term> = raw
            .iter()
            .map(|&(local, label, definition)| Term {
                local,
                label,
                definition,
            })
            .collect();
        for t in &terms {
            debug_assert!(valid_local(t.local), "bad term local {:?}", t.local);
        }
        debug_assert!(
            terms
                .iter()
                .map(|t| t.local)
                .collect::<std::collections::HashSet<_>>()
                .len()
                == terms.len(),
            "duplicate term in {id}"
        );
        TermVocabulary { id, closed, terms }
    }

    /// Terms in declaration order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn contains(&self, term: &str) -> bool {
        self.terms.iter().any(|t| t.local == term)
    }
}

fn valid_local(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric()),
        _ => false,
    }
}

static CLD_TYPE: LazyLock<TermVocabulary> = LazyLock::new(|| {
    TermVocabulary::new(
        VocabId::CldType,
        false,
        &[
            (
                "Catalogue",
                "Catalogue",
                "A collection of metadata records that describe the items of another collection.",
            ),
            (
                "CollectionImage",
                "Collection of images",
                "A collection whose items are images.",
            ),
            (
                "CollectionPhysicalObject",
                "Collection of physical objects",
                "A collection whose items are physical objects.",
            ),
        ],
    )
});

static MDM_COLL_TYPE: LazyLock<TermVocabulary> = LazyLock::new(|| {
    TermVocabulary::new(
        VocabId::MdmCollType,
        true,
        &[
            (
                "Legacy",
                "Legacy",
                "Records inherited from an earlier or external source.",
            ),
            (
                "Storage",
                "Storage",
                "Canonical records from which records for other purposes are derived.",
            ),
            (
                "Delivery",
                "Delivery",
                "Records serving a particular delivery system.",
            ),
        ],
    )
});

static MDM_FUNCTION_TYPE: LazyLock<TermVocabulary> = LazyLock::new(|| {
    TermVocabulary::new(
        VocabId::MdmFunctionType,
        true,
        &[
            ("Accrual", "Accrual", "Addition of new records to the catalog."),
            ("Deletion", "Deletion", "Removal of records from the catalog."),
            (
                "Modification",
                "Modification",
                "Change to the content of existing records.",
            ),
            (
                "Transformation",
                "Transformation",
                "Conversion of records into another structure or representation.",
            ),
            (
                "Reporting",
                "Reporting",
                "Production of summaries or statistics about the catalog.",
            ),
            (
                "Export",
                "Export",
                "Extraction of records for use outside the catalog.",
            ),
            (
                "Mapping",
                "Mapping",
                "Alignment of record fields with another metadata scheme.",
            ),
            (
                "Migration",
                "Migration",
                "Movement of records to a new platform or system.",
            ),
            (
                "Exposure",
                "Exposure",
                "Publication of records to external services or harvesters.",
            ),
            (
                "ActivationDeactivation",
                "Activation/deactivation",
                "Switching records or the catalog between active and inactive states.",
            ),
        ],
    )
});

static MDM_PERIODICITY: LazyLock<TermVocabulary> = LazyLock::new(|| {
    TermVocabulary::new(
        VocabId::MdmPeriodicity,
        true,
        &[
            ("Continuous", "Continuous", "Ongoing, with no discrete interval."),
            ("Daily", "Daily", "Every day."),
            ("Weekly", "Weekly", "Every week."),
            ("Biweekly", "Biweekly", "Every two weeks."),
            ("Monthly", "Monthly", "Every calendar month."),
            ("Quarterly", "Quarterly", "Every three calendar months."),
            ("Semiannual", "Semiannual", "Every six calendar months."),
            ("Annual", "Annual", "Every year."),
            ("Biennial", "Biennial", "Every two years."),
            ("Irregular", "Irregular", "At no predictable interval."),
        ],
    )
});

/// The built-in vocabulary for an id.
pub fn vocabulary(id: VocabId) -> &'static TermVocabulary {
    match id {
        VocabId::CldType => &CLD_TYPE,
        VocabId::MdmCollType => &MDM_COLL_TYPE,
        VocabId::MdmFunctionType => &MDM_FUNCTION_TYPE,
        VocabId::MdmPeriodicity => &MDM_PERIODICITY,
    }
}

/// Looks a vocabulary up by its string identifier.
pub fn vocabulary_named(id: &str) -> Result<&'static TermVocabulary> {
    Ok(vocabulary(id.parse()?))
}

/// True iff `term` is in the named vocabulary's term list. For open
/// vocabularies this distinguishes known from unknown terms; it is not a
/// rejection test.
pub fn is_member(vocab_id: &str, term: &str) -> Result<bool> {
    Ok(vocabulary_named(vocab_id)?.contains(term))
}

/// The named vocabulary's terms in declaration order.
pub fn terms_of(vocab_id: &str) -> Result<&'static [Term]> {
    Ok(vocabulary_named(vocab_id)?.terms())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn function_type_has_the_ten_functions() {
        let terms = terms_of("MDMFunctionType").unwrap();
        let locals: Vec<&str> = terms.iter().map(|t| t.local).collect();
        assert_eq!(
            locals,
            [
                "Accrual",
                "Deletion",
                "Modification",
                "Transformation",
                "Reporting",
                "Export",
                "Mapping",
                "Migration",
                "Exposure",
                "ActivationDeactivation",
            ]
        );
    }

    #[test]
    fn coll_type_has_three_terms() {
        let locals: Vec<&str> = terms_of("MDMCollType")
            .unwrap()
            .iter()
            .map(|t| t.local)
            .collect();
        assert_eq!(locals, ["Legacy", "Storage", "Delivery"]);
    }

    #[test]
    fn periodicity_has_ten_terms() {
        assert_eq!(terms_of("MDMPeriodicity").unwrap().len(), 10);
    }

    #[test]
    fn membership_examples() {
        assert!(is_member("MDMCollType", "Storage").unwrap());
        assert!(is_member("MDMFunctionType", "Accrual").unwrap());
        assert!(!is_member("MDMFunctionType", "").unwrap());
    }

    #[test]
    fn unknown_vocabulary_errors() {
        let err = is_member("NoSuchVocab", "x").unwrap_err();
        assert!(matches!(err, Error::VocabularyNotFound(_)), "{err}");
    }

    #[test]
    fn every_listed_term_is_a_member() {
        for id in VocabId::ALL {
            let vocab = vocabulary(id);
            for t in vocab.terms() {
                assert!(vocab.contains(t.local), "{id} {}", t.local);
            }
            assert!(!vocab.contains("DefinitelyNotATerm"));
        }
    }

    #[test]
    fn open_closed_flags() {
        assert!(!vocabulary(VocabId::CldType).closed);
        assert!(vocabulary(VocabId::MdmCollType).closed);
        assert!(vocabulary(VocabId::MdmFunctionType).closed);
        assert!(vocabulary(VocabId::MdmPeriodicity).closed);
    }

    #[test]
    fn terms_are_stable_across_calls() {
        let a: Vec<&str> = terms_of("MDMPeriodicity").unwrap().iter().map(|t| t.local).collect();
        let b: Vec<&str> = terms_of("MDMPeriodicity").unwrap().iter().map(|t| t.local).collect();
        assert_eq!(a, b);
    }
}
