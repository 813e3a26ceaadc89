//! Ties-permitted ordinal rankings in three equivalent forms.
//!
//! A ranking that allows ties is an ordered partition of the alternatives
//! into tie-groups ([`Ranking`]). Two other encodings carry exactly the same
//! information: the preference map ([`PreferenceMap`]), which gives each
//! alternative its block of possible ranking positions, and the Cook-Seiford
//! vector ([`CookSeifordVector`]), which gives each alternative the middle
//! position of its block. This crate implements the conversions among the
//! three, validators that accept precisely the well-formed inputs, and a
//! brute-force enumerator that proves the conversions are mutually inverse
//! on small rosters.
//!
//! Positions are exact: a Cook-Seiford value is always an integer or a
//! half-integer, stored as a doubled integer ([`Position`]), so equality and
//! the conversion laws hold bit for bit, never up to a float tolerance.
//!
//! ```
//! use prefmap::io::parse_ranking;
//! use prefmap::{ranking_to_cs, ranking_to_pm};
//!
//! let ranking = parse_ranking("x1 > x2 ~ x3 > x4", None)?;
//! let pm = ranking_to_pm(&ranking);
//! assert_eq!(pm.entry(1).unwrap().to_string(), "{2,3}");
//!
//! let cs = ranking_to_cs(&ranking);
//! assert_eq!(cs.value(1).unwrap().to_string(), "2.5");
//! # Ok::<(), prefmap::io::ParseError>(())
//! ```

pub mod convert;
pub mod cs;
pub mod io;
pub mod oracle;
pub mod pm;
pub mod position;
pub mod ranking;
pub mod roster;
pub mod validate;

pub use convert::{
    cs_decomposition, cs_to_pm, cs_to_ranking, pm_to_cs, pm_to_ranking, ranking_to_cs,
    ranking_to_pm, CsRow,
};
pub use cs::CookSeifordVector;
pub use oracle::{
    check_bijection, check_bijection_unbounded, enumerate_weak_orders,
    enumerate_weak_orders_unbounded, BijectionReport, OracleError, WeakOrderIterator,
    MAX_ENUMERATION_N,
};
pub use pm::{PositionBlock, PreferenceMap};
pub use position::{ParsePositionError, Position};
pub use ranking::{DominanceProfile, Ranking, RankingError};
pub use roster::{AlternativeId, Roster, RosterError};
pub use validate::{
    validate_cs, validate_pm, ValidationReport, Violation, ViolationCode, MAX_VIOLATIONS,
};
