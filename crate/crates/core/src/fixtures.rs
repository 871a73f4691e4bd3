//! Built-in diagrams.
//!
//! Each `base/move` fixture is its base diagram with one local move applied,
//! so any oriented singquandle gives both the same number of colorings.

use crate::diagram::{parse_diagram, SingularDiagram};
use crate::error::{Error, Result};

pub struct FixtureInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub text: &'static str,
}

pub const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo {
        name: "fig7-hopf",
        description: "Hopf link with one positive and one singular crossing",
        text: "P 1 2 3 4\nS 4 3 1 2\n",
    },
    FixtureInfo {
        name: "fig7-hopf/omega1",
        description: "fig7-hopf with a positive kink on semiarc 3",
        text: "P 1 2 3 4\nS 4 3 5 2\nP 6 5 1 6\n",
    },
    FixtureInfo {
        name: "fig7-hopf/omega2",
        description: "fig7-hopf with a positive/negative clasp inserted",
        text: "P 1 2 3 4\nS 4 3 5 6\nP 5 6 7 8\nN 7 8 1 2\n",
    },
    FixtureInfo {
        name: "fig8-left",
        description: "singular Hopf link, negative classical crossing before the singular one",
        text: "N 1 2 3 4\nS 3 4 2 1\n",
    },
    FixtureInfo {
        name: "fig8-right",
        description: "singular Hopf link, positive classical crossing after the singular one",
        text: "S 1 2 3 4\nP 3 4 2 1\n",
    },
    FixtureInfo {
        name: "fig8-left/omega5a",
        description: "fig8-left with a clasp whose positive crossing slides past the singular point",
        text: "N 1 2 3 4\nP 3 4 5 6\nS 6 5 7 8\nN 8 7 2 1\n",
    },
    FixtureInfo {
        name: "fig8-right/omega1",
        description: "fig8-right with a negative kink on semiarc 3",
        text: "S 1 2 3 4\nN 5 3 6 5\nP 6 4 2 1\n",
    },
];

/// Pairs `(base, moved)` of diagrams that differ by one local move.
pub const EQUIVALENCE_PAIRS: &[(&str, &str)] = &[
    ("fig7-hopf", "fig7-hopf/omega1"),
    ("fig7-hopf", "fig7-hopf/omega2"),
    ("fig8-left", "fig8-left/omega5a"),
    ("fig8-right", "fig8-right/omega1"),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

pub fn fixture_info(name: &str) -> Result<&'static FixtureInfo> {
    FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| {
        Error::domain(format!(
            "unknown fixture `{name}`; available: {}",
            fixture_names().join(", ")
        ))
    })
}

pub fn fixture(name: &str) -> Result<SingularDiagram> {
    parse_diagram(fixture_info(name)?.text)
}
