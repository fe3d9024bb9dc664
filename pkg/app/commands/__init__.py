"""Command modules of the quartic degeneration CLI."""

from app.commands import (
    design_f,
    graft,
    obstruction,
    section,
    singular_locus,
    verify,
)

COMMANDS = {
    module.NAME: module
    for module in (design_f, singular_locus, section, obstruction, graft, verify)
}

__all__ = [
    "COMMANDS",
    "design_f",
    "graft",
    "obstruction",
    "section",
    "singular_locus",
    "verify",
]
