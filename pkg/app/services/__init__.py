"""Service layer: one sub-package per stage of the degeneration pipeline."""
