"""Decategorified bordered sutured invariants, computed exactly.

Submodules:
    rings      exact coefficient arithmetic (Z, Z[H], cyclotomic components, Q[H])
    exterior   exterior algebras and graded maps between them
    diagram    combinatorial bordered sutured diagrams and their surgeries
    bsda       the generator-count invariant in its integer and weighted forms
    homology   presentation matrices and the sutured TQFT map
    alexander  Alexander functions and the bottom-row functor
    selftest   the twelve-check acceptance battery
    cli        command line front end
"""

__version__ = "0.1.0"
