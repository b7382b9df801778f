"""Exact character theory for finite solvable groups.

Subpackages build on each other in dependency order: cyclotomic (exact
field arithmetic), pcgroup (polycyclic presentations and structure),
chartab (exact character tables), clifford (normal-subgroup character
theory), reduce (linear reductions and limits of character triples),
symplectic (quotient forms and their classification), coprime
(Glauberman correspondence and coprime-action tooling), harness
(theorem-level verification over the shipped corpus).
"""

__version__ = "0.1.0"
