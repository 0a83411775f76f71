"""Exact involution models for S_n, its Hecke algebra, and B_n.

The package constructs the signed-conjugation representation on the span of
involutions, its q-deformation, and the hyperoctahedral analogue, and checks
the defining relations and character identities with exact arithmetic.
"""

__version__ = "0.1.0"
