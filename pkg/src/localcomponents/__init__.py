"""Exact computation of local components of modular newforms.

Given a cuspidal newform f of level N*p^r by its Hecke eigenvalues, this
package classifies the local component at p as principal series, special,
or supercuspidal, and in the supercuspidal case reconstructs the cuspidal
type as explicit matrices over the eigenvalue field, together with its
character table and (for odd p) the admissible pair.
"""

__version__ = "0.1.0"
