"""qgqec: quasi-cyclic / quasi-orthogonal quantum error-correcting codes,
two cross-validating Clifford simulators, and counts statistics."""

__version__ = "0.1.0"

from qgqec.cases import CaseId  # noqa: F401
