"""Residue hyperstructures over finite and rule-based algebras, with exhaustive axiom checks."""

from .hyperstruct import HyperTable, check_hyperfield, check_hypergroup, check_hyperring, krasner, signs
from .quotient import krasner_quotient, m_hyperring
from .report import AxiomReport, Verdict

__all__ = ["AxiomReport", "HyperTable", "Verdict", "check_hyperfield", "check_hypergroup",
           "check_hyperring", "krasner", "krasner_quotient", "m_hyperring", "signs"]
__version__ = "0.1.0"
