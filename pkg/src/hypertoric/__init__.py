"""Presentations and Poincare polynomials of twisted-sector cohomology rings built from weighted hyperplane arrangements."""

from .arrangement import ArrangementSpec, compute_weights, intersection_empty, is_simple, random_simple_affinization, validate
from .groebner import PoincarePolynomial, buchberger, groebner_of, poincare, standard_monomials
from .oracle import graded_dimension, oracle_poincare
from .presentation import RingPresentation, build_presentation, ideal_I, ideal_J, ideal_K
from .stabilizers import StabilizerGroup, TorusElement, abc_sets, enumerate_bases, full_group, gamma_S

__version__ = "0.1.0"


def orbifold_poincare(spec: ArrangementSpec) -> PoincarePolynomial:
    """Orbifold Poincare polynomial of a simple arrangement."""
    return poincare(groebner_of(build_presentation(spec)))
