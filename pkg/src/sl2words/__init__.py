"""Word maps on SL(2): trace polynomials, Markoff surfaces, fibre conics and solvers."""

from .brauer import (LocalInvariant, QuaternionClass, evaluate_class_at_point, hilbert_symbol,
                     markoff_brauer, quaternion_invariants, square_class)
from .conic import conic_find_point, conic_solvable_q, fiber_at, fiber_point_to_matrices
from .fields import GF, QQ, parse_field
from .matrices import Mat2, classify_element, companion, conjugating_matrix, evaluate_word, parse_matrix
from .oracle import brute_force_count, enumerate_sl2, verify_equivalences
from .polynomial import MARKOFF_F, TracePoly, poly_divide_exact, poly_eval
from .solver import (SolutionPair, solve_commutator_negative, solve_commutator_unipotent,
                     solve_minus_identity, solve_word_equation)
from .surfaces import (enumerate_points_fp, markoff, search_points_fp, search_points_q,
                       trace_surface)
from .trace import commutator_factor, trace_polynomial
from .words import COMMUTATOR, Word, commutator, parse_word, random_word

__version__ = "0.1.0"
