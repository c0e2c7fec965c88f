"""Solvability of a x^2 + b^(2l) = 4 y^n: decisions, families and searches."""

from .arith import PrimePower, as_square, factor_bounded, isqrt, odd_prime_power, radical
from .classnum import SPECIAL_SET, class_number, tally_class_numbers
from .families import FamilyId, generate, is_member
from .pell import PellForm, fundamental_solution, next_solution, odd_solutions
from .search import SolutionTuple, brute_force, published_corpus, verify_corpus
from .solver import ProblemInstance, classify_small_n, condition_report, solve, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "PrimePower",
    "as_square",
    "factor_bounded",
    "isqrt",
    "odd_prime_power",
    "radical",
    "SPECIAL_SET",
    "class_number",
    "tally_class_numbers",
    "FamilyId",
    "generate",
    "is_member",
    "PellForm",
    "fundamental_solution",
    "next_solution",
    "odd_solutions",
    "SolutionTuple",
    "brute_force",
    "published_corpus",
    "verify_corpus",
    "ProblemInstance",
    "classify_small_n",
    "condition_report",
    "solve",
    "verify_certificate",
]
