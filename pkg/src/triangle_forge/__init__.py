"""Exact number triangles generated by matrices, Motzkin/Dyck path weights,
and the tangent, Bernoulli, secant, Entringer and zeta(2n) values they produce."""

from .constructions import (
    SequenceId,
    TriangleId,
    bernoulli,
    bernoulli_via_paths,
    entringer,
    euler_number,
    floor_extract_tangent,
    named_triangle,
    secant_number,
    sequence,
    tangent_number,
    tangent_polynomial,
    tangent_via_paths,
    thm48_b,
    zeta_even_coefficient,
)
from .engine import (
    Triangle,
    WeightRecursion,
    dyck_weight_triangle,
    generate_triangle,
    generate_triangle_seq,
    motzkin_weight_triangle,
)
from .numerics import POLYNOMIAL, RATIONAL, Polynomial, poly_eval, rational_make
from .nu_rho import nu, rho, weight_f
from .paths import (
    catalan_number,
    count_zeros,
    d_count,
    enumerate_dyck,
    enumerate_motzkin,
    is_motzkin,
    motzkin_number,
    suffix_class,
    suffix_counts,
)
from .perm_oracle import beta_bruteforce, entringer_bruteforce, is_alternating, nu_bruteforce, phi
from .verification import exact_xi_integral, mc_xi_integral, verify_suite

__version__ = "0.1.0"

__all__ = [
    "bernoulli",
    "bernoulli_via_paths",
    "beta_bruteforce",
    "catalan_number",
    "count_zeros",
    "d_count",
    "dyck_weight_triangle",
    "entringer",
    "entringer_bruteforce",
    "enumerate_dyck",
    "enumerate_motzkin",
    "euler_number",
    "exact_xi_integral",
    "floor_extract_tangent",
    "generate_triangle",
    "generate_triangle_seq",
    "is_alternating",
    "is_motzkin",
    "mc_xi_integral",
    "motzkin_number",
    "motzkin_weight_triangle",
    "named_triangle",
    "nu",
    "nu_bruteforce",
    "phi",
    "poly_eval",
    "POLYNOMIAL",
    "Polynomial",
    "RATIONAL",
    "rational_make",
    "rho",
    "secant_number",
    "sequence",
    "SequenceId",
    "suffix_class",
    "suffix_counts",
    "tangent_number",
    "tangent_polynomial",
    "tangent_via_paths",
    "thm48_b",
    "Triangle",
    "TriangleId",
    "verify_suite",
    "weight_f",
    "WeightRecursion",
    "zeta_even_coefficient",
]

