"""Dyck paths with coloured ascents: colour systems, bijections and exact counts."""

from .bijections import (
    fib_to_ls,
    ls_to_fib,
    phi,
    phi_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    schroeder_to_t,
    sigma,
    sigma_inv,
    t_to_schroeder,
    theta,
    theta_inv,
)
from .colours import (
    ColourSystem,
    ColouredDyckPath,
    colour_count,
    colours_of,
    count_coloured_bruteforce,
    enumerate_coloured,
    parse_coloured,
)
from .enumeration import (
    Series,
    binom,
    count_bounded,
    count_catalan_coloured,
    count_fibonacci,
    count_little_schroeder,
    count_schroeder_coloured,
    solve_master,
)
from .paths import (
    DyckPath,
    Family,
    LittleSchroederPath,
    PyramidTree,
    SchroederPath,
    TPath,
    ascents,
    complete_decompose,
    enumerate_family,
    fibonacci_touch_bits,
    parse_path,
    primary_decompose,
    recompose_complete,
)
from .structures import (
    Dissection,
    EvenPartition,
    NCOTree,
    NCTree,
    NonCrossingPartition,
    enumerate_structures,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ascents",
    "binom",
    "colour_count",
    "ColouredDyckPath",
    "colours_of",
    "ColourSystem",
    "complete_decompose",
    "count_bounded",
    "count_catalan_coloured",
    "count_coloured_bruteforce",
    "count_fibonacci",
    "count_little_schroeder",
    "count_schroeder_coloured",
    "Dissection",
    "DyckPath",
    "enumerate_coloured",
    "enumerate_family",
    "enumerate_structures",
    "EvenPartition",
    "Family",
    "fib_to_ls",
    "fibonacci_touch_bits",
    "LittleSchroederPath",
    "ls_to_fib",
    "NCOTree",
    "NCTree",
    "NonCrossingPartition",
    "parse_coloured",
    "parse_path",
    "phi",
    "phi_inv",
    "primary_decompose",
    "psi",
    "psi_inv",
    "PyramidTree",
    "recompose_complete",
    "rho",
    "rho_inv",
    "schroeder_to_t",
    "SchroederPath",
    "Series",
    "sigma",
    "sigma_inv",
    "solve_master",
    "t_to_schroeder",
    "theta",
    "theta_inv",
    "TPath",
    "validate",
]

