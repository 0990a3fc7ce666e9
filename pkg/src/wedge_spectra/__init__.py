"""Exact quantum mechanics of a particle in a spherical wedge.

A spherical wedge is the region 0 <= r <= R, 0 <= theta <= pi,
0 <= phi <= Phi with Dirichlet walls. Its eigenstates are products of a
radial spherical Bessel function of real order nu, a polar Ferrers
function with nu - mu a non-negative integer, and an azimuthal standing
wave with mu = n_phi pi / Phi.
"""

from .hydrogen import HydrogenLevel, degeneracy_scan, periodic_recovery, standard_energy, wedge_energy
from .observables import AngularMomentumStats, lz_stats_analytic, lz_stats_numeric, standing_wave_decomposition
from .quadrature import QuadratureResult, integrate
from .specfun import cyl_bessel_j, gegenbauer_c, gen_double_factorial, ln_gamma, sph_bessel_j, sph_bessel_y
from .wedge_model import (
    BoundaryMode,
    EnergyLevel,
    QuantumNumbers,
    WedgeGeometry,
    energy_physical,
    enumerate_levels,
    ground_state,
    mu_of,
    nu_of,
)
from .zeros import BesselZero, bessel_j_zero

__version__ = "0.1.0"
