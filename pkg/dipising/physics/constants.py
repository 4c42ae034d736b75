"""
Physical constants in SI units, taken from the CODATA set shipped with scipy.
"""

from scipy import constants

MU_0 = constants.mu_0  # N/A^2
HBAR = constants.hbar  # J s
MU_B = constants.physical_constants["Bohr magneton"][0]  # J/T
