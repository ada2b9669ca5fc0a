"""Physical constants (SI, CODATA 2018) used by the parameter mapping.

Internally the simulator sets hbar = 1 and measures every energy as an
angular frequency in rad/s; temperature enters only through KB_OVER_HBAR.
"""

HBAR = 1.054571817e-34  # J s
KB = 1.380649e-23  # J / K
BOHR_RADIUS = 5.29177e-11  # m

# Conversion used for thermal occupations: (k_B / hbar) in rad s^-1 K^-1.
KB_OVER_HBAR = KB / HBAR  # = 1.30920e11

# Atom masses, kg.
MASS_RB87 = 1.4432e-25
MASS_K40 = 6.6361e-26
