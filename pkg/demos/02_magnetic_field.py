"""
The magnetic field only shifts the frequency
============================================

The homogeneous field enters through omega_bar = omega - omega_c / 2, so the
quantized energy is the same for every B while the allowed oscillator
frequency moves up by exactly half the cyclotron frequency.
"""

import numpy as np

from dirac_abc import QuantumNumbers, SystemParams, cyclotron_frequency, energy_from_frequency, solve_ground_state

for B in np.linspace(0.0, 5.0, 6):
    params = SystemParams(m0=1.0, e_abs=1.0, Z=0.1, B=float(B))
    state = solve_ground_state(params, m_l=0.5, s=1, branch=1)[0]
    wc = cyclotron_frequency(params)
    print(f"B={B:3.1f}  E={state.energy:.15f}  omega={state.omega:.6f}  omega-omega_c/2={state.omega - wc / 2:.15f}")

# At resonance (omega = omega_c / 2) any level sits at the rest energy.
print(energy_from_frequency(0.0, QuantumNumbers(5, 2.5, -1, -1), SystemParams(m0=1.0, e_abs=1.0, Z=0.1)))
