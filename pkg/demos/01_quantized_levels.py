"""
Quantized energies and frequencies
==================================

With a Coulomb term the terminating-series condition fixes the oscillator
frequency along with the energy. This script walks through the lowest levels
of an electron-like particle (m0 = |e| = 1) bound by a charge Z = 0.1.
"""

from dirac_abc import QuantumNumbers, SystemParams, solve_first_excited, solve_general, solve_ground_state

params = SystemParams(m0=1.0, e_abs=1.0, Z=0.1)

# n = 1 has a closed form; both energy branches come back, positive first
for state in solve_ground_state(params, m_l=0.5, s=1):
    print(f"n=1 branch={state.qn.branch:+d}  E={state.energy:+.12f}  omega={state.omega:.12f}")

# n = 2 as well; note how much smaller the allowed frequency is
plus = solve_first_excited(params, m_l=0.5, s=1, branch=1)[0]
print(f"n=2 E={plus.energy:.12f}  omega={plus.omega:.12f}")

# From n = 3 on the truncation polynomial has several roots, each a distinct
# (E, omega) pair. solve_general returns them sorted by frequency and logs the
# roots it discarded.
result = solve_general(params, QuantumNumbers(n=3, m_l=0.5, s=-1))
for state in result:
    print(f"n=3 A_bar={state.a_bar_root:.6f}  E={state.energy:.10f}  omega={state.omega:.10f}")
print("discarded:", result.diagnostics)

# Without the Coulomb term nothing quantizes omega: every level collapses to
# the rest energy at omega = omega_c / 2.
free = solve_ground_state(SystemParams(m0=1.0, e_abs=1.0, Z=0.0, B=1.0), 0.5, 1)
print("Z=0:", [(s.energy, s.omega) for s in free])
