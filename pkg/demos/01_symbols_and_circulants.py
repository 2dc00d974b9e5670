"""Walk through the basic objects: truncations, circulants, symbols.

A periodic tridiagonal operator is described by three period sequences.
Wrapping s periods into a cyclic matrix gives a circulant-like matrix that
a discrete-Fourier-type unitary splits into p-by-p symbol blocks, one per
twist angle 2*pi*k/s.  This script builds everything for the period word
01 and shows the splitting numerically.
"""

import numpy as np

from numrange import (
    PeriodSpec,
    build_block_unitary,
    build_circulant,
    build_symbol,
    build_truncation,
    lift_eigenvector,
    phi_grid,
)

spec = PeriodSpec.from_word("01")
print("period word 01:  a =", spec.a.real, " b =", spec.b.real, " c =", spec.c.real)

print("\nleading 5x5 compression:")
print(build_truncation(spec, 5).real)

s = 4
cm = build_circulant(spec, s)
print(f"\ncirculant on {s} periods ({cm.shape[0]}x{cm.shape[0]}), corners wrap the bands")
print(cm.real)

u = build_block_unitary(spec, s)
conjugated = u.conj().T @ cm @ u
print("\nU* C U, rounded — note the 2x2 blocks down the diagonal:")
print(np.round(conjugated, 12))

for k, phi in enumerate(phi_grid(s)):
    block = conjugated[2 * k : 2 * k + 2, 2 * k : 2 * k + 2]
    defect = np.abs(block - build_symbol(spec, phi)).max()
    print(f"block {k}: phi = {phi:.4f}, max deviation from symbol = {defect:.2e}")

# a symbol eigenvector lifts to a circulant eigenvector with phase twists
phi = phi_grid(s)[1]
values, vectors = np.linalg.eig(build_symbol(spec, phi))
lam, v = values[0], vectors[:, 0]
lifted = lift_eigenvector(v, phi, s)
residual = np.linalg.norm(cm @ lifted - lam * lifted)
print(f"\nlifted eigenvector residual for lambda = {lam:.4f}: {residual:.2e}")
