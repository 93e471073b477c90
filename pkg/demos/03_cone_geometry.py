#!/usr/bin/env python3
"""The three shapes of the curve/nef cone pair.

NE(X) has three generators when a = 0 (the section G moves) or a >= d (the
other section's curve is not extremal), and four when 0 < a < d; dually, the
nef cone has three or four extremal rays.  The anticanonical class meets
every NE generator in degree >= 1, with -K.F = 1 forcing index 1.
"""

from fano4 import FamilyParams
from fano4.cones import anticanonical, ne_generators, nef_rays, pairing

CASES = [
    (FamilyParams(7, 0, 1), "a = 0"),
    (FamilyParams(7, 2, 5), "0 < a < d"),
    (FamilyParams(6, 2, 1), "a >= d"),
]

for params, shape in CASES:
    print(f"{params.label}  ({shape})")
    antiK = anticanonical(params)
    print(f"  -K = ({', '.join(str(c) for c in antiK.coords)}) over "
          f"(phi*H, Ghat, E)")
    generators = ne_generators(params)
    degrees = ", ".join(f"{C.kind.value}: {pairing(antiK, C)}"
                        for C in generators)
    print(f"  NE generators ({len(generators)}):  -K degrees  {degrees}")
    for ray in nef_rays(params):
        face = ", ".join(sorted(g.value for g in ray.vanishing_face))
        print(f"  {ray.label.value} = {ray.name:14s} kills {{{face}}}  "
              f"[{ray.contraction}]")
    print()
