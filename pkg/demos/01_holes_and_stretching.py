"""Holes, marked edges, and cycle stretching, end to end on the fixtures.

A hole is a chordless cycle of length at least four.  In a claw-free graph
of minimum degree three with no 4-cycle, a smallest hole has even length s
and every other edge of it sits in exactly one triangle whose apex lies off
the hole.  Detouring through t of those apexes stretches the hole to length
s + t, which is enough to reach a length of the form 2^k or 3 * 2^k.

Run:  python demos/01_holes_and_stretching.py
"""

from clawcycles import (
    StructureViolation,
    find_c4,
    find_claw,
    girth,
    mark_hole,
    power_of_two_cycle,
    smallest_hole,
    stretched_cycle,
    triangulation_status,
    two_power_or_triple_cycle,
)
from clawcycles.fixtures import standard_fixtures

fixtures = standard_fixtures()

print("=== Recognizer tour ===")
for name, g in fixtures.items():
    claw = find_claw(g)
    c4 = find_c4(g)
    print(
        f"{name:>10}: n={g.n:<3} min_deg={g.min_degree()} girth={girth(g)} "
        f"claw_free={claw is None!s:<5} c4_free={c4 is None}"
    )

print("\n=== Smallest holes ===")
for name in ("K4", "C5", "PETERSEN", "TRUNC_TET", "L_PETERSEN"):
    hole = smallest_hole(fixtures[name])
    print(f"{name:>10}: {hole.vertices if hole else 'no hole (every long cycle has a chord)'}")

print("\n=== Marking and stretching the truncated tetrahedron ===")
tt = fixtures["TRUNC_TET"]
hole = smallest_hole(tt)
print(f"smallest hole, length {hole.length}: {hole.vertices}")
marked = mark_hole(tt, hole)
for (x, y), z in zip(marked.marked, marked.detours):
    status = triangulation_status(tt, (x, y))
    print(f"  marked edge ({x},{y}) -> unique triangle apex {z} (count={status.triangle_count})")
for extra in range(len(marked.marked) + 1):
    cyc = stretched_cycle(marked, extra)
    print(f"  {extra} detours -> cycle of length {cyc.length}: {cyc.vertices}")

print("\n=== Witnesses with lengths 2^k or 3*2^k ===")
for name in ("PRISM", "TRUNC_TET", "CUBE"):
    w = two_power_or_triple_cycle(fixtures[name])
    kind = "2^k" if w.form.value == "pow2" else "3*2^k"
    print(f"{name:>10}: length {w.length} = {kind} with k={w.k}: {w.cycle.vertices}")

print("\n=== Verification, not trust ===")
lp = fixtures["L_PETERSEN"]
print(f"L_PETERSEN is 4-regular, claw-free, c4_free={find_c4(lp) is None},")
print(f"but its smallest hole has odd length {smallest_hole(lp).length},")
print("so the alternating marking cannot exist and the construction reports it:")
try:
    two_power_or_triple_cycle(lp)
except StructureViolation as exc:
    print(f"  StructureViolation: {exc}")
hit = power_of_two_cycle(lp)
print(f"(the graph still has a power-of-two cycle, found by search: length {hit[0].length})")
