#=========================================================================
# cantor_staircase.py
#=========================================================================
# v = distance to the level-k Cantor set on the removed intervals; the
# barycenter is the Cantor staircase, constant on each removed interval.
# Its jumps sit where v vanishes, so the set is an equality case even
# though, from depth 2 on, it is far from every translate of the symmetral.

from steinerkit import build_W, check_equality_case, gallery, oracle_perimeter, steiner_symmetral
from steinerkit.arith import fmt
from steinerkit.polyset import min_translate_symdiff
from steinerkit.svg import profile_svg

for depth in (1, 2, 3, 4):
    e = gallery("cantor", depth)
    E = build_W(e.v, e.b)
    ok, _ = check_equality_case(E, e.v)
    t, gap = min_translate_symdiff(E, e.v)
    print(f"depth {depth}: {len(e.v.complex.cells):2d} cells, equality {ok}, "
          f"P = {fmt(oracle_perimeter(E))} vs {fmt(oracle_perimeter(steiner_symmetral(e.v)))}, "
          f"distance to translates {fmt(gap)}")

#-------------------------------------------------------------------------
# Figure
#-------------------------------------------------------------------------

with open("cantor_staircase.svg", "w") as fh:
    fh.write(profile_svg(e.v, e.b, "Cantor staircase, depth 4"))
print("wrote cantor_staircase.svg")
