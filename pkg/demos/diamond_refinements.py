#=========================================================================
# diamond_refinements.py
#=========================================================================
# The diamond |x| + |y| < 1 with nested corner diamonds whose values move
# by -/+ 1/2, 1/4, 1/8, ...  Every finite truncation is non-rigid, but the
# jump bound on the cheapest cut halves at each level: in the limit no
# single translated piece survives, while the set with sections [0, v]
# stays an equality case at every depth.

from steinerkit import build_W, check_equality_case, decide_rigidity, gallery, oracle_perimeter, steiner_symmetral
from steinerkit.arith import fmt
from steinerkit.polyset import min_translate_symdiff

print(f"{'depth':>5} {'cells':>5} {'epsilon':>8} {'P(F[v])':>14} {'P([0,v])':>14}  equality")
for depth in (1, 2, 3):
    e = gallery("example11", depth)
    v, b = e.v, e.b
    verdict = decide_rigidity(v)
    E = build_W(v, b)
    ok, _ = check_equality_case(E, v)
    print(f"{depth:>5} {len(v.complex.cells):>5} {fmt(verdict.witness.epsilon):>8} "
          f"{fmt(oracle_perimeter(steiner_symmetral(v))):>14} {fmt(oracle_perimeter(E)):>14}  {ok}")
    print(f"      distance of [0, v] to the translates of F[v]: {fmt(min_translate_symdiff(E, v)[1])}")
