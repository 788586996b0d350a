#=========================================================================
# step_witness.py
#=========================================================================
# A step profile v = 1 | 2 on the two halves of (0, 1).  Its symmetral is
# two stacked rectangles with perimeter 6.  Lifting the left rectangle by
# anything up to half the jump keeps the perimeter, so equality cases are
# not all vertical translates.

from fractions import Fraction as Q

from steinerkit import (PwAffineField, build_W, check_equality_case, decide_rigidity, interval_complex,
                        oracle_perimeter, perimeter_formula, steiner_symmetral, translate_over_partition)
from steinerkit.arith import fmt
from steinerkit.polyset import min_translate_symdiff

#-------------------------------------------------------------------------
# The profile and its symmetral
#-------------------------------------------------------------------------

cx = interval_complex([0, Q(1, 2), 1], ["L", "R"])
v = PwAffineField.build(cx, {"L": 1, "R": 2})
F = steiner_symmetral(v)

br = perimeter_formula("F", v)
print("formula:", fmt(br.ac_part), "+", fmt(br.jump_part), "+", fmt(br.boundary_zero_part), "=", fmt(br.total))
print("oracle: ", fmt(oracle_perimeter(F)))

#-------------------------------------------------------------------------
# Lift the left half by t and watch the perimeter
#-------------------------------------------------------------------------

for t in (Q(1, 4), Q(1, 2), Q(3, 4), Q(1)):
    E = translate_over_partition(v, {"L": "up", "R": "down"}, {"up": t, "down": 0})
    ok, _ = check_equality_case(E, v)
    print(f"t = {fmt(t):>4}   P(E) = {fmt(oracle_perimeter(E))}   equality case: {ok}")

#-------------------------------------------------------------------------
# What the decider says
#-------------------------------------------------------------------------

verdict = decide_rigidity(v)
w = verdict.witness
print(verdict.status, "via", verdict.theorem_path, "- epsilon", fmt(w.epsilon), "offset", fmt(w.t))
print("distance of the witness to every translate:", fmt(min_translate_symdiff(w.set, v)[1]))
