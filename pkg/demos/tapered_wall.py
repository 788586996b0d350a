#=========================================================================
# tapered_wall.py
#=========================================================================
# On the unit square, v = 1 left of z1 = 1/2 and v = z2 on the right.  The
# symmetral has a vertical wall along the middle facet, but the jump there
# shrinks to zero at the top.  Any vertical offset of one half breaks the
# condition 2[b] <= [v] near that end, so the only equality cases are
# translates.

from fractions import Fraction as Q

from steinerkit import decide_rigidity, gallery, oracle_perimeter, steiner_symmetral
from steinerkit.arith import fmt
from steinerkit.field import classify_facets
from steinerkit.rigidity import crossable_facets, offset_grid_step, search_equality_cases

entry = gallery("casetta")
v = entry.v
cx = v.complex

#-------------------------------------------------------------------------
# The middle facet
#-------------------------------------------------------------------------

mid = cx.interior_facets()[0]
fc = classify_facets(v)[mid.index]
print("middle facet", [tuple(map(fmt, p)) for p in mid.endpoints], "length", fmt(mid.measure))
print("ess-inf of the jump where the lower limit is positive:", fmt(fc.jump_essinf))
print("crossable:", crossable_facets(v)[mid.index])

#-------------------------------------------------------------------------
# Decision and brute-force confirmation
#-------------------------------------------------------------------------

print("verdict:", decide_rigidity(v, "polyhedral").status)
print("P(F[v]) =", fmt(oracle_perimeter(steiner_symmetral(v))))
step = offset_grid_step(v)
print(f"searching both cuts x offsets k*{fmt(step)}, |k| <= 32 ...")
print("non-translate equality cases found:", len(search_equality_cases(v)))
