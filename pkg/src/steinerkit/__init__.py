"""Perimeter formulas for Steiner symmetrals of piecewise-affine slice
lengths, an independent polyhedral perimeter oracle, and rigidity deciders
for the equality cases of Steiner's perimeter inequality."""

from .arith import DOUBLE, RATIONAL, fmt
from .complex import BaseCellComplex, Cell, ComplexError, Facet, build_complex, interval_complex, polygon_complex
from .connectivity import essentially_disconnects, is_indecomposable_F
from .field import (AffinePiece, FacetTrace, FieldError, PwAffineField, classify_facets, facet_traces,
                    positive_support, validate_slice_length)
from .gallery import gallery
from .oracle import oracle_perimeter
from .perimeter import PerimeterBreakdown, Region, coarea_check, perimeter_formula, slice_inequality_check
from .polyset import (PolyVerticalSet, build_W, min_translate_symdiff, prop14_construct, slice_and_barycenter,
                      steiner_symmetral, translate_over_partition, volume)
from .rigidity import (RigidityVerdict, Witness, check_equality_case, construct_witness, decide_rigidity,
                       mismatched_stairway_check)
from .scene import Scene, SceneError

__version__ = "0.1.0"
