"""Two-bridge knots, knot-surgery Seiberg-Witten polynomials and dihedral covering links."""

from .contfrac import TwoBridgeFraction, cf_value, even_cf, even_rep
from .dihedral import hosokawa_at_one, linking_matrix, linking_numbers
from .exact import Factorization, det_exact, factorize
from .laurent import LaurentPoly, MultiLaurentPoly
from .pipeline import Certificate, Verdict, distinguish, search
from .sw import basic_classes, fibered_surgery_sw, knot_surgery_sw
from .twobridge import alexander, enumerate_knots, equivalent, is_fibered

__version__ = "0.1.0"
