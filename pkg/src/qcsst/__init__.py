"""CSS and CSS-T quantum codes from classical linear codes over GF(q).

Construction and validation of nested-pair quantum codes, CSS-T
certification with brute-force cross-checks, exact counting and Monte Carlo
density experiments, the Hermitian-curve CSS-T family, and a dense
state-vector oracle for tiny instances.
"""

from ._kernels import BACKEND as kernel_backend
from .census import (ball_volume, density_lower_bound, estimate_pair_density,
                     estimate_weightword_density, extension_bound,
                     gaussian_binomial)
from .css import CssCode, correction_capability, css_equals, css_report, make_css
from .csst import (BoundReport, CsstReport, build_remark_csst,
                   check_rate_distance_bounds, contains_self_dual,
                   contains_self_dual_bruteforce, is_csst, is_csst_definition,
                   is_even)
from .fqlinear import (EnumerationCapError, LinearCode, distance_at_least,
                       dual, enumerate_subspaces, full_space, load_code,
                       min_distance, puncture, rref, sample_code,
                       sample_subcode, save_code, shorten, zero_code)
from .galois import Field, field_from_order, make_field
from .hermitian import (HermitianCurve, build_curve, even_subcode,
                        hermitian_csst, one_point_code, rr_basis)
from .statevec import (StateVector, coset_ket, css_ket_cs, dft_gate, pauli_x,
                       pauli_z, verify_cs_steane_equivalence,
                       verify_pair_distinctness)

__version__ = "0.1.0"
