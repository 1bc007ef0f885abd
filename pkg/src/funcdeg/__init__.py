"""Discrete difference calculus on finitely generated commutative groups.

Functional degrees of maps between finite commutative groups, their
binomial-basis (polyfract) representations, and the closed-form bounds on
finite degrees, each cross-checked against brute force.
"""

from ._kernels import BACKEND
from .bounds import (
    MaxDegreeVerdict,
    PGroupSpec,
    c_hat,
    c_hat_via_reduction,
    lagrange_coefficients,
    max_degree_cyclic,
    max_degree_general,
    max_degree_p_group,
    max_degree_p_to_product,
    nilpotency_degree,
)
from .calculus import (
    INFINITE,
    Classification,
    DegreeReport,
    FunctionTable,
    classify,
    degree_report,
    delta_g,
    delta_i,
    fdeg,
    fdeg_wrt,
    format_table,
    lagrange,
    parse_table,
    pdeg,
    section,
)
from .errors import (
    FuncDegError,
    GroupMismatch,
    InternalInconsistency,
    InvalidInput,
    NoRepresentation,
    Unsupported,
)
from .groupring import GroupRingElement, multiply, nilpotency_oracle, quotient_power
from .groups import (
    Group,
    GroupElement,
    PrimaryDecomposition,
    enumerate_group,
    make_group,
    parse_group,
    primary_decomposition,
    project_to_component,
    unit_vector,
)
from .polyfract import (
    PeriodicPolyfract,
    Polyfract,
    delta_i_symbolic,
    deg,
    deg_i,
    evaluate,
    evaluate_table,
    format_polyfract,
    interpolate_table,
    is_periodic,
    minimal_support_index,
    monofract_value,
    parse_polyfract,
    shift,
    taylor_interpolate_z,
    tensor_product,
)

__version__ = "0.1.0"
