"""Semi-irreducible class templates and their verification."""

from .catalog import (
    CATALOG,
    CLASS_IDS,
    ClassInstance,
    canonical_id,
    class_spec,
    lhs_integrand,
    make_instance,
    rhs_closed_form,
)
from .verify import (
    CrossReport,
    SweepBounds,
    VerifyReport,
    cross_pipeline,
    format_instance,
    instances,
    lhs_qintegral,
    parse_instance_file,
    parse_instance_line,
    sweep,
    verify_class,
)
