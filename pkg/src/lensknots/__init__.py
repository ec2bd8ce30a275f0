"""Exact contact-topological invariants of lens spaces: Farey geodesics,
tight contact structures, bypass slopes, rational unknot invariants and
mapping class group tables, all in integer arithmetic."""

from .bypass import TorusState, attach_bypass, basic_slice_walk, tb_from_dividing
from .checks import CheckResult, SweepReport, check_sweep, lens_pairs
from .farey import bfs_oracle, farthest_neighbor, geodesic, in_arc, neighbor_family
from .mcg import (
    GroupDescription,
    contact_mcg,
    contact_mcg_rel_torus,
    contact_mcg_s1s2,
    delta_action,
    eta_action,
    inclusion_is_iso,
    inclusion_kernel,
    smooth_mcg,
    unknot_classes,
)
from .slopes import (
    INFINITY,
    ZERO,
    Slope,
    cf_matrix_identity,
    dual_fraction,
    eval_neg_cf,
    farey_mul,
    farey_sum,
    neg_cf,
)
from .surgery import (
    LinkingData,
    SurgeryChain,
    build_chain,
    det_bareiss,
    linking_matrix,
    meridian_lk,
    rot_choices,
    rot_q_surgery,
    rot_spectrum,
    solve_exact,
)
from .tight import (
    ShuffleClass,
    block_partition,
    class_from_signs,
    count_tight_lens,
    count_tight_solid,
    decorated_path,
    enumerate_tight,
    is_universally_tight,
    standard_structures,
)
from .unknots import (
    LegendrianClass,
    MountainRange,
    legendrian_classification,
    mountain_range,
    rot_q_farey,
    sl_q,
    stabilize,
    tb_q_peak,
    transverse_classification,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "GroupDescription",
    "INFINITY",
    "LegendrianClass",
    "LinkingData",
    "MountainRange",
    "ShuffleClass",
    "Slope",
    "SurgeryChain",
    "SweepReport",
    "TorusState",
    "ZERO",
    "attach_bypass",
    "basic_slice_walk",
    "bfs_oracle",
    "block_partition",
    "build_chain",
    "cf_matrix_identity",
    "check_sweep",
    "class_from_signs",
    "contact_mcg",
    "contact_mcg_rel_torus",
    "contact_mcg_s1s2",
    "count_tight_lens",
    "count_tight_solid",
    "decorated_path",
    "delta_action",
    "det_bareiss",
    "dual_fraction",
    "enumerate_tight",
    "eta_action",
    "eval_neg_cf",
    "farey_mul",
    "farey_sum",
    "farthest_neighbor",
    "geodesic",
    "in_arc",
    "inclusion_is_iso",
    "inclusion_kernel",
    "is_universally_tight",
    "legendrian_classification",
    "lens_pairs",
    "linking_matrix",
    "meridian_lk",
    "mountain_range",
    "neg_cf",
    "neighbor_family",
    "rot_choices",
    "rot_q_farey",
    "rot_q_surgery",
    "rot_spectrum",
    "sl_q",
    "smooth_mcg",
    "solve_exact",
    "stabilize",
    "standard_structures",
    "tb_from_dividing",
    "tb_q_peak",
    "transverse_classification",
    "unknot_classes",
]
