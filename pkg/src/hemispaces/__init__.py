"""Max-plus hyperplane faces, hemispaces, and their exact enumeration."""

from .enumeration import (
    WeakOrder,
    Splitting,
    bell_f,
    bell_standard,
    census,
    count_hemispaces,
    enumerate_centered_hyperplanes,
    enumerate_face_partitions,
    enumerate_hemispaces,
    enumerate_splittings,
    enumerate_weak_orders,
    splitting_to_weak_order,
    weak_order_to_splitting,
)
from .faces import (
    TYPE_I,
    TYPE_II,
    Hyperplane,
    KFace,
    Side,
    boundary_subface,
    classify,
    face,
    face_catalog,
    face_conditions,
    representative,
    segment_face_trace,
    side_of,
    validate_hyperplane,
)
from .hemispace import (
    FacePartition,
    Hemispace,
    HemispacePair,
    TypeISplit,
    all_index_sets,
    assemble,
    check_hemispace,
    complement,
    contains,
    convexity_check,
    signature,
    validate_partition,
)
from .maxplus import (
    BOTTOM,
    SegmentParam,
    oplus,
    parse_point,
    point,
    scale,
    segment_breakpoints,
    segment_point,
)
from .render import render_svg

__version__ = "0.1.0"
