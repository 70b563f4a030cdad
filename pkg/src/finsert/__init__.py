"""Executable insertion of contra-continuous functions on finite spaces."""

from .cutsets import CutPolicy, CutSetFamily, check_premise, make_cutsets
from .errors import CapExceeded, FinsertError, MalformedTopology, PreconditionError, UniverseMismatch
from .insertion import (
    InsertionReport,
    InterpolationChain,
    Mode,
    NoWitness,
    PremiseError,
    Preset,
    extract,
    insert,
    interpolate,
    verify,
)
from .oracle import OracleQuery, TargetClass, find_insertion, necessity_sweep
from .realfn import ClassFlags, FiniteFunction, build_levels, classify, compare_le
from .relations import BinaryRelation, RelationKind, bar, check_strong, holds
from .spacegen import enumerate_topologies, named_space, random_topology
from .topology import (
    PointSet,
    Topology,
    closure,
    cor3_separation,
    cor4_separation,
    interior,
    is_closed,
    is_extremally_disconnected,
    is_f_sigma,
    is_g_delta,
    is_normal,
    is_open,
    kernel,
    lambda_sets_open,
    vee,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryRelation",
    "CapExceeded",
    "ClassFlags",
    "CutPolicy",
    "CutSetFamily",
    "FiniteFunction",
    "FinsertError",
    "InsertionReport",
    "InterpolationChain",
    "MalformedTopology",
    "Mode",
    "NoWitness",
    "OracleQuery",
    "PointSet",
    "PreconditionError",
    "PremiseError",
    "Preset",
    "RelationKind",
    "TargetClass",
    "Topology",
    "UniverseMismatch",
    "bar",
    "build_levels",
    "check_premise",
    "check_strong",
    "classify",
    "closure",
    "compare_le",
    "cor3_separation",
    "cor4_separation",
    "enumerate_topologies",
    "extract",
    "find_insertion",
    "holds",
    "insert",
    "interior",
    "interpolate",
    "is_closed",
    "is_extremally_disconnected",
    "is_f_sigma",
    "is_g_delta",
    "is_normal",
    "is_open",
    "kernel",
    "lambda_sets_open",
    "make_cutsets",
    "named_space",
    "necessity_sweep",
    "random_topology",
    "vee",
    "verify",
]
