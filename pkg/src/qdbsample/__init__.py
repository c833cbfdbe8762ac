"""Exact sampling of high-utility patterns from quantitative databases."""

from .qdb import (
    ItemDictionary,
    LengthUtility,
    Pattern,
    PriceTable,
    QdbError,
    QuantitativeDatabase,
    QuantitativeTransaction,
    load_qdb,
    parse_qdb,
    pattern_utility_in_database,
    pattern_utility_in_transaction,
    serialize_qdb,
)
from .combinatorics import PascalCache, RandomSource
from .weighting import (
    TransactionWeight,
    WeightIndex,
    ZeroMassError,
    build_weight_index,
    vutu,
    weigh_transaction,
)
from .sampler import (
    SampleRecord,
    SampleRequest,
    bootstrap_sample,
    draw_items,
    draw_length,
    draw_transaction,
    sample_patterns,
)
from .disk import DiskWeights, FileChangedError, sample_patterns_disk, select_ids, stream_draw, stream_weigh
from .oracle import (
    EnumerationCapError,
    ExactDistribution,
    FitReport,
    RepresentativenessReport,
    compare_empirical,
    enumerate_distribution,
    representativeness_report,
    union_normalizer,
)
from .kgprofile import (
    PredicateWeights,
    Profile,
    ProfileEdge,
    ProfileError,
    SubProfile,
    merge_subprofiles,
    pattern_to_subprofile,
    profile_to_qdb,
)

__all__ = [
    "ItemDictionary",
    "LengthUtility",
    "Pattern",
    "PriceTable",
    "QdbError",
    "QuantitativeDatabase",
    "QuantitativeTransaction",
    "load_qdb",
    "parse_qdb",
    "pattern_utility_in_database",
    "pattern_utility_in_transaction",
    "serialize_qdb",
    "PascalCache",
    "RandomSource",
    "TransactionWeight",
    "WeightIndex",
    "ZeroMassError",
    "build_weight_index",
    "vutu",
    "weigh_transaction",
    "SampleRecord",
    "SampleRequest",
    "bootstrap_sample",
    "draw_items",
    "draw_length",
    "draw_transaction",
    "sample_patterns",
    "DiskWeights",
    "FileChangedError",
    "sample_patterns_disk",
    "select_ids",
    "stream_draw",
    "stream_weigh",
    "EnumerationCapError",
    "ExactDistribution",
    "FitReport",
    "RepresentativenessReport",
    "compare_empirical",
    "enumerate_distribution",
    "representativeness_report",
    "union_normalizer",
    "PredicateWeights",
    "Profile",
    "ProfileEdge",
    "ProfileError",
    "SubProfile",
    "merge_subprofiles",
    "pattern_to_subprofile",
    "profile_to_qdb",
]
