"""roughkit: granulation carriers and rough approximation operators on finite universes."""

from roughkit.foundation import (
    BinaryRel,
    InformationTable,
    Partition,
    Subset,
    Universe,
    indiscernibility,
    partition_refines,
    parse_rational,
    relation_properties,
)
from roughkit.approx import ApproximationPair, ThreeWayRegions, pawlak_pair, pointwise_approx, regions

__all__ = [
    "ApproximationPair",
    "BinaryRel",
    "InformationTable",
    "Partition",
    "Subset",
    "ThreeWayRegions",
    "Universe",
    "indiscernibility",
    "partition_refines",
    "parse_rational",
    "pawlak_pair",
    "pointwise_approx",
    "regions",
    "relation_properties",
]

__version__ = "0.1.0"
