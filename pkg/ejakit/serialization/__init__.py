from ejakit.serialization.descriptors import (
    AlgebraDescriptor,
    ElementDescriptor,
    MapDescriptor,
    WitnessDescriptor,
    parse_algebra,
    parse_element,
    parse_map,
)
from ejakit.serialization.json_serializer import dumps, loads

__all__ = [
    "dumps",
    "loads",
    "AlgebraDescriptor",
    "ElementDescriptor",
    "MapDescriptor",
    "WitnessDescriptor",
    "parse_algebra",
    "parse_element",
    "parse_map",
]
