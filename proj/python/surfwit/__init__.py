"""Embedded graphs on surfaces, cluster genus and small witnesses."""

from ._core import (
    Arrangement,
    Cluster,
    EmbeddedGraph,
    Error,
    brute_force_witness,
    generate_random,
    helly_witness,
    parse_arrangement,
    parse_cluster,
    read_arrangement,
    read_cluster,
    search_tight_example,
    witness,
)

__all__ = [
    "Arrangement",
    "Cluster",
    "EmbeddedGraph",
    "Error",
    "brute_force_witness",
    "generate_random",
    "helly_witness",
    "parse_arrangement",
    "parse_cluster",
    "read_arrangement",
    "read_cluster",
    "search_tight_example",
    "witness",
]
