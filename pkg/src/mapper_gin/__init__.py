"""Mapper region graphs for 3D point clouds, classified with a small GIN.

The pipeline: point clouds are decomposed into overlapping regions (PCA lens,
cubical cover, per-cell DBSCAN), the region overlap graph is encoded with a
lightweight pointwise encoder and propagated through GIN layers, and the
resulting classifier is stress-tested under a catalog of point cloud
corruptions at five severity levels.
"""

__version__ = "0.1.0"

from .pointcloud import PointCloud, farthest_point_sampling, normalize_unit_sphere, parse_off, sample_synthetic
from .corruptions import CorruptionSpec, apply_corruption, corruption_suite
from .mapper import MapperGraph, MapperParams, build_mapper_graph

__all__ = [
    "PointCloud",
    "parse_off",
    "normalize_unit_sphere",
    "farthest_point_sampling",
    "sample_synthetic",
    "CorruptionSpec",
    "apply_corruption",
    "corruption_suite",
    "MapperGraph",
    "MapperParams",
    "build_mapper_graph",
]
