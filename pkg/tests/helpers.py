"""Shared test utilities."""

import numpy as np

from sarr import registry


def circular_diff(a, b, period):
    """Shortest circular distance between angles, elementwise."""
    d = np.abs(np.asarray(a) - np.asarray(b)) % period
    return np.minimum(d, period - d)


def all_classes():
    out = []
    for dataset in registry.DATASETS:
        out.extend(cls for cls, _ in registry.list_classes(dataset))
    return out


def class_ids():
    return [cls.label for cls in all_classes()]

