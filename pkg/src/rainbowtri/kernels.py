"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``RAINBOWTRI_KERNEL=py`` (or ``cy``) to force a backend for the whole
process; library calls can also pass ``backend=`` explicitly.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel_cy  # compiled at install time; optional
except ImportError:
    _kernel_cy = None

_BACKENDS = {"py": _kernel_py}
if _kernel_cy is not None:
    _BACKENDS["cy"] = _kernel_cy


def available_backends():
    return sorted(_BACKENDS)


def default_backend() -> str:
    forced = os.environ.get("RAINBOWTRI_KERNEL")
    if forced:
        if forced not in _BACKENDS:
            raise ValueError(f"RAINBOWTRI_KERNEL={forced!r} is not available "
                             f"(have {available_backends()})")
        return forced
    return "cy" if "cy" in _BACKENDS else "py"


def get_backend(name=None):
    if name is None or name == "auto":
        name = default_backend()
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r} "
                         f"(have {available_backends()})") from None


def find_smallest_cut(adjacency, max_size, backend=None):
    return get_backend(backend).find_smallest_cut(adjacency, max_size)


def run_search(num_edges, palette, edge_adj, cycles, edge_cycles, order,
               pre_assign, budget_nodes, budget_seconds, backend=None):
    return get_backend(backend).run_search(
        num_edges, palette, edge_adj, cycles, edge_cycles, order,
        pre_assign, budget_nodes, budget_seconds)
