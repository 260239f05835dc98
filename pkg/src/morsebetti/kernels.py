"""Kernel selection and layer construction.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
numpy fallback. Set ``MORSEBETTI_KERNEL=python`` to force the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

HAVE_COMPILED = _ckernels is not None

_BACKENDS = {"python": _kernels_py.face_data}
if HAVE_COMPILED:
    _BACKENDS["compiled"] = _ckernels.face_data


def default_backend() -> str:
    forced = os.environ.get("MORSEBETTI_KERNEL", "").strip().lower()
    if forced in ("python", "py"):
        return "python"
    if forced in ("compiled", "c") and not HAVE_COMPILED:
        raise ImportError("MORSEBETTI_KERNEL=compiled but the extension is not built")
    return "compiled" if HAVE_COMPILED else "python"


BACKEND = default_backend()


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_face_data(backend: str | None = None):
    name = BACKEND if backend in (None, "auto") else backend
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {available_backends()}") from None


MAX_GENERATORS = 64


def lex_order(masks: np.ndarray, r: int) -> np.ndarray:
    """Indices sorting equal-size bitmask faces lexicographically.

    For faces of one size, comparing sorted member lists is the same as
    comparing bit-reversed masks in descending order.
    """
    key = np.zeros(masks.shape[0], dtype=np.uint64)
    for e in range(r):
        key |= ((masks >> np.uint64(e)) & np.uint64(1)) << np.uint64(r - 1 - e)
    return np.argsort(key, kind="stable")[::-1]


def expand(parents: np.ndarray, r: int) -> np.ndarray:
    """Distinct one-element extensions of the parent faces, in lex order."""
    parents = np.asarray(parents, dtype=np.uint64)
    if parents.size == 0 or r == 0:
        return np.zeros(0, dtype=np.uint64)
    bits = np.left_shift(np.uint64(1), np.arange(r, dtype=np.uint64))
    kids = parents[:, None] | bits[None, :]
    fresh = (parents[:, None] & bits[None, :]) == 0
    kids = np.unique(kids[fresh])
    return kids[lex_order(kids, r)]


@dataclass
class Layer:
    """All admissible faces of one size with their kernel data, lex ordered."""

    size: int
    masks: list[int]
    degree: list[int]
    unit: list[int]
    cover: list[int]
    rank: dict[int, int] = field(repr=False)

    def __len__(self):
        return len(self.masks)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.masks, dtype=np.uint64)


def build_layer(masks: np.ndarray, size: int, gens: np.ndarray, lyubeznik: bool,
                backend: str | None = None) -> Layer:
    face_data = get_face_data(backend)
    keep, deg, unit, cover = face_data(masks, gens, lyubeznik)
    masks = np.asarray(masks, dtype=np.uint64)[keep]
    ms = masks.tolist()
    return Layer(
        size=size,
        masks=ms,
        degree=deg[keep].tolist(),
        unit=unit[keep].tolist(),
        cover=cover[keep].tolist(),
        rank={m: k for k, m in enumerate(ms)},
    )


def first_layers(gens: np.ndarray, lyubeznik: bool, backend: str | None = None) -> tuple[Layer, Layer]:
    r = gens.shape[0]
    if r > MAX_GENERATORS:
        raise ValueError(f"at most {MAX_GENERATORS} generators supported, got {r}")
    empty = np.zeros(1, dtype=np.uint64)
    layer0 = build_layer(empty, 0, gens, lyubeznik, backend)
    layer1 = build_layer(expand(empty, r), 1, gens, lyubeznik, backend)
    return layer0, layer1


def next_layer(layer: Layer, gens: np.ndarray, lyubeznik: bool, backend: str | None = None) -> Layer:
    return build_layer(expand(layer.array, gens.shape[0]), layer.size + 1, gens, lyubeznik, backend)
