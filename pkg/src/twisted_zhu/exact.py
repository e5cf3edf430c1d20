"""Exact rational arithmetic, binomial series and sparse row reduction.

Vectors are plain ``dict`` objects mapping a hashable basis label to a
nonzero :class:`fractions.Fraction`.  Zero entries are never stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping

Vec = dict

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RAT_RE.match(x)
        if not m:
            raise ValueError(f"not a rational literal: {x!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {x!r}")
        return Fraction(int(m.group(1)), den)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def _binom(s: Fraction, m: int) -> Fraction:
    if m == 0:
        return Fraction(1)
    return _binom(s, m - 1) * (s - m + 1) / m


def rat_binomial(s, m: int) -> Fraction:
    """Generalized binomial ``s(s-1)...(s-m+1)/m!`` for rational ``s``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _binom(rat(s), m)


def binomial_series(s, order: int) -> list[Fraction]:
    """Coefficients of ``(1+z)^s`` up to and including ``z^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    s = rat(s)
    out = [Fraction(1)]
    for j in range(1, order + 1):
        out.append(out[-1] * (s - j + 1) / j)
    return out


# ---------------------------------------------------------------------------
# sparse vector helpers


def axpy(target: dict, coeff, vec: Mapping) -> dict:
    """In place ``target += coeff * vec``; returns ``target``."""
    if not coeff:
        return target
    for k, c in vec.items():
        v = target.get(k, 0) + coeff * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)
    return target


def vsum(*vecs: Mapping) -> dict:
    out: dict = {}
    for v in vecs:
        axpy(out, 1, v)
    return out


def vscale(coeff, vec: Mapping) -> dict:
    if not coeff:
        return {}
    return {k: coeff * c for k, c in vec.items()}


def vsub(a: Mapping, b: Mapping) -> dict:
    return axpy(dict(a), -1, b)


# ---------------------------------------------------------------------------
# row reduction


class SubspaceBasis:
    """Reduced row-echelon basis of a subspace, built incrementally.

    The pivot of a row is its largest label under ``key``; every pivot
    entry is 1 and pivot columns vanish in all other rows.  Rows may carry
    a *tag*, a vector recording which combination of the inserted inputs
    produced them.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self.key = key if key is not None else (lambda x: x)
        self.rows: dict[Hashable, dict] = {}
        self.tags: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows, key=self.key)

    def reduce(self, vec: Mapping, tag: Mapping | None = None):
        """Return ``vec`` with every pivot coordinate eliminated.

        When ``tag`` is given the pair ``(reduced, reduced_tag)`` is
        returned instead.
        """
        out = dict(vec)
        t = dict(tag) if tag is not None else None
        for p in [p for p in out if p in self.rows]:
            c = out.get(p)
            if not c:
                continue
            axpy(out, -c, self.rows[p])
            if t is not None:
                axpy(t, -c, self.tags.get(p, {}))
        if t is not None:
            return out, t
        return out

    def add(self, vec: Mapping, tag: Mapping | None = None) -> dict | None:
        """Insert ``vec``.  Returns None if it enlarged the span.

        If ``vec`` already lies in the span, the reduced tag (a relation
        among the inputs) is returned, or ``{}`` when no tag was given.
        """
        red, t = self.reduce(vec, tag if tag is not None else {})
        if not red:
            return t
        piv = max(red, key=self.key)
        inv = 1 / red[piv]
        red = vscale(inv, red)
        t = vscale(inv, t)
        for q, row in self.rows.items():
            c = row.get(piv)
            if c:
                axpy(row, -c, red)
                if t or self.tags.get(q):
                    self.tags[q] = axpy(self.tags.get(q, {}), -c, t)
        self.rows[piv] = red
        if t:
            self.tags[piv] = t
        return None

    def __contains__(self, vec) -> bool:
        return not self.reduce(vec)

    def copy(self) -> "SubspaceBasis":
        out = SubspaceBasis(self.key)
        out.rows = {p: dict(r) for p, r in self.rows.items()}
        out.tags = {p: dict(t) for p, t in self.tags.items()}
        return out


def rref(vectors: Iterable[Mapping], key=None, track: bool = False) -> SubspaceBasis:
    """Row-reduce ``vectors``.  With ``track`` each row's tag records it as
    a combination ``{input position: coefficient}`` of the inputs."""
    basis = SubspaceBasis(key)
    for i, v in enumerate(vectors):
        basis.add(v, {i: Fraction(1)} if track else None)
    return basis


def reduce_mod(vec: Mapping, basis: SubspaceBasis) -> dict:
    return basis.reduce(vec)


def kernel(images: list[Mapping]) -> list[dict]:
    """Basis of the kernel of the linear map sending ``e_j`` to ``images[j]``.

    Kernel vectors are returned as ``{j: coefficient}``.
    """
    basis = SubspaceBasis()
    out = []
    for j, img in enumerate(images):
        rel = basis.add(img, {j: Fraction(1)})
        if rel is not None:
            out.append(rel)
    return out
