"""Concrete vertex operator algebras with PBW bases.

Two families are built in:

* :class:`Heisenberg` -- the rank one free boson ``M(1)``, strongly
  generated by ``a = a(-1)1`` of weight 1, with conformal vector
  ``omega = a(-1)^2 1 / 2``.  It carries the order two automorphism
  ``a -> -a``.
* :class:`Virasoro` -- the universal vacuum module ``V_c`` generated by
  ``omega = L(-2)1``.

A PBW monomial is a weakly decreasing tuple of positive integers
``(n_1, ..., n_k)`` standing for ``x(-n_1)...x(-n_k)1``.  Vectors are
dicts from monomials to Fractions.

Modes of composite vectors on any module (including ``V`` itself) are
computed by :class:`ModeEngine` from the modes of the strong generator,
using the Borcherds identity in the form valid for twisted modules.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exact import axpy, rat, rat_binomial, vscale

Monomial = tuple


def partitions(total: int, min_part: int = 1, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``total`` as weakly decreasing tuples."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), min_part - 1, -1):
        for rest in partitions(total - first, min_part, first):
            yield (first,) + rest


def order_key(mono: tuple):
    """Global (weight, lex) order on monomials."""
    return (sum(mono), mono)


def insert_part(mono: tuple, part) -> tuple:
    return tuple(sorted(mono + (part,), reverse=True))


def remove_part(mono: tuple, part) -> tuple:
    lst = list(mono)
    lst.remove(part)
    return tuple(lst)


class _MemoCache:
    """Dict cache shared across threads; lookups and inserts may interleave,
    duplicated work is harmless because values are pure."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            self._data.setdefault(key, value)
        return self._data[key]

    def __len__(self):
        return len(self._data)


class ModeEngine:
    """Mode action ``u_q x`` of VOA vectors ``u`` on a graded space.

    Subclasses supply the strong generator's modes through
    :meth:`gen_mode` and a nonnegative :meth:`degree`.  For
    ``u = a_p w`` (``a`` the generator) the action follows from the
    Borcherds identity with ``s`` the smallest nonnegative admissible mode
    index of ``a``::

        sum_i C(s,i) (a_{p+i} w)_{s+t-i}
          = sum_i (-1)^i C(p,i) (a_{s+p-i} w_{t+i} - (-1)^p w_{p+t-i} a_{s+i})

    The left side beyond ``i = 0`` involves vectors of strictly smaller
    weight, so the recursion terminates.  On untwisted spaces ``s = 0``
    and this is the usual normal-ordered product formula.
    """

    voa: "VOA"

    def __init__(self):
        self._cache = _MemoCache()

    # -- to be supplied by subclasses
    def gen_mode(self, m, x: tuple) -> dict:
        raise NotImplementedError

    def degree(self, x: tuple):
        raise NotImplementedError

    @property
    def twist(self) -> int:
        """Order of the automorphism under which this space is twisted."""
        return 1

    def index_offset(self, label: int) -> Fraction:
        return Fraction(label % self.twist, self.twist) if self.twist > 1 else Fraction(0)

    def check_index(self, label: int, q) -> Fraction:
        q = rat(q)
        if (q - self.index_offset(label)).denominator != 1:
            raise ValueError(f"mode index {q} not admissible for eigenvalue label {label}")
        return q

    # -- engine
    def gen_mode_vec(self, m, vec: dict) -> dict:
        out: dict = {}
        for x, c in vec.items():
            axpy(out, c, self.gen_mode(m, x))
        return out

    def act(self, u: dict, q, x: dict) -> dict:
        """``u_q x`` for vectors ``u`` (in the VOA) and ``x`` (in this space)."""
        out: dict = {}
        q = rat(q)
        for um, cu in u.items():
            for xm, cx in x.items():
                axpy(out, cu * cx, self.act_mono(um, q, xm))
        return out

    def act_mono(self, u: tuple, q, x: tuple) -> dict:
        q = rat(q)
        key = (u, q, x)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        return self._cache.put(key, self._compute(u, q, x))

    def _compute(self, u: tuple, q: Fraction, x: tuple) -> dict:
        V = self.voa
        if not u:
            return {x: Fraction(1)} if q == -1 else {}
        self.check_index(V.label(u), q)
        wu = V.weight(u)
        d = self.degree(x)
        if d + wu - q - 1 < 0:
            return {}
        p, w = V.split(u)
        if not w and p == -1:
            return dict(self.gen_mode(q, x))
        wa, ww = V.gen_weight, V.weight(w)
        s = self.index_offset(V.gen_label)
        t = q - s
        sign_p = -1 if p % 2 else 1
        out: dict = {}
        i = 0
        while d + ww - (t + i) - 1 >= 0:
            y = self.act_mono(w, t + i, x)
            if y:
                coeff = (-1) ** i * rat_binomial(p, i)
                axpy(out, coeff, self.gen_mode_vec(s + p - i, y))
            i += 1
        i = 0
        while d + wa - (s + i) - 1 >= 0:
            y = self.gen_mode(s + i, x)
            if y:
                coeff = -sign_p * (-1) ** i * rat_binomial(p, i)
                for ym, cy in y.items():
                    axpy(out, coeff * cy, self.act_mono(w, p + t - i, ym))
            i += 1
        if s:
            i = 1
            while wa + ww - (p + i) - 1 >= 0:
                z = V.mode_mono(V.generator_mono, p + i, w)
                coeff = rat_binomial(s, i)
                if z and coeff:
                    for zm, cz in z.items():
                        axpy(out, -coeff * cz, self.act_mono(zm, q - i, x))
                i += 1
        return out


class VOA(ModeEngine):
    """Base class for the built-in VOAs; also its own adjoint module."""

    kind = "abstract"
    gen_weight = 1
    min_part = 1

    def __init__(self, twist_order: int = 1):
        super().__init__()
        self.voa = self
        self.T = twist_order

    # V is untwisted as a module over itself
    @property
    def twist(self) -> int:
        return 1

    @property
    def generator_mono(self) -> tuple:
        raise NotImplementedError

    @property
    def gen_label(self) -> int:
        return 0

    @property
    def central_charge(self) -> Fraction:
        raise NotImplementedError

    @property
    def omega(self) -> dict:
        raise NotImplementedError

    vacuum: dict = {(): Fraction(1)}

    def weight(self, mono: tuple) -> int:
        return sum(mono)

    degree = weight

    def label(self, mono: tuple) -> int:
        return 0

    def split(self, mono: tuple) -> tuple[int, tuple]:
        raise NotImplementedError

    def basis_of_weight(self, w: int) -> list[tuple]:
        return sorted(partitions(w, self.min_part), key=order_key)

    def basis_up_to(self, W: int) -> list[tuple]:
        if W < 0:
            raise ValueError("cutoff must be nonnegative")
        out = []
        for w in range(W + 1):
            out.extend(self.basis_of_weight(w))
        return out

    def eigenspace_basis(self, r: int, W: int) -> list[tuple]:
        if not 0 <= r < self.T:
            raise ValueError(f"eigenvalue label {r} outside 0..{self.T - 1}")
        return [b for b in self.basis_up_to(W) if self.label(b) == r]

    def homogeneous_parts(self, vec: dict) -> dict:
        """Split ``vec`` by (weight, label)."""
        out: dict = {}
        for m, c in vec.items():
            out.setdefault((self.weight(m), self.label(m)), {})[m] = c
        return out

    def is_homogeneous(self, vec: dict) -> bool:
        return len(self.homogeneous_parts(vec)) <= 1

    def max_weight(self, vec: dict) -> int:
        return max((self.weight(m) for m in vec), default=-1)

    # -- mode calculus on V
    def mode_mono(self, u: tuple, m, v: tuple) -> dict:
        return self.act_mono(u, m, v)

    def mode_action(self, u: dict, m: int, v: dict) -> dict:
        """``u_m v`` inside V."""
        return self.act(u, m, v)

    def L(self, k: int, v: dict) -> dict:
        return self.mode_action(self.omega, k + 1, v)

    def translate(self, v: dict) -> dict:
        return self.L(-1, v)

    def phi_map(self, v: dict) -> dict:
        """``e^{L(1)} (-1)^{L(0)} v``."""
        signed = {m: (-c if self.weight(m) % 2 else c) for m, c in v.items()}
        out = dict(signed)
        term = signed
        k = 1
        while term:
            term = vscale(Fraction(1, k), self.L(1, term))
            axpy(out, 1, term)
            k += 1
        return out

    def apply_automorphism(self, v: dict) -> dict:
        """Act by ``g``; on ``V^r`` this is multiplication by ``(-1)^r`` for T=2."""
        return {m: (-c if self.label(m) % 2 else c) for m, c in v.items()}

    def describe(self, mono: tuple) -> str:
        raise NotImplementedError

    def config(self) -> dict:
        return {"kind": self.kind, "twist_order": self.T}


def _power_label(symbol: str, mono: tuple) -> str:
    if not mono:
        return "1"
    parts = []
    for n in sorted(set(mono), reverse=True):
        k = mono.count(n)
        parts.append(f"{symbol}(-{n})" + (f"^{k}" if k > 1 else ""))
    return " ".join(parts)


class Heisenberg(VOA):
    """Rank one Heisenberg VOA; ``twist_order`` 2 selects ``g: a -> -a``."""

    kind = "heisenberg"
    gen_weight = 1
    min_part = 1

    def __init__(self, twist_order: int = 1):
        if twist_order not in (1, 2):
            raise ValueError("the Heisenberg VOA supports g = 1 (T=1) or g = -1 (T=2) only")
        super().__init__(twist_order)

    @property
    def generator_mono(self) -> tuple:
        return (1,)

    @property
    def gen_label(self) -> int:
        return 1 % self.T

    @property
    def central_charge(self) -> Fraction:
        return Fraction(1)

    @property
    def omega(self) -> dict:
        return {(1, 1): Fraction(1, 2)}

    def label(self, mono: tuple) -> int:
        return len(mono) % self.T

    def split(self, mono: tuple) -> tuple[int, tuple]:
        return -mono[0], mono[1:]

    def gen_mode(self, m, x: tuple) -> dict:
        m = int(m)
        if m < 0:
            return {insert_part(x, -m): Fraction(1)}
        if m == 0:
            return {}
        k = x.count(m)
        if not k:
            return {}
        return {remove_part(x, m): Fraction(m * k)}

    def describe(self, mono: tuple) -> str:
        return _power_label("a", mono)


class VirasoroHW:
    """Straightening of ``L(m)`` on a highest weight Virasoro module.

    With ``vacuum=True`` the quotient by ``L(-1)1`` is used (parts >= 2).
    """

    def __init__(self, c: Fraction, h: Fraction, vacuum: bool):
        self.c = rat(c)
        self.h = rat(h)
        self.vacuum = vacuum
        self.apply = lru_cache(maxsize=None)(self._apply)

    def apply_vec(self, m: int, vec: dict) -> dict:
        out: dict = {}
        for mono, c in vec.items():
            axpy(out, c, self.apply(m, mono))
        return out

    def _apply(self, m: int, mono: tuple) -> dict:
        if not mono:
            if m > 0:
                return {}
            if m == 0:
                return {(): self.h} if self.h else {}
            if m == -1 and self.vacuum:
                return {}
            return {(-m,): Fraction(1)}
        n1, rest = mono[0], mono[1:]
        if m < 0 and -m >= n1:
            return {(-m,) + mono: Fraction(1)}
        # L(m) L(-n1) R = L(-n1) L(m) R + (m+n1) L(m-n1) R + c/12 (m^3-m) delta_{m,n1} R
        out = self.apply_vec(-n1, self.apply(m, rest))
        axpy(out, m + n1, self.apply(m - n1, rest))
        if m == n1:
            axpy(out, self.c * (m ** 3 - m) / 12, {rest: Fraction(1)})
        return out


class Virasoro(VOA):
    """Universal Virasoro vacuum VOA of central charge ``c``."""

    kind = "virasoro"
    gen_weight = 2
    min_part = 2

    def __init__(self, central_charge="1/2", twist_order: int = 1):
        if twist_order != 1:
            raise ValueError("the Virasoro VOA has no nontrivial automorphism preserving omega")
        super().__init__(1)
        self._c = rat(central_charge)
        self.hw = VirasoroHW(self._c, Fraction(0), vacuum=True)

    @property
    def generator_mono(self) -> tuple:
        return (2,)

    @property
    def central_charge(self) -> Fraction:
        return self._c

    @property
    def omega(self) -> dict:
        return {(2,): Fraction(1)}

    def split(self, mono: tuple) -> tuple[int, tuple]:
        # L(-n) = omega_{1-n}
        return 1 - mono[0], mono[1:]

    def gen_mode(self, m, x: tuple) -> dict:
        return self.hw.apply(int(m) - 1, x)

    def describe(self, mono: tuple) -> str:
        return _power_label("L", mono)

    def config(self) -> dict:
        from .exact import fmt

        return {"kind": self.kind, "twist_order": self.T, "central_charge": fmt(self._c)}


def make_voa(kind: str, twist_order: int = 1, central_charge="1/2") -> VOA:
    if kind == "heisenberg":
        return Heisenberg(twist_order)
    if kind == "virasoro":
        return Virasoro(central_charge, twist_order)
    raise ValueError(f"unknown VOA family {kind!r}")
