"""The graded Lie algebra ``V[g]`` of twisted loop elements.

An element ``a(q)`` is stored as the key ``(a, q)`` with ``a`` a PBW
monomial of the VOA and ``q`` in ``label(a)/T + Z``; a :data:`LoopSum` is
a dict from such keys to Fractions.  The quotient by the image of
``D = d/dt + L(-1)`` is handled by rewriting

    (L(-1)a)(q) = -q a(q-1)

until every vector lies in a fixed complement of ``L(-1)V``.  The
complement in weight ``w`` is spanned by the monomials that are not
pivots of the row-reduced image ``L(-1)V_{w-1}``.
"""

from __future__ import annotations

import random
import threading
from fractions import Fraction

from .exact import SubspaceBasis, axpy, fmt, rat, rat_binomial, vsum
from .modules import GradedModule, dl_identity_check, mode_index_ok
from .voa import VOA, order_key
from .zhu import AlgebraPresentation, make_report, star

LoopSum = dict


class LoopAlgebra:
    """``V[g]`` for a VOA ``V`` with its built-in automorphism of order ``V.T``."""

    def __init__(self, V: VOA):
        self.V = V
        self._images: dict[int, SubspaceBasis] = {}
        self._nf: dict = {}
        self._lock = threading.Lock()

    # -- elements
    @property
    def T(self) -> int:
        return self.V.T

    def check(self, mono: tuple, q) -> Fraction:
        q = rat(q)
        off = Fraction(self.V.label(mono) % self.T, self.T)
        if (q - off).denominator != 1:
            raise ValueError(f"exponent {q} not congruent to {off} mod 1")
        return q

    def element(self, vec, q) -> LoopSum:
        """The loop sum ``vec(q)`` for a monomial or a homogeneous vector."""
        if isinstance(vec, tuple):
            vec = {vec: Fraction(1)}
        if len(self.V.homogeneous_parts(vec)) != 1:
            raise ValueError("loop elements need a homogeneous vector")
        out: LoopSum = {}
        for m, c in vec.items():
            out[(m, self.check(m, q))] = c
        return out

    def degree(self, key) -> Fraction:
        mono, q = key
        return self.V.weight(mono) - rat(q) - 1

    def degrees(self, x: LoopSum) -> set:
        return {self.degree(k) for k in x}

    # -- D normal form
    def _image(self, w: int) -> SubspaceBasis:
        hit = self._images.get(w)
        if hit is None:
            basis = SubspaceBasis(order_key)
            for b in self.V.basis_of_weight(w - 1):
                basis.add(self.V.translate({b: Fraction(1)}), {b: Fraction(1)})
            with self._lock:
                hit = self._images.setdefault(w, basis)
        return hit

    def _nf_mono(self, mono: tuple, q: Fraction) -> dict:
        key = (mono, q)
        hit = self._nf.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {key: Fraction(1)} if q == -1 else {}
        else:
            # mono = red + L(-1)(-t), and (L(-1)y)(q) = -q y(q-1)
            red, t = self._image(self.V.weight(mono)).reduce({mono: Fraction(1)}, {})
            out = {(m, q): c for m, c in red.items()}
            if q and t:
                for m, c in t.items():
                    axpy(out, q * c, self._nf_mono(m, q - 1))
        with self._lock:
            return self._nf.setdefault(key, out)

    def d_normalize(self, x: LoopSum) -> LoopSum:
        out: LoopSum = {}
        for (mono, q), c in x.items():
            q = self.check(mono, q)
            axpy(out, c, self._nf_mono(mono, q))
        return out

    def is_normal(self, x: LoopSum) -> bool:
        return self.d_normalize(x) == x

    # -- bracket
    def bracket_keys(self, a, b) -> LoopSum:
        (am, p), (bm, q) = a, b
        V = self.V
        raw: LoopSum = {}
        top = V.weight(am) + V.weight(bm) - 1
        for i in range(top + 1):
            c = rat_binomial(p, i)
            if not c:
                continue
            for m, cm in V.mode_mono(am, i, bm).items():
                axpy(raw, c * cm, {(m, p + q - i): Fraction(1)})
        out = self.d_normalize(raw)
        want = self.degree(a) + self.degree(b)
        for k in out:
            if self.degree(k) != want:
                raise AssertionError(f"bracket of {a} and {b} is not of degree {want}")
        return out

    def bracket(self, x: LoopSum, y: LoopSum) -> LoopSum:
        out: LoopSum = {}
        for a, ca in x.items():
            for b, cb in y.items():
                axpy(out, ca * cb, self.bracket_keys(a, b))
        return out

    # -- representation on modules
    def act(self, M, x: LoopSum, w: dict) -> dict:
        """Action of ``x`` on a module vector through ``a(q) -> a_q``."""
        out: dict = {}
        for (mono, q), c in x.items():
            axpy(out, c, M.act({mono: Fraction(1)}, q, w))
        return out

    def describe(self, x: LoopSum) -> str:
        if not x:
            return "0"
        terms = sorted(x.items(), key=lambda kv: (order_key(kv[0][0]), kv[0][1]))
        return " + ".join(f"({fmt(c)}) [{self.V.describe(m)}]({fmt(q)})" for (m, q), c in terms)


def project_to_algebra(L: LoopAlgebra, x: LoopSum, pres: AlgebraPresentation) -> dict:
    """Class of ``sum c a`` in ``A_{g,n}(V)`` for a degree 0 sum ``sum c a(wt a - 1)``,
    returned as a reduced vector."""
    vec: dict = {}
    for (mono, q), c in x.items():
        if L.degree((mono, q)) != 0:
            raise ValueError("only degree 0 loop elements map to the algebra")
        axpy(vec, c, {mono: Fraction(1)})
    return pres.reduce(vec)


# ---------------------------------------------------------------------------
# generator sets and checks


def generators(V: VOA, bound="5/2") -> list[LoopSum]:
    """``a(q)`` and ``omega(q)`` for the strong generator ``a`` and the
    conformal vector, with ``|q| <= bound``."""
    bound = rat(bound)
    L = LoopAlgebra(V)
    out = []
    seeds = [V.generator_mono]
    omega = V.omega
    if list(omega) != [V.generator_mono]:
        seeds.append(omega)
    for s in seeds:
        vec = {s: Fraction(1)} if isinstance(s, tuple) else s
        (_, r), = V.homogeneous_parts(vec)
        off = Fraction(r % V.T, V.T)
        j = -int(bound) - 2
        while off + j <= bound:
            if abs(off + j) <= bound:
                out.append(L.element(vec, off + j))
            j += 1
    return out


def check_jacobi(L: LoopAlgebra, elems: list[LoopSum]) -> dict:
    fails, tested = [], 0
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            for k, z in enumerate(elems):
                if not i <= j <= k:
                    continue
                tot = vsum(L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x)),
                           L.bracket(z, L.bracket(x, y)))
                tested += 1
                if tot:
                    fails.append({"x": L.describe(x), "y": L.describe(y), "z": L.describe(z),
                                  "sum": L.describe(tot)})
    return make_report("jacobi", {"voa": L.V.config(), "elements": len(elems)}, fails, tested)


def check_antisymmetry(L: LoopAlgebra, elems: list[LoopSum]) -> dict:
    fails, tested = [], 0
    for x in elems:
        for y in elems:
            tested += 1
            tot = vsum(L.bracket(x, y), L.bracket(y, x))
            if tot:
                fails.append({"x": L.describe(x), "y": L.describe(y)})
    return make_report("antisymmetry", {"voa": L.V.config(), "elements": len(elems)}, fails, tested)


def check_module_bracket(L: LoopAlgebra, M: GradedModule, elems: list[LoopSum], D) -> dict:
    """The action of ``[x, y]`` on pieces ``<= D`` equals the commutator of actions."""
    fails, tested = [], 0
    states = [b for d in M.degrees_up_to(D) for b in M.basis(d)]
    for x in elems:
        for y in elems:
            xy = L.bracket(x, y)
            for st in states:
                w = {st: Fraction(1)}
                lhs = L.act(M, xy, w)
                rhs = axpy(L.act(M, x, L.act(M, y, w)), -1, L.act(M, y, L.act(M, x, w)))
                tested += 1
                if lhs != rhs:
                    fails.append({"x": L.describe(x), "y": L.describe(y), "state": M.describe(st)})
    return make_report("module-bracket", {"module": M.config(), "D": fmt(rat(D))}, fails, tested)


def check_lie_homomorphism(L: LoopAlgebra, pres: AlgebraPresentation) -> dict:
    """``[u(wt u-1), v(wt v-1)]`` maps to ``u*v - v*u`` for safe pairs in ``V^0``."""
    V, n = pres.voa, pres.level
    fails, tested = [], 0
    even = [b for b in V.basis_up_to(pres.cutoff) if V.label(b) % n.T == 0]
    for u in even:
        for v in even:
            if V.weight(u) + V.weight(v) + 2 * n.l > pres.cutoff:
                continue
            x, y = L.element(u, V.weight(u) - 1), L.element(v, V.weight(v) - 1)
            lhs = project_to_algebra(L, L.bracket(x, y), pres)
            ux, vx = {u: Fraction(1)}, {v: Fraction(1)}
            rhs = pres.reduce(axpy(star(V, ux, vx, n), -1, star(V, vx, ux, n)))
            tested += 1
            if lhs != rhs:
                fails.append({"u": V.describe(u), "v": V.describe(v)})
    params = {"voa": V.config(), "level": str(n), "cutoff": pres.cutoff}
    return make_report("lie-homomorphism", params, fails, tested)


def dl_samples(M, count: int = 20, max_weight: int = 2, seed: int = 0) -> list[tuple]:
    """Deterministic sample of ``(u, v, p, s, t)`` with admissible ``s, t``."""
    V = M.voa
    rng = random.Random(seed)
    basis = [b for b in V.basis_up_to(max_weight) if b]
    out = []
    seen = set()
    tries = 0
    while len(out) < count and tries < 100 * count:
        tries += 1
        u, v = rng.choice(basis), rng.choice(basis)
        p = rng.randint(-3, 2)
        su = M.index_offset(V.label(u)) + rng.randint(-2, 2)
        tv = M.index_offset(V.label(v)) + rng.randint(-2, 2)
        key = (u, v, p, su, tv)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    return out


def check_dl_identity(M, D=4, count: int = 20, max_weight: int = 2, seed: int = 0) -> dict:
    fails, tested = [], 0
    for u, v, p, s, t in dl_samples(M, count, max_weight, seed):
        rep = dl_identity_check(M, {u: Fraction(1)}, {v: Fraction(1)}, p, s, t, D)
        tested += rep["tested"]
        if rep["status"] != "pass":
            fails.append(rep["params"])
    cfg = M.config() if hasattr(M, "config") and not isinstance(M, VOA) else {"adjoint": M.config()}
    return make_report("dl-identity", {"module": cfg, "D": fmt(rat(D)), "instances": count}, fails, tested)


__all__ = ["LoopAlgebra", "LoopSum", "project_to_algebra", "generators", "check_jacobi",
           "check_antisymmetry", "check_module_bracket", "check_lie_homomorphism", "dl_samples",
           "check_dl_identity", "dl_identity_check", "mode_index_ok"]
