"""Graded (twisted) modules, the subspaces ``Omega_n(M)`` and zero modes.

A module only has to say how the strong generator of its VOA acts on
basis monomials; every other mode comes from :class:`ModeEngine`.  All
actions are exact and unbounded: a module is never truncated, only the
pieces we look at are.  Operators are therefore compared on pieces
``M(d)``, ``d <= D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .exact import axpy, fmt, kernel, rat, rat_binomial, vsub
from .voa import VOA, Heisenberg, ModeEngine, Virasoro, VirasoroHW, insert_part, partitions, remove_part
from .zhu import (AlgebraPresentation, LevelIndex, circle_exponent, circle_pole, contraction_pole,
                  delta, make_report, residue)


class GradedModule(ModeEngine):
    """A ``(1/T)Z``-graded module with basis monomials ``x`` of degree ``degree(x)``."""

    family = "abstract"

    def __init__(self, voa: VOA):
        super().__init__()
        self.voa = voa

    def basis(self, d) -> list[tuple]:
        raise NotImplementedError

    def degrees_up_to(self, D) -> list[Fraction]:
        D = rat(D)
        T = self.twist
        return [Fraction(k, T) for k in range(floor(D * T) + 1)]

    def lowest(self) -> tuple:
        return ()

    def action(self, a: dict, m, w: dict) -> dict:
        """``a_m w`` with the exact degree shift checked on every component."""
        m = rat(m)
        out = self.act(a, m, w)
        V = self.voa
        allowed = set()
        for am in a:
            for xm in w:
                allowed.add(self.degree(xm) + V.weight(am) - m - 1)
        for y in out:
            if self.degree(y) not in allowed:
                raise AssertionError(f"degree mismatch in action of mode {m}")
        return out

    def config(self) -> dict:
        return {"family": self.family}


class FockUntwisted(GradedModule):
    """Heisenberg Fock space with ``a(0)`` acting by ``lam``."""

    family = "fock"

    def __init__(self, voa: Heisenberg, lam=0):
        if not isinstance(voa, Heisenberg):
            raise TypeError("Fock modules need the Heisenberg VOA")
        super().__init__(voa)
        self.lam = rat(lam)

    def degree(self, x: tuple):
        return sum(x)

    def basis(self, d) -> list[tuple]:
        d = rat(d)
        if d.denominator != 1 or d < 0:
            return []
        return list(partitions(int(d)))

    def gen_mode(self, m, x: tuple) -> dict:
        m = rat(m)
        if m.denominator != 1:
            raise ValueError(f"mode index {m} not admissible on an untwisted module")
        m = int(m)
        if m < 0:
            return {insert_part(x, -m): Fraction(1)}
        if m == 0:
            return {x: self.lam} if self.lam else {}
        k = x.count(m)
        return {remove_part(x, m): Fraction(m * k)} if k else {}

    def describe(self, x: tuple) -> str:
        return " ".join(f"a(-{k})" for k in x) + (" " if x else "") + "v"

    def config(self) -> dict:
        return {"family": self.family, "lambda": fmt(self.lam)}


class FockTwisted(GradedModule):
    """The ``a -> -a`` twisted Fock space.

    A monomial is a weakly decreasing tuple of odd positive ``k`` standing
    for ``a(-k/2)...`` applied to the lowest weight vector; its degree is
    ``sum(k)/2``.
    """

    family = "fock_twisted"

    def __init__(self, voa: Heisenberg):
        if not isinstance(voa, Heisenberg) or voa.T != 2:
            raise TypeError("the twisted Fock module needs the Heisenberg VOA with twist order 2")
        super().__init__(voa)

    @property
    def twist(self) -> int:
        return 2

    def degree(self, x: tuple):
        return Fraction(sum(x), 2)

    def basis(self, d) -> list[tuple]:
        d2 = rat(d) * 2
        if d2.denominator != 1 or d2 < 0:
            return []
        return [p for p in partitions(int(d2)) if all(k % 2 for k in p)]

    def gen_mode(self, m, x: tuple) -> dict:
        m = rat(m)
        k = 2 * m
        if k.denominator != 1 or k.numerator % 2 == 0:
            raise ValueError(f"mode index {m} not admissible on the twisted module")
        k = int(k)
        if k < 0:
            return {insert_part(x, -k): Fraction(1)}
        c = x.count(k)
        return {remove_part(x, k): m * c} if c else {}

    def describe(self, x: tuple) -> str:
        return " ".join(f"a(-{k}/2)" for k in x) + (" " if x else "") + "v"


class VirasoroVerma(GradedModule):
    """Verma module of lowest weight ``h`` over the Virasoro VOA."""

    family = "virasoro_verma"

    def __init__(self, voa: Virasoro, h=0):
        if not isinstance(voa, Virasoro):
            raise TypeError("Verma modules need the Virasoro VOA")
        super().__init__(voa)
        self.h = rat(h)
        self.hw = VirasoroHW(voa.central_charge, self.h, vacuum=False)

    def degree(self, x: tuple):
        return sum(x)

    def basis(self, d) -> list[tuple]:
        d = rat(d)
        if d.denominator != 1 or d < 0:
            return []
        return list(partitions(int(d)))

    def gen_mode(self, m, x: tuple) -> dict:
        m = rat(m)
        if m.denominator != 1:
            raise ValueError(f"mode index {m} not admissible on an untwisted module")
        return self.hw.apply(int(m) - 1, x)

    def describe(self, x: tuple) -> str:
        return " ".join(f"L(-{k})" for k in x) + (" " if x else "") + "v"

    def config(self) -> dict:
        return {"family": self.family, "h": fmt(self.h)}


def make_module(family: str, voa: VOA, param="0") -> GradedModule:
    if family == "fock":
        return FockUntwisted(voa, param)
    if family == "fock_twisted":
        return FockTwisted(voa)
    if family == "virasoro_verma":
        return VirasoroVerma(voa, param)
    raise ValueError(f"unknown module family {family!r}")


def piece_basis(M: ModeEngine, d) -> list[tuple]:
    """Basis of the degree ``d`` piece; also works for a VOA as its own module."""
    if isinstance(M, VOA):
        d = rat(d)
        return M.basis_of_weight(int(d)) if d.denominator == 1 and d >= 0 else []
    return M.basis(d)


# ---------------------------------------------------------------------------
# mode operators


def mode_index_ok(M: ModeEngine, label: int, q) -> bool:
    return (rat(q) - M.index_offset(label)).denominator == 1


def o_index(V: VOA, v: tuple, p) -> Fraction:
    """Mode index of ``o_p(v) = v_{wt v - 1 - p}``."""
    return V.weight(v) - 1 - rat(p)


def o_apply(M: ModeEngine, v: dict, p, w: dict) -> dict:
    """``o_p(v) w`` for homogeneous ``v``; raises on an inadmissible index."""
    V = M.voa
    parts = V.homogeneous_parts(v)
    if len(parts) != 1:
        raise ValueError("o_p needs a homogeneous vector")
    (wt, r), = parts
    q = wt - 1 - rat(p)
    M.check_index(r, q)
    return M.act(v, q, w)


def o_operator(M: ModeEngine, v: dict, p):
    """The operator ``o_p(v)``, shifting degree by ``p``."""
    V = M.voa
    parts = V.homogeneous_parts(v)
    if len(parts) != 1:
        raise ValueError("o_p needs a homogeneous vector")
    (wt, r), = parts
    M.check_index(r, wt - 1 - rat(p))
    return lambda w: o_apply(M, v, p, w)


def zero_mode(M: ModeEngine, x: dict, w: dict) -> dict:
    """``o(x) w``, linear in ``x``.

    Components of ``x`` in ``V^r`` with no integral modes on ``M`` (that
    is, ``r != 0`` on a twisted module) contribute nothing.
    """
    V = M.voa
    out: dict = {}
    for (wt, r), part in V.homogeneous_parts(x).items():
        if not mode_index_ok(M, r, 0):
            continue
        axpy(out, 1, M.act(part, wt - 1, w))
    return out


# ---------------------------------------------------------------------------
# Omega_n


@dataclass
class OmegaSubspace:
    module: GradedModule
    n: Fraction
    D: Fraction
    strict: bool
    pieces: dict = field(default_factory=dict)

    def dims(self) -> dict:
        return {d: len(vs) for d, vs in self.pieces.items()}

    def vectors(self):
        for d in sorted(self.pieces):
            yield from self.pieces[d]

    def to_json(self) -> dict:
        return {"module": self.module.config(), "n": fmt(self.n), "D": fmt(self.D),
                "strict": self.strict, "dims": {fmt(d): k for d, k in sorted(self.dims().items())}}


def lowering_modes(M: ModeEngine, d, n, weight_cutoff: int, strict: bool = True):
    """Pairs ``(v, m)`` with ``v`` a VOA basis vector and ``v_m`` of degree in
    ``[-d, -n)`` (or ``[-d, -n]`` when not ``strict``)."""
    V = M.voa
    d, n = rat(d), rat(n)
    T = M.twist
    for v in V.basis_up_to(weight_cutoff):
        if not v:
            continue
        wt, r = V.weight(v), V.label(v)
        off = M.index_offset(r)
        # degree k = wt - 1 - m with m = off + integer
        lo = floor((wt - 1 - off + d))
        for j in range(lo, -10 ** 6, -1):
            m = off + j
            k = wt - 1 - m
            if k < -d:
                continue
            if k > -n or (strict and k == -n):
                break
            yield v, m


def omega_extract(M: GradedModule, n, D, strict: bool = True,
                  weight_cutoff: int | None = None) -> OmegaSubspace:
    """Joint kernel of all lowering modes of degree below ``-n``, per piece."""
    if isinstance(n, LevelIndex):
        n = n.value
    n, D = rat(n), rat(D)
    if D < n:
        raise ValueError("degree cutoff must be at least n")
    if weight_cutoff is None:
        weight_cutoff = max(2, floor(D) + 1)
    V = M.voa
    out = OmegaSubspace(M, n, D, strict)
    for d in M.degrees_up_to(D):
        basis = M.basis(d)
        ops = list(lowering_modes(M, d, n, weight_cutoff, strict))
        images = []
        for b in basis:
            img: dict = {}
            for idx, (v, m) in enumerate(ops):
                for y, c in M.act_mono(v, m, b).items():
                    img[(idx, y)] = c
            images.append(img)
        ker = kernel(images)
        out.pieces[d] = [{basis[j]: c for j, c in sorted(kv.items())} for kv in ker]
    return out


# ---------------------------------------------------------------------------
# checks


def _mparams(M: GradedModule, **extra) -> dict:
    p = {"module": M.config(), "voa": M.voa.config()}
    p.update({k: (fmt(v) if isinstance(v, Fraction) else v) for k, v in extra.items()})
    return p


def _vec_str(M: ModeEngine, vec: dict) -> str:
    if not vec:
        return "0"
    desc = getattr(M, "describe", None)
    return " + ".join(f"({fmt(c)}) {desc(x) if desc else x}" for x, c in sorted(vec.items()))


def contraction(V: VOA, u: dict, v: dict, k: int, n: LevelIndex) -> dict:
    """The vector ``w`` with ``o_p(u) o_{-p}(v) = o(w)`` on ``Omega_n``,
    ``p = l + delta_i(T-r) - k - r/T``."""
    wu, r = next(iter(_homog(V, u)))
    _, s = next(iter(_homog(V, v)))
    T = n.T
    if (r + s) % T:
        raise ValueError("u and v must lie in V^r and V^{T-r}")
    if not 0 <= k <= n.l:
        raise ValueError("k must satisfy 0 <= k <= l")
    B = contraction_pole(r, n)
    e = wu + n.l - 1 + delta(n.i, r, T) + Fraction(r, T)
    out: dict = {}
    for m in range(k + 1):
        c = (-1) ** m * rat_binomial(B - 1 + m - k, m)
        for um, cu in u.items():
            axpy(out, c * cu, residue(V, um, v, e, B - k + m))
    return out


def contraction_p(r: int, k: int, n: LevelIndex) -> Fraction:
    return n.l + delta(n.i, n.T - r, n.T) - k - Fraction(r, n.T)


def _homog(V: VOA, x: dict):
    parts = V.homogeneous_parts(x)
    if len(parts) != 1:
        raise ValueError("vector must be homogeneous")
    return parts


def check_contraction(M: GradedModule, n: LevelIndex, D, max_weight: int = 3,
                      omega: OmegaSubspace | None = None) -> dict:
    """``o_p(u) o_{-p}(v) = o(w_{u,v})`` on ``Omega_n(M)`` for basis ``u, v``."""
    V = M.voa
    if M.twist != n.T:
        raise ValueError("module twist order and level denominator differ")
    if omega is None:
        omega = omega_extract(M, n, D)
    basis = [b for b in V.basis_up_to(max_weight)]
    fails, tested = [], 0
    for u in basis:
        r = V.label(u)
        for v in basis:
            if (r + V.label(v)) % n.T:
                continue
            for k in range(n.l + 1):
                p = contraction_p(r, k, n)
                ux, vx = {u: Fraction(1)}, {v: Fraction(1)}
                w = contraction(V, ux, vx, k, n)
                for x in omega.vectors():
                    lhs = o_apply(M, ux, p, o_apply(M, vx, -p, x))
                    rhs = zero_mode(M, w, x)
                    tested += 1
                    if lhs != rhs:
                        fails.append({"u": V.describe(u), "v": V.describe(v), "k": k,
                                      "p": fmt(p), "state": _vec_str(M, x)})
    return make_report("contraction", _mparams(M, level=str(n), D=rat(D)), fails, tested)


def dl_terms(M: ModeEngine, u: dict, v: dict, p: int, sb, tb, x: dict) -> tuple[dict, dict]:
    """Both sides of the twisted commutator/associator identity applied to ``x``::

        sum_m (-1)^m C(p,m) (u_{p+sb-m} v_{tb+m} - (-1)^p v_{p+tb-m} u_{sb+m})
            = sum_m C(sb,m) (u_{p+m} v)_{sb+tb-m}
    """
    V = M.voa
    sb, tb = rat(sb), rat(tb)
    (wu, _), = V.homogeneous_parts(u)
    (wv, _), = V.homogeneous_parts(v)
    d = max(M.degree(y) for y in x) if x else 0
    lhs: dict = {}
    m = 0
    while d + wv - 1 - tb - m >= 0:
        c = (-1) ** m * rat_binomial(p, m)
        if c:
            axpy(lhs, c, M.act(u, p + sb - m, M.act(v, tb + m, x)))
        m += 1
    m = 0
    sign = -1 if p % 2 else 1
    while d + wu - 1 - sb - m >= 0:
        c = (-1) ** m * rat_binomial(p, m)
        if c:
            axpy(lhs, -sign * c, M.act(v, p + tb - m, M.act(u, sb + m, x)))
        m += 1
    rhs: dict = {}
    m = 0
    while wu + wv - p - m - 1 >= 0:
        c = rat_binomial(sb, m)
        if c:
            y = V.act(u, p + m, v)
            if y:
                axpy(rhs, c, M.act(y, sb + tb - m, x))
        m += 1
    return lhs, rhs


def dl_identity_check(M: ModeEngine, u: dict, v: dict, p: int, sb, tb, D) -> dict:
    """Check the identity of :func:`dl_terms` on every piece of degree ``<= D``."""
    V = M.voa
    (_, r), = V.homogeneous_parts(u)
    (_, s), = V.homogeneous_parts(v)
    if not (mode_index_ok(M, r, sb) and mode_index_ok(M, s, tb)):
        raise ValueError("s and t incompatible with the eigenvalues of u and v")
    if isinstance(M, VOA):
        degrees = [Fraction(k) for k in range(floor(rat(D)) + 1)]
    else:
        degrees = M.degrees_up_to(D)
    fails, tested = [], 0
    for d in degrees:
        for b in piece_basis(M, d):
            lhs, rhs = dl_terms(M, u, v, p, sb, tb, {b: Fraction(1)})
            tested += 1
            if lhs != rhs:
                fails.append({"state": _vec_str(M, {b: 1}), "difference": _vec_str(M, vsub(lhs, rhs))})
    params = {"u": _vec_str(V, u), "v": _vec_str(V, v), "p": p, "s": fmt(rat(sb)), "t": fmt(rat(tb)),
              "D": fmt(rat(D))}
    return make_report("dl-identity", params, fails, tested)


def commutator_consistency(M: GradedModule, D, max_weight: int = 3, mode_span: int = 4) -> dict:
    """``[a_p, b_q] = sum_i C(p,i) (a_i b)_{p+q-i}`` on pieces ``<= D``.

    ``a, b`` range over VOA basis vectors of weight ``<= max_weight`` and
    ``p, q`` over admissible indices whose modes shift degree by at most
    ``mode_span``.
    """
    V = M.voa
    D = rat(D)
    basis = [b for b in V.basis_up_to(max_weight) if b]
    states = [(d, b) for d in M.degrees_up_to(D) for b in M.basis(d)]

    def indices(v):
        wt, r = V.weight(v), V.label(v)
        off = M.index_offset(r)
        return [off + j for j in range(floor(wt - 1 - off - mode_span), floor(wt - 1 - off + mode_span) + 1)
                if abs(wt - 1 - off - j) <= mode_span]

    fails, tested = [], 0
    for a in basis:
        ax = {a: Fraction(1)}
        wa = V.weight(a)
        for b in basis:
            bx = {b: Fraction(1)}
            wb = V.weight(b)
            for p in indices(a):
                for q in indices(b):
                    for d, st in states:
                        if d + (wa - 1 - p) + (wb - 1 - q) < 0:
                            continue
                        x = {st: Fraction(1)}
                        lhs = vsub(M.act(ax, p, M.act(bx, q, x)), M.act(bx, q, M.act(ax, p, x)))
                        rhs: dict = {}
                        i = 0
                        while wa + wb - i - 1 >= 0:
                            c = rat_binomial(p, i)
                            if c:
                                y = V.act(ax, i, bx)
                                if y:
                                    axpy(rhs, c, M.act(y, p + q - i, x))
                            i += 1
                        tested += 1
                        if lhs != rhs:
                            fails.append({"a": V.describe(a), "b": V.describe(b), "p": fmt(p),
                                          "q": fmt(q), "state": _vec_str(M, x)})
    return make_report("module-commutator", _mparams(M, D=D, max_weight=max_weight), fails, tested)


def _is_zero_on(M: GradedModule, op, vectors) -> list:
    bad = []
    for x in vectors:
        y = op(x)
        if y:
            bad.append((x, y))
    return bad


def check_representation(pres: AlgebraPresentation, M: GradedModule, D,
                         omega: OmegaSubspace | None = None, mechanism_weight: int | None = None) -> dict:
    """Zero modes of ``O_{g,n}(V)`` vanish on ``Omega_n(M)`` and
    ``o(a * b) = o(a) o(b)`` there for safe pairs in ``V^0``.

    The vanishing is also checked through the rearrangement used to prove
    it: for each circle type generator the identity of :func:`dl_terms`
    writes its zero mode as a sum of products each ending in a mode that
    lowers degree by more than ``n``, and every such product is verified
    to kill ``Omega_n(M)`` separately.
    """
    V, n = pres.voa, pres.level
    if M.voa is not V:
        raise ValueError("module and presentation use different VOAs")
    if M.twist != n.T:
        raise ValueError("module twist order and level denominator differ")
    if omega is None:
        omega = omega_extract(M, n, D)
    vecs = list(omega.vectors())
    fails, tested = [], 0
    for x in pres.spanning:
        tested += 1
        for st, y in _is_zero_on(M, lambda w: zero_mode(M, x, w), vecs):
            fails.append({"kind": "relation", "relation": _vec_str(V, x), "state": _vec_str(M, st)})
            break
    if mechanism_weight is None:
        mechanism_weight = pres.cutoff
    fails_m, tested_m = _mechanism(pres, M, vecs, mechanism_weight)
    fails += fails_m
    tested += tested_m
    even = [b for b in pres.voa.basis_up_to(pres.cutoff) if V.label(b) % n.T == 0]
    for a in even:
        for b in even:
            if V.weight(a) + V.weight(b) + 2 * n.l > pres.cutoff:
                continue
            ax, bx = {a: Fraction(1)}, {b: Fraction(1)}
            ab = pres_star(pres, ax, bx)
            for st in vecs:
                tested += 1
                lhs = zero_mode(M, ab, st)
                rhs = zero_mode(M, ax, zero_mode(M, bx, st))
                if lhs != rhs:
                    fails.append({"kind": "product", "a": V.describe(a), "b": V.describe(b),
                                  "state": _vec_str(M, st)})
    return make_report("representation", _mparams(M, level=str(n), D=rat(D), cutoff=pres.cutoff), fails,
                       tested)


def pres_star(pres: AlgebraPresentation, a: dict, b: dict) -> dict:
    from .zhu import star

    return star(pres.voa, a, b, pres.level)


def _mechanism(pres: AlgebraPresentation, M: GradedModule, vecs: list, max_weight: int):
    V, n = pres.voa, pres.level
    fails, tested = [], 0
    basis = [b for b in V.basis_up_to(max_weight) if b]
    for u in basis:
        r = V.label(u)
        wu = V.weight(u)
        for v in basis:
            if (r + V.label(v)) % n.T:
                # o(u o v) has no zero mode then
                continue
            wv = V.weight(v)
            for mm in range(pres.depth + 1):
                B = circle_pole(r, n) + mm
                if wu + wv + B - 1 > pres.relation_cutoff:
                    continue
                for k in range(mm + 1):
                    sb = circle_exponent(wu, r, n) + k
                    tb = wu + wv + B - 2 - sb
                    ux, vx = {u: Fraction(1)}, {v: Fraction(1)}
                    x = residue(V, u, vx, sb, B)
                    tested += 1
                    for st in vecs:
                        d = M.degree(next(iter(st)))
                        direct = zero_mode(M, x, st)
                        lhs, rhs = dl_terms(M, ux, vx, -B, sb, tb, st)
                        killed = all(not M.act(vx, tb + j, st) for j in range(int(d + wv - tb) + 2)) and \
                            all(not M.act(ux, sb + j, st) for j in range(int(d + wu - sb) + 2))
                        if direct or lhs or rhs != direct or not killed:
                            fails.append({"kind": "mechanism", "u": V.describe(u), "v": V.describe(v),
                                          "k": k, "m": mm, "state": _vec_str(M, st)})
                            break
    return fails, tested


def check_layers(M: GradedModule, n, D, omega: OmegaSubspace | None = None, irreducible: bool = True) -> dict:
    """``Omega_n(M)`` contains ``M(0) + ... + M(n)``; equality for irreducible ``M``."""
    if isinstance(n, LevelIndex):
        n = n.value
    n = rat(n)
    if omega is None:
        omega = omega_extract(M, n, D)
    fails, tested = [], 0
    for d in M.degrees_up_to(D):
        dim = len(M.basis(d))
        got = len(omega.pieces[d])
        tested += 1
        if d <= n and got != dim:
            fails.append({"degree": fmt(d), "omega_dim": got, "piece_dim": dim})
        if d > n and irreducible and got:
            fails.append({"degree": fmt(d), "omega_dim": got, "piece_dim": dim})
    return make_report("layers", _mparams(M, n=n, D=rat(D)), fails, tested)


def l0_spectrum(M: GradedModule, D) -> dict:
    """Eigenvalues of ``o(omega) = L(0)`` on each piece, which must act as scalars."""
    V = M.voa
    out = {}
    for d in M.degrees_up_to(D):
        vals = set()
        for b in M.basis(d):
            img = zero_mode(M, V.omega, {b: Fraction(1)})
            c = img.get(b, Fraction(0))
            if img != ({b: c} if c else {}):
                raise ArithmeticError(f"L(0) is not diagonal on degree {d}")
            vals.add(c)
        if len(vals) > 1:
            raise ArithmeticError(f"L(0) is not scalar on degree {d}")
        out[d] = vals.pop() if vals else None
    return out


def check_layer_spectra(modules: list[GradedModule], D) -> dict:
    """Distinct lowest ``L(0)`` eigenvalues across ``modules`` and distinct
    eigenvalues across the pieces of each module."""
    fails, tested = [], 0
    lowest = {}
    for M in modules:
        spectrum = l0_spectrum(M, D)
        vals = [v for v in spectrum.values() if v is not None]
        tested += 1
        if len(set(vals)) != len(vals):
            fails.append({"module": M.config(), "spectrum": [fmt(v) for v in vals]})
        key = spectrum[Fraction(0)]
        if key in lowest:
            fails.append({"module": M.config(), "same_lowest_as": lowest[key], "value": fmt(key)})
        lowest[key] = M.config()
    params = {"modules": [M.config() for M in modules], "D": fmt(rat(D)),
              "lowest": {json_key(m): fmt(k) for k, m in lowest.items()}}
    return make_report("layer-spectra", params, fails, tested)


def json_key(cfg: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(cfg.items()))
