"""The lattice-extended basic representation and the relation verifier.

Vectors live in sectors (alpha, n): a root-lattice point and a Fock degree.
E_{i,m} acts by the minus-side vertex complex class with parameter
k = <alpha,alpha_i> + 1 + m, translating alpha by +alpha_i with the
Frenkel-Kac sign; F_{i,m} acts by the plus-side class with parameter
computed from its target weight, k = <alpha,alpha_i> - 1 - m in source
terms, translating by -alpha_i with the inverse-translation sign.

Every individual evaluation is exact: the infinite complexes act locally
finitely because words whose annihilation part exceeds the sector's Fock
degree kill it.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .coeff import LaurentPoly, quantum_integer
from .dynkin import RootLattice, RootLatticeElement, Sector
from .fock import FockSpace
from .heisalg import HeisElement, HeisenbergAlgebra
from .symfun import Multipartition


class OperatorSpec:
    """E or F with a node and a loop mode."""

    __slots__ = ("kind", "i", "m")

    def __init__(self, kind: str, i, m: int):
        if kind not in ("E", "F"):
            raise ValueError("kind must be 'E' or 'F'")
        self.kind = kind
        self.i = i
        self.m = m

    def __repr__(self) -> str:
        return f"{self.kind}_{{{self.i},{self.m}}}"


class BasicVector:
    """Map (alpha, multipartition) -> LaurentPoly."""

    __slots__ = ("rep", "terms")

    def __init__(self, rep: "BasicRepresentation",
                 terms: Dict[Tuple[RootLatticeElement, Multipartition], LaurentPoly]):
        self.rep = rep
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def __add__(self, other: "BasicVector") -> "BasicVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return BasicVector(self.rep, out)

    def __sub__(self, other: "BasicVector") -> "BasicVector":
        return self + other.scale(LaurentPoly.from_scalar(-1))

    def scale(self, c: LaurentPoly) -> "BasicVector":
        if c.is_zero():
            return BasicVector(self.rep, {})
        return BasicVector(self.rep, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BasicVector) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"BasicVector({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (str(k[0]), k[1]))
        return " + ".join(f"({self.terms[k]}) * e^({k[0]}) {k[1]}" for k in keys)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {
                    "alpha": {str(n): c for n, c in k[0].coords},
                    "mu": {str(n): list(lam.parts) for n, lam in k[1].items()},
                    "coeff": str(self.terms[k]),
                }
                for k in sorted(self.terms, key=lambda k: (str(k[0]), k[1]))
            ]
        }


class BasicRepresentation:
    """F tensor k(q)[Y] with the vertex-operator action of E_{i,m}, F_{i,m}.

    fsign "a" translates F by right multiplication with e^{-alpha_i} and one
    global minus sign per application, so the sector sign is
    -eps(alpha, alpha_i); "b" drops the minus sign and serves as the
    negative control.  Right multiplication is forced by commutation of
    E_i with F_j across an edge; the overall minus is forced by the
    [E_{i,a}, F_{i,-a}] instances on the vacuum.
    """

    def __init__(self, algebra: HeisenbergAlgebra, fsign: str = "a",
                 flip_cocycle: bool = False):
        if fsign not in ("a", "b"):
            raise ValueError("fsign must be 'a' or 'b'")
        self.algebra = algebra
        self.fock = FockSpace(algebra)
        self.lattice = RootLattice(algebra.graph, flip_diagonal=flip_cocycle)
        self.fsign = fsign
        self._class_cache: Dict[Tuple, HeisElement] = {}

    # -- vectors -------------------------------------------------------------

    def zero(self) -> BasicVector:
        return BasicVector(self, {})

    def vacuum(self) -> BasicVector:
        from .symfun import EMPTY_MULTI
        return BasicVector(self, {(RootLatticeElement.zero(), EMPTY_MULTI): LaurentPoly.one()})

    def basis_vector(self, alpha: RootLatticeElement, mu: Multipartition) -> BasicVector:
        return BasicVector(self, {(alpha, mu): LaurentPoly.one()})

    def basis(self, lattice_radius: int, degree_cap: int):
        """All basis vectors (alpha, mu) within the given truncation."""
        for alpha in self.lattice.ball(lattice_radius):
            for n in range(degree_cap + 1):
                for mu in self.fock.basis(n):
                    yield (alpha, mu)

    # -- actions ---------------------------------------------------------------

    def apply_heis(self, a: HeisElement, v: BasicVector) -> BasicVector:
        """P/Q act sector-wise, preserving alpha."""
        out: Dict[Tuple[RootLatticeElement, Multipartition], LaurentPoly] = {}
        for (alpha, mu), c in v.terms.items():
            img = self.fock.act(a, self.fock.basis_vector(mu))
            for key, ci in img.terms.items():
                k2 = (alpha, key)
                s = out.get(k2)
                add = c * ci
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(k2, None)
                else:
                    out[k2] = s
        return BasicVector(self, out)

    def _minus_class(self, i, k: int, cap: int) -> HeisElement:
        key = ("minus", i, k, cap)
        hit = self._class_cache.get(key)
        if hit is None:
            hit = self.algebra.class_C("minus", i, k, cap)
            self._class_cache[key] = hit
        return hit

    def _plus_class(self, i, k: int, cap: int) -> HeisElement:
        key = ("plus", i, k, cap)
        hit = self._class_cache.get(key)
        if hit is None:
            hit = self.algebra.class_C("plus", i, k, cap)
            self._class_cache[key] = hit
        return hit

    def apply_E(self, i, m: int, v: BasicVector, cap_extra: int = 0) -> BasicVector:
        """One vertex-operator component: Fock part C^-(k), lattice shift +alpha_i."""
        out: Dict[Tuple[RootLatticeElement, Multipartition], LaurentPoly] = {}
        ai = RootLatticeElement.simple(i)
        for (alpha, mu), c in v.terms.items():
            n = mu.size()
            k = self.lattice.pair_root(alpha, i) + 1 + m
            if n - k < 0:
                continue  # target sector is the zero object
            sign = self.lattice.cocycle(ai, alpha)
            elem = self._minus_class(i, k, n + cap_extra)
            img = self.fock.act(elem, self.fock.basis_vector(mu))
            tgt = alpha + ai
            cc = c if sign == 1 else -c
            for key, ci in img.terms.items():
                k2 = (tgt, key)
                s = out.get(k2)
                add = cc * ci
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(k2, None)
                else:
                    out[k2] = s
        return BasicVector(self, out)

    def apply_F(self, i, m: int, v: BasicVector, cap_extra: int = 0) -> BasicVector:
        """The partner component: Fock part C^+(k), lattice shift -alpha_i.

        k = <alpha,alpha_i> - 1 - m in terms of the source sector alpha; the
        defining parameter <lambda,alpha_i> + 1 - m reads off the target
        weight lambda, which sits at alpha - alpha_i.
        """
        out: Dict[Tuple[RootLatticeElement, Multipartition], LaurentPoly] = {}
        ai = RootLatticeElement.simple(i)
        for (alpha, mu), c in v.terms.items():
            n = mu.size()
            k = self.lattice.pair_root(alpha, i) - 1 - m
            if n + k < 0:
                continue
            if self.fsign == "a":
                sign = -self.lattice.cocycle(alpha, ai)
            else:
                sign = self.lattice.cocycle(alpha, ai)
            elem = self._plus_class(i, k, n + cap_extra)
            img = self.fock.act(elem, self.fock.basis_vector(mu))
            tgt = alpha - ai
            cc = c if sign == 1 else -c
            for key, ci in img.terms.items():
                k2 = (tgt, key)
                s = out.get(k2)
                add = cc * ci
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(k2, None)
                else:
                    out[k2] = s
        return BasicVector(self, out)

    def apply_divided_E(self, i, m: int, r: int, v: BasicVector) -> BasicVector:
        """Class of the divided power E^(r)_{i,m}; r = 1 agrees with apply_E."""
        out = self.zero()
        ai = RootLatticeElement.simple(i)
        for (alpha, mu), c in v.terms.items():
            n = mu.size()
            pr = self.lattice.pair_root(alpha, i)
            k = pr + r + m
            if n - r * k < 0 and k >= 0:
                continue
            sign = 1
            for t in range(r):
                sign *= self.lattice.cocycle(ai, alpha + ai.scale(t))
            elem = self.algebra.class_divided_E(i, k, r, n)
            img = self.fock.act(elem, self.fock.basis_vector(mu))
            tgt = alpha + ai.scale(r)
            piece = BasicVector(self, {(tgt, key): ci for key, ci in img.terms.items()})
            out = out + piece.scale(c if sign == 1 else -c)
        return out

    def apply_divided_F(self, i, m: int, r: int, v: BasicVector) -> BasicVector:
        """Adjoint-shifted mirror of the divided E class."""
        out = self.zero()
        ai = RootLatticeElement.simple(i)
        for (alpha, mu), c in v.terms.items():
            n = mu.size()
            tgt = alpha - ai.scale(r)
            pr_target = self.lattice.pair_root(tgt, i)
            # 1_lambda F^(r)_{i,m} = (E^(r)_{i,-m} 1_lambda)_R <-r(<l,a_i>+r-m)>
            k = pr_target + r - m
            # dagger swaps P and Q totals, so cover original P-total up to n
            elem = self.algebra.class_divided_E(i, k, r, n + r * max(k, 0))
            elem = self.algebra.dagger(elem).scale(LaurentPoly.q(-r * k))
            sign = 1
            for t in range(r):
                step = -self.lattice.cocycle(alpha - ai.scale(t), ai)
                if self.fsign == "b":
                    step = -step
                sign *= step
            img = self.fock.act(elem, self.fock.basis_vector(mu))
            piece = BasicVector(self, {(tgt, key): ci for key, ci in img.terms.items()})
            out = out + piece.scale(c if sign == 1 else -c)
        return out

    def weight_shift_check(self, spec: OperatorSpec, sector: Sector) -> Sector:
        """Predicted target sector, with the weight-bijection identity asserted."""
        alpha, n = sector.alpha, sector.n
        pr = self.lattice.pair_root(alpha, spec.i)
        ai = RootLatticeElement.simple(spec.i)
        if spec.kind == "E":
            tgt_alpha = alpha + ai
            tgt_n = n - (pr + 1 + spec.m)
        else:
            tgt_alpha = alpha - ai
            tgt_n = n + (pr - 1 - spec.m)
        lhs = tgt_n + self.lattice.norm_half(tgt_alpha)
        rhs = n + self.lattice.norm_half(alpha) - spec.m
        if lhs != rhs:
            raise AssertionError(
                f"weight bookkeeping broken for {spec!r} at {sector!r}: {lhs} != {rhs}")
        if tgt_n < 0:
            raise ValueError("target sector is the zero object")
        return Sector(tgt_alpha, tgt_n)

    # -- relation machinery --------------------------------------------------

    def op_E(self, i, m: int) -> Callable[[BasicVector], BasicVector]:
        return lambda v: self.apply_E(i, m, v)

    def op_F(self, i, m: int) -> Callable[[BasicVector], BasicVector]:
        return lambda v: self.apply_F(i, m, v)

    def op_heis(self, elem: HeisElement) -> Callable[[BasicVector], BasicVector]:
        return lambda v: self.apply_heis(elem, v)

    def op_scalar_by_sector(self, f: Callable[[RootLatticeElement], LaurentPoly]
                            ) -> Callable[[BasicVector], BasicVector]:
        """Multiply each term by a scalar depending on its own sector."""
        def apply(v: BasicVector) -> BasicVector:
            out: Dict[Tuple[RootLatticeElement, Multipartition], LaurentPoly] = {}
            for (alpha, mu), c in v.terms.items():
                s = c * f(alpha)
                if not s.is_zero():
                    out[(alpha, mu)] = s
            return BasicVector(self, out)
        return apply

    @staticmethod
    def compose(*ops):
        """compose(f, g)(v) = f(g(v)): written in operator order."""
        def apply(v):
            for op in reversed(ops):
                v = op(v)
            return v
        return apply

    def relation_instances(self, families: Iterable[str], mode_range: int):
        """Enumerate (family, instance-params, lhs, rhs) for the Drinfeld suite."""
        alg = self.algebra
        graph = alg.graph
        q2 = LaurentPoly.q(2)
        qm2 = LaurentPoly.q(-2)
        q1 = LaurentPoly.q(1)
        qm1 = LaurentPoly.q(-1)
        two = quantum_integer(2)
        modes = range(-mode_range, mode_range + 1)
        amodes = range(0, mode_range + 1)

        def qcol(i, n):
            return self.op_heis(alg.bracket("Q", "col", i, n))

        def pcol(i, n):
            return self.op_heis(alg.bracket("P", "col", i, n))

        def sc(c: LaurentPoly):
            return lambda v: v.scale(c)

        fams = set(families)
        C = self.compose
        E, F = self.op_E, self.op_F

        def commutator(a, b):
            return lambda v: C(a, b)(v) - C(b, a)(v)

        if "4a" in fams:
            for i in graph.nodes:
                for a in amodes:
                    for b in modes:
                        lhs = commutator(qcol(i, a + 1), E(i, b))
                        if a > 0:
                            rhs = lambda v, i=i, a=a, b=b: (
                                C(sc(q2), qcol(i, a), E(i, b + 1))(v)
                                - C(sc(qm2), E(i, b + 1), qcol(i, a))(v))
                        else:
                            rhs = C(sc(two), E(i, b + 1))
                        yield ("4a", {"i": i, "a": a, "b": b}, lhs, rhs)
        if "4b" in fams:
            for i in graph.nodes:
                for a in amodes:
                    for b in modes:
                        lhs = C(sc(qm1), commutator(qcol(i, a + 1), F(i, b)))
                        if a > 0:
                            rhs = lambda v, i=i, a=a, b=b: (
                                C(sc(qm2), qcol(i, a), F(i, b + 1))(v)
                                - C(sc(q2), F(i, b + 1), qcol(i, a))(v))
                        else:
                            rhs = C(sc(-two), F(i, b + 1))
                        yield ("4b", {"i": i, "a": a, "b": b}, lhs, rhs)
        if "4c" in fams:
            for i in graph.nodes:
                for a in amodes:
                    for b in modes:
                        lhs = C(sc(q1), commutator(pcol(i, a + 1), E(i, b + 1)))
                        if a > 0:
                            rhs = lambda v, i=i, a=a, b=b: (
                                C(sc(q2), E(i, b), pcol(i, a))(v)
                                - C(sc(qm2), pcol(i, a), E(i, b))(v))
                        else:
                            rhs = C(sc(two), E(i, b))
                        yield ("4c", {"i": i, "a": a, "b": b}, lhs, rhs)
        if "4d" in fams:
            for i in graph.nodes:
                for a in amodes:
                    for b in modes:
                        lhs = commutator(pcol(i, a + 1), F(i, b + 1))
                        if a > 0:
                            rhs = lambda v, i=i, a=a, b=b: (
                                C(sc(qm2), F(i, b), pcol(i, a))(v)
                                - C(sc(q2), pcol(i, a), F(i, b))(v))
                        else:
                            rhs = C(sc(-two), F(i, b))
                        yield ("4d", {"i": i, "a": a, "b": b}, lhs, rhs)
        if "4e" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for a in amodes:
                    for b in modes:
                        lhs = commutator(qcol(j, a + 1), E(i, b))
                        if a > 0:
                            rhs = lambda v, i=i, j=j, a=a, b=b: (
                                C(sc(q1), E(i, b + 1), qcol(j, a))(v)
                                - C(sc(qm1), qcol(j, a), E(i, b + 1))(v))
                        else:
                            rhs = E(i, b + 1)
                        yield ("4e", {"i": i, "j": j, "a": a, "b": b}, lhs, rhs)
        if "4f" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for a in amodes:
                    for b in modes:
                        lhs = C(sc(qm1), commutator(qcol(j, a + 1), F(i, b)))
                        if a > 0:
                            rhs = lambda v, i=i, j=j, a=a, b=b: (
                                C(sc(qm1), F(i, b + 1), qcol(j, a))(v)
                                - C(sc(q1), qcol(j, a), F(i, b + 1))(v))
                        else:
                            rhs = C(sc(LaurentPoly.from_scalar(-1)), F(i, b + 1))
                        yield ("4f", {"i": i, "j": j, "a": a, "b": b}, lhs, rhs)
        if "4g" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for a in amodes:
                    for b in modes:
                        lhs = C(sc(q1), commutator(pcol(j, a + 1), E(i, b + 1)))
                        if a > 0:
                            rhs = lambda v, i=i, j=j, a=a, b=b: (
                                C(sc(qm1), E(i, b), pcol(j, a))(v)
                                - C(sc(q1), pcol(j, a), E(i, b))(v))
                        else:
                            rhs = E(i, b)
                        yield ("4g", {"i": i, "j": j, "a": a, "b": b}, lhs, rhs)
        if "4h" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for a in amodes:
                    for b in modes:
                        lhs = commutator(pcol(j, a + 1), F(i, b + 1))
                        if a > 0:
                            rhs = lambda v, i=i, j=j, a=a, b=b: (
                                C(sc(q1), F(i, b), pcol(j, a))(v)
                                - C(sc(qm1), pcol(j, a), F(i, b))(v))
                        else:
                            rhs = C(sc(LaurentPoly.from_scalar(-1)), F(i, b))
                        yield ("4h", {"i": i, "j": j, "a": a, "b": b}, lhs, rhs)
        if "4o" in fams:
            # orthogonal pairs: brackets commute with E and F
            zero = lambda v: self.zero()
            for (i, j) in graph.orthogonal_ordered_pairs():
                for a in range(1, mode_range + 2):
                    for b in modes:
                        yield ("4o", {"i": i, "j": j, "a": a, "b": b, "which": "QE"},
                               commutator(qcol(j, a), E(i, b)), zero)
                        yield ("4o", {"i": i, "j": j, "a": a, "b": b, "which": "QF"},
                               commutator(qcol(j, a), F(i, b)), zero)
                        yield ("4o", {"i": i, "j": j, "a": a, "b": b, "which": "PE"},
                               commutator(pcol(j, a), E(i, b)), zero)
                        yield ("4o", {"i": i, "j": j, "a": a, "b": b, "which": "PF"},
                               commutator(pcol(j, a), F(i, b)), zero)
        if "5" in fams:
            for i in graph.nodes:
                for a in modes:
                    for b in modes:
                        lhs = commutator(E(i, a), F(i, b))
                        if a + b > 0:
                            elem = alg.bracket("Q", "col", i, a + b)
                            rhs = C(self.op_scalar_by_sector(
                                lambda alpha, i=i, b=b: LaurentPoly.q(
                                    -b + self.lattice.pair_root(alpha, i))),
                                self.op_heis(elem))
                        elif a + b < 0:
                            elem = alg.bracket("P", "col", i, -a - b)
                            rhs = C(self.op_scalar_by_sector(
                                lambda alpha, i=i, a=a: LaurentPoly.q(
                                    -a - self.lattice.pair_root(alpha, i))),
                                self.op_heis(elem))
                        else:
                            rhs = self.op_scalar_by_sector(
                                lambda alpha, i=i, a=a: quantum_integer(
                                    self.lattice.pair_root(alpha, i) + a))
                        yield ("5", {"i": i, "a": a, "b": b}, lhs, rhs)
            zero = lambda v: self.zero()
            for i in graph.nodes:
                for j in graph.nodes:
                    if i == j:
                        continue
                    for a in modes:
                        for b in modes:
                            yield ("5", {"i": i, "j": j, "a": a, "b": b},
                                   commutator(E(i, a), F(j, b)), zero)
        if "6" in fams:
            for i in graph.nodes:
                for m in modes:
                    for n in modes:
                        if n < m:
                            continue  # statement is symmetric in (m, n)
                        lhs = lambda v, i=i, m=m, n=n: (
                            C(E(i, m), E(i, n - 1))(v) + C(E(i, n), E(i, m - 1))(v))
                        rhs = lambda v, i=i, m=m, n=n: (
                            C(E(i, m - 1), E(i, n))(v) + C(E(i, n - 1), E(i, m))(v)
                        ).scale(q2)
                        yield ("6", {"i": i, "m": m, "n": n, "kind": "E"}, lhs, rhs)
                        lhsF = lambda v, i=i, m=m, n=n: (
                            C(F(i, n - 1), F(i, m))(v) + C(F(i, m - 1), F(i, n))(v))
                        rhsF = lambda v, i=i, m=m, n=n: (
                            C(F(i, n), F(i, m - 1))(v) + C(F(i, m), F(i, n - 1))(v)
                        ).scale(q2)
                        yield ("6", {"i": i, "m": m, "n": n, "kind": "F"}, lhsF, rhsF)
        if "7" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for m in modes:
                    for n in modes:
                        lhs = lambda v, i=i, j=j, m=m, n=n: (
                            C(E(i, m), E(j, n + 1))(v)
                            - C(E(j, n + 1), E(i, m))(v).scale(q1))
                        rhs = lambda v, i=i, j=j, m=m, n=n: (
                            C(E(j, n), E(i, m + 1))(v)
                            - C(E(i, m + 1), E(j, n))(v).scale(q1))
                        yield ("7", {"i": i, "j": j, "m": m, "n": n, "kind": "E"}, lhs, rhs)
                        lhsF = lambda v, i=i, j=j, m=m, n=n: (
                            C(F(i, m + 1), F(j, n))(v)
                            - C(F(j, n), F(i, m + 1))(v).scale(q1))
                        rhsF = lambda v, i=i, j=j, m=m, n=n: (
                            C(F(j, n + 1), F(i, m))(v)
                            - C(F(i, m), F(j, n + 1))(v).scale(q1))
                        yield ("7", {"i": i, "j": j, "m": m, "n": n, "kind": "F"}, lhsF, rhsF)
            zero = lambda v: self.zero()
            for (i, j) in graph.orthogonal_ordered_pairs():
                for m in modes:
                    for n in modes:
                        yield ("7", {"i": i, "j": j, "m": m, "n": n, "kind": "E-orth"},
                               commutator(E(i, m), E(j, n)), zero)
                        yield ("7", {"i": i, "j": j, "m": m, "n": n, "kind": "F-orth"},
                               commutator(F(i, m), F(j, n)), zero)
        if "8" in fams:
            for (i, j) in graph.adjacent_ordered_pairs():
                for m1 in modes:
                    for m2 in modes:
                        if m2 < m1:
                            continue  # the sigma-sum is symmetric in (m1, m2)
                        for n in modes:
                            def serre(v, i=i, j=j, m1=m1, m2=m2, n=n, op=E):
                                acc = self.zero()
                                for (a, b) in ((m1, m2), (m2, m1)):
                                    acc = acc + C(op(j, n), op(i, a), op(i, b))(v)
                                    acc = acc + C(op(i, a), op(i, b), op(j, n))(v)
                                return acc

                            def serre_rhs(v, i=i, j=j, m1=m1, m2=m2, n=n, op=E):
                                acc = self.zero()
                                for (a, b) in ((m1, m2), (m2, m1)):
                                    acc = acc + C(op(i, a), op(j, n), op(i, b))(v)
                                return acc.scale(two)

                            yield ("8", {"i": i, "j": j, "m1": m1, "m2": m2, "n": n,
                                         "kind": "E"}, serre, serre_rhs)
                            yield ("8", {"i": i, "j": j, "m1": m1, "m2": m2, "n": n,
                                         "kind": "F"},
                                   lambda v, f=serre: f(v, op=F),
                                   lambda v, f=serre_rhs: f(v, op=F))

    ALL_FAMILIES = ("4a", "4b", "4c", "4d", "4e", "4f", "4g", "4h", "4o", "5", "6", "7", "8")

    def verify_relation(self, families: Iterable[str], degree_cap: int,
                        lattice_radius: int, mode_range: int,
                        stop_on_fail: bool = False) -> List[dict]:
        """Apply LHS - RHS of every instance to every truncated basis vector."""
        basis = [self.basis_vector(alpha, mu)
                 for alpha, mu in self.basis(lattice_radius, degree_cap)]
        results = []
        for family, params, lhs, rhs in self.relation_instances(families, mode_range):
            report = {"family": family, "instance": _printable(params), "status": "PASS"}
            for v in basis:
                defect = lhs(v) - rhs(v)
                if not defect.is_zero():
                    report["status"] = "FAIL"
                    report["witness"] = {
                        "vector": v.to_json_dict(),
                        "lhs": lhs(v).to_json_dict(),
                        "rhs": rhs(v).to_json_dict(),
                    }
                    report["max_defect"] = str(_max_coeff(defect))
                    break
            results.append(report)
            if stop_on_fail and report["status"] == "FAIL":
                break
        return results

    def verify_decat_main1(self, item: str, degree_cap: int, lattice_radius: int,
                           mode_range: int) -> List[dict]:
        """Euler-characteristic spot checks of the main-theorem relations."""
        basis = [self.basis_vector(alpha, mu)
                 for alpha, mu in self.basis(lattice_radius, degree_cap)]
        two = quantum_integer(2)
        results = []
        modes = range(-mode_range, mode_range + 1)

        if item == "EE":
            for i in self.algebra.graph.nodes:
                for m in modes:
                    report = {"family": "EE", "instance": _printable({"i": i, "m": m}),
                              "status": "PASS"}
                    for v in basis:
                        lhs = self.apply_E(i, m, self.apply_E(i, m, v))
                        rhs = self.apply_divided_E(i, m, 2, v).scale(two)
                        if not (lhs - rhs).is_zero():
                            report.update(status="FAIL", witness={
                                "vector": v.to_json_dict(),
                                "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()})
                            break
                    results.append(report)
                    reportF = {"family": "FF", "instance": _printable({"i": i, "m": m}),
                               "status": "PASS"}
                    for v in basis:
                        lhs = self.apply_F(i, m, self.apply_F(i, m, v))
                        rhs = self.apply_divided_F(i, m, 2, v).scale(two)
                        if not (lhs - rhs).is_zero():
                            reportF.update(status="FAIL", witness={
                                "vector": v.to_json_dict(),
                                "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()})
                            break
                    results.append(reportF)
        elif item == "Eshift":
            q2 = LaurentPoly.q(2)
            qm2 = LaurentPoly.q(-2)
            for i in self.algebra.graph.nodes:
                for m in modes:
                    report = {"family": "Eshift", "instance": _printable({"i": i, "m": m}),
                              "status": "PASS"}
                    for v in basis:
                        lhs = self.apply_E(i, m - 1, self.apply_E(i, m, v))
                        rhs = self.apply_E(i, m, self.apply_E(i, m - 1, v)).scale(qm2)
                        if not (lhs - rhs).is_zero():
                            report.update(status="FAIL", witness={
                                "vector": v.to_json_dict(),
                                "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()})
                            break
                    results.append(report)
                    reportF = {"family": "Fshift", "instance": _printable({"i": i, "m": m}),
                               "status": "PASS"}
                    for v in basis:
                        lhs = self.apply_F(i, m - 1, self.apply_F(i, m, v))
                        rhs = self.apply_F(i, m, self.apply_F(i, m - 1, v)).scale(q2)
                        if not (lhs - rhs).is_zero():
                            reportF.update(status="FAIL", witness={
                                "vector": v.to_json_dict(),
                                "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()})
                            break
                    results.append(reportF)
        elif item == "EiFj":
            results.extend(r for r in self.verify_relation(
                ["5"], degree_cap, lattice_radius, mode_range)
                if "j" in r["instance"])
        elif item == "sl2comm":
            for r in self.verify_relation(["5"], degree_cap, lattice_radius, mode_range):
                inst = r["instance"]
                if "j" not in inst and inst.get("a", 0) + inst.get("b", 0) == 0:
                    results.append(r)
        else:
            raise ValueError(f"unknown decat item {item!r}")
        return results


def _printable(params: dict) -> dict:
    return {k: (v if isinstance(v, (int, str)) else str(v)) for k, v in params.items()}


def _max_coeff(v: BasicVector) -> LaurentPoly:
    best = LaurentPoly.zero()
    best_size = -1
    for c in v.terms.values():
        size = max(abs(x) for x in c.terms.values())
        if size > best_size:
            best, best_size = c, size
    return best
