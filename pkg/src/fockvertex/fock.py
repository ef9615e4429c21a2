"""The Fock space representation: basis, action, matrices.

Basis vectors are multipartitions mu, identified with the word P^mu applied
to the vacuum.  Acting by an element is a straightening pass followed by
deleting every word that still carries annihilation factors.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple

from .coeff import LaurentPoly
from .heisalg import HeisElement, HeisenbergAlgebra, NormalWord
from .symfun import EMPTY_MULTI, Multipartition, Partition, partitions_of


class FockVector:
    """Finite linear combination of multipartition basis vectors."""

    __slots__ = ("space", "terms")

    def __init__(self, space: "FockSpace", terms: Dict[Multipartition, LaurentPoly]):
        self.space = space
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return FockVector(self.space, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(LaurentPoly.from_scalar(-1))

    def scale(self, c: LaurentPoly) -> "FockVector":
        if c.is_zero():
            return FockVector(self.space, {})
        return FockVector(self.space, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"FockVector({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms)
        return " + ".join(f"({self.terms[k]}) * {k}" for k in keys)


class FockSpace:
    """Fock space of a Heisenberg algebra, with cached word actions."""

    def __init__(self, algebra: HeisenbergAlgebra):
        self.algebra = algebra
        # (q_multipartition, basis key) -> {key: coeff}, the vacuum projection
        # of (Q word) * P^mu.
        self._qact_cache: Dict[Tuple[Multipartition, Multipartition], Dict[Multipartition, LaurentPoly]] = {}

    def vacuum(self) -> FockVector:
        return FockVector(self, {EMPTY_MULTI: LaurentPoly.one()})

    def vector(self, terms: Dict[Multipartition, LaurentPoly]) -> FockVector:
        return FockVector(self, terms)

    def basis_vector(self, mu: Multipartition) -> FockVector:
        return FockVector(self, {mu: LaurentPoly.one()})

    def basis(self, m: int) -> List[Multipartition]:
        """All multipartitions of total size m over the graph's nodes."""
        if m < 0:
            return []
        nodes = self.algebra.graph.nodes
        out: List[Multipartition] = []
        for combo in _compositions(m, len(nodes)):
            pools = [list(partitions_of(c)) for c in combo]
            for choice in itertools.product(*pools):
                out.append(Multipartition({n: lam for n, lam in zip(nodes, choice)}))
        return sorted(out)

    def _act_qword(self, q_mp: Multipartition, mu: Multipartition) -> Dict[Multipartition, LaurentPoly]:
        """Vacuum projection of (Q word) acting on the basis key mu."""
        if q_mp.is_empty():
            return {mu: LaurentPoly.one()}
        if q_mp.size() > mu.size():
            return {}
        key = (q_mp, mu)
        hit = self._qact_cache.get(key)
        if hit is not None:
            return hit
        out: Dict[Multipartition, LaurentPoly] = {}
        for w, c in self.algebra._qword_times_pword(q_mp, mu).terms.items():
            if w.q_part.is_empty():
                s = out.get(w.p_part)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w.p_part, None)
                else:
                    out[w.p_part] = s
        self._qact_cache[key] = out
        return out

    def act(self, a: HeisElement, v: FockVector) -> FockVector:
        if a.algebra is not self.algebra:
            raise ValueError("element belongs to a different algebra")
        out: Dict[Multipartition, LaurentPoly] = {}
        for mu, cv in v.terms.items():
            for w, cw in a.terms.items():
                base = self._act_qword(w.q_part, mu)
                if not base:
                    continue
                c = cv * cw
                for key, ck in base.items():
                    full = w.p_part.merge(key)
                    s = out.get(full)
                    add = c * ck
                    s = add if s is None else s + add
                    if s.is_zero():
                        out.pop(full, None)
                    else:
                        out[full] = s
        return FockVector(self, out)

    def matrix_of(self, a: HeisElement, source_degree: int):
        """Matrix of act(a, .) from basis(source_degree) to basis(source_degree + deg a).

        Returned as (rows, cols, entries) where entries[r][c] is a LaurentPoly.
        """
        d = a.degree()  # raises on non-homogeneous input
        src = self.basis(source_degree)
        tgt = self.basis(source_degree + d)
        index = {mu: r for r, mu in enumerate(tgt)}
        entries = [[LaurentPoly.zero() for _ in src] for _ in tgt]
        for c, mu in enumerate(src):
            img = self.act(a, self.basis_vector(mu))
            for key, coeff in img.terms.items():
                entries[index[key]][c] = coeff
        return tgt, src, entries


def _compositions(total: int, k: int):
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest
