"""Partitions, multipartitions and symmetric-function basis conversions.

Everything the algebra layer needs is expressed in the basis of complete
homogeneous monomials h_lambda.  Column generators expand through e_to_h,
Schur generators through the Jacobi-Trudi determinant, power sums through
the Newton recurrence.  Coefficients of all three conversions are plain
integers, so expansions are stored as {Partition: int}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple

MAX_PARTITION_SIZE = 64


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in ps):
            raise ValueError(f"negative part in {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts not weakly decreasing: {ps}")
        if sum(ps) > MAX_PARTITION_SIZE:
            raise ValueError(f"partition size {sum(ps)} exceeds cap {MAX_PARTITION_SIZE}")
        self.parts = ps

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def is_empty(self) -> bool:
        return not self.parts

    def transpose(self) -> "Partition":
        """Conjugate Young diagram."""
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """True iff other fits inside self componentwise."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def concat(self, other: "Partition") -> "Partition":
        """Stack other below self; valid when other.width() <= min part of self."""
        return Partition(self.parts + other.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.size(), self.parts) < (other.size(), other.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition(())


def hook(a: int, b: int) -> Partition:
    """The hook partition (a, 1^b)."""
    return Partition((a,) + (1,) * b)


def rectangle(part: int, times: int) -> Partition:
    """The rectangle (part^times)."""
    return Partition((part,) * times)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in lexicographically decreasing part order."""

    def gen(remaining: int, maxpart: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for p in range(min(remaining, maxpart), 0, -1):
            yield from gen(remaining - p, p, prefix + (p,))

    yield from gen(n, n if n else 1, ())


def partitions_in_box(width: int, size: int) -> list[Partition]:
    """All partitions of the given size whose parts are at most width."""
    if size == 0:
        return [EMPTY]
    if width <= 0:
        return []
    return [mu for mu in partitions_of(size) if mu.width() <= width]


class Multipartition:
    """One partition per Dynkin node; nodes with empty partition are dropped."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Mapping[object, Partition] | Iterable[tuple] = ()):
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        clean = tuple(sorted(
            ((node, lam) for node, lam in items if not lam.is_empty()),
            key=lambda kv: str(kv[0]),
        ))
        self.assignment = clean

    def get(self, node) -> Partition:
        for n, lam in self.assignment:
            if n == node:
                return lam
        return EMPTY

    def nodes(self):
        return [n for n, _ in self.assignment]

    def items(self):
        return self.assignment

    def size(self) -> int:
        return sum(lam.size() for _, lam in self.assignment)

    def is_empty(self) -> bool:
        return not self.assignment

    def set(self, node, lam: Partition) -> "Multipartition":
        items = [(n, p) for n, p in self.assignment if n != node]
        if not lam.is_empty():
            items.append((node, lam))
        return Multipartition(items)

    def merge(self, other: "Multipartition") -> "Multipartition":
        """Multiset union of the h-monomial exponents, node by node."""
        out: Dict[object, list] = {}
        for n, lam in self.assignment:
            out.setdefault(n, []).extend(lam.parts)
        for n, lam in other.assignment:
            out.setdefault(n, []).extend(lam.parts)
        return Multipartition({n: Partition(sorted(ps, reverse=True)) for n, ps in out.items()})

    def add_part(self, node, part: int) -> "Multipartition":
        if part == 0:
            return self
        lam = self.get(node)
        return self.set(node, Partition(sorted(lam.parts + (part,), reverse=True)))

    def factors(self):
        """All (node, part) row-generator factors with multiplicity."""
        for n, lam in self.assignment:
            for p in lam.parts:
                yield (n, p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multipartition) and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __lt__(self, other: "Multipartition") -> bool:
        return (self.size(), self.assignment) < (other.size(), other.assignment)

    def __repr__(self) -> str:
        return f"Multipartition({dict(self.assignment)!r})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{n}:{lam}" for n, lam in self.assignment) + "}"


EMPTY_MULTI = Multipartition()


# ---------------------------------------------------------------------------
# Basis conversions into the h-monomial basis.  An HMonomialExpansion is a
# dict {Partition: int}; keys are the sorted exponent multisets.
# ---------------------------------------------------------------------------

HMonomialExpansion = Dict[Partition, int]


def _hadd(acc: HMonomialExpansion, key: Partition, coeff: int) -> None:
    c = acc.get(key, 0) + coeff
    if c:
        acc[key] = c
    elif key in acc:
        del acc[key]


def _hmul_key(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a.parts + b.parts, reverse=True))


def hmul(x: HMonomialExpansion, y: HMonomialExpansion) -> HMonomialExpansion:
    out: HMonomialExpansion = {}
    for ka, ca in x.items():
        for kb, cb in y.items():
            _hadd(out, _hmul_key(ka, kb), ca * cb)
    return out


def h_unit() -> HMonomialExpansion:
    return {EMPTY: 1}


@lru_cache(maxsize=None)
def _e_to_h_cached(n: int) -> Tuple[Tuple[Partition, int], ...]:
    # e_n = sum_{k=1}^{n} (-1)^{k-1} h_k e_{n-k}, forced by the product of the
    # two generating series being 1.
    if n == 0:
        return ((EMPTY, 1),)
    out: HMonomialExpansion = {}
    for k in range(1, n + 1):
        sign = 1 if (k - 1) % 2 == 0 else -1
        for key, c in _e_to_h_cached(n - k):
            _hadd(out, _hmul_key(Partition((k,)), key), sign * c)
    return tuple(sorted(out.items(), key=lambda kv: kv[0].parts))


def e_to_h(n: int) -> HMonomialExpansion:
    """Expansion of the elementary symmetric function e_n in the h basis."""
    if n < 0:
        raise ValueError("e_n needs n >= 0")
    return dict(_e_to_h_cached(n))


@lru_cache(maxsize=None)
def _p_to_h_cached(m: int) -> Tuple[Tuple[Partition, int], ...]:
    # Newton: p_m = m h_m - sum_{k=1}^{m-1} h_k p_{m-k}
    out: HMonomialExpansion = {Partition((m,)): m}
    for k in range(1, m):
        for key, c in _p_to_h_cached(m - k):
            _hadd(out, _hmul_key(Partition((k,)), key), -c)
    return tuple(sorted(out.items(), key=lambda kv: kv[0].parts))


def p_to_h(m: int) -> HMonomialExpansion:
    """Expansion of the power sum p_m in the h basis."""
    if m < 1:
        raise ValueError("p_m needs m >= 1")
    return dict(_p_to_h_cached(m))


def _h_complete(k: int) -> HMonomialExpansion:
    if k < 0:
        return {}
    if k == 0:
        return h_unit()
    return {Partition((k,)): 1}


def schur_to_h(lam: Partition) -> HMonomialExpansion:
    """Jacobi-Trudi: s_lambda = det( h_{lambda_i - i + j} )."""
    ell = lam.length()
    if ell == 0:
        return h_unit()
    out: HMonomialExpansion = {}
    # Expand the determinant over permutations; rows are short in practice.
    import itertools

    for sigma in itertools.permutations(range(ell)):
        sign = _perm_sign(sigma)
        term = h_unit()
        dead = False
        for i in range(ell):
            k = lam.parts[i] - (i + 1) + (sigma[i] + 1)
            hk = _h_complete(k)
            if not hk:
                dead = True
                break
            term = hmul(term, hk)
        if dead:
            continue
        for key, c in term.items():
            _hadd(out, key, sign * c)
    return out


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def omega(x: HMonomialExpansion) -> HMonomialExpansion:
    """The involution exchanging h and e, re-expanded in the h basis."""
    out: HMonomialExpansion = {}
    for key, c in x.items():
        term = h_unit()
        for p in key.parts:
            term = hmul(term, e_to_h(p))
        for k2, c2 in term.items():
            _hadd(out, k2, c * c2)
    return out


def count_multipartitions(num_nodes: int, total: int) -> int:
    """Number of num_nodes-colored partitions of total (independent DP oracle)."""
    # Convolve the one-color partition counts num_nodes times.
    one = [_partition_count(n) for n in range(total + 1)]
    acc = [1] + [0] * total
    for _ in range(num_nodes):
        acc = [sum(acc[j] * one[n - j] for j in range(n + 1)) for n in range(total + 1)]
    return acc[total]


@lru_cache(maxsize=None)
def _partition_count(n: int, maxpart: int | None = None) -> int:
    if maxpart is None:
        maxpart = n
    if n == 0:
        return 1
    if maxpart == 0:
        return 0
    total = 0
    for p in range(min(n, maxpart), 0, -1):
        total += _partition_count(n - p, p)
    return total
