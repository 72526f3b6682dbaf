"""Construction of the semidirect products C_n x| C_2 and their conjugacy data.

The group with parameters (n, s) is generated by a rotation a of order n and
an involution b with b*a*b = a^s, where s^2 = 1 (mod n) and s != 1 (mod n).
Elements are kept in the normal form b^eps * a^i and encoded as the integer
eps*n + i, so products cost O(1) through the explicit multiplication law

    (b^eps a^i) (b^delta a^j) = b^(eps xor delta) a^(i*s^delta + j mod n).

Conjugacy classes come in three families: tau singletons inside <a> (tau =
gcd(s-1, n)), (n-tau)/2 pairs {a^m, a^(m*s)}, and tau cosets of reflections,
labelled X, Y and Z respectively.  Everything here is computed twice at desk
scale: once by brute force from the Cayley table and once from the closed
forms, and the two routes must agree element for element.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

BRUTE_FORCE_LIMIT = 40  # largest n for which brute-force cross-checks run by default


class ConsistencyError(RuntimeError):
    """Two independent computation routes disagreed; a defect, not bad input."""


@dataclass(frozen=True)
class GroupParams:
    """Validated parameters (n, s) together with tau = gcd(s-1, n)."""

    n: int
    s: int
    tau: int

    @property
    def order(self) -> int:
        return 2 * self.n


def validate_params(n: int, s: int) -> GroupParams:
    """Check that (n, s) defines a twisted dihedral group and compute tau.

    Requires n >= 3, 1 <= s < n, s^2 = 1 (mod n) and s != 1 (mod n).
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if not 1 <= s < n:
        raise ValueError(f"s must satisfy 1 <= s < n, got s={s}")
    if s == 1:
        raise ValueError("s = 1 gives a direct product, not a twisted one")
    if (s * s) % n != 1:
        raise ValueError(f"s^2 = {s * s % n} (mod {n}), expected 1")
    tau = gcd(s - 1, n)
    # s^2 = 1 (mod n) forces gcd(s, n) = 1, and n - tau is even because the
    # non-fixed points of m -> m*s pair up; both are cheap to assert.
    assert gcd(s, n) == 1
    assert (n - tau) % 2 == 0
    return GroupParams(n=n, s=s, tau=tau)


def valid_twists(n: int) -> list[int]:
    """All s in [2, n-1] with s^2 = 1 (mod n), i.e. the valid twists for n."""
    return [s for s in range(2, n) if (s * s) % n == 1]


class GroupTable:
    """A finite group given by its Cayley table on elements 0..order-1.

    For twisted dihedral groups, element eps*n + i encodes b^eps * a^i and the
    identity is 0.  Generic groups (any Cayley table with identity 0) are
    supported so the brute-force pipeline can be pointed at other inputs.
    """

    def __init__(self, mult: np.ndarray, params: GroupParams | None = None,
                 name: str = "group"):
        mult = np.asarray(mult, dtype=np.int64)
        order = mult.shape[0]
        if mult.shape != (order, order):
            raise ValueError("Cayley table must be square")
        self.mult = mult
        self.order = order
        self.params = params
        self.name = name
        self.identity = 0
        if np.any(mult[0] != np.arange(order)) or np.any(mult[:, 0] != np.arange(order)):
            raise ValueError("element 0 must be the identity")
        # every row and column must be a permutation
        ar = np.arange(order)
        if not all(np.array_equal(np.sort(mult[g]), ar) and
                   np.array_equal(np.sort(mult[:, g]), ar) for g in range(order)):
            raise ValueError("Cayley table rows/columns are not permutations")
        inv = np.empty(order, dtype=np.int64)
        for g in range(order):
            zeros = np.flatnonzero(mult[g] == 0)
            if len(zeros) != 1:
                raise ValueError(f"element {g} has {len(zeros)} right inverses")
            inv[g] = zeros[0]
        self.inv = inv

    @classmethod
    def from_params(cls, params: GroupParams) -> "GroupTable":
        n, s = params.n, params.s
        ids = np.arange(2 * n)
        eps, i = ids // n, ids % n
        # i_eff[x, y] twists the left exponent when the right factor carries b
        i_left = i[:, None]
        i_twisted = (i_left * s) % n
        delta = eps[None, :]
        i_eff = np.where(delta == 1, i_twisted, i_left)
        prod_i = (i_eff + i[None, :]) % n
        prod_eps = eps[:, None] ^ delta
        mult = prod_eps * n + prod_i
        return cls(mult, params=params, name=f"D({n},{s})")

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.mult[self.mult[g, x], self.inv[g]])

    def conjugation_permutation(self, g: int) -> np.ndarray:
        """The permutation x -> g*x*g^-1 as an index array."""
        return self.mult[self.mult[g], self.inv[g]]

    def element_name(self, x: int) -> str:
        if self.params is None:
            return f"g{x}"
        n = self.params.n
        eps, i = divmod(x, n)
        a_part = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        if eps == 0:
            return a_part or "e"
        return "b" if not a_part else f"b {a_part}"

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes in canonical order with labels, reps and centralizers.

    For twisted dihedral groups the order is X_1..X_tau, Y_1..Y_((n-tau)/2),
    Z_1..Z_tau.  The X block is ordered by the exponent n*i/tau, which places
    the identity class last in the block (X_tau, index tau-1); that position
    is recorded in identity_class and surfaced in reports.
    """

    classes: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    kinds: tuple[str, ...]              # 'X', 'Y', 'Z', or 'C' for generic groups
    reps: tuple[int, ...]
    centralizer_orders: tuple[int, ...]
    identity_class: int
    class_of: tuple[int, ...]           # element id -> class index

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def centralizer_order(group: GroupTable, g: int) -> int:
    """|{h : hg = gh}| by brute force over the Cayley table."""
    return int(np.count_nonzero(group.mult[:, g] == group.mult[g, :]))


def _brute_partition(group: GroupTable) -> list[frozenset[int]]:
    """Conjugation orbits of every element, by conjugating with all of G."""
    seen = [False] * group.order
    classes = []
    for x in range(group.order):
        if seen[x]:
            continue
        orbit = {group.conjugate(g, x) for g in range(group.order)}
        for y in orbit:
            seen[y] = True
        classes.append(frozenset(orbit))
    return classes


def _closed_form_classes(params: GroupParams) -> tuple[list, list, list, list, list]:
    """Classes of D(n,s) from the closed forms, in canonical X/Y/Z order."""
    n, s, tau = params.n, params.s, params.tau
    step = n // tau
    classes: list[tuple[int, ...]] = []
    labels: list[str] = []
    kinds: list[str] = []
    reps: list[int] = []
    cents: list[int] = []
    # X_i = {a^(n i / tau)}: the rotations fixed by m -> m*s
    for i in range(1, tau + 1):
        e = (step * i) % n
        classes.append((e,))
        labels.append(f"X{i}")
        kinds.append("X")
        reps.append(e)
        cents.append(2 * n)
    # Y_i = {a^m, a^(m s)} for m not a multiple of n/tau, ordered by min exponent
    pairs = []
    done = set()
    for m in range(1, n):
        if m % step == 0 or m in done:
            continue
        ms = (m * s) % n
        done.update((m, ms))
        pairs.append((min(m, ms), max(m, ms)))
    pairs.sort()
    for i, (m, ms) in enumerate(pairs, start=1):
        classes.append((m, ms))
        labels.append(f"Y{i}")
        kinds.append("Y")
        reps.append(m)
        cents.append(n)
    # Z_i = b a^i <a^tau>, represented by b a^i
    for i in range(1, tau + 1):
        members = tuple(sorted(n + (i + t * tau) % n for t in range(n // tau)))
        classes.append(members)
        labels.append(f"Z{i}")
        kinds.append("Z")
        reps.append(n + i)
        cents.append(2 * tau)
    return classes, labels, kinds, reps, cents


def conjugacy_classes(group: GroupTable, check_brute_force: bool | None = None) -> ConjugacyData:
    """Conjugacy classes of a twisted dihedral group in canonical order.

    By default both the brute-force route and the closed-form route run for
    n <= 40 and must agree exactly; pass check_brute_force to override.
    A route mismatch raises ConsistencyError since it signals a defect.
    """
    params = group.params
    if params is None:
        return generic_conjugacy_classes(group)
    n = params.n
    if check_brute_force is None:
        check_brute_force = n <= BRUTE_FORCE_LIMIT
    classes, labels, kinds, reps, cents = _closed_form_classes(params)

    if check_brute_force:
        brute = set(_brute_partition(group))
        closed = {frozenset(c) for c in classes}
        if brute != closed:
            raise ConsistencyError(
                f"conjugacy classes of {group.name}: brute force and closed form disagree")
        for rep, cent in zip(reps, cents):
            if centralizer_order(group, rep) != cent:
                raise ConsistencyError(
                    f"centralizer order of {group.element_name(rep)} in {group.name} "
                    f"does not match the closed form {cent}")

    class_of = [-1] * group.order
    for ci, members in enumerate(classes):
        for x in members:
            class_of[x] = ci
    identity_class = class_of[0]
    return ConjugacyData(
        classes=tuple(tuple(sorted(c)) for c in classes),
        labels=tuple(labels),
        kinds=tuple(kinds),
        reps=tuple(reps),
        centralizer_orders=tuple(cents),
        identity_class=identity_class,
        class_of=tuple(class_of),
    )


def generic_conjugacy_classes(group: GroupTable) -> ConjugacyData:
    """Brute-force classes for an arbitrary Cayley table, identity class first."""
    partition = _brute_partition(group)
    partition.sort(key=lambda c: (0 if 0 in c else 1, len(c), min(c)))
    classes = tuple(tuple(sorted(c)) for c in partition)
    reps = tuple(c[0] for c in classes)
    class_of = [-1] * group.order
    for ci, members in enumerate(classes):
        for x in members:
            class_of[x] = ci
    return ConjugacyData(
        classes=classes,
        labels=tuple(f"C{i}" for i in range(len(classes))),
        kinds=tuple("C" for _ in classes),
        reps=reps,
        centralizer_orders=tuple(centralizer_order(group, r) for r in reps),
        identity_class=0,
        class_of=tuple(class_of),
    )


def generating_set(group: GroupTable) -> list[int]:
    """A small generating set, greedily extended until closure is the group."""
    if group.params is not None:
        return [1, group.params.n]  # a and b
    gens: list[int] = []
    span = {0}
    for x in range(group.order):
        if x in span:
            continue
        gens.append(x)
        frontier = [x]
        while frontier:
            g = frontier.pop()
            for h in list(span):
                for prod in (int(group.mult[g, h]), int(group.mult[h, g])):
                    if prod not in span:
                        span.add(prod)
                        frontier.append(prod)
            if g not in span:
                span.add(g)
        if len(span) == group.order:
            break
    return gens


def centralizer_counts(group: GroupTable) -> np.ndarray:
    """|C_G(g)| for every g at once, straight from the Cayley table."""
    return np.count_nonzero(group.mult == group.mult.T, axis=0)


def orbital_count(group: GroupTable) -> int:
    """Number of orbits of G acting on G x G by simultaneous conjugation.

    Computed two ways, which must agree: the Burnside average of |C_G(g)|^2,
    and an explicit flood fill over the order^2 pairs using a generating set.
    """
    counts = centralizer_counts(group)
    total = int(np.sum(counts.astype(object) ** 2))
    if total % group.order != 0:
        raise ConsistencyError("Burnside sum is not divisible by the group order")
    burnside = total // group.order

    explicit = _enumerate_pair_orbits(group)
    if explicit != burnside:
        raise ConsistencyError(
            f"orbital count mismatch for {group.name}: "
            f"Burnside {burnside} vs enumeration {explicit}")
    return burnside


def _enumerate_pair_orbits(group: GroupTable) -> int:
    order = group.order
    perms = [group.conjugation_permutation(g) for g in generating_set(group)]
    seen = np.zeros((order, order), dtype=bool)
    count = 0
    for x in range(order):
        for y in range(order):
            if seen[x, y]:
                continue
            count += 1
            stack = [(x, y)]
            seen[x, y] = True
            while stack:
                u, v = stack.pop()
                for p in perms:
                    uu, vv = int(p[u]), int(p[v])
                    if not seen[uu, vv]:
                        seen[uu, vv] = True
                        stack.append((uu, vv))
    return count


def build_group(params: GroupParams) -> GroupTable:
    """Cayley table of D(n,s) in the b^eps a^i encoding."""
    return GroupTable.from_params(params)
