"""Terwilliger algebra at the identity: dual idempotents, closure, certificates.

The algebra is generated by the relation matrices A_i together with the dual
idempotents E*_i (diagonal class indicators, since the base point is the
identity).  Its dimension is pinned by a sandwich: the span of the products
E*_i A_j E*_k gives a lower bound (counted in the scheme module), and the
centralizer algebra of the conjugation action on pairs gives an upper bound
equal to the orbital count.  The closure computed here is a rank over two
prime fields; a modular rank can only undershoot the rational one, so when
it reaches the orbital bound the dimension is certified exactly, and
otherwise it is reported with modular provenance (with an optional rational
rerun for small groups).

The saturation multiplies only frontier rows by the generators, on both
sides.  That is enough: a span containing the generators and closed under
left and right multiplication by each generator is closed under
multiplication by every word in them, hence under the whole algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .groups import ConsistencyError, GroupTable, orbital_count
from .modular import DEFAULT_PRIMES, PrimeBasis, RationalBasis
from .scheme import SchemeData, closed_form_dimension

COMMUTANT_ORDER_LIMIT = 16

PROVENANCE_EXACT = "exact"
PROVENANCE_RATIONAL = "exact-rational"
PROVENANCE_MODULAR = "modular, two-prime agreement"


@dataclass(frozen=True)
class DualIdempotents:
    """Diagonal 0/1 idempotents; row i indicates membership in class i."""

    diagonals: np.ndarray  # (num classes, group order)

    @property
    def num_classes(self) -> int:
        return self.diagonals.shape[0]


def dual_idempotents(scheme: SchemeData) -> DualIdempotents:
    """E*_i = diag(indicator of Cl_i); verifies the orthogonal idempotent laws."""
    classes = scheme.classes
    diag = np.zeros((classes.num_classes, scheme.order), dtype=np.int64)
    for i, members in enumerate(classes.classes):
        diag[i, list(members)] = 1
    if not np.array_equal(diag.sum(axis=0), np.ones(scheme.order, dtype=np.int64)):
        raise ConsistencyError("dual idempotents do not sum to the identity")
    for i in range(classes.num_classes):
        if int(diag[i].sum()) != len(classes.classes[i]):
            raise ConsistencyError("dual idempotent trace differs from class size")
    return DualIdempotents(diagonals=diag)


@dataclass(frozen=True)
class DimensionCertificate:
    """Dimension of the algebra with its provenance and the two bounds."""

    n: int | None
    s: int | None
    tau: int | None
    dim_t0: int
    dim_t: int
    dim_t_tilde: int
    formula_value: int | None
    triply_transitive: bool
    provenance: str
    closure_rounds: int
    basis_size_history: tuple[tuple[int, ...], tuple[int, ...]]
    primes: tuple[int, int]
    rational_rank: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "tau": self.tau,
            "dim_T0": self.dim_t0,
            "dim_T": self.dim_t,
            "dim_T_tilde": self.dim_t_tilde,
            "formula": self.formula_value,
            "triply_transitive": self.triply_transitive,
            "provenance": self.provenance,
            "rounds": self.closure_rounds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class _GeneratorProducts:
    """Left/right multiplication of a matrix by every A_i and E*_i at once.

    Uses (A_i M)[u] = sum over c in Cl_i of M[c u] and the column analogue,
    evaluated for all classes in one gather plus one segment sum.
    """

    def __init__(self, scheme: SchemeData):
        group = scheme.group
        classes = scheme.classes
        order = group.order
        elems = np.concatenate([np.asarray(c, dtype=np.int64) for c in classes.classes])
        self.offsets = np.cumsum([0] + [len(c) for c in classes.classes])[:-1]
        self.left_index = group.mult[elems, :]                    # [r, u] = c_r * u
        self.right_index = group.mult[group.inv[elems], :]        # [r, v] = c_r^-1 * v
        self.class_of = np.asarray(classes.class_of, dtype=np.int64)
        self.order = order
        self.num_classes = classes.num_classes

    def all_products(self, m: np.ndarray) -> np.ndarray:
        """Stack of the 4*(t+1) products [A_i M | M A_i | E_i M | M E_i]."""
        t1, order = self.num_classes, self.order
        left = np.add.reduceat(m[self.left_index.reshape(-1)]
                               .reshape(-1, order, order), self.offsets, axis=0)
        gathered = m[:, self.right_index]                         # [u, r, v]
        right = np.add.reduceat(gathered, self.offsets, axis=1).transpose(1, 0, 2)
        stack = np.concatenate([left, right,
                                self._masked(m).reshape(2 * t1, order, order)], axis=0)
        return stack.reshape(4 * t1, order * order)

    def _masked(self, m: np.ndarray) -> np.ndarray:
        """The 2*(t+1) diagonal-masked products [E_i M | M E_i]."""
        t1, order = self.num_classes, self.order
        e_left = np.zeros((t1, order, order), dtype=m.dtype)
        e_left[self.class_of, np.arange(order), :] = m
        e_right = np.zeros((t1, order, order), dtype=m.dtype)
        e_right[self.class_of, :, np.arange(order)] = m.T
        return np.concatenate([e_left, e_right], axis=0)

    def masked_products(self, m: np.ndarray) -> np.ndarray:
        return self._masked(m).reshape(2 * self.num_classes, self.order * self.order)


def _seed_matrices(scheme: SchemeData, idem: DualIdempotents,
                   seed_order: list[int] | None) -> list[np.ndarray]:
    t1 = scheme.num_relations
    seeds = [scheme.adjacency(i) for i in range(t1)]
    seeds += [np.diag(idem.diagonals[i]) for i in range(t1)]
    if seed_order is not None:
        if sorted(seed_order) != list(range(len(seeds))):
            raise ValueError("seed_order must be a permutation of the generators")
        seeds = [seeds[i] for i in seed_order]
    return seeds


def _modular_closure(scheme: SchemeData, idem: DualIdempotents, prime: int,
                     bound: int, seed_order: list[int] | None,
                     round_budget: int, batch_rows: int = 256
                     ) -> tuple[PrimeBasis, int, list[int]]:
    """Saturate the generated algebra over F_p; returns (basis, rounds, history)."""
    order = scheme.order
    length = order * order
    basis = PrimeBasis(prime, length, capacity=bound)
    products = _GeneratorProducts(scheme)

    for seed in _seed_matrices(scheme, idem, seed_order):
        basis.insert(seed.reshape(-1) % prime)
        if basis.rank >= bound:
            break
    history = [basis.rank]
    rounds = 0
    next_frontier: list[int] = []
    pending: list[np.ndarray] = []
    pending_rows = 0

    def flush() -> None:
        nonlocal pending, pending_rows
        if not pending:
            return
        before = basis.rank
        basis.insert_block(np.concatenate(pending, axis=0), stop_at_rank=bound)
        next_frontier.extend(range(before, basis.rank))
        pending = []
        pending_rows = 0

    def push(block: np.ndarray, rows: int) -> bool:
        nonlocal pending_rows
        pending.append(block)
        pending_rows += rows
        if pending_rows >= batch_rows:
            flush()
            return basis.rank >= bound
        return False

    # Seed round: products of the generators themselves.  A_i A_j lies in the
    # span of the A's (the scheme product identity) and E_i E_j in the span of
    # the E's, so only the diagonal-masked products E_j A_i and A_i E_j can
    # grow the span here.
    if basis.rank < bound:
        rounds = 1
        for i in range(scheme.num_relations):
            a = scheme.adjacency(i).astype(np.float64)
            if push(products.masked_products(a), 2 * scheme.num_relations):
                break
        flush()
        history.append(basis.rank)

    frontier = next_frontier
    while frontier and basis.rank < bound:
        rounds += 1
        if rounds > round_budget:
            raise ConsistencyError(
                f"closure did not stabilize within {round_budget} rounds")
        next_frontier = []
        stop = False
        for row_idx in frontier:
            m = basis.rows[row_idx].reshape(order, order)
            if push(products.all_products(m), 4 * scheme.num_relations):
                stop = True
                break
        flush()
        history.append(basis.rank)
        if stop or not next_frontier:
            break
        frontier = next_frontier

    return basis, rounds, history


def _rational_closure(scheme: SchemeData, idem: DualIdempotents,
                      seed_order: list[int] | None, round_budget: int) -> int:
    """The same saturation over the rationals; exact but only for small groups."""
    order = scheme.order
    basis = RationalBasis(order * order)
    seeds = _seed_matrices(scheme, idem, seed_order)
    frontier: list[np.ndarray] = []
    for seed in seeds:
        if basis.insert(seed.reshape(-1).tolist()):
            frontier.append(seed.astype(object))
    gens = seeds
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > round_budget:
            raise ConsistencyError("rational closure did not stabilize in budget")
        new: list[np.ndarray] = []
        for m in frontier:
            for g in gens:
                for prod in (g @ m, m @ g):
                    if basis.insert(prod.reshape(-1).tolist()):
                        new.append(prod)
        frontier = new
    return basis.rank


def dim_t_tilde(group: GroupTable) -> int:
    """Dimension of the centralizer algebra: the orbital count (dual-route)."""
    return orbital_count(group)


def algebra_closure(scheme: SchemeData, idem: DualIdempotents, *,
                    dim_t0_value: int,
                    primes: tuple[int, int] = DEFAULT_PRIMES,
                    seed_order: list[int] | None = None,
                    exact_rational: bool = False,
                    round_budget: int = 32) -> DimensionCertificate:
    """Generator-closure dimension of the algebra, with provenance.

    Runs one independent saturation per prime; the two ranks must agree.
    Early exit happens at the centralizer bound, which also upgrades the
    modular rank to an exact certificate.
    """
    if primes[0] == primes[1]:
        raise ValueError("the two moduli must be distinct primes")
    group = scheme.group
    bound = dim_t_tilde(group)

    ranks: list[int] = []
    rounds: list[int] = []
    histories: list[list[int]] = []
    for p in primes:
        basis, nrounds, history = _modular_closure(
            scheme, idem, p, bound, seed_order, round_budget)
        ranks.append(basis.rank)
        rounds.append(nrounds)
        histories.append(history)
    if ranks[0] != ranks[1]:
        raise ConsistencyError(
            f"prime-field ranks disagree: {ranks[0]} mod {primes[0]} vs "
            f"{ranks[1]} mod {primes[1]}")
    dim_t = ranks[0]

    rational_rank = None
    if exact_rational:
        rational_rank = _rational_closure(scheme, idem, seed_order, round_budget)
        if rational_rank < dim_t:
            raise ConsistencyError(
                f"rational rank {rational_rank} below modular rank {dim_t}")
        dim_t = rational_rank

    if dim_t == bound:
        provenance = PROVENANCE_EXACT
    elif rational_rank is not None:
        provenance = PROVENANCE_RATIONAL
    else:
        provenance = PROVENANCE_MODULAR

    if not (dim_t0_value <= dim_t <= bound):
        raise ConsistencyError(
            f"dimension sandwich violated: {dim_t0_value} <= {dim_t} <= {bound} fails")

    params = group.params
    return DimensionCertificate(
        n=params.n if params else None,
        s=params.s if params else None,
        tau=params.tau if params else None,
        dim_t0=dim_t0_value,
        dim_t=dim_t,
        dim_t_tilde=bound,
        formula_value=closed_form_dimension(params) if params else None,
        triply_transitive=dim_t0_value == bound,
        provenance=provenance,
        closure_rounds=max(rounds),
        basis_size_history=(tuple(histories[0]), tuple(histories[1])),
        primes=tuple(primes),
        rational_rank=rational_rank,
    )


def triple_transitivity(cert: DimensionCertificate) -> bool:
    """True when the triple-count lower bound meets the orbital upper bound."""
    return cert.dim_t0 == cert.dim_t_tilde


def commutant_oracle(group: GroupTable) -> int:
    """Dimension of the commutant of the conjugation action on pairs.

    Sets up the linear system X(g) A = A X(g) over all g, where X(g) is the
    permutation matrix of x -> g x g^-1, and solves it exactly over the
    rationals.  The solution space is spanned by the orbital matrices, so the
    result must equal the orbital count; callers compare the two.
    """
    order = group.order
    if order > COMMUTANT_ORDER_LIMIT:
        raise ValueError(
            f"commutant oracle is desk-scale only (order {order} > {COMMUTANT_ORDER_LIMIT})")
    basis = RationalBasis(order * order)
    for g in range(order):
        perm = group.conjugation_permutation(g)
        for u in range(order):
            for v in range(order):
                uu, vv = int(perm[u]), int(perm[v])
                if (uu, vv) == (u, v):
                    continue
                basis.insert({uu * order + vv: 1, u * order + v: -1})
    return order * order - basis.rank
