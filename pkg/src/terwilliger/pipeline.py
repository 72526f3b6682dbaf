"""Full analysis of one (n, s) pair and sweep orchestration.

An analysis runs the entire chain: group construction with dual-route
conjugacy data, scheme axioms, intersection tensor with the nine case
counts, the two dimension bounds, the two-prime generator closure, the
character table with both multiplicity routes, Wedderburn blocks, and the
desk-scale certificates (commutant solve, central idempotents) when the
group is small enough.  Every verdict lands in an ordered checks dict;
consistency exceptions from the underlying operations are caught per step
and reported as failed verdicts rather than tracebacks.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import algebra, characters, scheme, wedderburn
from .groups import (ConsistencyError, GroupParams, GroupTable, build_group,
                     conjugacy_classes, validate_params, valid_twists)
from .modular import DEFAULT_PRIMES

CLOSURE_DEFAULT_LIMIT = 40
FULL_PRODUCT_CHECK_LIMIT = 12
SAMPLED_PRODUCT_PAIRS = 8


@dataclass
class Analysis:
    """Everything computed for one pair, plus the pass/fail verdicts."""

    params: GroupParams
    group: GroupTable
    classes: object
    scheme_data: object
    tensor: object
    dim_t0: int
    case_counts: dict
    dim_t_tilde: int
    formula_value: int
    certificate: algebra.DimensionCertificate | None
    table: characters.CharTable
    mults_rowsum: characters.Multiplicities
    mults_closedform: characters.Multiplicities | None
    blocks_rowsum: wedderburn.WedderburnReport
    blocks_closedform: wedderburn.WedderburnReport | None
    commutant_dim: int | None
    idempotents: wedderburn.IdempotentReport | None
    checks: dict[str, bool]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def dims_row(self) -> tuple:
        dim_t = self.certificate.dim_t if self.certificate else None
        return (self.params.n, self.params.s, self.params.tau,
                self.dim_t0, dim_t, self.dim_t_tilde, self.formula_value)

    def to_json_dict(self) -> dict:
        return {
            "n": self.params.n,
            "s": self.params.s,
            "tau": self.params.tau,
            "dims": {
                "t0": self.dim_t0,
                "t": self.certificate.dim_t if self.certificate else None,
                "t_tilde": self.dim_t_tilde,
                "formula": self.formula_value,
            },
            "triply_transitive": self.dim_t0 == self.dim_t_tilde,
            "blocks": {
                "rowsum": list(self.blocks_rowsum.blocks),
                "closedform": (list(self.blocks_closedform.blocks)
                               if self.blocks_closedform else None),
            },
            "checks": dict(self.checks),
        }


def _sampled_pairs(params: GroupParams, count: int, num_classes: int) -> list[tuple[int, int]]:
    rng = random.Random(10007 * params.n + params.s)
    return [(rng.randrange(num_classes), rng.randrange(num_classes))
            for _ in range(count)]


def analyze_pair(n: int, s: int, *,
                 closure: bool = True,
                 primes: tuple[int, int] = DEFAULT_PRIMES,
                 exact_rational: bool = False,
                 generator_order_seed: int | None = None,
                 desk_certificates: bool = True) -> Analysis:
    """Run the full pipeline for D(n, s)."""
    params = validate_params(n, s)
    group = build_group(params)
    checks: dict[str, bool] = {}
    notes: list[str] = []

    def step(name: str, fn):
        """Run one verdict; consistency failures become a False entry."""
        try:
            result = fn()
        except ConsistencyError as exc:
            checks[name] = False
            notes.append(f"{name}: {exc}")
            return None
        checks[name] = True
        return result

    classes = conjugacy_classes(group)          # raises only on route mismatch
    checks["conjugacy_routes_agree"] = True

    scheme_data = step("scheme_axioms", lambda: scheme.build_scheme(group, classes))
    tensor = step("tensor_well_defined",
                  lambda: scheme.intersection_numbers(group, classes))
    if scheme_data is None or tensor is None:
        raise ConsistencyError("scheme construction failed: " + "; ".join(notes))

    t0 = scheme.dim_t0(tensor)
    cases = scheme.case_counts(tensor, classes)
    formula = scheme.closed_form_dimension(params)
    checks["t0_matches_formula"] = t0 == formula
    checks["t0_cases_match"] = cases == scheme.expected_case_counts(params)

    if n <= FULL_PRODUCT_CHECK_LIMIT:
        pairs = None
    else:
        pairs = _sampled_pairs(params, SAMPLED_PRODUCT_PAIRS, classes.num_classes)
    checks["product_identity"] = scheme.verify_product_identity(scheme_data, tensor, pairs)

    t_tilde = step("orbital_routes_agree", lambda: algebra.dim_t_tilde(group))
    if t_tilde is None:
        raise ConsistencyError("orbital count failed; cannot continue: " + "; ".join(notes))
    checks["t_tilde_matches_formula"] = t_tilde == formula
    checks["triply_transitive"] = t0 == t_tilde

    certificate = None
    if closure:
        idem = algebra.dual_idempotents(scheme_data)
        certificate = step("closure_two_primes_agree", lambda: algebra.algebra_closure(
            scheme_data, idem, dim_t0_value=t0, primes=primes,
            seed_order=_generator_order(generator_order_seed, 2 * classes.num_classes),
            exact_rational=exact_rational))
        if certificate is not None:
            checks["closure_matches_formula"] = certificate.dim_t == formula
            checks["closure_provenance_exact"] = certificate.provenance.startswith("exact")

    table = characters.char_table(params, classes)
    step("char_orthogonality", lambda: characters.orthogonality_check(table, classes))
    checks["degree_squares"] = sum(d * d for d in table.degrees) == 2 * n

    mults_rowsum = step("rowsums_integral", lambda: characters.multiplicities_rowsum(table))
    mults_closed = step("closedform_integral",
                        lambda: characters.multiplicities_closedform(params))
    if mults_rowsum is None:
        raise ConsistencyError("row sums failed; cannot continue: " + "; ".join(notes))
    if mults_closed is not None:
        checks["rowsum_equals_closedform"] = mults_rowsum.same_values(mults_closed)

    step("conjugation_character_pointwise",
         lambda: characters.conjugation_character_check(table, mults_rowsum, classes))

    blocks_rowsum = wedderburn.decomposition(mults_rowsum, t_tilde, strict=False)
    checks["blocks_match_dimension"] = bool(blocks_rowsum.matches_dimension)
    blocks_closed = None
    if mults_closed is not None:
        blocks_closed = wedderburn.decomposition(mults_closed, formula, strict=False)
        checks["block_routes_agree"] = (
            blocks_rowsum.as_multiset() == blocks_closed.as_multiset()
            and bool(blocks_closed.matches_dimension))

    commutant_dim = None
    idem_report = None
    if desk_certificates:
        if group.order <= algebra.COMMUTANT_ORDER_LIMIT:
            commutant_dim = algebra.commutant_oracle(group)
            checks["commutant_matches_orbitals"] = commutant_dim == t_tilde
        if group.order <= wedderburn.IDEMPOTENT_ORDER_LIMIT:
            idem_report = step("central_idempotents",
                               lambda: wedderburn.central_idempotents(group, table, mults_rowsum))

    return Analysis(
        params=params, group=group, classes=classes, scheme_data=scheme_data,
        tensor=tensor, dim_t0=t0, case_counts=cases, dim_t_tilde=t_tilde,
        formula_value=formula, certificate=certificate, table=table,
        mults_rowsum=mults_rowsum, mults_closedform=mults_closed,
        blocks_rowsum=blocks_rowsum, blocks_closedform=blocks_closed,
        commutant_dim=commutant_dim, idempotents=idem_report,
        checks=checks, notes=notes,
    )


def _generator_order(seed: int | None, count: int) -> list[int] | None:
    if seed is None:
        return None
    order = list(range(count))
    random.Random(seed).shuffle(order)
    return order


def enumerate_pairs(n_min: int, n_max: int) -> list[tuple[int, int]]:
    """All valid (n, s) with n in [n_min, n_max], in lexicographic order."""
    return [(n, s) for n in range(n_min, n_max + 1) for s in valid_twists(n)]


def sweep(n_min: int, n_max: int, *,
          closure_limit: int = CLOSURE_DEFAULT_LIMIT,
          force_closure: bool = False,
          threads: int = 1,
          primes: tuple[int, int] = DEFAULT_PRIMES,
          generator_order_seed: int | None = None,
          desk_certificates: bool = False) -> list[Analysis]:
    """Analyze every valid pair in range; closure runs only up to closure_limit
    unless forced.  Rows are computed in parallel but returned in (n, s) order."""
    pairs = enumerate_pairs(n_min, n_max)

    def run(pair: tuple[int, int]) -> Analysis:
        n, s = pair
        return analyze_pair(
            n, s,
            closure=force_closure or n <= closure_limit,
            primes=primes,
            generator_order_seed=generator_order_seed,
            desk_certificates=desk_certificates,
        )

    if threads <= 1:
        return [run(pair) for pair in pairs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = dict(zip(pairs, pool.map(run, pairs)))
    return [results[pair] for pair in pairs]


def audit_corollaries(n_min: int, n_max: int) -> list[wedderburn.CorollaryAudit]:
    """Dihedral corollary audit rows for every n in range."""
    return [wedderburn.corollary_audit(n) for n in range(max(3, n_min), n_max + 1)]
