"""Named, runnable verification cases: transitive product pairs, conjugation
and twisted-diagonal actions, Hermann pairs, and the dimension obstruction
for diagonal so(7)-type subalgebras of so(8)(+)so(8).
"""

from dataclasses import dataclass, field

import numpy as np

from . import embeddings as emb
from .actions import ActionSpec, analyze, cohomogeneity, is_transitive
from .errors import ClosureError, InvalidInputError
from .lie_algebras import (build_classical, identity_automorphism,
                           make_automorphism, realify_complex)
from .numerics import rank_of
from .subalgebras import Subalgebra, diagonal_sigma, product

# ---------------------------------------------------------------------------
# shared builders


def base_algebra(family, n, form_scale=1.0):
    algebra = build_classical(family, n)
    if form_scale != 1.0:
        algebra = algebra.with_scaled_form(form_scale)
    return algebra


def so_in_su(ambient, tol):
    """The real points so(n) inside su(n) (fixed set of conjugation)."""
    n = ambient.n
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = 1.0
            m[j, i] = -1.0
            mats.append(realify_complex(m.astype(complex)))
    return Subalgebra.from_matrices(ambient, mats, tol, name=f"so({n})")


def so7_diagonal_subalgebra(tol, twisted, form_scale=1.0):
    """Graph {(X, phi(X))} of so(7) into so(8)(+)so(8).

    phi is the corner inclusion (twisted=False) or the 21-dimensional spin
    image spanned by the gamma bivectors (twisted=True).
    """
    so8 = base_algebra("so", 8, form_scale)
    corner_mats = []
    for i in range(7):
        for j in range(i + 1, 7):
            m = np.zeros((8, 8))
            m[i, j] = 1.0
            m[j, i] = -1.0
            corner_mats.append(m)
    if twisted:
        gammas = emb.gamma_matrices(7)
        images = [-0.5 * gammas[i] @ gammas[j]
                  for i in range(7) for j in range(i + 1, 7)]
    else:
        images = corner_mats
    vecs = [np.concatenate([so8.coords_of(a), so8.coords_of(b)])
            for a, b in zip(corner_mats, images)]
    name = "delta_spin(so(7))" if twisted else "delta(so(7))"
    return Subalgebra.from_vectors(so8.double(), vecs, tol, name=name), so8


# ---------------------------------------------------------------------------
# Table 1 rows


@dataclass(frozen=True)
class TableRow:
    row_id: str
    description: str
    min_n: int | None  # None for fixed rows

    def build(self, tol, n=None, form_scale=1.0):
        raise NotImplementedError


def _row_builders():
    def sp_su(n, tol, scale, second):
        ambient = base_algebra("su", 2 * n, scale)
        h1 = emb.sp_in_su(ambient, tol)
        h2 = (emb.s_u_u1_in_su(ambient, tol) if second == "u1"
              else emb.su_corner_in_su(ambient, 2 * n - 1, tol))
        return h1, h2, ambient

    def so_so(n, tol, scale, second):
        ambient = base_algebra("so", 2 * n, scale)
        h1 = emb.corner_so(ambient, 2 * n - 1, tol)
        h2 = emb.u_in_so(ambient, tol, special=(second == "su"))
        return h1, h2, ambient

    def so_sp(n, tol, scale, right):
        ambient = base_algebra("so", 4 * n, scale)
        h1 = emb.corner_so(ambient, 4 * n - 1, tol)
        h2 = emb.sp_in_so(ambient, tol, right_factor=right)
        return h1, h2, ambient

    def g2_row(tol, scale, second):
        ambient = base_algebra("so", 7, scale)
        h1 = emb.g2_in_so7(ambient, tol)
        if second == "so6":
            h2 = emb.corner_so(ambient, 6, tol)
        elif second == "so5so2":
            h2 = emb.block_so(ambient, [5, 2], tol)
        else:
            h2 = emb.corner_so(ambient, 5, tol)
        return h1, h2, ambient

    def spin_row(tol, scale, n):
        size = {7: 8, 9: 16}[n]
        ambient = base_algebra("so", size, scale)
        h1 = emb.spin_subalgebra(ambient, n, tol)
        h2 = emb.corner_so(ambient, size - 1, tol)
        return h1, h2, ambient

    return {
        "sp-su-s_u_u1": ("Sp(n) x S(U(2n-1)U(1)) on SU(2n)", 2,
                         lambda n, t, s: sp_su(n, t, s, "u1")),
        "sp-su-su": ("Sp(n) x SU(2n-1) on SU(2n)", 2,
                     lambda n, t, s: sp_su(n, t, s, "su")),
        "so-so-u": ("SO(2n-1) x U(n) on SO(2n)", 3,
                    lambda n, t, s: so_so(n, t, s, "u")),
        "so-so-su": ("SO(2n-1) x SU(n) on SO(2n)", 3,
                     lambda n, t, s: so_so(n, t, s, "su")),
        "so-so-sp_sp1": ("SO(4n-1) x Sp(n)Sp(1) on SO(4n)", 2,
                         lambda n, t, s: so_sp(n, t, s, "sp1")),
        "so-so-sp_u1": ("SO(4n-1) x Sp(n)U(1) on SO(4n)", 2,
                        lambda n, t, s: so_sp(n, t, s, "u1")),
        "so-so-sp": ("SO(4n-1) x Sp(n) on SO(4n)", 2,
                     lambda n, t, s: so_sp(n, t, s, "none")),
        "g2-so7-so6": ("G2 x SO(6) on SO(7)", None,
                       lambda n, t, s: g2_row(t, s, "so6")),
        "g2-so7-so5so2": ("G2 x SO(5)SO(2) on SO(7)", None,
                          lambda n, t, s: g2_row(t, s, "so5so2")),
        "g2-so7-so5": ("G2 x SO(5) on SO(7)", None,
                       lambda n, t, s: g2_row(t, s, "so5")),
        "spin7-so8": ("Spin(7) x SO(7) on SO(8)", None,
                      lambda n, t, s: spin_row(t, s, 7)),
        "spin9-so16": ("Spin(9) x SO(15) on SO(16)", None,
                       lambda n, t, s: spin_row(t, s, 9)),
    }


TABLE1_ROWS = _row_builders()


@dataclass(frozen=True)
class Table1Result:
    row_id: str
    n: int | None
    description: str
    dim_h1: int
    dim_h2: int
    dim_l: int
    span_rank: int
    transitive: bool
    passed: bool


def verify_table1(row_id, n=None, tol=None, form_scale=1.0):
    """Check one row of the transitive-pair table at parameter n."""
    from .numerics import ToleranceConfig
    tol = tol or ToleranceConfig()
    if row_id not in TABLE1_ROWS:
        raise InvalidInputError(
            f"unknown row {row_id!r}; known: {sorted(TABLE1_ROWS)}")
    description, min_n, builder = TABLE1_ROWS[row_id]
    if min_n is None:
        if n is not None:
            raise InvalidInputError(f"row {row_id} takes no parameter")
    else:
        if n is None:
            n = min_n
        if n < min_n:
            raise InvalidInputError(f"row {row_id} needs n >= {min_n}")
    h1, h2, ambient = builder(n, tol, form_scale)
    rank = rank_of(np.vstack([h1.basis, h2.basis]), tol)
    transitive = rank == ambient.dim
    return Table1Result(row_id=row_id, n=n, description=description,
                        dim_h1=h1.dim, dim_h2=h2.dim, dim_l=ambient.dim,
                        span_rank=rank, transitive=transitive,
                        passed=transitive)


@dataclass(frozen=True)
class ObstructionResult:
    variant: str
    dim_h: int
    dim_l: int
    cohomogeneity: int
    lower_bound: int
    passed: bool


def verify_lemma71_obstruction(tol, form_scale=1.0):
    """Diagonal so(7)-type subalgebras of so(8)(+)so(8) cannot have
    cohomogeneity two: the orbit dimension is capped by dim h = 21 < 28 - 2,
    so the sampled cohomogeneity is at least 7 for both the standard and the
    spin-twisted graph."""
    results = []
    for twisted in (False, True):
        h, so8 = so7_diagonal_subalgebra(tol, twisted, form_scale)
        cohom, _ = cohomogeneity(ActionSpec(so8, h), tol)
        bound = so8.dim - h.dim
        results.append(ObstructionResult(
            variant="spin-twisted" if twisted else "standard",
            dim_h=h.dim, dim_l=so8.dim, cohomogeneity=cohom,
            lower_bound=bound,
            passed=(h.dim == 21 and cohom >= bound and cohom > 2)))
    return results


# ---------------------------------------------------------------------------
# the catalog


@dataclass(frozen=True)
class Expectation:
    transitive: bool | None = None
    cohomogeneity: int | None = None
    min_cohomogeneity: int | None = None
    polar: bool | None = None
    hyperpolar: bool | None = None


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    description: str
    kind: str                   # "action" or "pair"
    builder: object             # callable(tol, form_scale) -> payload
    expectation: Expectation
    source: str = ""


def _polar_entries():
    def conj(family, n):
        def build(tol, scale=1.0):
            algebra = base_algebra(family, n, scale)
            h = diagonal_sigma(algebra, identity_automorphism(algebra), tol)
            return ActionSpec(algebra, h)
        return build

    def sigma_outer_su3(tol, scale=1.0):
        algebra = base_algebra("su", 3, scale)
        sigma = make_automorphism(algebra, "outer_su", tol=tol)
        return ActionSpec(algebra, diagonal_sigma(algebra, sigma, tol))

    def sigma_so8_reflection(tol, scale=1.0):
        algebra = base_algebra("so", 8, scale)
        sigma = make_automorphism(algebra, "outer_so_even", tol=tol)
        return ActionSpec(algebra, diagonal_sigma(algebra, sigma, tol))

    def hermann_so3(tol, scale=1.0):
        algebra = base_algebra("su", 3, scale)
        real_points = so_in_su(algebra, tol)
        return ActionSpec(algebra, product(real_points, real_points, tol))

    def lemma71(twisted):
        def build(tol, scale=1.0):
            h, so8 = so7_diagonal_subalgebra(tol, twisted, scale)
            return ActionSpec(so8, h)
        return build

    return [
        CatalogEntry("conj-su3", "conjugation action of SU(3) on itself",
                     "action", conj("su", 3),
                     Expectation(cohomogeneity=2, polar=True, hyperpolar=True),
                     source="isotropy action; sections are maximal tori"),
        CatalogEntry("conj-so5", "conjugation action of SO(5) on itself",
                     "action", conj("so", 5),
                     Expectation(cohomogeneity=2, polar=True, hyperpolar=True),
                     source="isotropy action; sections are maximal tori"),
        CatalogEntry("sigma-su3-outer",
                     "twisted diagonal of SU(3), complex conjugation twist",
                     "action", sigma_outer_su3,
                     Expectation(polar=True, hyperpolar=True),
                     source="twisted-diagonal actions are hyperpolar"),
        CatalogEntry("sigma-so8-reflection",
                     "twisted diagonal of SO(8), reflection twist",
                     "action", sigma_so8_reflection,
                     Expectation(polar=True, hyperpolar=True),
                     source="twisted-diagonal actions are hyperpolar"),
        CatalogEntry("hermann-so3so3-su3",
                     "SO(3) x SO(3) acting on SU(3)",
                     "action", hermann_so3,
                     Expectation(cohomogeneity=2, polar=True, hyperpolar=True),
                     source="Hermann actions are hyperpolar"),
        CatalogEntry("lemma71-standard",
                     "diagonal so(7) graph in so(8)+so(8), corner inclusion",
                     "action", lemma71(False),
                     Expectation(min_cohomogeneity=7),
                     source="dimension obstruction 28 - 21"),
        CatalogEntry("lemma71-twisted",
                     "diagonal so(7) graph in so(8)+so(8), spin-image twist",
                     "action", lemma71(True),
                     Expectation(min_cohomogeneity=7),
                     source="dimension obstruction 28 - 21"),
    ]


def _pair_entries():
    entries = []
    for row_id, (description, min_n, builder) in TABLE1_ROWS.items():
        def build(tol, scale=1.0, _b=builder, _n=min_n):
            return _b(_n, tol, scale)
        entries.append(CatalogEntry(
            f"table1-{row_id}", description, "pair", build,
            Expectation(transitive=True),
            source="classification of transitive product actions"))

    def negative(tol, scale=1.0):
        ambient = base_algebra("su", 4, scale)
        corner = emb.su_corner_in_su(ambient, 3, tol)
        return corner, corner, ambient

    entries.append(CatalogEntry(
        "negative-su3su3-su4",
        "two copies of the su(3) corner of su(4): not transitive",
        "pair", negative, Expectation(transitive=False),
        source="span rank control case"))
    return entries


def catalog_entries():
    """All catalog entries, polar actions first, deterministic order."""
    return _polar_entries() + _pair_entries()


def get_entry(entry_id):
    for entry in catalog_entries():
        if entry.entry_id == entry_id:
            return entry
    raise InvalidInputError(f"unknown catalog entry {entry_id!r}")


@dataclass(frozen=True)
class EntryResult:
    entry_id: str
    passed: bool
    details: dict


def evaluate_entry(entry, tol, form_scale=1.0):
    """Run one catalog entry and compare against its expectation."""
    exp = entry.expectation
    if entry.kind == "pair":
        h1, h2, ambient = entry.builder(tol, form_scale)
        transitive = is_transitive(h1, h2, ambient, tol)
        passed = transitive == exp.transitive
        details = {"transitive": transitive, "dim_h1": h1.dim,
                   "dim_h2": h2.dim, "dim_l": ambient.dim}
        return EntryResult(entry.entry_id, passed, details)
    action = entry.builder(tol, form_scale)
    report = analyze(action, tol)
    passed = True
    if exp.cohomogeneity is not None:
        passed &= report.cohomogeneity == exp.cohomogeneity
    if exp.min_cohomogeneity is not None:
        passed &= report.cohomogeneity >= exp.min_cohomogeneity
    if exp.polar is not None:
        passed &= report.polar == exp.polar
    if exp.hyperpolar is not None:
        passed &= report.hyperpolar == exp.hyperpolar
    details = {
        "cohomogeneity": report.cohomogeneity,
        "polar": report.polar,
        "hyperpolar": report.hyperpolar,
        "residual_triple": report.residual_triple,
        "residual_orth": report.residual_orth,
        "residual_abelian": report.residual_abelian,
    }
    return EntryResult(entry.entry_id, passed, details)


@dataclass(frozen=True)
class SuiteSummary:
    results: tuple
    passed: int
    failed: int

    @property
    def ok(self):
        return self.failed == 0


def run_known_answer_suite(tol, form_scale=1.0, entry_ids=None):
    """Run every catalog entry (or a selection); failures are data."""
    results = []
    for entry in catalog_entries():
        if entry_ids is not None and entry.entry_id not in entry_ids:
            continue
        results.append(evaluate_entry(entry, tol, form_scale))
    passed = sum(1 for r in results if r.passed)
    return SuiteSummary(results=tuple(results), passed=passed,
                        failed=len(results) - passed)
