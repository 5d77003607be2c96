"""Verification suites: machine checks of the algebraic identities.

Each suite enumerates a deterministic case list (seeded where random), checks
an exact equality per case, and reports failures with a minimized
counterexample: indices are reduced componentwise first, then vertices are
dropped, as long as the failure persists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator, Optional

from .catalog import (
    builtin_catalog,
    harvestable_catalog,
    random_harvestable,
    symmetric_hybrid_tree,
    unit_tree,
)
from .errors import UnknownSuite
from .indices import (
    Tuple_,
    all_indices,
    b_binom,
    bounded_vectors,
    tuple_add,
    tuple_reverse,
    weight,
)
from .rationals import Rat
from .series import TSeries
from .symmetrize import phi, phi_hat
from .trees import (
    Tree,
    cap_phi,
    cap_phi_hat,
    circ_h,
    harvestable_form,
    is_essentially_positive,
    is_harvestable,
    symmetrization_terms,
    w_word,
)
from .words import HElem, harmonic, right_mul_x_pow, shuffle, shuffle_all
from .zeta import z_m_eval, z_m_series, zeta_shat_tree, zeta_tree

SUITE_NAMES = (
    "main",
    "btt",
    "t-btt",
    "kaneko",
    "vanish",
    "root-change",
    "harvest",
    "algebra",
    "assoc",
)


@dataclass(frozen=True)
class RunConfig:
    t_order: int = 8
    m_max: int = 10
    weight_max: int = 4
    seed: int = 0
    output: str = "text"
    count: int = 100

    def __post_init__(self):
        for name in ("t_order", "m_max", "weight_max"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be >= 0")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")


@dataclass
class Case:
    key: str
    check: Callable[[], Optional[str]]
    shrink: Callable[[], list] = field(default=lambda: [])


@dataclass
class Failure:
    case: str
    detail: str


@dataclass
class Report:
    suite: str
    config: dict
    cases: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        lines += [f"{k}: {v}" for k, v in sorted(self.config.items())]
        lines.append(f"cases: {self.cases}")
        lines.append(f"failures: {len(self.failures)}")
        for f in self.failures:
            lines.append(f"FAIL {f.case} :: {f.detail}")
        lines.append("status: ok" if self.ok else "status: fail")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "cases": self.cases,
            "failures": [{"case": f.case, "detail": f.detail} for f in self.failures],
            "ok": self.ok,
        }


def _z(k: int) -> HElem:
    return HElem.from_index((k,))


def _diff(lhs, rhs) -> Optional[str]:
    if lhs == rhs:
        return None
    return f"lhs={lhs} rhs={rhs}"


# ---------------------------------------------------------------------------
# identity builders (the right-hand sides of the checked equalities)


def btt_lhs(ks: Tuple_) -> HElem:
    """phi of (z_{k_1} sh ... sh z_{k_r}) x^{k_{r+1}}."""
    prod = shuffle_all(_z(k) for k in ks[:-1])
    return phi(right_mul_x_pow(prod, ks[-1]))


def btt_rhs(ks: Tuple_) -> HElem:
    """Signed sum over skipped positions: one factor moves into the x power."""
    out = HElem.zero()
    for i, ki in enumerate(ks):
        rest = ks[:i] + ks[i + 1 :]
        sign = -1 if (ki + ks[-1]) % 2 else 1
        term = right_mul_x_pow(shuffle_all(_z(k) for k in rest), ki)
        out = out + sign * term
    return out


def t_btt_lhs(ks: Tuple_, order: int) -> TSeries:
    prod = shuffle_all(_z(k) for k in ks[:-1])
    return phi_hat(right_mul_x_pow(prod, ks[-1]), order)


def t_btt_rhs(ks: Tuple_, order: int) -> TSeries:
    r = len(ks) - 1
    rows = [HElem.zero() for _ in range(order)]
    rows[0] = right_mul_x_pow(shuffle_all(_z(k) for k in ks[:-1]), ks[-1])
    for i in range(r):
        sign = -1 if (ks[i] + ks[-1]) % 2 else 1
        others = ks[:i] + ks[i + 1 : r]
        for l in range(order):
            for lp in range(order - l):
                c = comb(ks[i] + l - 1, l) * comb(ks[-1] + lp - 1, lp)
                factors = [_z(k) for k in others] + [_z(ks[-1] + lp)]
                term = right_mul_x_pow(shuffle_all(factors), ks[i] + l)
                rows[l + lp] = rows[l + lp] + (sign * c) * term
    return TSeries(tuple(rows), order)


def kaneko_lhs(k: Tuple_, l: Tuple_, order: int) -> TSeries:
    return phi_hat(shuffle(HElem.from_index(k), HElem.from_index(l)), order)


def kaneko_rhs(k: Tuple_, l: Tuple_, order: int) -> TSeries:
    sign = -1 if weight(l) % 2 else 1
    acc = TSeries.zeros(HElem.zero(), order)
    for lp in bounded_vectors(len(l), order - 1):
        b = b_binom(l, lp)
        if not b:
            continue
        word = HElem.from_index(k + tuple_reverse(tuple_add(l, lp)))
        acc = acc + phi_hat(word, order).shift(sum(lp)).scale(b)
    return acc.scale(sign)


def main_lhs(t: Tree, order: int) -> TSeries:
    return phi_hat(w_word(harvestable_form(t)), order)


def main_rhs(t: Tree, order: int) -> TSeries:
    """Tree-side of the main identity: signed, b-weighted words of the
    harvestable forms of the re-rooted index-bumped trees."""
    rows = [HElem.zero() for _ in range(order)]
    for degree, coeff, shifted in symmetrization_terms(t, order):
        rows[degree] = rows[degree] + coeff * w_word(harvestable_form(shifted))
    return TSeries(tuple(rows), order)


def diagram_rhs(t: Tree, order: int) -> TSeries:
    """Same identity routed through the tree-level map and combination merging."""

    def harvest_words(combo) -> HElem:
        out = HElem.zero()
        for tree, c in combo.terms():
            out = out + c * w_word(harvestable_form(tree))
        return out

    return cap_phi_hat(t, order).map(harvest_words)


def root_change_rhs(t: Tree, M: int, order: int) -> TSeries:
    rows = [Rat(0) for _ in range(order)]
    for degree, coeff, shifted in symmetrization_terms(t, order):
        rows[degree] += coeff * zeta_tree(harvestable_form(shifted), M)
    return TSeries(tuple(rows), order)


# ---------------------------------------------------------------------------
# shrinking helpers


def _index_shrinks(ks: Tuple_, rebuild: Callable[[Tuple_], Optional[Case]]) -> list:
    out = []
    for i, e in enumerate(ks):
        if e > 1:
            c = rebuild(ks[:i] + (e - 1,) + ks[i + 1 :])
            if c:
                out.append(c)
    for i in range(len(ks)):
        c = rebuild(ks[:i] + ks[i + 1 :])
        if c:
            out.append(c)
    return out


def _tree_shrinks(t: Tree, rebuild: Callable[[Tree], Optional[Case]]) -> list:
    out = []
    for u, v, k in t.edges:
        if k >= 1:
            edges = [(a, b, k - 1 if (a, b) == (u, v) else kk) for a, b, kk in t.edges]
            t2 = Tree.build(t.root, t.black, t.white, edges)
            if is_essentially_positive(t2):
                c = rebuild(t2)
                if c:
                    out.append(c)
    for leaf in sorted(t.vertices):
        if leaf == t.root or t.degree(leaf) != 1:
            continue
        edges = [e for e in t.edges if leaf not in (e[0], e[1])]
        t2 = Tree.build(t.root, t.black - {leaf}, t.white - {leaf}, edges)
        try:
            t2.validate()
        except Exception:
            continue
        if is_essentially_positive(t2):
            c = rebuild(t2)
            if c:
                out.append(c)
    return out


# ---------------------------------------------------------------------------
# suites


def _suite_btt(cfg: RunConfig) -> Iterator[Case]:
    def make(ks: Tuple_) -> Optional[Case]:
        if len(ks) < 2 or not all(e >= 1 for e in ks):
            return None
        return Case(
            key=f"index={','.join(map(str, ks))}",
            check=lambda: _diff(btt_lhs(ks), btt_rhs(ks)),
            shrink=lambda: _index_shrinks(ks, make),
        )

    for r in (1, 2, 3):
        for ks in all_indices(cfg.weight_max):
            if len(ks) == r + 1:
                yield make(ks)


def _suite_t_btt(cfg: RunConfig) -> Iterator[Case]:
    order = cfg.t_order

    def make(ks: Tuple_) -> Optional[Case]:
        if len(ks) < 2 or not all(e >= 1 for e in ks):
            return None
        return Case(
            key=f"index={','.join(map(str, ks))} t_order={order}",
            check=lambda: _diff(t_btt_lhs(ks, order), t_btt_rhs(ks, order)),
            shrink=lambda: _index_shrinks(ks, make),
        )

    for r in (1, 2):
        for ks in all_indices(cfg.weight_max):
            if len(ks) == r + 1:
                yield make(ks)


def _suite_kaneko(cfg: RunConfig) -> Iterator[Case]:
    order = cfg.t_order

    def make(pair: Tuple_) -> Optional[Case]:
        k, l = pair
        if not (all(e >= 1 for e in k) and all(e >= 1 for e in l)):
            return None

        def check() -> Optional[str]:
            d = _diff(kaneko_lhs(k, l, order), kaneko_rhs(k, l, order))
            if d:
                return "series: " + d
            lhs0 = phi(shuffle(HElem.from_index(k), HElem.from_index(l)))
            sign = -1 if weight(l) % 2 else 1
            rhs0 = sign * phi(HElem.from_index(k + tuple_reverse(l)))
            d = _diff(lhs0, rhs0)
            return "constant: " + d if d else None

        def shrink() -> list:
            out = _index_shrinks(k, lambda k2: make((k2, l)))
            out += _index_shrinks(l, lambda l2: make((k, l2)))
            return out

        return Case(
            key=f"k={','.join(map(str, k))} l={','.join(map(str, l))}",
            check=check,
            shrink=shrink,
        )

    idxs = all_indices(cfg.weight_max)
    for k in idxs:
        for l in idxs:
            if weight(k) + weight(l) <= cfg.weight_max:
                yield make((k, l))


def _suite_vanish(cfg: RunConfig) -> Iterator[Case]:
    del cfg

    def make(k1: int, k2: int, l: int) -> Case:
        t = symmetric_hybrid_tree(k1, k2, l)

        def check() -> Optional[str]:
            combo = cap_phi(t)
            if combo:
                return f"tree map image nonzero: {combo}"
            img = phi(w_word(harvestable_form(t)))
            if img:
                return f"word map image nonzero: {img}"
            return None

        return Case(key=f"tree={t.key}", check=check)

    for k1 in (1, 2):
        for k2 in (1, 2):
            for l in (1, 3):
                yield make(k1, k2, l)


def _suite_root_change(cfg: RunConfig) -> Iterator[Case]:
    order = cfg.t_order
    trees = [t for t in harvestable_catalog() if len(t.vertices) > 1]

    def make(t: Tree, M: int) -> Optional[Case]:
        if not is_harvestable(t) or len(t.vertices) == 1:
            return None
        return Case(
            key=f"tree={t.key} M={M} t_order={order}",
            check=lambda: _diff(zeta_shat_tree(t, M, order), root_change_rhs(t, M, order)),
            shrink=lambda: _tree_shrinks(t, lambda t2: make(harvestable_form(t2), M)),
        )

    for t in trees:
        for M in range(1, cfg.m_max + 1):
            yield make(t, M)


def _suite_harvest(cfg: RunConfig) -> Iterator[Case]:
    order = cfg.t_order

    def make(t: Tree) -> Optional[Case]:
        if t.root not in t.black or not is_essentially_positive(t):
            return None

        def check() -> Optional[str]:
            hf = harvestable_form(t)
            if not is_harvestable(hf):
                return f"harvestable form is not harvestable: {hf.key}"
            for M in range(1, cfg.m_max + 1):
                d = _diff(zeta_shat_tree(t, M, order), zeta_shat_tree(hf, M, order))
                if d:
                    return f"shifted sums differ at M={M}: {d}"
                if zeta_tree(t, M) != zeta_tree(hf, M):
                    return f"plain sums differ at M={M}"
            return None

        return Case(
            key=f"tree={t.key}",
            check=check,
            shrink=lambda: _tree_shrinks(t, make),
        )

    for t in builtin_catalog():
        yield make(t)


def _suite_main(cfg: RunConfig) -> Iterator[Case]:
    order = cfg.t_order

    def make(t: Tree) -> Optional[Case]:
        if t.root not in t.black or not is_essentially_positive(t):
            return None

        def check() -> Optional[str]:
            lhs = main_lhs(t, order)
            d = _diff(lhs, main_rhs(t, order))
            if d:
                return "word identity: " + d
            d = _diff(lhs, diagram_rhs(t, order))
            if d:
                return "diagram: " + d
            for M in range(1, cfg.m_max + 1):
                d = _diff(z_m_series(lhs, M), root_change_rhs(t, M, order))
                if d:
                    return f"numeric at M={M}: " + d
            return None

        return Case(
            key=f"tree={t.key}",
            check=check,
            shrink=lambda: _tree_shrinks(t, make),
        )

    for t in builtin_catalog():
        yield make(t)


def _suite_algebra(cfg: RunConfig) -> Iterator[Case]:
    words = [HElem.from_index(k) for k in all_indices(cfg.weight_max)]
    idxs = all_indices(cfg.weight_max)
    unit = HElem.unit()

    def pair_case(i: int, j: int) -> Case:
        a, b = words[i], words[j]
        ka, kb = idxs[i], idxs[j]

        def check() -> Optional[str]:
            if shuffle(a, b) != shuffle(b, a):
                return "shuffle not commutative"
            if harmonic(a, b) != harmonic(b, a):
                return "harmonic not commutative"
            if not (shuffle(a, b).is_h1 and harmonic(a, b).is_h1):
                return "product left the y-initial subspace"
            for M in range(2, cfg.m_max + 1):
                lhs = z_m_eval(harmonic(a, b), M)
                rhs = z_m_eval(a, M) * z_m_eval(b, M)
                if lhs != rhs:
                    return f"harmonic sums not multiplicative at M={M}: {lhs} != {rhs}"
            return None

        return Case(
            key=f"k={','.join(map(str, ka))} l={','.join(map(str, kb))}",
            check=check,
        )

    def unit_case(i: int) -> Case:
        a = words[i]

        def check() -> Optional[str]:
            if shuffle(a, unit) != a or shuffle(unit, a) != a:
                return "shuffle unit law broken"
            if harmonic(a, unit) != a or harmonic(unit, a) != a:
                return "harmonic unit law broken"
            return None

        return Case(key=f"unit k={','.join(map(str, idxs[i]))}", check=check)

    def triple_case(n: int, ka: Tuple_, kb: Tuple_, kc: Tuple_) -> Case:
        a, b, c = (HElem.from_index(k) for k in (ka, kb, kc))

        def check() -> Optional[str]:
            if shuffle(shuffle(a, b), c) != shuffle(a, shuffle(b, c)):
                return "shuffle not associative"
            if harmonic(harmonic(a, b), c) != harmonic(a, harmonic(b, c)):
                return "harmonic not associative"
            return None

        return Case(key=f"triple#{n:03d} {ka}/{kb}/{kc}", check=check)

    for i in range(len(words)):
        yield unit_case(i)
        for j in range(i, len(words)):
            yield pair_case(i, j)
    rng = random.Random(cfg.seed)
    for n in range(cfg.count):
        ka, kb, kc = (rng.choice(idxs) for _ in range(3))
        yield triple_case(n, ka, kb, kc)


def _suite_assoc(cfg: RunConfig) -> Iterator[Case]:
    rng = random.Random(cfg.seed)
    unit = unit_tree()

    def make(n: int, a: Tree, b: Tree, c: Tree) -> Case:
        def check() -> Optional[str]:
            if circ_h(a, b).key != circ_h(b, a).key:
                return "glue product not commutative"
            left = circ_h(circ_h(a, b), c).key
            right = circ_h(a, circ_h(b, c)).key
            if left != right:
                return f"glue product not associative: {left} != {right}"
            if circ_h(a, unit).key != a.key:
                return "unit law broken"
            return None

        return Case(key=f"triple#{n:03d} {a.key} | {b.key} | {c.key}", check=check)

    for n in range(cfg.count):
        a, b, c = (random_harvestable(rng, max_vertices=5, k_cap=2) for _ in range(3))
        yield make(n, a, b, c)


_SUITES = {
    "main": _suite_main,
    "btt": _suite_btt,
    "t-btt": _suite_t_btt,
    "kaneko": _suite_kaneko,
    "vanish": _suite_vanish,
    "root-change": _suite_root_change,
    "harvest": _suite_harvest,
    "algebra": _suite_algebra,
    "assoc": _suite_assoc,
}


def _minimize(case: Case, detail: str) -> tuple[Case, str]:
    improved = True
    while improved:
        improved = False
        for cand in case.shrink():
            d = cand.check()
            if d is not None:
                case, detail = cand, d
                improved = True
                break
    return case, detail


def run_suite(name: str, cfg: RunConfig) -> Report:
    try:
        gen = _SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    failures = []
    count = 0
    for case in gen(cfg):
        if case is None:
            continue
        count += 1
        detail = case.check()
        if detail is not None:
            mcase, mdetail = _minimize(case, detail)
            failures.append(Failure(mcase.key, mdetail))
    failures.sort(key=lambda f: f.case)
    config = {
        "t_order": cfg.t_order,
        "m_max": cfg.m_max,
        "weight_max": cfg.weight_max,
        "seed": cfg.seed,
        "count": cfg.count,
    }
    return Report(suite=name, config=config, cases=count, failures=failures)
