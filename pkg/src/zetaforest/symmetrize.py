"""The t-adic symmetrization map on the y-initial word algebra.

For a z-basis word with index k = (k_1, ..., k_r) of depth r the image is

    phi_hat(z_k) = sum_{i=0..r} (-1)^wt(tail) z_head sh
                   sum_l b(tail; l) z_reverse(tail + l) t^wt(l)

with (head, tail) = (k_[i], k^[i]) and l running over non-negative vectors
of the tail's depth.  Truncation at order N keeps exactly the l with
wt(l) <= N-1, which is exact per coefficient since each l contributes only
in degree wt(l).  phi is the constant term (t = 0).
"""

from __future__ import annotations

from functools import lru_cache

from .indices import Tuple_, b_binom, bounded_vectors, tuple_add, tuple_reverse, weight
from .series import TSeries
from .words import HElem, shuffle


@lru_cache(maxsize=None)
def _phi_hat_index(k: Tuple_, order: int) -> TSeries:
    r = len(k)
    rows = [HElem.zero() for _ in range(order)]
    for i in range(r + 1):
        head, tail = k[:i], k[i:]
        sign = -1 if weight(tail) % 2 else 1
        left = HElem.from_index(head)
        for l in bounded_vectors(len(tail), order - 1):
            b = b_binom(tail, l)
            if not b:
                continue
            right = HElem.from_index(tuple_reverse(tuple_add(tail, l)))
            rows[sum(l)] += (sign * b) * shuffle(left, right)
    return TSeries(tuple(rows), order)


def phi_hat(a: HElem, order: int) -> TSeries:
    """Q[[t]]-linear symmetrization of a y-initial element, truncated at `order`."""
    out = TSeries.zeros(HElem.zero(), order)
    for k, c in a.z_terms():
        out = out + _phi_hat_index(k, order).scale(c)
    return out


def phi(a: HElem) -> HElem:
    """Constant term of the symmetrization (the t = 0 specialization)."""
    return phi_hat(a, 1).coeffs[0]
