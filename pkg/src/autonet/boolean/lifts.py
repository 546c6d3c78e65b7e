"""Lifting Boolean networks to globally commutative networks over larger alphabets."""

from __future__ import annotations

import numpy as np

from ..commutativity import support
from ..core import Network, NetworkError, digit_matrix, place_values


class LiftError(NetworkError):
    pass


def _require_boolean(f: Network) -> None:
    if f.q != 2:
        raise LiftError(f"lifts take a Boolean network, got q={f.q}")


def lift_q4(f: Network) -> Network:
    """Quaternary network ``g(a, b) = (f(b), b)``.

    Each symbol packs two bits as ``2 * a + b``; the low bit ``b`` is left
    alone and the high bit receives ``f`` applied to the low bits.
    """
    _require_boolean(f)
    d = digit_matrix(4, f.n)
    low = d % 2
    inner = low @ place_values(2, f.n)
    return Network.from_digits(4, f.n, 2 * f.image_digits[inner] + low)


def lift_q3(f: Network) -> Network:
    """Ternary network: symbol 2 is absorbing, otherwise ``f`` on halved states.

    ``g_i(x) = 2`` when ``x_i = 2``; otherwise ``f_i`` evaluated at
    ``floor(x / 2)`` coordinate-wise. Requires that no ``f_i`` depends on
    ``x_i``.
    """
    _require_boolean(f)
    loops = [i for i in range(1, f.n + 1) if i in support(f, i)]
    if loops:
        raise LiftError(f"lift_q3 needs f_i independent of x_i; violated at nodes {loops}")
    d = digit_matrix(3, f.n)
    halved = (d // 2) @ place_values(2, f.n)
    out = np.where(d == 2, 2, f.image_digits[halved])
    return Network.from_digits(3, f.n, out)
