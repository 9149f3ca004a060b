"""Genus characters on binary quadratic forms.

chi_{D0}(Q) for a fundamental discriminant D0 dividing disc(Q): zero when
gcd(a, b, c, D0) > 1, otherwise the Kronecker symbol (D0 | r) at any value
r = Q(u, v) coprime to D0.  The symbol is independent of the representative
chosen; the search just has to find one.
"""

from math import gcd

from .arith import is_fundamental_discriminant, kronecker
from .errors import PreconditionError
from .quadforms import Form, discriminant


def genus_character(d0: int, form: Form) -> int:
    """chi_{D0}(Q), searching expanding coordinate boxes for a represented
    value coprime to D0 (first hit wins; all hits agree)."""
    if not is_fundamental_discriminant(d0):
        raise PreconditionError(f"D0 must be a fundamental discriminant, got {d0}")
    a, b, c = form
    disc = discriminant(form)
    if disc % d0:
        raise PreconditionError(f"D0={d0} does not divide disc={disc}")
    if (disc // d0) % 4 not in (0, 1):
        raise PreconditionError(f"disc/D0 = {disc // d0} is not a discriminant")
    if gcd(gcd(a, b), gcd(c, d0)) > 1:
        return 0
    for box in range(1, abs(d0) + 3):
        for u in range(-box, box + 1):
            for v in range(-box, box + 1):
                if max(abs(u), abs(v)) != box:
                    continue
                r = a * u * u + b * u * v + c * v * v
                if gcd(r, d0) == 1:
                    return kronecker(d0, r)
    raise RuntimeError(f"no represented value coprime to {d0} found for {form}")


def genus_character_m3(form: Form) -> int:
    """chi_{-3} via the closed form: (-3 | a) when 3 does not divide a,
    else (-3 | c)."""
    a, _, c = form
    if a % 3 == 0 and c % 3 == 0:
        raise PreconditionError(f"chi_-3 shortcut undefined when 3 | gcd(a, c): {form}")
    if a % 3:
        return kronecker(-3, a)
    return kronecker(-3, c)
