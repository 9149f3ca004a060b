"""The vanishing criterion: exact genus-character sums over enumerated forms,
per-level registry data, goodness predicates, and verdicts.

For a level N in the registry with auxiliary discriminant D0 and evaluation
points x1, x2, the central value L(E_D, 1) of the twist by a good fundamental
D < 0 vanishes iff the two finite sums

    F(x) = sum over Q in S_{N, D*D0}(x) of chi_{D0}(Q)

agree at x1 and x2.  Everything here is exact integer arithmetic.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .arith import factorize, is_fundamental_discriminant, is_prime, is_square, kronecker
from .errors import PreconditionError
from .genus import genus_character
from .newformdata import NewformSource, default_sources
from .quadforms import FormSet, enumerate_forms

DIMENSION_ONE_LEVELS = (11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49)


@dataclass(frozen=True)
class LevelData:
    """Registry row for one dimension-one level.

    noninvariant_m lists |D| values known to give unequal sums at x1, x2
    (regression fixtures); underlined_m marks the subset that are good
    fundamental discriminants, hence carry a nonvanishing conclusion.
    """

    level: int
    d0: int
    x1: Fraction
    x2: Fraction
    condition: str
    noninvariant_m: tuple
    underlined_m: frozenset

    @property
    def coefficient_source(self) -> NewformSource:
        return default_sources()[self.level]


def _row(level, d0, x1, x2, condition, listed, underlined):
    return LevelData(level, d0, Fraction(x1), Fraction(x2), condition,
                     tuple(listed), frozenset(underlined))


LEVELS = {
    11: _row(11, -3, 0, "1/3", "(-11/|D|) = 1",
             (4, 11, 12, 15, 16, 20, 23, 27, 31, 44, 48), (15, 23, 31)),
    14: _row(14, -3, 0, "1/2", "(-56/|D|) = 1",
             (19, 20, 24, 27, 35, 40, 52, 56, 59, 68), (19, 59)),
    15: _row(15, -4, 0, "1/3", "(5/|D|) = 1 and (-3/|D|) != -1",
             (15, 16, 19, 24, 31, 39, 40, 51, 55, 60), (19, 31, 39, 51)),
    17: _row(17, -7, 0, "1/2", "(-68/|D|) = 1",
             (3, 11, 20, 23, 24, 28, 31, 40, 48, 51, 63), (3, 11, 23, 31)),
    19: _row(19, -4, 0, "1/2", "(-19/|D|) = 1",
             (7, 11, 19, 20, 24, 28, 35, 36, 39, 43, 44), (7, 11, 20, 24, 35, 39)),
    20: _row(20, -3, 0, "1/2", "|D| = 3 (mod 8) and (-20/|D|) = 1",
             (27, 35, 43, 67, 83, 107, 115, 123), (43, 67, 83, 107, 123)),
    21: _row(21, -19, 0, "1/2", "(-7/|D|) = -1 and (-3/|D|) = 1",
             (3, 7, 24, 27, 28, 31, 40, 48, 52, 63), (3, 24, 31, 40, 52)),
    24: _row(24, -11, "1/2", "1/3", "|D| = 3 (mod 8) and (-24/|D|) = 1",
             (3, 27, 35, 51, 59, 75, 83, 99, 107, 123), (3, 35, 51, 59, 83, 107, 123)),
    27: _row(27, -4, 0, "1/2", "(-3/|D|) = 1",
             (7, 19, 28, 36, 40, 43, 52, 55, 64, 67, 76), (7, 19, 40, 43, 52, 55, 67)),
    32: _row(32, -3, 0, "1/3", "|D| = 3 (mod 8)",
             (11, 12, 19, 35, 43, 48, 51, 59, 67, 75, 83), (11, 19, 35, 43, 51, 59, 67, 83)),
    36: _row(36, -11, 0, "1/2", "|D| = 3 (mod 8) and (-3/|D|) = -1",
             (27, 35, 59, 83, 99, 107, 131, 155, 171), (35, 59, 83, 107, 131, 155)),
    49: _row(49, -3, 0, "1/7", "(-7/|D|) = -1",
             (19, 20, 27, 31, 40, 47, 48, 55, 59, 68, 75), (19, 20, 31, 40, 47, 55, 59, 68)),
}

_CONDITIONS = {
    11: lambda m: kronecker(-11, m) == 1,
    14: lambda m: kronecker(-56, m) == 1,
    15: lambda m: kronecker(5, m) == 1 and kronecker(-3, m) != -1,
    17: lambda m: kronecker(-68, m) == 1,
    19: lambda m: kronecker(-19, m) == 1,
    20: lambda m: m % 8 == 3 and kronecker(-20, m) == 1,
    21: lambda m: kronecker(-7, m) == -1 and kronecker(-3, m) == 1,
    24: lambda m: m % 8 == 3 and kronecker(-24, m) == 1,
    27: lambda m: kronecker(-3, m) == 1,
    32: lambda m: m % 8 == 3,
    36: lambda m: m % 8 == 3 and kronecker(-3, m) == -1,
    49: lambda m: kronecker(-7, m) == -1,
}


def level_data(level: int) -> LevelData:
    try:
        return LEVELS[level]
    except KeyError:
        raise PreconditionError(
            f"level {level} is not a dimension-one level {DIMENSION_ONE_LEVELS}")


@dataclass(frozen=True)
class FEvaluation:
    """One exact sum F(x): integer value and the size of the underlying set."""

    d: int
    x: Fraction
    value: int
    count: int
    forms: FormSet


def f_sum(level: int, d0: int, d: int, x) -> FEvaluation:
    """Character-weighted count over forms of discriminant d*d0 with
    level | a < 0 and positive value at x."""
    if not is_fundamental_discriminant(d0):
        raise PreconditionError(f"D0 must be a fundamental discriminant, got {d0}")
    if d == 0 or d * d0 < 0:
        raise PreconditionError(f"D*D0 must be positive, got D={d}, D0={d0}")
    if d % 4 not in (0, 1):
        raise PreconditionError(f"D must be a discriminant (0 or 1 mod 4), got {d}")
    delta = d * d0
    if is_square(delta):
        raise PreconditionError(f"|D*D0| = {delta} is a perfect square")
    forms = enumerate_forms(level, delta, x)
    value = sum(genus_character(d0, q) for q in forms)
    return FEvaluation(d=d, x=forms.x, value=value, count=len(forms), forms=forms)


def s_count(level: int, d0: int, d: int, x) -> int:
    """Unweighted cardinality of the same solution set."""
    return f_sum(level, d0, d, x).count


def is_good(level: int, d: int) -> bool:
    """Goodness rules for odd fundamental D < 0 at level N:
    (1) N nonsquare: (-4N/|D|) = 1; (2) 2 | N: |D| = 3 (mod 8);
    (3) p = 7 (mod 8), p | N: (-p/|D|) = -1;
    (4) p = 3 (mod 8), p^r || N: (-p/|D|) = (-1)^(r+1).
    Even fundamental D are outside the rules' domain and return False.
    """
    if level < 1:
        raise PreconditionError(f"level must be >= 1, got {level}")
    if not is_fundamental_discriminant(d) or d >= 0:
        raise PreconditionError(f"D must be a negative fundamental discriminant, got {d}")
    if d % 2 == 0:
        return False
    m = -d
    if not is_square(level) and kronecker(-4 * level, m) != 1:
        return False
    if level % 2 == 0 and m % 8 != 3:
        return False
    for p, r in factorize(level).items():
        if p % 8 == 7 and kronecker(-p, m) != -1:
            return False
        if p % 8 == 3 and kronecker(-p, m) != (-1) ** (r + 1):
            return False
    return True


def table_condition(level: int, d: int) -> bool:
    """The registry row's explicit good-discriminant condition, evaluated
    literally on |D|."""
    row = level_data(level)
    if not is_fundamental_discriminant(d) or d >= 0:
        raise PreconditionError(f"D must be a negative fundamental discriminant, got {d}")
    return _CONDITIONS[row.level](-d)


class Vanishing(Enum):
    L_VANISHES = "vanishes"
    L_NONZERO = "nonzero"


@dataclass(frozen=True)
class VanishingVerdict:
    level: int
    d: int
    outcome: Vanishing
    x1_eval: FEvaluation
    x2_eval: FEvaluation
    note: str = ""

    @property
    def f_x1(self) -> int:
        return self.x1_eval.value

    @property
    def f_x2(self) -> int:
        return self.x2_eval.value


def vanishing_verdict(level: int, d: int) -> VanishingVerdict:
    """Decide L(E_D, 1) = 0 by comparing the two registry sums."""
    row = level_data(level)
    if not is_fundamental_discriminant(d) or d >= 0:
        raise PreconditionError(f"D must be a negative fundamental discriminant, got {d}")
    if not table_condition(level, d):
        raise PreconditionError(
            f"level {level} requires {row.condition}; D = {d} violates it")
    if is_square(d * row.d0):
        raise PreconditionError(f"|D*D0| = {d * row.d0} is a perfect square")
    e1 = f_sum(level, row.d0, d, row.x1)
    e2 = f_sum(level, row.d0, d, row.x2)
    outcome = Vanishing.L_VANISHES if e1.value == e2.value else Vanishing.L_NONZERO
    note = ""
    if d % 2 == 0:
        note = ("even discriminant: accepted via the level table condition; "
                "the odd-discriminant goodness rules do not cover it")
    elif gcd(-d, level) > 1:
        note = f"gcd(|D|, N) = {gcd(-d, level)} > 1: criterion applied outside the coprime case"
    return VanishingVerdict(level, d, outcome, e1, e2, note)


class Congruence(Enum):
    PROVEN_NON_CONGRUENT = "not congruent (unconditional)"
    CONGRUENT_ASSUMING_BSD = "congruent assuming BSD"


@dataclass(frozen=True)
class CongruenceVerdict:
    n: int
    outcome: Congruence
    basis: VanishingVerdict


def congruent_verdict(n: int) -> CongruenceVerdict:
    """Congruent-number decision for n = 3 (mod 8) via the level-32 twist."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if n % 8 != 3:
        raise PreconditionError(f"n = 3 (mod 8) required, got {n} = {n % 8} (mod 8)")
    if not is_fundamental_discriminant(-n):
        raise PreconditionError(f"-{n} is not a fundamental discriminant")
    if is_square(3 * n):
        raise PreconditionError(f"3n = {3 * n} is a perfect square")
    basis = vanishing_verdict(32, -n)
    if basis.outcome is Vanishing.L_NONZERO:
        outcome = Congruence.PROVEN_NON_CONGRUENT
    else:
        outcome = Congruence.CONGRUENT_ASSUMING_BSD
    return CongruenceVerdict(n, outcome, basis)


@dataclass(frozen=True)
class ParityResult:
    p: int
    count: int
    odd: bool
    proven_noncongruent: bool


def parity_test(p: int) -> ParityResult:
    """Count S_{32, -3p}(1/3) for prime p = 3 (mod 8); odd count proves
    nonvanishing (sufficient condition only)."""
    if p < 1 or not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    if p % 8 != 3:
        raise PreconditionError(f"p = 3 (mod 8) required, got {p} = {p % 8} (mod 8)")
    if is_square(3 * p):
        raise PreconditionError(f"3p = {3 * p} is a perfect square")
    count = s_count(32, -3, -p, Fraction(1, 3))
    odd = count % 2 == 1
    return ParityResult(p, count, odd, odd)


class Cubes(Enum):
    FINITE_PROVEN = "finitely many rational points (unconditional)"
    INFINITE_ASSUMING_BSD = "infinitely many rational points assuming BSD"


@dataclass(frozen=True)
class CubesVerdict:
    n: int
    outcome: Cubes
    basis: VanishingVerdict


def cubes_verdict(n: int) -> CubesVerdict:
    """Finiteness of rational points on x^3 + n*y^2 = 432 (twists of the
    Fermat cubic) for n = 1 (mod 3) via the level-27 twist."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if not is_fundamental_discriminant(-n):
        raise PreconditionError(f"-{n} is not a fundamental discriminant")
    if n % 3 != 1:
        raise PreconditionError(f"n = 1 (mod 3) required, got {n} = {n % 3} (mod 3)")
    if is_square(4 * n):
        raise PreconditionError(f"4n = {4 * n} is a perfect square")
    basis = vanishing_verdict(27, -n)
    if basis.outcome is Vanishing.L_NONZERO:
        outcome = Cubes.FINITE_PROVEN
    else:
        outcome = Cubes.INFINITE_ASSUMING_BSD
    return CubesVerdict(n, outcome, basis)
