"""Continued fractions of rationals and PLFTs, and orphan-root location.

A positive rational has the usual Euclidean expansion [q0, q1, ..., qk]
(two standard representations, differing in whether the last term is
split as qk = (qk-1) + 1/1).  A PLFT w has an analogous expansion

    w = q0 + 1/(q1 + ... + 1/(q_{k-1} + 1/q))

produced by a division algorithm whose tail q is an orphan PLFT; the
root of the tree containing w is q when k is even and 1/q when k is
odd.  The same root can be found a second way, from the rational
expansions of a/c and b/d alone: choose representations maximizing the
shared prefix, peel it off column-wise, and the residual matrix is the
tail.  Both routes are implemented and must agree with straight parent
iteration; `orphan_root_cf` verifies its candidate by exact
reconstruction before returning it.

Rational continued fractions are plain tuples of ints.  Words over
{L, R} relate to expansions through `lr_on_cf`, and to membership in
the monoid generated by L1 and R1 through `decompose_special`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InternalInvariantError
from .plft import IDENTITY, LEFT, RIGHT, Move, Plft, Word, root_by_iteration

Quotients = tuple[int, ...]


# ---------------------------------------------------------------------------
# rational continued fractions
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" as an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def cf_of_rational(r: Fraction) -> Quotients:
    """Canonical Euclidean expansion of a positive rational.

    The last term is >= 2 unless the expansion has length 1, and
    evaluating the expansion returns r exactly.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"continued fractions are defined for positive rationals, got {r}")
    return _cf_of_nonneg(r.numerator, r.denominator)


def _cf_of_nonneg(n: int, d: int) -> Quotients:
    # Euclidean algorithm; accepts 0 (expansion (0,)) for internal use.
    terms = []
    while True:
        q, rem = divmod(n, d)
        terms.append(q)
        if rem == 0:
            return tuple(terms)
        n, d = d, rem


def evaluate_cf(terms: Quotients) -> Fraction:
    """Exact value of a finite continued fraction."""
    _validate_cf(terms)
    n, d = _cf_column(terms)
    return Fraction(n, d)


def _validate_cf(terms: Quotients) -> None:
    if not terms:
        raise ValueError("empty continued fraction")
    if terms[0] < 0 or any(t < 1 for t in terms[1:]):
        raise ValueError(f"invalid partial quotients {terms}: need q0 >= 0 and qi >= 1")


def _cf_column(terms: Quotients) -> tuple[int, int]:
    # Column vector (numerator, denominator) of a bracket, folding
    # x -> t + 1/x from the terminal 1/0.  Empty bracket is 0/1.
    if not terms:
        return 0, 1
    n, d = 1, 0
    for t in reversed(terms):
        n, d = t * n + d, n
    g = gcd(n, d)
    return n // g, d // g


def cf_variants(terms: Quotients) -> set[Quotients]:
    """The two standard representations of a continued fraction's value.

    [..., q] with q >= 2 pairs with [..., q-1, 1]; the expansion (0,)
    of zero is alone.  Both members evaluate to the same rational.
    """
    _validate_cf(terms)
    canonical, alternate = _ordered_variants(terms)
    return {canonical, alternate} if alternate is not None else {canonical}


def _ordered_variants(terms: Quotients) -> tuple[Quotients, "Quotients | None"]:
    # Canonical form first (last term >= 2, or length 1), then the split form.
    if len(terms) > 1 and terms[-1] == 1:
        canonical = terms[:-2] + (terms[-2] + 1,)
    else:
        canonical = tuple(terms)
    if canonical == (0,):
        return canonical, None
    return canonical, canonical[:-1] + (canonical[-1] - 1, 1)


# ---------------------------------------------------------------------------
# PLFT continued fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlftContinuedFraction:
    """Partial quotients plus an orphan tail.

    Stands for q0 + 1/(q1 + ... + 1/(q_{k-1} + 1/tail)); a plain orphan
    has no quotients at all.
    """

    quotients: Quotients
    tail: Plft

    def __post_init__(self) -> None:
        if self.quotients:
            _validate_cf(self.quotients)
        if not self.tail.is_orphan:
            raise ValueError(f"tail {self.tail.coeffs()} is not an orphan")

    def __str__(self) -> str:
        if not self.quotients:
            return f"[| {self.tail.coeffs()}]"
        head = str(self.quotients[0])
        if len(self.quotients) > 1:
            head += ";" + ",".join(str(q) for q in self.quotients[1:])
        return f"[{head},| {self.tail.coeffs()}]"


def format_rational_cf(terms: Quotients) -> str:
    """Text form "[q0;q1,q2,...]" (just "[q0]" for a single term)."""
    _validate_cf(terms)
    if len(terms) == 1:
        return f"[{terms[0]}]"
    return f"[{terms[0]};{','.join(str(t) for t in terms[1:])}]"


def _integer_part(w: Plft) -> int:
    # min over the defined floors of a/c and b/d; a floor is undefined
    # when its denominator coefficient is zero.
    floors = []
    if w.c:
        floors.append(w.a // w.c)
    if w.d:
        floors.append(w.b // w.d)
    return min(floors)


def plft_cf_expand(w: Plft) -> PlftContinuedFraction:
    """Division-algorithm expansion of a PLFT.

    Repeatedly subtract the integer part; once the remainder is an
    orphan, stop with tail = reciprocal of the remainder, otherwise
    invert and continue.  An orphan input expands to itself with no
    quotients.  `evaluate_plft_cf` inverts this exactly.
    """
    if w.is_orphan:
        return PlftContinuedFraction((), w)
    quotients: list[int] = []
    cur = w
    while True:
        q = _integer_part(cur)
        remainder = Plft(cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d)
        quotients.append(q)
        if remainder.is_orphan:
            return PlftContinuedFraction(tuple(quotients), remainder.reciprocal())
        cur = remainder.reciprocal()


def evaluate_plft_cf(cf: PlftContinuedFraction) -> Plft:
    """Multiply the expansion back out."""
    node = cf.tail
    for q in reversed(cf.quotients):
        flipped = node.reciprocal()
        node = Plft(flipped.a + q * flipped.c, flipped.b + q * flipped.d, flipped.c, flipped.d)
    return node


def lr_on_cf(cf: PlftContinuedFraction, move: Move) -> PlftContinuedFraction:
    """Expansion of the left or right child, computed on quotients alone.

    R increments q0; L increments q1 when q0 = 0 and otherwise prepends
    [0, 1].  Matches ``plft_cf_expand`` applied to the corresponding
    child.  On a bare orphan, R flips the tail into 1 + 1/tail' form.
    """
    q = cf.quotients
    if move == RIGHT:
        if not q:
            return PlftContinuedFraction((1,), cf.tail.reciprocal())
        return PlftContinuedFraction((q[0] + 1,) + q[1:], cf.tail)
    if move == LEFT:
        if not q:
            return PlftContinuedFraction((0, 1), cf.tail)
        if q[0] == 0:
            if len(q) == 1:
                raise ValueError("degenerate expansion [0 | tail] has no second quotient")
            return PlftContinuedFraction((0, q[1] + 1) + q[2:], cf.tail)
        return PlftContinuedFraction((0, 1) + q, cf.tail)
    raise ValueError(f"move must be 'L' or 'R', got {move!r}")


# ---------------------------------------------------------------------------
# orphan root from the rational expansions of a/c and b/d
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootReport:
    """Result of the continued-fraction route to the orphan root.

    ``cf`` is the expansion of the PLFT after the recorded
    pre-normalizations (reciprocal_applied: rows were swapped because
    c = 0 or d = 0; columns_swapped: z was replaced by 1/z because the
    expansion of a/c was shorter than that of b/d).  ``root`` is always
    expressed in the original variable.  ``inverted`` says whether the
    normalized root is the reciprocal of the tail (k odd) or the tail
    itself (k even); ``p`` is the final pivot quotient, 0 for orphan
    input.
    """

    root: Plft
    inverted: bool
    cf: PlftContinuedFraction
    k: int
    p: int
    reciprocal_applied: bool = False
    columns_swapped: bool = False


def _residual_column(terms: Quotients, shared: int, pivot: int, scale: int) -> tuple[int, int]:
    # Peel `shared` full terms plus `pivot` off a rational expansion and
    # return the leftover column, rescaled by the gcd the expansion lost.
    # A fully consumed expansion leaves the terminal column (1, 0).
    if shared == len(terms):
        return scale, 0
    rest = (terms[shared] - pivot,) + terms[shared + 1:]
    n, d = _cf_column(rest)
    return scale * n, scale * d


def orphan_root_cf(w: Plft) -> RootReport:
    """Locate the orphan root from the expansions of a/c and b/d.

    After pre-normalizing (reciprocal when c = 0 or d = 0, column swap
    when the expansion of a/c is the shorter one), every pair drawn from
    the two standard representations of a/c and of b/d is scored by the
    shared prefix length k and pivot p.  The winning pair's residual
    columns form the tail candidate, scaled per column by gcd(a, c) and
    gcd(b, d); a candidate only counts if it is an orphan and
    multiplying the expansion back out reproduces the input exactly.
    Pairs tying on (k, p) can differ in validity, so the candidates are
    tried best-first with canonical representations preferred.
    """
    if w.is_orphan:
        return RootReport(root=w, inverted=False, cf=PlftContinuedFraction((), w), k=0, p=0)

    v = w
    reciprocal_applied = v.c == 0 or v.d == 0
    if reciprocal_applied:
        v = v.reciprocal()
    columns_swapped = len(_cf_of_nonneg(*_reduced(v.a, v.c))) < len(_cf_of_nonneg(*_reduced(v.b, v.d)))
    if columns_swapped:
        v = v.swap_columns()

    g_ac = gcd(v.a, v.c)
    g_bd = gcd(v.b, v.d)
    top = _variant_list(v.a, v.c)
    bottom = _variant_list(v.b, v.d)

    best: "tuple[tuple[int, int, int], Plft, Quotients, Plft] | None" = None
    order = 0
    for qa in top:
        for qb in bottom:
            order -= 1
            shared = 0
            while shared < len(qa) and shared < len(qb) and qa[shared] == qb[shared]:
                shared += 1
            if shared == len(qa) and shared == len(qb):
                continue
            if shared == len(qa):
                pivot = qb[shared]
            elif shared == len(qb):
                pivot = qa[shared]
            else:
                pivot = min(qa[shared], qb[shared])
            if pivot < 1:
                continue
            k = shared + 1
            a1, c1 = _residual_column(qa, shared, pivot, g_ac)
            b1, d1 = _residual_column(qb, shared, pivot, g_bd)
            if a1 * d1 == b1 * c1:
                continue
            candidate = Plft(a1, b1, c1, d1)
            if not candidate.is_orphan:
                continue
            tail = candidate.reciprocal()
            quotients = qa[:shared] + (pivot,)
            if evaluate_plft_cf(PlftContinuedFraction(quotients, tail)) != v:
                continue
            key = (k, pivot, order)
            if best is None or key > best[0]:
                best = (key, candidate, quotients, tail)

    if best is None:
        raise InternalInvariantError(
            f"no representation pair for {w.coeffs()} yields a verified orphan tail"
        )
    (k, pivot, _), candidate, quotients, tail = best
    inverted = k % 2 == 1
    root = candidate if inverted else tail
    if columns_swapped:
        root = root.swap_columns()
    if reciprocal_applied:
        root = root.reciprocal()
    return RootReport(
        root=root,
        inverted=inverted,
        cf=PlftContinuedFraction(quotients, tail),
        k=k,
        p=pivot,
        reciprocal_applied=reciprocal_applied,
        columns_swapped=columns_swapped,
    )


def _reduced(n: int, d: int) -> tuple[int, int]:
    g = gcd(n, d)
    return n // g, d // g


def _variant_list(n: int, d: int) -> list[Quotients]:
    canonical, alternate = _ordered_variants(_cf_of_nonneg(*_reduced(n, d)))
    return [canonical] if alternate is None else [canonical, alternate]


# ---------------------------------------------------------------------------
# words and monoid membership
# ---------------------------------------------------------------------------

def _prefix_extension_pair(m: Plft) -> bool:
    # Does some representation pair make one of a/c, b/d exactly one
    # term longer than the other, which is a full prefix?  Words ending
    # in L have a/c as the longer side, words ending in R have b/d, so
    # both orientations must be tried.  (Requires c, d nonzero.)
    for qa in _variant_list(m.a, m.c):
        for qb in _variant_list(m.b, m.d):
            if len(qa) == len(qb) + 1 and qa[: len(qb)] == qb:
                return True
            if len(qb) == len(qa) + 1 and qb[: len(qa)] == qa:
                return True
    return False


def decompose_special(m: Plft) -> "Word | None":
    """Write m as a word over {L1, R1}, or None when impossible.

    The word satisfies ``apply_word(IDENTITY, word) == m``.  Membership
    is decided by parent iteration; when c, d are nonzero and the
    determinant is +-1 it is cross-checked against the expansion
    condition (one of a/c, b/d extends the other by one term in some
    representation pair, with determinant +1).
    """
    root, word = root_by_iteration(m)
    in_monoid = root == IDENTITY
    if m.c != 0 and m.d != 0 and abs(m.det) == 1:
        expected = _prefix_extension_pair(m) and m.det == 1
        if expected != in_monoid:
            raise InternalInvariantError(
                f"expansion condition and parent iteration disagree on {m.coeffs()}"
            )
    return word if in_monoid else None


RECIPROCAL_IDENTITY = Plft(0, 1, 1, 0)


def rootz_check(w: Plft) -> bool:
    """True when the orphan root of w is z or 1/z.

    Defined for c, d nonzero and determinant +-1; anything else is
    reported via a warning and returns False.
    """
    if w.c == 0 or w.d == 0 or abs(w.det) != 1:
        warnings.warn(
            f"rootz_check precondition violated for {w.coeffs()}: "
            f"needs c, d nonzero and determinant +-1 (determinant is {w.det})",
            stacklevel=2,
        )
        return False
    root = orphan_root_cf(w).root
    result = root in (IDENTITY, RECIPROCAL_IDENTITY)
    if _prefix_extension_pair(w) and not result:
        raise InternalInvariantError(
            f"{w.coeffs()} satisfies the expansion condition but has root {root.coeffs()}"
        )
    return result


# ---------------------------------------------------------------------------
# ancestors and descendants of rationals in the classic tree
# ---------------------------------------------------------------------------

def is_descendant_rational(ancestor: Fraction, target: Fraction) -> bool:
    """Is target a proper descendant of ancestor in the rational tree?

    Decided purely on continued fractions: for some representation pair
    [q0..qr] of the ancestor and [p0..ps] of the target, s >= r with
    s - r even, the last r - 1 terms match, and the splice point
    satisfies p_{s-r} >= q0 with p_{s-r+1} = q1 (q0 nonzero) or
    p_{s-r+1} >= q1 (q0 zero).  The relation is strict: no value is its
    own descendant.
    """
    ancestor, target = Fraction(ancestor), Fraction(target)
    if ancestor <= 0 or target <= 0:
        raise ValueError("descendant test is defined for positive rationals")
    if ancestor == target:
        return False
    for qs in cf_variants(cf_of_rational(ancestor)):
        r = len(qs) - 1
        for ps in cf_variants(cf_of_rational(target)):
            s = len(ps) - 1
            if s < r or (s - r) % 2:
                continue
            if any(ps[s - r + i] != qs[i] for i in range(2, r + 1)):
                continue
            if qs[0] != 0:
                if ps[s - r] >= qs[0] and (r < 1 or ps[s - r + 1] == qs[1]):
                    return True
            elif ps[s - r + 1] >= qs[1]:
                return True
    return False


def ancestors_of_rational(w: Fraction) -> list[Fraction]:
    """Proper ancestors of w, nearest first, ending at the root 1/1."""
    w = Fraction(w)
    if w <= 0:
        raise ValueError("ancestors are defined for positive rationals")
    chain = []
    while w != 1:
        p, q = w.numerator, w.denominator
        w = Fraction(p - q, q) if p > q else Fraction(p, q - p)
        chain.append(w)
    return chain


# ---------------------------------------------------------------------------
# limit identities of an expansion
# ---------------------------------------------------------------------------

def limit_checks(w: Plft, cf: PlftContinuedFraction) -> bool:
    """Verify the two limit identities tying an expansion to a/c and b/d.

    Substituting the tail's value at infinity into the quotients must
    reproduce a/c, and its value at zero must reproduce b/d (the fold is
    projective, so a tail heading to infinity at zero truncates the
    expansion correctly by itself).  Requires c, d nonzero.
    """
    if w.c == 0 or w.d == 0:
        raise ValueError("limit identities need c and d nonzero")

    def fold(n: int, d: int) -> tuple[int, int]:
        for q in reversed(cf.quotients):
            n, d = q * n + d, n
        return n, d

    n_inf, d_inf = fold(cf.tail.a, cf.tail.c)
    n_zero, d_zero = fold(cf.tail.b, cf.tail.d)
    return w.a * d_inf == w.c * n_inf and w.b * d_zero == w.d * n_zero
