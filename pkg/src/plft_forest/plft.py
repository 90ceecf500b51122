"""Exact arithmetic on positive linear fractional transformations (PLFTs).

A PLFT is a map f(z) = (a*z + b)/(c*z + d) whose coefficients are
nonnegative integers with nonzero determinant a*d - b*c.  Under the
child rules

    left(f)  = f/(f + 1)          right(f) = f + 1

every PLFT generates an infinite binary tree, and the set of all PLFTs
is partitioned into a forest of such trees.  The roots of the forest,
the PLFTs that are not the child of anything, are called orphans; they
are exactly the maps with a < c and b > d, or a > c and b < d.

Identifying f with the matrix [[a, b], [c, d]], the child rules are
left multiplication by L1 = [[1, 0], [1, 1]] and R1 = [[1, 1], [0, 1]].
Coefficients are arbitrary precision: a path of length n inflates them
roughly like the n-th Fibonacci number, so 64-bit integers would
already overflow for words of modest length.

PLFTs are deliberately NOT reduced to projective representatives:
(2z+0)/(0z+2) and z agree pointwise but are distinct vertices here, with
distinct positions in the forest.
"""

from __future__ import annotations

from dataclasses import dataclass

LEFT = "L"
RIGHT = "R"

Move = str
Word = tuple[str, ...]


def _check_move(move: str) -> str:
    if move not in (LEFT, RIGHT):
        raise ValueError(f"move must be 'L' or 'R', got {move!r}")
    return move


@dataclass(frozen=True)
class Plft:
    """The transformation (a*z + b)/(c*z + d), stored as [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"coefficient {name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"coefficient {name} must be nonnegative, got {value}")
        if self.a * self.d == self.b * self.c:
            raise ValueError(
                f"determinant of {self.coeffs()} is zero; not a linear fractional transformation"
            )

    # -- structure ------------------------------------------------------

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_orphan(self) -> bool:
        """True when this PLFT is not the left or right child of any PLFT."""
        return (self.a < self.c and self.b > self.d) or (self.a > self.c and self.b < self.d)

    def left_child(self) -> "Plft":
        """f/(f+1); as a matrix, L1 times self."""
        return Plft(self.a, self.b, self.a + self.c, self.b + self.d)

    def right_child(self) -> "Plft":
        """f+1; as a matrix, R1 times self."""
        return Plft(self.a + self.c, self.b + self.d, self.c, self.d)

    def child(self, move: Move) -> "Plft":
        return self.left_child() if _check_move(move) == LEFT else self.right_child()

    def parent(self) -> "tuple[Plft, Move] | None":
        """Invert the child rules.

        Returns (parent, move) where ``parent.child(move) == self``, or
        None when self is an orphan.  At most one branch can apply: if
        both subtractions were legal the determinant would vanish.
        Boundary cases (a == c or b == d) subtract to a zero coefficient,
        which is still a valid PLFT.
        """
        if self.a >= self.c and self.b >= self.d:
            return Plft(self.a - self.c, self.b - self.d, self.c, self.d), RIGHT
        if self.c >= self.a and self.d >= self.b:
            return Plft(self.a, self.b, self.c - self.a, self.d - self.b), LEFT
        return None

    def reciprocal(self) -> "Plft":
        """1/f, i.e. the rows swapped."""
        return Plft(self.c, self.d, self.a, self.b)

    def swap_columns(self) -> "Plft":
        """f(1/z), i.e. the columns swapped."""
        return Plft(self.b, self.a, self.d, self.c)

    def compose(self, other: "Plft") -> "Plft":
        """self after other (the matrix product self @ other)."""
        return Plft(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    # -- text forms -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Plft":
        """Parse the interchange form "a,b,c,d" (four decimal integers)."""
        parts = [p.strip() for p in text.strip().split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated integers, got {text!r}")
        try:
            a, b, c, d = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"expected four comma-separated integers, got {text!r}") from None
        return cls(a, b, c, d)

    def coeffs(self) -> str:
        """The interchange form "a,b,c,d"."""
        return f"{self.a},{self.b},{self.c},{self.d}"

    def __str__(self) -> str:
        num = _linear_str(self.a, self.b)
        den = _linear_str(self.c, self.d)
        if den == "1":
            return num
        if "+" in num:
            num = f"({num})"
        if den not in ("z",) and not den.isdigit():
            den = f"({den})"
        return f"{num}/{den}"


def _linear_str(coeff_z: int, const: int) -> str:
    z_part = "" if coeff_z == 0 else ("z" if coeff_z == 1 else f"{coeff_z}z")
    if not z_part:
        return str(const)
    if const == 0:
        return z_part
    return f"{z_part}+{const}"


IDENTITY = Plft(1, 0, 0, 1)


def parse_word(text: str) -> Word:
    """Parse a word like "RLR" into a tuple of moves."""
    return tuple(_check_move(ch) for ch in text.strip())


def format_word(word: Word) -> str:
    return "".join(_check_move(m) for m in word)


def apply_word(root: Plft, word: Word) -> Plft:
    """Apply a word of moves to a root.

    Words are written like compositions: ``apply_word(g, ("R", "L", "R"))``
    is R(L(R(g))), so the last element is the first step taken at the
    root and ``word[0]`` is the move nearest the resulting node.  The
    matrix of the result is the left-to-right product of the factors
    named by the word, times the root's matrix.
    """
    node = root
    for move in reversed(word):
        node = node.child(move)
    return node


def root_by_iteration(w: Plft) -> tuple[Plft, Word]:
    """Climb the parent map until an orphan is reached.

    Returns (root, word) with ``apply_word(root, word) == w``.  The walk
    terminates because every parent step strictly decreases the
    coefficient sum.
    """
    word: list[Move] = []
    node = w
    while True:
        up = node.parent()
        if up is None:
            return node, tuple(word)
        node, move = up
        word.append(move)
