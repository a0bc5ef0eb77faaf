"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials in k variables x1..xk represent the symmetric algebra on the
dual Lie algebra of a rank-k torus; linear forms are the images of weight
vectors.  Coefficients are ``fractions.Fraction`` throughout -- floats are
rejected on construction so that every downstream divisibility and
determinant test stays decidable.

Degree convention: we store plain polynomial degree; the cohomological
degree of a homogeneous element is twice that (each variable has
cohomological degree 2) and is exposed separately.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
Term order everywhere (iteration, text form) is graded lexicographic,
leading terms first, so equality is structural and serialization is
reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import NotDivisible, RankMismatch, ScopeError

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    """Coerce to Fraction, rejecting floats (exactness guard)."""
    if isinstance(x, float):
        raise TypeError("floating-point values are not allowed in exact arithmetic")
    return Fraction(x)


def _gradedlex_key(exponents: tuple) -> tuple:
    return (sum(exponents), exponents)


class Vector:
    """A rational k-vector: weight, moment position, or covector.

    Immutable; componentwise arithmetic plus the handful of exact
    predicates (pairing, parallelism, 2D cross product) the graph layer
    needs.
    """

    __slots__ = ("components",)

    def __init__(self, components: Iterable):
        object.__setattr__(self, "components", tuple(_frac(c) for c in components))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def rank(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.components)

    def __getitem__(self, i: int) -> Fraction:
        return self.components[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "Vector(%s)" % (", ".join(str(c) for c in self.components))

    def _check_rank(self, other: "Vector") -> None:
        if len(self) != len(other):
            raise RankMismatch(f"vector ranks differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check_rank(other)
        return Vector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_rank(other)
        return Vector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self)

    def __mul__(self, scalar: Scalar) -> "Vector":
        s = _frac(scalar)
        return Vector(a * s for a in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    def dot(self, other: "Vector") -> Fraction:
        self._check_rank(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def cross(self, other: "Vector") -> Fraction:
        """2D cross product a1*b2 - a2*b1."""
        if len(self) != 2 or len(other) != 2:
            raise ScopeError("cross product requires rank 2")
        return self[0] * other[1] - self[1] * other[0]

    def perp(self) -> "Vector":
        """A nonzero vector perpendicular to self (rank 2 only)."""
        if len(self) != 2:
            raise ScopeError("perp requires rank 2")
        return Vector((-self[1], self[0]))

    def parallel_ratio(self, other: "Vector") -> Fraction | None:
        """Return r with self == r * other, or None if no such rational exists.

        ``other`` must be nonzero.
        """
        self._check_rank(other)
        if other.is_zero():
            raise ValueError("parallel_ratio against the zero vector")
        ratio = None
        for a, b in zip(self, other):
            if b == 0:
                if a != 0:
                    return None
            else:
                r = a / b
                if ratio is None:
                    ratio = r
                elif ratio != r:
                    return None
        # Components of `other` that are zero force the matching components
        # of self to zero, checked above; remaining ratio is consistent.
        if ratio is None:  # other nonzero guarantees at least one b != 0
            raise AssertionError("unreachable")
        return ratio


class Polynomial:
    """Exact polynomial in ``rank`` variables with Fraction coefficients.

    Terms map exponent tuples to nonzero coefficients; canonical order is
    graded-lex descending.  Instances are immutable.
    """

    __slots__ = ("rank", "_terms", "_key")

    def __init__(self, rank: int, terms: Mapping[tuple, Scalar] | None = None):
        if rank < 1:
            raise ValueError("polynomial rank must be >= 1")
        clean: dict[tuple, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            e = tuple(int(x) for x in exps)
            if len(e) != rank or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {exps!r} for rank {rank}")
            c = _frac(coeff)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
                if clean[e] == 0:
                    del clean[e]
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(
            self,
            "_key",
            tuple(sorted(clean.items(), key=lambda kv: _gradedlex_key(kv[0]), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "Polynomial":
        return cls(rank, {})

    @classmethod
    def constant(cls, rank: int, value: Scalar) -> "Polynomial":
        return cls(rank, {(0,) * rank: _frac(value)})

    @classmethod
    def variable(cls, rank: int, index: int) -> "Polynomial":
        """The variable x_{index+1} (0-based index)."""
        if not 0 <= index < rank:
            raise ValueError(f"variable index {index} out of range for rank {rank}")
        exps = [0] * rank
        exps[index] = 1
        return cls(rank, {tuple(exps): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple, Fraction]]:
        """(exponents, coefficient) pairs in graded-lex descending order."""
        return iter(self._key)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int | None:
        """Maximal term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    @property
    def homogeneous_degree(self) -> int | None:
        """Degree if homogeneous and nonzero, None for zero, error otherwise."""
        if not self._terms:
            return None
        degrees = {sum(e) for e in self._terms}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop()

    @property
    def cohomological_degree(self) -> int | None:
        """Twice the polynomial degree (each variable has degree 2)."""
        d = self.homogeneous_degree
        return None if d is None else 2 * d

    def homogeneous_component(self, degree: int) -> "Polynomial":
        """Sum of the terms of the given total degree."""
        return Polynomial(
            self.rank, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.rank != self.rank:
                raise RankMismatch(f"polynomial ranks differ: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.rank, other)
        return None

    def __add__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in p._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in p._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.rank, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.rank, other)
        return (
            isinstance(other, Polynomial)
            and self.rank == other.rank
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.rank, self._key))

    # -- evaluation and division -------------------------------------------

    def evaluate(self, point: Vector | Sequence) -> Fraction:
        """Exact evaluation at a rational point."""
        pt = [_frac(c) for c in point]
        if len(pt) != self.rank:
            raise RankMismatch(f"point has {len(pt)} coords, polynomial rank {self.rank}")
        total = Fraction(0)
        for e, c in self._terms.items():
            val = c
            for base, exp in zip(pt, e):
                if exp:
                    val *= base**exp
            total += val
        return total

    def divide_by_linear(self, ell: "Polynomial") -> "Polynomial":
        """Exact quotient self / ell for a nonzero degree-1 homogeneous ell.

        Raises NotDivisible when no exact quotient exists; that is the
        signal for a violated edge congruence.
        """
        if not isinstance(ell, Polynomial) or ell.rank != self.rank:
            raise RankMismatch("divisor rank mismatch")
        if ell.is_zero() or ell.homogeneous_degree != 1:
            raise ValueError("divisor must be nonzero homogeneous of degree 1")
        # Pivot variable: first with nonzero coefficient in ell.
        coeffs = [ell.coefficient(tuple(1 if i == j else 0 for i in range(self.rank)))
                  for j in range(self.rank)]
        pivot = next(j for j, c in enumerate(coeffs) if c != 0)
        cp = coeffs[pivot]
        work = dict(self._terms)
        quotient: dict[tuple, Fraction] = {}
        ell_terms = list(ell._terms.items())
        while True:
            # Largest remaining term containing the pivot variable.
            candidates = [e for e in work if e[pivot] > 0]
            if not candidates:
                break
            e = max(candidates, key=_gradedlex_key)
            c = work[e]
            qe = list(e)
            qe[pivot] -= 1
            qe = tuple(qe)
            qc = c / cp
            quotient[qe] = quotient.get(qe, Fraction(0)) + qc
            for le, lc in ell_terms:
                te = tuple(a + b for a, b in zip(qe, le))
                nc = work.get(te, Fraction(0)) - qc * lc
                if nc == 0:
                    work.pop(te, None)
                else:
                    work[te] = nc
        if work:
            raise NotDivisible(f"({self}) is not divisible by ({ell})")
        return Polynomial(self.rank, quotient)

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        """Signed sum of terms like ``x1^2 - 2*x1*x2 + 1/3``, graded-lex order."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e, c in self._key:
            factors = []
            for i, exp in enumerate(e):
                if exp == 1:
                    factors.append(f"x{i + 1}")
                elif exp > 1:
                    factors.append(f"x{i + 1}^{exp}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def lin_form(w: Vector | Sequence) -> Polynomial:
    """Embed a weight vector as the linear form sum_i w_i * x_i."""
    v = w if isinstance(w, Vector) else Vector(w)
    if v.rank < 1:
        raise ValueError("rank must be >= 1")
    return Polynomial(v.rank, {
        tuple(1 if i == j else 0 for i in range(v.rank)): c
        for j, c in enumerate(v) if c != 0
    })


def congruent_mod_linear(f: Polynomial, g: Polynomial, ell: Polynomial) -> bool:
    """True iff ell divides f - g exactly."""
    try:
        (f - g).divide_by_linear(ell)
        return True
    except NotDivisible:
        return False
