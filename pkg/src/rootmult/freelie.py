"""Free Lie algebra machinery: bracket expressions, tensor-algebra expansion,
the left-normed rewriter, and multigraded dimension counts.

Everything here is an identity of the free Lie algebra on generators
e_1..e_r; no defining relations of any particular algebra are applied.
Relations belong to :mod:`rootmult.serre`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Mapping, Sequence, Union

from .gcm import WeightVector

# A left-normed bracket [e_{t[0]}, [e_{t[1]}, [... [e_{t[-2]}, e_{t[-1]}] ...]]]
# is encoded as the tuple t of its generator indices, outermost first.
StandardTuple = tuple[int, ...]


# ---------------------------------------------------------------------------
# bracket expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    index: int

    @property
    def length(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    left: "BracketExpr"
    right: "BracketExpr"

    @property
    def length(self) -> int:
        return self.left.length + self.right.length


BracketExpr = Union[Leaf, Node]


class ParseError(ValueError):
    """Syntax error in a bracket expression, with a 0-based position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_bracket(text: str) -> BracketExpr:
    """Parse ``expr := atom | '[' expr ',' expr ']'`` with ``atom := 'e' digits``.

    Whitespace is insignificant.  Generator indices are stored verbatim;
    range checking happens at evaluation time.
    """
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            raise ParseError(f"expected '{ch}'", pos)
        pos += 1

    def expr() -> BracketExpr:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ParseError("unexpected end of input", pos)
        if text[pos] == "[":
            pos += 1
            left = expr()
            expect(",")
            right = expr()
            expect("]")
            return Node(left, right)
        if text[pos] == "e":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ParseError("expected digits after 'e'", pos)
            return Leaf(int(text[start:pos]))
        raise ParseError("expected '[' or 'e'", pos)

    result = expr()
    skip_ws()
    if pos != len(text):
        raise ParseError("trailing input", pos)
    return result


def format_bracket(x: BracketExpr) -> str:
    """Print an expression in the same grammar the parser accepts, no whitespace."""
    if isinstance(x, Leaf):
        return f"e{x.index}"
    return f"[{format_bracket(x.left)},{format_bracket(x.right)}]"


def weight_of(x: BracketExpr, rank: int) -> WeightVector:
    """Multidegree of an expression: coefficient i counts the leaves e_{i+1}."""
    counts = [0] * rank
    stack = [x]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            if not 1 <= node.index <= rank:
                raise ValueError(f"generator index {node.index} out of range 1..{rank}")
            counts[node.index - 1] += 1
        else:
            stack.append(node.left)
            stack.append(node.right)
    return WeightVector(tuple(counts))


# ---------------------------------------------------------------------------
# tensor-algebra expansion
# ---------------------------------------------------------------------------

class NcPolynomial:
    """Sparse noncommutative polynomial: a map from generator words to integers.

    Words are byte strings of generator indices.  This is the substrate for
    the embedding [x, y] -> xy - yx, which turns Lie identities into exact
    integer linear algebra.  Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[bytes, int] | None = None) -> None:
        self.coeffs: dict[bytes, int] = {w: c for w, c in (coeffs or {}).items() if c}

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls()

    @classmethod
    def generator(cls, i: int) -> "NcPolynomial":
        if not 1 <= i <= 255:
            raise ValueError(f"generator index {i} does not fit the word encoding")
        return cls({bytes([i]): 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        result = NcPolynomial()
        result.coeffs = out
        return result

    def __neg__(self) -> "NcPolynomial":
        result = NcPolynomial()
        result.coeffs = {w: -c for w, c in self.coeffs.items()}
        return result

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-other)

    def __mul__(self, other: "NcPolynomial") -> "NcPolynomial":
        out: dict[bytes, int] = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        result = NcPolynomial()
        result.coeffs = out
        return result

    def scale(self, k: int) -> "NcPolynomial":
        if k == 0:
            return NcPolynomial()
        result = NcPolynomial()
        result.coeffs = {w: k * c for w, c in self.coeffs.items()}
        return result

    def terms(self) -> list[tuple[bytes, int]]:
        """Terms ordered length-first, then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda t: (len(t[0]), t[0]))

    def multidegree(self, rank: int) -> WeightVector:
        """Common multidegree of all words; raises if the words disagree."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no multidegree")
        degrees = {tuple(w.count(i + 1) for i in range(rank)) for w in self.coeffs}
        if len(degrees) != 1:
            raise ValueError("words of mixed multidegree")
        return WeightVector(degrees.pop())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self.terms():
            word = "".join(str(b) for b in w)
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{word}")
        return " ".join(parts)


def ad_generator(i: int, p: NcPolynomial) -> NcPolynomial:
    """Commutator [e_i, p] in the tensor algebra."""
    prefix = bytes([i])
    out: dict[bytes, int] = {}
    for w, c in p.coeffs.items():
        left = prefix + w
        v = out.get(left, 0) + c
        if v:
            out[left] = v
        else:
            out.pop(left, None)
        right = w + prefix
        v = out.get(right, 0) - c
        if v:
            out[right] = v
        else:
            out.pop(right, None)
    result = NcPolynomial()
    result.coeffs = out
    return result


def expand_tensor(x: BracketExpr) -> NcPolynomial:
    """Expand a bracket expression to its tensor-algebra image, exactly."""
    if isinstance(x, Leaf):
        return NcPolynomial.generator(x.index)
    left = expand_tensor(x.left)
    right = expand_tensor(x.right)
    return left * right - right * left


def tuple_to_expr(t: StandardTuple) -> BracketExpr:
    """Right-nested bracket expression equivalent to a standard tuple."""
    if not t:
        raise ValueError("empty standard tuple")
    expr: BracketExpr = Leaf(t[-1])
    for a in reversed(t[:-1]):
        expr = Node(Leaf(a), expr)
    return expr


def expand_standard_tuple(t: StandardTuple) -> NcPolynomial:
    """Tensor expansion of the left-normed bracket encoded by ``t``."""
    if not t:
        raise ValueError("empty standard tuple")
    p = NcPolynomial.generator(t[-1])
    for a in reversed(t[:-1]):
        p = ad_generator(a, p)
    return p


# ---------------------------------------------------------------------------
# rewriting into left-normed form
# ---------------------------------------------------------------------------

class LieCombination:
    """Formal integer combination of standard tuples of one common multidegree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[StandardTuple, int] | None = None) -> None:
        self.coeffs: dict[StandardTuple, int] = {t: c for t, c in (coeffs or {}).items() if c}
        degrees = {tuple(sorted(t)) for t in self.coeffs}
        if len(degrees) > 1:
            raise ValueError("tuples of mixed multidegree in one combination")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieCombination):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __neg__(self) -> "LieCombination":
        out = LieCombination()
        out.coeffs = {t: -c for t, c in self.coeffs.items()}
        return out

    def terms(self) -> list[tuple[StandardTuple, int]]:
        return sorted(self.coeffs.items())

    def tuples(self) -> list[StandardTuple]:
        return sorted(self.coeffs)

    def multidegree(self, rank: int) -> WeightVector:
        if not self.coeffs:
            raise ValueError("zero combination has no multidegree")
        t = next(iter(self.coeffs))
        return WeightVector(tuple(t.count(i + 1) for i in range(rank)))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(
            f"{'+' if c > 0 else '-'}{abs(c)}*[{','.join(map(str, t))}]" for t, c in self.terms()
        )


def _bracket_tuples(s: StandardTuple, t: StandardTuple, out: dict[StandardTuple, int], sign: int) -> None:
    """Accumulate the left-normed rewriting of [s, t] into ``out``.

    Anticommutativity orients the recursion: [s, s] vanishes, and a pair
    with s "larger" than t (length, then lexicographic) is flipped with a
    sign.  A pair of single generators is kept verbatim, since [e_a, e_b]
    is already the standard tuple (a, b).  The oriented recursion mirrors
    the defining identities:
      [e_a, t]            -> (a,) + t
      [[e_a, e_b], t]     -> (a, b) + t - (b, a) + t
      [[e_a, s'], t]      -> [e_a, [s', t]] - [s', [(a,) + t]]
    The orientation makes the output of [u, v] the exact formal negation
    of the output of [v, u] whenever u, v are not both single generators
    (for a bare generator pair the negation holds after expansion).  Each
    step preserves total length, so every produced tuple has length
    len(s) + len(t).
    """
    if s == t:
        return
    if len(s) == 1 and len(t) == 1:
        key = s + t
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
        return
    if (len(s), s) > (len(t), t):
        _bracket_tuples(t, s, out, -sign)
        return
    if len(s) == 1:
        key = s + t
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
        return
    if len(s) == 2:
        a, b = s
        for key in ((a, b) + t, (b, a) + t):
            v = out.get(key, 0) + sign
            if v:
                out[key] = v
            else:
                out.pop(key, None)
            sign = -sign
        return
    head, rest = s[0], s[1:]
    inner: dict[StandardTuple, int] = {}
    _bracket_tuples(rest, t, inner, 1)
    for tup, c in inner.items():
        key = (head,) + tup
        v = out.get(key, 0) + sign * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    _bracket_tuples(rest, (head,) + t, out, -sign)


def to_standard_form(x: BracketExpr) -> LieCombination:
    """Rewrite an arbitrary bracket expression as a combination of standard tuples.

    The result expands to exactly the same tensor polynomial as the input:
    the rewriting is an identity of the free Lie algebra.
    """
    if isinstance(x, Leaf):
        return LieCombination({(x.index,): 1})
    left = to_standard_form(x.left)
    right = to_standard_form(x.right)
    out: dict[StandardTuple, int] = {}
    for s, cs in left.coeffs.items():
        for t, ct in right.coeffs.items():
            _bracket_tuples(s, t, out, cs * ct)
    combo = LieCombination()
    combo.coeffs = {t: c for t, c in out.items() if c}
    return combo


def expand_combination(c: LieCombination) -> NcPolynomial:
    """Tensor expansion of a formal combination of standard tuples."""
    total = NcPolynomial()
    for t, k in c.coeffs.items():
        total = total + expand_standard_tuple(t).scale(k)
    return total


# ---------------------------------------------------------------------------
# dimension counts
# ---------------------------------------------------------------------------

def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def free_lie_dim(lam: WeightVector | Sequence[int]) -> int:
    """Dimension of the multidegree component of the free Lie algebra.

    Computed by the multigraded Witt formula
    (1/n) * sum over d | gcd(lam) of mu(d) * (n/d)! / prod (n_i/d)!.
    """
    lam = WeightVector.of(lam)
    n = lam.height
    if n < 1:
        raise ValueError("weight must have height >= 1")
    g = 0
    for c in lam:
        g = gcd(g, c)
    total = 0
    for d in range(1, g + 1):
        if g % d:
            continue
        mu = _mobius(d)
        if mu == 0:
            continue
        remaining = n // d
        ways = 1
        for c in lam:
            ways *= comb(remaining, c // d)
            remaining -= c // d
        total += mu * ways
    dim, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"Witt count not divisible by height at {lam.coeffs}")
    return dim


def standard_tuples_of_weight(lam: WeightVector | Sequence[int]) -> Iterator[StandardTuple]:
    """All standard tuples of the given multidegree, in lexicographic order."""
    lam = WeightVector.of(lam)
    counts = list(lam.coeffs)

    def rec(prefix: list[int]) -> Iterator[StandardTuple]:
        if not any(counts):
            yield tuple(prefix)
            return
        for i, c in enumerate(counts):
            if c == 0:
                continue
            counts[i] -= 1
            prefix.append(i + 1)
            yield from rec(prefix)
            prefix.pop()
            counts[i] += 1

    yield from rec([])
