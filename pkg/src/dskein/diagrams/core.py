"""Core data for the diagram categories: object words, slice words,
normal diagrams, and morphisms.

An object word is a string over 'u' (up strand) and 'd' (down strand);
"" is the unit object.  A concrete diagram is a slice word read bottom to
top, each slice one elementary generator:

    ('X', i, h)      crossing of strands i, i+1; h == 'L' means the strand
                     entering at bottom-left passes over
    ('B', i, a, b)   birth (cup) inserting points with orientations a, b
                     at positions i, i+1
    ('D', i)         death (cap) of the points at i, i+1
    ('T', i, k)      orientation toggle at position i; k in ('du', 'ud')

A NormalDiagram is the basis datum: a perfect matching of the boundary
points (numbered bottom-left to bottom-right, then top-left to top-right)
plus the forced toggle flags.  Coefficients are Scalars.
"""

from __future__ import annotations

from ..scalars import Scalar, params_for

FLIP = {"u": "d", "d": "u"}


def flip_word(w: str) -> str:
    return "".join(FLIP[c] for c in w)


def dual_word(w: str) -> str:
    """Left dual: reverse the word and flip every orientation."""
    return flip_word(w[::-1])


def check_word(w: str) -> str:
    if any(c not in "ud" for c in w):
        raise ValueError(f"bad object word {w!r}")
    return w


class SliceError(ValueError):
    pass


def apply_slice(word: str, s) -> str:
    """Word above the slice, validating orientations."""
    kind = s[0]
    if kind == "X":
        _, i, h = s
        if not (0 <= i and i + 1 < len(word)):
            raise SliceError(f"crossing {s} out of range on {word!r}")
        return word[:i] + word[i + 1] + word[i] + word[i + 2:]
    if kind == "B":
        _, i, a, b = s
        if not (0 <= i <= len(word)):
            raise SliceError(f"birth {s} out of range on {word!r}")
        if a == b:
            raise SliceError(f"birth {s} is not orientable")
        return word[:i] + a + b + word[i:]
    if kind == "D":
        _, i = s
        if not (0 <= i and i + 1 < len(word) + 0):
            raise SliceError(f"death {s} out of range on {word!r}")
        if i + 1 >= len(word) or word[i] == word[i + 1]:
            raise SliceError(f"death {s} is not orientable on {word!r}")
        return word[:i] + word[i + 2:]
    if kind == "T":
        _, i, k = s
        if not (0 <= i < len(word)):
            raise SliceError(f"toggle {s} out of range on {word!r}")
        want = "u" if k == "du" else "d"
        if word[i] != want:
            raise SliceError(f"toggle {s} on wrong orientation in {word!r}")
        return word[:i] + FLIP[word[i]] + word[i + 1:]
    raise SliceError(f"unknown slice {s!r}")


def words_at(src: str, slices) -> list[str]:
    """Words at every height of the slice word (length len(slices)+1)."""
    out = [src]
    w = src
    for s in slices:
        w = apply_slice(w, s)
        out.append(w)
    return out


def toggle_kind(orientation: str) -> str:
    return "du" if orientation == "u" else "ud"


# ---------------------------------------------------------------------------


def flows_in(word: str, is_bottom: bool) -> list[bool]:
    """Whether each boundary point's strand flows into the diagram."""
    if is_bottom:
        return [c == "u" for c in word]
    return [c == "d" for c in word]


class NormalDiagram:
    """A basis diagram: boundary matching plus forced toggle flags.

    Boundary points 0..m-1 are the source (left to right), m..m+n-1 the
    target (left to right).  A strand is flagged (carries one toggle)
    exactly when its two endpoint orientations are inconsistent as an
    oriented strand; the flags are determined by the matching but stored
    for direct inspection.
    """

    __slots__ = ("src", "tgt", "matching", "flags", "_hash")

    def __init__(self, src: str, tgt: str, matching):
        self.src = src
        self.tgt = tgt
        m = tuple(sorted(tuple(sorted(p)) for p in matching))
        n_pts = len(src) + len(tgt)
        pts = sorted(x for p in m for x in p)
        if pts != list(range(n_pts)):
            raise ValueError(f"matching {m} is not a perfect matching of {n_pts} points")
        self.matching = m
        ins = flows_in(src, True) + flows_in(tgt, False)
        self.flags = tuple(p for p in m if ins[p[0]] == ins[p[1]])
        self._hash = None

    def endpoint_orientation(self, p: int) -> str:
        m = len(self.src)
        return self.src[p] if p < m else self.tgt[p - m]

    def crossing_pairs(self):
        """Pairs of strands that cross once in the canonical picture."""
        order = self.circular_order()
        out = []
        ms = self.matching
        for a in range(len(ms)):
            xa, ya = sorted((order[ms[a][0]], order[ms[a][1]]))
            for b in range(a + 1, len(ms)):
                xb, yb = sorted((order[ms[b][0]], order[ms[b][1]]))
                if (xa < xb < ya) != (xa < yb < ya):
                    out.append((ms[a], ms[b]))
        return out

    def circular_order(self):
        """Boundary position on the disk: bottom left-to-right, then top
        right-to-left."""
        m, n = len(self.src), len(self.tgt)
        order = {}
        for i in range(m):
            order[i] = i
        for j in range(n):
            order[m + j] = m + (n - 1 - j)
        return order

    def crossing_count(self) -> int:
        return len(self.crossing_pairs())

    def __eq__(self, other):
        return (
            isinstance(other, NormalDiagram)
            and self.src == other.src
            and self.tgt == other.tgt
            and self.matching == other.matching
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.matching))
        return self._hash

    def __repr__(self):
        return f"NormalDiagram({self.src!r}->{self.tgt!r}, {list(self.matching)})"

    def to_json(self):
        m = len(self.src)
        strands = {p: i for i, p in enumerate(self.matching)}
        return {
            "matching": [list(p) for p in self.matching],
            "toggles": sorted(strands[p] for p in self.flags),
        }


class Morphism:
    """Finite Scalar-linear combination of normal diagrams."""

    __slots__ = ("src", "tgt", "terms")

    def __init__(self, src: str, tgt: str, terms=None):
        self.src = src
        self.tgt = tgt
        t = {}
        if terms:
            for d, c in terms.items():
                if d.src != src or d.tgt != tgt:
                    raise ValueError("term boundary mismatch")
                if not c.is_zero():
                    t[d] = c
        self.terms = t

    @classmethod
    def zero(cls, src: str, tgt: str):
        return cls(src, tgt)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("boundary mismatch in sum")
        t = dict(self.terms)
        for d, c in other.terms.items():
            s = t.get(d)
            c2 = c if s is None else s + c
            if c2.is_zero():
                t.pop(d, None)
            else:
                t[d] = c2
        out = Morphism.__new__(Morphism)
        out.src, out.tgt, out.terms = self.src, self.tgt, t
        return out

    def __sub__(self, other):
        return self + other.scale(Scalar.from_int(-1))

    def scale(self, c: Scalar):
        out = Morphism.__new__(Morphism)
        out.src, out.tgt = self.src, self.tgt
        out.terms = {} if c.is_zero() else {d: v * c for d, v in self.terms.items()}
        return out

    def __neg__(self):
        return self.scale(Scalar.from_int(-1))

    def coeff(self, d: NormalDiagram) -> Scalar:
        return self.terms.get(d, Scalar.zero())

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.src == other.src
            and self.tgt == other.tgt
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.src, self.tgt, tuple(sorted(
            (hash(d), hash(c)) for d, c in self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return f"0: {self.src!r}->{self.tgt!r}"
        bits = [f"({c!r})*{d!r}" for d, c in self.terms.items()]
        return " + ".join(bits)

    def to_json(self):
        return {
            "source": self.src,
            "target": self.tgt,
            "terms": [
                {"coeff": c.to_json(), **d.to_json()}
                for d, c in sorted(self.terms.items(), key=lambda x: x[0].matching)
            ],
        }


class EngineContext:
    """Ground parameters of the skein relations: q, t, and delta.

    The standard context has t = q^d; the sign-twisted context
    (q -> -q, t -> -t) is used to check the sign-twist isomorphism.
    """

    __slots__ = ("qv", "qvi", "tv", "tvi", "delta", "skein", "label", "_memo")

    def __init__(self, qv: Scalar, tv: Scalar, label=""):
        self.qv = qv
        self.qvi = qv.inv()
        self.tv = tv
        self.tvi = tv.inv()
        diff = qv - self.qvi
        if diff.is_zero():
            raise ValueError("q - q^-1 must be invertible")
        self.skein = diff
        self.delta = (tv - self.tvi) / diff
        self.label = label
        self._memo = {}

    @classmethod
    def for_d(cls, d: int):
        p = params_for(d)
        return cls(Scalar.q_power(1), p.t, label=f"d={d}")

    def sign_twisted(self):
        return EngineContext(-self.qv, -self.tv, label=self.label + ";q->-q")

    def t_power(self, k: int) -> Scalar:
        return self.tv ** k

    def q_power_of(self, k: int) -> Scalar:
        return self.qv ** k
