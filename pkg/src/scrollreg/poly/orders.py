"""Monomial orders, each realised as an integer weight matrix.

A monomial ``m`` is compared through the tuple ``A @ m``. Every order built
here ends its matrix with one signed unit row per variable, so the exponent
vector can be read back from the encoded tuple; the engine relies on that.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    block: tuple = ()      # variable names of the front (eliminated) block
    weights: tuple = ()    # for kind == "weighted"
    tiebreak: str = "grevlex"
    last: str = ""         # grevlex only: treat this variable as the smallest

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block", "weighted"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted" and self.tiebreak not in ("grevlex", "lex"):
            raise ValueError(f"unknown tie-break {self.tiebreak!r}")

    def __str__(self):
        if self.kind == "block":
            return f"block({','.join(self.block)})"
        if self.kind == "weighted":
            return f"weighted({','.join(map(str, self.weights))};{self.tiebreak})"
        if self.last:
            return f"{self.kind}(last={self.last})"
        return self.kind

    def matrix(self, ring):
        n = ring.nvars

        def unit(i, sign):
            row = [0] * n
            row[i] = sign
            return tuple(row)

        def grevlex_rows(idx):
            ind = [0] * n
            for i in idx:
                ind[i] = 1
            return [tuple(ind)] + [unit(i, -1) for i in reversed(idx)]

        everything = list(range(n))
        if self.kind == "grevlex":
            if self.last:
                k = ring.index(self.last)
                everything = [i for i in everything if i != k] + [k]
            return grevlex_rows(everything)
        if self.kind == "lex":
            return [unit(i, 1) for i in everything]
        if self.kind == "block":
            front = {ring.index(v) for v in self.block}
            head = [i for i in everything if i in front]
            tail = [i for i in everything if i not in front]
            rows = grevlex_rows(head) if head else []
            return rows + (grevlex_rows(tail) if tail else [])
        w = tuple(int(x) for x in self.weights)
        if len(w) != n:
            raise ValueError("weight vector length must equal the number of variables")
        if min(w, default=0) < 0:
            raise ValueError("weights must be nonnegative")
        rest = grevlex_rows(everything) if self.tiebreak == "grevlex" else \
            [unit(i, 1) for i in everything]
        return [w] + rest

    def key_function(self, ring):
        rows = self.matrix(ring)

        def key(exps):
            return tuple(sum(a * e for a, e in zip(row, exps)) for row in rows)
        return key

    def compare(self, ring, m1, m2):
        key = self.key_function(ring)
        k1, k2 = key(m1), key(m2)
        return (k1 > k2) - (k1 < k2)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def grevlex():
    return GREVLEX


def lex():
    return LEX


def grevlex_last(name):
    """Grevlex with ``name`` moved to the end, as used for colon by a variable."""
    return MonomialOrder("grevlex", last=name)


def block_order(front):
    """Elimination order: the ``front`` variables dominate, grevlex inside blocks."""
    return MonomialOrder("block", block=tuple(front))


def weighted_order(weights, tiebreak="grevlex"):
    return MonomialOrder("weighted", weights=tuple(weights), tiebreak=tiebreak)


def parse_order(text):
    """Parse ``grevlex``, ``lex``, ``block(a,b)`` or ``weighted(1,2,3;lex)``."""
    text = text.strip()
    if text in ("grevlex", "lex"):
        return MonomialOrder(text)
    if text.startswith("block(") and text.endswith(")"):
        names = [v.strip() for v in text[6:-1].split(",") if v.strip()]
        return block_order(names)
    if text.startswith("weighted(") and text.endswith(")"):
        body = text[9:-1]
        tie = "grevlex"
        if ";" in body:
            body, tie = body.split(";", 1)
        return weighted_order([int(x) for x in body.split(",")], tie.strip())
    raise ValueError(f"cannot parse monomial order {text!r}")
