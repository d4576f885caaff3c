"""Boolean functions over Z_q, their graphs, and root-of-unity sequences.

A generalized Boolean function maps m binary variables to Z_q (q even)
and is stored as a sparse map from monomials to coefficients.  Sequences
are derived by evaluating the function at every index r, with bit order
fixed as r = sum_a r_a * 2**a (x0 is the least significant bit).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .algebra import is_prime
from .errors import (
    ArityError,
    InvalidGamma,
    InvalidModulus,
    InvalidParams,
    NotAPath,
    NotSecondOrder,
    ParseError,
    TruncateError,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    """Sparse polynomial over binary variables with coefficients in Z_q.

    ``terms`` maps a sorted tuple of variable indices to a nonzero
    coefficient; the empty tuple is the constant term.
    """

    m: int
    q: int
    terms: dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.q < 2 or self.q % 2 != 0:
            raise InvalidModulus(f"q must be even and >= 2, got {self.q}")
        if self.m < 0:
            raise InvalidParams("m must be non-negative")
        canon: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            key = tuple(sorted(set(mono)))
            if any(v < 0 or v >= self.m for v in key):
                raise InvalidParams(f"variable index out of range in {mono}")
            c = c % self.q
            if c:
                canon[key] = (canon.get(key, 0) + c) % self.q
                if canon[key] == 0:
                    del canon[key]
        object.__setattr__(self, "terms", canon)

    def degree(self) -> int:
        return max((len(mono) for mono in self.terms), default=0)

    def evaluate(self, x) -> int:
        """Value at a binary point, reduced mod q."""
        x = tuple(x)
        if len(x) != self.m:
            raise ArityError(f"expected {self.m} bits, got {len(x)}")
        total = 0
        for mono, c in self.terms.items():
            if all(x[v] for v in mono):
                total += c
        return total % self.q

    def with_term(self, mono, coeff: int) -> GeneralizedBooleanFunction:
        """New function with ``coeff * prod(mono)`` added."""
        terms = dict(self.terms)
        key = tuple(sorted(set(mono)))
        terms[key] = terms.get(key, 0) + coeff
        return GeneralizedBooleanFunction(self.m, self.q, terms)

    def __add__(self, other: GeneralizedBooleanFunction) -> GeneralizedBooleanFunction:
        if (self.m, self.q) != (other.m, other.q):
            raise InvalidParams("functions live over different (m, q)")
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return GeneralizedBooleanFunction(self.m, self.q, terms)

    def restrict(self, assignments: dict[int, int]) -> GeneralizedBooleanFunction:
        """Substitute fixed bits for some variables (index space unchanged)."""
        terms: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            if any(assignments.get(v) == 0 for v in mono):
                continue
            rest = tuple(v for v in mono if v not in assignments)
            terms[rest] = terms.get(rest, 0) + c
        return GeneralizedBooleanFunction(self.m, self.q, terms)

    def complement_inputs(self) -> GeneralizedBooleanFunction:
        """Substitute 1 - x_i for every variable and expand."""
        terms: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            # prod(1 - x_v) expands over all subsets with alternating sign
            for subset in _subsets(mono):
                sign = -1 if len(subset) % 2 else 1
                terms[subset] = terms.get(subset, 0) + sign * c
        return GeneralizedBooleanFunction(self.m, self.q, terms)

    def to_text(self) -> str:
        """Canonical text form; terms sorted by degree then variables."""
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[mono]
            vars_txt = "*".join(f"x{v}" for v in mono)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_txt)
            else:
                parts.append(f"{c}*{vars_txt}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GeneralizedBooleanFunction({self.to_text()!r}, m={self.m}, q={self.q})"


def _subsets(mono: Monomial):
    out = [()]
    for v in mono:
        out += [s + (v,) for s in out]
    return out


def parse_gbf(text: str, m: int, q: int) -> GeneralizedBooleanFunction:
    """Parse a sum of terms like ``2*x0*x1 + x1 + 1``.

    Each term is an optional integer coefficient and a ``*``-separated
    product of variables ``x<i>``; whitespace is ignored and coefficients
    are reduced mod q.  A bare integer is a constant term.
    """
    if q < 2 or q % 2 != 0:
        raise InvalidModulus(f"q must be even and >= 2, got {q}")
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty expression")
    terms: dict[Monomial, int] = {}
    for addend in re.split(r"(?=[+-])", compact):
        if not addend:
            continue
        sign, body = 1, addend
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = sign
        variables: list[int] = []
        for factor in body.split("*"):
            if re.fullmatch(r"x\d+", factor):
                idx = int(factor[1:])
                if idx >= m:
                    raise ParseError(f"variable x{idx} out of range for m={m}")
                variables.append(idx)
            elif re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
            else:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
        key = tuple(sorted(set(variables)))
        terms[key] = terms.get(key, 0) + coeff
    return GeneralizedBooleanFunction(m, q, terms)


@dataclass(frozen=True)
class FunctionGraph:
    """Graph with one weighted edge per quadratic term."""

    m: int
    edges: dict[tuple[int, int], int]


def graph_of(f: GeneralizedBooleanFunction) -> FunctionGraph:
    """Edges of the quadratic part; rejects functions of degree > 2."""
    if f.degree() > 2:
        raise NotSecondOrder(f"degree {f.degree()} function has no graph")
    edges = {mono: c for mono, c in f.terms.items() if len(mono) == 2}
    return FunctionGraph(f.m, edges)


@dataclass(frozen=True)
class PathCertificate:
    """Witness that deleting ``deleted`` leaves a weight-q/2 path.

    ``deleted`` keeps the caller's order: position i of the selector
    vectors d and t pairs with the i-th deleted variable.
    """

    deleted: tuple[int, ...]
    path_order: tuple[int, ...]
    end_vertices: tuple[int, int]


def check_path_after_deletion(graph: FunctionGraph, deleted, q: int) -> PathCertificate:
    """Verify the remaining vertices form a path whose edges all weigh q/2.

    Returns a certificate with a concrete path order (starting from the
    lower-indexed end vertex), or raises NotAPath.
    """
    deleted = tuple(deleted)
    if len(set(deleted)) != len(deleted):
        raise InvalidParams("deleted vertices must be distinct")
    if any(v < 0 or v >= graph.m for v in deleted):
        raise InvalidParams("deleted vertex out of range")
    remaining = [v for v in range(graph.m) if v not in deleted]
    if not remaining:
        raise NotAPath("all vertices deleted, no path vertex left")
    half = q // 2

    adj: dict[int, list[int]] = {v: [] for v in remaining}
    n_edges = 0
    for (a, b), w in graph.edges.items():
        if a in adj and b in adj:
            if w != half:
                raise NotAPath(f"edge ({a},{b}) has weight {w}, expected q/2 = {half}")
            adj[a].append(b)
            adj[b].append(a)
            n_edges += 1

    if len(remaining) == 1:
        v = remaining[0]
        return PathCertificate(deleted, (v,), (v, v))

    if n_edges != len(remaining) - 1:
        raise NotAPath(f"{n_edges} edges among {len(remaining)} vertices is not a path")
    ends = sorted(v for v in remaining if len(adj[v]) == 1)
    if len(ends) != 2 or any(len(adj[v]) > 2 for v in remaining):
        raise NotAPath("remaining graph has wrong vertex degrees for a path")

    order = [ends[0]]
    prev = None
    while len(order) < len(remaining):
        nxt = [u for u in adj[order[-1]] if u != prev]
        if len(nxt) != 1:
            raise NotAPath("remaining graph is disconnected")
        prev = order[-1]
        order.append(nxt[0])
    if order[-1] != ends[1]:
        raise NotAPath("remaining graph is disconnected")
    return PathCertificate(deleted, tuple(order), (order[0], order[-1]))


@dataclass(frozen=True, eq=False)
class RootSequence:
    """Sequence of delta-th roots of unity, stored as an exponent vector."""

    delta: int
    exponents: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("delta must be >= 1")
        arr = np.asarray(self.exponents, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("exponent vector must be 1-d and non-empty")
        if np.any(arr < 0) or np.any(arr >= self.delta):
            arr = arr % self.delta
        arr.flags.writeable = False
        object.__setattr__(self, "exponents", arr)

    def __len__(self) -> int:
        return int(self.exponents.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootSequence):
            return NotImplemented
        return self.delta == other.delta and np.array_equal(self.exponents, other.exponents)

    def conjugate(self) -> RootSequence:
        return RootSequence(self.delta, (-self.exponents) % self.delta)

    def truncate(self, keep: int) -> RootSequence:
        """Keep the first ``keep`` entries."""
        if keep <= 0 or keep > len(self):
            raise TruncateError(f"cannot keep {keep} of {len(self)} entries")
        return RootSequence(self.delta, self.exponents[:keep].copy())

    def promoted(self, new_delta: int) -> RootSequence:
        """Same complex values expressed over a larger root order."""
        if new_delta % self.delta != 0:
            raise ValueError(f"{new_delta} is not a multiple of {self.delta}")
        return RootSequence(new_delta, self.exponents * (new_delta // self.delta))

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.exponents / self.delta)

    def __repr__(self) -> str:
        return f"RootSequence(delta={self.delta}, exponents={self.exponents.tolist()})"


def sequence_of(f: GeneralizedBooleanFunction) -> RootSequence:
    """Evaluate f at every index r and return (w_q^f(r))_r, r bit-ordered."""
    n = 1 << f.m
    r = np.arange(n, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)
    for mono, c in f.terms.items():
        bits = np.ones(n, dtype=np.int64)
        for v in mono:
            bits &= (r >> v) & 1
        acc += c * bits
    return RootSequence(f.q, acc % f.q)


@dataclass(frozen=True)
class PbfSpec:
    """Parameters of the rational extension of a Boolean function.

    The extension appends s fresh binary variables and adds
    (lam*q/p) * (x_m + 2*x_{m+1} + ... + 2**(s-1)*x_{m+s-1}) to the base
    function (family "F") or to its input complement (family "G").
    """

    f: GeneralizedBooleanFunction
    p: int
    s: int
    lam: int
    family: str = "F"

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidParams(f"p must be prime, got {self.p}")
        if self.s < 1:
            raise InvalidParams("s must be a positive integer")
        if not 2 <= self.p <= (1 << self.s):
            # p in (2**s, 2**(s+1)) would make the truncation length negative
            raise InvalidParams(f"need 2 <= p <= 2**s, got p={self.p}, s={self.s}")
        if not 0 <= self.lam < self.p:
            raise InvalidParams(f"lambda must lie in [0, p), got {self.lam}")
        if self.family not in ("F", "G"):
            raise InvalidParams(f"family must be 'F' or 'G', got {self.family!r}")


def codeword_function(
    f: GeneralizedBooleanFunction,
    deleted,
    d_vec,
    t_vec,
    d: int,
    gamma: int,
    family: str = "F",
) -> GeneralizedBooleanFunction:
    """The member function selected by bits d_vec, code index bits t_vec,
    and the extra bit d.

    Family "F": f + (q/2) * ((d_vec + t_vec) . x + d * x_gamma) where x runs
    over the deleted variables.  Family "G" complements f's inputs, the
    deleted variables, and the bit d (but not x_gamma itself).
    """
    deleted = tuple(deleted)
    d_vec = tuple(d_vec)
    t_vec = tuple(t_vec)
    if len(d_vec) != len(deleted) or len(t_vec) != len(deleted):
        raise ArityError("d_vec and t_vec must match the deleted-variable count")
    if any(b not in (0, 1) for b in d_vec + t_vec + (d,)):
        raise InvalidParams("d_vec, t_vec, and d must be binary")
    half = f.q // 2
    if family == "F":
        g = f
        for var, (di, ti) in zip(deleted, zip(d_vec, t_vec)):
            g = g.with_term((var,), half * (di + ti))
        g = g.with_term((gamma,), half * d)
    elif family == "G":
        g = f.complement_inputs()
        for var, (di, ti) in zip(deleted, zip(d_vec, t_vec)):
            # (d_i + t_i) * (1 - x_var)
            g = g.with_term((), half * (di + ti))
            g = g.with_term((var,), -half * (di + ti))
        g = g.with_term((gamma,), half * (1 - d))
    else:
        raise InvalidParams(f"family must be 'F' or 'G', got {family!r}")
    return g


def pbf_sequence(
    spec: PbfSpec,
    d_vec,
    t_vec,
    d: int,
    cert: PathCertificate,
    gamma: int,
) -> RootSequence:
    """Root-of-unity sequence of the extended function, length 2**(m+s).

    Index r' = r + 2**m * w (w from the s fresh variables) carries
    exponent (delta/q)*base(r) + (delta/p)*lam*w mod delta, where base is
    the codeword function and delta = lcm(p, q).
    """
    if gamma not in cert.end_vertices:
        raise InvalidGamma(f"x{gamma} is not an end vertex of the path")
    f = spec.f
    delta = lcm(spec.p, f.q)
    base = codeword_function(f, cert.deleted, d_vec, t_vec, d, gamma, spec.family)
    base_exp = sequence_of(base).exponents
    scale = delta // f.q
    step = (delta // spec.p) * spec.lam
    blocks = [(scale * base_exp + step * w) % delta for w in range(1 << spec.s)]
    return RootSequence(delta, np.concatenate(blocks))
