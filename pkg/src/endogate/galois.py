"""Certifying Gal(f) in {S_n, A_n} over Q from factorizations mod p.

For a prime p dividing neither lc(f) nor disc(f), the degrees of the
irreducible factors of f mod p are the cycle type of a Frobenius element of
Gal(f) (Dedekind). Powers of that element give further cycle types: if a
prime q occurs exactly once among the parts and divides no other part, a
suitable power is a single q-cycle. The certificate collects

* an n-cycle (the group is transitive, so f is irreducible over Q);
* primitivity: n prime, or a q-cycle with q prime and q > n/2;
* a q-cycle with q prime and q <= n - 3, or a 3-cycle: a primitive group
  containing one contains A_n (Jordan).

With A_n certified, Gal(f) = A_n iff disc(f) is a square.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Sequence

from .config import DEFAULT_PRIME_BUDGET
from .polynomial import IntPolynomial, discriminant, is_square_integer, squarefree_check


class BadPrime(ValueError):
    """p divides the leading coefficient or the discriminant."""


class OutOfHypothesisDegree(ValueError):
    """Certification needs degree >= 5."""


class NotSquarefree(ValueError):
    pass


class Group(str, enum.Enum):
    S_N = "S_n"
    A_N = "A_n"
    INCONCLUSIVE = "Inconclusive"


class Conclusion(str, enum.Enum):
    TRIVIAL = "TrivialEndomorphisms"
    OUT_OF_HYPOTHESIS = "OutOfHypothesis"


# --- primes ----------------------------------------------------------------


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, isqrt(q) + 1))


# --- polynomials over F_p (ascending lists, trimmed) -----------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce(a: Sequence[int], p: int) -> list[int]:
    return _trim([c % p for c in a])


def _monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] = (a[k - db + i] - c * bi) % p
    return _trim(q), _trim(a[:db])


def _mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _divmod(_reduce(out, p), mod, p)[1]


def _powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _mulmod(result, base, mod, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, mod, p)
    return result


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else a


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


# --- cycle types -----------------------------------------------------------


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        if any(x <= 0 for x in self.parts):
            raise ValueError("cycle lengths must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def is_full_cycle(self) -> bool:
        return len(self.parts) == 1

    def prime_cycle_powers(self) -> tuple[int, ...]:
        """Primes q such that some power of this element is a single q-cycle."""
        out = []
        for q in sorted(set(self.parts)):
            # the one part divisible by q must be q itself, else the power is several q-cycles
            if is_prime(q) and [x for x in self.parts if x % q == 0] == [q]:
                out.append(q)
        return tuple(out)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.parts)) + "}"


def factor_degrees_mod_p(f: IntPolynomial, p: int, disc: int | None = None) -> CycleType:
    """Degrees of the irreducible factors of f mod p, by distinct-degree factorization."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.lc % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient")
    if disc is None:
        disc = discriminant(f)
    if disc % p == 0:
        raise BadPrime(f"{p} divides the discriminant")
    g = _monic(_reduce(f.coeffs, p), p)
    x = [0, 1]
    h = x
    parts: list[int] = []
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, g, p)
        common = _gcd(g, _sub(h, x, p), p)
        k = len(common) - 1
        if k > 0:
            parts.extend([d] * (k // d))
            g = _divmod(g, common, p)[0]
            h = _divmod(h, g, p)[1]
    if len(g) - 1 > 0:
        parts.append(len(g) - 1)
    return CycleType(tuple(parts))


# --- certificate -----------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A Frobenius cycle type at ``prime``; ``prime`` is None for structural facts."""

    prime: int | None
    cycle_type: CycleType | None
    cycle_length: int
    reason: str

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "cycle_type": None if self.cycle_type is None else self.cycle_type.to_json(),
            "cycle_length": self.cycle_length,
            "reason": self.reason,
        }


@dataclass
class GaloisCertificate:
    poly: IntPolynomial
    n: int
    disc: int
    disc_is_square: bool
    transitive_witness: Witness | None = None
    primitivity_witness: Witness | None = None
    jordan_witness: Witness | None = None
    group: Group = Group.INCONCLUSIVE
    primes_scanned: int = 0
    budget: int = DEFAULT_PRIME_BUDGET
    scan_log: list = field(default_factory=list)

    @property
    def determined(self) -> bool:
        return self.group is not Group.INCONCLUSIVE

    def to_json(self, with_log: bool | None = None) -> dict:
        if with_log is None:
            with_log = not self.determined
        out = {
            "poly": list(self.poly.coeffs),
            "poly_str": self.poly.to_string(),
            "n": self.n,
            "disc": str(self.disc),
            "disc_is_square": self.disc_is_square,
            "group": self.group.value,
            "group_name": group_name(self.group, self.n),
            "transitive_witness": _wj(self.transitive_witness),
            "primitivity_witness": _wj(self.primitivity_witness),
            "jordan_witness": _wj(self.jordan_witness),
            "primes_scanned": self.primes_scanned,
            "prime_budget": self.budget,
        }
        if with_log:
            out["scan_log"] = list(self.scan_log)
        return out


def _wj(w: Witness | None):
    return None if w is None else w.to_json()


def group_name(group: Group, n: int) -> str:
    if group is Group.S_N:
        return f"S{n}"
    if group is Group.A_N:
        return f"A{n}"
    return group.value


def _primitivity(ct: CycleType, n: int) -> int | None:
    qs = [q for q in ct.prime_cycle_powers() if 2 * q > n]
    return max(qs) if qs else None


def _jordan(ct: CycleType, n: int) -> int | None:
    qs = [q for q in ct.prime_cycle_powers() if q <= n - 3 or q == 3]
    return max(qs) if qs else None


def certify_big_galois(f: IntPolynomial, budget: int = DEFAULT_PRIME_BUDGET) -> GaloisCertificate:
    """Scan good primes up to ``budget`` for witnesses that Gal(f) contains A_n.

    Witnesses are the first qualifying primes in increasing order, so a
    larger budget never changes a certificate that was already determined.
    """
    n = f.degree
    if n < 5:
        raise OutOfHypothesisDegree(f"degree {n} < 5")
    if not squarefree_check(f):
        raise NotSquarefree("f has a repeated factor")
    disc = discriminant(f)
    cert = GaloisCertificate(f, n, disc, is_square_integer(disc), budget=budget)
    if is_prime(n):
        cert.primitivity_witness = Witness(None, None, n, "prime degree: transitive implies primitive")
    for p in primes_up_to(budget):
        if f.lc % p == 0 or disc % p == 0:
            cert.scan_log.append({"prime": p, "skipped": "bad prime"})
            continue
        ct = factor_degrees_mod_p(f, p, disc)
        cert.primes_scanned += 1
        cert.scan_log.append({"prime": p, "cycle_type": ct.to_json()})
        if cert.transitive_witness is None and ct.is_full_cycle():
            cert.transitive_witness = Witness(p, ct, n, "n-cycle: transitive")
        if cert.primitivity_witness is None:
            q = _primitivity(ct, n)
            if q is not None:
                cert.primitivity_witness = Witness(p, ct, q, f"{q}-cycle with {q} > n/2: primitive")
        if cert.jordan_witness is None:
            q = _jordan(ct, n)
            if q is not None:
                cert.jordan_witness = Witness(p, ct, q, f"{q}-cycle in a primitive group: contains A_n")
        if cert.transitive_witness and cert.primitivity_witness and cert.jordan_witness:
            break
    if cert.transitive_witness and cert.primitivity_witness and cert.jordan_witness:
        cert.group = Group.A_N if cert.disc_is_square else Group.S_N
    return cert


def reverify(cert: GaloisCertificate) -> bool:
    """Recheck every stored witness from scratch."""
    f, n = cert.poly, cert.n
    if discriminant(f) != cert.disc or is_square_integer(cert.disc) != cert.disc_is_square:
        return False
    if not cert.determined:
        return True

    def recompute(w: Witness) -> CycleType | None:
        try:
            return factor_degrees_mod_p(f, w.prime)
        except BadPrime:
            return None

    tw, pw, jw = cert.transitive_witness, cert.primitivity_witness, cert.jordan_witness
    ct = recompute(tw)
    if ct is None or ct != tw.cycle_type or not ct.is_full_cycle() or ct.n != n:
        return False
    if pw.prime is None:
        if not is_prime(n):
            return False
    else:
        ct = recompute(pw)
        if ct is None or ct != pw.cycle_type or pw.cycle_length not in ct.prime_cycle_powers():
            return False
        if 2 * pw.cycle_length <= n:
            return False
    ct = recompute(jw)
    if ct is None or ct != jw.cycle_type or jw.cycle_length not in ct.prime_cycle_powers():
        return False
    if not (jw.cycle_length <= n - 3 or jw.cycle_length == 3):
        return False
    expected = Group.A_N if cert.disc_is_square else Group.S_N
    return cert.group is expected


# --- endomorphism verdict --------------------------------------------------


@dataclass
class EndomorphismVerdict:
    conclusion: Conclusion
    reasons: list[str]
    certificate: GaloisCertificate | None = None
    reduction: dict | None = None

    def to_json(self) -> dict:
        return {
            "conclusion": self.conclusion.value,
            "reasons": list(self.reasons),
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "reduction": self.reduction,
        }


_RANK_ARGUMENT = (
    "R = End(J) (x) Z/2 is a unital subalgebra of End(J[2]) = End(Q_B) stable under "
    "conjugation by the Galois image, which contains A_n acting on the absolutely simple "
    "module Q_B; so R is F_2 * Id (End(J) has rank 1, i.e. End(J) = Z) or all of End(Q_B) "
    "(rank (2g)^2, which forces J supersingular in positive characteristic)"
)


def verdict(f: IntPolynomial, budget: int = DEFAULT_PRIME_BUDGET) -> EndomorphismVerdict:
    """Decide End(J(C_f)) = Z over Q-bar, or report which hypothesis is not established."""
    out = Conclusion.OUT_OF_HYPOTHESIS
    if f.is_zero() or f.degree < 5:
        deg = "zero polynomial" if f.is_zero() else f"degree {f.degree}"
        return EndomorphismVerdict(out, [f"{deg}: the criterion needs degree n >= 5"])
    if not squarefree_check(f):
        return EndomorphismVerdict(out, ["f has a repeated root, y^2 = f(x) is singular"])
    cert = certify_big_galois(f, budget)
    n = f.degree
    if not cert.determined:
        missing = [
            name
            for name, w in (
                ("transitivity (n-cycle)", cert.transitive_witness),
                ("primitivity", cert.primitivity_witness),
                ("Jordan prime cycle", cert.jordan_witness),
            )
            if w is None
        ]
        return EndomorphismVerdict(
            out,
            [f"no witness for {', '.join(missing)} among primes <= {budget}; Gal(f) not certified to be S{n} or A{n}"],
            cert,
        )
    gname = group_name(cert.group, n)
    reasons = [
        f"Gal(f) = {gname}: f is irreducible over Q and its Galois group contains A{n}",
        "disc(f) is a square" if cert.disc_is_square else "disc(f) is not a square",
    ]
    reduction = None
    if n % 2 == 0:
        from .fieldreduce import reduce_even_degree

        red = reduce_even_degree(f, transitive_prime=cert.transitive_witness.prime)
        reduction = red.to_json()
        if not red.identity_holds:
            return EndomorphismVerdict(out, reasons + ["even-degree reduction failed its exactness check"], cert, reduction)
        reasons.append(
            f"even degree {n}: C_f is birational over Q(alpha) to y1^2 = h1(x1) with deg h1 = {n - 1}, "
            f"whose Galois group over Q(alpha) is S{n - 1} or A{n - 1} (cited, not recomputed)"
        )
        genus = (n - 2) // 2
    else:
        genus = (n - 1) // 2
    reasons.append(_RANK_ARGUMENT)
    reasons.append(f"ground field Q has characteristic 0, so End(J(C_f)) = Z (genus {genus})")
    return EndomorphismVerdict(Conclusion.TRIVIAL, reasons, cert, reduction)
