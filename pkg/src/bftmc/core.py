"""Foundational value types shared by every other module.

Process identifiers are dense integers ``0..n-1``.  By convention the
Byzantine processes are the top ``f`` identifiers unless a scenario
overrides the set explicitly; that keeps golden traces deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

BV = "BV"
ECHO = "ECHO"
KINDS = (BV, ECHO)

BIN_VALUES = (0, 1)


class ParamsError(ValueError):
    """Raised when a resilience triple violates its invariants."""


@dataclass(frozen=True, order=True)
class Params:
    """Resilience triple: n processes, at most t Byzantine, actually f."""

    n: int
    t: int
    f: int

    @property
    def correct(self) -> int:
        return self.n - self.f

    def byzantine_ids(self) -> frozenset[int]:
        return frozenset(range(self.n - self.f, self.n))


def validate_params(p: Params, allow_unsafe: bool = False) -> list[str]:
    """Check the Params invariants, returning a list of violations.

    An empty list means the triple is acceptable.  With ``allow_unsafe``
    the resilience condition n > 3t may fail (used by mutation tests and
    the negative-control runs); every other inequality is always enforced.
    """
    violations = []
    if p.n < 1:
        violations.append("n >= 1 fails (n=%d)" % p.n)
    if p.t < 0:
        violations.append("t >= 0 fails (t=%d)" % p.t)
    if p.f < 0:
        violations.append("f >= 0 fails (f=%d)" % p.f)
    if p.f > p.t:
        violations.append("f <= t fails (f=%d, t=%d)" % (p.f, p.t))
    if p.n <= 3 * p.t and not allow_unsafe:
        violations.append("n > 3t fails (n=%d, t=%d)" % (p.n, p.t))
    return violations


def require_valid_params(p: Params, allow_unsafe: bool = False) -> None:
    violations = validate_params(p, allow_unsafe)
    if violations:
        raise ParamsError("; ".join(violations))


def thresholds(p: Params) -> dict[str, int]:
    """The three guard constants: weak t+1, majority 2t+1, quorum n-t."""
    return {"weak": p.t + 1, "majority": 2 * p.t + 1, "quorum": p.n - p.t}


def check_bin(v: int) -> int:
    if v not in BIN_VALUES:
        raise ValueError("binary value must be 0 or 1, got %r" % (v,))
    return v


def negate(v: int) -> int:
    return 1 - check_bin(v)


@dataclass(frozen=True, order=True)
class Message:
    """A broadcast protocol message, identified by kind/round/value/sender."""

    kind: str
    round: int
    value: int
    sender: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError("unknown message kind %r" % (self.kind,))
        if self.round < 1:
            raise ValueError("round must be >= 1, got %d" % self.round)
        check_bin(self.value)
        if self.sender < 0:
            raise ValueError("sender must be >= 0, got %d" % self.sender)

    def key(self) -> tuple[str, int, int]:
        return (self.kind, self.round, self.value)


@dataclass
class RecvLedger:
    """Distinct-sender accounting per (kind, round, value).

    Recording the same message twice is a no-op; a Byzantine sender can
    appear under both values of the same (kind, round) key (equivocation
    is a protocol concern, not a ledger concern).
    """

    senders: dict[tuple[str, int, int], frozenset[int]] = field(default_factory=dict)

    def record(self, m: Message) -> int:
        """Add m's sender to its key set and return the new distinct count."""
        key = m.key()
        current = self.senders.get(key, frozenset())
        self.senders[key] = current | {m.sender}
        return len(self.senders[key])

    def count(self, kind: str, round: int, value: int) -> int:
        return len(self.senders.get((kind, round, value), ()))

    def senders_of(self, kind: str, round: int, value: int) -> frozenset[int]:
        return self.senders.get((kind, round, value), frozenset())

    def distinct_total(self, kind: str, round: int) -> int:
        """Distinct processes that sent any value under (kind, round)."""
        union: frozenset[int] = frozenset()
        for v in BIN_VALUES:
            union = union | self.senders_of(kind, round, v)
        return len(union)

    def copy(self) -> "RecvLedger":
        return RecvLedger(dict(self.senders))

    def freeze(self) -> tuple:
        """Canonical hashable snapshot, for state dedup."""
        return tuple(sorted((k, tuple(sorted(v))) for k, v in self.senders.items() if v))


def record(ledger: RecvLedger, m: Message) -> int:
    return ledger.record(m)
