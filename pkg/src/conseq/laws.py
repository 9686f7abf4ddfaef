"""Extensional operator tables over small universes, and exhaustive law checks.

An OperatorTable pins down an operator on *every* subset of a universe of at
most 16 symbols, so algebraic laws can be decided by enumeration instead of
proof.  Subsets are represented as bitmasks relative to the canonically
sorted universe; all enumeration is in increasing bitmask order, so reported
counterexamples are deterministic across runs.

The four laws checked are the closure-operator axioms restricted to a finite
universe:

* insertion      X subset of T(X)
* idempotence    T(T(X)) = T(X)
* monotonicity   X subset of Y  implies  T(X) subset of T(Y)
* finitary       T(X) = union of T(Z) over all Z subset of X

Monotonicity is decided on covering pairs (X, X + {a}) only: any X within Y
is a chain of single-element extensions, so inclusion on covering pairs is
equivalent to inclusion on all pairs and drops the cost from 3^n to n*2^n.
The finitary union is accumulated by the same one-element recursion, which
enumerates every subset's contribution exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import (
    LanguageMismatch,
    PreconditionViolated,
    UniverseIncomplete,
    UniverseMismatch,
    UniverseTooLarge,
)
from .model import LogicSystem, Symbol, symbol_key

UNIVERSE_CAP = 16


@dataclass(frozen=True)
class OperatorTable:
    """A total map from every subset of `universe` to a subset of `universe`.

    `universe` must be canonically sorted (name, then sort); `images[m]` is
    the image of the subset with bitmask m, itself encoded as a bitmask.
    Build tables with `tabulate` or `OperatorTable.from_function`.
    """

    universe: tuple[Symbol, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.universe)
        if n > UNIVERSE_CAP:
            raise UniverseTooLarge(f"universe has {n} symbols; the cap is {UNIVERSE_CAP}")
        if len(set(self.universe)) != n:
            raise ValueError("universe symbols must be distinct")
        if list(self.universe) != sorted(self.universe, key=symbol_key):
            raise ValueError("universe must be canonically sorted")
        full = 1 << n
        if len(self.images) != full:
            raise ValueError(f"expected {full} images, got {len(self.images)}")
        for m, im in enumerate(self.images):
            if not 0 <= im < full:
                raise ValueError(f"image of mask {m} leaves the universe")

    @classmethod
    def from_function(
        cls, universe: Iterable[Symbol], fn: Callable[[frozenset[Symbol]], Iterable[Symbol]]
    ) -> "OperatorTable":
        """Tabulate an arbitrary set function over every subset."""
        syms = tuple(sorted(set(universe), key=symbol_key))
        if len(syms) > UNIVERSE_CAP:
            raise UniverseTooLarge(f"universe has {len(syms)} symbols; the cap is {UNIVERSE_CAP}")
        bit = {s: 1 << i for i, s in enumerate(syms)}
        images = []
        for mask in range(1 << len(syms)):
            subset = frozenset(s for s in syms if bit[s] & mask)
            image = 0
            for s in fn(subset):
                b = bit.get(s)
                if b is None:
                    raise ValueError(f"image symbol {s.name!r} is outside the universe")
                image |= b
            images.append(image)
        return cls(syms, tuple(images))

    @property
    def _bit(self) -> dict[Symbol, int]:
        return {s: 1 << i for i, s in enumerate(self.universe)}

    def mask_of(self, subset: Iterable[Symbol]) -> int:
        bit = self._bit
        mask = 0
        for s in subset:
            try:
                mask |= bit[s]
            except KeyError:
                raise ValueError(f"symbol {s.name!r} is outside the universe") from None
        return mask

    def set_of(self, mask: int) -> frozenset[Symbol]:
        return frozenset(s for i, s in enumerate(self.universe) if mask & (1 << i))

    def image(self, subset: Iterable[Symbol]) -> frozenset[Symbol]:
        return self.set_of(self.images[self.mask_of(subset)])

    def subsets(self) -> Iterator[frozenset[Symbol]]:
        """All subsets of the universe in increasing bitmask order."""
        for mask in range(1 << len(self.universe)):
            yield self.set_of(mask)


@dataclass(frozen=True)
class LawResult:
    """Verdict for one checked law; a failure carries a re-checkable witness."""

    law: str
    passed: bool
    witness: tuple[frozenset[Symbol], ...] | None
    checked: int

    def __str__(self) -> str:
        if self.passed:
            return f"{self.law}: pass ({self.checked} checks)"
        parts = " ; ".join("{" + ",".join(sorted(s.name for s in w)) + "}" for w in self.witness)
        return f"{self.law}: FAIL at {parts} ({self.checked} checks)"


@dataclass(frozen=True)
class LawReport:
    """Outcome of a batch of exhaustive law checks."""

    results: tuple[LawResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[LawResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self) -> Iterator[LawResult]:
        return iter(self.results)


@dataclass(frozen=True)
class TableComparison:
    """Equality verdict for two tables plus the first differing subset."""

    equal: bool
    witness: frozenset[Symbol] | None = None

    def __bool__(self) -> bool:
        return self.equal


def _rule_masks(system: LogicSystem, bit: dict[Symbol, int]) -> list[tuple[int, int]]:
    masks = []
    for rule in system.rules:
        pm = 0
        for p in rule.premise_set:
            pm |= bit[p]
        masks.append((pm, bit[rule.conclusion]))
    return masks


def _closure_images(n: int, rule_masks: list[tuple[int, int]]) -> list[int]:
    """Fixpoint images for every subset mask, by repeated full passes."""
    images = []
    for mask in range(1 << n):
        cur = mask
        while True:
            add = 0
            for pm, cb in rule_masks:
                if cur & pm == pm:
                    add |= cb
            nxt = cur | add
            if nxt == cur:
                break
            cur = nxt
        images.append(cur)
    return images


def tabulate(system: LogicSystem, universe: Iterable[Symbol]) -> OperatorTable:
    """Extensional table of the generated operator over `universe`.

    The universe must contain every symbol used by the system's rules (and
    stay inside its language), so closures never leave the universe and each
    entry is exactly `close(system, X)`.
    """
    syms = tuple(sorted(set(universe), key=symbol_key))
    n = len(syms)
    if n > UNIVERSE_CAP:
        raise UniverseTooLarge(f"universe has {n} symbols; the cap is {UNIVERSE_CAP}")
    missing = system.symbols - set(syms)
    if missing:
        name = sorted(missing, key=symbol_key)[0].name
        raise UniverseIncomplete(f"universe is missing system symbol {name!r}")
    outside = set(syms) - system.language.symbols
    if outside:
        name = sorted(outside, key=symbol_key)[0].name
        raise LanguageMismatch(f"universe symbol {name!r} is not in the system's language")
    bit = {s: 1 << i for i, s in enumerate(syms)}
    images = _closure_images(n, _rule_masks(system, bit))
    return OperatorTable(syms, tuple(images))


def check_axioms(table: OperatorTable) -> LawReport:
    """Exhaustively decide the four closure-operator laws on a table."""
    images = table.images
    n = len(table.universe)
    full = 1 << n
    results = []

    witness = None
    for m in range(full):
        if images[m] | m != images[m]:
            witness = (table.set_of(m),)
            break
    results.append(LawResult("insertion", witness is None, witness, full))

    witness = None
    for m in range(full):
        im = images[m]
        if images[im] != im:
            witness = (table.set_of(m),)
            break
    results.append(LawResult("idempotence", witness is None, witness, full))

    witness = None
    checked = 0
    for m in range(full):
        im = images[m]
        for i in range(n):
            b = 1 << i
            if m & b:
                continue
            checked += 1
            if im & ~images[m | b]:
                witness = (table.set_of(m), table.set_of(m | b))
                break
        if witness:
            break
    results.append(LawResult("monotonicity", witness is None, witness, checked))

    # union[m] = OR of images over all submasks of m, built by one-element
    # recursion so each subset contributes exactly once
    witness = None
    checked = 0
    union = [0] * full
    for m in range(full):
        u = images[m]
        rest = m
        while rest:
            low = rest & -rest
            u |= union[m ^ low]
            rest ^= low
        union[m] = u
        checked += 1
        if u != images[m]:
            bad = next(
                z for z in range(m + 1) if z & m == z and images[z] & ~images[m]
            )
            witness = (table.set_of(m), table.set_of(bad))
            break
    results.append(LawResult("finitary", witness is None, witness, checked))

    return LawReport(tuple(results))


def equivalent(t1: OperatorTable, t2: OperatorTable) -> TableComparison:
    """Entry-by-entry equality; the witness is the first differing subset."""
    if t1.universe != t2.universe:
        raise UniverseMismatch("tables are over different universes")
    for m, (a, b) in enumerate(zip(t1.images, t2.images)):
        if a != b:
            return TableComparison(False, t1.set_of(m))
    return TableComparison(True)


def verify_closed_form_characterization(system: LogicSystem) -> LawReport:
    """Check both directions of the closed-form characterization of a mixed
    ternary system, exhaustively over the subsets of its rule symbols.

    Forward: for every X, the engine's closure returns X itself when no
    premise set is contained in X, and otherwise X plus exactly the
    conclusions of the matched rules; the matched count never exceeds the
    rule count, never shrinks when X grows, and each rule's premise set
    closes to itself plus the conclusions of every rule sharing it.

    Reverse: the operator built from the one-pass closed form alone is
    tabulated independently; it must agree with the engine's table on every
    subset and must itself satisfy the four closure-operator laws.
    """
    check = system.ternary_shape
    if not check:
        raise PreconditionViolated(f"not a mixed ternary system: {check.reason}")
    syms = tuple(sorted(system.symbols, key=symbol_key))
    n = len(syms)
    if n > UNIVERSE_CAP:
        raise UniverseTooLarge(f"system uses {n} symbols; the cap is {UNIVERSE_CAP}")
    bit = {s: 1 << i for i, s in enumerate(syms)}
    rule_masks = _rule_masks(system, bit)
    engine = tabulate(system, syms)
    images = engine.images
    full = 1 << n

    results = []

    # matched[m] = bitmask over rule indices whose premise set lies inside m
    matched = []
    for m in range(full):
        mm = 0
        for i, (pm, _) in enumerate(rule_masks):
            if m & pm == pm:
                mm |= 1 << i
        matched.append(mm)

    witness = None
    checked = 0
    for m in range(full):
        if matched[m] == 0:
            checked += 1
            if images[m] != m:
                witness = (engine.set_of(m),)
                break
    results.append(LawResult("no-match-fixed", witness is None, witness, checked))

    witness = None
    checked = 0
    for m in range(full):
        if matched[m]:
            checked += 1
            expect = m
            mm = matched[m]
            i = 0
            while mm:
                if mm & 1:
                    expect |= rule_masks[i][1]
                mm >>= 1
                i += 1
            if images[m] != expect:
                witness = (engine.set_of(m),)
                break
    results.append(LawResult("match-union", witness is None, witness, checked))

    # each rule's own premise set closes to itself plus the conclusions of
    # every rule sharing that premise set (several rules may share one)
    witness = None
    for pm, _ in rule_masks:
        expect = pm
        mm = matched[pm]
        i = 0
        while mm:
            if mm & 1:
                expect |= rule_masks[i][1]
            mm >>= 1
            i += 1
        if images[pm] != expect:
            witness = (engine.set_of(pm),)
            break
    results.append(LawResult("premise-set-values", witness is None, witness, len(rule_masks)))

    # matched-rule sets grow with X; checked on covering pairs, with the
    # count bound m <= n implicit in the representation
    witness = None
    checked = 0
    for m in range(full):
        for i in range(n):
            b = 1 << i
            if m & b:
                continue
            checked += 1
            if matched[m] & ~matched[m | b]:
                witness = (engine.set_of(m), engine.set_of(m | b))
                break
        if witness:
            break
    results.append(LawResult("matched-count", witness is None, witness, checked))

    # reverse direction: one pass only, tabulated independently of the engine
    cf_images = []
    for m in range(full):
        out = m
        for pm, cb in rule_masks:
            if m & pm == pm:
                out |= cb
        cf_images.append(out)
    closed_form = OperatorTable(syms, tuple(cf_images))

    cmp = equivalent(engine, closed_form)
    results.append(
        LawResult(
            "closed-form-agreement",
            cmp.equal,
            None if cmp.equal else (cmp.witness,),
            full,
        )
    )
    for law in check_axioms(closed_form):
        results.append(
            LawResult(f"closed-form-{law.law}", law.passed, law.witness, law.checked)
        )

    return LawReport(tuple(results))
