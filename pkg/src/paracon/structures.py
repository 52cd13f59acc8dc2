"""Explicit finite consequence structures with fully materialized tables.

A structure is a finite ordered domain of opaque atom labels plus one table
entry per subset (subsets are bitmasks over the domain order), and an
optional total negation map.  Every check below is exhaustive over the
table, so every verdict comes with a replayable witness or counterexample.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .classical import evaluate
from .errors import CapExceededError, StructureFormatError
from .formula import FormulaUniverse, Not, render, variables


class FiniteConsequenceStructure:
    """A pair (domain, Cn) with Cn given by a complete subset-to-subset table."""

    def __init__(
        self,
        domain: Sequence[str],
        table: Sequence[int],
        negation: Optional[Mapping[str, str]] = None,
        note: str = "",
        max_atoms: int = 16,
    ):
        domain = tuple(domain)
        if not domain:
            raise ValueError("empty domain not allowed")
        if len(set(domain)) != len(domain):
            raise ValueError("domain labels must be distinct")
        if any(not isinstance(a, str) or not a for a in domain):
            raise ValueError("domain labels must be non-empty strings")
        if len(domain) > max_atoms:
            raise CapExceededError(
                f"domain of {len(domain)} atoms exceeds the cap of {max_atoms}"
            )
        size = 1 << len(domain)
        table = tuple(table)
        if len(table) != size:
            raise ValueError(f"table must have {size} entries, got {len(table)}")
        full = size - 1
        for mask, value in enumerate(table):
            if not 0 <= value <= full:
                raise ValueError(f"table value out of range for subset {mask}")
        if negation is not None:
            negation = dict(negation)
            missing = [a for a in domain if a not in negation]
            if missing:
                raise ValueError(f"negation map is not total; missing {missing}")
            extra = [a for a in negation if a not in domain]
            if extra:
                raise ValueError(f"negation map mentions unknown atoms {extra}")
            if any(v not in domain for v in negation.values()):
                raise ValueError("negation map has values outside the domain")
        self.domain = domain
        self.table = table
        self.negation = negation
        self.note = note
        self._index = {a: i for i, a in enumerate(domain)}

    # -- subset plumbing ---------------------------------------------------

    @property
    def n_atoms(self) -> int:
        return len(self.domain)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.domain)) - 1

    def mask_of(self, atoms: Iterable[str]) -> int:
        mask = 0
        for a in atoms:
            if a not in self._index:
                raise ValueError(f"atom {a!r} is not in the domain")
            mask |= 1 << self._index[a]
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.domain) if mask >> i & 1)

    def cn_mask(self, mask: int) -> int:
        return self.table[mask]

    def negation_index(self) -> list[int]:
        if self.negation is None:
            raise ValueError("structure has no negation map")
        return [self._index[self.negation[a]] for a in self.domain]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteConsequenceStructure):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.table == other.table
            and self.negation == other.negation
        )

    def __repr__(self) -> str:
        return (
            f"FiniteConsequenceStructure(domain={self.domain!r}, "
            f"|table|={len(self.table)}, negation={'yes' if self.negation else 'no'})"
        )


def cn(structure: FiniteConsequenceStructure, subset: Iterable[str]) -> tuple[str, ...]:
    """Table lookup: the consequences of a subset, as ordered labels."""
    return structure.labels_of(structure.cn_mask(structure.mask_of(subset)))


def is_consistent_in(
    structure: FiniteConsequenceStructure, subset: Iterable[str]
) -> bool:
    """A subset is consistent when its consequences are not the whole domain."""
    return structure.cn_mask(structure.mask_of(subset)) != structure.full_mask


@dataclass(frozen=True)
class AxiomReport:
    name: str
    holds: bool
    counterexample: Optional[tuple] = None
    witness: Optional[object] = None
    note: str = ""


AXIOMS = ("inclusion", "idempotency", "monotonicity", "finiteness")


def check_axiom(structure: FiniteConsequenceStructure, which: str) -> AxiomReport:
    """Exhaustively check one closure-operator axiom over the whole table."""
    S = structure
    if which == "inclusion":
        for mask in range(1 << S.n_atoms):
            if S.table[mask] & mask != mask:
                return AxiomReport(which, False, (S.labels_of(mask),))
        return AxiomReport(which, True)
    if which == "idempotency":
        for mask in range(1 << S.n_atoms):
            closed = S.table[mask]
            if S.table[closed] & ~closed:
                return AxiomReport(which, False, (S.labels_of(mask),))
        return AxiomReport(which, True)
    if which == "monotonicity":
        # Monotone iff adding a single atom never loses consequences.
        for mask in range(1 << S.n_atoms):
            for i in range(S.n_atoms):
                if mask >> i & 1:
                    continue
                bigger = mask | (1 << i)
                if S.table[mask] & ~S.table[bigger]:
                    return AxiomReport(
                        which, False, (S.labels_of(mask), S.labels_of(bigger))
                    )
        return AxiomReport(which, True)
    if which == "finiteness":
        # Every consequence needs a finite supporting subset; on a finite
        # domain the subset itself qualifies, so this can never fail here.
        return AxiomReport(which, True, note="vacuous at finite scale")
    raise ValueError(f"unknown axiom {which!r}")


def is_normal(structure: FiniteConsequenceStructure) -> bool:
    """Inclusion, idempotency and monotonicity all hold."""
    return all(
        check_axiom(structure, axiom).holds
        for axiom in ("inclusion", "idempotency", "monotonicity")
    )


@dataclass(frozen=True)
class HomomorphismCandidate:
    source: FiniteConsequenceStructure
    target: FiniteConsequenceStructure
    mapping: Mapping[str, str]

    def __post_init__(self):
        missing = [a for a in self.source.domain if a not in self.mapping]
        if missing:
            raise ValueError(f"mapping is not total; missing {missing}")
        bad = [a for a in self.source.domain if self.mapping[a] not in self.target.domain]
        if bad:
            raise ValueError(f"mapping sends {bad} outside the target domain")


def check_homomorphism(candidate: HomomorphismCandidate) -> AxiomReport:
    """Validate injectivity and image(Cn(A)) == Cn'(image(A)) for every A."""
    src, tgt = candidate.source, candidate.target
    images = [tgt._index[candidate.mapping[a]] for a in src.domain]
    seen: dict[int, str] = {}
    for atom, image in zip(src.domain, images):
        if image in seen:
            return AxiomReport(
                "homomorphism",
                False,
                (seen[image], atom),
                note="not injective",
            )
        seen[image] = atom

    def image_mask(mask: int) -> int:
        out = 0
        for i in range(src.n_atoms):
            if mask >> i & 1:
                out |= 1 << images[i]
        return out

    for mask in range(1 << src.n_atoms):
        if image_mask(src.table[mask]) != tgt.table[image_mask(mask)]:
            return AxiomReport(
                "homomorphism",
                False,
                (src.labels_of(mask),),
                note="consequence square does not commute",
            )
    return AxiomReport("homomorphism", True)


def check_explosive(structure: FiniteConsequenceStructure) -> AxiomReport:
    """Whenever some x and its negation are consequences, everything must be.

    A failing report means the structure is paraconsistent; the
    counterexample is (subset, atom) with both the atom and its negation
    derivable while the consequence set is proper.
    """
    S = structure
    neg = S.negation_index()
    for mask in range(1 << S.n_atoms):
        closed = S.table[mask]
        if closed == S.full_mask:
            continue
        for i in range(S.n_atoms):
            if closed >> i & 1 and closed >> neg[i] & 1:
                return AxiomReport(
                    "explosion",
                    False,
                    (S.labels_of(mask), S.domain[i]),
                    note="structure is paraconsistent",
                )
    return AxiomReport("explosion", True)


def check_joint_consistency(structure: FiniteConsequenceStructure) -> AxiomReport:
    """Some atom x with {x} and {neg x} consistent but {x, neg x} inconsistent."""
    S = structure
    neg = S.negation_index()
    full = S.full_mask
    for i in range(S.n_atoms):
        x, nx = 1 << i, 1 << neg[i]
        if S.table[x] != full and S.table[nx] != full and S.table[x | nx] == full:
            return AxiomReport("joint consistency", True, witness=S.domain[i])
    return AxiomReport(
        "joint consistency",
        False,
        note="no atom has consistent {x} and {neg x} with inconsistent {x, neg x}",
    )


def check_conjunctive_property(structure: FiniteConsequenceStructure) -> AxiomReport:
    """Every pair {x, y} has a single atom z with the same consequences."""
    S = structure
    singleton_tables = [S.table[1 << k] for k in range(S.n_atoms)]
    for i in range(S.n_atoms):
        for j in range(i, S.n_atoms):
            target = S.table[(1 << i) | (1 << j)]
            if target not in singleton_tables:
                return AxiomReport(
                    "conjunctive property", False, (S.domain[i], S.domain[j])
                )
    return AxiomReport("conjunctive property", True)


def classical_restriction(
    universe: FormulaUniverse, max_atoms: int = 14
) -> FiniteConsequenceStructure:
    """Restrict classical consequence to a finite formula universe.

    Atoms are rendered formulas; the table entry for A is every universe
    member classically entailed by A.  The negation map sends u to ~u when
    ~u is in the universe, otherwise to the falsum member (so the universe
    must have been built with the with_falsum closure).
    """
    if universe.falsum is None:
        raise ValueError("universe must be built with the with_falsum closure")
    formulas = list(universe)
    n = len(formulas)
    if n > max_atoms:
        raise CapExceededError(
            f"universe of {n} formulas exceeds the restriction cap of {max_atoms}"
        )
    labels = [render(f) for f in formulas]
    names = sorted({v for f in formulas for v in variables(f)})

    # One bitmask of satisfied members per valuation; Cn(A) is then the
    # intersection of the rows containing A (empty intersection: everything).
    rows = []
    for values in itertools.product((False, True), repeat=len(names)):
        valuation = dict(zip(names, values))
        row = 0
        for i, f in enumerate(formulas):
            if evaluate(f, valuation):
                row |= 1 << i
        rows.append(row)

    full = (1 << n) - 1
    table = []
    for mask in range(1 << n):
        closed = full
        for row in rows:
            if row & mask == mask:
                closed &= row
        table.append(closed)

    position = {f: i for i, f in enumerate(formulas)}
    falsum_label = labels[position[universe.falsum]]
    negation = {}
    fallbacks = []
    for f, label in zip(formulas, labels):
        negated = Not(f)
        if negated in position:
            negation[label] = labels[position[negated]]
        else:
            negation[label] = falsum_label
            fallbacks.append(label)
    note = ""
    if fallbacks:
        note = "negation falls back to the falsum member for: " + ", ".join(fallbacks)
    return FiniteConsequenceStructure(labels, table, negation, note=note)


# ---------------------------------------------------------------------------
# File format: canonical JSON, one table entry per line, bit-exact round-trip.


def dumps(structure: FiniteConsequenceStructure) -> str:
    S = structure
    lines = ["{", f'  "domain": {json.dumps(list(S.domain))},', '  "cn": [']
    entries = []
    for mask in range(1 << S.n_atoms):
        subset = json.dumps(sorted(S.labels_of(mask)))
        value = json.dumps(sorted(S.labels_of(S.table[mask])))
        entries.append(f"    [{subset}, {value}]")
    lines.append(",\n".join(entries))
    if S.negation is not None:
        lines.append("  ],")
        lines.append('  "negation": [')
        pairs = [
            f"    [{json.dumps(a)}, {json.dumps(S.negation[a])}]"
            for a in sorted(S.domain)
        ]
        lines.append(",\n".join(pairs))
        lines.append("  ]")
    else:
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> FiniteConsequenceStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFormatError(f"invalid structure file: {exc}") from None
    if not isinstance(data, dict):
        raise StructureFormatError("structure file must be a JSON object")
    unknown = set(data) - {"domain", "cn", "negation"}
    if unknown:
        raise StructureFormatError(f"unknown fields: {sorted(unknown)}")
    domain = data.get("domain")
    if not isinstance(domain, list) or not all(isinstance(a, str) for a in domain):
        raise StructureFormatError("'domain' must be a list of labels")
    if len(set(domain)) != len(domain):
        raise StructureFormatError("domain labels must be distinct")
    entries = data.get("cn")
    if not isinstance(entries, list):
        raise StructureFormatError("'cn' must be a list of [subset, value] pairs")

    index = {a: i for i, a in enumerate(domain)}

    def mask_of(labels: object, what: str) -> int:
        if not isinstance(labels, list) or not all(isinstance(a, str) for a in labels):
            raise StructureFormatError(f"{what} must be a list of labels")
        mask = 0
        for a in labels:
            if a not in index:
                raise StructureFormatError(f"{what} mentions unknown atom {a!r}")
            mask |= 1 << index[a]
        return mask

    size = 1 << len(domain)
    table: list[Optional[int]] = [None] * size
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise StructureFormatError("each 'cn' entry must be a [subset, value] pair")
        mask = mask_of(entry[0], "a 'cn' subset")
        if table[mask] is not None:
            raise StructureFormatError(
                f"duplicate 'cn' entry for subset {sorted(entry[0])}"
            )
        table[mask] = mask_of(entry[1], "a 'cn' value")
    missing = [m for m, v in enumerate(table) if v is None]
    if missing:
        raise StructureFormatError(
            f"'cn' is missing {len(missing)} subset entries (first missing bitmask: {missing[0]})"
        )

    negation = None
    if "negation" in data:
        pairs = data["negation"]
        if not isinstance(pairs, list):
            raise StructureFormatError("'negation' must be a list of [atom, image] pairs")
        negation = {}
        for pair in pairs:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, str) for x in pair)
            ):
                raise StructureFormatError(
                    "each 'negation' entry must be an [atom, image] pair"
                )
            atom, image = pair
            if atom in negation:
                raise StructureFormatError(f"duplicate negation entry for {atom!r}")
            negation[atom] = image
    try:
        return FiniteConsequenceStructure(domain, table, negation)
    except (ValueError, CapExceededError) as exc:
        raise StructureFormatError(str(exc)) from None


def save(structure: FiniteConsequenceStructure, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(structure))


def load(path) -> FiniteConsequenceStructure:
    with open(path, encoding="utf-8") as handle:
        return loads(handle.read())
