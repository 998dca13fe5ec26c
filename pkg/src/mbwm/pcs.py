"""Pairwise comparison system: the input data structure of the method.

A PCS holds the two elicited preference vectors of a best-worst comparison:
``best_to_other[i]`` is how strongly the best criterion is preferred over
criterion ``i``, and ``other_to_worst[i]`` is how strongly criterion ``i``
is preferred over the worst one.  Both vectors cover all ``n`` criteria, so
``best_to_other[best] == other_to_worst[worst] == 1`` and the shared
cross value ``best_to_other[worst] == other_to_worst[best]`` is the
best-over-worst preference ``a_bw``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    BAD_LENGTH,
    BEST_EQUALS_WORST,
    CROSS_MISMATCH,
    DIAGONAL_NOT_ONE,
    NONPOSITIVE_ENTRY,
    ValidationError,
)

# Conventional elicitation scale; values outside it are legal but suspicious.
SCALE_MIN = 1.0 / 9.0
SCALE_MAX = 9.0

# Two values of a multiplicative triple a_bi * a_iw = a_bw are treated as
# equal when their ratio deviates from 1 by less than this.
CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class PairwiseComparisonSystem:
    """Validated best-worst comparison data for ``n`` criteria."""

    labels: tuple[str, ...]
    best: int
    worst: int
    best_to_other: tuple[float, ...]
    other_to_worst: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def a_bw(self) -> float:
        """Preference of the best criterion over the worst one."""
        return self.best_to_other[self.worst]

    @property
    def middle(self) -> tuple[int, ...]:
        """Indices of the non-reference criteria (the set D)."""
        return tuple(i for i in range(self.n) if i != self.best and i != self.worst)

    def product(self, i: int) -> float:
        """a_bi * a_iw, the chained preference through criterion ``i``."""
        return self.best_to_other[i] * self.other_to_worst[i]

    def triples(self) -> Iterator[tuple[int, float, float]]:
        """(i, a_bi, a_iw) for every non-reference criterion i."""
        for i in self.middle:
            yield i, self.best_to_other[i], self.other_to_worst[i]


def _check_positive_finite(name: str, values: Sequence[float]) -> None:
    for k, v in enumerate(values):
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ValidationError(
                f"{name}[{k}] is not a number: {v!r}", NONPOSITIVE_ENTRY
            )
        if not math.isfinite(v) or v <= 0:
            raise ValidationError(
                f"{name}[{k}] must be a positive finite number, got {v!r}",
                NONPOSITIVE_ENTRY,
            )


def validate_pcs(
    labels: Sequence[str],
    best: int,
    worst: int,
    best_to_other: Sequence[float],
    other_to_worst: Sequence[float],
) -> PairwiseComparisonSystem:
    """Validate raw comparison data and freeze it into a PCS.

    Raises :class:`ValidationError` with one of the codes BAD_LENGTH,
    BEST_EQUALS_WORST, NONPOSITIVE_ENTRY, DIAGONAL_NOT_ONE or
    CROSS_MISMATCH.  Scale violations are not errors; use
    :func:`scale_warnings` to surface them.
    """
    n = len(labels)
    if n < 2:
        raise ValidationError(f"need at least 2 criteria, got {n}", BAD_LENGTH)
    if len(best_to_other) != n or len(other_to_worst) != n:
        raise ValidationError(
            f"expected {n} entries per vector, got {len(best_to_other)} "
            f"best-to-other and {len(other_to_worst)} other-to-worst",
            BAD_LENGTH,
        )
    if len(set(labels)) != n:
        raise ValidationError("criterion labels must be unique", BAD_LENGTH)
    if not (0 <= best < n) or not (0 <= worst < n):
        raise ValidationError(
            f"best={best} and worst={worst} must be indices in [0, {n})", BAD_LENGTH
        )
    if best == worst:
        raise ValidationError(
            f"best and worst must differ, both are {labels[best]!r}",
            BEST_EQUALS_WORST,
        )
    _check_positive_finite("best_to_other", best_to_other)
    _check_positive_finite("other_to_worst", other_to_worst)
    if best_to_other[best] != 1:
        raise ValidationError(
            f"best-over-itself value must be 1, got {best_to_other[best]}",
            DIAGONAL_NOT_ONE,
        )
    if other_to_worst[worst] != 1:
        raise ValidationError(
            f"worst-over-itself value must be 1, got {other_to_worst[worst]}",
            DIAGONAL_NOT_ONE,
        )
    if best_to_other[worst] != other_to_worst[best]:
        raise ValidationError(
            f"best-over-worst mismatch: best_to_other[{labels[worst]!r}]="
            f"{best_to_other[worst]} but other_to_worst[{labels[best]!r}]="
            f"{other_to_worst[best]}",
            CROSS_MISMATCH,
        )
    return PairwiseComparisonSystem(
        labels=tuple(str(s) for s in labels),
        best=int(best),
        worst=int(worst),
        best_to_other=tuple(float(v) for v in best_to_other),
        other_to_worst=tuple(float(v) for v in other_to_worst),
    )


def scale_warnings(pcs: PairwiseComparisonSystem) -> tuple[str, ...]:
    """Non-fatal warnings for entries outside the conventional 1/9..9 scale."""
    out: list[str] = []
    for name, vec in (
        ("best_to_other", pcs.best_to_other),
        ("other_to_worst", pcs.other_to_worst),
    ):
        for i, v in enumerate(vec):
            if v < SCALE_MIN or v > SCALE_MAX:
                out.append(
                    f"{name}[{pcs.labels[i]}]={v:g} is outside the 1/9..9 scale"
                )
    return tuple(out)


def is_consistent(
    pcs: PairwiseComparisonSystem, rtol: float = CONSISTENCY_RTOL
) -> bool:
    """True when a_bi * a_iw = a_bw for every non-reference criterion."""
    a_bw = pcs.a_bw
    return all(abs(pcs.product(i) / a_bw - 1.0) <= rtol for i in pcs.middle)
