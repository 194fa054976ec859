import dataclasses
import enum
import typing

from ..algebra import Element
from ..scalars import Scalar

# Display names of the case parameters, in the order they are printed.
_PARAMETER_SYMBOLS = {"lambda": "λ", "delta": "δ", "lambda_prime": "λ′", "gamma": "γ"}


class Case(enum.Enum):
    TWO_B = "TWO_B"
    HSS_DIM2 = "HSS_DIM2"
    FLEX1 = "FLEX1"
    FLEX2 = "FLEX2"
    B_FAMILY = "B_FAMILY"
    NOT_CLASSIFIABLE = "NOT_CLASSIFIABLE"


@dataclasses.dataclass(frozen=True, eq=False)
class ClassificationResult:
    """
    The case an algebra generated by two axes falls into.

    Attributes
    ----------
    case : Case
        The case label.
    dim : int
        The dimension of the algebra.
    commutative : bool
        Whether the algebra is commutative.
    params : dict of str to Scalar
        The case parameters: 'lambda' for HSS_DIM2; 'lambda' and 'delta' for FLEX1 and FLEX2;
        'lambda', 'lambda_prime' and 'gamma' for B_FAMILY.
    witnesses : dict of str to bool
        Every identity checked on the way to the verdict.
    details : dict of str to Scalar
        Derived quantities that are not case parameters, such as 'alpha_a', 'alpha_b' and 'phi'.
    diagnostic : str, optional
        For NOT_CLASSIFIABLE, the first identity that failed.
    """

    case: Case
    dim: int
    commutative: bool
    params: dict[str, Scalar] = dataclasses.field(default_factory=dict)
    witnesses: dict[str, bool] = dataclasses.field(default_factory=dict)
    details: dict[str, Scalar] = dataclasses.field(default_factory=dict)
    diagnostic: str | None = None

    @property
    def label(self) -> str:
        if self.case is Case.NOT_CLASSIFIABLE:
            return f"NOT_CLASSIFIABLE({self.diagnostic})"
        if not self.params:
            return self.case.value

        rendered = ", ".join(f"{_PARAMETER_SYMBOLS.get(name, name)}={value}" for name, value in self.params.items())
        return f"{self.case.value}({rendered})"

    def matches(self, other: "ClassificationResult") -> bool:
        """Same case with the same parameters."""
        if self.case is not other.case or set(self.params) != set(other.params):
            return False
        return all(self.params[name] == other.params[name] for name in self.params)

    def to_dict(self) -> dict[str, typing.Any]:
        return {
            "case": self.case.value,
            "label": self.label,
            "dim": self.dim,
            "commutative": self.commutative,
            "params": {name: str(value) for name, value in self.params.items()},
            "details": {name: str(value) for name, value in self.details.items()},
            "witnesses": dict(self.witnesses),
            "diagnostic": self.diagnostic,
        }


def first_failure(witnesses: dict[str, bool]) -> str | None:
    return next((name for name, holds in witnesses.items() if not holds), None)


def verdict(
    case: Case,
    dim: int,
    commutative: bool,
    params: dict[str, Scalar],
    witnesses: dict[str, bool],
    details: dict[str, Scalar] | None = None,
) -> ClassificationResult:
    """`case` when every witness holds, otherwise NOT_CLASSIFIABLE naming the first failed witness."""
    failed = first_failure(witnesses=witnesses)
    if failed is not None:
        return ClassificationResult(
            case=Case.NOT_CLASSIFIABLE,
            dim=dim,
            commutative=commutative,
            witnesses=witnesses,
            details=details or {},
            diagnostic=failed,
        )
    return ClassificationResult(
        case=case, dim=dim, commutative=commutative, params=params, witnesses=witnesses, details=details or {}
    )


@dataclasses.dataclass(frozen=True, eq=False)
class SigmaData:
    """
    σ = ab - λ′a - λb for a pair of axes, with γ = α_b(1 - λ) - λ′ the scalar of a·σ = γa.

    `sigma_right` is ab - δ′a - λb, formed with the right type δ′ of b when it is known.
    `gamma` is None when b has no component split with respect to a.
    """

    sigma: Element
    gamma: Scalar | None
    alpha_a: Scalar | None
    alpha_b: Scalar | None
    sigma_right: Element | None = None
    witnesses: dict[str, bool] = dataclasses.field(default_factory=dict)


class StatementResult(typing.TypedDict):
    """
    One replayed statement in a verification report.

    Attributes
    ----------
    statement : str
        A descriptive name of the checked statement.
    subject : str
        The catalog entry or search the statement was checked on.
    passed : bool
        Whether the statement held.
    detail : str
        Extra context, such as the failed check or the computed values.
    """

    statement: str
    subject: str
    passed: bool
    detail: str


class SurvivorRecord(typing.TypedDict):
    """A multiplication table from the dimension-2 search on which both generators are axes."""

    table: tuple[int, int, int, int]
    label: str
    flexible: bool


class Dim2SearchReport(typing.TypedDict):
    """
    Outcome of the exhaustive dimension-2 search over GF(p).

    Attributes
    ----------
    p : int
        The characteristic.
    table_count : int
        The number of enumerated tables, p^4.
    survivors : list of SurvivorRecord
        Tables ab = p1·a + q1·b, ba = p2·a + q2·b on which a and b are both axes, sorted by (p1, q1, p2, q2).
    predicted : list of tuple
        The tables predicted by the classification.
    matches_prediction : bool
        Whether the survivors are exactly the predicted tables, each with the predicted label.
    all_flexible : bool
        Whether every survivor is flexible.
    """

    p: int
    table_count: int
    survivors: list[SurvivorRecord]
    predicted: list[tuple[int, int, int, int]]
    matches_prediction: bool
    all_flexible: bool
