import dataclasses

from ._globals import AnyType
from ..algebra import Element
from ..scalars import Scalar
from ..spectral import JointDecomposition, Side

AxisType = Scalar | AnyType

_CHECK_NAMES = (
    "is_idempotent",
    "is_abs_left_primitive",
    "cubic_ok",
    "z2_grading_ok",
    "is_abs_right_primitive",
    "right_cubic_ok",
    "right_z2_grading_ok",
    "ops_commute",
    "z2xz2_grading_ok",
    "jordan_type_ok",
)


@dataclasses.dataclass(frozen=True, eq=False)
class AxisReport:
    """
    Axiom-by-axiom verdict on whether an element is an axis.

    Checks that were not run (the right side in `check_left_axis`, or the joint checks when an earlier
    stage already failed) are None. The unprefixed cubic and grading checks refer to the left side.

    Attributes
    ----------
    left_type, right_type : Scalar or ANY or None
        The nontrivial eigenvalue of L_a (resp. R_a); ANY when the corresponding eigenspace is zero.
    decomposition : JointDecomposition or None
        The joint eigenspaces, present once L_a and R_a are known to commute.
    """

    is_idempotent: bool
    is_abs_left_primitive: bool
    cubic_ok: bool
    z2_grading_ok: bool
    left_type: AxisType
    is_abs_right_primitive: bool | None = None
    right_cubic_ok: bool | None = None
    right_z2_grading_ok: bool | None = None
    ops_commute: bool | None = None
    z2xz2_grading_ok: bool | None = None
    jordan_type_ok: bool | None = None
    right_type: AxisType | None = None
    decomposition: JointDecomposition | None = None

    def checks(self) -> dict[str, bool]:
        """Every check that was run, by name."""
        return {name: getattr(self, name) for name in _CHECK_NAMES if getattr(self, name) is not None}

    @property
    def failures(self) -> list[str]:
        return [name for name, value in self.checks().items() if not value]

    @property
    def is_left_axis(self) -> bool:
        return self.is_idempotent and self.is_abs_left_primitive and self.cubic_ok and self.z2_grading_ok

    @property
    def is_axis(self) -> bool:
        """Both sides pass, the operators commute and the joint grading holds (Jordan type not required)."""
        return self.is_left_axis and bool(self.z2xz2_grading_ok)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclasses.dataclass(frozen=True, eq=False)
class ComponentSplit:
    """
    The decomposition y = alpha·a + y0 + ylambda along the eigenspaces of one multiplication operator.

    For `side` RIGHT, `y0` and `ylambda` lie in the 0- and δ-eigenspaces of R_a. When L_a and R_a commute,
    the refinement gives the components of y - alpha·a in the joint eigenspaces A_{0,0}, A_{0,δ}, A_{λ,0} and
    A_{λ,δ}, the first index always from L_a; otherwise the refinement fields are None.
    """

    alpha: Scalar
    y0: Element
    ylambda: Element
    side: Side = Side.LEFT
    y00: Element | None = None
    y0delta: Element | None = None
    ylambda0: Element | None = None
    ylambdadelta: Element | None = None

    @property
    def has_refinement(self) -> bool:
        return self.y00 is not None
