import itertools

from ._common import require_axis
from ..algebra import Algebra, Element, Subspace, decompose_direct_sum, multiply
from ..axes import check_side, resolve_type
from ..scalars import Scalar
from ..spectral import Side


def _zero_components(algebra: Algebra, a: Element, side: Side, value: Scalar) -> tuple[Subspace, list[Element]]:
    check = check_side(algebra=algebra, a=a, value=value, side=side)
    line = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a])
    parts = [line, check.zero_space, check.value_space]
    components = [decompose_direct_sum(parts=parts, vector=vector)[1] for vector in algebra.basis()]
    return line.sum(check.zero_space), components


def _components_of(algebra: Algebra, basis_components: list[Element], vector: Element) -> Element:
    component = algebra.zero()
    for coordinate, basis_component in zip(vector.coords, basis_components):
        component = component + coordinate * basis_component
    return component


def check_seress(algebra: Algebra, a: Element) -> bool:
    """
    Check both one-sided forms of Seress' identity for the axis `a`.

    Left form: a(xy) = (ax)y + a(x_0 y_0) for every basis vector x and every y in a basis of Fa + A_0(L_a),
    where x_0, y_0 are the A_0(L_a) components. Right form: (yx)a = y(xa) + (₀y ₀x)a for y in a basis of
    Fa + A_0(R_a), with ₀x, ₀y the A_0(R_a) components. Both are exact equalities.

    Raises
    ------
    NotAnAxis
        If `a` is not a two-sided axis.
    """
    left_type, right_type, _ = require_axis(algebra=algebra, element=a, name="a")
    lambda_value = resolve_type(algebra=algebra, value=left_type)
    delta_value = resolve_type(algebra=algebra, value=right_type)

    left_space, left_components = _zero_components(algebra=algebra, a=a, side=Side.LEFT, value=lambda_value)
    for x, y in itertools.product(algebra.basis(), left_space.basis):
        x_0 = _components_of(algebra=algebra, basis_components=left_components, vector=x)
        y_0 = _components_of(algebra=algebra, basis_components=left_components, vector=y)
        lhs = multiply(algebra, a, multiply(algebra, x, y))
        rhs = multiply(algebra, multiply(algebra, a, x), y) + multiply(algebra, a, multiply(algebra, x_0, y_0))
        if lhs != rhs:
            return False

    right_space, right_components = _zero_components(algebra=algebra, a=a, side=Side.RIGHT, value=delta_value)
    for x, y in itertools.product(algebra.basis(), right_space.basis):
        x_0 = _components_of(algebra=algebra, basis_components=right_components, vector=x)
        y_0 = _components_of(algebra=algebra, basis_components=right_components, vector=y)
        lhs = multiply(algebra, multiply(algebra, y, x), a)
        rhs = multiply(algebra, y, multiply(algebra, x, a)) + multiply(algebra, multiply(algebra, y_0, x_0), a)
        if lhs != rhs:
            return False
    return True
