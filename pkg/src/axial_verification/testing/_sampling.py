import random

from .._exceptions import DomainMismatch
from ..scalars import Scalar, ScalarDomain, ScalarKind


def sample_family_parameters(domain: ScalarDomain, count: int, seed: int = 0) -> list[Scalar]:
    """
    Draw reproducible parameters for the one-parameter families, avoiding 0, 1 and 1/2.

    Parameters
    ----------
    domain : ScalarDomain
        The rationals or a prime field.
    count : int
        How many parameters to draw; repeats are possible.
    seed : int, default: 0
        The seed of the random number generator.
    """
    random_number_generator = random.Random(seed)
    excluded = {domain.zero(), domain.one(), domain.from_fraction(numerator=1, denominator=2)}

    if domain.is_finite:
        candidates = [value for value in domain.elements() if value not in excluded]
        if not candidates:
            message = f"{domain.label} has no admissible family parameters."
            raise ValueError(message)
        return [random_number_generator.choice(candidates) for _ in range(count)]

    if domain.kind is ScalarKind.RATIONAL_FUNCTION:
        message = "Family parameters are sampled from the rationals or a prime field, not from Q(t)."
        raise DomainMismatch(message)

    parameters = []
    while len(parameters) < count:
        value = domain.from_fraction(
            numerator=random_number_generator.randint(-20, 20), denominator=random_number_generator.randint(1, 20)
        )
        if value not in excluded:
            parameters.append(value)
    return parameters
