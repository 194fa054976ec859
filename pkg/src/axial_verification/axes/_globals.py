import enum


class AnyType(enum.Enum):
    """The type of an axis side whose nontrivial eigenspace is empty, so every type fits."""

    ANY = "ANY"

    def __str__(self) -> str:
        return self.value


ANY = AnyType.ANY

# Stands in for an ANY type when a concrete value must be passed on; it is never 0 or 1 when char != 2.
ANY_PLACEHOLDER = -1
