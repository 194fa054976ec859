import re

import sympy

PARAMETER_SYMBOL = sympy.Symbol("t")

_INTEGER_FRACTION_PATTERN = re.compile(pattern=r"^([+-]?\d+)(?:/([+-]?\d+))?$")
_INTEGER_FRACTION_CHARACTERS = frozenset("0123456789+-/")
_RATIONAL_FUNCTION_CHARACTERS = frozenset("0123456789+-*/^()t")
