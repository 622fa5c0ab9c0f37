"""Evaluation of small arithmetic expressions over exact values.

Used for matrix entries (``-1/2*sqrt2``, ``xi^3``) and polynomial checks
(``t^2 - sqrt2*t + 1``).  Only + - * / and integer powers are allowed.
"""

import ast
from fractions import Fraction

from .errors import ParseError

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
}


def _div(a, b):
    if isinstance(b, (int, Fraction)):
        if b == 0:
            raise ParseError("division by zero in expression")
        if isinstance(a, (int, Fraction)):
            return Fraction(a) / b
        return a * (Fraction(1) / b)
    if hasattr(b, "inverse"):
        return a * b.inverse()
    raise ParseError("can only divide by constants")


def evaluate(text, names):
    """Evaluate ``text`` with the given name bindings; ``^`` means power."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = ev(node.right)
                if not isinstance(exp, int):
                    raise ParseError(f"non-integer exponent in {text!r}")
                base = ev(node.left)
                if isinstance(base, int) and exp < 0:
                    return Fraction(base) ** exp
                return base ** exp
            if isinstance(node.op, ast.Div):
                return _div(ev(node.left), ev(node.right))
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(ev(node.left), ev(node.right))
        raise ParseError(f"unsupported syntax in expression {text!r}")

    return ev(tree)
