import ast
import re
from fractions import Fraction
from typing import NoReturn

from config import polynomial_degree_guard, polynomial_term_guard
from core.errors import GuardExceededError, InputDataError
from core.monomials import Monomial
from core.polynomial import Polynomial
from core.point_set import PointSet
from shattering.set_system import SetSystem


def _content_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped


def _integers(line: str, number: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise InputDataError(f"expected integers, got '{line}'", line_number=number)


def parse_pointset(text: str) -> PointSet:
    """Header "n k", then one point per line; blank and '#' lines are ignored."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise InputDataError("missing header line 'n k'")
    number, line = header
    values = _integers(line, number)
    if len(values) != 2 or values[0] < 1 or values[1] < 1:
        raise InputDataError(f"header must be two positive integers 'n k', got '{line}'", line_number=number)
    n, k = values

    points = []
    for number, line in lines:
        point = _integers(line, number)
        if len(point) != n:
            raise InputDataError(f"point has {len(point)} coordinates, expected {n}", line_number=number)
        if any(not 0 <= c < k for c in point):
            raise InputDataError(f"coordinate outside 0..{k - 1} in '{line}'", line_number=number)
        points.append(tuple(point))
    return PointSet(n, k, tuple(points))


def parse_sets(text: str) -> SetSystem:
    """Header "n", then one set per line as 1-based elements; '-' is the empty set."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise InputDataError("missing header line 'n'")
    number, line = header
    values = _integers(line, number)
    if not values or len(values) > 2 or values[0] < 1 or (len(values) == 2 and values[1] != 2):
        raise InputDataError(f"set system header must be 'n' or 'n 2', got '{line}'", line_number=number)
    n = values[0]

    sets = []
    for number, line in lines:
        if line == "-":
            sets.append(frozenset())
            continue
        elements = _integers(line, number)
        if any(not 1 <= i <= n for i in elements):
            raise InputDataError(f"element outside 1..{n} in '{line}'", line_number=number)
        sets.append(frozenset(i - 1 for i in elements))
    return SetSystem(n, frozenset(sets))


_VARIABLE = re.compile(r"x([1-9][0-9]*)")

_BINARY_OPERATORS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


class _PolynomialReader:
    """Walks a Python expression tree admitting only the polynomial rendering grammar.

    Nothing is evaluated. Intermediate results are checked against the degree
    and term guards.
    """

    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.max_degree = polynomial_degree_guard()
        self.max_terms = polynomial_term_guard()

    def read(self) -> Polynomial:
        try:
            tree = ast.parse(self.text.replace("^", "**"), mode="eval")
        except (SyntaxError, ValueError, RecursionError, MemoryError) as e:
            raise InputDataError(f"cannot parse polynomial '{self.text}': {e}")
        try:
            return self._visit(tree.body)
        except RecursionError:
            raise InputDataError(f"polynomial '{self.text}' is nested too deeply")

    def _reject(self, node: ast.AST, what: str) -> NoReturn:
        raise InputDataError(f"cannot parse polynomial '{self.text}': {what} at column {getattr(node, 'col_offset', 0) + 1}")

    def _visit(self, node: ast.AST) -> Polynomial:
        if isinstance(node, ast.Constant):
            if type(node.value) is not int:
                self._reject(node, f"unsupported literal {node.value!r}")
            return Polynomial.constant(self.n, node.value)
        if isinstance(node, ast.Name):
            match = _VARIABLE.fullmatch(node.id)
            if match is None or int(match.group(1)) > self.n:
                self._reject(node, f"unknown variable '{node.id}', expected x1..x{self.n}")
            return Polynomial.variable(int(match.group(1)) - 1, self.n)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
            operand = self._visit(node.operand)
            return -operand if isinstance(node.op, ast.USub) else operand
        if isinstance(node, ast.BinOp) and isinstance(node.op, _BINARY_OPERATORS):
            return self._binary(node)
        self._reject(node, f"unsupported syntax {type(node).__name__}")

    def _binary(self, node: ast.BinOp) -> Polynomial:
        left = self._visit(node.left)
        if isinstance(node.op, ast.Pow):
            return self._power(node, left, self._constant(node.right, "exponent"))
        right = self._visit(node.right)
        if isinstance(node.op, ast.Add):
            return self._bounded(left + right)
        if isinstance(node.op, ast.Sub):
            return self._bounded(left - right)
        if isinstance(node.op, ast.Mult):
            return self._product(left, right)
        divisor = self._as_constant(node.right, right, "divisor")
        if divisor == 0:
            self._reject(node.right, "division by zero")
        return left.scale(1 / divisor)

    def _constant(self, node: ast.AST, role: str) -> Fraction:
        return self._as_constant(node, self._visit(node), role)

    def _as_constant(self, node: ast.AST, p: Polynomial, role: str) -> Fraction:
        if p.degree() > 0:
            self._reject(node, f"{role} must be a constant")
        return p.coefficient(Monomial.one(self.n))

    def _power(self, node: ast.BinOp, base: Polynomial, exponent: Fraction) -> Polynomial:
        if exponent.denominator != 1 or exponent < 0:
            self._reject(node.right, f"exponent must be a non-negative integer, got {exponent}")
        if exponent > self.max_degree:
            raise GuardExceededError("polynomial_degree", self.max_degree, int(exponent))
        result = Polynomial.constant(self.n, 1)
        for _ in range(int(exponent)):
            result = self._product(result, base)
        return result

    def _product(self, left: Polynomial, right: Polynomial) -> Polynomial:
        if left.degree() + right.degree() > self.max_degree:
            raise GuardExceededError("polynomial_degree", self.max_degree, left.degree() + right.degree())
        if len(left.terms) * len(right.terms) > self.max_terms:
            raise GuardExceededError("polynomial_terms", self.max_terms, len(left.terms) * len(right.terms))
        return self._bounded(left * right)

    def _bounded(self, p: Polynomial) -> Polynomial:
        if len(p.terms) > self.max_terms:
            raise GuardExceededError("polynomial_terms", self.max_terms, len(p.terms))
        return p


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse the rendering syntax, e.g. "x1^2*x2 - 3/2*x1 + 1", over x1..xn."""
    return _PolynomialReader(text, n).read()
