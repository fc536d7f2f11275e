#!/usr/bin/env python3
"""
Reader for the model-description language.

One statement per line, ``#`` starts a comment::

    format 1
    field F 3
    flavor adams-hilton
    gen a 1
    gen a' 2
    d a' = -3*a

Every failure is reported as a ModelParseError carrying line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..algebra import DgaPresentation, Flavor, build_presentation
from ..errors import ModelParseError, PresentationError
from ..linalg import FieldSpec
from ..utils.logging_config import get_logger

logger = get_logger("gorext.modelparse.parser")

FORMAT_VERSION = 1

# Largest exponent accepted in an expression; x^k expands to k letters.
MAX_EXPONENT = 256

NAME_PATTERN = r"[A-Za-zͰ-Ͽ][A-Za-z0-9_'′₀-₉Ͱ-Ͽ]*"
_TOKEN = re.compile(
    rf"\s*(?:(?P<number>\d+)|(?P<name>{NAME_PATTERN})|(?P<op>[-+*/^=]))"
)
_NAME = re.compile(rf"^{NAME_PATTERN}$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass
class ParsedTerm:
    coefficient: Fraction
    factors: List[Tuple[str, int]]
    column: int


@dataclass
class ModelDocument:
    """Statements of a model file before they are turned into a presentation."""

    field_spec: FieldSpec = field(default_factory=FieldSpec.rationals)
    flavor: Flavor = Flavor.SULLIVAN
    generators: List[Tuple[str, int]] = field(default_factory=list)
    differential: Dict[str, List[Tuple[Fraction, List[str]]]] = field(default_factory=dict)
    assume_char_range: bool = False
    format_version: int = FORMAT_VERSION
    gen_lines: Dict[str, int] = field(default_factory=dict)
    d_lines: Dict[str, int] = field(default_factory=dict)


def tokenize(text: str, line: int, offset: int) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            column = offset + pos + (len(text[pos:]) - len(text[pos:].lstrip())) + 1
            raise ModelParseError(line, column, f"unexpected character {text[pos:].lstrip()[0]!r}")
        kind = match.lastgroup or "op"
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), offset + start + 1))
        pos = match.end()
    return tokens


class _ExpressionParser:
    """Recursive descent over ``[sign] term (sign term)*``."""

    def __init__(self, tokens: List[Token], line: int, end_column: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.end_column = end_column

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> Token:
        token = self._peek()
        if token is None:
            raise ModelParseError(self.line, self.end_column, "unexpected end of expression")
        self.pos += 1
        return token

    def _error(self, token: Optional[Token], reason: str) -> ModelParseError:
        column = token.column if token is not None else self.end_column
        return ModelParseError(self.line, column, reason)

    def parse(self) -> List[ParsedTerm]:
        terms: List[ParsedTerm] = []
        sign = 1
        first = True
        while True:
            token = self._peek()
            if token is not None and token.kind == "op" and token.text in "+-":
                sign = -1 if token.text == "-" else 1
                self.pos += 1
            elif not first:
                if token is None:
                    break
                raise self._error(token, f"expected '+' or '-', found {token.text!r}")
            terms.append(self._term(sign))
            first = False
            sign = 1
            if self._peek() is None:
                break
        return terms

    def _term(self, sign: int) -> ParsedTerm:
        token = self._peek()
        if token is None:
            raise self._error(None, "expected a term")
        column = token.column
        coefficient = Fraction(sign)
        if token.kind == "number":
            self.pos += 1
            numerator = int(token.text)
            denominator = 1
            nxt = self._peek()
            if nxt is not None and nxt.text == "/":
                self.pos += 1
                den_token = self._take()
                if den_token.kind != "number":
                    raise self._error(den_token, "expected a denominator")
                denominator = int(den_token.text)
                if denominator == 0:
                    raise self._error(den_token, "zero denominator")
            coefficient *= Fraction(numerator, denominator)
            nxt = self._peek()
            if nxt is None or nxt.text in "+-":
                return ParsedTerm(coefficient, [], column)
            if nxt.text == "*":
                self.pos += 1
        factors: List[Tuple[str, int]] = []
        factors.extend(self._factor())
        while True:
            nxt = self._peek()
            if nxt is None or nxt.text in "+-":
                break
            if nxt.text == "*":
                self.pos += 1
                factors.extend(self._factor())
                continue
            raise self._error(nxt, f"unexpected {nxt.text!r}")
        return ParsedTerm(coefficient, factors, column)

    def _factor(self) -> List[Tuple[str, int]]:
        token = self._take()
        if token.kind != "name":
            raise self._error(token, f"expected a generator name, found {token.text!r}")
        exponent = 1
        nxt = self._peek()
        if nxt is not None and nxt.text == "^":
            self.pos += 1
            exp_token = self._take()
            if exp_token.kind != "number":
                raise self._error(exp_token, "exponent must be a non-negative integer")
            exponent = int(exp_token.text)
            if exponent > MAX_EXPONENT:
                raise self._error(
                    exp_token, f"exponent {exponent} exceeds the limit {MAX_EXPONENT}"
                )
        return [(token.text, token.column)] * exponent


def _parse_field(args: List[str], line: int, column: int) -> FieldSpec:
    text = "".join(args)
    if text in ("Q", "QQ"):
        return FieldSpec.rationals()
    match = re.fullmatch(r"F(\d+)", text)
    if not match:
        raise ModelParseError(line, column, f"unknown field {' '.join(args)!r}")
    modulus = int(match.group(1))
    if modulus % 2 == 0:
        raise ModelParseError(line, column, f"even characteristic {modulus} is not supported")
    try:
        return FieldSpec.prime(modulus)
    except PresentationError as exc:
        raise ModelParseError(line, column, str(exc)) from None


def parse_document(text: str) -> ModelDocument:
    """Statement-level parse; expressions are checked against the declared generators."""
    doc = ModelDocument()
    d_statements: List[Tuple[int, int, str, int, str]] = []
    seen_field = seen_flavor = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        column = indent + 1
        keyword, _, rest = stripped.partition(" ")
        args = rest.split()

        if keyword == "format":
            if args != [str(FORMAT_VERSION)]:
                raise ModelParseError(line_no, column, f"unsupported format {rest.strip()!r}")
        elif keyword == "field":
            if seen_field:
                raise ModelParseError(line_no, column, "duplicate field statement")
            doc.field_spec = _parse_field(args, line_no, column + len(keyword) + 1)
            seen_field = True
        elif keyword == "flavor":
            if seen_flavor:
                raise ModelParseError(line_no, column, "duplicate flavor statement")
            if len(args) != 1 or args[0] not in ("sullivan", "adams-hilton"):
                raise ModelParseError(
                    line_no, column + len(keyword) + 1, f"unknown flavor {rest.strip()!r}"
                )
            doc.flavor = Flavor(args[0])
            seen_flavor = True
        elif keyword == "assume":
            if args != ["char-range"]:
                raise ModelParseError(line_no, column, f"unknown assumption {rest.strip()!r}")
            doc.assume_char_range = True
        elif keyword == "gen":
            if len(args) != 2:
                raise ModelParseError(line_no, column, "expected 'gen <name> <degree>'")
            name, degree_text = args
            name_column = body.index(name, indent + len(keyword)) + 1
            if not _NAME.match(name):
                raise ModelParseError(line_no, name_column, f"invalid generator name {name!r}")
            if name in doc.gen_lines:
                raise ModelParseError(
                    line_no, name_column,
                    f"duplicate generator '{name}' (first declared on line {doc.gen_lines[name]})",
                )
            if not re.fullmatch(r"-?\d+", degree_text):
                raise ModelParseError(
                    line_no, body.rindex(degree_text) + 1, f"invalid degree {degree_text!r}"
                )
            doc.generators.append((name, int(degree_text)))
            doc.gen_lines[name] = line_no
        elif keyword == "d":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise ModelParseError(line_no, column, "expected 'd <name> = <expression>'")
            name = lhs.strip()
            name_column = body.index(name, indent + 1) + 1 if name else column
            if name in doc.d_lines:
                raise ModelParseError(
                    line_no, name_column,
                    f"duplicate differential for '{name}' (first given on line {doc.d_lines[name]})",
                )
            doc.d_lines[name] = line_no
            rhs_offset = body.index("=", indent) + 1
            d_statements.append((line_no, name_column, name, rhs_offset, body[rhs_offset:]))
        else:
            raise ModelParseError(line_no, column, f"unknown statement {keyword!r}")

    degrees = dict(doc.generators)
    for name, degree in doc.generators:
        if degree < doc.flavor.min_degree:
            raise ModelParseError(
                doc.gen_lines[name], 1,
                f"generator '{name}' has degree {degree}; {doc.flavor.value} "
                f"generators need degree >= {doc.flavor.min_degree}",
            )

    for line_no, name_column, name, rhs_offset, rhs in d_statements:
        if name not in degrees:
            raise ModelParseError(line_no, name_column, f"unknown generator '{name}'")
        tokens = tokenize(rhs, line_no, rhs_offset)
        end_column = rhs_offset + len(rhs) + 1
        if not tokens:
            raise ModelParseError(line_no, end_column, "missing expression")
        if len(tokens) == 1 and tokens[0].text == "0":
            doc.differential[name] = []
            continue
        terms = _ExpressionParser(tokens, line_no, end_column).parse()
        required = degrees[name] + doc.flavor.differential_degree
        checked: List[Tuple[Fraction, List[str]]] = []
        for term in terms:
            names: List[str] = []
            term_degree = 0
            for factor, factor_column in term.factors:
                if factor not in degrees:
                    raise ModelParseError(line_no, factor_column, f"unknown generator '{factor}'")
                if doc.flavor.commutative and degrees[factor] % 2 == 1 and factor in names:
                    raise ModelParseError(
                        line_no, factor_column, f"odd generator '{factor}' squared"
                    )
                names.append(factor)
                term_degree += degrees[factor]
            if term.coefficient == 0:
                continue
            if doc.field_spec.characteristic and term.coefficient.denominator % doc.field_spec.characteristic == 0:
                raise ModelParseError(
                    line_no, term.column,
                    f"denominator {term.coefficient.denominator} is not invertible in "
                    f"{doc.field_spec.label}",
                )
            if term_degree != required:
                raise ModelParseError(
                    line_no, term.column,
                    f"inhomogeneous differential: term of degree {term_degree}, required {required}",
                )
            if not names:
                raise ModelParseError(line_no, term.column, f"d {name} has a constant term")
            checked.append((term.coefficient, names))
        doc.differential[name] = checked
    return doc


def presentation_from_document(doc: ModelDocument, name: Optional[str] = None) -> DgaPresentation:
    differential = {
        gen: [(coefficient, factors) for coefficient, factors in terms]
        for gen, terms in doc.differential.items()
    }
    try:
        return build_presentation(
            doc.field_spec,
            doc.flavor,
            doc.generators,
            differential,
            doc.assume_char_range,
            name,
        )
    except PresentationError as exc:
        message = str(exc)
        line = 1
        match = re.search(r"generator '([^']+)'", message)
        if match:
            gen = match.group(1)
            line = doc.d_lines.get(gen, doc.gen_lines.get(gen, 1))
        raise ModelParseError(line, 1, message) from None


def parse_model(text: str, name: Optional[str] = None) -> DgaPresentation:
    """Parse model text into a validated presentation."""
    doc = parse_document(text)
    pres = presentation_from_document(doc, name)
    logger.debug(
        "Parsed model",
        flavor=pres.flavor.value,
        field=pres.field_spec.label,
        generators=len(pres.generators),
    )
    return pres


def parse_model_file(path: Union[str, Path]) -> DgaPresentation:
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ModelParseError(1, 1, f"model file is not UTF-8: {exc.reason}") from None
    return parse_model(text, name=source.stem)
