"""Text rendering of rationals and polynomials in the CLI expression grammar."""
from fractions import Fraction


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


def _coeff_text(c) -> str:
    if _is_rational(c):
        return format_rational(c)
    return str(c)


def _is_compound(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return any(ch in body for ch in "+-") or " " in body


def format_poly(coeffs, compact: bool = False, var: str = "X") -> str:
    """Render ascending coefficients ``coeffs`` highest degree first.

    ``compact`` drops the spaces around binary ``+``/``-`` (used for labels).
    """
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    terms = [(k, c) for k, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    out = []
    for k, c in reversed(terms):
        negative = _is_rational(c) and c < 0
        mag = -c if negative else c
        text = _coeff_text(mag)
        if k == 0:
            body = text
            if out and _is_compound(text):
                body = f"({text})"
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = mono
            else:
                if _is_compound(text):
                    text = f"({text})"
                body = f"{text}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append((minus if negative else plus) + body)
    return "".join(out)
